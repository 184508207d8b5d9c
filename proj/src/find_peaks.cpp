#include "tscycle/spectral.hpp"

#include <algorithm>

namespace tsc {

std::vector<Peak> find_peaks(const Eigen::VectorXd& v, int npeaks, double threshold,
                             double min_height) {
    const Eigen::Index n = v.size();
    std::vector<Peak> peaks;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
        Peak p;
        p.value = v[i];
        p.index = i;
        Eigen::Index l = i;
        while (l > 0 && v[l - 1] < v[l]) --l;
        Eigen::Index r = i;
        while (r + 1 < n && v[r + 1] < v[r]) ++r;
        p.left = l;
        p.right = r;
        if (p.value < min_height) continue;
        if (p.value - std::max(v[l], v[r]) < threshold) continue;
        peaks.push_back(p);
    }
    if (npeaks > 0 && static_cast<int>(peaks.size()) > npeaks) {
        std::stable_sort(peaks.begin(), peaks.end(),
                         [](const Peak& a, const Peak& b) { return a.value > b.value; });
        peaks.resize(npeaks);
        std::sort(peaks.begin(), peaks.end(),
                  [](const Peak& a, const Peak& b) { return a.index < b.index; });
    }
    return peaks;
}

}  // namespace tsc
