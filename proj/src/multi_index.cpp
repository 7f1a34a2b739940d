#include "hermitia/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitia {

MultiIndexTable::MultiIndexTable(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n) return;  // empty table for out-of-range degree
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) {
        tuples_.push_back({});
        return;
    }
    while (true) {
        tuples_.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
}

int MultiIndexTable::rank(const std::vector<int>& idx) const {
    // lexicographic rank via the complement of the combinadic
    int r = 0;
    int prev = -1;
    for (int i = 0; i < k_; ++i) {
        for (int v = prev + 1; v < idx[i]; ++v)
            r += static_cast<int>(binomial(n_ - 1 - v, k_ - 1 - i));
        prev = idx[i];
    }
    return r;
}

std::int64_t MultiIndexTable::binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] hops over the remaining entries of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

int complement_sign(const std::vector<int>& idx, int n, std::vector<int>& comp) {
    comp.clear();
    std::vector<bool> used(n, false);
    for (int v : idx) used[v] = true;
    for (int v = 0; v < n; ++v)
        if (!used[v]) comp.push_back(v);
    // inversions of the concatenation (idx, comp)
    long inv = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j)
            if (idx[i] > comp[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace hermitia
