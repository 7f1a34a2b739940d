#pragma once

#include <cstdint>
#include <vector>

namespace hermitia {

// Strictly increasing multi-indices over {0,..,n-1}, enumerated in
// lexicographic order.  All form coefficients use this ordering.
class MultiIndexTable {
public:
    MultiIndexTable(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(tuples_.size()); }

    const std::vector<int>& tuple(int r) const { return tuples_[r]; }

    // Rank of a strictly increasing tuple (combinatorial number system).
    int rank(const std::vector<int>& idx) const;

    static std::int64_t binomial(int n, int k);

private:
    int n_;
    int k_;
    std::vector<std::vector<int>> tuples_;
};

// Merge two strictly increasing tuples into one.  Returns the permutation
// sign, or 0 if they share an index.  `out` receives the merged tuple.
int merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& out);

// Sign of the permutation sorting (idx, complement) into (0,..,n-1),
// with `idx` strictly increasing and `comp` its complement.
int complement_sign(const std::vector<int>& idx, int n, std::vector<int>& comp);

}  // namespace hermitia
