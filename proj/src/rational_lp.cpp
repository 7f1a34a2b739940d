#include "hermitia/rational_lp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hermitia {

std::optional<rational> to_rational(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued fraction convergents p/q of x
    long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(r);
        if (fl > 9e17 || fl < -9e17) break;
        long long a = static_cast<long long>(fl);
        long long p = a * p0 + p1;
        long long q = a * q0 + q1;
        if (q > max_den) break;
        p1 = p0; q1 = q0; p0 = p; q0 = q;
        double approx = static_cast<double>(p) / static_cast<double>(q);
        if (std::abs(approx - x) <= tol) return rational(p, q);
        double frac = r - fl;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<std::vector<rational>> lp_feasible_point(
    const std::vector<std::vector<rational>>& A, const std::vector<rational>& b) {
    const int m = static_cast<int>(A.size());
    const int n = m > 0 ? static_cast<int>(A[0].size()) : 0;
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("lp_feasible_point: size mismatch");
    if (m == 0) return std::vector<rational>(n, 0);

    // phase-1 tableau: n structural + m artificial columns, rhs last
    const int cols = n + m + 1;
    std::vector<std::vector<rational>> T(m + 1, std::vector<rational>(cols, 0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        rational sign = b[i] < 0 ? rational(-1) : rational(1);
        for (int j = 0; j < n; ++j) T[i][j] = sign * A[i][j];
        T[i][n + i] = 1;
        T[i][cols - 1] = sign * b[i];
        basis[i] = n + i;
    }
    // objective: minimize sum of artificials; zero out basic columns
    for (int i = 0; i < m; ++i) T[m][n + i] = 1;
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < m; ++i) T[m][j] -= T[i][j];

    auto pivot = [&](int pr, int pc) {
        rational pv = T[pr][pc];
        for (int j = 0; j < cols; ++j) T[pr][j] /= pv;
        for (int i = 0; i <= m; ++i) {
            if (i == pr || T[i][pc] == 0) continue;
            rational f = T[i][pc];
            for (int j = 0; j < cols; ++j) T[i][j] -= f * T[pr][j];
        }
        basis[pr] = pc;
    };

    // Bland's rule: smallest-index entering and leaving columns
    while (true) {
        int pc = -1;
        for (int j = 0; j < n + m; ++j)
            if (T[m][j] < 0) { pc = j; break; }
        if (pc < 0) break;
        int pr = -1;
        for (int i = 0; i < m; ++i) {
            if (T[i][pc] <= 0) continue;
            if (pr < 0) { pr = i; continue; }
            rational cur = T[i][cols - 1] / T[i][pc];
            rational best = T[pr][cols - 1] / T[pr][pc];
            if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
        }
        if (pr < 0)
            throw std::runtime_error("phase-1 objective unbounded");
        pivot(pr, pc);
    }

    if (T[m][cols - 1] != 0) return std::nullopt;  // positive optimum

    // drive any zero-level artificials out of the basis
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (T[i][j] != 0) { pc = j; break; }
        if (pc >= 0) pivot(i, pc);
        // a redundant row keeps its artificial at value zero; harmless
    }

    std::vector<rational> x(n, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][cols - 1];
    return x;
}

}  // namespace hermitia
