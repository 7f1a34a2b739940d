#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace hermitia {

using rational = boost::multiprecision::cpp_rational;

// Snap a double to a nearby rational (continued fractions, bounded
// denominator).  Returns nullopt if no denominator <= max_den approximates
// x within tol.
std::optional<rational> to_rational(double x, long long max_den = 1 << 24,
                                    double tol = 1e-9);

// Exact phase-1 simplex (Bland's rule) for {x : Ax = b, x >= 0}.
// A is row-major, m rows by n cols.  Returns a feasible point if one exists.
std::optional<std::vector<rational>> lp_feasible_point(
    const std::vector<std::vector<rational>>& A, const std::vector<rational>& b);

}  // namespace hermitia
