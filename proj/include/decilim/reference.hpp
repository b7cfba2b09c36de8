#ifndef DECILIM_REFERENCE_HPP
#define DECILIM_REFERENCE_HPP

#include <utility>

namespace decilim {
namespace reference {

// Closed forms for f(x,y) = 1 + x + y and f(x) = x^2 - x - 1, used as
// independent oracles by the cross-module tests.

// b(r,s) = sin(pi s) / sin(pi (r+s)); in [0,1] on Delta_1, >= 1 on Delta_2.
double b_of(double r, double s);

// Decimation limit of 1+x+y at an interior simplex point via the two series
// (the symmetric reflection s <= r is applied first). `terms` controls the
// truncation; near the seam b ~ 1 the sum is extended with compensation.
double decimation_limit_1xy(double r, double s, long terms = 100000);

// reported truncation bound for the series at the given point
double decimation_limit_1xy_tail(double r, double s, long terms = 100000);

// tent function of the golden mean: r log(lambda) on [0,1], (2-r) log(lambda)
// on [1,2], -inf outside
double golden_limit(double r);

constexpr double kLogGolden = 0.4812118250596034474977589;

// gradient of the Ronkin function of 1+x+y from the triangle with sides
// (1, e^u, e^v): returns (r, s) = angles / pi
std::pair<double, double> angle_gradient(double u, double v);

// (3 sqrt 3 / 4 pi) L(2, chi_3) by direct truncated character sum
double smyth_constant(long terms = 1000000);

constexpr double kSmyth = 0.3230659472194505;

} // namespace reference
} // namespace decilim

#endif
