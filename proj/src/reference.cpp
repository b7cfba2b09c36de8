#include "decilim/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decilim/errors.hpp"

namespace decilim {
namespace reference {

namespace {
constexpr double kPi = 3.14159265358979323846264338;
}

double b_of(double r, double s) {
    if (!(r > 0 && s > 0 && r + s < 1))
        throw DomainError("b(r,s) needs an interior point with r+s < 1");
    return std::sin(kPi * s) / std::sin(kPi * (r + s));
}

double decimation_limit_1xy(double r, double s, long terms) {
    if (s > r) std::swap(r, s);
    if (!(r > 0 && s > 0 && r + s < 1))
        throw DomainError("decimation_limit_1xy needs an interior simplex point");
    double b = b_of(r, s);
    long T = terms;
    // the geometric envelope degrades near the seam b ~ 1; extend with
    // compensated summation there
    if (b > 0.999 && b < 1.001) T = std::max<long>(T, 10000000);

    const double arg = kPi * (1 - r);
    double sum = 0, comp = 0;
    if (b <= 1) {
        double bp = 1;
        for (long n = 1; n <= T; ++n) {
            bp *= b;
            if (bp == 0) break;
            double term = ((n & 1) ? 1.0 : -1.0) * bp * std::sin(n * arg) /
                          (kPi * static_cast<double>(n) * n);
            double y = term - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum - s * std::log(b);
    }
    double bp = 1;
    const double binv = 1 / b;
    for (long n = 1; n <= T; ++n) {
        bp *= binv;
        if (bp == 0) break;
        double term = ((n & 1) ? 1.0 : -1.0) * bp * std::sin(n * arg) /
                      (kPi * static_cast<double>(n) * n);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum + (1 - r - s) * std::log(b);
}

double decimation_limit_1xy_tail(double r, double s, long terms) {
    if (s > r) std::swap(r, s);
    double b = b_of(r, s);
    if (b > 1) b = 1 / b;
    double T = static_cast<double>(terms);
    if (b < 0.999) {
        // geometric envelope b^T / (pi T^2 (1-b)), clamped above underflow
        return std::max(std::pow(b, T) / (kPi * T * T * (1 - b)), 1e-300);
    }
    return 1 / (kPi * T);
}

double golden_limit(double r) {
    if (r < 0 || r > 2) return -std::numeric_limits<double>::infinity();
    return (r <= 1 ? r : 2 - r) * kLogGolden;
}

std::pair<double, double> angle_gradient(double u, double v) {
    double a = std::exp(u), b = std::exp(v);
    if (a >= b + 1 || b >= a + 1 || 1 >= a + b)
        throw DomainError("(u,v) outside the amoeba interior: triangle degenerates");
    double cr = (b * b + 1 - a * a) / (2 * b);
    double cs = (a * a + 1 - b * b) / (2 * a);
    return {std::acos(cr) / kPi, std::acos(cs) / kPi};
}

double smyth_constant(long terms) {
    if (terms < 1) throw DomainError("smyth_constant needs terms >= 1");
    // sum backwards for accuracy: chi_3 = +1, -1, 0 pattern
    double sum = 0;
    for (long n = terms; n >= 1; --n) {
        int r = static_cast<int>(n % 3);
        if (r == 1)
            sum += 1.0 / (static_cast<double>(n) * n);
        else if (r == 2)
            sum -= 1.0 / (static_cast<double>(n) * n);
    }
    return 3 * std::sqrt(3.0) / (4 * kPi) * sum;
}

} // namespace reference
} // namespace decilim
