#include <doctest.h>

#include <cmath>

#include "decilim/reference.hpp"
#include "decilim/errors.hpp"

using namespace decilim;
using namespace decilim::reference;

TEST_CASE("b(r,s) fixtures") {
    CHECK(b_of(1.0 / 3, 1.0 / 3) == doctest::Approx(1.0));
    CHECK(b_of(0.5, 0.25) == doctest::Approx(1.0));
    CHECK(b_of(0.4, 1e-9) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK_THROWS_AS(b_of(0.7, 0.4), DomainError);
}

TEST_CASE("decimation limit series: Smyth point and symmetry") {
    CHECK(decimation_limit_1xy(1.0 / 3, 1.0 / 3) == doctest::Approx(kSmyth).epsilon(1e-8));
    CHECK(decimation_limit_1xy(0.55, 0.2) == doctest::Approx(decimation_limit_1xy(0.2, 0.55)));
}

TEST_CASE("decimation limit series: both regions agree on the seam") {
    // r = 1/2, s = 1/4 lies on s = (1-r)/2 where b = 1
    double v1 = decimation_limit_1xy(0.5, 0.25, 100000);
    double v2 = decimation_limit_1xy(0.5 - 1e-9, 0.25, 100000);
    CHECK(std::abs(v1 - v2) < 1e-6);
    CHECK(v1 == doctest::Approx(0.291560904015).epsilon(1e-7));
}

TEST_CASE("decimation limit series: frozen interior values") {
    CHECK(decimation_limit_1xy(0.6, 0.1) == doctest::Approx(0.204274275411).epsilon(1e-8));
    CHECK(decimation_limit_1xy(0.2, 0.35) == doctest::Approx(0.291476797616).epsilon(1e-8));
    CHECK(decimation_limit_1xy(0.15, 0.15) == doctest::Approx(0.196583271864).epsilon(1e-8));
}

TEST_CASE("decimation limit series: maximum at the barycenter") {
    double best = -1;
    double argr = 0, args = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i + j >= 7) continue;
            double r = i / 7.0, s = j / 7.0;
            double v = decimation_limit_1xy(r, s, 20000);
            if (v > best) { best = v; argr = r; args = s; }
        }
    double center = decimation_limit_1xy(1.0 / 3, 1.0 / 3, 20000);
    CHECK(center >= best - 1e-9);
    (void)argr;
    (void)args;
}

TEST_CASE("golden tent") {
    CHECK(golden_limit(1.0) == doctest::Approx(kLogGolden));
    CHECK(golden_limit(0.0) == doctest::Approx(0.0));
    CHECK(golden_limit(0.5) == doctest::Approx(0.5 * kLogGolden));
    CHECK(std::isinf(golden_limit(2.5)));
}

TEST_CASE("angle gradient") {
    auto [r, s] = angle_gradient(0.0, 0.0);
    CHECK(r == doctest::Approx(1.0 / 3));
    CHECK(s == doctest::Approx(1.0 / 3));

    auto [r2, s2] = angle_gradient(std::log(2.0), std::log(2.0));
    CHECK(r2 == doctest::Approx(std::acos(0.25) / 3.14159265358979323846));
    CHECK(r2 == doctest::Approx(s2));

    CHECK_THROWS_AS(angle_gradient(3.0, 0.0), DomainError);
}

TEST_CASE("change of variables closes the loop") {
    // e^u = sin(pi r)/sin(pi (r+s)) reconstructed from the angles
    for (auto [u, v] : {std::pair{0.2, 0.1}, {0.5, 0.5}, {-0.3, 0.4}}) {
        auto [r, s] = angle_gradient(u, v);
        double a = std::sin(3.14159265358979323846 * r) /
                   std::sin(3.14159265358979323846 * (r + s));
        CHECK(std::log(a) == doctest::Approx(u).epsilon(1e-8));
    }
}

TEST_CASE("smyth constant") {
    CHECK(smyth_constant(1000000) == doctest::Approx(kSmyth).epsilon(1e-9));
    CHECK(smyth_constant(1) == doctest::Approx(3 * std::sqrt(3.0) / (4 * 3.14159265358979323846)));
    CHECK(std::abs(smyth_constant(1000000) - decimation_limit_1xy(1.0 / 3, 1.0 / 3, 100000)) <
          1e-8);
}

TEST_CASE("series tail bound is reported") {
    CHECK(decimation_limit_1xy_tail(0.6, 0.1, 10) > 0);
    CHECK(decimation_limit_1xy_tail(0.6, 0.1, 1000) <
          decimation_limit_1xy_tail(0.6, 0.1, 10));
}
