#include <doctest.h>

#include <cmath>

#include "decilim/decimate.hpp"
#include "decilim/newton.hpp"
#include "decilim/parser.hpp"
#include "test_util.hpp"

using namespace decilim;

namespace {

// independent oracle: literal product of rotates evaluated with complex
// doubles is unusable for exact checks, so small cases use the definition
// via repeated sign rotation (N = 2) and the norm route cross-checks the rest
LaurentPoly decimate2_by_definition(const LaurentPoly& f) {
    LaurentPoly p = f;
    for (unsigned m = 1; m < (1u << f.dim()); ++m) p = p * f.sign_rotated(m);
    return p;
}

} // namespace

TEST_CASE("decimate: golden mean fixtures") {
    LaurentPoly f = parse_poly("x^2-x-1");
    CHECK(decimate(f, 2) == parse_poly("x^4-3*x^2+1"));
    CHECK(decimate(f, 3) == parse_poly("x^6-4*x^3-1"));
    CHECK(decimate(f, 1) == f);
    CHECK(decimate(parse_poly("x^2-2"), 2) == parse_poly("x^4-4*x^2+4"));
}

TEST_CASE("decimate: N=5 of 1+x+y reproduces the worked example") {
    LaurentPoly f5 = decimate(parse_poly("1+x+y"), 5);
    CHECK(f5.term_count() == 21);
    CHECK(f5.coeff({15, 5}) == -605);
    CHECK(f5.coeff({10, 10}) == 1905);
    CHECK(f5.coeff({25, 0}) == 1);
    CHECK(f5.coeff({0, 25}) == 1);
    CHECK(f5.coeff({20, 5}) == 5);
    CHECK(f5.coeff({10, 5}) == 1905);
}

TEST_CASE("decimate: methods agree exactly") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 25; ++it) {
        int d = 1 + static_cast<int>(rng() % 2);
        LaurentPoly f = random_poly(rng, d, 5, -2, 2);
        for (int N : {2, 4}) {
            LaurentPoly a = decimate(f, N, DecimationMethod::Doubling);
            LaurentPoly b = decimate(f, N, DecimationMethod::Norm);
            CHECK(a == b);
        }
        CHECK(decimate(f, 3, DecimationMethod::Norm) ==
              decimate_lattice(f, {std::vector<int>(d, 3), DecimationMethod::Norm}));
    }
}

TEST_CASE("decimate: doubling equals the definition at N=2") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 25; ++it) {
        int d = 1 + static_cast<int>(rng() % 2);
        LaurentPoly f = random_poly(rng, d, 5, -2, 2);
        CHECK(decimate(f, 2) == decimate2_by_definition(f));
    }
}

TEST_CASE("decimate: serial and parallel doubling are bit-identical") {
    LaurentPoly f = parse_poly("1+x+y");
    CHECK(decimate(f, 8, DecimationMethod::Doubling) == decimate_pow2_serial(f, 8));
}

TEST_CASE("decimate: multiplicativity (fg)<N> = f<N> g<N>") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 15; ++it) {
        int d = 1 + static_cast<int>(rng() % 2);
        LaurentPoly f = random_poly(rng, d, 4, -2, 2);
        LaurentPoly g = random_poly(rng, d, 4, -2, 2);
        for (int N : {2, 3}) {
            CHECK(decimate(f * g, N) == decimate(f, N) * decimate(g, N));
        }
    }
}

TEST_CASE("decimate: composition identity behind the doubling method") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 10; ++it) {
        LaurentPoly f = random_poly(rng, 2, 4, -2, 2);
        // E_{2M}(f<2M>) == E_2((E_M f<M>)<2>) with M = 2
        LaurentPoly lhs = decimate(f, 4).rescaled_down(4);
        LaurentPoly mid = decimate(f, 2).rescaled_down(2);
        LaurentPoly rhs = decimate(mid, 2).rescaled_down(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("decimate: degree law and primitivity") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        int d = 1 + static_cast<int>(rng() % 2);
        LaurentPoly f = random_poly(rng, d, 5, -2, 2);
        int N = 2 + static_cast<int>(rng() % 2);
        LaurentPoly fN = decimate(f, N);
        // N_{f<N>} = N^d N_f
        auto Pf = newton_polytope(f);
        auto PN = newton_polytope(fN);
        int scale = 1;
        for (int i = 0; i < d; ++i) scale *= N;
        std::vector<Exp> scaled;
        for (auto v : Pf.vertices) {
            for (auto& x : v) x *= scale;
            scaled.push_back(v);
        }
        std::sort(scaled.begin(), scaled.end(), GradedLexLess{});
        CHECK(PN.vertices == scaled);
        if (f.is_primitive()) CHECK(fN.is_primitive());
    }
}

TEST_CASE("decimate: rotation invariance at random torus points") {
    LaurentPoly f = parse_poly("1+x+y");
    LaurentPoly f3 = decimate(f, 3);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unif(0, 1);
    for (int it = 0; it < 10; ++it) {
        std::vector<double> u = {0.3, -0.2}, s = {unif(rng), unif(rng)};
        auto a = f3.eval_torus(u, s);
        std::vector<double> s_rot = {s[0] + 1.0 / 3, s[1]};  // x -> zeta_3 x
        auto b = f3.eval_torus(u, s_rot);
        CHECK(std::abs(a - b) <= 1e-9 * (1 + std::abs(a)));
    }
}

TEST_CASE("decimate lattice: rectangular fixtures") {
    LaurentPoly f = parse_poly("1+x+y");
    DecimationSpec spec{{2, 1}, DecimationMethod::Auto};
    // (1+x+y)(1-x+y) = (1+y)^2 - x^2
    CHECK(decimate_lattice(f, spec) == parse_poly("1+2*y+y^2-x^2"));
    DecimationSpec triv{{1, 1}, DecimationMethod::Auto};
    CHECK(decimate_lattice(f, triv) == f);
    DecimationSpec sq{{3, 3}, DecimationMethod::Auto};
    CHECK(decimate_lattice(parse_poly("x^2-x-1"), {{3}, DecimationMethod::Auto}) ==
          decimate(parse_poly("x^2-x-1"), 3));
    CHECK(decimate_lattice(f, sq) == decimate(f, 3));
    CHECK_THROWS_AS(decimate_lattice(f, DecimationSpec{{0, 2}, DecimationMethod::Auto}),
                    DomainError);
}

TEST_CASE("log rescale: golden fixtures") {
    LaurentPoly f2 = decimate(parse_poly("x^2-x-1"), 2);
    auto pts = log_rescale(f2, 2);
    REQUIRE(pts.points.size() == 3);
    CHECK(pts.points[0].pos[0] == Rat(0));
    CHECK(pts.points[0].value == doctest::Approx(0.0));
    CHECK(pts.points[1].pos[0] == Rat(1));
    CHECK(pts.points[1].value == doctest::Approx(0.5 * std::log(3.0)));
    CHECK(pts.points[2].pos[0] == Rat(2));
    CHECK(pts.points[2].value == doctest::Approx(0.0));

    LaurentPoly f3 = decimate(parse_poly("x^2-x-1"), 3);
    auto pts3 = log_rescale(f3, 3);
    CHECK(pts3.points[1].pos[0] == Rat(1));
    CHECK(pts3.points[1].value == doctest::Approx(std::log(4.0) / 3));

    auto one = log_rescale(LaurentPoly::constant(1, 1), 1);
    CHECK(one.points.size() == 1);
    CHECK(one.points[0].value == 0.0);
}

TEST_CASE("decimate: budget guard") {
    auto saved = budget_bits();
    set_budget_bits(1 << 10);
    CHECK_THROWS_AS(decimate(parse_poly("1+x+y"), 64), BudgetError);
    set_budget_bits(saved);
}

TEST_CASE("decimate: invalid arguments") {
    CHECK_THROWS_AS(decimate(LaurentPoly(1), 2), DomainError);
    CHECK_THROWS_AS(decimate(parse_poly("1+x"), 0), DomainError);
    CHECK_THROWS_AS(decimate(parse_poly("1+x"), 3, DecimationMethod::Doubling), DomainError);
}
