#include <doctest.h>

#include <cmath>

#include "decilim/hull.hpp"
#include "decilim/parser.hpp"
#include "decilim/reference.hpp"
#include "decilim/ronkin.hpp"
#include "test_util.hpp"

using namespace decilim;

namespace {

PolyhedralConcaveFn hull_of(const LaurentPoly& f, int N) {
    LaurentPoly fN = decimate(f, N);
    std::int64_t idx = 1;
    for (int i = 0; i < f.dim(); ++i) idx *= N;
    return concave_hull(log_rescale(fN, idx));
}

// brute-force 1d upper hull value at r: max over convex pairs
double brute_hull_1d(const std::vector<std::pair<double, double>>& pts, double r) {
    double best = -1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[i].first == pts[j].first) {
                if (pts[i].first == r) best = std::max(best, std::max(pts[i].second, pts[j].second));
                continue;
            }
            double t = (r - pts[i].first) / (pts[j].first - pts[i].first);
            if (t < -1e-12 || t > 1 + 1e-12) continue;
            best = std::max(best, pts[i].second + t * (pts[j].second - pts[i].second));
        }
    return best;
}

} // namespace

TEST_CASE("concave hull: golden tent at N=2") {
    auto fn = hull_of(parse_poly("x^2-x-1"), 2);
    CHECK(fn.max_value() == doctest::Approx(0.5 * std::log(3.0)));
    CHECK(fn.eval(std::vector<double>{1.0}) == doctest::Approx(0.5 * std::log(3.0)));
    CHECK(fn.eval(std::vector<double>{0.5}) == doctest::Approx(0.25 * std::log(3.0)));
    CHECK(fn.eval(std::vector<double>{2.5}) == kNegInf);
    CHECK(fn.eval(std::vector<double>{-0.1}) == kNegInf);
}

TEST_CASE("concave hull: single point") {
    ScaledLogCoeffs pts;
    pts.dim = 2;
    pts.index = 1;
    pts.points.push_back({{Rat(1), Rat(2)}, 0.25});
    auto fn = concave_hull(pts);
    CHECK(fn.eval(std::vector<double>{1.0, 2.0}) == doctest::Approx(0.25));
    CHECK(fn.eval(std::vector<double>{1.5, 2.0}) == kNegInf);
}

TEST_CASE("concave hull: D_5 of 1+x+y peaks at (1/25) log 1905") {
    auto fn = hull_of(parse_poly("1+x+y"), 5);
    CHECK(fn.max_value() == doctest::Approx(std::log(1905.0) / 25).epsilon(1e-12));
    // hull dominance at generators, with at least d+1 touching per facet
    for (const auto& g : fn.generators)
        CHECK(fn.eval(g.pos) >= g.value - 1e-9);
    for (const auto& fc : fn.facets)
        CHECK(fc.touching.size() >= 3);
}

TEST_CASE("concave hull: matches a brute-force oracle in 1d") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 30; ++it) {
        LaurentPoly f = random_poly(rng, 1, 6, 0, 6);
        auto pts = log_rescale(decimate(f, 2), 2);
        auto fn = concave_hull(pts);
        std::vector<std::pair<double, double>> raw;
        for (const auto& p : pts.points) raw.push_back({p.pos[0].to_double(), p.value});
        for (const auto& p : pts.points) {
            double r = p.pos[0].to_double();
            CHECK(fn.eval(std::vector<double>{r}) ==
                  doctest::Approx(brute_hull_1d(raw, r)).epsilon(1e-9));
        }
    }
}

TEST_CASE("dual: golden tent fixtures") {
    auto fn = hull_of(parse_poly("x^2-x-1"), 2);
    CHECK(fn.dual(std::vector<double>{0.0}) == doctest::Approx(-0.5 * std::log(3.0)));
    CHECK(-fn.dual(std::vector<double>{0.0}) == doctest::Approx(fn.max_value()));

    ScaledLogCoeffs one;
    one.dim = 1;
    one.index = 1;
    one.points.push_back({{Rat(0)}, 0.0});
    auto c = concave_hull(one);
    CHECK(c.dual(std::vector<double>{3.7}) == doctest::Approx(0.0));
}

TEST_CASE("duality identity: -dual(D_N f, -u) equals normalized tropicalization") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> unif(-2, 2);
    for (const char* s : {"1+x+y", "x^2-x-1"}) {
        LaurentPoly f = parse_poly(s);
        for (int N : {2, 4}) {
            LaurentPoly fN = decimate(f, N);
            std::int64_t idx = 1;
            for (int i = 0; i < f.dim(); ++i) idx *= N;
            auto fn = concave_hull(log_rescale(fN, idx));
            for (int it = 0; it < 20; ++it) {
                std::vector<double> u(f.dim());
                for (auto& x : u) x = unif(rng);
                std::vector<double> neg;
                for (auto x : u) neg.push_back(-x);
                double lhs = -fn.dual(neg);
                double rhs = tropicalization(fN, u) / static_cast<double>(idx);
                CHECK(std::abs(lhs - rhs) < 1e-9);
            }
        }
    }
}

TEST_CASE("tropical convolution: golden wedges give the tent") {
    // D_{x-lambda} and D_{x-mu} wedges as explicit generators
    const double lg = reference::kLogGolden;
    std::vector<HullGenerator> ga = {{{Rat(0)}, lg}, {{Rat(1)}, 0.0}};
    std::vector<HullGenerator> gb = {{{Rat(0)}, -lg}, {{Rat(1)}, 0.0}};
    PolyhedralConcaveFn a = concave_hull(ga);
    PolyhedralConcaveFn b = concave_hull(gb);
    auto tent = tropical_convolution(a, b);
    CHECK(tent.eval(std::vector<double>{0.0}) == doctest::Approx(0.0));
    CHECK(tent.eval(std::vector<double>{1.0}) == doctest::Approx(lg));
    CHECK(tent.eval(std::vector<double>{2.0}) == doctest::Approx(0.0));

    // identity element
    std::vector<HullGenerator> ge = {{{Rat(0)}, 0.0}};
    PolyhedralConcaveFn e = concave_hull(ge);
    CHECK(hull_approx_equal(tropical_convolution(a, e), a));
}

TEST_CASE("tropical convolution: commutative and associative on triples") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 10; ++it) {
        auto mk = [&](int n) {
            std::vector<HullGenerator> g;
            for (int i = 0; i < n; ++i)
                g.push_back({{Rat(static_cast<int>(rng() % 5)), Rat(static_cast<int>(rng() % 5))},
                             static_cast<double>(static_cast<int>(rng() % 9) - 4) / 3.0});
            return concave_hull(std::move(g));
        };
        auto A = mk(3), B = mk(3), C = mk(2);
        CHECK(hull_approx_equal(tropical_convolution(A, B), tropical_convolution(B, A)));
        CHECK(hull_approx_equal(tropical_convolution(tropical_convolution(A, B), C),
                                tropical_convolution(A, tropical_convolution(B, C))));
    }
}

TEST_CASE("face restriction commutes with hulls") {
    // hull of L_N f restricted to a face F equals hull of L_N (f|F)
    LaurentPoly f = parse_poly("1+x+y");
    int N = 4;
    std::vector<Rat> normal = {Rat(1), Rat(1)};  // the edge x+y = 1
    LaurentPoly fF = f.face_restriction(normal);
    auto hull_face = hull_of(fF, N);
    LaurentPoly fN = decimate(f, N);
    LaurentPoly fNF = fN.face_restriction(normal);
    auto hull_restricted = concave_hull(log_rescale(fNF, N * N));
    for (const auto& g : hull_face.generators)
        CHECK(hull_restricted.eval(g.pos) == doctest::Approx(hull_face.eval(g.pos)).epsilon(1e-9));
}

TEST_CASE("sup distance: zero on self, golden vs limit tent") {
    auto fn = hull_of(parse_poly("x^2-x-1"), 2);
    CHECK(sup_distance(fn, fn) == doctest::Approx(0.0));

    // tent with peak log(lambda)
    std::vector<HullGenerator> gt = {
        {{Rat(0)}, 0.0}, {{Rat(1)}, reference::kLogGolden}, {{Rat(2)}, 0.0}};
    PolyhedralConcaveFn tent = concave_hull(gt);
    double dist = sup_distance(fn, tent);
    CHECK(dist == doctest::Approx(0.5 * std::log(3.0) - reference::kLogGolden).epsilon(1e-9));

    auto f4 = hull_of(parse_poly("1+x+y"), 4);
    auto f8 = hull_of(parse_poly("1+x+y"), 8);
    auto f2 = hull_of(parse_poly("1+x+y"), 2);
    double d24 = sup_distance(f2, f4);
    double d48 = sup_distance(f4, f8);
    CHECK(d48 < d24);
}

TEST_CASE("sup distance: domain mismatch throws") {
    auto a = hull_of(parse_poly("x^2-x-1"), 2);
    auto b = hull_of(parse_poly("x^3-x-1"), 2);
    CHECK_THROWS_AS(sup_distance(a, b), DomainError);
}

TEST_CASE("concave hull: 3d points (desk scale)") {
    std::int64_t idx = 8;
    LaurentPoly f = parse_poly("1+x+y+z");
    LaurentPoly f2 = decimate(f, 2);
    auto fn = concave_hull(log_rescale(f2, idx));
    CHECK(fn.dim == 3);
    for (const auto& g : fn.generators)
        CHECK(fn.eval(g.pos) >= g.value - 1e-9);
    // max of D_2 f equals -dual at 0
    CHECK(-fn.dual(std::vector<double>{0, 0, 0}) == doctest::Approx(fn.max_value()));
}
