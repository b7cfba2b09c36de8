// Acceptance suite: runs every shipped criterion at its stated tolerance and
// prints one PASS/FAIL line each. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "decilim/contraction.hpp"
#include "decilim/hull.hpp"
#include "decilim/io_formats.hpp"
#include "decilim/parser.hpp"
#include "decilim/reference.hpp"
#include "decilim/ronkin.hpp"

using namespace decilim;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

PolyhedralConcaveFn hull_of(const LaurentPoly& f, int N) {
    std::int64_t idx = 1;
    for (int i = 0; i < f.dim(); ++i) idx *= N;
    return concave_hull(log_rescale(decimate(f, N), idx));
}

// --- criterion bodies ---

void c01_exact_decimation(Checker& c) {
    LaurentPoly f5 = decimate(parse_poly("1+x+y"), 5);
    // the full 21-term fixture of the worked example, frozen from an
    // independent high-precision rotate-product computation
    const struct { int ex, ey; long co; } fixture[] = {
        {0, 0, 1},    {0, 5, 5},    {0, 10, 10},  {0, 15, 10},   {0, 20, 5},
        {0, 25, 1},   {5, 0, 5},    {5, 5, -605}, {5, 10, 1905}, {5, 15, -605},
        {5, 20, 5},   {10, 0, 10},  {10, 5, 1905},{10, 10, 1905},{10, 15, 10},
        {15, 0, 10},  {15, 5, -605},{15, 10, 10}, {20, 0, 5},    {20, 5, 5},
        {25, 0, 1},
    };
    c.require(f5.term_count() == 21, "expected 21 terms");
    for (const auto& t : fixture)
        c.require(f5.coeff({t.ex, t.ey}) == t.co,
                  "coefficient mismatch at (" + std::to_string(t.ex) + "," +
                      std::to_string(t.ey) + ")");
}

void c02_smyth(Checker& c) {
    auto m = mahler_measure(parse_poly("1+x+y"), 1e-5);
    c.require(m.value >= 0.3230559 && m.value <= 0.3230759,
              "mahler_measure outside [0.3230559, 0.3230759]: " + std::to_string(m.value));
    double s = reference::smyth_constant(1000000);
    double d = reference::decimation_limit_1xy(1.0 / 3, 1.0 / 3, 100000);
    c.require(std::abs(s - d) < 1e-6, "series routes disagree: " + std::to_string(s - d));
}

void c03_golden_convergence(Checker& c) {
    LaurentPoly f = parse_poly("x^2-x-1");
    std::vector<HullGenerator> gt = {
        {{Rat(0)}, 0.0}, {{Rat(1)}, reference::kLogGolden}, {{Rat(2)}, 0.0}};
    PolyhedralConcaveFn tent = concave_hull(gt);
    double prev = 1e300;
    double at1 = 0;
    for (int N : {2, 4, 8, 16, 32, 64}) {
        auto DN = hull_of(f, N);
        double dist = sup_distance(DN, tent);
        c.require(dist < prev, "sup distance not decreasing at N=" + std::to_string(N));
        prev = dist;
        if (N == 64) at1 = std::abs(DN.eval(std::vector<double>{1.0}) - reference::kLogGolden);
    }
    c.require(at1 < 1e-3, "|D_64 f(1) - log lambda| = " + std::to_string(at1));
}

void c04_ledrappier_convergence(Checker& c) {
    LaurentPoly f = parse_poly("1+x+y");
    double prev = 1e300;
    for (int N : {2, 4, 8, 16}) {
        auto DN = hull_of(f, N);
        double sup = 0;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j + i <= 6; ++j) {
                double r = i / 7.0, s = j / 7.0;
                double ref = reference::decimation_limit_1xy(r, s, 100000);
                sup = std::max(sup, std::abs(DN.eval(std::vector<double>{r, s}) - ref));
            }
        for (auto v : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}})
            sup = std::max(sup, std::abs(DN.eval(std::vector<double>{v.first, v.second})));
        c.require(sup < prev, "grid distance not decreasing at N=" + std::to_string(N));
        prev = sup;
        if (N == 16) c.require(sup < 0.05, "sup at N=16 is " + std::to_string(sup));
    }
}

void c05_duality_identity(Checker& c) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> unif(-2, 2);
    for (const char* s : {"1+x+y", "x^2-x-1"}) {
        LaurentPoly f = parse_poly(s);
        for (int N : {2, 4}) {
            LaurentPoly fN = decimate(f, N);
            std::int64_t idx = 1;
            for (int i = 0; i < f.dim(); ++i) idx *= N;
            auto DN = concave_hull(log_rescale(fN, idx));
            for (int it = 0; it < 20; ++it) {
                std::vector<double> u(f.dim()), neg(f.dim());
                for (int i = 0; i < f.dim(); ++i) {
                    u[i] = unif(rng);
                    neg[i] = -u[i];
                }
                double lhs = -DN.dual(neg);
                double rhs = tropicalization(fN, u) / static_cast<double>(idx);
                c.require(std::abs(lhs - rhs) < 1e-9,
                          std::string("identity off by ") + std::to_string(lhs - rhs));
            }
        }
    }
}

void c06_certified_bound(Checker& c) {
    RonkinOptions opt;
    opt.method = RonkinMethod::CertifiedTrop;
    opt.trop_N = 64;
    auto r = ronkin(parse_poly("1+x+y"), {0.0, 0.0}, opt);
    double a64 = 4 * std::log(2.0) / 64;
    c.require(r.rigorous, "certified path must be rigorous");
    c.require(r.radius <= a64 + 1e-9, "radius " + std::to_string(r.radius) + " > a_64");
    c.require(std::abs(r.value - 0.3230659) <= r.radius,
              "interval misses the Smyth value");
}

void c07_mahler_inequality(Checker& c) {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> dDist(1, 2), cDist(1, 5), coeff(-9, 9);
    int done = 0;
    while (done < 50) {
        int d = dDist(rng), C = cDist(rng);
        LaurentPoly g(d);
        std::uniform_int_distribution<int> expo(0, C - 1);
        int terms = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < terms; ++t) {
            int co = coeff(rng);
            if (co == 0) co = 1;
            Exp e(d);
            for (int i = 0; i < d; ++i) e[i] = expo(rng);
            g.set_coeff(e, g.coeff(e) + co);
        }
        if (g.is_zero()) continue;
        ++done;
        auto b = mahler_bracket(g, 1e-4);
        c.require(b.estimate >= b.lower * (1 - 2e-3) - 1e-12,
                  "lower bound violated: " + print_poly(g));
        c.require(b.estimate <= b.upper * (1 + 2e-3) + 1e-12,
                  "upper bound violated: " + print_poly(g));
    }
}

void c08_tropical_convolution(Checker& c) {
    // exact finite-N hull identity needs interference-free products; random
    // binomial pairs with odd distinct gaps make every product coefficient a
    // plain product, and then hull(L_2(fg)) == hull(L_2 f) (*) hull(L_2 g)
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<int> co(1, 9);
    const int odd[] = {1, 3, 5, 7, 9};
    for (int it = 0; it < 10; ++it) {
        int m = odd[rng() % 5], n = odd[rng() % 5];
        while (n == m) n = odd[rng() % 5];
        LaurentPoly f(1), g(1);
        f.set_coeff({0}, co(rng));
        f.set_coeff({m}, (rng() % 2 ? 1 : -1) * co(rng));
        g.set_coeff({0}, co(rng));
        g.set_coeff({n}, (rng() % 2 ? 1 : -1) * co(rng));
        auto lhs = hull_of(f * g, 2);
        auto rhs = tropical_convolution(hull_of(f, 2), hull_of(g, 2));
        c.require(hull_approx_equal(lhs, rhs, 1e-9),
                  "conv identity fails for " + print_poly(f) + " and " + print_poly(g));
    }
    // golden-mean wedges reproduce the tent
    const double lg = reference::kLogGolden;
    std::vector<HullGenerator> wa = {{{Rat(0)}, lg}, {{Rat(1)}, 0.0}};
    std::vector<HullGenerator> wb = {{{Rat(0)}, -lg}, {{Rat(1)}, 0.0}};
    auto tent = tropical_convolution(concave_hull(wa), concave_hull(wb));
    c.require(std::abs(tent.eval(std::vector<double>{1.0}) - lg) < 1e-12 &&
                  std::abs(tent.eval(std::vector<double>{0.0})) < 1e-12 &&
                  std::abs(tent.eval(std::vector<double>{2.0})) < 1e-12,
              "wedge convolution does not give the tent");
}

void c09_contraction_fixtures(Checker& c) {
    auto check = [&](const char* poly, int N, unsigned long e, const char* root) {
        auto r = contract(parse_poly(poly), N);
        c.require(r.eN == e, std::string(poly) + " N=" + std::to_string(N) +
                                 ": e=" + std::to_string(r.eN));
        if (root)
            c.require(r.gN == adjust(parse_poly(root)).poly,
                      std::string(poly) + " N=" + std::to_string(N) + ": wrong root");
        c.require(r.gN.pow(r.eN) == r.fN,
                  std::string(poly) + " N=" + std::to_string(N) + ": re-expansion");
    };
    check("x^2-2", 2, 2, "x^2-2");
    check("x^2-2", 3, 1, "x^6-8");
    check("1-2*x^2", 2, 2, nullptr);
    check("1-2*x^2", 4, 2, nullptr);
    check("1-2*x+4*x^2-3*x^3+x^4", 5, 2, nullptr);
    check("1-2*x+4*x^2-3*x^3+x^4", 3, 1, nullptr);
    check("1-x-y-x*y+x^2+y^2", 3, 2, nullptr);
}

void c10_stabilizer_formula(Checker& c) {
    LaurentPoly f = parse_poly("1+x+y^2");
    auto L = support_group(f);
    const int expected[] = {2, 1, 2, 2};
    const int Ns[] = {2, 3, 4, 6};
    for (int i = 0; i < 4; ++i) {
        auto r = contract(f, Ns[i]);
        c.require(r.eN == static_cast<unsigned long>(expected[i]),
                  "e_" + std::to_string(Ns[i]) + " = " + std::to_string(r.eN));
        c.require(stabilizer_order(L, Ns[i]) == expected[i],
                  "stabilizer order mismatch at N=" + std::to_string(Ns[i]));
    }
}

void c11_degeneracy(Checker& c) {
    auto rep = degenerate_ratios(parse_poly("1-2*x+4*x^2-3*x^3+x^4"));
    c.require(rep.has_nontrivial_cyclotomic, "no cyclotomic witness found");
    bool k5 = false;
    for (int k : rep.witnesses) k5 = k5 || k == 5;
    c.require(k5, "missing k=5 witness");
    auto q = try_divide_exact(rep.resultant, cyclotomic(5));
    c.require(q.has_value(), "Phi_5 does not divide the resultant");
    if (q) {
        LaurentPoly rest = *q;
        int ones = 0;
        while (auto qq = try_divide_exact(rest, cyclotomic(1))) {
            rest = *qq;
            ++ones;
        }
        LaurentPoly quartics =
            parse_poly("x^4-4*x^3+6*x^2+x+1") * parse_poly("x^4+x^3+6*x^2-4*x+1");
        c.require(ones >= 4 && (rest == quartics || rest == -quartics),
                  "cofactor does not match the displayed quartics (x-1 power " +
                      std::to_string(ones) + ")");
    }
}

void c12_asymptotic_length(Checker& c) {
    LaurentPoly f = parse_poly("x^2-2");
    std::vector<int> Ns;
    for (int n = 3; n <= 12; ++n) Ns.push_back(n);
    auto table = asymptotic_length(f, Ns);
    for (const auto& row : table.rows) {
        double expect = row.N % 2 == 1
                            ? std::log(1 + std::pow(2.0, row.N)) / row.N
                            : std::log(1 + std::pow(2.0, row.N / 2)) / row.N;
        c.require(std::abs(row.norm_log_len - expect) < 1e-9,
                  "normalized length at N=" + std::to_string(row.N));
        if (row.N == 11)
            c.require(std::abs(row.norm_log_len - std::log(2.0)) < 0.02, "odd limit at N=11");
        if (row.N == 12)
            c.require(std::abs(row.norm_log_len - 0.5 * std::log(2.0)) < 0.02,
                      "even limit at N=12");
    }
}

void c13_amoeba_hole(Checker& c) {
    LaurentPoly f = parse_poly("5+x+x^-1+y+y^-1");
    c.require(lopsided(f, {0.0, 0.0}), "f not lopsided at the origin");
    double box[4] = {-2, 2, -2, 2};
    auto raster = amoeba_scan(f, box, 64, 8);
    auto [i, j] = raster.cell_of(0.0, 0.0);
    c.require(raster.certified(i, j), "origin cell not certified");
    int comps = count_certified_components(raster);
    c.require(comps >= 5, "certified components = " + std::to_string(comps) +
                              ", expected >= 5 (hole + 4 tentacle gaps)");
}

void c14_gradient_law(Checker& c) {
    LaurentPoly f = parse_poly("1+x+y");
    const std::pair<double, double> pts[] = {
        {0.0, 0.0}, {0.3, 0.1}, {-0.2, 0.4}, {0.5, 0.5}, {-0.4, -0.3}};
    const double h = 2e-3;
    for (auto [u, v] : pts) {
        auto [r, s] = reference::angle_gradient(u, v);
        auto up = fiber_jensen(f, {u + h, v}, 1, 1e-9);
        auto um = fiber_jensen(f, {u - h, v}, 1, 1e-9);
        auto vp = fiber_jensen(f, {u, v + h}, 1, 1e-9);
        auto vm = fiber_jensen(f, {u, v - h}, 1, 1e-9);
        double fdr = (up.value - um.value) / (2 * h);
        double fds = (vp.value - vm.value) / (2 * h);
        c.require(std::abs(fdr - r) < 1e-4,
                  "dR/du off by " + std::to_string(fdr - r) + " at (" +
                      std::to_string(u) + "," + std::to_string(v) + ")");
        c.require(std::abs(fds - s) < 1e-4, "dR/dv off by " + std::to_string(fds - s));
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Checker&)> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: exact decimation fixture f<5> of 1+x+y", c01_exact_decimation, 1},
        {"criterion 2: Smyth constant via quadrature and series", c02_smyth, 10},
        {"criterion 3: golden-mean convergence to N=64", c03_golden_convergence, 5},
        {"criterion 4: 1+x+y convergence on the interior grid", c04_ledrappier_convergence, 60},
        {"criterion 5: duality identity to float slack", c05_duality_identity, 30},
        {"criterion 6: certified Ronkin bound at N=64", c06_certified_bound, 60},
        {"criterion 7: Mahler inequality on 50 random polynomials", c07_mahler_inequality, 120},
        {"criterion 8: tropical convolution hull identity", c08_tropical_convolution, 30},
        {"criterion 9: contraction fixtures", c09_contraction_fixtures, 10},
        {"criterion 10: stabilizer formula for 1+x+y^2", c10_stabilizer_formula, 30},
        {"criterion 11: degeneracy detection with k=5 witness", c11_degeneracy, 30},
        {"criterion 12: asymptotic length oscillation of x^2-2", c12_asymptotic_length, 60},
        {"criterion 13: amoeba hole certificate", c13_amoeba_hole, 30},
        {"criterion 14: gradient law at interior amoeba points", c14_gradient_law, 60},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Checker ck;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(ck);
        } catch (const std::exception& e) {
            ck.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ck.require(secs <= cr.limit_seconds,
                   "runtime " + std::to_string(secs) + "s over " +
                       std::to_string(cr.limit_seconds) + "s");
        if (ck.ok) {
            std::printf("PASS  %s  (%.2fs)\n", cr.name, secs);
        } else {
            std::printf("FAIL  %s  (%.2fs): %s\n", cr.name, secs, ck.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
