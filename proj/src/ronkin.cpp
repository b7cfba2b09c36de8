#include "decilim/ronkin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "decilim/decimate.hpp"
#include "decilim/newton.hpp"
#include "decilim/parallel.hpp"

namespace decilim {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kNegInfD = -std::numeric_limits<double>::infinity();

// roots of a dense complex polynomial (ascending coefficients, nonzero ends)
std::vector<cd> poly_roots(const std::vector<cd>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) return {};
    if (n == 1) return {-a[0] / a[1]};
    if (n == 2) {
        cd disc = std::sqrt(a[1] * a[1] - 4.0 * a[2] * a[0]);
        cd q = std::abs(a[1] + disc) > std::abs(a[1] - disc) ? -0.5 * (a[1] + disc)
                                                             : -0.5 * (a[1] - disc);
        if (std::abs(q) == 0.0) return {cd(0), cd(0)};
        return {q / a[2], a[0] / q};
    }
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) C(i, n - 1) = -a[i] / a[n];
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cd> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()(i);
    return r;
}

// ---- d = 1: Jensen over numerically computed roots ----

CertifiedValue ronkin_d1(const LaurentPoly& f, double u) {
    Exp lo = f.min_exponents(), hi = f.max_exponents();
    int m = lo[0], n = hi[0] - lo[0];
    std::vector<cd> a(n + 1, 0.0);
    for (const auto& [e, c] : f.terms()) a[e[0] - m] = c.get_d();

    double val = m * u + std::log(std::abs(a[n]));
    double rad = 1e-14 * (1 + std::abs(val));
    if (n > 0) {
        for (const auto& z : poly_roots(a)) {
            val += std::max(u, std::log(std::abs(z)));
            cd p = 0, dp = 0;
            for (int k = n; k >= 0; --k) p = p * z + a[k];
            for (int k = n; k >= 1; --k) dp = dp * z + a[k] * static_cast<double>(k);
            double az = std::abs(z);
            rad += (std::abs(dp) > 0 && az > 0) ? std::abs(p) / (std::abs(dp) * az) : 1e-9;
        }
    }
    return {val, rad, false};
}

// ---- d = 2: fiberwise Jensen with adaptive Simpson ----

struct FiberData {
    int m_lo = 0, m_hi = 0;
    std::vector<int> other_exp, fiber_exp;
    std::vector<double> coeff;
};

struct FiberEval {
    double phi;   // fiber-circle mean of log|f| at this node
    double dphi;  // d phi / dv
};

FiberEval eval_fiber(const FiberData& fd, double ou, double fv, double s) {
    int span = fd.m_hi - fd.m_lo;
    std::vector<cd> a(span + 1, 0.0);
    for (std::size_t t = 0; t < fd.coeff.size(); ++t) {
        double mag = fd.coeff[t] * std::exp(ou * fd.other_exp[t]);
        a[fd.fiber_exp[t] - fd.m_lo] += mag * std::polar(1.0, kTwoPi * s * fd.other_exp[t]);
    }
    double amax = 0;
    for (const auto& c : a) amax = std::max(amax, std::abs(c));
    if (amax == 0) return {kNegInfD, 0.0};
    int hi = span, lo = 0;
    while (hi > 0 && std::abs(a[hi]) < 1e-250 * amax) --hi;
    while (lo < hi && std::abs(a[lo]) < 1e-250 * amax) ++lo;

    double phi = std::log(std::abs(a[hi])) + (fd.m_lo + lo) * fv;
    double dphi = fd.m_lo + lo;
    if (hi > lo) {
        std::vector<cd> b(a.begin() + lo, a.begin() + hi + 1);
        double ev = std::exp(fv);
        for (const auto& z : poly_roots(b)) {
            double az = std::abs(z);
            if (az < ev) {
                phi += fv;
                dphi += 1;
            } else {
                phi += std::log(az);
            }
        }
    }
    return {phi, dphi};
}

struct SimpsonCtx {
    const FiberData* fd;
    double ou, fv;
    long nodes = 0;
    long cap = 1 << 20;
    double worst = 0;

    FiberEval sample(double s) {
        ++nodes;
        FiberEval e = eval_fiber(*fd, ou, fv, s);
        if (!std::isfinite(e.phi)) {
            // isolated singularity: the whole fiber polynomial vanished
            e = eval_fiber(*fd, ou, fv, s + 1e-13);
            if (!std::isfinite(e.phi)) e.phi = -700.0;
        }
        return e;
    }
};

struct PairVal {
    double v, dv;
};

PairVal simpson_rec(SimpsonCtx& ctx, double x0, double x2, const FiberEval& f0,
                    const FiberEval& f1, const FiberEval& f2, double tol, int depth) {
    double xm = 0.5 * (x0 + x2);
    FiberEval fa = ctx.sample(0.5 * (x0 + xm));
    FiberEval fb = ctx.sample(0.5 * (xm + x2));
    double h = x2 - x0;
    double whole = h / 6 * (f0.phi + 4 * f1.phi + f2.phi);
    double left = h / 12 * (f0.phi + 4 * fa.phi + f1.phi);
    double right = h / 12 * (f1.phi + 4 * fb.phi + f2.phi);
    double dwhole = h / 6 * (f0.dphi + 4 * f1.dphi + f2.dphi);
    double dleft = h / 12 * (f0.dphi + 4 * fa.dphi + f1.dphi);
    double dright = h / 12 * (f1.dphi + 4 * fb.dphi + f2.dphi);
    double err = std::abs(left + right - whole);
    double derr = std::abs(dleft + dright - dwhole);
    if (depth > 0 && (err > tol || derr > 16 * tol) && ctx.nodes < ctx.cap) {
        PairVal L = simpson_rec(ctx, x0, xm, f0, fa, f1, tol / 2, depth - 1);
        PairVal R = simpson_rec(ctx, xm, x2, f1, fb, f2, tol / 2, depth - 1);
        return {L.v + R.v, L.dv + R.dv};
    }
    ctx.worst += err / 15;
    return {left + right + (left + right - whole) / 15, dleft + dright};
}

} // namespace

FiberJensenResult fiber_jensen(const LaurentPoly& f, const std::vector<double>& u,
                               int fiber_var, double tol) {
    if (f.dim() != 2) throw DimensionError("fiber_jensen requires d = 2");
    if (f.is_zero()) throw DomainError("fiber_jensen of zero polynomial");
    const int ov = 1 - fiber_var;

    FiberData fd;
    Exp lo = f.min_exponents(), hi = f.max_exponents();
    fd.m_lo = lo[fiber_var];
    fd.m_hi = hi[fiber_var];
    for (const auto& [e, c] : f.terms()) {
        fd.other_exp.push_back(e[ov]);
        fd.fiber_exp.push_back(e[fiber_var]);
        fd.coeff.push_back(c.get_d());
    }

    SimpsonCtx ctx;
    ctx.fd = &fd;
    ctx.ou = u[ov];
    ctx.fv = u[fiber_var];

    // real coefficients give phi(s) = phi(1-s): integrate a half period
    FiberEval f0 = ctx.sample(0.0);
    FiberEval f1 = ctx.sample(0.25);
    FiberEval f2 = ctx.sample(0.5);
    PairVal r = simpson_rec(ctx, 0.0, 0.5, f0, f1, f2, tol / 2, 40);
    return {2 * r.v, 2 * r.dv, 2 * ctx.worst + 1e-12};
}

double tropicalization(const LaurentPoly& g, const std::vector<double>& u) {
    if (g.is_zero()) throw DomainError("tropicalization of zero polynomial");
    double best = kNegInfD;
    for (const auto& [e, c] : g.terms())
        best = std::max(best, exp_dot(e, u) + log_abs(c));
    return best;
}

namespace {

CertifiedValue ronkin_certified_trop(const LaurentPoly& f, const std::vector<double>& u,
                                     const RonkinOptions& opt) {
    const int d = f.dim();
    AdjustResult adj = adjust(f);
    Exp w = adj.poly.max_exponents();  // min exponent is 0 after adjusting
    int B = 1;
    for (int i = 0; i < d; ++i) B = std::max(B, w[i] + 1);

    auto bound = [&](int N) {
        double Nd = std::pow(static_cast<double>(N), d);
        double a = d * B * 0.6931471805599453 / N;
        double b = d * std::log(Nd * B) / Nd;
        return std::max(a, b);
    };

    int N = opt.trop_N;
    if (N == 0) {
        N = 2;
        while (bound(N) > opt.tol) {
            N *= 2;
            if (N > (1 << 12))
                throw BudgetError("certified tolerance unreachable within doubling budget");
        }
    }

    LaurentPoly fN = decimate(adj.poly, N);
    double Nd = std::pow(static_cast<double>(N), d);
    double value = tropicalization(fN, u) / Nd + exp_dot(adj.shift, u);
    double radius = bound(N) + 1e-11 * (1 + std::abs(value));
    return {value, radius, true};
}

CertifiedValue ronkin_monte_carlo(const LaurentPoly& f, const std::vector<double>& u,
                                  const RonkinOptions& opt) {
    const int d = f.dim();
    const std::uint64_t chunk = 4096;
    const std::uint64_t chunks = std::max<std::uint64_t>(1, opt.mc_samples / chunk);
    std::vector<double> means(chunks), sqmeans(chunks);

#pragma omp parallel for schedule(static)
    for (long ci = 0; ci < static_cast<long>(chunks); ++ci) {
        std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + ci);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double acc = 0, acc2 = 0;
        std::vector<double> s(d);
        for (std::uint64_t k = 0; k < chunk; ++k) {
            for (int i = 0; i < d; ++i) s[i] = unif(rng);
            double lv = std::log(std::abs(f.eval_torus(u, s)));
            if (!std::isfinite(lv)) lv = -700.0;
            acc += lv;
            acc2 += lv * lv;
        }
        means[ci] = acc / chunk;
        sqmeans[ci] = acc2 / chunk;
    }
    // deterministic pairwise tree reduction
    auto tree_sum = [](std::vector<double> v) {
        while (v.size() > 1) {
            std::vector<double> n((v.size() + 1) / 2);
            for (std::size_t i = 0; i < n.size(); ++i)
                n[i] = 2 * i + 1 < v.size() ? v[2 * i] + v[2 * i + 1] : v[2 * i];
            v = std::move(n);
        }
        return v[0];
    };
    double mean = tree_sum(means) / static_cast<double>(chunks);
    double mean2 = tree_sum(sqmeans) / static_cast<double>(chunks);
    double var = std::max(0.0, mean2 - mean * mean);
    double sigma = std::sqrt(var / static_cast<double>(chunks * chunk));
    return {mean, 2 * sigma, false};
}

} // namespace

CertifiedValue ronkin(const LaurentPoly& f, const std::vector<double>& u,
                      const RonkinOptions& opt) {
    if (f.is_zero()) throw DomainError("Ronkin function of zero polynomial");
    if (static_cast<int>(u.size()) != f.dim())
        throw DimensionError("ronkin argument dimension mismatch");

    RonkinMethod m = opt.method;
    if (m == RonkinMethod::Auto)
        m = f.dim() == 1   ? RonkinMethod::D1Roots
            : f.dim() == 2 ? RonkinMethod::FiberJensen
                           : RonkinMethod::MonteCarlo;
    switch (m) {
        case RonkinMethod::D1Roots:
            if (f.dim() != 1) throw DimensionError("d1-roots method requires d = 1");
            return ronkin_d1(f, u[0]);
        case RonkinMethod::FiberJensen: {
            auto r = fiber_jensen(f, u, 1, opt.tol);
            return {r.value, r.err + opt.tol, false};
        }
        case RonkinMethod::MonteCarlo:
            return ronkin_monte_carlo(f, u, opt);
        case RonkinMethod::CertifiedTrop:
            return ronkin_certified_trop(f, u, opt);
        default:
            throw DomainError("unknown ronkin method");
    }
}

CertifiedValue mahler_measure(const LaurentPoly& f, double tol) {
    RonkinOptions opt;
    opt.tol = tol;
    return ronkin(f, std::vector<double>(f.dim(), 0.0), opt);
}

// ---- Legendre dual of the Ronkin function ----

namespace {

double decimation_limit_1d(const LaurentPoly& f, const Rat& r, double tol) {
    Exp lo = f.min_exponents(), hi = f.max_exponents();
    if (r == Rat(lo[0])) return log_abs(f.coeff(lo));
    if (r == Rat(hi[0])) return log_abs(f.coeff(hi));
    if (r < Rat(lo[0]) || Rat(hi[0]) < r) return kNegInfD;
    const double rd = r.to_double();
    auto phi = [&](double u) { return ronkin_d1(f, u).value - rd * u; };
    // golden section; R_f(u) - r u is convex with its minimum inside the box
    double a = -30, b = 30;
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 220 && b - a > 1e-11; ++it) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a);
            f1 = phi(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a);
            f2 = phi(x2);
        }
    }
    (void)tol;
    return std::min(f1, f2);
}

// boundary (non-vertex) point of a 2d polytope: restrict to the active face
// and solve the univariate problem along the edge lattice
double decimation_limit_face(const LaurentPoly& face, const std::vector<Rat>& r,
                             double tol) {
    if (face.term_count() == 1)
        return log_abs(face.terms().begin()->second);
    // edge endpoints: lex-min and lex-max support points (support is collinear)
    Exp A = face.terms().begin()->first, B = A;
    for (const auto& [e, c] : face.terms()) {
        if (lex_less(e, A)) A = e;
        if (lex_less(B, e)) B = e;
    }
    int dx = B[0] - A[0], dy = B[1] - A[1];
    int g = std::gcd(std::abs(dx), std::abs(dy));
    int sx = dx / g, sy = dy / g;
    LaurentPoly h(1);
    for (const auto& [e, c] : face.terms()) {
        int j = sx != 0 ? (e[0] - A[0]) / sx : (e[1] - A[1]) / sy;
        h.set_coeff({j}, c);
    }
    Rat t = sx != 0 ? (r[0] - Rat(A[0])) * Rat(1, sx) : (r[1] - Rat(A[1])) * Rat(1, sy);
    return decimation_limit_1d(h, t, tol);
}

double decimation_limit_2d_interior(const LaurentPoly& f, const std::vector<Rat>& r,
                                    double tol) {
    const double qtol = std::min(1e-7, tol / 8);
    const double rd0 = r[0].to_double(), rd1 = r[1].to_double();
    const double umax = 30;
    std::vector<double> u = {0, 0};

    auto value_at = [&](const std::vector<double>& uu) {
        auto fy = fiber_jensen(f, uu, 1, qtol);
        return fy.value - rd0 * uu[0] - rd1 * uu[1];
    };
    auto grad_at = [&](const std::vector<double>& uu, std::vector<double>& g) {
        auto fx = fiber_jensen(f, uu, 0, qtol);
        auto fy = fiber_jensen(f, uu, 1, qtol);
        g[0] = fx.dvalue - rd0;
        g[1] = fy.dvalue - rd1;
        return fy.value - rd0 * uu[0] - rd1 * uu[1];
    };

    std::vector<double> grad(2);
    double val = grad_at(u, grad);
    for (int it = 0; it < 200; ++it) {
        double gn = std::hypot(grad[0], grad[1]);
        if (gn < tol / 8) break;
        double step = 1.0 / std::max(1.0, gn);
        bool moved = false;
        for (int ls = 0; ls < 50; ++ls) {
            std::vector<double> cand = {std::clamp(u[0] - step * grad[0], -umax, umax),
                                        std::clamp(u[1] - step * grad[1], -umax, umax)};
            double cv = value_at(cand);
            if (cv < val - 1e-16) {
                u = cand;
                val = grad_at(u, grad);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    if (std::max(std::abs(u[0]), std::abs(u[1])) > umax - 1e-9)
        throw NumericError("dual search hit the box clamp near the Newton polytope boundary");
    return val;
}

} // namespace

double decimation_limit(const LaurentPoly& f, const std::vector<Rat>& r, double tol) {
    if (f.is_zero()) throw DomainError("decimation limit of zero polynomial");
    if (static_cast<int>(r.size()) != f.dim())
        throw DimensionError("decimation limit argument dimension mismatch");
    AdjustResult adj = adjust(f);
    std::vector<Rat> rr(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rr[i] = r[i] - Rat(adj.shift[i]);

    NewtonPolytope P = newton_polytope(adj.poly);
    if (!P.contains(rr)) return kNegInfD;
    if (P.is_vertex(rr)) {
        Exp e(f.dim());
        for (int i = 0; i < f.dim(); ++i) e[i] = static_cast<std::int32_t>(rr[i].num);
        return log_abs(adj.poly.coeff(e));
    }
    if (f.dim() == 1) return decimation_limit_1d(adj.poly, rr[0], tol);
    if (f.dim() == 2) {
        for (const auto& fc : P.facets) {
            Rat acc(0);
            for (int i = 0; i < 2; ++i) acc = acc + Rat(fc.normal[i]) * rr[i];
            if (acc == Rat(fc.rhs)) {
                std::vector<Rat> nrm = {Rat(fc.normal[0]), Rat(fc.normal[1])};
                return decimation_limit_face(adj.poly.face_restriction(nrm), rr, tol);
            }
        }
        return decimation_limit_2d_interior(adj.poly, rr, tol);
    }
    throw DimensionError("decimation_limit implemented for d <= 2");
}

// ---- lopsidedness and amoeba rasters ----

bool lopsided(const LaurentPoly& f, const std::vector<double>& u) {
    if (f.is_zero()) throw DomainError("lopsided test of zero polynomial");
    if (f.term_count() == 1) return true;
    std::vector<double> t;
    t.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) t.push_back(exp_dot(e, u) + log_abs(c));
    std::size_t mi = std::max_element(t.begin(), t.end()) - t.begin();
    double mx = t[mi], second = kNegInfD;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != mi) second = std::max(second, t[i]);
    double lse = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != mi) lse += std::exp(t[i] - second);
    lse = second + std::log(lse);
    return mx > lse + 1e-9 * (1 + std::abs(mx));
}

std::pair<int, int> AmoebaRaster::cell_of(double u1, double u2) const {
    int i = static_cast<int>((u1 - box[0]) / (box[1] - box[0]) * res);
    int j = static_cast<int>((u2 - box[2]) / (box[3] - box[2]) * res);
    return {std::clamp(i, 0, res - 1), std::clamp(j, 0, res - 1)};
}

namespace {

struct ChainLevel {
    int M;
    std::vector<double> logc;
    std::vector<std::array<std::int64_t, 2>> k;
};

std::vector<ChainLevel> decimation_chain(const LaurentPoly& f, int N) {
    std::vector<ChainLevel> chain;
    LaurentPoly H = f;  // invariant: H == E_M(f<M>)
    int M = 1;
    while (true) {
        ChainLevel lv;
        lv.M = M;
        for (const auto& [e, c] : H.terms()) {
            lv.logc.push_back(log_abs(c));
            lv.k.push_back({static_cast<std::int64_t>(M) * e[0],
                            static_cast<std::int64_t>(M) * e[1]});
        }
        chain.push_back(std::move(lv));
        if (M >= N) break;
        H = decimate_pow2_serial(H, 2).rescaled_down(2);
        M *= 2;
    }
    return chain;
}

bool cell_certified(const std::vector<ChainLevel>& chain, double u1, double u2,
                    int* level) {
    for (const auto& lv : chain) {
        double mx = kNegInfD;
        std::size_t mi = 0;
        for (std::size_t t = 0; t < lv.logc.size(); ++t) {
            double v = lv.logc[t] + lv.k[t][0] * u1 + lv.k[t][1] * u2;
            if (v > mx) { mx = v; mi = t; }
        }
        double second = kNegInfD;
        for (std::size_t t = 0; t < lv.logc.size(); ++t)
            if (t != mi)
                second = std::max(second, lv.logc[t] + lv.k[t][0] * u1 + lv.k[t][1] * u2);
        if (second == kNegInfD) { *level = lv.M; return true; }
        double lse = 0;
        for (std::size_t t = 0; t < lv.logc.size(); ++t)
            if (t != mi)
                lse += std::exp(lv.logc[t] + lv.k[t][0] * u1 + lv.k[t][1] * u2 - second);
        lse = second + std::log(lse);
        if (mx > lse + 1e-9 * (1 + std::abs(mx))) {
            *level = lv.M;
            return true;
        }
    }
    return false;
}

AmoebaRaster scan_impl(const LaurentPoly& f, const double box[4], int res, int N,
                       bool parallel) {
    if (f.dim() != 2) throw DimensionError("amoeba_scan requires d = 2");
    if (res < 1) throw DomainError("raster resolution must be >= 1");
    if (N < 1 || (N & (N - 1)) != 0) throw DomainError("scan N must be a power of two");

    AmoebaRaster r;
    r.box[0] = box[0]; r.box[1] = box[1]; r.box[2] = box[2]; r.box[3] = box[3];
    r.res = res;
    r.N = N;
    r.cells.assign(static_cast<std::size_t>(res) * res, 0);

    auto chain = decimation_chain(f, N);

#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < res; ++i) {
        double u1 = box[0] + (box[1] - box[0]) * (i + 0.5) / res;
        for (int j = 0; j < res; ++j) {
            double u2 = box[2] + (box[3] - box[2]) * (j + 0.5) / res;
            int level = 0;
            if (cell_certified(chain, u1, u2, &level))
                r.cells[static_cast<std::size_t>(i) * res + j] = level;
        }
    }
    return r;
}

} // namespace

AmoebaRaster amoeba_scan(const LaurentPoly& f, const double box[4], int res, int N) {
    return scan_impl(f, box, res, N, true);
}

AmoebaRaster amoeba_scan_serial(const LaurentPoly& f, const double box[4], int res, int N) {
    return scan_impl(f, box, res, N, false);
}

int count_certified_components(const AmoebaRaster& raster) {
    const int res = raster.res;
    std::vector<char> seen(static_cast<std::size_t>(res) * res, 0);
    int comps = 0;
    std::vector<std::pair<int, int>> stack;
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
            if (!raster.certified(i, j) || seen[static_cast<std::size_t>(i) * res + j])
                continue;
            ++comps;
            stack.push_back({i, j});
            seen[static_cast<std::size_t>(i) * res + j] = 1;
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                const int da[4] = {1, -1, 0, 0}, db[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    int na = a + da[d], nb = b + db[d];
                    if (na < 0 || nb < 0 || na >= res || nb >= res) continue;
                    std::size_t idx = static_cast<std::size_t>(na) * res + nb;
                    if (raster.certified(na, nb) && !seen[idx]) {
                        seen[idx] = 1;
                        stack.push_back({na, nb});
                    }
                }
            }
        }
    return comps;
}

MahlerBracket mahler_bracket(const LaurentPoly& g, double tol) {
    if (g.is_zero()) throw DomainError("mahler_bracket of zero polynomial");
    const int d = g.dim();
    Exp lo = g.min_exponents(), hi = g.max_exponents();
    int C = 1;
    for (int i = 0; i < d; ++i) C = std::max(C, hi[i] - lo[i] + 1);
    CoeffStats st = coeff_stats(g);
    double Hd = st.height.get_d();

    MahlerBracket out;
    out.lower = std::ldexp(Hd, -d * C);
    out.upper = std::pow(static_cast<double>(C), d) * Hd;
    CertifiedValue m = mahler_measure(g, tol);
    out.estimate = std::exp(m.value);
    out.est_radius = m.radius;
    return out;
}

} // namespace decilim
