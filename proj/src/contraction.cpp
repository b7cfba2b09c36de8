#include "decilim/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "decilim/newton.hpp"
#include "decilim/parallel.hpp"
#include "decilim/ronkin.hpp"

namespace decilim {

// ---- Smith normal form ----

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> M) {
    if (M.empty() || M[0].empty()) return {};
    const std::size_t rows = M.size(), cols = M[0].size();
    std::vector<BigInt> inv;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot with the smallest absolute value
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (M[i][j] != 0 &&
                    (pi == rows || abs(M[i][j]) < abs(M[pi][pj]))) { pi = i; pj = j; }
        if (pi == rows) break;
        std::swap(M[t], M[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                BigInt q = M[i][t] / M[t][t];
                for (std::size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) { std::swap(M[t], M[i]); dirty = true; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (M[t][j] == 0) continue;
                BigInt q = M[t][j] / M[t][t];
                for (std::size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][j]);
                    dirty = true;
                }
            }
            if (!dirty) {
                // pivot must divide the remaining submatrix
                for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                    for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                        if (M[i][j] % M[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) M[t][jj] += M[i][jj];
                            dirty = true;
                        }
            }
        }
        inv.push_back(abs(M[t][t]));
        ++t;
    }
    return inv;
}

BigInt IntegerLattice::index() const {
    if (rank != dim) throw DomainError("lattice has infinite index");
    BigInt p = 1;
    for (const auto& v : snf_invariants) p *= v;
    return p;
}

IntegerLattice support_group(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("support group of zero polynomial");
    AdjustResult adj = adjust(f);
    IntegerLattice L;
    L.dim = f.dim();
    for (const auto& [e, c] : adj.poly.terms()) {
        bool zero = std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
        if (zero) continue;
        std::vector<std::int64_t> col(e.begin(), e.end());
        L.generators.push_back(std::move(col));
    }
    if (!L.generators.empty()) {
        std::vector<std::vector<BigInt>> M(L.dim,
                                           std::vector<BigInt>(L.generators.size()));
        for (std::size_t j = 0; j < L.generators.size(); ++j)
            for (int i = 0; i < L.dim; ++i) M[i][j] = L.generators[j][i];
        L.snf_invariants = smith_invariants(std::move(M));
        L.rank = static_cast<int>(L.snf_invariants.size());
    }
    return L;
}

BigInt stabilizer_order(const IntegerLattice& gamma, int N) {
    if (N < 1) throw DomainError("stabilizer order needs N >= 1");
    const int d = gamma.dim;
    std::vector<std::vector<BigInt>> M(d);
    for (int i = 0; i < d; ++i) {
        for (const auto& g : gamma.generators) M[i].push_back(g[i]);
        for (int j = 0; j < d; ++j) M[i].push_back(i == j ? BigInt(N) : BigInt(0));
    }
    BigInt order = 1;
    for (const auto& v : smith_invariants(std::move(M))) order *= v;
    return order;
}

// ---- dense univariate polynomials over F_p (candidate multiplicities) ----

namespace {

constexpr std::uint64_t kP1 = 9223372036854775783ULL;  // largest prime < 2^63
constexpr std::uint64_t kP2 = 9223372036854775643ULL;

struct ModPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> c;  // ascending, trimmed

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended euclid
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a;
    while (nr) {
        std::uint64_t q = r / nr;
        std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt; nt = tmp;
        std::uint64_t tmr = r - q * nr;
        r = nr; nr = tmr;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::uint64_t v = r.c[i + j] + mulmod(a.c[i], b.c[j], a.p);
            r.c[i + j] = v >= a.p ? v - a.p : v;
        }
    }
    r.trim();
    return r;
}

ModPoly mp_rem(ModPoly a, const ModPoly& b) {
    std::uint64_t binv = invmod(b.c.back(), a.p);
    while (a.deg() >= b.deg() && !a.c.empty()) {
        std::uint64_t q = mulmod(a.c.back(), binv, a.p);
        std::size_t off = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::uint64_t sub = mulmod(q, b.c[i], a.p);
            a.c[off + i] = a.c[off + i] >= sub ? a.c[off + i] - sub : a.c[off + i] + a.p - sub;
        }
        a.trim();
    }
    return a;
}

ModPoly mp_div(const ModPoly& a, const ModPoly& b) {
    ModPoly rem = a, q{a.p, {}};
    if (a.deg() < b.deg()) return q;
    q.c.assign(a.deg() - b.deg() + 1, 0);
    std::uint64_t binv = invmod(b.c.back(), a.p);
    while (rem.deg() >= b.deg() && !rem.c.empty()) {
        std::uint64_t qc = mulmod(rem.c.back(), binv, a.p);
        std::size_t off = rem.c.size() - b.c.size();
        q.c[off] = qc;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::uint64_t sub = mulmod(qc, b.c[i], a.p);
            rem.c[off + i] = rem.c[off + i] >= sub ? rem.c[off + i] - sub
                                                   : rem.c[off + i] + a.p - sub;
        }
        rem.trim();
    }
    q.trim();
    return q;
}

ModPoly mp_gcd(ModPoly a, ModPoly b) {
    a.trim(); b.trim();
    while (!b.c.empty()) {
        ModPoly r = mp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.c.empty()) {  // monic normalization
        std::uint64_t inv = invmod(a.c.back(), a.p);
        for (auto& v : a.c) v = mulmod(v, inv, a.p);
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r{a.p, {}};
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(mulmod(a.c[i], i % a.p, a.p));
    r.trim();
    return r;
}

// gcd of squarefree-decomposition multiplicities (Yun; valid since p >> deg)
unsigned long multiplicity_gcd(ModPoly F) {
    F.trim();
    if (F.deg() <= 0) return 0;
    unsigned long g = 0;
    ModPoly d = mp_derivative(F);
    if (d.c.empty()) return 0;  // cannot happen for p > deg
    ModPoly a = mp_gcd(F, d);
    ModPoly w = mp_div(F, a);
    ModPoly y = mp_div(d, a);
    unsigned long i = 1;
    while (w.deg() > 0) {
        // z = y - w'
        ModPoly wp = mp_derivative(w);
        ModPoly z{F.p, {}};
        z.c.assign(std::max(y.c.size(), wp.c.size()), 0);
        for (std::size_t k = 0; k < z.c.size(); ++k) {
            std::uint64_t yv = k < y.c.size() ? y.c[k] : 0;
            std::uint64_t wv = k < wp.c.size() ? wp.c[k] : 0;
            z.c[k] = yv >= wv ? yv - wv : yv + F.p - wv;
        }
        z.trim();
        ModPoly gi = mp_gcd(w, z);
        if (gi.deg() > 0) g = std::gcd(g, i);
        w = mp_div(w, gi);
        y = mp_div(z, gi);
        ++i;
        if (i > 4096) break;
    }
    return g == 0 ? 1 : g;
}

// largest e with c = g^e (c >= 1), by stripping prime-indexed exact roots
std::pair<BigInt, unsigned long> constant_power_split(BigInt c) {
    if (c == 1) return {BigInt(1), 1};
    unsigned long e = 1;
    BigInt g = c;
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                 47, 53, 59, 61};
    for (int q : primes) {
        while (true) {
            auto r = exact_root(g, q);
            if (!r || *r == g) break;
            g = *r;
            e *= q;
        }
        if (mpz_sizeinbase(g.get_mpz_t(), 2) <= static_cast<std::size_t>(q)) break;
    }
    return {g, e};
}

// attempt the exact e-th root of F (adjusted, positive constant term)
std::optional<LaurentPoly> try_root(const LaurentPoly& F, unsigned long e) {
    const int d = F.dim();
    if (e == 1) return F;
    Exp m = F.min_exponents();
    for (int i = 0; i < d; ++i)
        if (m[i] % static_cast<int>(e) != 0) return std::nullopt;
    Exp mneg(d);
    for (int i = 0; i < d; ++i) mneg[i] = -m[i];
    LaurentPoly Fp = F.shifted(mneg);  // min exponents now 0

    const auto& lt = *Fp.terms().begin();  // graded-lex minimal term
    Exp k0 = lt.first;
    for (int i = 0; i < d; ++i)
        if (k0[i] % static_cast<int>(e) != 0) return std::nullopt;
    Exp kap(d);
    for (int i = 0; i < d; ++i) kap[i] = k0[i] / static_cast<int>(e);
    auto g0 = exact_root(lt.second, e);
    if (!g0) return std::nullopt;

    LaurentPoly G = LaurentPoly::monomial(kap, *g0);
    BigInt denom = BigInt(static_cast<unsigned long>(e)) * pow_ui(*g0, e - 1);
    Exp last = kap;
    GradedLexLess less;
    const std::size_t max_terms = Fp.term_count() + 1;
    while (true) {
        LaurentPoly R = Fp - G.pow(e);
        if (R.is_zero()) break;
        const auto& rt = *R.terms().begin();
        Exp kg(d);
        for (int i = 0; i < d; ++i)
            kg[i] = rt.first[i] - static_cast<int>(e - 1) * kap[i];
        if (!less(last, kg)) return std::nullopt;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), rt.second.get_mpz_t(), denom.get_mpz_t());
        if (q * denom != rt.second) return std::nullopt;
        G = G + LaurentPoly::monomial(kg, q);
        last = kg;
        if (G.term_count() > max_terms) return std::nullopt;
    }
    Exp back(d);
    for (int i = 0; i < d; ++i) back[i] = m[i] / static_cast<int>(e);
    LaurentPoly out = G.shifted(back);
    // even e leaves the global sign free: fix the constant term positive
    if (out.coeff(Exp(d, 0)) < 0) out = -out;
    return out;
}

} // namespace

PowerSplit perfect_power_split(const LaurentPoly& F, std::uint64_t seed) {
    if (F.is_zero()) throw DomainError("perfect power split of zero polynomial");
    {
        AdjustResult adj = adjust(F);
        if (adj.sign != 1 || adj.poly.coeff(Exp(F.dim(), 0)) != F.coeff(adj.shift) ||
            !(F == adj.poly.shifted(adj.shift)))
            throw DomainError("perfect_power_split needs an adjusted input with "
                              "positive constant term");
    }
    const int d = F.dim();

    if (F.term_count() == 1) {
        // adjusted with positive constant: a single term is a constant c > 0
        const auto& [e, c] = *F.terms().begin();
        auto [g, ee] = constant_power_split(c);
        return {LaurentPoly::monomial(e, g), ee};
    }

    // candidate multiplicity from a generic line restriction mod p
    unsigned long cand = 1;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<std::int64_t> w(d);
        for (int i = 0; i < d; ++i) w[i] = 1 + static_cast<std::int64_t>(rng() % 7);
        std::map<std::int64_t, int> hits;
        std::int64_t minv = 0, maxv = 0;
        bool first = true, ok = true;
        for (const auto& [e, c] : F.terms()) {
            std::int64_t v = 0;
            for (int i = 0; i < d; ++i) v += w[i] * e[i];
            if (++hits[v] > 1) { ok = false; break; }
            minv = first ? v : std::min(minv, v);
            maxv = first ? v : std::max(maxv, v);
            first = false;
        }
        if (!ok) continue;
        for (std::uint64_t p : {kP1, kP2}) {
            ModPoly bar{p, std::vector<std::uint64_t>(maxv - minv + 1, 0)};
            for (const auto& [e, c] : F.terms()) {
                std::int64_t v = -minv;
                for (int i = 0; i < d; ++i) v += w[i] * e[i];
                bar.c[v] = mpz_fdiv_ui(c.get_mpz_t(), p);
            }
            if (bar.c[maxv - minv] == 0) continue;  // degree dropped mod p; try backup
            cand = multiplicity_gcd(bar);
            // the t-valuation of the Laurent restriction is e * val of the root
            if (minv != 0)
                cand = std::gcd(cand, static_cast<unsigned long>(std::llabs(minv)));
            ok = true;
            break;
        }
        if (ok) break;
        cand = 1;
    }

    // descending divisors of the candidate; exact verification inside try_root
    std::vector<unsigned long> divisors;
    for (unsigned long e = 1; e * e <= cand; ++e)
        if (cand % e == 0) {
            divisors.push_back(e);
            if (e != cand / e) divisors.push_back(cand / e);
        }
    std::sort(divisors.rbegin(), divisors.rend());
    for (unsigned long e : divisors) {
        if (e == 1) break;
        if (auto root = try_root(F, e)) return {std::move(*root), e};
    }
    return {F, 1};
}

ContractionResult contract(const LaurentPoly& f, int N, DecimationMethod method) {
    if (f.is_zero()) throw DomainError("contract of zero polynomial");
    AdjustResult adj = adjust(f);
    ContractionResult out;
    out.fN = decimate(adj.poly, N, method);
    PowerSplit ps = perfect_power_split(out.fN);
    out.gN = std::move(ps.root);
    out.eN = ps.exponent;
    return out;
}

DecimationRecord contract_record(const LaurentPoly& f, int N, DecimationMethod method) {
    using clock = std::chrono::steady_clock;
    DecimationRecord rec;
    rec.f = f;
    rec.lattice.assign(f.dim(), N);
    AdjustResult adj = adjust(f);
    auto t0 = clock::now();
    rec.fN = decimate(adj.poly, N, method);
    auto t1 = clock::now();
    PowerSplit ps = perfect_power_split(rec.fN);
    auto t2 = clock::now();
    rec.gN = std::move(ps.root);
    rec.eN = ps.exponent;
    rec.seconds_decimate = std::chrono::duration<double>(t1 - t0).count();
    rec.seconds_split = std::chrono::duration<double>(t2 - t1).count();
    rec.fN_stats = coeff_stats(rec.fN);
    rec.gN_stats = coeff_stats(rec.gN);
    return rec;
}

// ---- degeneracy detection ----

LaurentPoly cyclotomic(int k) {
    thread_local std::map<int, LaurentPoly> memo;
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    // Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d
    LaurentPoly num(1);
    num.set_coeff({k}, 1);
    num.set_coeff({0}, -1);
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto q = try_divide_exact(num, cyclotomic(d));
        if (!q) throw NumericError("cyclotomic recursion failed");
        num = std::move(*q);
    }
    memo.emplace(k, num);
    return num;
}

namespace {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace

DegeneracyReport degenerate_ratios(const LaurentPoly& f) {
    if (f.dim() != 1) throw DimensionError("degeneracy detection requires d = 1");
    AdjustResult adj = adjust(f);
    Exp hiE = adj.poly.max_exponents();
    const int n = hiE[0];
    if (n < 2) throw DomainError("degeneracy detection needs degree >= 2");

    // Sylvester matrix of p(t) = f(t x) and q(t) = f(t) with respect to t
    std::vector<LaurentPoly> pc(n + 1, LaurentPoly(1)), qc(n + 1, LaurentPoly(1));
    for (const auto& [e, c] : adj.poly.terms()) {
        pc[e[0]] = LaurentPoly::monomial({e[0]}, c);  // a_k x^k
        qc[e[0]] = LaurentPoly::constant(1, c);
    }
    const int size = 2 * n;
    std::vector<std::vector<LaurentPoly>> S(size, std::vector<LaurentPoly>(size, LaurentPoly(1)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= n; ++k)
            S[i][i + k] = pc[n - k];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= n; ++k)
            S[n + i][i + k] = qc[n - k];

    DegeneracyReport rep;
    rep.resultant = poly_matrix_det(std::move(S));
    rep.has_nontrivial_cyclotomic = false;

    Exp rlo = rep.resultant.min_exponents(), rhi = rep.resultant.max_exponents();
    const int D = rhi[0] - rlo[0];
    for (int k = 2; k <= 2 * D * D + 1; ++k) {
        if (euler_phi(k) > D) continue;
        if (try_divide_exact(rep.resultant, cyclotomic(k))) {
            rep.witnesses.push_back(k);
            rep.has_nontrivial_cyclotomic = true;
        }
    }
    return rep;
}

AsymLengthTable asymptotic_length(const LaurentPoly& f, const std::vector<int>& Ns,
                                  double tol) {
    if (f.is_zero()) throw DomainError("asymptotic length of zero polynomial");
    AsymLengthTable table;
    table.rows.resize(Ns.size());
    const int d = f.dim();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(Ns.size()); ++i) {
        ContractionResult c = contract(f, Ns[i]);
        AsymLengthRow row;
        row.N = Ns[i];
        row.eN = c.eN;
        row.length = coeff_stats(c.gN).length;
        row.norm_log_len = log_abs(row.length) / std::pow(static_cast<double>(Ns[i]), d);
        table.rows[i] = std::move(row);
    }
    table.mahler_reference = mahler_measure(f, tol).value;
    return table;
}

} // namespace decilim
