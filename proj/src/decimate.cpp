#include "decilim/decimate.hpp"

#include <atomic>
#include <cmath>

#include "decilim/parallel.hpp"

namespace decilim {

namespace {

std::atomic<std::int64_t> g_budget_bits{std::int64_t(1) << 31};

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_budget(const LaurentPoly& f, const std::vector<int>& lattice) {
    if (f.is_zero()) return;
    const int d = f.dim();
    std::int64_t index = 1;
    for (int a : lattice) index *= a;
    Exp lo = f.min_exponents(), hi = f.max_exponents();
    double log2_len = 0;
    BigInt len = 0;
    for (const auto& [e, c] : f.terms()) len += abs(c);
    log2_len = log_abs(len) / 0.6931471805599453;
    double terms = 1;
    for (int i = 0; i < d; ++i) {
        double w = static_cast<double>(hi[i] - lo[i]);
        terms *= static_cast<double>(index) / lattice[i] * w + 1;
    }
    double predicted = terms * (static_cast<double>(index) * log2_len + 64.0);
    if (predicted > static_cast<double>(g_budget_bits.load()))
        throw BudgetError("predicted decimation size " + std::to_string(predicted) +
                          " bits exceeds budget of " + std::to_string(g_budget_bits.load()));
}

// Product of the 2^d sign rotates of f, i.e. f<2> before exponent compression.
// The multiplication tree is fixed, so the result is identical for any
// schedule.
LaurentPoly orthant_product(const LaurentPoly& f, bool parallel) {
    const unsigned count = 1u << f.dim();
    std::vector<LaurentPoly> level(count);
    for (unsigned m = 0; m < count; ++m) level[m] = f.sign_rotated(m);
    while (level.size() > 1) {
        std::vector<LaurentPoly> next(level.size() / 2);
        if (parallel && level.size() >= 4) {
#pragma omp parallel for schedule(static)
            for (long i = 0; i < static_cast<long>(next.size()); ++i)
                next[i] = level[2 * i] * level[2 * i + 1];
        } else {
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = level[2 * i] * level[2 * i + 1];
        }
        level = std::move(next);
    }
    return level[0];
}

LaurentPoly decimate_pow2(const LaurentPoly& f, int N, bool parallel) {
    LaurentPoly H = f;  // invariant: H == E_{2^j}(f<2^j>)
    int n = 1;
    while (n < N) {
        H = orthant_product(H, parallel).rescaled_down(2);
        n *= 2;
    }
    return H.inflated(N);
}

// Product of the rotates of F along one variable: det of the multiplication
// matrix of F(t * x_var) on the free module Z[x^{+-}][t]/(t^N - 1).
LaurentPoly decimate_along(const LaurentPoly& F, int var, int N) {
    const int d = F.dim();
    std::vector<LaurentPoly> v(N, LaurentPoly(d));
    for (const auto& [e, c] : F.terms()) {
        int j = e[var] % N;
        if (j < 0) j += N;
        v[j] = v[j] + LaurentPoly::monomial(e, c);
    }
    std::vector<std::vector<LaurentPoly>> M(N, std::vector<LaurentPoly>(N, LaurentPoly(d)));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int j = (a - b) % N;
            if (j < 0) j += N;
            M[a][b] = v[j];
        }
    return poly_matrix_det(std::move(M));
}

} // namespace

void set_budget_bits(std::int64_t bits) { g_budget_bits.store(bits); }
std::int64_t budget_bits() { return g_budget_bits.load(); }

LaurentPoly decimate_pow2_serial(const LaurentPoly& f, int N) {
    if (f.is_zero()) throw DomainError("decimation of zero polynomial");
    if (!is_pow2(N)) throw DomainError("doubling method requires N to be a power of 2");
    check_budget(f, std::vector<int>(f.dim(), N));
    return decimate_pow2(f, N, false);
}

LaurentPoly decimate(const LaurentPoly& f, int N, DecimationMethod method) {
    if (f.is_zero()) throw DomainError("decimation of zero polynomial");
    if (N < 1) throw DomainError("decimation parameter must be >= 1");
    if (N == 1) return f;
    check_budget(f, std::vector<int>(f.dim(), N));

    if (method == DecimationMethod::Auto)
        method = is_pow2(N) ? DecimationMethod::Doubling : DecimationMethod::Norm;
    if (method == DecimationMethod::Doubling) {
        if (!is_pow2(N)) throw DomainError("doubling method requires N to be a power of 2");
        return decimate_pow2(f, N, true);
    }
    LaurentPoly r = f;
    for (int var = 0; var < f.dim(); ++var) r = decimate_along(r, var, N);
    return r;
}

LaurentPoly decimate_lattice(const LaurentPoly& f, const DecimationSpec& spec) {
    if (f.is_zero()) throw DomainError("decimation of zero polynomial");
    if (static_cast<int>(spec.lattice.size()) != f.dim())
        throw DimensionError("lattice spec dimension mismatch");
    for (int a : spec.lattice)
        if (a < 1) throw DomainError("lattice entries must be >= 1");
    check_budget(f, spec.lattice);

    bool square = true;
    for (int a : spec.lattice) square = square && a == spec.lattice[0];
    if (square && spec.method != DecimationMethod::Norm)
        return decimate(f, spec.lattice[0], spec.method);

    LaurentPoly r = f;
    for (int var = 0; var < f.dim(); ++var)
        if (spec.lattice[var] > 1) r = decimate_along(r, var, spec.lattice[var]);
    return r;
}

ScaledLogCoeffs log_rescale(const LaurentPoly& fN, std::int64_t index) {
    if (index <= 0) throw DomainError("log_rescale index must be positive");
    if (fN.is_zero()) throw DomainError("log_rescale of zero polynomial");
    ScaledLogCoeffs out;
    out.dim = fN.dim();
    out.index = index;
    out.points.reserve(fN.term_count());
    for (const auto& [e, c] : fN.terms()) {
        ScaledLogPoint p;
        p.pos.reserve(out.dim);
        for (int i = 0; i < out.dim; ++i) p.pos.emplace_back(e[i], index);
        p.value = log_abs(c) / static_cast<double>(index);
        out.points.push_back(std::move(p));
    }
    return out;
}

} // namespace decilim
