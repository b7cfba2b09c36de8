#include "decilim/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace decilim {

LaurentPoly LaurentPoly::constant(int dim, BigInt c) {
    LaurentPoly f(dim);
    if (c != 0) f.terms_.emplace(Exp(dim, 0), std::move(c));
    return f;
}

LaurentPoly LaurentPoly::monomial(Exp e, BigInt c) {
    LaurentPoly f(static_cast<int>(e.size()));
    if (c != 0) f.terms_.emplace(std::move(e), std::move(c));
    return f;
}

BigInt LaurentPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set_coeff(const Exp& e, BigInt c) {
    if (static_cast<int>(e.size()) != dim_)
        throw DimensionError("exponent dimension mismatch");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void LaurentPoly::check_dim(const LaurentPoly& o) const {
    if (dim_ != o.dim_)
        throw DimensionError("polynomial dimension mismatch: " + std::to_string(dim_) +
                             " vs " + std::to_string(o.dim_));
}

Exp LaurentPoly::min_exponents() const {
    if (is_zero()) throw DomainError("min_exponents of zero polynomial");
    Exp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dim_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exp LaurentPoly::max_exponents() const {
    if (is_zero()) throw DomainError("max_exponents of zero polynomial");
    Exp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dim_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_dim(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_dim(b);
    LaurentPoly r(a.dim_);
    // schoolbook with map accumulation; outer loop over the shorter factor
    const LaurentPoly& s = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly& l = a.term_count() <= b.term_count() ? b : a;
    BigInt prod;
    for (const auto& [ea, ca] : s.terms_) {
        for (const auto& [eb, cb] : l.terms_) {
            prod = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(exp_add(ea, eb), prod);
            if (!fresh) {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r(dim_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& m) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, m), c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r = constant(dim_, 1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::inflated(int factor) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exp k(dim_);
        for (int i = 0; i < dim_; ++i) k[i] = e[i] * factor;
        r.terms_.emplace(std::move(k), c);
    }
    return r;
}

LaurentPoly LaurentPoly::rescaled_down(int factor) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exp k(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (e[i] % factor != 0)
                throw DomainError("exponent not divisible by rescale factor");
            k[i] = e[i] / factor;
        }
        r.terms_.emplace(std::move(k), c);
    }
    return r;
}

LaurentPoly LaurentPoly::sign_rotated(unsigned mask) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        int sign = 1;
        for (int i = 0; i < dim_; ++i)
            if ((mask >> i) & 1u && (e[i] & 1)) sign = -sign;
        r.terms_.emplace(e, sign > 0 ? c : BigInt(-c));
    }
    return r;
}

LaurentPoly LaurentPoly::face_restriction(const std::vector<Rat>& normal) const {
    if (is_zero()) throw DomainError("face restriction of zero polynomial");
    if (static_cast<int>(normal.size()) != dim_)
        throw DimensionError("face normal dimension mismatch");
    // scale the normal to integers so dot products stay exact
    std::int64_t lcm = 1;
    for (const auto& q : normal) lcm = std::lcm(lcm, q.den);
    std::vector<std::int64_t> w(dim_);
    for (int i = 0; i < dim_; ++i) w[i] = normal[i].num * (lcm / normal[i].den);

    auto dot = [&](const Exp& e) {
        std::int64_t s = 0;
        for (int i = 0; i < dim_; ++i) s += w[i] * e[i];
        return s;
    };
    std::int64_t best = dot(terms_.begin()->first);
    for (const auto& [e, c] : terms_) best = std::max(best, dot(e));
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        if (dot(e) == best) r.terms_.emplace(e, c);
    return r;
}

std::complex<double> LaurentPoly::eval_torus(const std::vector<double>& u,
                                             const std::vector<double>& s) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(s.size()) != dim_)
        throw DimensionError("eval_torus argument dimension mismatch");
    std::complex<double> acc = 0.0;
    constexpr double two_pi = 6.283185307179586476925287;
    for (const auto& [e, c] : terms_) {
        double lr = 0.0, th = 0.0;
        for (int i = 0; i < dim_; ++i) {
            lr += u[i] * e[i];
            th += s[i] * e[i];
        }
        acc += c.get_d() * std::exp(lr) * std::polar(1.0, two_pi * th);
    }
    return acc;
}

CoeffStats coeff_stats(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("coeff_stats of zero polynomial");
    CoeffStats st;
    st.height = 0;
    st.length = 0;
    for (const auto& [e, c] : f.terms()) {
        BigInt a = abs(c);
        if (a > st.height) st.height = a;
        st.length += a;
    }
    st.log_height = log_abs(st.height);
    st.term_count = f.term_count();
    return st;
}

AdjustResult adjust(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("adjust of zero polynomial");
    // the lex-minimal support point is always an extreme point of the hull
    Exp m = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
        if (lex_less(e, m)) m = e;
    AdjustResult out;
    out.shift = m;
    Exp neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    out.poly = f.shifted(neg);
    out.sign = out.poly.coeff(Exp(f.dim(), 0)) < 0 ? -1 : 1;
    if (out.sign < 0) out.poly = -out.poly;
    return out;
}

LaurentPoly poly_matrix_det(std::vector<std::vector<LaurentPoly>> M) {
    const std::size_t n = M.size();
    if (n == 0) throw DomainError("determinant of empty matrix");
    const int d = M[0][0].dim();
    if (n == 1) return M[0][0];

    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(d, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pick the sparsest nonzero pivot in column k
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r) {
            if (M[r][k].is_zero()) continue;
            if (piv == n || M[r][k].term_count() < M[piv][k].term_count()) piv = r;
        }
        if (piv == n) return LaurentPoly(d);  // singular
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = try_divide_exact(num, prev);
                if (!q) throw NumericError("Bareiss division failed");
                M[i][j] = std::move(*q);
            }
            M[i][k] = LaurentPoly(d);
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& F, const LaurentPoly& G) {
    if (G.is_zero()) throw DomainError("division by zero polynomial");
    if (F.dim() != G.dim()) throw DimensionError("division dimension mismatch");
    const int d = F.dim();
    if (F.is_zero()) return LaurentPoly(d);

    // shift both to nonnegative exponents so graded-lex is a well-order
    Exp mF = F.min_exponents(), mG = G.min_exponents();
    Exp negF(d), negG(d);
    for (int i = 0; i < d; ++i) { negF[i] = -mF[i]; negG[i] = -mG[i]; }
    LaurentPoly R = F.shifted(negF);
    LaurentPoly B = G.shifted(negG);

    const auto& ltB = *B.terms().rbegin();  // graded-lex leading term
    LaurentPoly Q(d);
    std::size_t guard = 4 * (F.term_count() + 1) * (G.term_count() + 1) + 1024;
    while (!R.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const auto& ltR = *R.terms().rbegin();
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), ltR.second.get_mpz_t(), ltB.second.get_mpz_t());
        if (q * ltB.second != ltR.second) return std::nullopt;
        Exp e = exp_sub(ltR.first, ltB.first);
        for (int i = 0; i < d; ++i)
            if (e[i] < 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(e, q);
        Q = Q + t;
        R = R - t * B;
    }
    // undo the shifts: F = x^{mF} R', G = x^{mG} B', Q_true = x^{mF-mG} Q
    Exp back(d);
    for (int i = 0; i < d; ++i) back[i] = mF[i] - mG[i];
    return Q.shifted(back);
}

} // namespace decilim
