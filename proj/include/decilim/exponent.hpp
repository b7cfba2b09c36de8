#ifndef DECILIM_EXPONENT_HPP
#define DECILIM_EXPONENT_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace decilim {

// Lattice point in Z^d.
using Exp = std::vector<std::int32_t>;

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::int64_t exp_degree(const Exp& a) {
    std::int64_t s = 0;
    for (auto v : a) s += v;
    return s;
}

inline double exp_dot(const Exp& a, const std::vector<double>& u) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * u[i];
    return s;
}

// Canonical term order: by total degree, ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        std::int64_t da = exp_degree(a), db = exp_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline bool lex_less(const Exp& a, const Exp& b) { return a < b; }

} // namespace decilim

#endif
