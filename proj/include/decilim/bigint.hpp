#ifndef DECILIM_BIGINT_HPP
#define DECILIM_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace decilim {

using BigInt = mpz_class;

// log|c| of a nonzero integer via bit-length decomposition:
// log|c| = (bits-64)*log 2 + log(top 64 bits).  Relative error < 2^-50.
inline double log_abs(const BigInt& c) {
    mpz_class a = abs(c);
    std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    if (bits <= 63)
        return std::log(static_cast<double>(a.get_ui()));
    mpz_class top = a >> (bits - 63);
    long double lead = std::log(static_cast<long double>(top.get_ui()));
    return static_cast<double>(lead + static_cast<long double>(bits - 63) * 0.693147180559945309417L);
}

// Exact integer e-th root, or nullopt if c is not a perfect e-th power.
// For even e the input must be nonnegative; for odd e the sign carries over.
inline std::optional<BigInt> exact_root(const BigInt& c, unsigned long e) {
    if (e == 1) return c;
    if (c < 0 && e % 2 == 0) return std::nullopt;
    BigInt a = abs(c), r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), e);
    if (!exact) return std::nullopt;
    return c < 0 ? BigInt(-r) : r;
}

inline BigInt pow_ui(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace decilim

#endif
