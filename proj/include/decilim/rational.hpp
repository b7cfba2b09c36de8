#ifndef DECILIM_RATIONAL_HPP
#define DECILIM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "decilim/errors.hpp"

namespace decilim {

// Small exact rational. Hull generator positions are lattice points divided
// by the decimation index, so 64-bit numerator/denominator is ample at desk
// scale; intermediates use 128-bit and overflow throws.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw NumericError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return combine(a, b, +1); }
    friend Rat operator-(const Rat& a, const Rat& b) { return combine(a, b, -1); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from128(n, d);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

private:
    static Rat combine(const Rat& a, const Rat& b, int sign) {
        __int128 n = static_cast<__int128>(a.num) * b.den
                   + static_cast<__int128>(sign) * static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from128(n, d);
    }
    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw NumericError("rational overflow");
        Rat r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
};

} // namespace decilim

#endif
