#ifndef DECILIM_TEST_UTIL_HPP
#define DECILIM_TEST_UTIL_HPP

#include <random>

#include "decilim/laurent.hpp"

// random sparse polynomial: dim d, up to max_terms terms, coefficients in
// [-9,9] \ {0}, exponents in [lo, hi]
inline decilim::LaurentPoly random_poly(std::mt19937_64& rng, int d, int max_terms,
                                        int lo, int hi) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(lo, hi);
    decilim::LaurentPoly f(d);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        decilim::Exp e(d);
        for (int i = 0; i < d; ++i) e[i] = expo(rng);
        f.set_coeff(e, f.coeff(e) + c);
    }
    if (f.is_zero()) f.set_coeff(decilim::Exp(d, 0), 1);
    return f;
}

#endif
