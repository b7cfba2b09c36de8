#ifndef DECILIM_DECIMATE_HPP
#define DECILIM_DECIMATE_HPP

#include <cstdint>
#include <vector>

#include "decilim/laurent.hpp"
#include "decilim/rational.hpp"

namespace decilim {

enum class DecimationMethod { Auto, Doubling, Norm };

// Rectangular sublattice a1 Z + ... + ad Z of Z^d.
struct DecimationSpec {
    std::vector<int> lattice;
    DecimationMethod method = DecimationMethod::Auto;
    std::int64_t index() const {
        std::int64_t p = 1;
        for (int a : lattice) p *= a;
        return p;
    }
};

// Global cap on the predicted total coefficient size of a decimation,
// in bits. Exceeding it raises BudgetError.
void set_budget_bits(std::int64_t bits);
std::int64_t budget_bits();

// f<N>: the product of all rotates of f by d-tuples of Nth roots of unity.
// Doubling requires N a power of two and iterates the Graeffe-style identity
// E_{2M}(f<2M>) = E_2((E_M f<M>)<2>); the norm method takes, one variable at
// a time, the determinant of the multiplication matrix modulo t^N - 1.
// Auto picks doubling for powers of two and norm otherwise.
LaurentPoly decimate(const LaurentPoly& f, int N,
                     DecimationMethod method = DecimationMethod::Auto);

// f<Lambda> for a rectangular lattice.
LaurentPoly decimate_lattice(const LaurentPoly& f, const DecimationSpec& spec);

// One finite value of L_N f per nonzero coefficient of f<N>.
struct ScaledLogPoint {
    std::vector<Rat> pos;  // k / index, inside the Newton polytope of f
    double value;          // (1/index) log|coefficient|
};

struct ScaledLogCoeffs {
    int dim = 0;
    std::int64_t index = 1;  // [Z^d : Lambda], N^d in the square case
    std::vector<ScaledLogPoint> points;
};

ScaledLogCoeffs log_rescale(const LaurentPoly& fN, std::int64_t index);

// Serial reference for the doubling path; the default uses OpenMP tasks for
// the 2^d orthant products. Both must agree bit for bit.
LaurentPoly decimate_pow2_serial(const LaurentPoly& f, int N);

} // namespace decilim

#endif
