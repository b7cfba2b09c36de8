#ifndef DECILIM_CONTRACTION_HPP
#define DECILIM_CONTRACTION_HPP

#include <cstdint>
#include <vector>

#include "decilim/decimate.hpp"
#include "decilim/laurent.hpp"

namespace decilim {

// Sublattice of Z^d given by generating columns, with Smith-normal-form
// invariants cached.
struct IntegerLattice {
    int dim = 0;
    std::vector<std::vector<std::int64_t>> generators;  // columns
    std::vector<BigInt> snf_invariants;                 // nonzero diagonal, divisibility chain
    int rank = 0;

    bool full() const { return rank == dim; }
    // [Z^d : Gamma]; zero polynomial-free contract: throws if not full rank
    BigInt index() const;
};

// Smith invariants of an arbitrary integer matrix.
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> M);

// Lattice generated by the support of the adjusted polynomial.
IntegerLattice support_group(const LaurentPoly& f);

// |Z^d / (Gamma + N Z^d)|
BigInt stabilizer_order(const IntegerLattice& gamma, int N);

// Largest e with F = G^e for integral G; G is returned adjusted with a
// positive constant term. e = 1 with G = F when F is not a proper power.
struct PowerSplit {
    LaurentPoly root;
    unsigned long exponent;
};
PowerSplit perfect_power_split(const LaurentPoly& F, std::uint64_t seed = 2);

struct ContractionResult {
    LaurentPoly gN;        // adjusted, positive constant term
    unsigned long eN;      // f<N> = gN^eN
    LaurentPoly fN;        // the decimation itself
};

// Report bundle for a full contraction run.
struct DecimationRecord {
    LaurentPoly f;
    std::vector<int> lattice;
    LaurentPoly fN;
    LaurentPoly gN;
    unsigned long eN;
    double seconds_decimate;
    double seconds_split;
    CoeffStats fN_stats;
    CoeffStats gN_stats;
};

DecimationRecord contract_record(const LaurentPoly& f, int N,
                                 DecimationMethod method = DecimationMethod::Auto);

// g_N and e_N with f<N> = g_N^{e_N}; the documented contract expects f
// irreducible and primitive, but any nonzero input yields a well-defined
// perfect-power split.
ContractionResult contract(const LaurentPoly& f, int N,
                           DecimationMethod method = DecimationMethod::Auto);

struct DegeneracyReport {
    LaurentPoly resultant;        // Res_t(f(tx), f(t)), univariate in x
    bool has_nontrivial_cyclotomic;
    std::vector<int> witnesses;   // k > 1 with Phi_k | resultant
};

// Detects distinct roots with root-of-unity ratio (d = 1, deg >= 2).
DegeneracyReport degenerate_ratios(const LaurentPoly& f);

// k-th cyclotomic polynomial as a univariate LaurentPoly.
LaurentPoly cyclotomic(int k);

struct AsymLengthRow {
    int N;
    unsigned long eN;
    BigInt length;        // L(g_N)
    double norm_log_len;  // (1/N^d) log L(g_N)
};

struct AsymLengthTable {
    std::vector<AsymLengthRow> rows;
    double mahler_reference;  // m(f)
};

AsymLengthTable asymptotic_length(const LaurentPoly& f, const std::vector<int>& Ns,
                                  double tol = 1e-6);

} // namespace decilim

#endif
