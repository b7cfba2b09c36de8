#ifndef DECILIM_LAURENT_HPP
#define DECILIM_LAURENT_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decilim/bigint.hpp"
#include "decilim/errors.hpp"
#include "decilim/exponent.hpp"
#include "decilim/rational.hpp"

namespace decilim {

// Exact Laurent polynomial in Z[x_1^{±1},...,x_d^{±1}], identified with its
// coefficient function on Z^d. Immutable in spirit: operations return new
// values. No zero coefficients are ever stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exp, BigInt, GradedLexLess>;

    LaurentPoly() : dim_(0) {}
    explicit LaurentPoly(int dim) : dim_(dim) {}

    static LaurentPoly constant(int dim, BigInt c);
    static LaurentPoly monomial(Exp e, BigInt c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigInt coeff(const Exp& e) const;
    void set_coeff(const Exp& e, BigInt c);

    // Per-coordinate support bounds; polynomial must be nonzero.
    Exp min_exponents() const;
    Exp max_exponents() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(const Exp& m) const;     // multiply by x^m
    LaurentPoly pow(unsigned long e) const;

    BigInt content() const;                      // gcd of |coefficients|, 0 for 0
    bool is_primitive() const { return content() == 1; }

    // Substitute x_i -> x_i^N.
    LaurentPoly inflated(int factor) const;
    // Substitute x_i^N -> x_i; every exponent must be divisible.
    LaurentPoly rescaled_down(int factor) const;
    // Flip the sign of x_i for every i with mask bit set (rotation by -1).
    LaurentPoly sign_rotated(unsigned mask) const;

    // Sub-polynomial supported on the face of the Newton polytope that
    // maximizes <normal, .>; the zero normal returns the polynomial itself.
    LaurentPoly face_restriction(const std::vector<Rat>& normal) const;

    // f(e^{u_1} e^{2 pi i s_1}, ...) in double precision.
    std::complex<double> eval_torus(const std::vector<double>& u,
                                    const std::vector<double>& s) const;

private:
    int dim_;
    TermMap terms_;
    void check_dim(const LaurentPoly& o) const;
};

struct CoeffStats {
    BigInt height;      // max |coefficient|
    BigInt length;      // sum of |coefficients|
    double log_height;  // log(height), relative error < 2^-50
    std::size_t term_count;
};

CoeffStats coeff_stats(const LaurentPoly& f);

struct AdjustResult {
    LaurentPoly poly;  // adjusted: 0 is an extreme point of the Newton polytope,
                       // constant term positive
    Exp shift;         // sign * x^shift * poly == input
    int sign;          // +1 or -1
};

// Normalize so 0 is a vertex of the Newton polytope (lexicographically
// minimal vertex chosen) and the constant term is positive.
AdjustResult adjust(const LaurentPoly& f);

// Exact division: returns F/G when G divides F in the Laurent ring,
// nullopt otherwise.
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& F, const LaurentPoly& G);

// Determinant of a square matrix over the Laurent ring by fraction-free
// (Bareiss) elimination; all intermediate divisions are exact.
LaurentPoly poly_matrix_det(std::vector<std::vector<LaurentPoly>> M);

} // namespace decilim

#endif
