#ifndef DECILIM_RONKIN_HPP
#define DECILIM_RONKIN_HPP

#include <cstdint>
#include <vector>

#include "decilim/laurent.hpp"
#include "decilim/rational.hpp"

namespace decilim {

// Real value with an error radius. `rigorous` holds for the certified
// tropical path (radius = max{a_N, b_N} plus float slack) and for exact
// closed forms; quadrature and root-finding paths report estimates, and
// Monte Carlo reports a 2-sigma radius.
struct CertifiedValue {
    double value = 0;
    double radius = 0;
    bool rigorous = false;
};

enum class RonkinMethod { Auto, D1Roots, FiberJensen, MonteCarlo, CertifiedTrop };

struct RonkinOptions {
    RonkinMethod method = RonkinMethod::Auto;
    double tol = 1e-6;
    int trop_N = 0;                  // certified path: fixed N (0 = derive from tol)
    std::uint64_t mc_samples = 1 << 18;
    std::uint64_t seed = 1;
};

// R_f(u): mean of log|f| over the torus with radii e^{u_i}.
CertifiedValue ronkin(const LaurentPoly& f, const std::vector<double>& u,
                      const RonkinOptions& opt = {});

// m(f) = R_f(0), the logarithmic Mahler measure.
CertifiedValue mahler_measure(const LaurentPoly& f, double tol = 1e-6);

// (trop g)(u) = max_k { <u,k> + log|g^(k)| }
double tropicalization(const LaurentPoly& g, const std::vector<double>& u);

// D_f(r) = -R_f*(r) = inf_u { R_f(u) - <r,u> }. Vertices of the Newton
// polytope evaluate exactly; other boundary points go through face
// restriction; interior points run a convex search over u.
double decimation_limit(const LaurentPoly& f, const std::vector<Rat>& r, double tol = 1e-4);

// One coefficient of e^u . f strictly exceeds the sum of all others;
// certifies u outside the amoeba of f.
bool lopsided(const LaurentPoly& f, const std::vector<double>& u);

struct AmoebaRaster {
    double box[4] = {0, 0, 0, 0};  // u1 range, u2 range
    int res = 0;
    int N = 0;
    // 0 = undetermined; otherwise the smallest M in the doubling chain
    // 1,2,...,N whose decimation is lopsided at the cell center
    std::vector<int> cells;

    int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * res + j]; }
    bool certified(int i, int j) const { return at(i, j) != 0; }
    std::pair<int, int> cell_of(double u1, double u2) const;
};

// Per-cell amoeba-complement certificates for d = 2 over the given box,
// testing lopsidedness of e^u . f<M> for every M in the doubling chain up
// to N (any level certifies: all decimations share the amoeba of f).
AmoebaRaster amoeba_scan(const LaurentPoly& f, const double box[4], int res, int N);
AmoebaRaster amoeba_scan_serial(const LaurentPoly& f, const double box[4], int res, int N);

// number of 4-connected certified components
int count_certified_components(const AmoebaRaster& raster);

struct MahlerBracket {
    double lower;       // 2^{-dC} H
    double upper;       // C^d H
    double estimate;    // quadrature estimate of M(g)
    double est_radius;  // absolute error estimate on log M
};

// Mahler's inequality data for supp g inside a translate of [0, C-1]^d.
MahlerBracket mahler_bracket(const LaurentPoly& g, double tol = 1e-4);

// Internal quadrature entry, exposed for the reference-form cross checks:
// value and d/du_j of R_f(u) for d = 2, integrating Jensen factorizations
// of the fibers in variable fiber_var.
struct FiberJensenResult {
    double value;
    double dvalue;  // dR/du_{fiber_var}
    double err;     // absolute error estimate
};
FiberJensenResult fiber_jensen(const LaurentPoly& f, const std::vector<double>& u,
                               int fiber_var, double tol);

} // namespace decilim

#endif
