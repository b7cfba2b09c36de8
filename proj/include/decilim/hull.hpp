#ifndef DECILIM_HULL_HPP
#define DECILIM_HULL_HPP

#include <limits>
#include <vector>

#include "decilim/decimate.hpp"
#include "decilim/newton.hpp"
#include "decilim/rational.hpp"

namespace decilim {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct HullGenerator {
    std::vector<Rat> pos;
    double value;
};

// Affine form <gradient, r> + offset; dominates every generator and touches
// the ones listed in `touching` (within tolerance).
struct HullFacet {
    std::vector<double> gradient;
    double offset;
    std::vector<int> touching;
};

// Finitely generated concave function: the least concave function dominating
// the generator points. Value is -inf off the domain (the convex hull of the
// generator positions).
class PolyhedralConcaveFn {
public:
    int dim = 0;
    std::vector<HullGenerator> generators;
    std::vector<HullFacet> facets;
    NewtonPolytope domain;  // scaled to integers by domain_scale
    std::int64_t domain_scale = 1;

    // min over facet forms if r is in the domain, -inf otherwise
    double eval(const std::vector<double>& r) const;
    double eval(const std::vector<Rat>& r) const;

    // concave Legendre dual psi*(u) = min_i (<r_i, u> - v_i)
    double dual(const std::vector<double>& u) const;

    double max_value() const;

    bool in_domain(const std::vector<Rat>& r) const;  // exact
    std::vector<std::vector<Rat>> domain_vertices() const;
};

PolyhedralConcaveFn concave_hull(const ScaledLogCoeffs& points);
PolyhedralConcaveFn concave_hull(std::vector<HullGenerator> generators);

// sup-plus convolution: hull of all pairwise generator sums
PolyhedralConcaveFn tropical_convolution(const PolyhedralConcaveFn& a,
                                         const PolyhedralConcaveFn& b);

// max |a-b| over both generator sets plus a grid of the stated per-axis
// resolution; requires identical domains (within 1e-9).
double sup_distance(const PolyhedralConcaveFn& a, const PolyhedralConcaveFn& b,
                    int grid_per_axis = 64);

// hull equality as functions: equal domains and values within tol on the
// union of generator positions
bool hull_approx_equal(const PolyhedralConcaveFn& a, const PolyhedralConcaveFn& b,
                       double tol = 1e-9);

} // namespace decilim

#endif
