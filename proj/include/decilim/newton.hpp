#ifndef DECILIM_NEWTON_HPP
#define DECILIM_NEWTON_HPP

#include <cstdint>
#include <vector>

#include "decilim/laurent.hpp"

namespace decilim {

// Half-space <normal, x> <= rhs with integer data.
struct PolytopeFacet {
    std::vector<std::int64_t> normal;
    std::int64_t rhs;
};

struct NewtonPolytope {
    int dim = 0;
    std::vector<Exp> vertices;          // extreme points, graded-lex sorted
    std::vector<PolytopeFacet> facets;  // populated for dim <= 3
    bool facets_complete = false;       // facets fully describe the polytope

    // exact membership test for a rational point
    bool contains(const std::vector<Rat>& p) const;
    bool is_vertex(const std::vector<Rat>& p) const;
};

NewtonPolytope newton_polytope(const LaurentPoly& f);

// Convex hull of an explicit integer point set (same machinery).
NewtonPolytope hull_of_points(int dim, std::vector<Exp> points);

// Exact test: is q in the convex hull of pts? Phase-1 simplex over rationals.
bool in_convex_hull_exact(const std::vector<Rat>& q,
                          const std::vector<std::vector<Rat>>& pts);

} // namespace decilim

#endif
