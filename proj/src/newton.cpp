#include "decilim/newton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

namespace decilim {

namespace {

using Vec3 = std::array<std::int64_t, 3>;

__int128 cross2(std::int64_t ox, std::int64_t oy, std::int64_t ax, std::int64_t ay,
                std::int64_t bx, std::int64_t by) {
    return static_cast<__int128>(ax - ox) * (by - oy) - static_cast<__int128>(ay - oy) * (bx - ox);
}

// Andrew monotone chain; returns hull vertices CCW, collinear points dropped.
std::vector<std::array<std::int64_t, 2>> hull2d(std::vector<std::array<std::int64_t, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<std::array<std::int64_t, 2>> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross2(h[k - 2][0], h[k - 2][1], h[k - 1][0], h[k - 1][1],
                                pts[i][0], pts[i][1]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2][0], h[k - 2][1], h[k - 1][0], h[k - 1][1],
                                    pts[i][0], pts[i][1]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

mpq_class rat_to_mpq(const Rat& r) { return mpq_class(r.num) / mpq_class(r.den); }

// Feasibility of { lambda >= 0 : A lambda = b } by phase-1 simplex with
// Bland's rule; A is m x n over exact rationals.
bool lp_feasible(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    // tableau with artificial basis; ensure b >= 0
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    }
    std::size_t cols = n + m;
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(cols + 1, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    // reduced costs for objective: minimize sum of artificials
    std::vector<mpq_class> z(cols + 1, 0);
    for (std::size_t j = 0; j <= cols; ++j)
        for (std::size_t i = 0; i < m; ++i) z[j] += T[i][j];
    for (std::size_t j = n; j < cols; ++j) z[j] -= 1;

    while (true) {
        // Bland: smallest index with positive reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] > 0) { enter = j; break; }
        if (enter == cols) break;
        // ratio test, Bland tie-break on smallest basis index
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] > 0) {
                mpq_class ratio = T[i][cols] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                    { leave = i; best = ratio; }
            }
        }
        if (leave == m) return false;  // unbounded phase-1: cannot happen, bail
        // pivot
        mpq_class piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            mpq_class f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        mpq_class fz = z[enter];
        for (std::size_t j = 0; j <= cols; ++j) z[j] -= fz * T[leave][j];
        basis[leave] = enter;
    }
    return z[cols] == 0;
}

std::vector<PolytopeFacet> facets3d(const std::vector<Vec3>& pts) {
    std::vector<PolytopeFacet> out;
    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::int64_t ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1],
                             az = pts[j][2] - pts[i][2];
                std::int64_t bx = pts[k][0] - pts[i][0], by = pts[k][1] - pts[i][1],
                             bz = pts[k][2] - pts[i][2];
                std::int64_t nx = ay * bz - az * by, ny = az * bx - ax * bz,
                             nz = ax * by - ay * bx;
                if (nx == 0 && ny == 0 && nz == 0) continue;
                std::int64_t g = std::gcd(std::gcd(std::abs(nx), std::abs(ny)), std::abs(nz));
                nx /= g; ny /= g; nz /= g;
                __int128 rhs = static_cast<__int128>(nx) * pts[i][0] +
                               static_cast<__int128>(ny) * pts[i][1] +
                               static_cast<__int128>(nz) * pts[i][2];
                bool above = false, below = false;
                for (const auto& p : pts) {
                    __int128 v = static_cast<__int128>(nx) * p[0] +
                                 static_cast<__int128>(ny) * p[1] +
                                 static_cast<__int128>(nz) * p[2];
                    if (v > rhs) above = true;
                    if (v < rhs) below = true;
                }
                if (above && below) continue;
                std::int64_t sx = nx, sy = ny, sz = nz;
                std::int64_t srhs = static_cast<std::int64_t>(rhs);
                if (above) { sx = -sx; sy = -sy; sz = -sz; srhs = -srhs; }
                auto key = std::make_pair(std::vector<std::int64_t>{sx, sy, sz}, srhs);
                if (seen.insert(key).second)
                    out.push_back({{sx, sy, sz}, srhs});
            }
    return out;
}

} // namespace

bool in_convex_hull_exact(const std::vector<Rat>& q,
                          const std::vector<std::vector<Rat>>& pts) {
    if (pts.empty()) return false;
    const std::size_t d = q.size();
    std::vector<std::vector<mpq_class>> A(d + 1, std::vector<mpq_class>(pts.size()));
    std::vector<mpq_class> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) A[i][j] = rat_to_mpq(pts[j][i]);
        b[i] = rat_to_mpq(q[i]);
    }
    for (std::size_t j = 0; j < pts.size(); ++j) A[d][j] = 1;
    b[d] = 1;
    return lp_feasible(std::move(A), std::move(b));
}

bool NewtonPolytope::contains(const std::vector<Rat>& p) const {
    if (static_cast<int>(p.size()) != dim) throw DimensionError("point dimension mismatch");
    if (!facets.empty()) {
        for (const auto& f : facets) {
            // <n,p> <= rhs exactly: compare sum of num/den against rhs
            Rat acc(0);
            for (int i = 0; i < dim; ++i) acc = acc + Rat(f.normal[i]) * p[i];
            if (Rat(f.rhs) < acc) return false;
        }
        if (facets_complete) return true;
    }
    std::vector<std::vector<Rat>> vs;
    vs.reserve(vertices.size());
    for (const auto& v : vertices) {
        std::vector<Rat> w(dim);
        for (int i = 0; i < dim; ++i) w[i] = Rat(v[i]);
        vs.push_back(std::move(w));
    }
    return in_convex_hull_exact(p, vs);
}

bool NewtonPolytope::is_vertex(const std::vector<Rat>& p) const {
    for (const auto& v : vertices) {
        bool eq = true;
        for (int i = 0; i < dim; ++i)
            if (p[i] != Rat(v[i])) { eq = false; break; }
        if (eq) return true;
    }
    return false;
}

NewtonPolytope hull_of_points(int dim, std::vector<Exp> points) {
    if (points.empty()) throw DomainError("hull of empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    NewtonPolytope P;
    P.dim = dim;

    if (dim == 1) {
        std::int64_t lo = points.front()[0], hi = points.front()[0];
        for (const auto& p : points) {
            lo = std::min<std::int64_t>(lo, p[0]);
            hi = std::max<std::int64_t>(hi, p[0]);
        }
        P.vertices.push_back({static_cast<std::int32_t>(lo)});
        if (hi != lo) P.vertices.push_back({static_cast<std::int32_t>(hi)});
        P.facets.push_back({{1}, hi});
        P.facets.push_back({{-1}, -lo});
        P.facets_complete = true;
    } else if (dim == 2) {
        std::vector<std::array<std::int64_t, 2>> pts;
        pts.reserve(points.size());
        for (const auto& p : points) pts.push_back({p[0], p[1]});
        auto h = hull2d(std::move(pts));
        for (const auto& v : h)
            P.vertices.push_back({static_cast<std::int32_t>(v[0]), static_cast<std::int32_t>(v[1])});
        if (h.size() == 1) {
            // a point is cut out by axis-aligned equalities
            P.facets.push_back({{1, 0}, h[0][0]});
            P.facets.push_back({{-1, 0}, -h[0][0]});
            P.facets.push_back({{0, 1}, h[0][1]});
            P.facets.push_back({{0, -1}, -h[0][1]});
        } else if (h.size() == 2) {
            auto a = h[0], b = h[1];
            std::int64_t nx = b[1] - a[1], ny = a[0] - b[0];
            std::int64_t g = std::gcd(std::abs(nx), std::abs(ny));
            nx /= g; ny /= g;
            P.facets.push_back({{nx, ny}, nx * a[0] + ny * a[1]});
            P.facets.push_back({{-nx, -ny}, -(nx * a[0] + ny * a[1])});
            // end caps along the segment direction
            std::int64_t tx = b[0] - a[0], ty = b[1] - a[1];
            g = std::gcd(std::abs(tx), std::abs(ty));
            tx /= g; ty /= g;
            P.facets.push_back({{tx, ty}, tx * b[0] + ty * b[1]});
            P.facets.push_back({{-tx, -ty}, -(tx * a[0] + ty * a[1])});
        } else {
            for (std::size_t i = 0; i < h.size(); ++i) {
                auto a = h[i], b = h[(i + 1) % h.size()];
                std::int64_t nx = b[1] - a[1], ny = a[0] - b[0];
                std::int64_t g = std::gcd(std::abs(nx), std::abs(ny));
                nx /= g; ny /= g;
                P.facets.push_back({{nx, ny}, nx * a[0] + ny * a[1]});
            }
        }
        P.facets_complete = true;
    } else {
        // extreme points by exact LP against the rest
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<Rat> q(dim);
            for (int k = 0; k < dim; ++k) q[k] = Rat(points[i][k]);
            std::vector<std::vector<Rat>> rest;
            rest.reserve(points.size() - 1);
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                std::vector<Rat> w(dim);
                for (int k = 0; k < dim; ++k) w[k] = Rat(points[j][k]);
                rest.push_back(std::move(w));
            }
            if (rest.empty() || !in_convex_hull_exact(q, rest))
                P.vertices.push_back(points[i]);
        }
        if (dim == 3) {
            std::vector<Vec3> pts;
            for (const auto& p : points) pts.push_back({p[0], p[1], p[2]});
            P.facets = facets3d(pts);
            // complete only when the point set spans all of R^3
            int rank = 0;
            if (points.size() >= 2) {
                std::vector<std::array<double, 3>> dirs;
                for (std::size_t i = 1; i < points.size() && rank < 3; ++i) {
                    std::array<double, 3> v{double(points[i][0] - points[0][0]),
                                            double(points[i][1] - points[0][1]),
                                            double(points[i][2] - points[0][2])};
                    for (const auto& d0 : dirs) {
                        double dot = v[0]*d0[0] + v[1]*d0[1] + v[2]*d0[2];
                        for (int k = 0; k < 3; ++k) v[k] -= dot * d0[k];
                    }
                    double nrm = std::sqrt(v[0]*v[0] + v[1]*v[1] + v[2]*v[2]);
                    if (nrm > 1e-9) {
                        for (int k = 0; k < 3; ++k) v[k] /= nrm;
                        dirs.push_back(v);
                        ++rank;
                    }
                }
            }
            P.facets_complete = rank == 3;
        }
    }

    std::sort(P.vertices.begin(), P.vertices.end(), GradedLexLess{});
    return P;
}

NewtonPolytope newton_polytope(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("Newton polytope of zero polynomial");
    std::vector<Exp> supp;
    supp.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) supp.push_back(e);
    return hull_of_points(f.dim(), std::move(supp));
}

} // namespace decilim
