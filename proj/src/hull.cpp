#include "decilim/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace decilim {

namespace {

struct Pt3 {
    double x, y, z;
};

struct Face {
    int a, b, c;
    double nx, ny, nz, rhs;
    bool alive = true;
};

void face_plane(Face& f, const std::vector<Pt3>& P) {
    const Pt3 &A = P[f.a], &B = P[f.b], &C = P[f.c];
    double ux = B.x - A.x, uy = B.y - A.y, uz = B.z - A.z;
    double vx = C.x - A.x, vy = C.y - A.y, vz = C.z - A.z;
    f.nx = uy * vz - uz * vy;
    f.ny = uz * vx - ux * vz;
    f.nz = ux * vy - uy * vx;
    f.rhs = f.nx * A.x + f.ny * A.y + f.nz * A.z;
}

double face_dist(const Face& f, const Pt3& p) {
    return f.nx * p.x + f.ny * p.y + f.nz * p.z - f.rhs;
}

// Incremental 3D convex hull with a sentinel point far below the lifted
// cloud; only the upper faces are harvested afterwards.
std::vector<std::array<int, 3>> upper_hull_3d(const std::vector<Pt3>& pts, double eps) {
    const int n = static_cast<int>(pts.size());
    std::vector<Pt3> P = pts;

    double cx = 0, cy = 0, zmin = pts[0].z, spread = 0;
    for (const auto& p : pts) {
        cx += p.x; cy += p.y;
        zmin = std::min(zmin, p.z);
    }
    cx /= n; cy /= n;
    for (const auto& p : pts)
        spread = std::max({spread, std::abs(p.x - cx), std::abs(p.y - cy),
                           std::abs(p.z - zmin)});
    P.push_back({cx, cy, zmin - 16 * (spread + 1)});  // sentinel, index n

    // initial tetrahedron: sentinel + three spread-out points
    int i0 = 0, i1 = -1, i2 = -1;
    double best = -1;
    for (int i = 1; i < n; ++i) {
        double d = std::hypot(P[i].x - P[i0].x, P[i].y - P[i0].y);
        if (d > best) { best = d; i1 = i; }
    }
    best = -1;
    for (int i = 0; i < n; ++i) {
        if (i == i0 || i == i1) continue;
        double area = std::abs((P[i1].x - P[i0].x) * (P[i].y - P[i0].y) -
                               (P[i1].y - P[i0].y) * (P[i].x - P[i0].x));
        if (area > best) { best = area; i2 = i; }
    }
    if (i1 < 0 || i2 < 0 || best <= eps)
        throw NumericError("degenerate point set for 3d hull");

    double ix = (P[i0].x + P[i1].x + P[i2].x + P[n].x) / 4;
    double iy = (P[i0].y + P[i1].y + P[i2].y + P[n].y) / 4;
    double iz = (P[i0].z + P[i1].z + P[i2].z + P[n].z) / 4;
    Pt3 inner{ix, iy, iz};

    std::vector<Face> faces;
    auto add_face = [&](int a, int b, int c) {
        Face f{a, b, c};
        face_plane(f, P);
        if (face_dist(f, inner) > 0) {
            std::swap(f.b, f.c);
            face_plane(f, P);
        }
        faces.push_back(f);
    };
    add_face(i0, i1, i2);
    add_face(i0, i1, n);
    add_face(i0, i2, n);
    add_face(i1, i2, n);

    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2) continue;
        std::vector<int> visible;
        for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
            if (faces[fi].alive && face_dist(faces[fi], P[p]) > eps)
                visible.push_back(fi);
        if (visible.empty()) continue;

        // horizon: directed edges of visible faces whose reverse is not visible
        std::map<std::pair<int, int>, int> edge_count;
        for (int fi : visible) {
            const Face& f = faces[fi];
            int v[3] = {f.a, f.b, f.c};
            for (int k = 0; k < 3; ++k) {
                int a = v[k], b = v[(k + 1) % 3];
                edge_count[{std::min(a, b), std::max(a, b)}]++;
            }
        }
        std::vector<std::pair<int, int>> horizon;
        for (int fi : visible) {
            const Face& f = faces[fi];
            int v[3] = {f.a, f.b, f.c};
            for (int k = 0; k < 3; ++k) {
                int a = v[k], b = v[(k + 1) % 3];
                if (edge_count[{std::min(a, b), std::max(a, b)}] == 1)
                    horizon.emplace_back(a, b);
            }
        }
        for (int fi : visible) faces[fi].alive = false;
        for (auto [a, b] : horizon) add_face(a, b, p);
    }

    std::vector<std::array<int, 3>> out;
    for (const auto& f : faces) {
        if (!f.alive || f.a == n || f.b == n || f.c == n) continue;
        double scale = std::abs(f.nx) + std::abs(f.ny) + std::abs(f.nz);
        if (f.nz > 1e-9 * scale) out.push_back({f.a, f.b, f.c});
    }
    return out;
}

// upper hull facets in R^4 of lifted 3d points by brute-force enumeration of
// supporting hyperplanes through 4-point subsets; desk scale only
std::vector<std::array<int, 4>> upper_hull_4d(const std::vector<std::array<double, 4>>& P,
                                              double eps) {
    const int n = static_cast<int>(P.size());
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    // hyperplane through the four lifted points with normal
                    // (g, -1): solve for gradient g and offset c
                    double M[3][3], rhs[3];
                    int rows[3] = {j, k, l};
                    for (int r = 0; r < 3; ++r) {
                        for (int cl = 0; cl < 3; ++cl)
                            M[r][cl] = P[rows[r]][cl] - P[i][cl];
                        rhs[r] = P[rows[r]][3] - P[i][3];
                    }
                    // solve M g = rhs by Cramer
                    auto det3 = [](double m[3][3]) {
                        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                    };
                    double D = det3(M);
                    if (std::abs(D) < eps) continue;
                    double g[3];
                    for (int cl = 0; cl < 3; ++cl) {
                        double Mc[3][3];
                        for (int r = 0; r < 3; ++r)
                            for (int c2 = 0; c2 < 3; ++c2)
                                Mc[r][c2] = c2 == cl ? rhs[r] : M[r][c2];
                        g[cl] = det3(Mc) / D;
                    }
                    double c = P[i][3] - (g[0] * P[i][0] + g[1] * P[i][1] + g[2] * P[i][2]);
                    bool dominates = true;
                    for (int m = 0; m < n && dominates; ++m) {
                        double lv = g[0] * P[m][0] + g[1] * P[m][1] + g[2] * P[m][2] + c;
                        if (P[m][3] > lv + eps) dominates = false;
                    }
                    if (dominates) out.push_back({i, j, k, l});
                }
    return out;
}

} // namespace

double PolyhedralConcaveFn::dual(const std::vector<double>& u) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& g : generators) {
        double s = 0;
        for (int i = 0; i < dim; ++i) s += g.pos[i].to_double() * u[i];
        best = std::min(best, s - g.value);
    }
    return best;
}

double PolyhedralConcaveFn::max_value() const {
    double m = kNegInf;
    for (const auto& g : generators) m = std::max(m, g.value);
    return m;
}

bool PolyhedralConcaveFn::in_domain(const std::vector<Rat>& r) const {
    std::vector<Rat> scaled(dim);
    for (int i = 0; i < dim; ++i) scaled[i] = r[i] * Rat(domain_scale);
    return domain.contains(scaled);
}

std::vector<std::vector<Rat>> PolyhedralConcaveFn::domain_vertices() const {
    std::vector<std::vector<Rat>> out;
    for (const auto& v : domain.vertices) {
        std::vector<Rat> w(dim);
        for (int i = 0; i < dim; ++i) w[i] = Rat(v[i], domain_scale);
        out.push_back(std::move(w));
    }
    return out;
}

double PolyhedralConcaveFn::eval(const std::vector<Rat>& r) const {
    if (!in_domain(r)) return kNegInf;
    std::vector<double> rd(dim);
    for (int i = 0; i < dim; ++i) rd[i] = r[i].to_double();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : facets) {
        double v = f.offset;
        for (int i = 0; i < dim; ++i) v += f.gradient[i] * rd[i];
        best = std::min(best, v);
    }
    return best;
}

double PolyhedralConcaveFn::eval(const std::vector<double>& r) const {
    // tolerance-based domain test on the scaled facet inequalities
    for (const auto& fc : domain.facets) {
        double lhs = 0, scale = 1;
        for (int i = 0; i < dim; ++i) {
            lhs += static_cast<double>(fc.normal[i]) * r[i] * static_cast<double>(domain_scale);
            scale += std::abs(static_cast<double>(fc.normal[i])) * static_cast<double>(domain_scale);
        }
        if (lhs > static_cast<double>(fc.rhs) + 1e-9 * scale) return kNegInf;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : facets) {
        double v = f.offset;
        for (int i = 0; i < dim; ++i) v += f.gradient[i] * r[i];
        best = std::min(best, v);
    }
    return best;
}

PolyhedralConcaveFn concave_hull(const ScaledLogCoeffs& points) {
    std::vector<HullGenerator> gens;
    gens.reserve(points.points.size());
    for (const auto& p : points.points) gens.push_back({p.pos, p.value});
    return concave_hull(std::move(gens));
}

PolyhedralConcaveFn concave_hull(std::vector<HullGenerator> gens) {
    if (gens.empty()) throw DomainError("concave hull of empty point set");
    const int d = static_cast<int>(gens[0].pos.size());
    if (d < 1 || d > 3) throw DimensionError("concave hull supports 1 <= d <= 3");

    PolyhedralConcaveFn fn;
    fn.dim = d;
    fn.generators = std::move(gens);

    // distinct positions, keeping the max value at repeated positions
    std::map<std::vector<Rat>, double> best_at;
    for (const auto& g : fn.generators) {
        auto [it, fresh] = best_at.try_emplace(g.pos, g.value);
        if (!fresh) it->second = std::max(it->second, g.value);
    }
    std::vector<std::vector<Rat>> pos;
    std::vector<double> val;
    for (const auto& [p, v] : best_at) {
        pos.push_back(p);
        val.push_back(v);
    }
    const int n = static_cast<int>(pos.size());

    // exact domain polytope on a common integer scale
    std::int64_t lcm = 1;
    for (const auto& p : pos)
        for (const auto& q : p) lcm = std::lcm(lcm, q.den);
    fn.domain_scale = lcm;
    std::vector<Exp> ipts;
    ipts.reserve(n);
    for (const auto& p : pos) {
        Exp e(d);
        for (int i = 0; i < d; ++i) {
            std::int64_t v = p[i].num * (lcm / p[i].den);
            if (v > INT32_MAX || v < INT32_MIN) throw NumericError("hull coordinates overflow");
            e[i] = static_cast<std::int32_t>(v);
        }
        ipts.push_back(std::move(e));
    }
    fn.domain = hull_of_points(d, ipts);

    // intrinsic affine hull of the positions (double, 1e-12 relative tol)
    std::vector<std::vector<double>> pd(n, std::vector<double>(d));
    double pos_scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            pd[i][j] = pos[i][j].to_double();
            pos_scale = std::max(pos_scale, std::abs(pd[i][j]));
        }
    std::vector<std::vector<double>> basis;
    for (int i = 1; i < n && static_cast<int>(basis.size()) < d; ++i) {
        std::vector<double> v(d);
        for (int j = 0; j < d; ++j) v[j] = pd[i][j] - pd[0][j];
        for (const auto& b : basis) {
            double dot = std::inner_product(v.begin(), v.end(), b.begin(), 0.0);
            for (int j = 0; j < d; ++j) v[j] -= dot * b[j];
        }
        double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (nrm > 1e-12 * pos_scale) {
            for (int j = 0; j < d; ++j) v[j] /= nrm;
            basis.push_back(std::move(v));
        }
    }
    const int k = static_cast<int>(basis.size());

    // intrinsic coordinates
    std::vector<std::vector<double>> q(n, std::vector<double>(k));
    double val_scale = 1;
    for (int i = 0; i < n; ++i) {
        for (int b = 0; b < k; ++b) {
            double s = 0;
            for (int j = 0; j < d; ++j) s += (pd[i][j] - pd[0][j]) * basis[b][j];
            q[i][b] = s;
        }
        val_scale = std::max(val_scale, std::abs(val[i]));
    }
    const double eps = 1e-12 * (pos_scale + val_scale);

    // facets in intrinsic coordinates: each as (grad[k], c, vertex indices)
    struct IFacet {
        std::vector<double> grad;
        double c;
    };
    std::vector<IFacet> ifacets;

    if (k == 0) {
        ifacets.push_back({{}, *std::max_element(val.begin(), val.end())});
    } else if (k == 1) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return q[a][0] < q[b][0]; });
        std::vector<int> chain;
        for (int idx : order) {
            while (chain.size() >= 2) {
                int o = chain[chain.size() - 2], m = chain[chain.size() - 1];
                double cross = (q[m][0] - q[o][0]) * (val[idx] - val[o]) -
                               (val[m] - val[o]) * (q[idx][0] - q[o][0]);
                if (cross >= -eps)  // middle point not strictly above the chord
                    chain.pop_back();
                else
                    break;
            }
            chain.push_back(idx);
        }
        if (chain.size() == 1) {
            ifacets.push_back({{0.0}, val[chain[0]]});
        } else {
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                int a = chain[i], b = chain[i + 1];
                double slope = (val[b] - val[a]) / (q[b][0] - q[a][0]);
                ifacets.push_back({{slope}, val[a] - slope * q[a][0]});
            }
        }
    } else if (k == 2) {
        std::vector<Pt3> lifted(n);
        for (int i = 0; i < n; ++i) lifted[i] = {q[i][0], q[i][1], val[i]};
        auto tris = upper_hull_3d(lifted, eps);
        for (const auto& t : tris) {
            const Pt3 &A = lifted[t[0]], &B = lifted[t[1]], &C = lifted[t[2]];
            double ux = B.x - A.x, uy = B.y - A.y, uz = B.z - A.z;
            double vx = C.x - A.x, vy = C.y - A.y, vz = C.z - A.z;
            double nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
            if (nz < 0) { nx = -nx; ny = -ny; nz = -nz; }
            double rhs = nx * A.x + ny * A.y + nz * A.z;
            ifacets.push_back({{-nx / nz, -ny / nz}, rhs / nz});
        }
    } else {
        std::vector<std::array<double, 4>> lifted(n);
        for (int i = 0; i < n; ++i) lifted[i] = {q[i][0], q[i][1], q[i][2], val[i]};
        auto quads = upper_hull_4d(lifted, eps);
        std::set<std::array<long long, 4>> dedup;
        for (const auto& t : quads) {
            double M[3][3], rhs3[3];
            for (int r = 0; r < 3; ++r) {
                for (int c = 0; c < 3; ++c) M[r][c] = lifted[t[r + 1]][c] - lifted[t[0]][c];
                rhs3[r] = lifted[t[r + 1]][3] - lifted[t[0]][3];
            }
            auto det3 = [](double m[3][3]) {
                return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            };
            double D = det3(M);
            std::vector<double> g(3);
            for (int c = 0; c < 3; ++c) {
                double Mc[3][3];
                for (int r = 0; r < 3; ++r)
                    for (int c2 = 0; c2 < 3; ++c2) Mc[r][c2] = c2 == c ? rhs3[r] : M[r][c2];
                g[c] = det3(Mc) / D;
            }
            double c0 = lifted[t[0]][3] -
                        (g[0] * lifted[t[0]][0] + g[1] * lifted[t[0]][1] + g[2] * lifted[t[0]][2]);
            std::array<long long, 4> key{llround(g[0] * 1e9), llround(g[1] * 1e9),
                                         llround(g[2] * 1e9), llround(c0 * 1e9)};
            if (dedup.insert(key).second) ifacets.push_back({g, c0});
        }
    }

    // lift facets back to ambient coordinates and collect touching generators
    const double touch_tol = 1e-9 * (1 + val_scale + pos_scale);
    for (const auto& f : ifacets) {
        HullFacet hf;
        hf.gradient.assign(d, 0.0);
        for (int b = 0; b < k; ++b)
            for (int j = 0; j < d; ++j) hf.gradient[j] += f.grad[b] * basis[b][j];
        double at_p0 = 0;
        for (int j = 0; j < d; ++j) at_p0 += hf.gradient[j] * pd[0][j];
        hf.offset = f.c - at_p0;
        for (int gi = 0; gi < static_cast<int>(fn.generators.size()); ++gi) {
            double lv = hf.offset;
            for (int j = 0; j < d; ++j)
                lv += hf.gradient[j] * fn.generators[gi].pos[j].to_double();
            if (std::abs(lv - fn.generators[gi].value) <= touch_tol)
                hf.touching.push_back(gi);
        }
        fn.facets.push_back(std::move(hf));
    }
    return fn;
}

PolyhedralConcaveFn tropical_convolution(const PolyhedralConcaveFn& a,
                                         const PolyhedralConcaveFn& b) {
    if (a.dim != b.dim) throw DimensionError("tropical convolution dimension mismatch");
    std::vector<HullGenerator> sums;
    sums.reserve(a.generators.size() * b.generators.size());
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators) {
            HullGenerator g;
            g.pos.resize(a.dim);
            for (int i = 0; i < a.dim; ++i) g.pos[i] = ga.pos[i] + gb.pos[i];
            g.value = ga.value + gb.value;
            sums.push_back(std::move(g));
        }
    return concave_hull(std::move(sums));
}

namespace {

bool domains_match(const PolyhedralConcaveFn& a, const PolyhedralConcaveFn& b, double tol) {
    auto va = a.domain_vertices(), vb = b.domain_vertices();
    if (va.size() != vb.size()) return false;
    auto key = [](const std::vector<Rat>& v) {
        std::vector<double> k;
        for (const auto& q : v) k.push_back(q.to_double());
        return k;
    };
    std::vector<std::vector<double>> ka, kb;
    for (const auto& v : va) ka.push_back(key(v));
    for (const auto& v : vb) kb.push_back(key(v));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    for (std::size_t i = 0; i < ka.size(); ++i)
        for (std::size_t j = 0; j < ka[i].size(); ++j)
            if (std::abs(ka[i][j] - kb[i][j]) > tol) return false;
    return true;
}

std::vector<std::vector<double>> sample_points(const PolyhedralConcaveFn& a,
                                               const PolyhedralConcaveFn& b,
                                               int grid_per_axis) {
    std::vector<std::vector<double>> pts;
    for (const auto& g : a.generators) {
        std::vector<double> p;
        for (const auto& q : g.pos) p.push_back(q.to_double());
        pts.push_back(std::move(p));
    }
    for (const auto& g : b.generators) {
        std::vector<double> p;
        for (const auto& q : g.pos) p.push_back(q.to_double());
        pts.push_back(std::move(p));
    }
    auto verts = a.domain_vertices();
    std::vector<double> lo(a.dim, 1e300), hi(a.dim, -1e300);
    for (const auto& v : verts)
        for (int i = 0; i < a.dim; ++i) {
            lo[i] = std::min(lo[i], v[i].to_double());
            hi[i] = std::max(hi[i], v[i].to_double());
        }
    // box grid restricted to the domain
    if (a.dim == 1) {
        for (int i = 0; i <= grid_per_axis; ++i)
            pts.push_back({lo[0] + (hi[0] - lo[0]) * i / grid_per_axis});
    } else if (a.dim == 2) {
        for (int i = 0; i <= grid_per_axis; ++i)
            for (int j = 0; j <= grid_per_axis; ++j)
                pts.push_back({lo[0] + (hi[0] - lo[0]) * i / grid_per_axis,
                               lo[1] + (hi[1] - lo[1]) * j / grid_per_axis});
    } else {
        int g = std::min(grid_per_axis, 16);
        for (int i = 0; i <= g; ++i)
            for (int j = 0; j <= g; ++j)
                for (int k = 0; k <= g; ++k)
                    pts.push_back({lo[0] + (hi[0] - lo[0]) * i / g,
                                   lo[1] + (hi[1] - lo[1]) * j / g,
                                   lo[2] + (hi[2] - lo[2]) * k / g});
    }
    return pts;
}

} // namespace

double sup_distance(const PolyhedralConcaveFn& a, const PolyhedralConcaveFn& b,
                    int grid_per_axis) {
    if (a.dim != b.dim) throw DimensionError("sup_distance dimension mismatch");
    if (!domains_match(a, b, 1e-9))
        throw DomainError("sup_distance requires identical domains");
    double sup = 0;
    for (const auto& p : sample_points(a, b, grid_per_axis)) {
        double va = a.eval(p), vb = b.eval(p);
        if (va == kNegInf && vb == kNegInf) continue;
        if (va == kNegInf || vb == kNegInf) continue;  // grazing the boundary
        sup = std::max(sup, std::abs(va - vb));
    }
    return sup;
}

bool hull_approx_equal(const PolyhedralConcaveFn& a, const PolyhedralConcaveFn& b,
                       double tol) {
    if (a.dim != b.dim) return false;
    if (!domains_match(a, b, tol)) return false;
    std::vector<std::vector<Rat>> probes;
    for (const auto& g : a.generators) probes.push_back(g.pos);
    for (const auto& g : b.generators) probes.push_back(g.pos);
    for (const auto& p : probes) {
        double va = a.eval(p), vb = b.eval(p);
        if (va == kNegInf && vb == kNegInf) continue;
        if (std::abs(va - vb) > tol) return false;
    }
    return true;
}

} // namespace decilim
