#include "toric/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

int affine_rank(const std::vector<IntVec>& pts, const std::vector<int>& ids) {
    if (ids.size() <= 1) return 0;
    IntMat rows;
    for (size_t i = 1; i < ids.size(); ++i) {
        IntVec d(pts[ids[0]].size());
        for (size_t c = 0; c < d.size(); ++c) d[c] = pts[ids[i]][c] - pts[ids[0]][c];
        rows.push_back(std::move(d));
    }
    return rank_int(rows);
}

IntVec cross3i(const IntVec& u, const IntVec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

LatticePolytope::LatticePolytope(int rank, std::vector<IntVec> vertices,
                                 std::optional<std::vector<FacetPair>> facets_in)
    : rank_(rank) {
    if (rank < 1 || rank > 3)
        throw SchemaError("polytope: ambient rank must be between 1 and 3");
    std::set<IntVec> seen;
    for (auto& v : vertices) {
        if (static_cast<int>(v.size()) != rank)
            throw SchemaError("polytope: vertex arity mismatch");
        if (seen.insert(v).second) vertices_.push_back(v);
    }
    if (vertices_.empty()) throw SchemaError("polytope: no vertices");

    std::vector<int> all(vertices_.size());
    std::iota(all.begin(), all.end(), 0);
    dim_ = affine_rank(vertices_, all);

    if (dim_ == 0) {  // single lattice point
        faces_.push_back(FaceRecord{{0}, 0, ConeData::zero_cone(rank_)});
        return;
    }
    if (dim_ != rank_)
        throw SchemaError("polytope: must be full-dimensional in its ambient lattice");

    // Candidate facet normals from vertex subsets.
    std::set<std::pair<IntVec, Rat>> found;
    auto try_normal = [&](IntVec h) {
        if (is_zero_vec(h)) return;
        h = primitive_vector(h);
        for (int sgn = 0; sgn < 2; ++sgn) {
            Rat c;
            bool first = true;
            for (const auto& v : vertices_) {
                Rat s = Rat(dot(h, v));
                if (first || s < c) c = s;
                first = false;
            }
            std::vector<int> eq;
            for (size_t i = 0; i < vertices_.size(); ++i)
                if (Rat(dot(h, vertices_[i])) == c) eq.push_back(static_cast<int>(i));
            if (affine_rank(vertices_, eq) == rank_ - 1) found.insert({h, c});
            for (auto& x : h) x = -x;
        }
    };
    size_t nv = vertices_.size();
    if (rank_ == 1) {
        try_normal({Int(1)});
    } else if (rank_ == 2) {
        for (size_t i = 0; i < nv; ++i)
            for (size_t j = i + 1; j < nv; ++j) {
                IntVec d{vertices_[j][0] - vertices_[i][0], vertices_[j][1] - vertices_[i][1]};
                try_normal({-d[1], d[0]});
            }
    } else {
        for (size_t i = 0; i < nv; ++i)
            for (size_t j = i + 1; j < nv; ++j)
                for (size_t k = j + 1; k < nv; ++k) {
                    IntVec a(3), b(3);
                    for (int c = 0; c < 3; ++c) {
                        a[c] = vertices_[j][c] - vertices_[i][c];
                        b[c] = vertices_[k][c] - vertices_[i][c];
                    }
                    try_normal(cross3i(a, b));
                }
    }
    for (auto& f : found) facets_.push_back(f);

    if (facets_in) {
        // The supplied facets must agree with the recomputed ones.
        std::set<std::pair<IntVec, Rat>> given;
        for (const auto& [h, c] : *facets_in) {
            if (static_cast<int>(h.size()) != rank_)
                throw SchemaError("polytope: facet normal arity mismatch");
            if (is_zero_vec(h)) throw SchemaError("polytope: zero facet normal");
            given.insert({primitive_vector(h), c});
        }
        if (given != found)
            throw SchemaError("polytope: supplied facets do not describe the vertex hull");
    }

    // Drop input points that are not extreme: a vertex lies on facets whose
    // normals span the full space.
    {
        std::vector<IntVec> keep;
        for (size_t i = 0; i < vertices_.size(); ++i) {
            IntMat normals;
            for (const auto& [h, c] : facets_)
                if (Rat(dot(h, vertices_[i])) == c) normals.push_back(h);
            if (!normals.empty() && rank_int(normals) == rank_) keep.push_back(vertices_[i]);
        }
        if (keep.size() != vertices_.size()) {
            // Re-run with the reduced vertex set (facets are unchanged).
            *this = LatticePolytope(rank_, keep, std::nullopt);
            return;
        }
    }

    // Face lattice: close the facet equality sets under intersection.
    std::set<std::vector<int>> face_sets;
    face_sets.insert(all);
    std::vector<std::vector<int>> facet_sets;
    for (const auto& [h, c] : facets_) {
        std::vector<int> eq;
        for (size_t i = 0; i < vertices_.size(); ++i)
            if (Rat(dot(h, vertices_[i])) == c) eq.push_back(static_cast<int>(i));
        face_sets.insert(eq);
        facet_sets.push_back(eq);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(face_sets.begin(), face_sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(), std::back_inserter(common));
                if (!common.empty() && face_sets.insert(common).second) grew = true;
            }
    }

    for (const auto& fs : face_sets) {
        std::vector<IntVec> normals;
        for (size_t fi = 0; fi < facets_.size(); ++fi) {
            if (std::includes(facet_sets[fi].begin(), facet_sets[fi].end(), fs.begin(),
                              fs.end()))
                normals.push_back(facets_[fi].first);
        }
        faces_.push_back(
            FaceRecord{fs, affine_rank(vertices_, fs), ConeData(rank_, normals)});
    }
    std::sort(faces_.begin(), faces_.end(), [](const FaceRecord& a, const FaceRecord& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
}

ConeData LatticePolytope::tangent_cone(const FaceRecord& f) const {
    std::vector<IntVec> gens;
    const IntVec& v0 = vertices_[f.vertex_ids[0]];
    for (size_t i = 0; i < vertices_.size(); ++i) {
        IntVec d(rank_);
        for (int c = 0; c < rank_; ++c) d[c] = vertices_[i][c] - v0[c];
        if (!is_zero_vec(d)) gens.push_back(d);
    }
    for (int vid : f.vertex_ids) {
        IntVec d(rank_);
        for (int c = 0; c < rank_; ++c) d[c] = v0[c] - vertices_[vid][c];
        if (!is_zero_vec(d)) gens.push_back(d);
    }
    return ConeData(rank_, gens);
}

bool LatticePolytope::contains(const IntVec& x) const {
    if (dim_ == 0) return x == vertices_[0];
    for (const auto& [h, c] : facets_)
        if (Rat(dot(h, x)) < c) return false;
    return true;
}

std::vector<IntVec> enumerate_lattice_points(const LatticePolytope& p, size_t budget) {
    int n = p.rank();
    IntVec lo = p.vertices()[0], hi = p.vertices()[0];
    for (const auto& v : p.vertices())
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    Int cells = 1;
    for (int i = 0; i < n; ++i) cells *= (hi[i] - lo[i] + 1);
    if (cells > Int(budget))
        throw std::runtime_error("enumerate_lattice_points: enumeration budget exceeded");
    std::vector<IntVec> out;
    IntVec x = lo;
    for (;;) {
        if (p.contains(x)) out.push_back(x);
        int pos = 0;
        while (pos < n) {
            ++x[pos];
            if (x[pos] <= hi[pos]) break;
            x[pos] = lo[pos];
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

PolySeries exp_sum_series(const LatticePolytope& p, int order) {
    PolySeries out(p.rank(), order);
    for (const auto& x : enumerate_lattice_points(p))
        out = out + exp_linear(LinearForm(x), order);
    return out;
}

namespace {

// Integer 2D coordinates of the face's vertices inside lin(F).
std::vector<IntVec> face_plane_coords(const LatticePolytope& p, const std::vector<int>& ids) {
    const IntVec& v0 = p.vertices()[ids[0]];
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < ids.size(); ++i) {
        IntVec d(p.rank());
        for (int c = 0; c < p.rank(); ++c) d[c] = p.vertices()[ids[i]][c] - v0[c];
        diffs.push_back(std::move(d));
    }
    if (p.rank() == 2) return diffs;  // identity chart
    SmithForm s = smith_normal_form(mat_from_cols(diffs));
    // Coordinates = first two entries of u * d.
    std::vector<IntVec> out;
    for (const auto& d : diffs) {
        IntVec y = mat_vec(s.u, d);
        out.push_back({y[0], y[1]});
    }
    return out;
}

// Cyclic order of polygon vertex ids around the centroid.
std::vector<int> polygon_cycle(const LatticePolytope& p, const std::vector<int>& ids) {
    std::vector<IntVec> plane = face_plane_coords(p, ids);  // for ids[1..]
    std::vector<std::pair<RatVec, int>> pts;
    pts.push_back({{Rat(0), Rat(0)}, ids[0]});
    for (size_t i = 0; i < plane.size(); ++i)
        pts.push_back({{Rat(plane[i][0]), Rat(plane[i][1])}, ids[i + 1]});
    RatVec ctr{0, 0};
    for (const auto& [q, id] : pts) {
        ctr[0] += q[0];
        ctr[1] += q[1];
    }
    ctr[0] /= Rat(pts.size());
    ctr[1] /= Rat(pts.size());
    auto angle_less = [&](const std::pair<RatVec, int>& a, const std::pair<RatVec, int>& b) {
        Rat ax = a.first[0] - ctr[0], ay = a.first[1] - ctr[1];
        Rat bx = b.first[0] - ctr[0], by = b.first[1] - ctr[1];
        bool ua = ay > 0 || (ay == 0 && ax > 0);
        bool ub = by > 0 || (by == 0 && bx > 0);
        if (ua != ub) return ua;
        return ax * by - ay * bx > 0;
    };
    std::sort(pts.begin(), pts.end(), angle_less);
    std::vector<int> cycle;
    for (const auto& [q, id] : pts) cycle.push_back(id);
    return cycle;
}

// Triangulation of a face into simplices given by vertex ids.
std::vector<std::vector<int>> triangulate_face(const LatticePolytope& p, const FaceRecord& f) {
    if (f.dim <= 1) return {f.vertex_ids};
    if (f.dim == 2) {
        std::vector<int> cyc = polygon_cycle(p, f.vertex_ids);
        std::vector<std::vector<int>> out;
        for (size_t i = 1; i + 1 < cyc.size(); ++i)
            out.push_back({cyc[0], cyc[i], cyc[i + 1]});
        return out;
    }
    // dim 3: cone from the first vertex over the triangulated far facets.
    int apex = f.vertex_ids[0];
    std::vector<std::vector<int>> out;
    for (const auto& g : p.faces()) {
        if (g.dim != 2) continue;
        if (std::binary_search(g.vertex_ids.begin(), g.vertex_ids.end(), apex)) continue;
        FaceRecord facet = g;
        for (auto& tri : triangulate_face(p, facet)) {
            tri.insert(tri.begin(), apex);
            out.push_back(tri);
        }
    }
    return out;
}

// d! * nvol of the simplex: gcd of the maximal minors of the edge matrix.
Int normalized_volume_factor(const LatticePolytope& p, const std::vector<int>& simplex) {
    if (simplex.size() <= 1) return 1;
    IntMat edges;
    const IntVec& v0 = p.vertices()[simplex[0]];
    for (size_t i = 1; i < simplex.size(); ++i) {
        IntVec d(p.rank());
        for (int c = 0; c < p.rank(); ++c) d[c] = p.vertices()[simplex[i]][c] - v0[c];
        edges.push_back(std::move(d));
    }
    SmithForm s = smith_normal_form(edges);
    Int m = 1;
    for (const auto& d : s.invariants) m *= d;
    return m;
}

}  // namespace

PolySeries exp_integral_series(const LatticePolytope& p, const FaceRecord& f, int order) {
    int n = p.rank();
    int d = f.dim;
    PolySeries out(n, order);
    for (const auto& simplex : triangulate_face(p, f)) {
        Int dvol = normalized_volume_factor(p, simplex);  // = d! * nvol
        // Complete homogeneous symmetric polynomials of <xi, v_i>.
        std::vector<PolySeries> h(order + 1, PolySeries(n, order));
        h[0] = PolySeries::constant(n, 1);
        for (int vid : simplex) {
            PolySeries a = PolySeries::from_linear(LinearForm(p.vertices()[vid]));
            std::vector<PolySeries> nh(order + 1, PolySeries(n, order));
            for (int k = 0; k <= order; ++k) {
                PolySeries pow = PolySeries::constant(n, 1);
                for (int t = 0; t <= k; ++t) {
                    if (!h[k - t].is_zero())
                        nh[k] = nh[k] + (h[k - t] * pow).truncated(order).with_order(order);
                    if (t < k) pow = (pow * a).truncated(order);
                }
            }
            h = std::move(nh);
        }
        // Hermite-Genocchi: integral over the simplex = d!*nvol * sum_k h_k/(k+d)!.
        Rat fact = 1;
        for (int i = 1; i <= d; ++i) fact *= i;  // (0+d)!
        PolySeries contrib(n, order);
        for (int k = 0; k <= order; ++k) {
            contrib = contrib + h[k] * (Rat(dvol) / fact);
            fact *= (k + d + 1);
        }
        out = out + contrib;
    }
    return out.truncated(order).with_order(order);
}

MeromorphicGerm cone_germ_I(const ConeData& k) {
    int n = k.rank();
    if (k.contains_line()) return MeromorphicGerm::zero(n);
    if (k.dim() == 0) return MeromorphicGerm::from_series(PolySeries::constant(n, 1));
    if (!k.is_smooth())
        throw std::invalid_argument("cone_germ_I: cone is singular");
    int g = static_cast<int>(k.gens().size());
    PolySeries num = PolySeries::constant(n, g % 2 == 0 ? 1 : -1);
    std::vector<LinearForm> dens;
    for (const auto& v : k.gens()) dens.push_back(LinearForm(v));
    return MeromorphicGerm(std::move(num), std::move(dens));
}

MeromorphicGerm cone_germ_S(const ConeData& k, int order) {
    int n = k.rank();
    if (k.contains_line()) return MeromorphicGerm::zero(n);
    if (k.dim() == 0) return MeromorphicGerm::from_series(PolySeries::constant(n, 1));
    if (!k.is_smooth())
        throw std::invalid_argument("cone_germ_S: cone is singular");
    int g = static_cast<int>(k.gens().size());
    int num_order = order + g;
    // 1/(1 - e^{m}) = -u_inv(m)/m with u_inv(z) = z/(e^z - 1).
    PolySeries inv = u_inverse_1var(num_order);
    PolySeries num = PolySeries::constant(n, g % 2 == 0 ? 1 : -1);
    std::vector<LinearForm> dens;
    for (const auto& v : k.gens()) {
        num = num * compose_1var(inv, LinearForm(v));
        dens.push_back(LinearForm(v));
    }
    return MeromorphicGerm(std::move(num), std::move(dens));
}

PolySeries euler_maclaurin_series(const LatticePolytope& p, const ComplementMap& psi,
                                  int order) {
    int n = p.rank();
    if (p.dim() == 0)  // a single lattice point sums to its own exponential
        return exp_linear(LinearForm(p.vertices()[0]), order);
    ToddEngine engine(psi, order);
    PolySeries out(n, order);
    for (const auto& f : p.faces()) {
        PolySeries r = engine.r_general(f.normal_cone);
        out = out + (r.negate_vars() * exp_integral_series(p, f, order)).truncated(order);
    }
    return out.with_order(order);
}

CountResult count_lattice_points(const LatticePolytope& p, const ComplementMap& psi) {
    PolySeries em = euler_maclaurin_series(p, psi, 2);
    Rat c = em.constant_term();
    Int enumerated = Int(enumerate_lattice_points(p).size());
    if (!is_integer(c) || numerator(c) != enumerated)
        throw VerificationError("count_lattice_points: interpolator constant " +
                                rat_to_string(c) + " != enumeration " +
                                enumerated.str());
    return CountResult{numerator(c), c, enumerated};
}

}  // namespace toric
