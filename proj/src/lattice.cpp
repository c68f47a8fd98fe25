#include "toric/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

LatticeContext::LatticeContext(int r) : rank(r) {
    if (r < 1) throw std::invalid_argument("LatticeContext: rank must be >= 1");
}

// -- small exact feasibility ---------------------------------------------------

namespace {

void combinations(int k, int size, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> idx(size);
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == size) return visit(idx);
        for (int i = start; i <= k - (size - depth); ++i) {
            idx[depth] = i;
            if (rec(i + 1, depth + 1)) return true;
        }
        return false;
    };
    if (size == 0) {
        visit(idx);
        return;
    }
    rec(0, 0);
}

// Does {lam >= 0 : A lam = b} have a solution?  Checks basic solutions on
// linearly independent column subsets; sound and complete for feasibility.
bool exists_nonneg_solution(const RatMat& a, const RatVec& b) {
    if (std::all_of(b.begin(), b.end(), [](const Rat& x) { return x == 0; })) return true;
    if (a.empty() || a[0].empty()) return false;
    int m = static_cast<int>(a.size());
    int k = static_cast<int>(a[0].size());
    int max_size = std::min(k, m);
    bool found = false;
    for (int s = 1; s <= max_size && !found; ++s) {
        combinations(k, s, [&](const std::vector<int>& cols) {
            RatMat sub(m, RatVec(s));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < s; ++j) sub[i][j] = a[i][cols[j]];
            if (rank_rat(sub) != s) return false;
            auto sol = solve_rat(sub, b);
            if (!sol) return false;
            for (const Rat& x : *sol)
                if (x < 0) return false;
            found = true;
            return true;
        });
    }
    return found;
}

Int cross2(const IntVec& u, const IntVec& v) { return u[0] * v[1] - u[1] * v[0]; }

// Angular classification of a set of distinct primitive 2D directions.
struct Hull2D {
    enum Type { kZero, kRay, kLine, kPointed, kHalfPlane, kPlane } type;
    IntVec a, b;      // extremes (pointed: cone from a ccw to b; halfplane: b = -a)
    IntVec interior;  // a direction off the boundary line (halfplane only)
};

Hull2D hull_2d(std::vector<IntVec> dirs) {
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    Hull2D h;
    if (dirs.empty()) {
        h.type = Hull2D::kZero;
        return h;
    }
    if (dirs.size() == 1) {
        h.type = Hull2D::kRay;
        h.a = h.b = dirs[0];
        return h;
    }
    if (dirs.size() == 2 && cross2(dirs[0], dirs[1]) == 0) {
        h.type = Hull2D::kLine;
        h.a = dirs[0];
        h.b = dirs[1];
        return h;
    }
    auto upper = [](const IntVec& u) { return u[1] > 0 || (u[1] == 0 && u[0] > 0); };
    std::sort(dirs.begin(), dirs.end(), [&](const IntVec& u, const IntVec& v) {
        if (upper(u) != upper(v)) return upper(u);
        return cross2(u, v) > 0;
    });
    size_t t = dirs.size();
    for (size_t i = 0; i < t; ++i) {
        const IntVec& u = dirs[i];
        const IntVec& v = dirs[(i + 1) % t];
        Int c = cross2(u, v);
        if (c < 0) {  // gap > pi: everything lies ccw from v around to u
            h.type = Hull2D::kPointed;
            h.a = v;
            h.b = u;
            return h;
        }
        if (c == 0 && i + 1 != t) {  // adjacent opposite pair inside the sorted list
            h.type = Hull2D::kHalfPlane;
            h.a = v;
            h.b = u;
            for (const auto& w : dirs)
                if (cross2(w, u) != 0) { h.interior = w; break; }
            return h;
        }
    }
    // Wraparound gap exactly pi?
    if (cross2(dirs[t - 1], dirs[0]) == 0) {
        h.type = Hull2D::kHalfPlane;
        h.a = dirs[0];
        h.b = dirs[t - 1];
        for (const auto& w : dirs)
            if (cross2(w, dirs[0]) != 0) { h.interior = w; break; }
        return h;
    }
    h.type = Hull2D::kPlane;
    return h;
}

RatVec perp2(const IntVec& v) { return {Rat(-v[1]), Rat(v[0])}; }

IntVec cross3(const IntVec& u, const IntVec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

// -- ConeData ------------------------------------------------------------------

ConeData::ConeData(int rank, std::vector<IntVec> generators) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("ConeData: rank must be >= 1");
    std::set<IntVec> seen;
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != rank)
            throw std::invalid_argument("ConeData: generator arity mismatch");
        IntVec p = primitive_vector(g);  // throws on the zero vector
        if (seen.insert(p).second) gens_.push_back(std::move(p));
    }
    dim_ = gens_.empty() ? 0 : rank_int(mat_from_rows(gens_));
    simplicial_ = static_cast<int>(gens_.size()) == dim_;
}

bool ConeData::is_pointed() const {
    if (simplicial_) return true;  // independent generators
    // Non-pointed iff some nontrivial nonnegative combination of the
    // generators vanishes: feasibility of {G lam = 0, sum lam = 1, lam >= 0}.
    int k = static_cast<int>(gens_.size());
    RatMat a(rank_ + 1, RatVec(k));
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < rank_; ++i) a[i][j] = Rat(gens_[j][i]);
        a[rank_][j] = 1;
    }
    RatVec b(rank_ + 1, 0);
    b[rank_] = 1;
    return !exists_nonneg_solution(a, b);
}

bool ConeData::is_smooth() const {
    if (!simplicial_) return false;
    return multiplicity() == 1;
}

Int ConeData::multiplicity() const {
    if (!simplicial_)
        throw std::invalid_argument("multiplicity: cone is not simplicial");
    if (gens_.empty()) return 1;
    SmithForm s = smith_normal_form(mat_from_cols(gens_));
    Int m = 1;
    for (const Int& d : s.invariants) m *= d;
    return m;
}

bool ConeData::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != rank_)
        throw std::invalid_argument("ConeData::contains: arity mismatch");
    if (std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; })) return true;
    if (gens_.empty()) return false;
    RatMat cols(rank_, RatVec(gens_.size()));
    for (size_t j = 0; j < gens_.size(); ++j)
        for (int i = 0; i < rank_; ++i) cols[i][j] = Rat(gens_[j][i]);
    if (simplicial_) {
        auto lam = solve_rat(cols, x);
        if (!lam) return false;
        return std::all_of(lam->begin(), lam->end(), [](const Rat& c) { return c >= 0; });
    }
    return exists_nonneg_solution(cols, x);
}

std::vector<ConeData::Facet> ConeData::facets() const {
    if (!is_pointed())
        throw std::invalid_argument("facets: cone is not pointed");
    std::vector<Facet> out;
    if (dim_ == 0) return out;
    if (simplicial_) {
        // Row i of (B^T B)^{-1} B^T is the dual functional of generator i.
        RatMat bt = to_rat(mat_from_rows(gens_));         // k x n
        RatMat b = transpose(bt);                          // n x k
        RatMat gram_inv = *invert_rat(mat_mul(bt, b));     // k x k
        RatMat p = mat_mul(gram_inv, bt);                  // k x n
        int k = static_cast<int>(gens_.size());
        for (int i = 0; i < k; ++i) {
            Facet f;
            f.normal = p[i];
            for (int j = 0; j < k; ++j)
                if (j != i) f.gen_indices.push_back(j);
            out.push_back(std::move(f));
        }
        return out;
    }
    if (rank_ != 3 || dim_ != 3)
        throw std::invalid_argument(
            "facets: non-simplicial cones supported only in full dimension <= 3");
    int k = static_cast<int>(gens_.size());
    std::set<std::vector<int>> seen;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            IntVec h = cross3(gens_[i], gens_[j]);
            if (is_zero_vec(h)) continue;
            bool pos = true, neg = true;
            for (const auto& g : gens_) {
                Int d = dot(h, g);
                if (d < 0) pos = false;
                if (d > 0) neg = false;
            }
            if (!pos && !neg) continue;
            if (neg)
                for (auto& c : h) c = -c;
            h = primitive_vector(h);
            std::vector<int> eq;
            for (int l = 0; l < k; ++l)
                if (dot(h, gens_[l]) == 0) eq.push_back(l);
            if (!seen.insert(eq).second) continue;
            if (eq.size() != 2)
                throw std::invalid_argument(
                    "facets: non-simplicial cone has a non-extreme generator");
            out.push_back(Facet{to_rat(h), eq});
        }
    }
    // Every generator must be extreme, i.e. lie on at least two facets.
    std::vector<int> hits(k, 0);
    for (const auto& f : out)
        for (int g : f.gen_indices) ++hits[g];
    for (int g = 0; g < k; ++g)
        if (hits[g] < 2)
            throw std::invalid_argument(
                "facets: non-simplicial cone has a non-extreme generator");
    return out;
}

std::vector<std::vector<int>> ConeData::proper_faces() const {
    std::vector<std::vector<int>> out;
    int k = static_cast<int>(gens_.size());
    if (simplicial_) {
        for (int mask = 0; mask < (1 << k) - (k ? 1 : 0); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) sub.push_back(i);
            out.push_back(std::move(sub));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }
    auto fs = facets();
    std::set<std::vector<int>> faces;
    faces.insert(std::vector<int>{});
    for (const auto& f : fs) {
        faces.insert(f.gen_indices);
        for (int g : f.gen_indices) faces.insert({g});
    }
    out.assign(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

// Saturated basis of the span lattice plus a unimodular completion, packaged
// as the columns of u_inv (and the projection matrix u).
struct Saturation {
    int n = 0, r = 0;
    IntMat u, u_inv;
};

Saturation saturate(int rank, const std::vector<IntVec>& gens) {
    Saturation s;
    s.n = rank;
    if (gens.empty()) {
        s.r = 0;
        s.u = identity_int(rank);
        s.u_inv = identity_int(rank);
        return s;
    }
    SmithForm f = smith_normal_form(mat_from_cols(gens));
    s.r = f.rank;
    s.u = f.u;
    s.u_inv = f.u_inv;
    return s;
}

std::vector<IntVec> saturation_basis(const Saturation& s) {
    std::vector<IntVec> basis;
    for (int j = 0; j < s.r; ++j) {
        IntVec col(s.n);
        for (int i = 0; i < s.n; ++i) col[i] = s.u_inv[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

// Integer coordinates of v in the saturated basis (v must lie in the span).
std::optional<IntVec> span_coords(const Saturation& s, const IntVec& v) {
    IntVec y = mat_vec(s.u, v);
    for (int i = s.r; i < s.n; ++i)
        if (y[i] != 0) return std::nullopt;
    return IntVec(y.begin(), y.begin() + s.r);
}

// Ambient integer covector restricting to w on the basis and to 0 on the
// completion: u^T (w | 0).
IntVec lift_functional(const Saturation& s, const IntVec& w) {
    IntVec ext(s.n, 0);
    for (int i = 0; i < s.r; ++i) ext[i] = w[i];
    return mat_vec(transpose(s.u), ext);
}

}  // namespace

ConeData::HRep ConeData::hrep() const {
    HRep h;
    if (dim_ == 0) {
        h.eqs = identity_rat(rank_);
        return h;
    }
    if (simplicial_) {
        RatMat bt = to_rat(mat_from_rows(gens_));      // k x n
        RatMat b = transpose(bt);                      // n x k
        RatMat p = mat_mul(*invert_rat(mat_mul(bt, b)), bt);  // k x n
        h.ineqs = p;
        // Span: rows of I - B P vanish exactly on span(B).
        RatMat bp = mat_mul(b, p);
        for (int i = 0; i < rank_; ++i) {
            RatVec row(rank_);
            bool nonzero = false;
            for (int j = 0; j < rank_; ++j) {
                row[j] = (i == j ? Rat(1) : Rat(0)) - bp[i][j];
                if (row[j] != 0) nonzero = true;
            }
            if (nonzero) h.eqs.push_back(std::move(row));
        }
        return h;
    }
    if (dim_ == 3 && rank_ == 3) {
        for (const auto& f : facets()) h.ineqs.push_back(f.normal);
        return h;
    }
    if (dim_ > 3)
        throw std::invalid_argument("hrep: unsupported cone shape");

    // Lower-dimensional, possibly non-pointed: work inside the span.
    Saturation s = saturate(rank_, gens_);
    std::vector<IntVec> coords;
    for (const auto& g : gens_) {
        auto c = span_coords(s, g);
        coords.push_back(primitive_vector(*c));
    }
    // Span equations.
    {
        RatMat rows = to_rat(mat_from_rows(gens_));
        for (const auto& v : nullspace_rat(rows)) h.eqs.push_back(v);
    }
    if (dim_ == 1) {
        bool pos = false, neg = false;
        for (const auto& c : coords) (c[0] > 0 ? pos : neg) = true;
        if (pos != neg) {  // a ray, not a line
            IntVec w{coords[0][0] > 0 ? Int(1) : Int(-1)};
            h.ineqs.push_back(to_rat(lift_functional(s, w)));
        }
        return h;
    }
    // dim 2 inside the span
    Hull2D hull = hull_2d(coords);
    auto push_normal = [&](RatVec w2) {
        Int l = lcm(denominator(w2[0]), denominator(w2[1]));
        IntVec wi{numerator(w2[0]) * (l / denominator(w2[0])),
                  numerator(w2[1]) * (l / denominator(w2[1]))};
        h.ineqs.push_back(to_rat(lift_functional(s, wi)));
    };
    switch (hull.type) {
        case Hull2D::kPointed: {
            RatVec na = perp2(hull.a);
            if (dot(na, to_rat(hull.b)) < 0)
                for (auto& c : na) c = -c;
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.a)) < 0)
                for (auto& c : nb) c = -c;
            push_normal(na);
            push_normal(nb);
            break;
        }
        case Hull2D::kHalfPlane: {
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.interior)) < 0)
                for (auto& c : nb) c = -c;
            push_normal(nb);
            break;
        }
        case Hull2D::kPlane:
            break;
        default:
            throw std::logic_error("hrep: inconsistent 2D hull");
    }
    return h;
}

std::string ConeData::key() const {
    std::vector<IntVec> sorted = gens_;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << rank_ << ":";
    for (const auto& g : sorted) {
        os << "[";
        for (const auto& c : g) os << c << ",";
        os << "]";
    }
    return os.str();
}

bool ConeData::same_cone(const ConeData& o) const { return key() == o.key(); }

// -- dual cone -----------------------------------------------------------------

ConeData dual_cone(const ConeData& sigma) {
    int n = sigma.rank(), k = sigma.dim();
    if (k == 0) {
        std::vector<IntVec> gens;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            gens.push_back(e);
            e[i] = -1;
            gens.push_back(e);
        }
        return ConeData(n, gens);
    }
    if (k == n && sigma.simplicial()) {
        RatMat b(n, RatVec(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) b[i][j] = Rat(sigma.gens()[j][i]);
        RatMat binv = *invert_rat(b);
        std::vector<IntVec> gens;
        for (int i = 0; i < n; ++i) gens.push_back(rat_dir_to_int(binv[i]));
        return ConeData(n, gens);
    }
    if (n > 3)
        throw std::invalid_argument("dual_cone: unsupported dimension/shape combination");

    if (k == n) {  // full-dimensional, non-simplicial
        if (n == 3) {
            std::vector<IntVec> gens;
            for (const auto& f : sigma.facets()) gens.push_back(rat_dir_to_int(f.normal));
            return ConeData(n, gens);
        }
        // n == 2
        Hull2D hull = hull_2d(sigma.gens());
        std::vector<IntVec> gens;
        if (hull.type == Hull2D::kPointed) {
            RatVec na = perp2(hull.a);
            if (dot(na, to_rat(hull.b)) < 0)
                for (auto& c : na) c = -c;
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.a)) < 0)
                for (auto& c : nb) c = -c;
            gens = {rat_dir_to_int(na), rat_dir_to_int(nb)};
        } else if (hull.type == Hull2D::kHalfPlane) {
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.interior)) < 0)
                for (auto& c : nb) c = -c;
            gens = {rat_dir_to_int(nb)};
        }  // kPlane: dual is {0}
        return ConeData(n, gens);
    }

    // Lower-dimensional: dual inside the span, lifted, plus the perp lines.
    Saturation s = saturate(n, sigma.gens());
    std::vector<IntVec> coords;
    for (const auto& g : sigma.gens()) coords.push_back(primitive_vector(*span_coords(s, g)));
    std::vector<IntVec> in_span;  // functionals in span coordinates
    if (k == 1) {
        bool pos = false, neg = false;
        for (const auto& c : coords) (c[0] > 0 ? pos : neg) = true;
        if (pos != neg) in_span.push_back({pos ? Int(1) : Int(-1)});
    } else {  // k == 2
        Hull2D hull = hull_2d(coords);
        auto as_int = [](RatVec v) { return rat_dir_to_int(v); };
        if (hull.type == Hull2D::kPointed) {
            RatVec na = perp2(hull.a);
            if (dot(na, to_rat(hull.b)) < 0)
                for (auto& c : na) c = -c;
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.a)) < 0)
                for (auto& c : nb) c = -c;
            in_span.push_back(as_int(na));
            in_span.push_back(as_int(nb));
        } else if (hull.type == Hull2D::kRay) {
            in_span.push_back(hull.a);
            IntVec p = rat_dir_to_int(perp2(hull.a));
            in_span.push_back(p);
            for (auto& c : p) c = -c;
            in_span.push_back(p);
        } else if (hull.type == Hull2D::kHalfPlane) {
            RatVec nb = perp2(hull.b);
            if (dot(nb, to_rat(hull.interior)) < 0)
                for (auto& c : nb) c = -c;
            in_span.push_back(as_int(nb));
        }  // kLine, kPlane: nothing
    }
    std::vector<IntVec> gens;
    for (const auto& w : in_span) gens.push_back(primitive_vector(lift_functional(s, w)));
    for (const auto& l : integer_kernel(mat_from_rows(sigma.gens()))) {
        gens.push_back(l);
        IntVec neg = l;
        for (auto& c : neg) c = -c;
        gens.push_back(neg);
    }
    return ConeData(n, gens);
}

// -- subdivision ---------------------------------------------------------------

std::vector<ConeData> subdivide_to_smooth(const ConeData& sigma) {
    if (!sigma.is_pointed())
        throw std::invalid_argument("subdivide_to_smooth: cone is not pointed");
    if (sigma.is_smooth()) return {sigma};

    if (!sigma.simplicial()) {
        // Triangulate from the first generator: cone over the facets that
        // do not contain it.
        std::vector<ConeData> out;
        for (const auto& f : sigma.facets()) {
            if (std::find(f.gen_indices.begin(), f.gen_indices.end(), 0) !=
                f.gen_indices.end())
                continue;
            std::vector<IntVec> gens{sigma.gens()[0]};
            for (int i : f.gen_indices) gens.push_back(sigma.gens()[i]);
            for (auto& piece : subdivide_to_smooth(ConeData(sigma.rank(), gens)))
                out.push_back(std::move(piece));
        }
        return out;
    }

    // Singular simplicial: stellar subdivision at the fundamental-domain
    // point with lexicographically minimal nonzero fractional coordinates.
    int k = sigma.dim();
    Saturation s = saturate(sigma.rank(), sigma.gens());
    IntMat a(k, IntVec(k));  // generators in the saturated basis, as columns
    for (int j = 0; j < k; ++j) {
        IntVec c = *span_coords(s, sigma.gens()[j]);
        for (int i = 0; i < k; ++i) a[i][j] = c[i];
    }
    RatMat a_inv = *invert_rat(to_rat(a));
    SmithForm f = smith_normal_form(a);

    std::optional<RatVec> best_t;
    for (IntVec c(k, 0);;) {
        // Representative of the coset, then its fractional coordinates.
        IntVec x0 = mat_vec(f.u_inv, c);
        RatVec t = mat_vec(a_inv, to_rat(x0));
        for (auto& ti : t) ti -= Rat(rat_floor(ti));
        bool nonzero = std::any_of(t.begin(), t.end(), [](const Rat& q) { return q != 0; });
        if (nonzero && (!best_t || t < *best_t)) best_t = t;
        // Odometer over prod [0, d_i).
        int pos = 0;
        while (pos < k) {
            ++c[pos];
            if (c[pos] < f.invariants[pos]) break;
            c[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    if (!best_t) throw std::logic_error("subdivide_to_smooth: singular cone without interior point");

    // w = sum t_i g_i, an integer point of the parallelepiped.
    IntVec w(sigma.rank(), 0);
    {
        RatVec acc(sigma.rank(), 0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < sigma.rank(); ++i)
                acc[i] += (*best_t)[j] * Rat(sigma.gens()[j][i]);
        for (int i = 0; i < sigma.rank(); ++i) {
            if (!is_integer(acc[i])) throw std::logic_error("subdivide_to_smooth: non-lattice point");
            w[i] = numerator(acc[i]);
        }
    }
    w = primitive_vector(w);

    std::vector<ConeData> out;
    for (int i = 0; i < k; ++i) {
        if ((*best_t)[i] == 0) continue;
        std::vector<IntVec> gens = sigma.gens();
        gens[i] = w;
        for (auto& piece : subdivide_to_smooth(ConeData(sigma.rank(), gens)))
            out.push_back(std::move(piece));
    }
    return out;
}

// -- quotient lattice ------------------------------------------------------------

QuotientLattice::QuotientLattice(const ConeData& sigma) : n_(sigma.rank()) {
    Saturation s = saturate(n_, sigma.gens());
    r_ = s.r;
    u_ = s.u;
    u_inv_ = s.u_inv;
    sub_basis_ = saturation_basis(s);
}

IntVec QuotientLattice::project(const IntVec& x) const {
    IntVec y = mat_vec(u_, x);
    return IntVec(y.begin() + r_, y.end());
}

IntVec QuotientLattice::lift(const IntVec& z) const {
    IntVec ext(n_, 0);
    for (int i = r_; i < n_; ++i) ext[i] = z[i - r_];
    return mat_vec(u_inv_, ext);
}

NormalGenerator normal_generator(const ConeData& tau, const ConeData& sigma) {
    if (tau.rank() != sigma.rank())
        throw std::invalid_argument("normal_generator: rank mismatch");
    if (tau.dim() != sigma.dim() + 1)
        throw std::invalid_argument("normal_generator: sigma is not a maximal proper face of tau");
    std::set<IntVec> sigma_gens(sigma.gens().begin(), sigma.gens().end());
    for (const auto& g : sigma.gens()) {
        bool found = false;
        for (const auto& h : tau.gens())
            if (g == h) { found = true; break; }
        if (!found)
            throw std::invalid_argument("normal_generator: sigma is not a face of tau");
    }
    QuotientLattice q(sigma);
    std::optional<IntVec> dir;
    for (const auto& g : tau.gens()) {
        if (sigma_gens.count(g)) continue;
        IntVec z = q.project(g);
        if (is_zero_vec(z))
            throw std::invalid_argument("normal_generator: generator collapses into sigma");
        IntVec p = primitive_vector(z);
        // All residual generators must map into the same ray.
        Int num = 0, den = 0;
        for (size_t i = 0; i < z.size(); ++i)
            if (p[i] != 0) { num = z[i]; den = p[i]; break; }
        if (num * den <= 0 || z != [&] {
                IntVec scaled(p.size());
                for (size_t i = 0; i < p.size(); ++i) scaled[i] = p[i] * (num / den);
                return scaled;
            }())
            throw std::invalid_argument("normal_generator: image of tau is not a single ray");
        if (!dir) dir = p;
        else if (*dir != p)
            throw std::invalid_argument("normal_generator: image of tau is not a single ray");
    }
    if (!dir) throw std::invalid_argument("normal_generator: tau equals sigma");
    return NormalGenerator{*dir, q.lift(*dir)};
}

// -- fans ------------------------------------------------------------------------

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool cone_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Directions spanning the intersection of two H-representations; includes all
// extreme rays (s. lineality directions appear with both signs).
std::vector<IntVec> intersection_directions(const ConeData::HRep& ha, const ConeData::HRep& hb,
                                            int n) {
    RatMat eqs = ha.eqs;
    eqs.insert(eqs.end(), hb.eqs.begin(), hb.eqs.end());
    std::vector<RatVec> w;
    if (eqs.empty()) {
        for (int i = 0; i < n; ++i) {
            RatVec e(n, 0);
            e[i] = 1;
            w.push_back(e);
        }
    } else {
        w = nullspace_rat(eqs);
    }
    int d = static_cast<int>(w.size());
    std::vector<IntVec> dirs;
    if (d == 0) return dirs;

    RatMat ineq = ha.ineqs;
    ineq.insert(ineq.end(), hb.ineqs.begin(), hb.ineqs.end());
    RatMat restricted;  // rows: functionals on the d subspace coordinates
    for (const auto& h : ineq) {
        RatVec row(d);
        bool nonzero = false;
        for (int j = 0; j < d; ++j) {
            row[j] = dot(h, w[j]);
            if (row[j] != 0) nonzero = true;
        }
        if (nonzero) restricted.push_back(std::move(row));
    }
    auto emit = [&](const RatVec& c) {
        RatVec x(n, 0);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i) x[i] += c[j] * w[j][i];
        if (std::all_of(x.begin(), x.end(), [](const Rat& q) { return q == 0; })) return;
        dirs.push_back(rat_dir_to_int(x));
    };
    // Lineality of the restricted cone.
    std::vector<RatVec> lin =
        restricted.empty() ? [&] {
            std::vector<RatVec> full;
            for (int i = 0; i < d; ++i) {
                RatVec e(d, 0);
                e[i] = 1;
                full.push_back(e);
            }
            return full;
        }()
                           : nullspace_rat(restricted);
    for (const auto& l : lin) {
        emit(l);
        RatVec neg(l);
        for (auto& q : neg) q = -q;
        emit(neg);
    }
    if (restricted.empty()) return dirs;
    if (d == 1) {
        for (int sgn : {1, -1}) {
            RatVec c{Rat(sgn)};
            bool ok = true;
            for (const auto& row : restricted)
                if (row[0] * sgn < 0) { ok = false; break; }
            if (ok) emit(c);
        }
        return dirs;
    }
    int rows = static_cast<int>(restricted.size());
    combinations(rows, d - 1, [&](const std::vector<int>& subset) {
        RatMat sub;
        for (int i : subset) sub.push_back(restricted[i]);
        auto ker = nullspace_rat(sub);
        if (ker.size() != 1) return false;
        const RatVec& c = ker[0];
        bool pos = true, neg = true;
        for (const auto& row : restricted) {
            Rat v = dot(row, c);
            if (v < 0) pos = false;
            if (v > 0) neg = false;
        }
        if (pos) emit(c);
        if (neg && !pos) {
            RatVec nc(c);
            for (auto& q : nc) q = -q;
            emit(nc);
        }
        return false;
    });
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

}  // namespace

FanData::FanData(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> cones)
    : rank_(rank) {
    if (rank < 1) throw SchemaError("fan: rank must be >= 1");
    std::set<IntVec> seen;
    for (auto& r : rays) {
        if (static_cast<int>(r.size()) != rank) throw SchemaError("fan: ray arity mismatch");
        if (is_zero_vec(r)) throw SchemaError("fan: zero ray");
        r = primitive_vector(r);
        if (!seen.insert(r).second) throw SchemaError("fan: duplicate ray");
        rays_.push_back(r);
    }
    int s = static_cast<int>(rays_.size());

    std::set<std::vector<int>> cone_set;
    cone_set.insert(std::vector<int>{});
    for (auto& c : cones) {
        std::vector<int> idx = sorted_copy(c);
        if (std::unique(idx.begin(), idx.end()) != idx.end())
            throw SchemaError("fan: repeated ray index in cone");
        for (int i : idx)
            if (i < 0 || i >= s) throw SchemaError("fan: ray index out of range");
        std::vector<IntVec> gens;
        for (int i : idx) gens.push_back(rays_[i]);
        ConeData cd(rank_, gens);
        if (!cd.is_pointed()) throw SchemaError("fan: cone contains a line");
        cone_set.insert(idx);
        try {
            for (const auto& face : cd.proper_faces()) {
                std::vector<int> face_rays;
                for (int gi : face) face_rays.push_back(idx[gi]);
                cone_set.insert(sorted_copy(face_rays));
            }
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("fan: ") + e.what());
        }
    }
    cones_.assign(cone_set.begin(), cone_set.end());
    std::sort(cones_.begin(), cones_.end(), cone_order);

    for (const auto& c : cones_) {
        std::vector<IntVec> gens;
        for (int i : c) gens.push_back(rays_[i]);
        cone_data_.emplace_back(rank_, gens);
    }

    // Face closure sets (faces of each cone, including itself).
    faces_of_.resize(cones_.size());
    for (size_t ci = 0; ci < cones_.size(); ++ci) {
        faces_of_[ci].insert(cones_[ci]);
        for (const auto& face : cone_data_[ci].proper_faces()) {
            std::vector<int> face_rays;
            for (int gi : face) face_rays.push_back(cones_[ci][gi]);
            std::sort(face_rays.begin(), face_rays.end());
            if (!cone_set.count(face_rays))
                throw SchemaError("fan: face closure failure");
            faces_of_[ci].insert(face_rays);
        }
    }

    // Every cone's rays are exactly the fan rays it contains.
    for (size_t ci = 0; ci < cones_.size(); ++ci) {
        for (int r = 0; r < s; ++r) {
            bool listed = std::binary_search(cones_[ci].begin(), cones_[ci].end(), r);
            bool inside = cone_data_[ci].contains(rays_[r]);
            if (listed != inside)
                throw SchemaError("fan: cone contains an unlisted ray (or lists an outside ray)");
        }
    }

    // Pairwise: the intersection must be the cone on the common rays and a
    // listed face of both.
    std::vector<ConeData::HRep> hreps;
    hreps.reserve(cones_.size());
    for (const auto& cd : cone_data_) hreps.push_back(cd.hrep());
    for (size_t i = 0; i < cones_.size(); ++i) {
        for (size_t j = i + 1; j < cones_.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(cones_[i].begin(), cones_[i].end(), cones_[j].begin(),
                                  cones_[j].end(), std::back_inserter(common));
            if (!cone_set.count(common))
                throw SchemaError("fan: intersection of two cones is not a listed cone");
            if (!faces_of_[i].count(common) || !faces_of_[j].count(common))
                throw SchemaError("fan: intersection of two cones is not a common face");
            if (common == cones_[i] || common == cones_[j]) continue;  // containment case
            const ConeData& gamma = cone_data_[index_of(common)];
            for (const auto& dir : intersection_directions(hreps[i], hreps[j], rank_))
                if (!gamma.contains(dir))
                    throw SchemaError("fan: cones overlap beyond their common face");
        }
    }
}

int FanData::index_of(const std::vector<int>& rayset) const {
    auto it = std::lower_bound(cones_.begin(), cones_.end(), rayset, cone_order);
    if (it == cones_.end() || *it != rayset) return -1;
    return static_cast<int>(it - cones_.begin());
}

bool FanData::has_cone(const std::vector<int>& rayset) const {
    return index_of(sorted_copy(rayset)) >= 0;
}

const ConeData& FanData::cone(const std::vector<int>& rayset) const {
    int i = index_of(sorted_copy(rayset));
    if (i < 0) throw std::invalid_argument("FanData: no such cone");
    return cone_data_[i];
}

int FanData::cone_dim(const std::vector<int>& rayset) const { return cone(rayset).dim(); }

bool FanData::is_simplicial() const {
    for (const auto& cd : cone_data_)
        if (!cd.simplicial()) return false;
    return true;
}

bool FanData::is_complete() const {
    // Valid fan is complete iff every codim-1 cone bounds exactly two
    // top-dimensional cones.
    bool any_full = false;
    for (size_t i = 0; i < cones_.size(); ++i) {
        if (cone_data_[i].dim() != rank_) continue;
        any_full = true;
    }
    if (!any_full) return false;
    for (size_t i = 0; i < cones_.size(); ++i) {
        if (cone_data_[i].dim() != rank_ - 1) continue;
        int count = 0;
        for (size_t j = 0; j < cones_.size(); ++j) {
            if (cone_data_[j].dim() != rank_) continue;
            if (faces_of_[j].count(cones_[i])) ++count;
        }
        if (count != 2) return false;
    }
    return true;
}

std::vector<std::vector<int>> FanData::maximal_proper_faces(const std::vector<int>& tau) const {
    int ti = index_of(sorted_copy(tau));
    if (ti < 0) throw std::invalid_argument("maximal_proper_faces: cone not in fan");
    int d = cone_data_[ti].dim();
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_of_[ti]) {
        if (f == cones_[ti]) continue;
        if (cone_data_[index_of(f)].dim() == d - 1) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), cone_order);
    return out;
}

NormalGenerator FanData::normal_gen(const std::vector<int>& tau,
                                    const std::vector<int>& sigma) const {
    return normal_generator(cone(tau), cone(sigma));
}

FanData minimal_fan(const ConeData& sigma) {
    std::vector<std::vector<int>> top;
    std::vector<int> all(sigma.gens().size());
    std::iota(all.begin(), all.end(), 0);
    top.push_back(all);
    return FanData(sigma.rank(), sigma.gens(), top);
}

}  // namespace toric
