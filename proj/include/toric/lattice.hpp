#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// N = Z^rank with the standard basis; M is its dual.  Arbitrary lattices are
// handled by the caller's change of basis.
struct LatticeContext {
    int rank;
    explicit LatticeContext(int r);
};

inline IntVec primitive(const IntVec& v) { return primitive_vector(v); }

// Rational polyhedral cone given by primitive generators in N.
class ConeData {
public:
    ConeData(int rank, std::vector<IntVec> generators);
    static ConeData zero_cone(int rank) { return ConeData(rank, {}); }

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    bool simplicial() const { return simplicial_; }
    const std::vector<IntVec>& gens() const { return gens_; }

    bool is_pointed() const;
    bool is_smooth() const;
    Int multiplicity() const;  // simplicial only

    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const { return contains(to_rat(x)); }
    bool contains_line() const { return !is_pointed(); }

    // Facets of a pointed cone as (inner normal, incident generator indices).
    // Supported for simplicial cones in any dimension and for non-simplicial
    // pointed cones of dimension <= 3 whose generators are all extreme.
    struct Facet {
        RatVec normal;
        std::vector<int> gen_indices;
    };
    std::vector<Facet> facets() const;

    // Proper faces as generator-index subsets (the empty set = zero cone).
    std::vector<std::vector<int>> proper_faces() const;

    struct HRep {
        RatMat ineqs;  // rows h with <h, x> >= 0
        RatMat eqs;    // rows e with <e, x> = 0
    };
    HRep hrep() const;

    // Canonical identity: sorted generator set.
    std::string key() const;
    bool same_cone(const ConeData& o) const;

private:
    int rank_;
    int dim_;
    bool simplicial_;
    std::vector<IntVec> gens_;
};

// {m : <m, v> >= 0 for all v in the cone}.  Full support in ambient rank <= 3;
// in higher rank only full-dimensional simplicial cones.
ConeData dual_cone(const ConeData& sigma);

// Stellar resolution into smooth cones of the same dimension covering sigma,
// pairwise meeting along boundaries.  Non-simplicial input (dim <= 3) is
// triangulated from its first generator first.
std::vector<ConeData> subdivide_to_smooth(const ConeData& sigma);

// Presentation of N(sigma) = N / N_sigma via Smith normal form.
class QuotientLattice {
public:
    explicit QuotientLattice(const ConeData& sigma);

    int ambient_rank() const { return n_; }
    int sub_rank() const { return r_; }
    int quot_rank() const { return n_ - r_; }

    const std::vector<IntVec>& sub_basis() const { return sub_basis_; }
    IntVec project(const IntVec& x) const;  // coordinates in N(sigma)
    IntVec lift(const IntVec& z) const;     // one preimage in N

private:
    int n_, r_;
    IntMat u_;      // projection: last n-r coords of u_ * x
    IntMat u_inv_;  // columns: sub-basis | lift images
    std::vector<IntVec> sub_basis_;
};

// n_{tau,sigma}: the primitive generator of the image of tau in N(sigma),
// together with one integer lift.  Requires tau -> sigma (codimension one).
struct NormalGenerator {
    IntVec image;  // primitive, in N(sigma) coordinates
    IntVec lift;   // any preimage in N (pairings against M(sigma) ignore the choice)
};
NormalGenerator normal_generator(const ConeData& tau, const ConeData& sigma);

// Fan: rays plus face-closed cone list, validated so that any two cones meet
// in a common listed face.
class FanData {
public:
    FanData(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> cones);

    int rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    // Sorted ray-index sets, ordered by (size, lex); always includes {}.
    const std::vector<std::vector<int>>& cones() const { return cones_; }

    bool has_cone(const std::vector<int>& rayset) const;
    const ConeData& cone(const std::vector<int>& rayset) const;
    int cone_dim(const std::vector<int>& rayset) const;
    bool is_simplicial() const;
    bool is_complete() const;

    std::vector<std::vector<int>> maximal_proper_faces(const std::vector<int>& tau) const;
    NormalGenerator normal_gen(const std::vector<int>& tau, const std::vector<int>& sigma) const;

private:
    int rank_;
    std::vector<IntVec> rays_;
    std::vector<std::vector<int>> cones_;
    std::vector<ConeData> cone_data_;
    std::vector<std::set<std::vector<int>>> faces_of_;  // per cone, closed downward
    int index_of(const std::vector<int>& rayset) const;
};

// Minimal fan of a single cone: the cone plus all its faces.
FanData minimal_fan(const ConeData& sigma);

}  // namespace toric
