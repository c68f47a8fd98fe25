#pragma once

#include <optional>

#include "toric/complement.hpp"
#include "toric/germ.hpp"
#include "toric/todd.hpp"

namespace toric {

// Face of a lattice polytope with its inner-normal cone in N.
struct FaceRecord {
    std::vector<int> vertex_ids;  // sorted indices into the polytope's vertices
    int dim;
    ConeData normal_cone;  // sigma_{P,F}, dual to the tangent cone along F
};

// Full-dimensional lattice polytope in M (or a single lattice point), given
// by vertices; facets are recomputed and cross-checked when supplied.
// Ambient rank is capped at 3 for the face machinery.
class LatticePolytope {
public:
    using FacetPair = std::pair<IntVec, Rat>;  // primitive inner normal h, offset c: <h,x> >= c

    LatticePolytope(int rank, std::vector<IntVec> vertices,
                    std::optional<std::vector<FacetPair>> facets = std::nullopt);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<FacetPair>& facets() const { return facets_; }
    const std::vector<FaceRecord>& faces() const { return faces_; }

    // Tan(P,F): directions from relint(F) staying in P.
    ConeData tangent_cone(const FaceRecord& f) const;

    bool contains(const IntVec& x) const;

private:
    int rank_;
    int dim_;
    std::vector<IntVec> vertices_;
    std::vector<FacetPair> facets_;
    std::vector<FaceRecord> faces_;
};

std::vector<IntVec> enumerate_lattice_points(const LatticePolytope& p,
                                             size_t budget = 2'000'000);

// S(P) = sum over lattice points of exp<xi, x>, truncated.
PolySeries exp_sum_series(const LatticePolytope& p, int order);

// I(F) = integral of exp<xi, x> over the face against the lattice measure of
// aff(F); computed by triangulating the face.
PolySeries exp_integral_series(const LatticePolytope& p, const FaceRecord& f, int order);

// Lawrence germs of a nonsingular pointed cone K in M:
//   I(K) = (-1)^k / prod m_i,     S(K) = prod 1/(1 - e^{m_i}).
// Line-containing input yields the zero germ; singular input is an error.
MeromorphicGerm cone_germ_I(const ConeData& k);
MeromorphicGerm cone_germ_S(const ConeData& k, int order);

// sum_F r^Psi(sigma_{P,F})(-xi) * I(F)(xi); equals S(P) coefficientwise.
PolySeries euler_maclaurin_series(const LatticePolytope& p, const ComplementMap& psi,
                                  int order);

struct CountResult {
    Int count;       // the certified count
    Rat em_constant; // constant term of the interpolator series
    Int enumerated;  // brute-force enumeration
};

// Constant term of the interpolator, cross-checked against enumeration;
// throws VerificationError on disagreement.
CountResult count_lattice_points(const LatticePolytope& p, const ComplementMap& psi);

}  // namespace toric
