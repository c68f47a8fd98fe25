#pragma once

#include <memory>

#include "toric/lattice.hpp"
#include "toric/series.hpp"

namespace toric {

// A rational covector considered modulo M(sigma)_Q, i.e. only its values on
// N_sigma matter.
struct CosetFunctional {
    LinearForm rep;

    static CosetFunctional zero(int n) { return {LinearForm(RatVec(n, 0))}; }
};

// Two representatives agree as coset functionals iff their difference
// vanishes on the cone's span.
bool coset_equal(const CosetFunctional& a, const CosetFunctional& b, const ConeData& sigma);

// Transitive family of sections i^Psi: M_{sigma,Q} -> M_Q of the restriction
// maps, one per generic subspace.
class ComplementMap {
public:
    virtual ~ComplementMap() = default;

    virtual int rank() const = 0;
    virtual bool is_generic(const ConeData& sigma) const = 0;

    // The unique element of Psi(sigma) restricting to f on N_sigma.
    virtual LinearForm section(const ConeData& sigma, const CosetFunctional& f) const = 0;

    // Basis of Psi(sigma); dim = dim sigma, complementary to sigma^perp.
    virtual std::vector<LinearForm> psi_subspace(const ConeData& sigma) const = 0;

    // Complement map induced on the sublattice spanned by `basis` (given in
    // ambient coordinates); the result works in basis coordinates.
    virtual std::unique_ptr<ComplementMap> induced(const std::vector<IntVec>& basis) const = 0;

    virtual std::string cache_key() const = 0;

    // i^Psi images of the dual basis of `basis`: entry i is the unique
    // element of Psi(span basis) pairing to delta_ij with basis[j].
    std::vector<LinearForm> section_matrix(const std::vector<IntVec>& basis) const;
};

// Complement map of an inner product: sections land in G * span(sigma).
class InnerProductMap final : public ComplementMap {
public:
    explicit InnerProductMap(RatMat gram);  // symmetric positive definite
    static InnerProductMap standard(int n);

    const RatMat& gram() const { return gram_; }

    int rank() const override { return static_cast<int>(gram_.size()); }
    bool is_generic(const ConeData& sigma) const override;
    LinearForm section(const ConeData& sigma, const CosetFunctional& f) const override;
    std::vector<LinearForm> psi_subspace(const ConeData& sigma) const override;
    std::unique_ptr<ComplementMap> induced(const std::vector<IntVec>& basis) const override;
    std::string cache_key() const override;

private:
    RatMat gram_;
};

}  // namespace toric
