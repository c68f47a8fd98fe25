#pragma once

#include "toric/series.hpp"

namespace toric {

// num / prod(dens): a power-series numerator over a multiset of nonzero
// linear-form denominators.  Denominators are kept canonical (primitive
// integer direction, first nonzero coefficient positive); scalar factors are
// absorbed into the numerator.
class MeromorphicGerm {
public:
    MeromorphicGerm() = default;
    MeromorphicGerm(PolySeries num, std::vector<LinearForm> dens);

    static MeromorphicGerm from_series(PolySeries s) { return {std::move(s), {}}; }
    static MeromorphicGerm zero(int nvars) {
        return from_series(PolySeries(nvars, PolySeries::kExact));
    }

    const PolySeries& num() const { return num_; }
    const std::vector<LinearForm>& dens() const { return dens_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    // Numerator order minus denominator count: coefficients of the germ's
    // Laurent-type expansion are guaranteed only up to this.
    int effective_order() const;

    MeromorphicGerm substituted_negate() const;  // xi -> -xi

private:
    PolySeries num_;
    std::vector<LinearForm> dens_;
};

MeromorphicGerm germ_mul(const MeromorphicGerm& a, const MeromorphicGerm& b);
MeromorphicGerm germ_add(const MeromorphicGerm& a, const MeromorphicGerm& b);
MeromorphicGerm germ_scale(const MeromorphicGerm& a, const Rat& c);
MeromorphicGerm germ_mul_series(const MeromorphicGerm& a, const PolySeries& s);

// Cancels every denominator that exactly divides the numerator.  Idempotent;
// preserves the germ's value and effective order.
MeromorphicGerm germ_normalize(const MeromorphicGerm& a);

struct GermComparison {
    bool equal;
    int order;  // degrees of the cross-multiplied numerators actually compared
};

// Cross-multiplies a.num * prod(b.dens) against b.num * prod(a.dens) and
// compares through the common guaranteed order.
GermComparison germ_equal(const MeromorphicGerm& a, const MeromorphicGerm& b);

}  // namespace toric
