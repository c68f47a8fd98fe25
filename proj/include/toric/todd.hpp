#pragma once

#include <mutex>

#include "toric/cycle.hpp"

namespace toric {

// Todd-class coefficients r^Psi(sigma).  An engine fixes the complement map
// and the truncation order and memoizes per-cone results (the cache is the
// only shared state; access is serialized).
class ToddEngine {
public:
    ToddEngine(const ComplementMap& psi, int order, bool use_cache = true)
        : psi_(&psi), order_(order), use_cache_(use_cache) {}

    int order() const { return order_; }
    const ComplementMap& psi() const { return *psi_; }

    // Coefficient of V_sigma in the square-free reduction of prod g(D_i)
    // inside the fan of sigma's faces, expanded to D-degree dim sigma + order.
    PolySeries r_smooth(const ConeData& sigma) const;

    // Closed forms for rays and for smooth two-dimensional cones (reduced to
    // the span lattice first when not full-dimensional).
    PolySeries r_closed_1d(const ConeData& sigma) const;
    PolySeries r_closed_2d(const ConeData& sigma) const;

    // Smooth cones delegate to r_smooth; singular ones are resolved and the
    // top-dimensional pieces summed.
    PolySeries r_general(const ConeData& sigma) const;

    // Td^T(X) = sum_sigma r^Psi(sigma) V_sigma.
    EquivariantCycle todd_class(const FanData& fan) const;

private:
    const ComplementMap* psi_;
    int order_;
    bool use_cache_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, PolySeries> cache_;
};

inline PolySeries r_smooth(const ConeData& sigma, const ComplementMap& psi, int order) {
    return ToddEngine(psi, order).r_smooth(sigma);
}
inline PolySeries r_closed_1d(const ConeData& sigma, const ComplementMap& psi, int order) {
    return ToddEngine(psi, order).r_closed_1d(sigma);
}
inline PolySeries r_closed_2d(const ConeData& sigma, const ComplementMap& psi, int order) {
    return ToddEngine(psi, order).r_closed_2d(sigma);
}
inline PolySeries r_general(const ConeData& sigma, const ComplementMap& psi, int order) {
    return ToddEngine(psi, order).r_general(sigma);
}
inline EquivariantCycle todd_class(const FanData& fan, const ComplementMap& psi, int order) {
    return ToddEngine(psi, order).todd_class(fan);
}

// Lemma-2.2 style map for a smooth full-dimensional cone sigma with dual
// basis m_1..m_n: gamma(D_1..D_n) |-> gamma(m_1..m_n) / prod m_i.  Monomial
// exponents in gamma are indexed by sigma's generators.
MeromorphicGerm phi_map(const DPolynomial& gamma, const ConeData& sigma, int order);

}  // namespace toric
