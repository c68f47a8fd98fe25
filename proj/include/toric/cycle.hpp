#pragma once

#include <map>
#include <random>

#include "toric/complement.hpp"
#include "toric/germ.hpp"
#include "toric/lattice.hpp"
#include "toric/series.hpp"

namespace toric {

using ConeKey = std::vector<int>;  // sorted ray indices; {} is the zero cone

// Element of the (completed) equivariant cycle group: finite map from fan
// cones to power-series coefficients.
class EquivariantCycle {
public:
    explicit EquivariantCycle(const FanData* fan = nullptr) : fan_(fan) {}

    const FanData* fan() const { return fan_; }
    const std::map<ConeKey, PolySeries>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const ConeKey& sigma, const PolySeries& coeff);
    PolySeries coefficient(const ConeKey& sigma, int order) const;

    EquivariantCycle operator+(const EquivariantCycle& o) const;
    EquivariantCycle operator-(const EquivariantCycle& o) const;
    EquivariantCycle operator*(const Rat& c) const;
    bool operator==(const EquivariantCycle& o) const { return coeffs_ == o.coeffs_; }

    // Set every M-symbol to zero, keeping the constant coefficients.
    EquivariantCycle specialize_m_to_zero() const;

private:
    const FanData* fan_;
    std::map<ConeKey, PolySeries> coeffs_;
};

// T-invariant Q-Cartier divisor given by its ray values; local equations are
// solved per cone on construction (throws CartierError when impossible).
class EquivariantDivisor {
public:
    EquivariantDivisor(const FanData& fan, RatVec alpha);

    const FanData& fan() const { return *fan_; }
    const RatVec& alpha() const { return alpha_; }
    CosetFunctional local_equation(const ConeKey& sigma) const;

private:
    const FanData* fan_;
    RatVec alpha_;
    std::map<ConeKey, LinearForm> local_eq_;
};

// [D] = sum <d_{rho_i}, n_i> V_i.
EquivariantCycle divisor_to_cycle(const EquivariantDivisor& d);

// E_sigma^Psi = sum_i <d_sigma^Psi, n_i> V_i  -  d_sigma^Psi V_{0}.
EquivariantCycle shift_cycle(const EquivariantDivisor& d, const ConeKey& sigma,
                             const ComplementMap& psi);

// The cycle-level action of Theorem-type formula
//   D . V_sigma = sum_{tau -> sigma} <d_tau - d_sigma^Psi, n_{tau,sigma}> V_tau
//                 + d_sigma^Psi V_sigma,
// extended bilinearly over series coefficients.
EquivariantCycle act(const EquivariantDivisor& d, const EquivariantCycle& c,
                     const ComplementMap& psi);

// Monomial in the ray classes D_i with a series coefficient.
struct DMonomial {
    std::vector<int> exps;  // one exponent per fan ray
    PolySeries coef;
};
using DPolynomial = std::vector<DMonomial>;

// Generators of the Stanley-Reisner ideal: minimal non-faces.
std::vector<DPolynomial> stanley_reisner_generators(const FanData& fan);

// Generators of J^Psi: for each nonzero cone sigma and each basis element m
// of Psi(sigma), D_sigma * (sum_j <m, n_j> D_j - m).
std::vector<DPolynomial> jpsi_generators(const FanData& fan, const ComplementMap& psi);

// Square-free normal form of p as a cycle, working modulo I + J^Psi.
// Coefficients are truncated at `order`.  When `shuffle` is given, the
// rewrite choices are randomized (the result must not depend on this).
EquivariantCycle squarefree_reduce(const DPolynomial& p, const FanData& fan,
                                   const ComplementMap& psi, int order,
                                   std::mt19937_64* shuffle = nullptr);

}  // namespace toric
