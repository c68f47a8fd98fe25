#include "toric/cycle.hpp"

#include <algorithm>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

void EquivariantCycle::add(const ConeKey& sigma, const PolySeries& coeff) {
    ConeKey key = sigma;
    std::sort(key.begin(), key.end());
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        if (!coeff.is_zero()) coeffs_.emplace(std::move(key), coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
}

PolySeries EquivariantCycle::coefficient(const ConeKey& sigma, int order) const {
    ConeKey key = sigma;
    std::sort(key.begin(), key.end());
    auto it = coeffs_.find(key);
    if (it == coeffs_.end())
        return PolySeries(fan_ ? fan_->rank() : 0, order);
    return it->second;
}

EquivariantCycle EquivariantCycle::operator+(const EquivariantCycle& o) const {
    EquivariantCycle out = *this;
    for (const auto& [k, c] : o.coeffs_) out.add(k, c);
    return out;
}

EquivariantCycle EquivariantCycle::operator-(const EquivariantCycle& o) const {
    EquivariantCycle out = *this;
    for (const auto& [k, c] : o.coeffs_) out.add(k, -c);
    return out;
}

EquivariantCycle EquivariantCycle::operator*(const Rat& c) const {
    EquivariantCycle out(fan_);
    if (c == 0) return out;
    for (const auto& [k, s] : coeffs_) out.add(k, s * c);
    return out;
}

EquivariantCycle EquivariantCycle::specialize_m_to_zero() const {
    EquivariantCycle out(fan_);
    for (const auto& [k, s] : coeffs_) {
        Rat c = s.constant_term();
        if (c == 0) continue;
        PolySeries cs = PolySeries::constant(s.nvars(), c).with_order(s.order());
        out.add(k, cs);
    }
    return out;
}

// -- divisors -------------------------------------------------------------------

EquivariantDivisor::EquivariantDivisor(const FanData& fan, RatVec alpha)
    : fan_(&fan), alpha_(std::move(alpha)) {
    if (alpha_.size() != fan.rays().size())
        throw SchemaError("divisor: one value per fan ray required");
    for (const auto& sigma : fan.cones()) {
        RatMat rows;
        RatVec rhs;
        for (int i : sigma) {
            rows.push_back(to_rat(fan.rays()[i]));
            rhs.push_back(alpha_[i]);
        }
        if (sigma.empty()) {
            local_eq_.emplace(sigma, LinearForm(RatVec(fan.rank(), 0)));
            continue;
        }
        auto m = solve_rat(rows, rhs);
        if (!m) {
            std::ostringstream os;
            os << "divisor: ray values are not Cartier on cone {";
            for (int i : sigma) os << i << " ";
            os << "}";
            throw CartierError(os.str());
        }
        local_eq_.emplace(sigma, LinearForm(*m));
    }
}

CosetFunctional EquivariantDivisor::local_equation(const ConeKey& sigma) const {
    ConeKey key = sigma;
    std::sort(key.begin(), key.end());
    auto it = local_eq_.find(key);
    if (it == local_eq_.end())
        throw std::invalid_argument("local_equation: cone not in fan");
    return CosetFunctional{it->second};
}

EquivariantCycle divisor_to_cycle(const EquivariantDivisor& d) {
    const FanData& fan = d.fan();
    EquivariantCycle out(&fan);
    for (size_t i = 0; i < fan.rays().size(); ++i)
        out.add({static_cast<int>(i)},
                PolySeries::constant(fan.rank(), d.alpha()[i]));
    return out;
}

EquivariantCycle shift_cycle(const EquivariantDivisor& d, const ConeKey& sigma,
                             const ComplementMap& psi) {
    const FanData& fan = d.fan();
    const ConeData& cd = fan.cone(sigma);
    if (!psi.is_generic(cd)) throw GenericityError("shift_cycle: cone not Psi-generic");
    LinearForm dpsi = psi.section(cd, d.local_equation(sigma));
    EquivariantCycle out(&fan);
    for (size_t i = 0; i < fan.rays().size(); ++i)
        out.add({static_cast<int>(i)},
                PolySeries::constant(fan.rank(), dpsi.pair(fan.rays()[i])));
    out.add({}, -PolySeries::from_linear(dpsi));
    return out;
}

EquivariantCycle act(const EquivariantDivisor& d, const EquivariantCycle& c,
                     const ComplementMap& psi) {
    const FanData& fan = d.fan();
    if (c.fan() != &fan)
        throw std::invalid_argument("act: divisor and cycle live on different fans");
    EquivariantCycle out(&fan);
    for (const auto& [sigma, coeff] : c.coeffs()) {
        const ConeData& cd = fan.cone(sigma);
        if (!psi.is_generic(cd)) throw GenericityError("act: cone not Psi-generic");
        LinearForm dpsi = psi.section(cd, d.local_equation(sigma));
        // Cofaces tau -> sigma.
        for (const auto& tau : fan.cones()) {
            if (tau.size() <= sigma.size()) continue;
            if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
            if (fan.cone_dim(tau) != cd.dim() + 1) continue;
            // tau must actually have sigma as a face; in a valid fan the ray
            // inclusion already guarantees it.
            NormalGenerator ng = fan.normal_gen(tau, sigma);
            LinearForm diff = d.local_equation(tau).rep - dpsi;
            Rat pairing = diff.pair(ng.lift);
            if (pairing != 0) out.add(tau, coeff * pairing);
        }
        out.add(sigma, coeff * PolySeries::from_linear(dpsi));
    }
    return out;
}

// -- ideals -----------------------------------------------------------------------

std::vector<DPolynomial> stanley_reisner_generators(const FanData& fan) {
    int s = static_cast<int>(fan.rays().size());
    std::vector<std::vector<int>> nonfaces;
    for (int mask = 1; mask < (1 << s); ++mask) {
        std::vector<int> set;
        for (int i = 0; i < s; ++i)
            if (mask & (1 << i)) set.push_back(i);
        if (fan.has_cone(set)) continue;
        // minimal: every proper subset must be a cone
        bool minimal = true;
        for (int i : set) {
            std::vector<int> sub;
            for (int j : set)
                if (j != i) sub.push_back(j);
            if (!fan.has_cone(sub)) { minimal = false; break; }
        }
        if (minimal) nonfaces.push_back(set);
    }
    std::vector<DPolynomial> out;
    for (const auto& nf : nonfaces) {
        DMonomial m;
        m.exps.assign(s, 0);
        for (int i : nf) m.exps[i] = 1;
        m.coef = PolySeries::constant(fan.rank(), 1);
        out.push_back({m});
    }
    return out;
}

std::vector<DPolynomial> jpsi_generators(const FanData& fan, const ComplementMap& psi) {
    int s = static_cast<int>(fan.rays().size());
    int n = fan.rank();
    std::vector<DPolynomial> out;
    for (const auto& sigma : fan.cones()) {
        if (sigma.empty()) continue;
        const ConeData& cd = fan.cone(sigma);
        if (!psi.is_generic(cd)) throw GenericityError("jpsi_generators: cone not Psi-generic");
        for (const auto& m : psi.psi_subspace(cd)) {
            DPolynomial gen;
            std::vector<int> base(s, 0);
            for (int i : sigma) base[i] = 1;
            for (int j = 0; j < s; ++j) {
                Rat v = m.pair(fan.rays()[j]);
                if (v == 0) continue;
                DMonomial t;
                t.exps = base;
                t.exps[j] += 1;
                t.coef = PolySeries::constant(n, v);
                gen.push_back(std::move(t));
            }
            DMonomial t;
            t.exps = base;
            t.coef = -PolySeries::from_linear(m);
            gen.push_back(std::move(t));
            out.push_back(std::move(gen));
        }
    }
    return out;
}

// -- square-free reduction ----------------------------------------------------------

namespace {

std::vector<int> support_of(const std::vector<int>& exps) {
    std::vector<int> sup;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) sup.push_back(static_cast<int>(i));
    return sup;
}

}  // namespace

EquivariantCycle squarefree_reduce(const DPolynomial& p, const FanData& fan,
                                   const ComplementMap& psi, int order,
                                   std::mt19937_64* shuffle) {
    if (!fan.is_simplicial())
        throw std::invalid_argument("squarefree_reduce: fan must be simplicial");
    int s = static_cast<int>(fan.rays().size());

    std::map<std::vector<int>, PolySeries> work;
    auto put = [&](const std::vector<int>& exps, const PolySeries& c) {
        if (c.is_zero()) return;
        if (!fan.has_cone(support_of(exps))) return;  // Stanley-Reisner ideal
        auto [it, fresh] = work.emplace(exps, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& mono : p) {
        if (static_cast<int>(mono.exps.size()) != s)
            throw std::invalid_argument("squarefree_reduce: exponent arity mismatch");
        put(mono.exps, mono.coef.truncated(order));
    }

    for (;;) {
        // Collect the rewrite candidates (monomial, ray with exponent >= 2).
        std::vector<std::pair<std::vector<int>, int>> candidates;
        for (const auto& [exps, c] : work)
            for (int i = 0; i < s; ++i)
                if (exps[i] >= 2) candidates.emplace_back(exps, i);
        if (candidates.empty()) break;
        size_t pick = 0;
        if (shuffle) pick = (*shuffle)() % candidates.size();
        auto [exps, ray] = candidates[pick];
        PolySeries coef = work.at(exps);
        work.erase(exps);

        std::vector<int> sup = support_of(exps);
        const ConeData& sigma = fan.cone(sup);
        // m in M_{sigma,Q} with <m, n_ray> = 1 and 0 on the other rays of sigma.
        RatMat rows;
        RatVec rhs;
        for (int i : sup) {
            rows.push_back(to_rat(fan.rays()[i]));
            rhs.push_back(i == ray ? Rat(1) : Rat(0));
        }
        auto m = solve_rat(rows, rhs);
        if (!m) throw std::logic_error("squarefree_reduce: dual system unsolvable");
        LinearForm mpsi = psi.section(sigma, CosetFunctional{LinearForm(*m)});

        // D^a = D^{a - e_ray} (m^Psi - sum_{j outside sigma} <m^Psi, n_j> D_j)
        std::vector<int> base = exps;
        base[ray] -= 1;
        put(base, (coef * PolySeries::from_linear(mpsi)).truncated(order));
        for (int j = 0; j < s; ++j) {
            if (std::binary_search(sup.begin(), sup.end(), j)) continue;
            Rat v = mpsi.pair(fan.rays()[j]);
            if (v == 0) continue;
            std::vector<int> ext = base;
            ext[j] += 1;
            put(ext, coef * (-v));
        }
    }

    EquivariantCycle out(&fan);
    for (const auto& [exps, c] : work) {
        std::vector<int> sup = support_of(exps);
        // D_{i1}...D_{ik} V_0 = (1/mult sigma) V_sigma.
        Rat r = Rat(1) / Rat(fan.cone(sup).multiplicity());
        out.add(sup, c * r);
    }
    return out;
}

}  // namespace toric
