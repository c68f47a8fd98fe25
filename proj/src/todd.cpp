#include "toric/todd.hpp"

#include <numeric>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Rows of the inverse of the generator matrix: <m_i, g_j> = delta_ij.
std::vector<LinearForm> dual_basis(const ConeData& sigma) {
    int n = sigma.rank();
    RatMat b(n, RatVec(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) b[i][j] = Rat(sigma.gens()[j][i]);
    auto inv = invert_rat(b);
    if (!inv) throw std::invalid_argument("dual_basis: generators not a basis");
    std::vector<LinearForm> out;
    for (int i = 0; i < n; ++i) out.push_back(LinearForm((*inv)[i]));
    return out;
}

}  // namespace

PolySeries ToddEngine::r_smooth(const ConeData& sigma) const {
    int n = sigma.rank();
    if (sigma.dim() == 0) return PolySeries::constant(n, 1);
    if (!sigma.is_smooth())
        throw std::invalid_argument("r_smooth: cone is not smooth");
    if (!psi_->is_generic(sigma))
        throw GenericityError("r_smooth: cone not Psi-generic");

    int k = sigma.dim();
    int dmax = k + order_;
    FanData fan = minimal_fan(sigma);

    // Expand prod_i g(D_i) to total D-degree <= dmax; coefficients are
    // rational numbers at this stage.
    PolySeries g = g_series(dmax);
    std::map<std::vector<int>, Rat> expansion{{std::vector<int>(k, 0), Rat(1)}};
    for (int i = 0; i < k; ++i) {
        std::map<std::vector<int>, Rat> next;
        for (const auto& [e, c] : expansion) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            for (int j = 0; j + deg <= dmax; ++j) {
                Rat gj = g.coefficient({j});
                if (gj == 0) continue;
                std::vector<int> e2 = e;
                e2[i] += j;
                auto [it, fresh] = next.emplace(e2, c * gj);
                if (!fresh) it->second += c * gj;
            }
        }
        expansion = std::move(next);
    }
    DPolynomial poly;
    for (const auto& [e, c] : expansion)
        poly.push_back(DMonomial{e, PolySeries::constant(n, c)});

    EquivariantCycle reduced = squarefree_reduce(poly, fan, *psi_, order_);
    std::vector<int> top(k);
    std::iota(top.begin(), top.end(), 0);
    return reduced.coefficient(top, order_).truncated(order_).with_order(order_);
}

PolySeries ToddEngine::r_closed_1d(const ConeData& sigma) const {
    if (sigma.dim() != 1)
        throw std::invalid_argument("r_closed_1d: not a ray");
    if (!psi_->is_generic(sigma))
        throw GenericityError("r_closed_1d: cone not Psi-generic");
    LinearForm c = psi_->psi_subspace(sigma)[0];
    Rat pr = c.pair(sigma.gens()[0]);
    if (pr == 0) throw GenericityError("r_closed_1d: degenerate Psi generator");
    return B_series(-(c * (1 / pr)), order_);
}

PolySeries ToddEngine::r_closed_2d(const ConeData& sigma) const {
    int n = sigma.rank();
    if (sigma.dim() != 2 || !sigma.is_smooth())
        throw std::invalid_argument("r_closed_2d: need a smooth two-dimensional cone");
    if (!psi_->is_generic(sigma))
        throw GenericityError("r_closed_2d: cone not Psi-generic");

    if (n > 2) {
        // View sigma as full-dimensional in its span and push the result
        // forward along the section (dimension-reduction lemma).
        QuotientLattice q(sigma);
        const auto& basis = q.sub_basis();
        std::vector<IntVec> coords;
        for (const auto& g : sigma.gens()) {
            RatMat rows(2, RatVec(n));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < n; ++j) rows[i][j] = Rat(basis[i][j]);
            auto sol = solve_rat(transpose(rows), to_rat(g));
            IntVec c(2);
            for (int i = 0; i < 2; ++i) {
                if (!is_integer((*sol)[i]))
                    throw std::logic_error("r_closed_2d: non-integral span coordinates");
                c[i] = numerator((*sol)[i]);
            }
            coords.push_back(c);
        }
        auto induced = psi_->induced(basis);
        PolySeries reduced = ToddEngine(*induced, order_, false).r_closed_2d(ConeData(2, coords));
        return reduced.substitute(psi_->section_matrix(basis), false);
    }

    int t1 = order_ + 1;  // one order of margin for the exact divisions
    auto m = dual_basis(sigma);
    PolySeries result = B_series(-m[0], t1) * B_series(-m[1], t1);
    for (int i = 0; i < 2; ++i) {
        ConeData ray(n, {sigma.gens()[i]});
        LinearForm c = psi_->psi_subspace(ray)[0];
        Rat pr = c.pair(sigma.gens()[i]);
        if (pr == 0) throw GenericityError("r_closed_2d: degenerate Psi generator");
        LinearForm li = c * (1 / pr);
        PolySeries bracket = B_series(-li, t1) - B_series(-m[i], t1);
        PolySeries quot = divide_by_linear(bracket, m[1 - i]);
        result = result - quot;
    }
    return result.truncated(order_).with_order(order_);
}

PolySeries ToddEngine::r_general(const ConeData& sigma) const {
    if (!sigma.is_pointed())
        throw std::invalid_argument("r_general: cone is not pointed");
    if (!psi_->is_generic(sigma))
        throw GenericityError("r_general: cone not Psi-generic");
    if (sigma.dim() == 0) return PolySeries::constant(sigma.rank(), 1);

    std::string key;
    if (use_cache_) {
        std::ostringstream os;
        os << sigma.key() << "|" << psi_->cache_key() << "|" << order_;
        key = os.str();
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    PolySeries out;
    if (sigma.is_smooth()) {
        out = r_smooth(sigma);
    } else {
        out = PolySeries(sigma.rank(), order_);
        for (const auto& piece : subdivide_to_smooth(sigma))
            out = out + r_smooth(piece);
    }

    if (use_cache_) {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(std::move(key), out);
    }
    return out;
}

EquivariantCycle ToddEngine::todd_class(const FanData& fan) const {
    EquivariantCycle out(&fan);
    for (const auto& rayset : fan.cones())
        out.add(rayset, r_general(fan.cone(rayset)));
    return out;
}

MeromorphicGerm phi_map(const DPolynomial& gamma, const ConeData& sigma, int order) {
    int n = sigma.rank();
    if (sigma.dim() != n || !sigma.is_smooth())
        throw std::invalid_argument("phi_map: need a smooth full-dimensional cone");
    auto m = dual_basis(sigma);
    PolySeries num(n, order + n);
    for (const auto& mono : gamma) {
        if (static_cast<int>(mono.exps.size()) != n)
            throw std::invalid_argument("phi_map: exponent arity mismatch");
        PolySeries term = mono.coef;
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < mono.exps[i]; ++e)
                term = term * PolySeries::from_linear(m[i]);
        num = num + term.truncated(order + n);
    }
    std::vector<LinearForm> dens(m.begin(), m.end());
    return MeromorphicGerm(std::move(num), std::move(dens));
}

}  // namespace toric
