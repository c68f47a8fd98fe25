#include "toric/germ.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

// ell = scale * canonical, canonical having coprime integer coefficients with
// positive leading entry.
std::pair<LinearForm, Rat> canonical_form(const LinearForm& ell) {
    IntVec dir = rat_dir_to_int(ell.coeffs);
    int lead = 0;
    while (dir[lead] == 0) ++lead;
    if (dir[lead] < 0)
        for (auto& x : dir) x = -x;
    // scale solves ell = scale * dir at the leading coordinate
    Rat scale = ell.coeffs[lead] / Rat(dir[lead]);
    return {LinearForm(dir), scale};
}

IntVec form_key(const LinearForm& canonical) {
    IntVec key(canonical.coeffs.size());
    for (size_t i = 0; i < key.size(); ++i) key[i] = numerator(canonical.coeffs[i]);
    return key;
}

}  // namespace

MeromorphicGerm::MeromorphicGerm(PolySeries num, std::vector<LinearForm> dens)
    : num_(std::move(num)) {
    Rat total = 1;
    for (const auto& d : dens) {
        if (d.is_zero())
            throw std::invalid_argument("MeromorphicGerm: zero denominator form");
        auto [canon, scale] = canonical_form(d);
        total *= scale;
        dens_.push_back(std::move(canon));
    }
    num_ = num_ * (1 / total);
    std::sort(dens_.begin(), dens_.end(),
              [](const LinearForm& a, const LinearForm& b) { return a.coeffs < b.coeffs; });
    if (effective_order() < 0)
        throw std::invalid_argument(
            "MeromorphicGerm: numerator order too low for the denominator count");
}

int MeromorphicGerm::effective_order() const {
    if (num_.is_exact()) return PolySeries::kExact;
    return num_.order() - static_cast<int>(dens_.size());
}

MeromorphicGerm MeromorphicGerm::substituted_negate() const {
    std::vector<LinearForm> nd;
    nd.reserve(dens_.size());
    for (const auto& d : dens_) nd.push_back(-d);
    return {num_.negate_vars(), std::move(nd)};
}

MeromorphicGerm germ_mul(const MeromorphicGerm& a, const MeromorphicGerm& b) {
    std::vector<LinearForm> dens = a.dens();
    dens.insert(dens.end(), b.dens().begin(), b.dens().end());
    return {a.num() * b.num(), std::move(dens)};
}

MeromorphicGerm germ_add(const MeromorphicGerm& a, const MeromorphicGerm& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("germ_add: variable count mismatch");
    // Common denominator = multiset lcm.
    std::map<IntVec, std::pair<int, int>> counts;  // key -> (count in a, in b)
    std::map<IntVec, LinearForm> forms;
    for (const auto& d : a.dens()) {
        counts[form_key(d)].first++;
        forms.emplace(form_key(d), d);
    }
    for (const auto& d : b.dens()) {
        counts[form_key(d)].second++;
        forms.emplace(form_key(d), d);
    }
    PolySeries na = a.num(), nb = b.num();
    std::vector<LinearForm> dens;
    for (const auto& [key, cnt] : counts) {
        int m = std::max(cnt.first, cnt.second);
        const PolySeries f = PolySeries::from_linear(forms.at(key));
        for (int i = cnt.first; i < m; ++i) na = na * f;
        for (int i = cnt.second; i < m; ++i) nb = nb * f;
        for (int i = 0; i < m; ++i) dens.push_back(forms.at(key));
    }
    return {na + nb, std::move(dens)};
}

MeromorphicGerm germ_scale(const MeromorphicGerm& a, const Rat& c) {
    return {a.num() * c, a.dens()};
}

MeromorphicGerm germ_mul_series(const MeromorphicGerm& a, const PolySeries& s) {
    return {a.num() * s, a.dens()};
}

MeromorphicGerm germ_normalize(const MeromorphicGerm& a) {
    PolySeries num = a.num();
    std::vector<LinearForm> dens = a.dens();
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < dens.size(); ++i) {
            try {
                PolySeries q = divide_by_linear(num, dens[i]);
                num = std::move(q);
                dens.erase(dens.begin() + static_cast<long>(i));
                progress = true;
                break;
            } catch (const NotDivisibleError&) {
                // keep this denominator
            }
        }
    }
    return {std::move(num), std::move(dens)};
}

GermComparison germ_equal(const MeromorphicGerm& a, const MeromorphicGerm& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("germ_equal: variable count mismatch");
    PolySeries lhs = a.num();
    for (const auto& d : b.dens()) lhs = lhs * PolySeries::from_linear(d);
    PolySeries rhs = b.num();
    for (const auto& d : a.dens()) rhs = rhs * PolySeries::from_linear(d);
    int order = std::min(lhs.order(), rhs.order());
    PolySeries diff = (lhs - rhs).truncated(order);
    return {diff.is_zero(), order};
}

}  // namespace toric
