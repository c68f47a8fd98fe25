#include "toric/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

LinearForm::LinearForm(const IntVec& v) {
    coeffs.reserve(v.size());
    for (const Int& x : v) coeffs.emplace_back(x);
}

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

Rat LinearForm::pair(const IntVec& v) const {
    Rat s = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * Rat(v[i]);
    return s;
}

Rat LinearForm::pair(const RatVec& v) const {
    Rat s = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * v[i];
    return s;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
    LinearForm r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

LinearForm LinearForm::operator*(const Rat& c) const {
    LinearForm r = *this;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

LinearForm LinearForm::operator-() const { return *this * Rat(-1); }

// -- PolySeries ---------------------------------------------------------------

static int total_degree(const std::vector<int>& exp) {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

PolySeries PolySeries::constant(int nvars, const Rat& c) {
    PolySeries s(nvars, kExact);
    s.add_term(std::vector<int>(nvars, 0), c);
    return s;
}

PolySeries PolySeries::from_linear(const LinearForm& m) {
    PolySeries s(m.size(), kExact);
    for (int i = 0; i < m.size(); ++i) {
        std::vector<int> e(m.size(), 0);
        e[i] = 1;
        s.add_term(e, m.coeffs[i]);
    }
    return s;
}

int PolySeries::valuation() const {
    int v = kExact;
    for (const auto& [e, c] : terms_) v = std::min(v, total_degree(e));
    return v;
}

Rat PolySeries::coefficient(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat PolySeries::constant_term() const {
    return coefficient(std::vector<int>(nvars_, 0));
}

void PolySeries::add_term(const std::vector<int>& exp, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("PolySeries::add_term: exponent arity mismatch");
    if (total_degree(exp) > order_) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolySeries PolySeries::truncated(int new_order) const {
    PolySeries out(nvars_, new_order);
    bool dropped = false;
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > new_order) {
            dropped = true;
            continue;
        }
        out.terms_.emplace(e, c);
    }
    if (is_exact() && !dropped) out.order_ = kExact;
    else out.order_ = std::min(order_, new_order);
    return out;
}

PolySeries PolySeries::with_order(int new_order) const {
    PolySeries out = *this;
    out.order_ = new_order;
    return out;
}

PolySeries PolySeries::operator+(const PolySeries& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("PolySeries: variable count mismatch");
    PolySeries out(nvars_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

PolySeries PolySeries::operator-(const PolySeries& o) const { return *this + (-o); }

PolySeries PolySeries::operator-() const {
    PolySeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

PolySeries PolySeries::operator*(const Rat& c) const {
    if (c == 0) return PolySeries(nvars_, order_);
    PolySeries out = *this;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("PolySeries: variable count mismatch");
    // Known through min(Ta + val(b), Tb + val(a)): a term of degree d needs
    // every split d = d1 + d2 with d1 <= Ta, d2 <= Tb.
    long oa = std::min<long>(static_cast<long>(order_) + o.valuation(), kExact);
    long ob = std::min<long>(static_cast<long>(o.order_) + valuation(), kExact);
    PolySeries out(nvars_, static_cast<int>(std::min(oa, ob)));
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > out.order_) continue;
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool PolySeries::operator==(const PolySeries& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

PolySeries PolySeries::substitute(const std::vector<LinearForm>& assignment,
                                  bool negate) const {
    if (static_cast<int>(assignment.size()) != nvars_)
        throw std::invalid_argument("PolySeries::substitute: assignment arity mismatch");
    int nt = assignment.empty() ? nvars_ : assignment[0].size();
    PolySeries out(nt, order_);
    // Lazy powers of each substituted form.
    std::vector<std::vector<PolySeries>> pows(nvars_);
    auto power = [&](int j, int k) -> const PolySeries& {
        auto& pj = pows[j];
        if (pj.empty()) {
            pj.push_back(PolySeries::constant(nt, 1));
            LinearForm f = negate ? -assignment[j] : assignment[j];
            pj.push_back(PolySeries::from_linear(f));
        }
        while (static_cast<int>(pj.size()) <= k)
            pj.push_back((pj.back() * pj[1]).truncated(out.order_));
        return pj[k];
    };
    for (const auto& [e, c] : terms_) {
        PolySeries acc = PolySeries::constant(nt, c);
        for (int j = 0; j < nvars_ && !acc.is_zero(); ++j)
            if (e[j] > 0) acc = (acc * power(j, e[j])).truncated(out.order_);
        for (const auto& [et, ct] : acc.terms_) out.add_term(et, ct);
    }
    return out;
}

PolySeries PolySeries::negate_vars() const {
    PolySeries out = *this;
    for (auto& [e, c] : out.terms_)
        if (total_degree(e) % 2 == 1) c = -c;
    return out;
}

std::string PolySeries::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    // Sort by total degree, then lexicographically on exponents.
    std::vector<std::pair<std::vector<int>, Rat>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_prefix + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) term = rat_to_string(c);
        else if (c == 1) term = mono;
        else if (c == -1) term = "-" + mono;
        else term = rat_to_string(c) + "*" + mono;

        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

// -- special series ------------------------------------------------------------

PolySeries exp_linear(const LinearForm& m, int order) {
    PolySeries out(m.size(), order);
    PolySeries term = PolySeries::constant(m.size(), 1);
    PolySeries form = PolySeries::from_linear(m);
    out = out + term;
    for (int k = 1; k <= order; ++k) {
        term = (term * form).truncated(order) * (Rat(1) / Rat(k));
        if (term.is_zero()) break;
        out = out + term.with_order(order);
    }
    return out.with_order(order);
}

PolySeries invert_1var(const PolySeries& s, int order) {
    Rat c0 = s.constant_term();
    if (c0 == 0)
        throw std::invalid_argument("invert_1var: zero constant term");
    std::vector<Rat> a(order + 1, 0);
    for (const auto& [e, c] : s.terms())
        if (e[0] <= order) a[e[0]] = c;
    std::vector<Rat> t(order + 1, 0);
    t[0] = 1 / c0;
    for (int n = 1; n <= order; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += a[k] * t[n - k];
        t[n] = -acc / c0;
    }
    PolySeries out(1, order);
    for (int n = 0; n <= order; ++n) out.add_term({n}, t[n]);
    return out;
}

PolySeries u_inverse_1var(int order) {
    // (e^z - 1)/z = sum z^k/(k+1)!
    PolySeries u(1, order);
    Rat f = 1;
    for (int k = 0; k <= order; ++k) {
        f /= Rat(k + 1);
        u.add_term({k}, f);
    }
    return invert_1var(u, order);
}

PolySeries b_series_1var(int order) {
    // B(z) = (1 - z/(e^z - 1)) / z
    PolySeries inv = u_inverse_1var(order + 1);
    PolySeries out(1, order);
    for (const auto& [e, c] : inv.terms()) {
        if (e[0] == 0) continue;  // cancels against the leading 1
        out.add_term({e[0] - 1}, -c);
    }
    return out;
}

PolySeries g_series(int order) {
    // (1 - e^{-z})/z = sum (-1)^k z^k/(k+1)!
    PolySeries w(1, order);
    Rat f = 1;
    for (int k = 0; k <= order; ++k) {
        f /= Rat(k + 1);
        w.add_term({k}, (k % 2 == 0) ? f : -f);
    }
    return invert_1var(w, order);
}

PolySeries compose_1var(const PolySeries& s, const LinearForm& m) {
    int order = s.order();
    PolySeries out(m.size(), order);
    PolySeries pow = PolySeries::constant(m.size(), 1);
    PolySeries form = PolySeries::from_linear(m);
    int max_deg = 0;
    for (const auto& [e, c] : s.terms()) max_deg = std::max(max_deg, e[0]);
    for (int k = 0; k <= std::min(max_deg, order); ++k) {
        Rat c = s.coefficient({k});
        if (c != 0) {
            PolySeries t = pow * c;
            for (const auto& [e, ct] : t.terms()) out.add_term(e, ct);
        }
        pow = (pow * form).truncated(order);
    }
    return out;
}

PolySeries B_series(const LinearForm& m, int order) {
    if (m.is_zero())
        throw std::invalid_argument("B_series: zero linear form");
    return compose_1var(b_series_1var(order), m);
}

PolySeries divide_by_linear(const PolySeries& num, const LinearForm& ell) {
    if (ell.is_zero())
        throw std::invalid_argument("divide_by_linear: zero linear form");
    int n = ell.size();
    if (num.nvars() != n)
        throw std::invalid_argument("divide_by_linear: variable count mismatch");
    int out_order = num.is_exact() ? PolySeries::kExact : num.order() - 1;
    if (num.is_zero()) return PolySeries(n, out_order);

    int piv = 0;
    while (ell.coeffs[piv] == 0) ++piv;

    // Change of variables with y_piv = ell(x), y_j = x_j otherwise;
    // then x_piv = (y_piv - sum_{j != piv} ell_j y_j)/ell_piv.
    std::vector<LinearForm> fwd(n);
    for (int j = 0; j < n; ++j) {
        RatVec c(n, 0);
        if (j == piv) {
            c[piv] = 1 / ell.coeffs[piv];
            for (int k = 0; k < n; ++k)
                if (k != piv) c[k] = -ell.coeffs[k] / ell.coeffs[piv];
        } else {
            c[j] = 1;
        }
        fwd[j] = LinearForm(c);
    }
    PolySeries in_y = num.substitute(fwd, false);

    PolySeries shifted(n, in_y.order() == PolySeries::kExact ? PolySeries::kExact
                                                             : in_y.order() - 1);
    for (const auto& [e, c] : in_y.terms()) {
        if (e[piv] == 0)
            throw NotDivisibleError("divide_by_linear: remainder at degree " +
                                        std::to_string(total_degree(e)),
                                    total_degree(e));
        std::vector<int> e2 = e;
        --e2[piv];
        shifted.add_term(e2, c);
    }

    std::vector<LinearForm> back(n);
    for (int j = 0; j < n; ++j) {
        if (j == piv) {
            back[j] = ell;
        } else {
            RatVec c(n, 0);
            c[j] = 1;
            back[j] = LinearForm(c);
        }
    }
    return shifted.substitute(back, false).with_order(out_order);
}

}  // namespace toric
