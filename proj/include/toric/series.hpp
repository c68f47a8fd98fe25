#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Rational covector: a degree-1 element of Q[M], or a linear function of xi.
struct LinearForm {
    RatVec coeffs;

    LinearForm() = default;
    explicit LinearForm(RatVec c) : coeffs(std::move(c)) {}
    explicit LinearForm(const IntVec& v);

    int size() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    Rat pair(const IntVec& v) const;
    Rat pair(const RatVec& v) const;

    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator*(const Rat& c) const;
    LinearForm operator-() const;
    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

// Truncated multivariate power series over Q with a sparse exponent map.
//
// `order` is the truncation order: coefficients of total degree <= order are
// meaningful, higher ones are unknown.  kExact marks polynomials known in
// full (no hidden tail); arithmetic propagates orders so that no coefficient
// is ever reported beyond what the operands guarantee.
class PolySeries {
public:
    static constexpr int kExact = 1 << 20;

    PolySeries() : nvars_(0), order_(kExact) {}
    PolySeries(int nvars, int order) : nvars_(nvars), order_(order) {}

    static PolySeries constant(int nvars, const Rat& c);            // exact
    static PolySeries from_linear(const LinearForm& m);             // exact
    static PolySeries zero(int nvars, int order) { return PolySeries(nvars, order); }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return order_ >= kExact; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    // Min total degree of a nonzero term (kExact for the zero series).
    int valuation() const;
    Rat coefficient(const std::vector<int>& exp) const;
    Rat constant_term() const;

    void add_term(const std::vector<int>& exp, const Rat& c);  // drops beyond order
    PolySeries truncated(int new_order) const;
    // Keep coefficients but lower the declared order (no term dropping below).
    PolySeries with_order(int new_order) const;

    PolySeries operator+(const PolySeries& o) const;
    PolySeries operator-(const PolySeries& o) const;
    PolySeries operator*(const PolySeries& o) const;
    PolySeries operator*(const Rat& c) const;
    PolySeries operator-() const;
    bool operator==(const PolySeries& o) const;  // same terms (orders ignored)

    // Composition x_j -> (-1)^negate * assignment[j], a linear form in the
    // target variables.  Result has the min of the operand orders.
    PolySeries substitute(const std::vector<LinearForm>& assignment, bool negate) const;
    PolySeries negate_vars() const;  // x_j -> -x_j

    std::string to_string(const std::string& var_prefix = "m") const;

private:
    int nvars_;
    int order_;
    std::map<std::vector<int>, Rat> terms_;
};

// exp(m) = sum_{k<=order} m^k / k!
PolySeries exp_linear(const LinearForm& m, int order);

// One-variable expansions.
PolySeries g_series(int order);               // z/(1 - e^{-z}) = 1 + z/2 + z^2/12 - ...
PolySeries b_series_1var(int order);          // B(z) = 1/(1-e^z) + 1/z = 1/2 - z/12 + ...
PolySeries u_inverse_1var(int order);         // z/(e^z - 1) = 1 - z/2 + z^2/12 - ...

// B composed with a linear form; throws on the zero form.
PolySeries B_series(const LinearForm& m, int order);
// Any one-variable series composed with a linear form.
PolySeries compose_1var(const PolySeries& s, const LinearForm& m);

// Exact quotient of num by a nonzero linear form, to order num.order() - 1.
// Throws NotDivisibleError (with the offending degree) when a remainder shows
// up within the checkable range.
PolySeries divide_by_linear(const PolySeries& num, const LinearForm& ell);

// Reciprocal of a one-variable series with nonzero constant term.
PolySeries invert_1var(const PolySeries& s, int order);

}  // namespace toric
