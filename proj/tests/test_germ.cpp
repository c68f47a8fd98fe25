#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/germ.hpp"

using namespace toric;

namespace {

LinearForm lf(std::vector<int> c) {
    RatVec v;
    for (int x : c) v.push_back(Rat(x));
    return LinearForm(v);
}

// 1/(1 - e^{ell}) = -u_inv(ell)/ell as a germ.
MeromorphicGerm one_over_one_minus_exp(const LinearForm& ell, int order) {
    PolySeries num = -compose_1var(u_inverse_1var(order + 1), ell);
    return MeromorphicGerm(num, {ell});
}

}  // namespace

TEST_CASE("1/(1-e^x) = B(x) - 1/x") {
    int T = 8;
    MeromorphicGerm a = one_over_one_minus_exp(lf({1}), T);
    // B(x) = 1/(1-e^x) + 1/x
    MeromorphicGerm inv_x(PolySeries::constant(1, 1), {lf({1})});
    MeromorphicGerm sum = germ_add(a, inv_x);
    MeromorphicGerm b = MeromorphicGerm::from_series(B_series(lf({1}), T));
    auto cmp = germ_equal(sum, b);
    CHECK(cmp.equal);
    CHECK(cmp.order >= T);
    // and the normalized sum is denominator-free
    MeromorphicGerm norm = germ_normalize(sum);
    CHECK(norm.dens().empty());
}

TEST_CASE("germ equality is reflexive and scale-aware") {
    MeromorphicGerm g(B_series(lf({1, 1}), 6), {lf({1, 0}), lf({0, 1})});
    CHECK(germ_equal(g, g).equal);
    // scaling a denominator moves into the numerator: 1/(2x) = (1/2)/x
    MeromorphicGerm h1(PolySeries::constant(1, 1), {LinearForm(RatVec{Rat(2)})});
    MeromorphicGerm h2(PolySeries::constant(1, Rat(1, 2)), {lf({1})});
    CHECK(germ_equal(h1, h2).equal);
}

TEST_CASE("normalize cancels exact divisors and is idempotent") {
    // (x+y)*s / ((x+y) * x) -> s/x
    PolySeries s = B_series(lf({1, -1}), 5);
    PolySeries num = s * PolySeries::from_linear(lf({1, 1}));
    MeromorphicGerm g(num, {lf({1, 1}), lf({1, 0})});
    MeromorphicGerm n1 = germ_normalize(g);
    CHECK(n1.dens().size() == 1);
    CHECK(germ_equal(g, n1).equal);
    MeromorphicGerm n2 = germ_normalize(n1);
    CHECK(n1.dens().size() == n2.dens().size());
    CHECK(germ_equal(n1, n2).equal);
    // effective order preserved
    CHECK(n1.effective_order() >= g.effective_order());
}

TEST_CASE("effective order bookkeeping") {
    MeromorphicGerm g(PolySeries(2, 6), {lf({1, 0}), lf({0, 1})});
    CHECK(g.effective_order() == 4);
    MeromorphicGerm a(B_series(lf({1, 0}), 6), {lf({1, 0})});
    MeromorphicGerm b(B_series(lf({0, 1}), 4), {lf({0, 1})});
    MeromorphicGerm sum = germ_add(a, b);
    // num orders: 6+1 vs 4+1, two denominators
    CHECK(sum.effective_order() == 3);
    CHECK(germ_mul(a, b).effective_order() == 2);
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(MeromorphicGerm(PolySeries::constant(2, 1), {LinearForm(RatVec(2, 0))}),
                    std::invalid_argument);
}

TEST_CASE("substitution xi -> -xi") {
    MeromorphicGerm g(B_series(lf({1, 1}), 6), {lf({1, 0})});
    MeromorphicGerm gn = g.substituted_negate();
    // compare against the hand-built negative: B(-(x+y)) / (-x)
    MeromorphicGerm expect(-B_series(lf({-1, -1}), 6), {lf({1, 0})});
    CHECK(germ_equal(gn, expect).equal);
}
