#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "toric/errors.hpp"
#include "toric/polytope.hpp"
#include "toric/todd.hpp"

using namespace toric;

namespace {

IntVec iv(std::vector<long long> v) { return IntVec(v.begin(), v.end()); }

LinearForm lf(std::vector<Rat> c) { return LinearForm(RatVec(c.begin(), c.end())); }

bool eq_through(const PolySeries& a, const PolySeries& b, int t) {
    REQUIRE(a.order() >= t);
    REQUIRE(b.order() >= t);
    return (a - b).truncated(t).is_zero();
}

}  // namespace

TEST_CASE("r of the zero cone is exactly 1") {
    InnerProductMap psi = InnerProductMap::standard(2);
    PolySeries r = r_smooth(ConeData::zero_cone(2), psi, 6);
    CHECK(r == PolySeries::constant(2, 1));
    CHECK(r.is_exact());
}

TEST_CASE("r of the first quadrant is B(-x) B(-y)") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData q(2, {iv({0, 1}), iv({1, 0})});
    PolySeries r = r_smooth(q, psi, 6);
    PolySeries expect = B_series(lf({Rat(-1), Rat(0)}), 6) * B_series(lf({Rat(0), Rat(-1)}), 6);
    CHECK(eq_through(r, expect, 6));
}

TEST_CASE("triangle vertex cone series match the printed expansions") {
    InnerProductMap psi = InnerProductMap::standard(2);
    // sigma1 = cone((-1,-1),(0,1)): 3/8 - x/12 + y/24 + 5x^2/1152 - xy/288 - 5y^2/1152
    ConeData s1(2, {iv({-1, -1}), iv({0, 1})});
    PolySeries r1 = r_smooth(s1, psi, 6);
    CHECK(r1.coefficient({0, 0}) == Rat(3, 8));
    CHECK(r1.coefficient({1, 0}) == Rat(-1, 12));
    CHECK(r1.coefficient({0, 1}) == Rat(1, 24));
    CHECK(r1.coefficient({2, 0}) == Rat(5, 1152));
    CHECK(r1.coefficient({1, 1}) == Rat(-1, 288));
    CHECK(r1.coefficient({0, 2}) == Rat(-5, 1152));

    // the x<->y mirror cone
    ConeData s2(2, {iv({1, 0}), iv({-1, -1})});
    PolySeries r2 = r_smooth(s2, psi, 6);
    CHECK(r2.coefficient({0, 0}) == Rat(3, 8));
    CHECK(r2.coefficient({1, 0}) == Rat(1, 24));
    CHECK(r2.coefficient({0, 1}) == Rat(-1, 12));
    CHECK(r2.coefficient({2, 0}) == Rat(-5, 1152));
    CHECK(r2.coefficient({1, 1}) == Rat(-1, 288));
    CHECK(r2.coefficient({0, 2}) == Rat(5, 1152));
}

TEST_CASE("closed form for rays") {
    InnerProductMap psi = InnerProductMap::standard(2);
    // rho = (1,1): B(-(x+y)/2)
    PolySeries r = r_closed_1d(ConeData(2, {iv({1, 1})}), psi, 6);
    PolySeries expect = B_series(lf({Rat(-1, 2), Rat(-1, 2)}), 6);
    CHECK(eq_through(r, expect, 6));

    // P^1 fan: B(-x) and B(x), summing to 1
    InnerProductMap psi1 = InnerProductMap::standard(1);
    PolySeries rp = r_closed_1d(ConeData(1, {iv({1})}), psi1, 8);
    PolySeries rm = r_closed_1d(ConeData(1, {iv({-1})}), psi1, 8);
    CHECK(eq_through(rp, B_series(lf({Rat(-1)}), 8), 8));
    CHECK(eq_through(rm, B_series(lf({Rat(1)}), 8), 8));
    CHECK(eq_through(rp + rm, PolySeries::constant(1, 1).with_order(8), 8));

    // rays agree with the ring expansion
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        InnerProductMap g = fixtures::random_gram(n, rng);
        ConeData ray(n, {fixtures::random_primitive(n, 3, rng)});
        CHECK(eq_through(r_closed_1d(ray, g, 4), r_smooth(ray, g, 4), 4));
    }
}

TEST_CASE("closed form for smooth 2D cones") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData q(2, {iv({0, 1}), iv({1, 0})});
    PolySeries expect = B_series(lf({Rat(-1), Rat(0)}), 6) * B_series(lf({Rat(0), Rat(-1)}), 6);
    CHECK(eq_through(r_closed_2d(q, psi, 6), expect, 6));

    ConeData s1(2, {iv({-1, -1}), iv({0, 1})});
    CHECK(r_closed_2d(s1, psi, 6).coefficient({0, 0}) == Rat(3, 8));
    CHECK(eq_through(r_closed_2d(s1, psi, 6), r_smooth(s1, psi, 6), 6));
}

TEST_CASE("closed form via the span reduction in Z^3") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 6; ++trial) {
        InnerProductMap g = fixtures::random_gram(3, rng);
        ConeData sigma = fixtures::random_smooth_2d_cone(3, rng);
        CHECK(eq_through(r_closed_2d(sigma, g, 4), r_smooth(sigma, g, 4), 4));
    }
}

TEST_CASE("r_general resolves singular cones") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData sing(2, {iv({1, 0}), iv({1, 2})});
    PolySeries r = r_general(sing, psi, 6);
    PolySeries sum = r_smooth(ConeData(2, {iv({1, 0}), iv({1, 1})}), psi, 6) +
                     r_smooth(ConeData(2, {iv({1, 1}), iv({1, 2})}), psi, 6);
    CHECK(eq_through(r, sum, 6));
    CHECK_THROWS_AS(r_general(ConeData(2, {iv({1, 0}), iv({-1, 0})}), psi, 4),
                    std::invalid_argument);
}

TEST_CASE("whole-fan Todd expansion agrees with per-cone coefficients") {
    // Expand prod_i g(D_i) over the full triangle fan and reduce: Theorem-3
    // style locality check against the minimal-fan computation.
    int T = 4;
    FanData fan = fixtures::triangle_fan();
    InnerProductMap psi = InnerProductMap::standard(2);
    int s = 3, dmax = 2 + T;
    PolySeries g = g_series(dmax);
    std::map<std::vector<int>, Rat> expansion{{std::vector<int>(s, 0), Rat(1)}};
    for (int i = 0; i < s; ++i) {
        std::map<std::vector<int>, Rat> next;
        for (const auto& [e, c] : expansion) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            for (int j = 0; j + deg <= dmax; ++j) {
                Rat gj = g.coefficient({j});
                if (gj == 0) continue;
                auto e2 = e;
                e2[i] += j;
                auto [it, fresh] = next.emplace(e2, c * gj);
                if (!fresh) it->second += c * gj;
            }
        }
        expansion = std::move(next);
    }
    DPolynomial poly;
    for (const auto& [e, c] : expansion)
        poly.push_back({e, PolySeries::constant(2, c)});
    EquivariantCycle todd = squarefree_reduce(poly, fan, psi, T);

    ToddEngine engine(psi, T);
    for (const auto& key : fan.cones()) {
        PolySeries direct = engine.r_general(fan.cone(key));
        CHECK(eq_through(todd.coefficient(key, T), direct, T));
    }
}

TEST_CASE("todd_class of the triangle fan") {
    FanData fan = fixtures::triangle_fan();
    InnerProductMap psi = InnerProductMap::standard(2);
    ToddEngine engine(psi, 6);
    EquivariantCycle td = engine.todd_class(fan);
    CHECK(td.coefficient({}, 6) == PolySeries::constant(2, 1));
    // partition of unity over the three maximal cones
    PolySeries sum = td.coefficient({1, 2}, 6) + td.coefficient({0, 2}, 6) +
                     td.coefficient({0, 1}, 6);
    CHECK(eq_through(sum, PolySeries::constant(2, 1).with_order(6), 6));
}

TEST_CASE("locality: same cone in different ambient fans") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData q(2, {iv({1, 0}), iv({0, 1})});
    PolySeries inside_triangle;
    {
        FanData fan = fixtures::triangle_fan();
        ToddEngine engine(psi, 5);
        inside_triangle = engine.todd_class(fan).coefficient({1, 2}, 5);
    }
    PolySeries minimal = r_smooth(q, psi, 5);
    CHECK(eq_through(inside_triangle, minimal, 5));
}

TEST_CASE("phi map") {
    ConeData sigma(2, {iv({1, 0}), iv({0, 1})});
    int T = 6;
    // gamma = D1 D2 -> 1
    DPolynomial top{{{1, 1}, PolySeries::constant(2, 1)}};
    MeromorphicGerm g1 = phi_map(top, sigma, T);
    CHECK(germ_equal(g1, MeromorphicGerm::from_series(PolySeries::constant(2, 1))).equal);

    // gamma = 1 -> I~(K), K the dual cone
    DPolynomial one{{{0, 0}, PolySeries::constant(2, 1)}};
    MeromorphicGerm g2 = phi_map(one, sigma, T);
    MeromorphicGerm i_tilde = cone_germ_I(dual_cone(sigma)).substituted_negate();
    CHECK(germ_equal(g2, i_tilde).equal);

    // gamma = prod g(D_i) -> S~(K)
    PolySeries g = g_series(T + 2);
    DPolynomial gg;
    for (int a = 0; a <= T + 2; ++a)
        for (int b = 0; a + b <= T + 2; ++b) {
            Rat c = g.coefficient({a}) * g.coefficient({b});
            if (c != 0) gg.push_back({{a, b}, PolySeries::constant(2, c)});
        }
    MeromorphicGerm g3 = phi_map(gg, sigma, T);
    MeromorphicGerm s_tilde = cone_germ_S(dual_cone(sigma), T).substituted_negate();
    auto cmp = germ_equal(g3, s_tilde);
    CHECK(cmp.equal);
}

TEST_CASE("Lemma-2.2 style germ identity for one smooth cone") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData sigma(2, {iv({2, 1}), iv({1, 1})});
    REQUIRE(sigma.is_smooth());
    int T = 6;
    ToddEngine engine(psi, T);
    ConeData k = dual_cone(sigma);

    // sum over faces tau of sigma: r(tau) * I~(K_tau) = S~(K)
    MeromorphicGerm lhs = MeromorphicGerm::zero(2);
    std::vector<std::vector<int>> subsets{{}, {0}, {1}, {0, 1}};
    for (const auto& sub : subsets) {
        std::vector<IntVec> tau_gens, ktau_gens;
        for (int i : sub) tau_gens.push_back(sigma.gens()[i]);
        for (int i = 0; i < 2; ++i)
            if (std::find(sub.begin(), sub.end(), i) == sub.end())
                ktau_gens.push_back(k.gens()[i]);
        PolySeries r = engine.r_general(ConeData(2, tau_gens));
        MeromorphicGerm it = cone_germ_I(ConeData(2, ktau_gens)).substituted_negate();
        lhs = germ_add(lhs, germ_mul_series(it, r));
    }
    MeromorphicGerm st = cone_germ_S(k, T + 1).substituted_negate();
    auto cmp = germ_equal(lhs, st);
    CHECK(cmp.equal);
    CHECK(std::min(lhs.effective_order(), st.effective_order()) >= 4);
}

TEST_CASE("subdivision independence quick check") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData sing(2, {iv({1, 0}), iv({1, 2})});
    PolySeries a = r_general(sing, psi, 6);
    // refined subdivision {(1,0),(2,1)}, {(2,1),(1,1)}, {(1,1),(1,2)}
    PolySeries b = r_general(ConeData(2, {iv({1, 0}), iv({2, 1})}), psi, 6) +
                   r_general(ConeData(2, {iv({2, 1}), iv({1, 1})}), psi, 6) +
                   r_general(ConeData(2, {iv({1, 1}), iv({1, 2})}), psi, 6);
    CHECK(eq_through(a, b, 6));
}

TEST_CASE("memo cache does not change results") {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData sing(2, {iv({1, 0}), iv({1, 2})});
    ToddEngine cached(psi, 5, true);
    ToddEngine uncached(psi, 5, false);
    PolySeries a1 = cached.r_general(sing);
    PolySeries a2 = cached.r_general(sing);
    PolySeries b = uncached.r_general(sing);
    CHECK(a1 == a2);
    CHECK(a1 == b);
}
