// Acceptance suite: one line per criterion, exact rational checks throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/polytope.hpp"
#include "toric/todd.hpp"

using namespace toric;

namespace {

struct Harness {
    int failures = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << note << " [" << ms << " ms]"
                  << std::endl;
        if (!ok) ++failures;
    }
};

IntVec iv(std::vector<long long> v) { return IntVec(v.begin(), v.end()); }

PolySeries sym(int n, int i) {
    RatVec c(n, 0);
    c[i] = 1;
    return PolySeries::from_linear(LinearForm(c));
}

bool eq_through(const PolySeries& a, const PolySeries& b, int t) {
    if (a.order() < t || b.order() < t) return false;
    return (a - b).truncated(t).is_zero();
}

EquivariantCycle unit_cycle(const FanData& fan, const ConeKey& k) {
    EquivariantCycle c(&fan);
    c.add(k, PolySeries::constant(fan.rank(), 1));
    return c;
}

bool series_is(const PolySeries& s, const PolySeries& expect, int t) {
    return eq_through(s, expect.with_order(std::max(t, expect.order())), t);
}

// -- criterion 1: the four displayed action formulas on the ex31 fan ----------

bool criterion1() {
    FanData fan = fixtures::ex31_fan();
    InnerProductMap psi = InnerProductMap::standard(3);
    std::mt19937_64 rng(2024);
    std::vector<RatVec> alphas = {{Rat(1), Rat(2), Rat(3), Rat(0), Rat(5)}};
    alphas.push_back(fixtures::random_ex31_alpha(rng));
    alphas.push_back(fixtures::random_ex31_alpha(rng));

    for (const auto& a : alphas) {
        EquivariantDivisor d(fan, a);

        EquivariantCycle v0 = act(d, unit_cycle(fan, {}), psi);
        EquivariantCycle v0_expect(&fan);
        for (int i = 0; i < 5; ++i) v0_expect.add({i}, PolySeries::constant(3, a[i]));
        if (!(v0 == v0_expect)) return false;

        EquivariantCycle v1 = act(d, unit_cycle(fan, {0}), psi);
        EquivariantCycle v1_expect(&fan);
        v1_expect.add({0, 2}, PolySeries::constant(3, a[2]));
        v1_expect.add({0, 3}, PolySeries::constant(3, a[3] - a[0]));
        v1_expect.add({0, 4}, PolySeries::constant(3, a[0] + a[4]));
        v1_expect.add({0}, sym(3, 0) * a[0]);
        if (!(v1 == v1_expect)) return false;

        EquivariantCycle v13 = act(d, unit_cycle(fan, {0, 2}), psi);
        EquivariantCycle v13_expect(&fan);
        v13_expect.add({0, 1, 2, 3}, PolySeries::constant(3, a[1]));
        v13_expect.add({0, 2, 4}, PolySeries::constant(3, a[4] + a[0]));
        v13_expect.add({0, 2}, sym(3, 0) * a[0] + sym(3, 2) * a[2]);
        if (!(v13 == v13_expect)) return false;

        EquivariantCycle v1234 = act(d, unit_cycle(fan, {0, 1, 2, 3}), psi);
        EquivariantCycle v1234_expect(&fan);
        v1234_expect.add({0, 1, 2, 3},
                         sym(3, 0) * a[0] + sym(3, 1) * a[1] + sym(3, 2) * a[2]);
        if (!(v1234 == v1234_expect)) return false;
    }
    return true;
}

// -- criterion 2: triangle Todd series, ring and closed-form paths ------------

bool criterion2() {
    InnerProductMap psi = InnerProductMap::standard(2);
    struct Expect {
        ConeData cone;
        std::vector<std::pair<std::vector<int>, Rat>> coeffs;
    };
    std::vector<Expect> cases;
    cases.push_back({ConeData(2, {iv({1, 0}), iv({0, 1})}),
                     {{{0, 0}, Rat(1, 4)},
                      {{1, 0}, Rat(1, 24)},
                      {{0, 1}, Rat(1, 24)},
                      {{1, 1}, Rat(1, 144)},
                      {{2, 0}, Rat(0)},
                      {{0, 2}, Rat(0)}}});
    cases.push_back({ConeData(2, {iv({-1, -1}), iv({0, 1})}),
                     {{{0, 0}, Rat(3, 8)},
                      {{1, 0}, Rat(-1, 12)},
                      {{0, 1}, Rat(1, 24)},
                      {{2, 0}, Rat(5, 1152)},
                      {{1, 1}, Rat(-1, 288)},
                      {{0, 2}, Rat(-5, 1152)}}});
    cases.push_back({ConeData(2, {iv({1, 0}), iv({-1, -1})}),
                     {{{0, 0}, Rat(3, 8)},
                      {{1, 0}, Rat(1, 24)},
                      {{0, 1}, Rat(-1, 12)},
                      {{2, 0}, Rat(-5, 1152)},
                      {{1, 1}, Rat(-1, 288)},
                      {{0, 2}, Rat(5, 1152)}}});
    for (const auto& c : cases) {
        PolySeries ring = r_smooth(c.cone, psi, 6);
        PolySeries closed = r_closed_2d(c.cone, psi, 6);
        for (const auto& [e, v] : c.coeffs) {
            if (ring.coefficient(e) != v) return false;
            if (closed.coefficient(e) != v) return false;
        }
        if (!eq_through(ring, closed, 6)) return false;
    }
    return true;
}

// -- criterion 3: partition of unity through order 6 --------------------------

bool criterion3() {
    InnerProductMap psi = InnerProductMap::standard(2);
    PolySeries sum = r_smooth(ConeData(2, {iv({1, 0}), iv({0, 1})}), psi, 6) +
                     r_smooth(ConeData(2, {iv({-1, -1}), iv({0, 1})}), psi, 6) +
                     r_smooth(ConeData(2, {iv({1, 0}), iv({-1, -1})}), psi, 6);
    return eq_through(sum, PolySeries::constant(2, 1).with_order(6), 6);
}

// -- criteria 4, 5: the interpolator identity and the counts ------------------

struct PolyCase {
    const char* name;
    LatticePolytope poly;
    int order;
    long long expected_count;
};

std::vector<PolyCase> poly_cases() {
    std::vector<PolyCase> out;
    out.push_back({"unit triangle", fixtures::unit_triangle(), 6, 3});
    out.push_back({"2-dilated triangle", fixtures::dilated_triangle(2), 4, 6});
    out.push_back({"unit square", fixtures::unit_square(), 4, 4});
    out.push_back({"[0,2]^2", fixtures::square_side2(), 4, 9});
    out.push_back({"skew triangle", fixtures::skew_triangle(), 4, 4});
    out.push_back({"unit cube", fixtures::unit_cube(), 4, 8});
    return out;
}

bool criterion4() {
    for (const auto& pc : poly_cases()) {
        InnerProductMap psi = InnerProductMap::standard(pc.poly.rank());
        PolySeries em = euler_maclaurin_series(pc.poly, psi, pc.order);
        PolySeries s = exp_sum_series(pc.poly, pc.order);
        if (!eq_through(em, s, pc.order)) {
            std::cerr << "  interpolator mismatch on " << pc.name << "\n";
            return false;
        }
    }
    return true;
}

bool criterion5() {
    for (const auto& pc : poly_cases()) {
        InnerProductMap psi = InnerProductMap::standard(pc.poly.rank());
        CountResult res = count_lattice_points(pc.poly, psi);
        if (res.count != pc.expected_count || res.enumerated != pc.expected_count) {
            std::cerr << "  count mismatch on " << pc.name << ": got " << res.count
                      << ", expected " << pc.expected_count << "\n";
            return false;
        }
    }
    return true;
}

// -- criterion 6: closed forms vs ring expansion ------------------------------

bool criterion6() {
    std::mt19937_64 rng(777);
    int order = 5;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 25; ++trial) {
            InnerProductMap psi = fixtures::random_gram(n, rng);
            ConeData sigma = fixtures::random_smooth_2d_cone(n, rng);
            if (!eq_through(r_closed_2d(sigma, psi, order), r_smooth(sigma, psi, order),
                            order))
                return false;
        }
        for (int trial = 0; trial < 10; ++trial) {
            InnerProductMap psi = fixtures::random_gram(n, rng);
            ConeData ray(n, {fixtures::random_primitive(n, 3, rng)});
            if (!eq_through(r_closed_1d(ray, psi, order), r_smooth(ray, psi, order), order))
                return false;
        }
        // r({0}) = 1 (Proposition-3.1 anchor)
        InnerProductMap psi = fixtures::random_gram(n, rng);
        if (!(r_smooth(ConeData::zero_cone(n), psi, order) == PolySeries::constant(n, 1)))
            return false;
    }
    return true;
}

// -- criterion 7: the germ identity sum_tau r(tau) I~(K_tau) = S~(K) ----------

bool criterion7() {
    std::mt19937_64 rng(991);
    int order = 6;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            InnerProductMap psi = fixtures::random_gram(n, rng);
            ConeData sigma = fixtures::random_smooth_full_cone(n, rng);
            ConeData k = dual_cone(sigma);
            ToddEngine engine(psi, order);

            MeromorphicGerm lhs = MeromorphicGerm::zero(n);
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<IntVec> tau_gens, ktau_gens;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1 << i)) tau_gens.push_back(sigma.gens()[i]);
                    else ktau_gens.push_back(k.gens()[i]);
                }
                PolySeries r = engine.r_general(ConeData(n, tau_gens));
                MeromorphicGerm it = cone_germ_I(ConeData(n, ktau_gens)).substituted_negate();
                lhs = germ_add(lhs, germ_mul_series(it, r));
            }
            MeromorphicGerm st = cone_germ_S(k, order + 1).substituted_negate();
            auto cmp = germ_equal(lhs, st);
            int guaranteed = std::min(lhs.effective_order(), st.effective_order());
            if (!cmp.equal || guaranteed < 4) return false;
        }
    }
    return true;
}

// -- criterion 8: subdivision independence ------------------------------------

bool criterion8() {
    InnerProductMap psi = InnerProductMap::standard(2);
    ConeData sing(2, {iv({1, 0}), iv({1, 2})});
    PolySeries via_resolution = r_general(sing, psi, 6);
    PolySeries via_refinement = r_smooth(ConeData(2, {iv({1, 0}), iv({2, 1})}), psi, 6) +
                                r_smooth(ConeData(2, {iv({2, 1}), iv({1, 1})}), psi, 6) +
                                r_smooth(ConeData(2, {iv({1, 1}), iv({1, 2})}), psi, 6);
    return eq_through(via_resolution, via_refinement, 6);
}

// -- criterion 9: commutativity and the lifting property ----------------------

bool criterion9() {
    std::mt19937_64 rng(555);
    InnerProductMap psi3 = InnerProductMap::standard(3);
    InnerProductMap psi2 = InnerProductMap::standard(2);

    auto check_fan = [&](const FanData& fan, const ComplementMap& psi, const RatVec& a,
                         const RatVec& b) {
        EquivariantDivisor d(fan, a);
        EquivariantDivisor e(fan, b);
        for (const auto& sigma : fan.cones()) {
            EquivariantCycle v = unit_cycle(fan, sigma);
            EquivariantCycle de = act(d, act(e, v, psi), psi);
            EquivariantCycle ed = act(e, act(d, v, psi), psi);
            if (!(de == ed)) return false;

            EquivariantCycle dv = act(d, v, psi).specialize_m_to_zero();
            for (const auto& [key, coeff] : dv.coeffs()) {
                if (key.size() <= sigma.size()) return false;
                if (fan.cone_dim(key) != fan.cone_dim(sigma) + 1) return false;
                if (!std::includes(key.begin(), key.end(), sigma.begin(), sigma.end()))
                    return false;
                if (coeff.terms().size() != 1 || coeff.constant_term() == 0) return false;
            }
        }
        return true;
    };

    FanData ex31 = fixtures::ex31_fan();
    for (int trial = 0; trial < 10; ++trial) {
        RatVec a = fixtures::random_ex31_alpha(rng);
        RatVec b = fixtures::random_ex31_alpha(rng);
        if (!check_fan(ex31, psi3, a, b)) return false;
    }
    for (int trial = 0; trial < 10; ++trial) {
        FanData fan = fixtures::random_complete_fan_2d(rng);
        RatVec a = fixtures::random_cartier_alpha(fan, rng);
        RatVec b = fixtures::random_cartier_alpha(fan, rng);
        if (!check_fan(fan, psi2, a, b)) return false;
    }
    return true;
}

// -- criterion 10: ideal sanity and confluence ---------------------------------

bool criterion10() {
    InnerProductMap psi2 = InnerProductMap::standard(2);
    InnerProductMap psi3 = InnerProductMap::standard(3);
    FanData tri = fixtures::triangle_fan();
    FanData ex31s = fixtures::ex31_simplicial_fan();

    for (const auto& g : jpsi_generators(tri, psi2))
        if (!squarefree_reduce(g, tri, psi2, 6).is_zero()) return false;
    for (const auto& g : stanley_reisner_generators(tri))
        if (!squarefree_reduce(g, tri, psi2, 6).is_zero()) return false;
    for (const auto& g : jpsi_generators(ex31s, psi3))
        if (!squarefree_reduce(g, ex31s, psi3, 4).is_zero()) return false;
    for (const auto& g : stanley_reisner_generators(ex31s))
        if (!squarefree_reduce(g, ex31s, psi3, 4).is_zero()) return false;

    // reduction-order independence over 50 seeded shuffles
    DPolynomial p_tri{{{2, 1, 0}, PolySeries::constant(2, 1)},
                      {{0, 3, 1}, sym(2, 0)},
                      {{0, 0, 4}, PolySeries::constant(2, Rat(1, 3))},
                      {{1, 0, 2}, sym(2, 1) * Rat(-2)}};
    EquivariantCycle ref_tri = squarefree_reduce(p_tri, tri, psi2, 6);
    DPolynomial p_ex{{{2, 1, 0, 0, 0}, PolySeries::constant(3, 1)},
                     {{0, 2, 0, 0, 1}, sym(3, 2)},
                     {{1, 0, 1, 0, 2}, PolySeries::constant(3, Rat(5, 2))}};
    EquivariantCycle ref_ex = squarefree_reduce(p_ex, ex31s, psi3, 4);
    for (unsigned seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng_a(seed), rng_b(seed + 1000);
        if (!(squarefree_reduce(p_tri, tri, psi2, 6, &rng_a) == ref_tri)) return false;
        if (!(squarefree_reduce(p_ex, ex31s, psi3, 4, &rng_b) == ref_ex)) return false;
    }
    return true;
}

}  // namespace

int main() {
    Harness h;
    h.run("criterion 1: example-3.1 action formulas (3 instantiations)", criterion1);
    h.run("criterion 2: triangle Todd series, ring and closed-form paths", criterion2);
    h.run("criterion 3: partition of unity r0+r1+r2 = 1 through order 6", criterion3);
    h.run("criterion 4: interpolator identity on six polytopes", criterion4);
    h.run("criterion 5: exact lattice counts 3,6,4,9,4,8", criterion5);
    h.run("criterion 6: closed form vs ring on random cones (order 5)", criterion6);
    h.run("criterion 7: germ identity sum r(tau) I~(K_tau) = S~(K)", criterion7);
    h.run("criterion 8: subdivision independence for cone((1,0),(1,2))", criterion8);
    h.run("criterion 9: commutativity and lifting on random divisors", criterion9);
    h.run("criterion 10: ideal sanity and 50-shuffle confluence", criterion10);
    if (h.failures == 0) std::cout << "acceptance: all criteria passed" << std::endl;
    else std::cout << "acceptance: " << h.failures << " criterion(s) failed" << std::endl;
    return h.failures;
}
