#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/complement.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

IntVec iv(std::vector<long long> v) { return IntVec(v.begin(), v.end()); }

LinearForm lfq(std::vector<Rat> c) { return LinearForm(RatVec(c.begin(), c.end())); }

}  // namespace

TEST_CASE("sections of the standard inner product") {
    InnerProductMap psi = InnerProductMap::standard(2);

    // sigma = cone((1,1)), f((1,1)) = 1 -> (x+y)/2
    ConeData diag(2, {iv({1, 1})});
    CosetFunctional f{lfq({Rat(1), Rat(0)})};  // pairs to 1 with (1,1)
    LinearForm m = psi.section(diag, f);
    CHECK(m.coeffs == RatVec{Rat(1, 2), Rat(1, 2)});

    // full-dimensional cone: the section is the identity on M_Q
    ConeData full(2, {iv({1, 0}), iv({0, 1})});
    CosetFunctional g{lfq({Rat(3, 2), Rat(-5)})};
    CHECK(psi.section(full, g).coeffs == g.rep.coeffs);

    // zero cone: zero functional maps to zero
    ConeData zero = ConeData::zero_cone(2);
    CHECK(psi.section(zero, CosetFunctional::zero(2)).is_zero());
}

TEST_CASE("psi subspaces") {
    InnerProductMap psi = InnerProductMap::standard(2);
    auto full = psi.psi_subspace(ConeData(2, {iv({1, 0}), iv({0, 1})}));
    REQUIRE(full.size() == 2);
    RatMat rows{full[0].coeffs, full[1].coeffs};
    CHECK(rank_rat(rows) == 2);

    auto line = psi.psi_subspace(ConeData(2, {iv({-1, -1})}));
    REQUIRE(line.size() == 1);
    // spans {x+y}
    CHECK(line[0].coeffs[0] == line[0].coeffs[1]);
    CHECK(line[0].coeffs[0] != 0);

    CHECK(psi.psi_subspace(ConeData::zero_cone(2)).empty());
}

TEST_CASE("coset functionals compare modulo the cone's perp") {
    ConeData diag(2, {iv({1, 1})});
    CosetFunctional a{lfq({Rat(1), Rat(0)})};
    CosetFunctional b{lfq({Rat(0), Rat(1)})};
    CosetFunctional c{lfq({Rat(1), Rat(1)})};
    CHECK(coset_equal(a, b, diag));
    CHECK(!coset_equal(a, c, diag));
}

TEST_CASE("induced maps") {
    InnerProductMap psi3 = InnerProductMap::standard(3);
    auto sub = psi3.induced({iv({1, 0, 0}), iv({0, 1, 0})});
    auto* ip = dynamic_cast<InnerProductMap*>(sub.get());
    REQUIRE(ip);
    CHECK(ip->gram() == identity_rat(2));

    InnerProductMap psi2 = InnerProductMap::standard(2);
    auto one = psi2.induced({iv({1, 1})});
    auto* ip1 = dynamic_cast<InnerProductMap*>(one.get());
    REQUIRE(ip1);
    CHECK(ip1->gram() == RatMat{{Rat(2)}});

    auto same = psi2.induced({iv({1, 0}), iv({0, 1})});
    auto* ip2 = dynamic_cast<InnerProductMap*>(same.get());
    REQUIRE(ip2);
    CHECK(ip2->gram() == psi2.gram());
}

TEST_CASE("section property on random cones") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        InnerProductMap psi = fixtures::random_gram(n, rng);
        int k = 1 + static_cast<int>(rng() % n);
        std::vector<IntVec> gens;
        for (int i = 0; i < k; ++i) gens.push_back(fixtures::random_primitive(n, 3, rng));
        ConeData sigma(n, gens);
        CHECK(psi.is_generic(sigma));  // inner products are generic everywhere
        RatVec fv(n);
        for (auto& x : fv) x = Rat(static_cast<int>(rng() % 9) - 4);
        CosetFunctional f{LinearForm(fv)};
        LinearForm m = psi.section(sigma, f);
        // restriction(section(f)) = f on N_sigma
        for (const auto& g : sigma.gens()) CHECK(m.pair(g) == f.rep.pair(g));
        // m lies in span{G v : v in N_sigma}: solve for coefficients
        RatMat cols(n, RatVec(sigma.gens().size()));
        for (size_t j = 0; j < sigma.gens().size(); ++j) {
            for (int i = 0; i < n; ++i) {
                Rat s = 0;
                for (int l = 0; l < n; ++l) s += psi.gram()[i][l] * Rat(sigma.gens()[j][l]);
                cols[i][j] = s;
            }
        }
        CHECK(solve_rat(cols, m.coeffs));
    }
}

TEST_CASE("transitivity of sections along chains") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        InnerProductMap psi = fixtures::random_gram(3, rng);
        // L1 = span(b1) inside L2 = span(B2) inside Q^3
        IntVec u = fixtures::random_primitive(3, 2, rng);
        IntVec v = fixtures::random_primitive(3, 2, rng);
        if (ConeData(3, {u, v}).dim() != 2) { --trial; continue; }
        std::vector<IntVec> b2{u, v};
        IntVec b1(3);
        int a = 1 + static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        for (int i = 0; i < 3; ++i) b1[i] = a * u[i] + b * v[i];

        LinearForm direct = psi.section_matrix({b1})[0];

        auto sm23 = psi.section_matrix(b2);
        auto induced = psi.induced(b2);
        // coordinates of b1 in the basis b2 are (a, b)
        LinearForm inner = induced->section_matrix({IntVec{Int(a), Int(b)}})[0];
        RatVec lifted(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) lifted[i] += inner.coeffs[j] * sm23[j].coeffs[i];
        CHECK(lifted == direct.coeffs);
    }
}

TEST_CASE("gram matrix validation") {
    CHECK_THROWS_AS(InnerProductMap({{Rat(1), Rat(2)}, {Rat(3), Rat(1)}}), SchemaError);
    CHECK_THROWS_AS(InnerProductMap({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}), SchemaError);
    CHECK_THROWS_AS(InnerProductMap({{Rat(0)}}), SchemaError);
    CHECK_NOTHROW(InnerProductMap({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}));
}
