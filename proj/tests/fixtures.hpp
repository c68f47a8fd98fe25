#pragma once

#include <random>

#include "toric/complement.hpp"
#include "toric/cycle.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace fixtures {

using namespace toric;

// Complete non-simplicial fan in Z^3 with an affine-cone-over-P1xP1 chart:
// rays (1,0,0),(0,1,0),(0,0,1),(1,1,-1),(-1,-1,0), max cones
// {1234, 135, 145, 235, 245} (1-based).
inline FanData ex31_fan() {
    return FanData(3,
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}, {-1, -1, 0}},
                   {{0, 1, 2, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 4}, {1, 3, 4}});
}

// Simplicial refinement of ex31 (the 1234 chart split along the 12 diagonal).
inline FanData ex31_simplicial_fan() {
    return FanData(3,
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}, {-1, -1, 0}},
                   {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 4}, {1, 3, 4}});
}

// Inner normal fan of the unit triangle: rays rho0=(-1,-1), rho1=(1,0),
// rho2=(0,1); sigma0 = cone(rho1,rho2) etc.
inline FanData triangle_fan() {
    return FanData(2, {{-1, -1}, {1, 0}, {0, 1}}, {{1, 2}, {0, 2}, {0, 1}});
}

inline LatticePolytope unit_triangle() {
    return LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}});
}

inline LatticePolytope dilated_triangle(int k) {
    return LatticePolytope(2, {{0, 0}, {k, 0}, {0, k}});
}

inline LatticePolytope unit_square() {
    return LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

inline LatticePolytope square_side2() {
    return LatticePolytope(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
}

inline LatticePolytope skew_triangle() {  // singular normal cones
    return LatticePolytope(2, {{0, 0}, {2, 1}, {1, 2}});
}

inline LatticePolytope unit_cube() {
    std::vector<IntVec> vs;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) vs.push_back({a, b, c});
    return LatticePolytope(3, vs);
}

// Random symmetric positive-definite rational Gram matrix (A^T A + I with
// small random integer A).
inline InnerProductMap random_gram(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    IntMat a(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = coef(rng);
    RatMat g(n, RatVec(n, 0));
    Rat scale = Rat(1, den(rng));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int k = 0; k < n; ++k) s += Rat(a[k][i] * a[k][j]);
            g[i][j] = s * scale;
            if (i == j) g[i][j] += 1;
        }
    return InnerProductMap(g);
}

// Random primitive vector with entries in [-bound, bound].
inline IntVec random_primitive(int n, int bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    for (;;) {
        IntVec v(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            v[i] = coef(rng);
            if (v[i] != 0) zero = false;
        }
        if (!zero) return primitive_vector(v);
    }
}

// Random smooth 2D cone in Z^n (n = 2 or 3): a primitive vector plus a
// second one making the pair part of a lattice basis.
inline ConeData random_smooth_2d_cone(int n, std::mt19937_64& rng) {
    for (;;) {
        IntVec a = random_primitive(n, 3, rng);
        IntVec b = random_primitive(n, 3, rng);
        ConeData c(n, {a, b});
        if (c.dim() != 2 || !c.simplicial()) continue;
        if (c.multiplicity() != 1) continue;
        return c;
    }
}

// Random smooth full-dimensional cone in Z^n.
inline ConeData random_smooth_full_cone(int n, std::mt19937_64& rng) {
    for (;;) {
        std::vector<IntVec> gens;
        for (int i = 0; i < n; ++i) gens.push_back(random_primitive(n, 3, rng));
        ConeData c(n, gens);
        if (static_cast<int>(c.gens().size()) != n) continue;
        if (c.dim() != n || !c.is_smooth()) continue;
        return c;
    }
}

// Random complete simplicial fan in Z^2: distinct primitive rays sorted by
// angle (every cyclic gap below pi), consecutive pairs as maximal cones.
inline FanData random_complete_fan_2d(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(3, 6);
    auto upper = [](const IntVec& u) { return u[1] > 0 || (u[1] == 0 && u[0] > 0); };
    auto cross = [](const IntVec& u, const IntVec& v) { return u[0] * v[1] - u[1] * v[0]; };
    for (;;) {
        int want = count(rng);
        std::vector<IntVec> rays;
        std::set<IntVec> seen;
        while (static_cast<int>(rays.size()) < want) {
            IntVec r = random_primitive(2, 3, rng);
            if (seen.insert(r).second) rays.push_back(r);
        }
        std::sort(rays.begin(), rays.end(), [&](const IntVec& u, const IntVec& v) {
            if (upper(u) != upper(v)) return upper(u);
            return cross(u, v) > 0;
        });
        int s = static_cast<int>(rays.size());
        bool ok = true;
        for (int i = 0; i < s; ++i)
            if (cross(rays[i], rays[(i + 1) % s]) <= 0) ok = false;
        if (!ok) continue;
        std::vector<std::vector<int>> cones;
        for (int i = 0; i < s; ++i) cones.push_back({i, (i + 1) % s});
        return FanData(2, rays, cones);
    }
}

// Random Cartier ray values on a simplicial fan (every choice works there).
inline RatVec random_cartier_alpha(const FanData& fan, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RatVec alpha(fan.rays().size());
    for (auto& a : alpha) a = Rat(coef(rng), den(rng));
    return alpha;
}

// Random valid ray values on the ex31 fan: alpha4 = alpha1+alpha2-alpha3.
inline RatVec random_ex31_alpha(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RatVec a(5);
    for (auto& x : a) x = Rat(coef(rng), den(rng));
    a[3] = a[0] + a[1] - a[2];
    return a;
}

}  // namespace fixtures
