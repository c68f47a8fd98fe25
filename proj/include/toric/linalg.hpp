#pragma once

#include <optional>

#include "toric/rational.hpp"

namespace toric {

// -- vector helpers ----------------------------------------------------------

Int vec_gcd(const IntVec& v);                    // gcd >= 0, 0 for the zero vector
IntVec primitive_vector(const IntVec& v);        // v / gcd; throws on zero vector
bool is_zero_vec(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec to_rat(const IntVec& v);
// Clears denominators and primitivizes; throws on zero vector.
IntVec rat_dir_to_int(const RatVec& v);

// -- dense matrices (row-major) ----------------------------------------------

IntMat mat_from_rows(const std::vector<IntVec>& rows);
IntMat mat_from_cols(const std::vector<IntVec>& cols);
IntMat transpose(const IntMat& a);
RatMat transpose(const RatMat& a);
IntMat mat_mul(const IntMat& a, const IntMat& b);
RatMat mat_mul(const RatMat& a, const RatMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
RatVec mat_vec(const RatMat& a, const RatVec& x);
IntMat identity_int(int n);
RatMat identity_rat(int n);
RatMat to_rat(const IntMat& a);

int rank_rat(RatMat a);
inline int rank_int(const IntMat& a) { return rank_rat(to_rat(a)); }
Rat det_rat(RatMat a);
Int det_int(const IntMat& a);

// Any solution of a x = b, or nullopt when inconsistent.
std::optional<RatVec> solve_rat(RatMat a, RatVec b);
// Basis of the right nullspace of a.
std::vector<RatVec> nullspace_rat(RatMat a);
std::optional<RatMat> invert_rat(RatMat a);

// -- Smith normal form -------------------------------------------------------

// u * a * v = d with u, v unimodular and d diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
    IntMat u, u_inv;  // m x m
    IntMat v, v_inv;  // n x n
    IntMat d;         // m x n
    int rank = 0;
    std::vector<Int> invariants;  // the positive diagonal entries
};

SmithForm smith_normal_form(const IntMat& a);

// Basis (as vectors) of {x in Z^n : a x = 0}; the basis is saturated.
std::vector<IntVec> integer_kernel(const IntMat& a);

// Integer inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& a);

}  // namespace toric
