#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major
using RatMat = std::vector<RatVec>;

// "p/q" with the "/q" omitted when q == 1.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws SchemaError on anything else (q == 0 included).
Rat rat_from_string(const std::string& s);

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// floor(r) as an Int.
Int rat_floor(const Rat& r);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace toric
