#ifndef DICIRC_TYPES_HPP
#define DICIRC_TYPES_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dicirc {

// All counts and coefficients are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Characteristic bitmask of a connection set S over the fixed ordering of
// A = T_{4p} \ {e}:  a^1, ..., a^{2p-1}, b, a b, ..., a^{2p-1} b.
// Bit i set means the i-th element of A belongs to S.  64 bits cover every
// order this library enumerates (4p - 1 <= 51 for p <= 13).
using ConnectionSet = std::uint64_t;

// Which automorphism group generated a set of orbits.
enum class GroupTag {
  alpha_family,     // the maps (s, t): a^i -> a^{si}, a^j b -> a^{sj+t} b
  full_aut,         // every multiplication-preserving bijection (small orders)
  circulant_units,  // Z_{2p}^* acting on subsets of Z_{2p} \ {0}
};

// How a count entry was obtained.
enum class Provenance {
  closed_form,          // evaluated formula
  generating_function,  // coefficient extraction from the subset polynomial
  oracle,               // exhaustive orbit sweep
  reference_table,      // published classification value
};

const char* to_string(GroupTag tag);
const char* to_string(Provenance prov);

}  // namespace dicirc

#endif
