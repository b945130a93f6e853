#ifndef DICIRC_GROUP_HPP
#define DICIRC_GROUP_HPP

#include <cstdint>
#include <vector>

#include "dicirc/types.hpp"

// The dicyclic group T_{4p} = <a, b | a^{2p} = 1, a^p = b^2, b^-1 a b = a^-1>
// as a concrete algebra on normal-form elements, together with its
// automorphism family and small-order brute-force automorphism search.

namespace dicirc {

// Normal form: a^exponent when b_part == 0, a^exponent * b when b_part == 1,
// with exponent reduced mod 2p.  The identity is {0, 0}.
struct GroupElement {
  std::uint32_t b_part = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// The automorphism a^i -> a^{si}, a^j b -> a^{sj+t} b.  Requires gcd(s, 2p) = 1.
struct Automorphism {
  std::uint32_t s = 1;
  std::uint32_t t = 0;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

// A permutation of the 4p-1 non-identity elements, indexed by the fixed
// ordering of A (see ConnectionSet in types.hpp).
using PointPermutation = std::vector<std::uint32_t>;

class DicyclicGroup {
 public:
  explicit DicyclicGroup(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t order() const { return 4 * p_; }        // |T_{4p}|
  std::uint32_t point_count() const { return 4 * p_ - 1; }  // |A|

  GroupElement identity() const { return {0, 0}; }
  GroupElement mul(GroupElement g, GroupElement h) const;
  GroupElement inverse(GroupElement g) const;

  // Fixed ordering of A = T_{4p} \ {e}: index 0..2p-2 are a^1..a^{2p-1},
  // index 2p-1+j is a^j b.
  GroupElement point(std::uint32_t index) const;
  std::uint32_t point_index(GroupElement g) const;  // rejects the identity

  // Vertex ordering for digraphs: the identity first, then the A ordering.
  GroupElement vertex(std::uint32_t index) const;
  std::uint32_t vertex_index(GroupElement g) const;

  GroupElement apply_automorphism(Automorphism alpha, GroupElement g) const;
  ConnectionSet apply_to_set(Automorphism alpha, ConnectionSet s) const;

  // alpha as a permutation of the points of A.
  PointPermutation point_permutation(Automorphism alpha) const;

  // Closure of S U {e} under multiplication, as sorted vertex indices.
  std::vector<std::uint32_t> generated_subgroup(ConnectionSet s) const;
  bool is_connected(ConnectionSet s) const;

 private:
  std::uint32_t p_;
  std::uint32_t two_p_;
};

// The family {(s, t) : s in Z_{2p}^*, t in Z_{2p}}, ordered by (s, t).
// For odd p this is the whole automorphism group (2p(p-1) maps); for p = 2
// it is the 8-member proper subfamily of Aut(Q_8).
std::vector<Automorphism> all_automorphisms(std::uint32_t p);

// Every bijection of T_{4p} fixing e and preserving multiplication, found by
// backtracking over images of the generators.  Guarded to 4p <= 16.
std::vector<PointPermutation> full_automorphisms_bruteforce(std::uint32_t p);

}  // namespace dicirc

#endif
