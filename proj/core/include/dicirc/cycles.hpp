#ifndef DICIRC_CYCLES_HPP
#define DICIRC_CYCLES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dicirc/group.hpp"
#include "dicirc/types.hpp"

// Cycle types of the automorphism action on A = T_{4p} \ {e}, both by direct
// cycle decomposition and by the closed-form case tables, and the cycle index
// polynomial assembled from them.

namespace dicirc {

// Sparse cycle-length -> multiplicity map; lengths with multiplicity 0 are
// absent.  The multiplicities of a permutation of A satisfy
// sum_k k * b_k = 4p - 1.
using CycleType = std::map<std::uint32_t, std::uint32_t>;

// Sparse multivariate polynomial in x_1..x_n with exact rational
// coefficients; each monomial is keyed by its exponent map (same shape as a
// cycle type).  For a cycle index every monomial has weighted degree
// sum_k k * e_k = n and the coefficients are positive rationals summing to 1.
struct CycleIndexPoly {
  std::uint32_t weighted_degree = 0;  // 4p - 1
  std::map<CycleType, Rational> terms;

  friend bool operator==(const CycleIndexPoly&, const CycleIndexPoly&) = default;
};

// Multiplicities obtained by walking every orbit of the permutation.
CycleType cycle_type_direct(const PointPermutation& perm);
CycleType cycle_type_direct(const DicyclicGroup& group, Automorphism alpha);

// The case-table cycle type of (s, t) acting on A, odd p only.
// Contributions routed to the same length accumulate.
CycleType cycle_type_closed_form(std::uint32_t p, std::uint32_t s, std::uint32_t t);

// Average of the closed-form monomials over the whole family; odd p only.
CycleIndexPoly cycle_index(std::uint32_t p);

// Average over directly decomposed permutations.
CycleIndexPoly cycle_index_direct(std::uint32_t p);
CycleIndexPoly cycle_index_of_permutations(const std::vector<PointPermutation>& perms);

// The expanded four-part closed expression for the cycle index; distinct
// construction kept solely so tests can pin it against cycle_index().
// Signed intermediate terms must cancel to positive final coefficients.
CycleIndexPoly cycle_index_formula(std::uint32_t p);

// Canonical text rendering: monomials sorted by descending exponent vector,
// coefficients as num/den, variables as x_k^e.
std::string to_string(const CycleIndexPoly& poly);

// Throws std::logic_error unless every monomial has the stated weighted
// degree, every coefficient is positive, and the coefficients sum to 1.
void validate(const CycleIndexPoly& poly);

}  // namespace dicirc

#endif
