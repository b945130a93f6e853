#include "dicirc/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dicirc/numth.hpp"

namespace dicirc {

CycleType cycle_type_direct(const PointPermutation& perm) {
  CycleType type;
  std::vector<bool> visited(perm.size(), false);
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    std::uint32_t length = 0;
    std::uint32_t i = start;
    do {
      visited[i] = true;
      i = perm[i];
      ++length;
    } while (i != start);
    type[length] += 1;
  }
  return type;
}

CycleType cycle_type_direct(const DicyclicGroup& group, Automorphism alpha) {
  return cycle_type_direct(group.point_permutation(alpha));
}

namespace {

// Discrete log of s with respect to the smallest generator of Z_{2p}^*.
std::uint64_t dlog_unit(std::uint64_t s, std::uint64_t p) {
  const std::uint64_t n = 2 * p;
  const std::uint64_t z = primitive_root_2p(p);
  std::uint64_t power = 1;
  for (std::uint64_t e = 0; e < p - 1; ++e) {
    if (power == s % n) return e;
    power = power * z % n;
  }
  throw std::invalid_argument("dlog_unit: s not a unit mod 2p");
}

}  // namespace

CycleType cycle_type_closed_form(std::uint32_t p, std::uint32_t s, std::uint32_t t) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("cycle_type_closed_form: p must be an odd prime");
  const std::uint32_t two_p = 2 * p;
  s %= two_p;
  t %= two_p;
  if (gcd(s, two_p) != 1)
    throw std::invalid_argument("cycle_type_closed_form: s must be a unit mod 2p");

  CycleType type;
  if (s == 1) {
    if (t == 0) {
      type[1] = 4 * p - 1;
    } else {
      type[1] = 2 * p - 1;
      if (t == p)
        type[2] += p;
      else if (t % 2 == 0)
        type[p] += 2;
      else
        type[2 * p] += 1;
    }
    return type;
  }

  const std::uint32_t g =
      static_cast<std::uint32_t>(gcd(dlog_unit(s, p), p - 1));
  const std::uint32_t len = (p - 1) / g;  // multiplicative order of s
  if (t % 2 == 0) {
    type[1] = 3;
    type[len] += 4 * g;
  } else {
    type[1] = 1;
    type[2] += 1;
    if (len % 2 == 0) {
      type[len] += 4 * g;
    } else {
      type[len] += 2 * g;
      type[2 * len] += g;
    }
  }
  return type;
}

namespace {

void add_monomial(CycleIndexPoly& poly, const CycleType& monomial, const Rational& coeff) {
  auto [it, inserted] = poly.terms.emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) poly.terms.erase(it);
  }
}

}  // namespace

CycleIndexPoly cycle_index(std::uint32_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("cycle_index: p must be an odd prime");
  CycleIndexPoly poly;
  poly.weighted_degree = 4 * p - 1;
  const auto family = all_automorphisms(p);
  const Rational weight(1, family.size());
  for (const Automorphism& alpha : family)
    add_monomial(poly, cycle_type_closed_form(p, alpha.s, alpha.t), weight);
  validate(poly);
  return poly;
}

CycleIndexPoly cycle_index_of_permutations(const std::vector<PointPermutation>& perms) {
  if (perms.empty())
    throw std::invalid_argument("cycle_index_of_permutations: empty permutation list");
  CycleIndexPoly poly;
  poly.weighted_degree = static_cast<std::uint32_t>(perms.front().size());
  const Rational weight(1, perms.size());
  for (const PointPermutation& perm : perms)
    add_monomial(poly, cycle_type_direct(perm), weight);
  validate(poly);
  return poly;
}

CycleIndexPoly cycle_index_direct(std::uint32_t p) {
  if (!is_prime(p) || p > 13)
    throw std::invalid_argument("cycle_index_direct: p must be a prime <= 13");
  const DicyclicGroup group(p);
  std::vector<PointPermutation> perms;
  for (const Automorphism& alpha : all_automorphisms(p))
    perms.push_back(group.point_permutation(alpha));
  return cycle_index_of_permutations(perms);
}

namespace {

// Multiplies x_k^e into a monomial, accumulating exponents on collision.
CycleType monomial_product(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> factors) {
  CycleType m;
  for (const auto& [var, exp] : factors)
    if (exp > 0) m[var] += exp;
  return m;
}

}  // namespace

CycleIndexPoly cycle_index_formula(std::uint32_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("cycle_index_formula: p must be an odd prime");
  CycleIndexPoly poly;
  poly.weighted_degree = 4 * p - 1;

  const Rational head(1, 2 * p);
  // x_1^{2p-1} (x_p^2 + x_{2p} - x_1^{2p} - x_2^p)
  add_monomial(poly, monomial_product({{1, 2 * p - 1}, {p, 2}}), head);
  add_monomial(poly, monomial_product({{1, 2 * p - 1}, {2 * p, 1}}), head);
  add_monomial(poly, monomial_product({{1, 4 * p - 1}}), -head);
  add_monomial(poly, monomial_product({{1, 2 * p - 1}, {2, p}}), -head);

  const Rational tail(1, 2 * (p - 1));
  for (std::uint64_t d : divisors(p - 1)) {
    const std::uint32_t dd = static_cast<std::uint32_t>(d);
    const Rational coeff = tail * totient(d);
    // x_1^3 sum over all divisors
    add_monomial(poly, monomial_product({{1, 3}, {dd, 4 * (p - 1) / dd}}), coeff);
    if (d % 2 == 0) {
      // x_1 x_2 sum over even divisors
      add_monomial(poly, monomial_product({{1, 1}, {2, 1}, {dd, 4 * (p - 1) / dd}}), coeff);
    } else {
      // x_1 x_2 sum over odd divisors
      add_monomial(poly,
                   monomial_product({{1, 1}, {2, 1}, {dd, 2 * (p - 1) / dd}, {2 * dd, (p - 1) / dd}}),
                   coeff);
    }
  }
  validate(poly);
  return poly;
}

void validate(const CycleIndexPoly& poly) {
  Rational sum = 0;
  for (const auto& [monomial, coeff] : poly.terms) {
    std::uint64_t degree = 0;
    for (const auto& [var, exp] : monomial) degree += std::uint64_t{var} * exp;
    if (degree != poly.weighted_degree)
      throw std::logic_error("cycle index: monomial of wrong weighted degree");
    if (coeff <= 0)
      throw std::logic_error("cycle index: nonpositive coefficient survived");
    sum += coeff;
  }
  if (sum != 1) throw std::logic_error("cycle index: coefficients do not sum to 1");
}

std::string to_string(const CycleIndexPoly& poly) {
  // Descending lexicographic order on dense exponent vectors puts the
  // identity monomial x_1^n first.
  std::vector<std::pair<std::vector<std::uint32_t>, const CycleType*>> order;
  for (const auto& [monomial, coeff] : poly.terms) {
    (void)coeff;
    std::vector<std::uint32_t> dense(poly.weighted_degree + 1, 0);
    for (const auto& [var, exp] : monomial) dense[var] = exp;
    order.emplace_back(std::move(dense), &monomial);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::ostringstream out;
  bool first = true;
  for (const auto& [dense, monomial] : order) {
    (void)dense;
    if (!first) out << " + ";
    first = false;
    const Rational& coeff = poly.terms.at(*monomial);
    out << numerator(coeff);
    if (denominator(coeff) != 1) out << "/" << denominator(coeff);
    for (const auto& [var, exp] : *monomial) out << " x_" << var << "^" << exp;
  }
  return out.str();
}

}  // namespace dicirc
