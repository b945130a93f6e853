#include "dicirc/numth.hpp"

#include <stdexcept>

namespace dicirc {

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::alpha_family: return "alpha_family";
    case GroupTag::full_aut: return "full_aut";
    case GroupTag::circulant_units: return "circulant_units";
  }
  return "?";
}

const char* to_string(Provenance prov) {
  switch (prov) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::generating_function: return "generating_function";
    case Provenance::oracle: return "oracle";
    case Provenance::reference_table: return "reference_table";
  }
  return "?";
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (a != 0) {
    b %= a;
    std::swap(a, b);
  }
  return b;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      result -= result / q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t order_mod(std::uint64_t x, std::uint64_t n, OrderKind kind) {
  if (n == 0) throw std::invalid_argument("order_mod: modulus must be >= 1");
  x %= n;
  if (kind == OrderKind::additive) {
    return n / gcd(x, n);
  }
  if (gcd(x, n) != 1)
    throw std::invalid_argument("order_mod: multiplicative order needs gcd(x, n) = 1");
  std::uint64_t value = x % n;
  std::uint64_t m = 1;
  while (value != 1 % n) {
    value = value * x % n;
    ++m;
  }
  return m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t primitive_root_2p(std::uint64_t p) {
  if (p == 2) return 3;  // Z_4^* = {1, 3}, generated by 3
  if (!is_prime(p) || p % 2 == 0)
    throw std::invalid_argument("primitive_root_2p: p must be an odd prime");
  const std::uint64_t n = 2 * p;
  for (std::uint64_t z = 2; z < n; ++z) {
    if (gcd(z, n) != 1) continue;
    if (order_mod(z, n, OrderKind::multiplicative) == p - 1) return z;
  }
  throw std::logic_error("primitive_root_2p: no generator found");
}

UnitGroup2p unit_group_2p(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("unit_group_2p: p must be prime");
  UnitGroup2p g;
  g.p = p;
  const std::uint64_t n = 2 * p;
  for (std::uint64_t x = 1; x < n; ++x)
    if (gcd(x, n) == 1) g.elements.push_back(x);
  g.generator = primitive_root_2p(p);
  return g;
}

BigInt binomial(std::uint64_t n, std::int64_t j) {
  if (j < 0 || static_cast<std::uint64_t>(j) > n) return 0;
  std::uint64_t k = static_cast<std::uint64_t>(j);
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

}  // namespace dicirc
