#ifndef DICIRC_NUMTH_HPP
#define DICIRC_NUMTH_HPP

#include <cstdint>
#include <vector>

#include "dicirc/types.hpp"

// Exact number-theoretic primitives.  Inputs live in the tiny range the
// enumeration needs (at most a few hundred), so everything is computed by
// trial division; outputs that can grow (binomial coefficients) are exact
// big integers.

namespace dicirc {

// gcd(0, b) = b.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Euler's totient via trial-division factorization.  Rejects n = 0.
std::uint64_t totient(std::uint64_t n);

// All positive divisors of n in increasing order.  Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

enum class OrderKind {
  additive,        // least m >= 1 with m * x == 0 (mod n)
  multiplicative,  // least m >= 1 with x^m == 1 (mod n); requires gcd(x, n) = 1
};

std::uint64_t order_mod(std::uint64_t x, std::uint64_t n, OrderKind kind);

// Trial-division primality test; adequate for the small moduli used here.
bool is_prime(std::uint64_t n);

// Smallest generator of the cyclic group Z_{2p}^*.  For p = 2 the group is
// {1, 3} and the dedicated branch returns 3.
std::uint64_t primitive_root_2p(std::uint64_t p);

// The unit group Z_{2p}^* with its elements listed in increasing order and
// its smallest generator.
struct UnitGroup2p {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> elements;  // {x in Z_{2p} : gcd(x, 2p) = 1}
  std::uint64_t generator = 0;          // multiplicative order p - 1 (2 for p = 2)
};

UnitGroup2p unit_group_2p(std::uint64_t p);

// Exact binomial coefficient; 0 whenever j < 0 or j > n.
BigInt binomial(std::uint64_t n, std::int64_t j);

}  // namespace dicirc

#endif
