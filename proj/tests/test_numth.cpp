#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicirc/numth.hpp"

using namespace dicirc;

TEST_CASE("gcd basics") {
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(7, 0) == 7);
  CHECK(gcd(4, 6) == 2);
  CHECK(gcd(3, 10) == 1);
  CHECK(gcd(0, 0) == 0);
}

TEST_CASE("totient values") {
  CHECK(totient(1) == 1);
  CHECK(totient(14) == 6);
  CHECK(totient(12) == 4);
  CHECK_THROWS_AS(totient(0), std::invalid_argument);

  // direct count oracle
  for (std::uint64_t n = 1; n <= 60; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= n; ++x)
      if (gcd(x, n) == 1) ++count;
    CHECK(totient(n) == count);
  }
}

TEST_CASE("totient is multiplicative on coprime arguments") {
  for (std::uint64_t m = 1; m <= 200; ++m)
    for (std::uint64_t n = 1; n <= 200; ++n)
      if (gcd(m, n) == 1) CHECK(totient(m * n) == totient(m) * totient(n));
}

TEST_CASE("totient divisor sums") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += totient(d);
    CHECK(sum == n);
  }
}

TEST_CASE("divisor lists") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(6) == std::vector<std::uint64_t>({1, 2, 3, 6}));
  CHECK(divisors(10) == std::vector<std::uint64_t>({1, 2, 5, 10}));
  CHECK(divisors(36) == std::vector<std::uint64_t>({1, 2, 3, 4, 6, 9, 12, 18, 36}));
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("additive and multiplicative orders") {
  CHECK(order_mod(3, 6, OrderKind::additive) == 2);  // t = p, n = 2p at p = 3
  CHECK(order_mod(1, 17, OrderKind::multiplicative) == 1);
  CHECK(order_mod(3, 10, OrderKind::multiplicative) == 4);  // 3, 9, 7, 1
  CHECK(order_mod(2, 6, OrderKind::additive) == 3);
  CHECK_THROWS_AS(order_mod(2, 10, OrderKind::multiplicative), std::invalid_argument);
}

TEST_CASE("primitive roots of Z_2p^*") {
  CHECK(primitive_root_2p(3) == 5);
  CHECK(primitive_root_2p(5) == 3);
  CHECK(primitive_root_2p(7) == 3);
  CHECK(primitive_root_2p(2) == 3);
  CHECK_THROWS_AS(primitive_root_2p(9), std::invalid_argument);
}

TEST_CASE("generator powers exhaust the unit group") {
  for (std::uint64_t p = 3; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const UnitGroup2p group = unit_group_2p(p);
    CHECK(group.elements.size() == p - 1);
    std::vector<std::uint64_t> powers;
    std::uint64_t value = 1;
    for (std::uint64_t e = 0; e + 1 < p; ++e) {
      powers.push_back(value);
      value = value * group.generator % (2 * p);
    }
    std::sort(powers.begin(), powers.end());
    CHECK(std::unique(powers.begin(), powers.end()) == powers.end());
    CHECK(powers == group.elements);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(11, 4) == 330);

  // Pascal's rule and row sums up to n = 64
  for (std::uint64_t n = 1; n <= 64; ++n) {
    BigInt row_sum = 0;
    for (std::int64_t j = 0; j <= static_cast<std::int64_t>(n); ++j) {
      CHECK(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
      row_sum += binomial(n, j);
    }
    CHECK(row_sum == BigInt(1) << n);
  }
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
