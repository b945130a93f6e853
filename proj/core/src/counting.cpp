#include "dicirc/counting.hpp"

#include <stdexcept>

#include "dicirc/numth.hpp"
#include "dicirc/oracle.hpp"

namespace dicirc {

namespace {

BigInt pow2(std::uint64_t e) { return BigInt(1) << e; }

BigInt require_integer(const Rational& value, const char* what) {
  if (denominator(value) != 1)
    throw std::logic_error(std::string(what) + ": non-integer result");
  return numerator(value);
}

void require_odd_prime(std::uint32_t p, const char* what) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument(std::string(what) + ": p must be an odd prime");
}

}  // namespace

BigInt evaluate_at_constant(const CycleIndexPoly& poly, std::uint32_t m) {
  Rational sum = 0;
  for (const auto& [monomial, coeff] : poly.terms) {
    BigInt value = 1;
    for (const auto& [var, exp] : monomial) {
      (void)var;
      for (std::uint32_t i = 0; i < exp; ++i) value *= m;
    }
    sum += coeff * value;
  }
  return require_integer(sum, "evaluate_at_constant");
}

UniPoly substitute_one_plus_x(const CycleIndexPoly& poly) {
  const std::uint32_t n = poly.weighted_degree;
  std::vector<Rational> acc(n + 1, Rational(0));
  for (const auto& [monomial, coeff] : poly.terms) {
    // product over variables of (1 + x^var)^exp, degree exactly n
    std::vector<BigInt> prod = {1};
    for (const auto& [var, exp] : monomial) {
      // (1 + x^var)^exp has binomial(exp, j) at degree var*j
      std::vector<BigInt> next(prod.size() + std::size_t{var} * exp, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] == 0) continue;
        for (std::uint32_t j = 0; j <= exp; ++j)
          next[i + std::size_t{var} * j] += prod[i] * binomial(exp, j);
      }
      prod = std::move(next);
    }
    if (prod.size() != n + 1)
      throw std::logic_error("substitute_one_plus_x: degree mismatch");
    for (std::size_t i = 0; i <= n; ++i) acc[i] += coeff * prod[i];
  }
  UniPoly q;
  q.coeff.reserve(n + 1);
  for (const Rational& c : acc) {
    BigInt v = require_integer(c, "substitute_one_plus_x");
    if (v < 0) throw std::logic_error("substitute_one_plus_x: negative coefficient");
    q.coeff.push_back(std::move(v));
  }
  return q;
}

BigInt count_total(std::uint32_t p) {
  require_odd_prime(p, "count_total");
  Rational sum = Rational(pow2(2 * p - 1), p) * (Rational(3) - pow2(2 * p - 1) - pow2(p - 1));
  for (std::uint64_t d : divisors(p - 1)) {
    const BigInt phi = totient(d);
    sum += Rational(4, p - 1) * phi * pow2(4 * (p - 1) / d);
    if (d % 2 == 0)
      sum += Rational(2, p - 1) * phi * pow2(4 * (p - 1) / d);
    else
      sum += Rational(2, p - 1) * phi * pow2(3 * (p - 1) / d);
  }
  BigInt total = require_integer(sum, "count_total");
  if (total != evaluate_at_constant(cycle_index(p), 2))
    throw std::logic_error("count_total: closed form disagrees with cycle index at 2");
  return total;
}

BigInt count_circulant(std::uint32_t p) {
  require_odd_prime(p, "count_circulant");
  Rational sum = 0;
  for (std::uint64_t d : divisors(p - 1))
    sum += Rational(totient(d)) * pow2((2 * p - 2) / d + 1);
  sum /= p - 1;
  return require_integer(sum, "count_circulant");
}

BigInt count_connected(std::uint32_t p) {
  return count_total(p) - count_circulant(p) - 4;
}

BigInt count_by_outdegree(std::uint32_t p, std::uint32_t k) {
  require_odd_prime(p, "count_by_outdegree");
  if (k > 4 * p - 1) throw std::invalid_argument("count_by_outdegree: k out of range");
  if (k == 0 || k == 4 * p - 1) return 1;
  return substitute_one_plus_x(cycle_index(p)).coeff[k];
}

Rational outdegree_expansion(std::uint32_t p, std::uint32_t k, PhiWeighting weighting) {
  require_odd_prime(p, "outdegree_expansion");
  if (k > 4 * p - 1) throw std::invalid_argument("outdegree_expansion: k out of range");
  const std::int64_t sk = k;

  // bracket from x_1^{2p-1}(x_p^2 + x_{2p} - x_1^{2p} - x_2^p)
  Rational head = 0;
  for (std::int64_t j = 0; j <= 2; ++j)
    head += binomial(2, j) * binomial(2 * p - 1, sk - std::int64_t{p} * j);
  head += binomial(2 * p - 1, sk);
  head += binomial(2 * p - 1, sk - 2 * std::int64_t{p});
  head -= binomial(4 * p - 1, sk);
  for (std::int64_t j = 0; j <= p; ++j)
    head -= binomial(p, j) * binomial(2 * p - 1, sk - 2 * j);
  Rational sum = head / (2 * p);

  // (1+x)^3 and (1+x)(1+x^2) prefactors contribute shifts i = 0..3 with
  // weights C(3,i) and 1 respectively.
  for (std::uint32_t i = 0; i <= 3; ++i) {
    if (sk - i < 0) continue;
    const std::uint64_t shifted = k - i;
    const std::uint64_t cube_weight = (i == 0 || i == 3) ? 1 : 3;
    for (std::uint64_t d : divisors(p - 1)) {
      if (shifted % d != 0) continue;  // gcd(n, 0) = n: k - i = 0 admits all d
      const BigInt phi = totient(d);
      const std::int64_t quotient = static_cast<std::int64_t>(shifted / d);
      if (d % 2 == 0) {
        // even divisors: merged weights (1, 2, 2, 1) over 1/(p-1)
        sum += Rational((cube_weight == 1 ? 1 : 2) * phi * binomial(4 * (p - 1) / d, quotient),
                        p - 1);
      } else {
        Rational odd_part = Rational(cube_weight) * phi * binomial(4 * (p - 1) / d, quotient);
        BigInt paired = 0;
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>((p - 1) / d); ++j)
          paired += binomial(2 * (p - 1) / d, quotient - 2 * j) * binomial((p - 1) / d, j);
        odd_part += (weighting == PhiWeighting::full ? Rational(phi) : Rational(1)) * paired;
        sum += odd_part / (2 * (p - 1));
      }
    }
  }
  return sum;
}

void crosscheck_outdegree_counts(std::uint32_t p) {
  const UniPoly q = substitute_one_plus_x(cycle_index(p));
  for (std::uint32_t k = 0; k <= 4 * p - 1; ++k) {
    if (Rational(q.coeff[k]) != outdegree_expansion(p, k, PhiWeighting::full))
      throw std::logic_error("crosscheck_outdegree_counts: expansion disagrees with Q(x)");
  }
}

std::vector<std::uint32_t> outdegree_expansion_deviations(std::uint32_t p) {
  const UniPoly q = substitute_one_plus_x(cycle_index(p));
  std::vector<std::uint32_t> deviations;
  for (std::uint32_t k = 0; k <= 4 * p - 1; ++k)
    if (Rational(q.coeff[k]) != outdegree_expansion(p, k, PhiWeighting::partial))
      deviations.push_back(k);
  return deviations;
}

BigInt count_circulant_by_outdegree(std::uint32_t p, std::uint32_t k) {
  require_odd_prime(p, "count_circulant_by_outdegree");
  if (k > 2 * p - 1)
    throw std::invalid_argument("count_circulant_by_outdegree: k out of range");
  Rational sum = 0;
  for (std::uint32_t i = 0; i <= 1; ++i) {
    if (static_cast<std::int64_t>(k) - i < 0) continue;
    const std::uint64_t shifted = k - i;
    for (std::uint64_t d : divisors(p - 1)) {
      if (shifted % d != 0) continue;
      sum += Rational(totient(d)) *
             binomial(2 * (p - 1) / d, static_cast<std::int64_t>(shifted / d));
    }
  }
  sum /= p - 1;
  return require_integer(sum, "count_circulant_by_outdegree");
}

BigInt count_connected_by_outdegree(std::uint32_t p, std::uint32_t k) {
  require_odd_prime(p, "count_connected_by_outdegree");
  if (k > 4 * p - 1)
    throw std::invalid_argument("count_connected_by_outdegree: k out of range");
  if (k <= 1) return 0;
  // Disconnected sets not inside <a> fall into four classes, one per
  // representative {b}, {b, a^p b}, {a^p, b}, {a^p, b, a^p b}: hence the
  // constants -2 at k = 2, -1 at k = 3, and -4 on the grand total.  The
  // orbit oracle confirms them (see verify_formulas).
  if (k == 2) return count_by_outdegree(p, k) - count_circulant_by_outdegree(p, k) - 2;
  if (k == 3) return count_by_outdegree(p, k) - count_circulant_by_outdegree(p, k) - 1;
  if (k <= 2 * p - 1) return count_by_outdegree(p, k) - count_circulant_by_outdegree(p, k);
  return count_by_outdegree(p, k);
}

void validate(const CountReport& report) {
  const std::uint32_t n = 4 * report.p - 1;
  if (report.by_degree.size() != n + 1 || report.connected_by_degree.size() != n + 1)
    throw std::logic_error("CountReport: degree vectors of wrong length");
  BigInt sum = 0, connected_sum = 0;
  for (std::uint32_t k = 0; k <= n; ++k) {
    sum += report.by_degree[k];
    connected_sum += report.connected_by_degree[k];
    if (report.by_degree[k] != report.by_degree[n - k])
      throw std::logic_error("CountReport: per-degree counts not palindromic");
  }
  if (sum != report.total) throw std::logic_error("CountReport: degree counts do not sum to total");
  if (connected_sum != report.connected)
    throw std::logic_error("CountReport: connected degree counts do not sum to connected total");
  if (report.connected_by_degree[0] != 0 || report.connected_by_degree[1] != 0)
    throw std::logic_error("CountReport: connected counts at k = 0, 1 must vanish");
  if (report.has_circulant_counts()) {
    BigInt circulant_sum = 0;
    for (const BigInt& v : report.circulant_by_degree) circulant_sum += v;
    if (circulant_sum != report.circulant)
      throw std::logic_error("CountReport: circulant degree counts do not sum to circulant total");
  }
}

CountReport full_report(std::uint32_t p) {
  require_odd_prime(p, "full_report");
  CountReport report;
  report.p = p;
  report.group_tag = GroupTag::alpha_family;
  report.total = count_total(p);
  report.circulant = count_circulant(p);
  report.connected = count_connected(p);
  const UniPoly q = substitute_one_plus_x(cycle_index(p));
  report.by_degree = q.coeff;
  for (std::uint32_t k = 0; k <= 2 * p - 1; ++k)
    report.circulant_by_degree.push_back(count_circulant_by_outdegree(p, k));
  for (std::uint32_t k = 0; k <= 4 * p - 1; ++k)
    report.connected_by_degree.push_back(count_connected_by_outdegree(p, k));
  validate(report);
  return report;
}

namespace {

CountReport report_from_summary(const OrbitSummary& summary) {
  CountReport report;
  report.p = summary.p;
  report.group_tag = summary.tag;
  report.total = summary.total;
  report.connected = 0;
  for (std::uint64_t c : summary.connected_by_size) report.connected += c;
  for (std::uint64_t c : summary.by_size) report.by_degree.emplace_back(c);
  for (std::uint64_t c : summary.connected_by_size) report.connected_by_degree.emplace_back(c);
  report.total_provenance = Provenance::oracle;
  report.connected_provenance = Provenance::oracle;
  report.by_degree_provenance = Provenance::oracle;
  report.connected_by_degree_provenance = Provenance::oracle;
  validate(report);
  return report;
}

}  // namespace

QuaternionReports quaternion_counts() {
  QuaternionReports result;
  result.alpha = report_from_summary(enumerate_orbits(2, GroupTag::alpha_family, {}));
  result.full = report_from_summary(enumerate_orbits(2, GroupTag::full_aut, {}));
  return result;
}

}  // namespace dicirc
