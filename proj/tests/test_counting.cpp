#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicirc/counting.hpp"
#include "dicirc/numth.hpp"
#include "dicirc/oracle.hpp"

using namespace dicirc;

TEST_CASE("constant substitution") {
  for (std::uint32_t p : {3u, 5u, 7u})
    CHECK(evaluate_at_constant(cycle_index(p), 1) == 1);
  // frozen from the exhaustive orbit sweeps, re-checked live below
  CHECK(evaluate_at_constant(cycle_index(3), 2) == 272);
  CHECK(evaluate_at_constant(cycle_index(5), 2) == 14256);
  CHECK(evaluate_at_constant(cycle_index(3), 2) == BigInt(enumerate_orbits(3, GroupTag::alpha_family).total));
  CHECK(evaluate_at_constant(cycle_index(5), 2) == BigInt(enumerate_orbits(5, GroupTag::alpha_family).total));
}

TEST_CASE("subset generating polynomial") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const UniPoly q = substitute_one_plus_x(cycle_index(p));
    CHECK(q.degree() == 4 * p - 1);
    BigInt at_one = 0;
    for (const BigInt& c : q.coeff) at_one += c;
    CHECK(at_one == evaluate_at_constant(cycle_index(p), 2));  // Q(1) consistency
    for (std::uint32_t k = 0; k <= q.degree(); ++k)
      CHECK(q.coeff[k] == q.coeff[q.degree() - k]);  // complementation symmetry
  }
  const UniPoly q3 = substitute_one_plus_x(cycle_index(3));
  CHECK(q3.coeff[0] == 1);
  CHECK(q3.coeff[11] == 1);
}

TEST_CASE("totals") {
  CHECK(count_total(3) == 272);
  CHECK(count_total(5) == 14256);
  CHECK(count_total(5) - count_circulant(5) - 4 == 14112);
  CHECK_THROWS_AS(count_total(2), std::invalid_argument);
}

TEST_CASE("circulant totals") {
  CHECK(count_circulant(3) == 20);
  CHECK(count_circulant(5) == 140);
  CHECK(count_circulant(7) > 0);  // integrality asserted inside
  // Burnside oracle: average fixed subsets over the unit action
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::uint32_t n = 2 * p;
    BigInt fixed_total = 0;
    for (std::uint64_t u : unit_group_2p(p).elements) {
      std::uint32_t cycles = 0;
      std::vector<bool> seen(n, false);
      for (std::uint32_t x = 1; x < n; ++x) {
        if (seen[x]) continue;
        ++cycles;
        std::uint32_t y = x;
        while (!seen[y]) {
          seen[y] = true;
          y = static_cast<std::uint32_t>(u * y % n);
        }
      }
      fixed_total += BigInt(1) << cycles;
    }
    CHECK(count_circulant(p) * (p - 1) == fixed_total);
  }
}

TEST_CASE("connected totals match the published values") {
  CHECK(count_connected(3) == 248);
  CHECK(count_connected(7) == 1616932);
  CHECK(count_connected(11) == BigInt("40002755244"));
}

TEST_CASE("per-degree counts") {
  CHECK(count_by_outdegree(3, 0) == 1);
  CHECK(count_by_outdegree(3, 11) == 1);
  CHECK(count_by_outdegree(3, 2) == 12);
  CHECK(count_by_outdegree(3, 9) == 12);
  CHECK_THROWS_AS(count_by_outdegree(3, 12), std::invalid_argument);
  for (std::uint32_t p : {3u, 5u, 13u}) {
    BigInt sum = 0;
    for (std::uint32_t k = 0; k <= 4 * p - 1; ++k) sum += count_by_outdegree(p, k);
    CHECK(sum == count_total(p));
  }
}

TEST_CASE("per-degree circulant counts") {
  CHECK(count_circulant_by_outdegree(3, 0) == 1);
  CHECK(count_circulant_by_outdegree(3, 1) == 3);
  CHECK(count_circulant_by_outdegree(3, 2) == 6);
  CHECK_THROWS_AS(count_circulant_by_outdegree(3, 6), std::invalid_argument);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    BigInt sum = 0;
    for (std::uint32_t k = 0; k <= 2 * p - 1; ++k) sum += count_circulant_by_outdegree(p, k);
    CHECK(sum == count_circulant(p));
  }
}

TEST_CASE("per-degree connected counts") {
  CHECK(count_connected_by_outdegree(3, 0) == 0);
  CHECK(count_connected_by_outdegree(3, 1) == 0);
  const std::vector<BigInt> row3 = {4, 17, 38, 53, 54, 41, 24, 12, 4, 1};
  for (std::uint32_t k = 2; k <= 11; ++k)
    CHECK(count_connected_by_outdegree(3, k) == row3[k - 2]);
  CHECK(count_connected_by_outdegree(5, 10) == 2448);
  CHECK(count_connected_by_outdegree(5, 11) == 2008);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    BigInt sum = 0;
    for (std::uint32_t k = 0; k <= 4 * p - 1; ++k) sum += count_connected_by_outdegree(p, k);
    CHECK(sum == count_connected(p));
  }
}

TEST_CASE("expanded per-degree closed form agrees with the generating function") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) CHECK_NOTHROW(crosscheck_outdegree_counts(p));
  // the partial weighting only survives while every odd divisor of p-1 has
  // totient 1
  CHECK(outdegree_expansion_deviations(3).empty());
  CHECK(outdegree_expansion_deviations(5).empty());
  CHECK_FALSE(outdegree_expansion_deviations(7).empty());
  CHECK_FALSE(outdegree_expansion_deviations(11).empty());
}

TEST_CASE("full reports validate and carry provenance") {
  for (std::uint32_t p : {3u, 5u, 13u}) {
    const CountReport report = full_report(p);
    CHECK_NOTHROW(validate(report));
    CHECK(report.by_degree_provenance == Provenance::generating_function);
    CHECK(report.total_provenance == Provenance::closed_form);
    CHECK(report.has_circulant_counts());
  }
}

TEST_CASE("order-8 reports") {
  const QuaternionReports q = quaternion_counts();
  CHECK(q.alpha.total == 36);
  CHECK(q.alpha.connected == 26);
  CHECK(q.alpha.group_tag == GroupTag::alpha_family);
  const std::vector<BigInt> expected_connected = {0, 0, 2, 6, 8, 6, 3, 1};
  CHECK(q.alpha.connected_by_degree == expected_connected);
  CHECK(q.alpha.by_degree == std::vector<BigInt>({1, 3, 6, 8, 8, 6, 3, 1}));
  CHECK_FALSE(q.alpha.has_circulant_counts());
  CHECK(q.alpha.total_provenance == Provenance::oracle);

  // the full automorphism group (24 maps) merges further classes:
  // Burnside over the octahedral action gives 20 orbits, 14 connected
  CHECK(q.full.group_tag == GroupTag::full_aut);
  CHECK(q.full.total == 20);
  CHECK(q.full.connected == 14);
}

TEST_CASE("report serialization round-trips") {
  std::vector<CountReport> reports = {full_report(3)};
  const QuaternionReports q = quaternion_counts();
  reports.push_back(q.alpha);
  reports.push_back(q.full);
  const std::string json = reports_to_json(reports);
  const std::vector<CountReport> parsed = reports_from_json(json);
  REQUIRE(parsed.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(parsed[i].p == reports[i].p);
    CHECK(parsed[i].group_tag == reports[i].group_tag);
    CHECK(parsed[i].total == reports[i].total);
    CHECK(parsed[i].by_degree == reports[i].by_degree);
    CHECK(parsed[i].circulant_by_degree == reports[i].circulant_by_degree);
    CHECK(parsed[i].connected_by_degree == reports[i].connected_by_degree);
  }
  CHECK(reports_to_json(parsed) == json);  // reprint identity
}

TEST_CASE("table rendering") {
  const std::string text = render_connected_table(3, TableFormat::text);
  CHECK(text ==
        "p=2\t(2,6,8,6,3,1)\t26\n"
        "p=3\t(4,17,38,53,54,41,24,12,4,1)\t248\n");
  const std::string csv = render_connected_table(3, TableFormat::csv);
  CHECK(csv ==
        "2,2,6,8,6,3,1,26\n"
        "3,4,17,38,53,54,41,24,12,4,1,248\n");
  CHECK(render_connected_table(4, TableFormat::text) == text);  // 4 is not prime
}
