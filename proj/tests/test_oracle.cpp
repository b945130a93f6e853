#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dicirc/counting.hpp"
#include "dicirc/oracle.hpp"

using namespace dicirc;

TEST_CASE("alpha-family sweeps") {
  const OrbitSummary t12 = enumerate_orbits(3, GroupTag::alpha_family);
  CHECK(t12.total == 272);
  CHECK(t12.by_size[2] == 12);
  for (std::uint32_t k = 0; k <= 11; ++k) CHECK(t12.by_size[k] == t12.by_size[11 - k]);

  const OrbitSummary t20 = enumerate_orbits(5, GroupTag::alpha_family);
  CHECK(t20.total == 14256);
  for (std::uint32_t k = 0; k <= 19; ++k) CHECK(t20.by_size[k] == t20.by_size[19 - k]);

  const OrbitSummary q8 = enumerate_orbits(2, GroupTag::alpha_family);
  CHECK(q8.total == 36);
  std::uint64_t connected = 0;
  for (std::uint64_t c : q8.connected_by_size) connected += c;
  CHECK(connected == 26);
}

TEST_CASE("full-group sweep at order 8") {
  const OrbitSummary q8 = enumerate_orbits(2, GroupTag::full_aut);
  CHECK(q8.total == 20);
  std::uint64_t connected = 0;
  for (std::uint64_t c : q8.connected_by_size) connected += c;
  CHECK(connected == 14);
}

TEST_CASE("full-group sweep coincides with the family at order 12") {
  const OrbitSummary family = enumerate_orbits(3, GroupTag::alpha_family);
  const OrbitSummary full = enumerate_orbits(3, GroupTag::full_aut);
  CHECK(family.by_size == full.by_size);
  CHECK(family.connected_by_size == full.connected_by_size);
}

TEST_CASE("circulant sweeps") {
  const OrbitSummary c6 = enumerate_circulant_orbits(3);
  CHECK(c6.total == 20);
  CHECK(c6.by_size[1] == 3);  // {1,5}, {2,4}, {3}
  CHECK(c6.connected_by_size.empty());
  CHECK(enumerate_circulant_orbits(5).total == 140);
  CHECK_THROWS_AS(enumerate_circulant_orbits(17), std::invalid_argument);
}

TEST_CASE("sweep result does not depend on partitioning") {
  SweepOptions reference_options;
  reference_options.with_representatives = true;
  const OrbitSummary reference = enumerate_orbits(3, GroupTag::alpha_family, reference_options);
  for (std::uint32_t partitions : {2u, 3u, 7u, 16u}) {
    SweepOptions options;
    options.partitions = partitions;
    options.with_representatives = true;
    const OrbitSummary swept = enumerate_orbits(3, GroupTag::alpha_family, options);
    CHECK(swept.by_size == reference.by_size);
    CHECK(swept.connected_by_size == reference.connected_by_size);
    CHECK(swept.representatives_by_size == reference.representatives_by_size);
  }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(enumerate_orbits(7, GroupTag::alpha_family), BudgetExceeded);
  SweepOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_orbits(2, GroupTag::alpha_family, tiny), BudgetExceeded);
}

TEST_CASE("representatives are orbit minima in increasing order") {
  const std::vector<std::uint64_t> singletons = representatives(2, 1, false);
  CHECK(singletons == std::vector<std::uint64_t>({0x1, 0x2, 0x8}));  // {a}, {a^2}, {b}

  std::uint64_t total = 0;
  for (std::uint32_t k = 0; k <= 7; ++k) total += representatives(2, k, false).size();
  CHECK(total == 36);

  CHECK(representatives(3, 0, false) == std::vector<std::uint64_t>{0});
  CHECK(representatives(3, 2, true).size() == 4);

  const DicyclicGroup g(3);
  const auto family = all_automorphisms(3);
  for (std::uint32_t k = 0; k <= 11; ++k) {
    std::uint64_t previous = 0;
    bool first = true;
    for (std::uint64_t mask : representatives(3, k, false)) {
      if (!first) CHECK(mask > previous);
      previous = mask;
      first = false;
      for (const Automorphism& alpha : family) CHECK(g.apply_to_set(alpha, mask) >= mask);
    }
  }
}

TEST_CASE("orbit sizes divide the group order") {
  std::mt19937_64 rng(987654321);
  for (std::uint32_t p : {3u, 5u}) {
    const DicyclicGroup g(p);
    const auto family = all_automorphisms(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << g.point_count()) - 1);
      std::set<std::uint64_t> orbit;
      for (const Automorphism& alpha : family) orbit.insert(g.apply_to_set(alpha, mask));
      CHECK(family.size() % orbit.size() == 0);
    }
  }
}

TEST_CASE("digraph construction") {
  const Digraph empty = build_cayley_digraph(3, 0);
  CHECK(empty.vertex_count == 12);
  CHECK(empty.arcs.empty());

  // S = {a} at order 8: the two <a>-cosets are traversed as disjoint 4-cycles
  const Digraph cycles = build_cayley_digraph(2, 0x1);
  CHECK(cycles.arcs.size() == 8);
  std::set<std::pair<std::uint32_t, std::uint32_t>> arcs(cycles.arcs.begin(), cycles.arcs.end());
  CHECK(arcs == std::set<std::pair<std::uint32_t, std::uint32_t>>(
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}}));
}

TEST_CASE("every vertex has out-degree |S|") {
  std::mt19937_64 rng(24680);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t p = trial % 2 == 0 ? 3 : 5;
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << (4 * p - 1)) - 1);
    const Digraph digraph = build_cayley_digraph(p, mask);
    std::vector<std::uint32_t> out_degree(digraph.vertex_count, 0);
    for (const auto& [u, v] : digraph.arcs) {
      (void)v;
      ++out_degree[u];
    }
    for (std::uint32_t d : out_degree) CHECK(d == __builtin_popcountll(mask));
  }
}

TEST_CASE("reachability from the identity equals the generated subgroup") {
  for (std::uint32_t p : {2u, 3u}) {
    const DicyclicGroup g(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.point_count()); ++mask) {
      const Digraph digraph = build_cayley_digraph(p, mask);
      CHECK(reachable_from_identity(digraph) == g.generated_subgroup(mask));
    }
  }
  std::mt19937_64 rng(13577531);
  const DicyclicGroup g5(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << g5.point_count()) - 1);
    CHECK(reachable_from_identity(build_cayley_digraph(5, mask)) == g5.generated_subgroup(mask));
  }
}

TEST_CASE("rendering formats") {
  const std::string arc_list = render_arc_list(2, 0x8);  // S = {b}
  CHECK(arc_list.substr(0, 12) == "p=2 n=8 k=1\n");
  CHECK(arc_list.find("0 4\n") != std::string::npos);  // e -> b

  const std::string dot = render_dot(2, 0x8);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("label=\"a^0\"") != std::string::npos);
  CHECK(dot.find("label=\"a^3.b\"") != std::string::npos);
  CHECK(dot.find("v0 -> v4") != std::string::npos);
}

TEST_CASE("informational rows never fail a report") {
  VerificationReport report;
  report.comparisons.push_back({"info row", "36", "20", false, true});
  CHECK(report.all_pass());
  report.comparisons.push_back({"counted row", "1", "2", false, false});
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("verification runs") {
  CHECK(verify_formulas(3).all_pass());
  CHECK(verify_formulas(5).all_pass());
  const VerificationReport order8 = verify_formulas(2);
  CHECK(order8.all_pass());
  bool saw_informational = false;
  for (const Comparison& c : order8.comparisons) saw_informational |= c.informational;
  CHECK(saw_informational);
  const std::string rendered = render(order8);
  CHECK(rendered.find("VERIFY OK") != std::string::npos);
  CHECK(rendered.find("INFO") != std::string::npos);
}
