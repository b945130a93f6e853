#ifndef DICIRC_COUNTING_HPP
#define DICIRC_COUNTING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dicirc/cycles.hpp"
#include "dicirc/types.hpp"

// Exact isomorphism-class counts of Cayley digraphs over T_{4p}: totals,
// connected totals, circulant totals, and per-out-degree versions of all
// three.  The generating-function coefficient is the source of truth for the
// per-degree counts; the expanded closed forms act as cross-checks.

namespace dicirc {

// Dense univariate polynomial with exact integer coefficients, index = degree.
struct UniPoly {
  std::vector<BigInt> coeff;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(coeff.size()) - 1; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

// Substitutes x_k = m for every k; the result must be an integer.
BigInt evaluate_at_constant(const CycleIndexPoly& poly, std::uint32_t m);

// Substitutes x_k = 1 + x^k, yielding the subset-counting polynomial Q(x).
// Every coefficient must come out a nonnegative integer.
UniPoly substitute_one_plus_x(const CycleIndexPoly& poly);

// Number of Cayley digraphs over T_{4p} up to isomorphism (odd p).  The
// closed form is asserted equal to the cycle-index evaluation at 2.
BigInt count_total(std::uint32_t p);

// Number of circulant digraphs of order 2p up to isomorphism (odd p).
BigInt count_circulant(std::uint32_t p);

// Connected Cayley digraphs over T_{4p}: total minus circulants minus the
// four exceptional disconnected classes (odd p).
BigInt count_connected(std::uint32_t p);

// Coefficient of x^k in Q(x); 1 at k = 0 and k = 4p - 1.
BigInt count_by_outdegree(std::uint32_t p, std::uint32_t k);

// Weighting of the totient factor in the expanded per-degree closed form.
// `full` applies Phi(d) to both binomial blocks of the odd-divisor bracket
// and agrees with the generating function; `partial` leaves the paired
// binomial sum unweighted and deviates once p - 1 has an odd divisor d with
// Phi(d) > 1 (first at p = 7).
enum class PhiWeighting { full, partial };

// The expanded closed form for the out-degree count, as an exact rational
// (the partial weighting need not be integral).
Rational outdegree_expansion(std::uint32_t p, std::uint32_t k, PhiWeighting weighting);

// Asserts outdegree_expansion(p, k, full) == count_by_outdegree(p, k) for
// every k; throws std::logic_error on mismatch.
void crosscheck_outdegree_counts(std::uint32_t p);

// The k where the partial weighting disagrees with the generating function.
std::vector<std::uint32_t> outdegree_expansion_deviations(std::uint32_t p);

// Circulant digraphs of order 2p with out-degree k (0 <= k <= 2p - 1).
BigInt count_circulant_by_outdegree(std::uint32_t p, std::uint32_t k);

// Connected Cayley digraphs over T_{4p} with out-degree k, by the piecewise
// subtraction of circulants and the small exceptional classes.
BigInt count_connected_by_outdegree(std::uint32_t p, std::uint32_t k);

// Everything above for one p, with provenance per entry.
struct CountReport {
  std::uint32_t p = 0;
  GroupTag group_tag = GroupTag::alpha_family;

  BigInt total;
  BigInt circulant;  // unused for p = 2
  BigInt connected;
  std::vector<BigInt> by_degree;            // k = 0..4p-1
  std::vector<BigInt> circulant_by_degree;  // k = 0..2p-1; empty for p = 2
  std::vector<BigInt> connected_by_degree;  // k = 0..4p-1

  Provenance total_provenance = Provenance::closed_form;
  Provenance circulant_provenance = Provenance::closed_form;
  Provenance connected_provenance = Provenance::closed_form;
  Provenance by_degree_provenance = Provenance::generating_function;
  Provenance circulant_by_degree_provenance = Provenance::closed_form;
  Provenance connected_by_degree_provenance = Provenance::generating_function;

  bool has_circulant_counts() const { return !circulant_by_degree.empty(); }
};

// Checks the internal sum/symmetry identities; throws std::logic_error.
void validate(const CountReport& report);

// Full report for an odd prime from the closed forms and Q(x).
CountReport full_report(std::uint32_t p);

// The order-8 counts, swept under both automorphism groups.
struct QuaternionReports {
  CountReport alpha;  // 36 classes, 26 connected
  CountReport full;   // the full automorphism group merges further classes
};
QuaternionReports quaternion_counts();

// ---- serialization (report.cpp) ----

enum class TableFormat { text, csv };

// One row per prime 2 <= p <= p_max: the connected per-degree tuple
// (k = 2..4p-1) followed by the connected total.  Byte-stable.
std::string render_connected_table(std::uint32_t p_max, TableFormat format);

// Versioned structured document; every numeric field is a decimal string.
std::string reports_to_json(const std::vector<CountReport>& reports);
std::vector<CountReport> reports_from_json(const std::string& text);

std::string report_to_text(const CountReport& report);

}  // namespace dicirc

#endif
