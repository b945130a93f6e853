#ifndef DICIRC_ORACLE_HPP
#define DICIRC_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicirc/group.hpp"
#include "dicirc/types.hpp"

// Independent ground truth: exhaustive subset-orbit enumeration under an
// automorphism action, connectivity classification, canonical representative
// extraction, and Cayley digraph construction/export.

namespace dicirc {

// Thrown when a sweep would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  // Upper bound on (number of subsets) x (group size).  The default admits
  // p <= 5; the p = 7 sweep (2^27 x 84) needs an explicit raise.
  std::uint64_t budget = 100'000'000;
  std::uint32_t partitions = 1;
  bool with_representatives = false;
};

struct OrbitSummary {
  std::uint32_t p = 0;
  GroupTag tag = GroupTag::alpha_family;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_size;            // orbit counts per |S|
  std::vector<std::uint64_t> connected_by_size;  // empty for circulant sweeps
  // canonical (minimum) bitmask of each orbit, per |S|, increasing;
  // filled only when requested
  std::vector<std::vector<std::uint64_t>> representatives_by_size;
};

// Sweeps every subset of A = T_{4p} \ {e} and counts those equal to the
// minimum of their own orbit under the chosen group.  Partitions of the mask
// range run on separate threads; the result is identical for any partition
// count.
OrbitSummary enumerate_orbits(std::uint32_t p, GroupTag tag, SweepOptions options = {});

// Orbits of subsets of Z_{2p} \ {0} under multiplication by Z_{2p}^*.
OrbitSummary enumerate_circulant_orbits(std::uint32_t p, SweepOptions options = {});

// Canonical representatives of the k-subset orbits, in increasing bitmask
// order, optionally restricted to connected connection sets.
std::vector<std::uint64_t> representatives(std::uint32_t p, std::uint32_t k,
                                           bool connected_only,
                                           GroupTag tag = GroupTag::alpha_family,
                                           SweepOptions options = {});

// The Cayley digraph Cay(T_{4p}, S): arcs g -> s*g with the identity-first
// vertex ordering.
struct Digraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
};

Digraph build_cayley_digraph(std::uint32_t p, ConnectionSet s);

// Vertices reachable from the identity by following arcs, sorted.
std::vector<std::uint32_t> reachable_from_identity(const Digraph& digraph);

// Arc-list text: header "p=<p> n=<4p> k=<|S|>", then one "u v" per line.
std::string render_arc_list(std::uint32_t p, ConnectionSet s);

// Graphviz source, directed, vertices labeled a^i / a^i.b.
std::string render_dot(std::uint32_t p, ConnectionSet s);

// One formula-vs-oracle comparison; informational rows never fail a run.
struct Comparison {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool informational = false;
};

struct VerificationReport {
  std::uint32_t p = 0;
  std::vector<Comparison> comparisons;

  bool all_pass() const;
};

// Compares every closed-form count against the sweep (odd p), or the
// alpha-family sweep against the published order-8 classification (p = 2,
// with the full-group sweep reported informationally).
VerificationReport verify_formulas(std::uint32_t p, SweepOptions options = {});

std::string render(const VerificationReport& report);

}  // namespace dicirc

#endif
