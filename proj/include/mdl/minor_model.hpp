#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

// Witness that a pattern graph is a minor of a host graph: pairwise-disjoint
// connected branch sets, one per pattern vertex, with a host edge behind
// every pattern edge.
struct MinorModel {
  int h = 0;                                      // number of branch sets
  std::vector<std::vector<int>> branch_sets;      // host vertices, sorted
  std::vector<std::pair<int, int>> pattern_edges; // i < j pairs
  int width = 0;                                  // max branch set size

  // Identity model: singleton branch sets covering V(G), pattern edges = E(G).
  static MinorModel identity(const Graph& g);
};

struct ModelCheck {
  bool ok = true;
  std::string reason;  // first failure, empty when ok
};

// Full re-verification against the host: disjointness, range, connectivity
// of every branch set, existence of a host edge for every pattern edge, and
// width consistency.
ModelCheck verify_model(const Graph& host, const MinorModel& m);

// The minor graph realized by the branch sets: vertex i per branch set,
// edges exactly the pairs with at least one host edge between their sets.
// Requires m.pattern_edges to be a subset of those pairs (verified).
Graph contract_model(const Graph& host, const MinorModel& m);

// Lifts a model over a quotient to a model over the original host.  `origin`
// maps each quotient vertex to its class of original vertices (the origin
// map returned by contract_edges / a previous contract_model).  Branch sets
// of the result are unions of origin classes; widths multiply accordingly.
MinorModel compose_models(const MinorModel& outer,
                          const std::vector<std::vector<int>>& origin);

struct OracleLimits {
  int max_vertices = 12;       // hard refusal above 16 regardless
  std::uint64_t node_budget = 200'000'000;
};

// Exhaustive search for a complete-graph minor K_t.  Deterministic: vertices
// are considered in ascending order, assignment tried lowest branch set
// first, then skip; the first completed model in that order is returned.
// Throws DomainError above the size cap and ResourceLimitError when the node
// budget runs out.
std::optional<MinorModel> clique_minor_oracle(const Graph& g, int t,
                                              const OracleLimits& limits = {});

// Exhaustive search over models with branch sets of size <= width_cap for
// one whose contracted density reaches `target`.  Same determinism contract
// and limits as the clique oracle.  Intended for small fallback instances.
std::optional<MinorModel> bounded_density_model_search(
    const Graph& g, int width_cap, const Rat& target,
    const OracleLimits& limits = {});

}  // namespace mdl
