#pragma once

#include <utility>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl {

// Simple undirected graph on vertices 0..n-1.  No loops, no parallel edges.
// Instances are immutable after construction; every operation that changes
// structure returns a new Graph plus the bookkeeping needed to map results
// back to the input labels.
class Graph {
 public:
  Graph() = default;

  // Validates: endpoints in range, no loops, no duplicate edges.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  long m() const { return m_; }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  // Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  int min_degree() const;

 private:
  std::vector<std::vector<int>> adj_;
  long m_ = 0;
};

// e(G) / v(G) as an exact rational.  Requires v >= 1.
Rat density(const Graph& g);

// Number of common neighbors of u and v.
int codegree(const Graph& g, int u, int v);

struct PeelResult {
  Graph graph;
  std::vector<int> vertices;  // new index -> original index, ascending
};

// Repeatedly deletes the lowest-indexed vertex of degree <= d(G) (threshold
// fixed at the input's density).  The result H is nonempty and satisfies
// min_degree(H) > d(G) and density(H) >= d(G); both are rechecked before
// returning.
PeelResult peel_to_min_degree(const Graph& g);

struct ContractionResult {
  Graph graph;
  long loss = 0;                         // e(G) - e(G/S)
  std::vector<std::vector<int>> origin;  // new vertex -> sorted original class
};

// Contracts every edge in S simultaneously.  Each element of S must be an
// edge of G.  Class labels in the quotient are assigned by ascending minimum
// original vertex.
ContractionResult contract_edges(const Graph& g,
                                 const std::vector<std::pair<int, int>>& s);

struct InducedResult {
  Graph graph;
  std::vector<int> vertices;  // new index -> original index, ascending
};

// Induced subgraph on a nonempty vertex set (duplicates rejected).
InducedResult induced(const Graph& g, const std::vector<int>& a);

}  // namespace mdl
