#pragma once

#include <string>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

// A star component: the center plus k-1 leaves, every leaf a neighbor of the
// center in the host graph.
struct Star {
  int center = -1;
  std::vector<int> leaves;  // ascending
};

// Vertex-disjoint stars with the contraction loss e(G) - e(G/E(F)) cached by
// whoever built the forest.
struct StarForest {
  std::vector<Star> stars;
  long loss = 0;

  int vertex_count() const;
  std::vector<int> vertices() const;                 // sorted
  std::vector<std::pair<int, int>> edges() const;    // center-leaf pairs
};

// e(G) - e(G/E(F)) recomputed from scratch.  Rejects overlapping stars and
// leaves that are not neighbors of their center.
long edge_loss(const Graph& g, const StarForest& f);

struct GrowResult {
  bool grown = false;
  Star star;     // complete when grown, the partial star otherwise
  long loss = 0; // e(G/E(F0)) - e(G/(E(F0) u E(star))), exact
};

// Greedy star growth: starting from {v}, repeatedly attach the neighbor u of
// v from pool \ (V(F0) u S) with the fewest common classes with the star in
// G/(E(F0) u E(S)), charging 1 + codegree per step, as long as the cumulative
// loss stays within 2*(v(S)-1)*eps2*d.  Stops short (grown = false) when no
// candidate remains or the cheapest one would break that budget.
GrowResult grow_star(const Graph& g, const StarForest& f0, int v, int k,
                     const Rat& eps2, const Rat& d,
                     const std::vector<int>& pool);

struct ForestParams {
  Rat K;            // smallness factor
  int k = 0;        // vertices per star
  Rat eps1, eps2;   // local-search thresholds; cleanliness c = 4*eps2
  Rat d;            // reference density

  void validate() const;
};

struct ForestBuild {
  // When the local search gets stuck growing a star, the counting argument
  // yields a dense subgraph instead; its vertex set is returned here and the
  // forest fields are meaningless.
  bool dense_escape = false;
  std::vector<int> escape_subgraph;

  StarForest forest;
  std::vector<int> a;        // (K,d)-small vertices, ascending
  std::vector<int> b;        // the big vertices
  std::vector<int> c;        // forest vertices with >= 3*eps1*d neighbors in a_prime
  std::vector<int> a_prime;  // a minus V(F)
  int rounds = 0;            // improvement moves performed
};

// Local search with two moves: grow-and-add a star at any A'-vertex with at
// least 2*eps1*d neighbors in A', and replace any component holding two
// vertices with at least 3*eps1*d neighbors in A' by two fresh stars grown at
// those vertices.  Each move raises v(F) by exactly k, so at most v(G)/k
// moves happen; the cap v(G) guards against bookkeeping bugs.  On return the
// forest is (K,d)-small and (4*eps2,d)-clean and both move triggers are
// absent, all rechecked.
ForestBuild build_clean_forest(const Graph& g, const ForestParams& p);

}  // namespace mdl
