#pragma once

#include <vector>

#include "mdl/graph.hpp"
#include "mdl/minor_model.hpp"

namespace mdl {

// Parameters of the one-sided bipartite dichotomy.
struct ClawParams {
  int K0 = 0;  // smallness factor, >= l0*(l0+1)
  int l0 = 0;  // part-size ratio, >= 2
  Rat eps10;   // in (0, 1/l0]
  Rat eps20;   // in (0, 1/l0^2]
  Rat d0;      // >= 1/eps20

  void validate() const;
};

enum class ClawBranch {
  DenseTight,  // subgraph with v <= 4*K0*d0 and 2e >= eps10*eps20*d0^2
  DenseWide,   // subgraph with v <= 4*l0*K0*d0 and 2e >= eps10^2*d0^2
  Minor,       // (l0+1)-bounded minor with the density guarantee
};

struct ClawResult {
  ClawBranch branch = ClawBranch::Minor;
  std::vector<int> subgraph;  // host labels, set for the dense branches
  MinorModel model;           // set for the minor branch
};

// The bipartite subgraph on parts x and y: keeps only x-y edges.  Vertices
// are relabelled with x first, then y; `vertices` maps back to host labels.
struct BipartiteView {
  Graph graph;
  std::vector<int> vertices;
  int a_count = 0;
};

BipartiteView bipartite_subgraph(const Graph& g, const std::vector<int>& x,
                                 const std::vector<int>& y);

// Three-way split of a bipartite graph (A,B) with |A| >= l0*|B| in which
// every A-vertex has at least d0 neighbors in B.  Tries, in order: a dense
// cluster around an A-vertex with many eps20*d0-codegree partners; the same
// with the higher eps10*d0 codegree bar but a wider degree cap; and a greedy
// (l0+1)-bounded contraction with one B-vertex plus up to l0 low-overlap
// A-neighbors per branch set.  Every returned object is rechecked against
// its branch inequality in exact arithmetic.  Instances on which no branch
// can be built (after an exhaustive model search when the graph has at most
// 14 vertices) raise LemmaViolationError.
ClawResult claw_dichotomy(const Graph& g, const std::vector<int>& a_side,
                          const std::vector<int>& b_side,
                          const ClawParams& p);

}  // namespace mdl
