#pragma once

#include <string>
#include <vector>

#include "mdl/graph.hpp"
#include "mdl/mates.hpp"
#include "mdl/minor_model.hpp"

namespace mdl {

struct DichotomyParams {
  int k = 0;           // >= 100 in strict mode, >= 6 otherwise
  Rat K;               // >= max(k, 4k^2)
  Rat eps1, eps2;      // in (0, 1/k]
  bool strict = false; // enforce the k >= 100 regime

  void validate() const;
  int ell() const { return (k + 5) / 6; }  // ceil(k/6)
};

enum class DichotomyBranch {
  Dense,      // subgraph with v <= 3*K*d_ref and density >= eps1*eps2*d_ref/(6Kk)
  Bipartite,  // (X, Y) with |X| >= ell*|Y| and X-degrees >= (1-6*eps1)*d_ref into Y
  Shrunken,   // k-bounded minor; for k > 30 its density is >= (k-30)*d_ref
};

// One entry per pipeline level: sizes of the partition pieces and the action
// taken there.  Levels are proper subgraphs of their parents, so the list is
// finite; d never decreases from one level to the next.
struct LevelTrace {
  int n = 0;
  long m = 0;
  Rat d;
  int big = 0;        // |B|
  int stars = 0;      // components of the star forest
  int heavy = 0;      // |C|
  int leftover = 0;   // |A'|
  int a1 = 0;         // |A1|
  std::string action; // dense / escape / bipartite / shrink / recurse
};

struct DichotomyResult {
  DichotomyBranch branch = DichotomyBranch::Dense;
  Rat d_ref;  // density of the peeled graph at the emitting level, >= d(G)
  int ell = 0;

  std::vector<int> subgraph;        // Dense, labels of the input graph
  std::vector<int> x_side, y_side;  // Bipartite, labels of the input graph
  MinorModel model;                 // Shrunken, over the input graph

  std::vector<LevelTrace> trace;
};

// Splits G into a dense pocket, a lopsided bipartite pair, or a k-bounded
// minor whose density grew by roughly a factor k.  Works level by level:
// peel until min degree exceeds density, look for a mate cluster, build a
// clean star forest, then either emit or descend into A' + B + C when that
// part is at least as dense as the current level.  Requires
// d(G) >= k / min(eps1, eps2).
DichotomyResult dense_bipartite_minor(const Graph& g,
                                      const DichotomyParams& p);

// Independent recheck of an emitted result against the input graph.
CheckResult check_dichotomy_result(const Graph& g, const DichotomyParams& p,
                                   const DichotomyResult& r);

}  // namespace mdl
