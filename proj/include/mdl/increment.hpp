#pragma once

#include <string>
#include <vector>

#include "mdl/graph.hpp"
#include "mdl/minor_model.hpp"

namespace mdl {

// C * (1 + ln s)^5.  Natural logarithm; the telescoping ratio argument the
// schedule relies on fails for other bases.
double g_value(double s, double c);

// Reference curve: hidden_constant * t * (g(3.2*sqrt(ln t), C) + (ln ln t)^2).
// Up to the caller's constant only.
double chromatic_bound(long t, double c, double hidden_constant);

struct Coloring {
  std::vector<int> color;  // per vertex, 0-based
  int colors = 0;
  int degeneracy = 0;
};

// Proper coloring with at most degeneracy+1 colors via a smallest-last order.
Coloring degeneracy_coloring(const Graph& g);

// One refinement step: a dense pocket or a bounded minor with density
// raised by roughly the width factor.
struct StepOutcome {
  bool is_subgraph = false;
  std::vector<int> subgraph;  // host labels of g
  MinorModel model;
  int m = 0;  // width bound of the minor branch, in [k/6, k]
};

// Splits G into a subgraph with v <= 12k^3*d and density >= d/(24k^5), or an
// m-bounded minor, m in [k/6, k], whose density gain is verified.  strict
// enforces k >= 100; otherwise k >= 6 (the bipartite continuation needs
// k >= 7 and raises LemmaViolationError below that if it fires).
// Requires d(G) >= k^2.
StepOutcome dense_or_bounded_minor(const Graph& g, int k, bool strict = false);

// The bipartite continuation on its own: from a pair (X, Y) in g where every
// X-vertex has at least (1-6/k)*d_used neighbours in Y and |X| >= ceil(k/6)*|Y|,
// produce the same outcome shape as dense_or_bounded_minor.  Exposed so the
// pair-driven path can be exercised directly.
StepOutcome dense_or_bounded_from_pair(const Graph& g,
                                       const std::vector<int>& x,
                                       const std::vector<int>& y, int k,
                                       const Rat& d_used);

struct IncrementParams {
  double c = 0;        // g-function scale; strict mode pins 2^50
  Rat target;          // density target D
  bool strict = false; // full-constant regime (needs d(G) >= 2^50)
  int min_k = 6;       // schedule clamp outside strict mode

  void validate() const;
};

struct IterationLog {
  Rat d;
  double s = 0;
  int k = 0;
  int m = 0;
  std::string branch;  // identity / edge / dense / minor
};

struct IncrementOutcome {
  enum class Tag { MinorFound, DenseSubgraph };
  Tag tag = Tag::MinorFound;
  MinorModel model;    // MinorFound: model over the input graph
  Rat final_density;   // MinorFound: density of the contracted minor
  std::vector<int> subgraph;  // DenseSubgraph: vertex set in the input graph
  std::vector<IterationLog> iterations;
};

// Density-increment loop: contract toward the target density D, exiting
// early with a dense pocket when the g-budget says so.  The returned object
// is rechecked against the run's entry values: MinorFound has density >= D;
// DenseSubgraph H has v(H) <= g(s)*D^2/d(G) and d(H) >= d(G)/g(s) for
// s = D/d(G).  s must fall strictly every iteration.
IncrementOutcome density_increment(const Graph& g, const IncrementParams& p);

}  // namespace mdl
