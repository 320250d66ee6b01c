#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

// Parameter bundle for the small-vertex / mate analysis.  d is usually the
// density of the graph under study but any d >= 1 is allowed.
struct MateParams {
  Rat K;     // smallness threshold factor, >= 1
  Rat d;     // reference density, >= 1
  Rat eps1;  // mate-count threshold factor, in (0,1)
  Rat eps2;  // codegree threshold factor, in (0,1)

  void validate() const;
};

// deg(v) <= K*d, boundary inclusive.
bool is_small(const Graph& g, int v, const Rat& K, const Rat& d);

// All u != v with at least eps*d common neighbours with v, ascending.
std::vector<int> count_mates(const Graph& g, int v, const Rat& eps,
                             const Rat& d);

struct DenseWitness {
  int vertex = -1;            // the small vertex the subgraph grew from
  std::vector<int> mates;     // the mates used, ascending
  std::vector<int> subgraph;  // vertex set of H in host labels, ascending
  Graph h;                    // induced subgraph on that set
};

struct UnmatedCertificate {
  enum class Verdict { DenseSubgraph, Unmated };
  Verdict verdict = Verdict::Unmated;
  MateParams params;
  std::optional<DenseWitness> witness;  // present iff DenseSubgraph
};

// Either finds a small vertex with at least eps1*d mates and assembles a
// dense subgraph H with v(H) <= 3*K*d and 2*e(H) >= eps1*eps2*d^2, or
// certifies that no small vertex has that many mates.  Both bounds are
// rechecked in exact arithmetic before returning; a dense trigger whose
// assembled subgraph misses a bound raises LemmaViolationError rather than
// returning a bad certificate.
UnmatedCertificate unmated_dichotomy(const Graph& g, const MateParams& p);

struct CheckResult {
  bool ok = true;
  std::string reason;
};

// Recomputes everything the certificate claims: dense bounds on the stored
// subgraph, or the universal mate-count property for the unmated verdict.
CheckResult check_unmated_certificate(const Graph& g,
                                      const UnmatedCertificate& cert);

}  // namespace mdl
