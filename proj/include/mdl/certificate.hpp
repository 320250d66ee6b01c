#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdl/bipartite_split.hpp"
#include "mdl/dichotomy.hpp"
#include "mdl/graph.hpp"
#include "mdl/increment.hpp"
#include "mdl/mates.hpp"
#include "mdl/minor_model.hpp"
#include "mdl/star_forest.hpp"

namespace mdl {

// Self-contained record of one pipeline outcome: the instance, the parameters
// it ran under, the branch taken, and the witness objects.  Everything a
// verifier needs travels inside; nothing refers back to the run that made it.
struct Certificate {
  std::string stage;  // unmated | claw | dichotomy | increment | oracle
  std::string mode;   // paper | desk
  Graph graph;
  nlohmann::json params;
  std::string branch;
  nlohmann::json witness;
  nlohmann::json claims;
  nlohmann::json trace;  // optional array of per-level records
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"h": int, "branch_sets": [[int]], "pattern_edges": [[int,int]], "width": int}
nlohmann::json model_to_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);

// {"stars": [{"center": int, "leaves": [int]}], "loss": int}
nlohmann::json forest_to_json(const StarForest& f);
StarForest forest_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// Sorted keys, no whitespace; the hashing boundary.
std::string canonical_json(const nlohmann::json& j);
// FNV-1a 64 over the canonical form, 16 hex digits.
std::string content_hash(const nlohmann::json& j);

// Writes <dir>/<hash>.json and returns the path.
std::string save_certificate(const Certificate& c, const std::string& dir);
Certificate load_certificate(const std::string& path);

Certificate make_unmated_certificate(const Graph& g, const MateParams& p,
                                     const UnmatedCertificate& u,
                                     const std::string& mode);
Certificate make_claw_certificate(const Graph& g, int a_count,
                                  const ClawParams& p, const ClawResult& r,
                                  const std::string& mode);
Certificate make_dichotomy_certificate(const Graph& g,
                                       const DichotomyParams& p,
                                       const DichotomyResult& r);
Certificate make_increment_certificate(const Graph& g,
                                       const IncrementParams& p,
                                       const IncrementOutcome& o);
Certificate make_oracle_certificate(const Graph& g, int t,
                                    const std::optional<MinorModel>& m);

// Recomputes every claimed quantity from the embedded graph with graph-core
// and minor-model primitives only.  On success the reason carries a short
// summary of the recomputed numbers.
CheckResult verify_certificate(const Certificate& c);

}  // namespace mdl
