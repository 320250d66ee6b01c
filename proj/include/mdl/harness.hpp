#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdl/certificate.hpp"
#include "mdl/graph.hpp"

namespace mdl {

struct InstanceSpec {
  std::string id;
  std::string family;
  nlohmann::json fields;  // family parameters, seed included
};

struct ExperimentConfig {
  std::string stage;       // unmated | dichotomy | increment | oracle
  std::string mode = "desk";
  int jobs = 1;
  std::string out_dir;     // certificates land in <out_dir>/certs
  nlohmann::json params;   // stage parameter overrides
  std::vector<InstanceSpec> instances;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// family in {gnp, complete, complete-bipartite, grid, petersen, tree,
// blowup}; randomized families need a seed in the spec fields.
Graph generate_graph(const InstanceSpec& spec);

struct InstanceRow {
  std::string instance_id;
  int n = 0;
  long m = 0;
  Rat density;
  std::string stage;
  std::string branch;      // branch tag, or "error" when the stage threw
  bool verified = false;
  long wall_ms = 0;
  std::string certificate;  // content hash, empty when the stage threw
  std::string verdict;      // verifier summary or error text
  nlohmann::json failure;   // serialized instance on failure, null otherwise
};

struct RunReport {
  std::string stage;
  std::string mode;
  std::vector<InstanceRow> rows;  // sorted by instance_id
  std::map<std::string, int> histogram;
  int verified_count = 0;
  int failed_count = 0;
};

// Runs the configured stage over every instance with a small worker pool,
// verifies each certificate through its serialized form, and assembles the
// rows sorted by instance_id.  Certificates are written when out_dir is set.
RunReport run_experiment(const ExperimentConfig& cfg);

nlohmann::json report_to_json(const RunReport& r);
std::string report_csv(const RunReport& r);

// Writes <dir>/report.json and <dir>/summary.csv.
void write_report(const RunReport& r, const std::string& dir);

// Loads, re-verifies, and summarizes one serialized certificate.
CheckResult verify_certificate_file(const std::string& path);

}  // namespace mdl
