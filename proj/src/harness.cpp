#include "mdl/harness.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "mdl/dichotomy.hpp"
#include "mdl/errors.hpp"
#include "mdl/generators.hpp"
#include "mdl/increment.hpp"
#include "mdl/log.hpp"
#include "mdl/mates.hpp"

namespace mdl {

using nlohmann::json;

namespace {

long field_long(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer())
    throw ParseError(std::string("instance needs integer field: ") + key);
  return it->get<long>();
}

double field_num(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number())
    throw ParseError(std::string("instance needs numeric field: ") + key);
  return it->get<double>();
}

std::uint64_t field_seed(const json& j) {
  auto it = j.find("seed");
  if (it == j.end() || !it->is_number_integer())
    throw ParseError("randomized instance needs a seed");
  return it->get<std::uint64_t>();
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  ExperimentConfig cfg;
  auto stage = j.find("stage");
  if (stage == j.end() || !stage->is_string())
    throw ParseError("config needs a stage");
  cfg.stage = stage->get<std::string>();
  if (cfg.stage != "unmated" && cfg.stage != "dichotomy" &&
      cfg.stage != "increment" && cfg.stage != "oracle")
    throw ParseError("unknown stage: " + cfg.stage);
  if (j.contains("mode")) {
    cfg.mode = j["mode"].get<std::string>();
    if (cfg.mode != "paper" && cfg.mode != "desk")
      throw ParseError("mode must be paper or desk");
  }
  if (j.contains("jobs")) {
    cfg.jobs = j["jobs"].get<int>();
    if (cfg.jobs < 1) throw ParseError("jobs must be at least 1");
  }
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("params must be an object");
    cfg.params = j["params"];
  } else {
    cfg.params = json::object();
  }
  auto inst = j.find("instances");
  if (inst == j.end() || !inst->is_array())
    throw ParseError("config needs an instances array");
  std::set<std::string> seen;
  for (const json& e : *inst) {
    InstanceSpec s;
    auto id = e.find("id");
    auto fam = e.find("family");
    if (id == e.end() || !id->is_string())
      throw ParseError("instance needs an id");
    if (fam == e.end() || !fam->is_string())
      throw ParseError("instance needs a family");
    s.id = id->get<std::string>();
    s.family = fam->get<std::string>();
    s.fields = e;
    if (!seen.insert(s.id).second)
      throw ParseError("duplicate instance id: " + s.id);
    cfg.instances.push_back(std::move(s));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse: ") + e.what());
  }
  return parse_config(j);
}

Graph generate_graph(const InstanceSpec& spec) {
  const json& f = spec.fields;
  if (spec.family == "gnp")
    return gen_gnp(static_cast<int>(field_long(f, "n")), field_num(f, "p"),
                   field_seed(f));
  if (spec.family == "complete")
    return gen_complete(static_cast<int>(field_long(f, "n")));
  if (spec.family == "complete-bipartite")
    return gen_complete_bipartite(static_cast<int>(field_long(f, "a")),
                                  static_cast<int>(field_long(f, "b")));
  if (spec.family == "grid")
    return gen_grid(static_cast<int>(field_long(f, "rows")),
                    static_cast<int>(field_long(f, "cols")));
  if (spec.family == "petersen") return gen_petersen();
  if (spec.family == "tree")
    return gen_tree(static_cast<int>(field_long(f, "n")), field_seed(f));
  if (spec.family == "blowup")
    return gen_blowup(static_cast<int>(field_long(f, "base")),
                      static_cast<int>(field_long(f, "factor")));
  throw ParseError("unknown family: " + spec.family);
}

namespace {

Rat param_rat(const json& params, const char* key, const Rat& fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->is_string()) return parse_rat(it->get<std::string>());
  if (it->is_number_integer()) return Rat(it->get<long>());
  throw ParseError(std::string("parameter must be rational text: ") + key);
}

long param_long(const json& params, const char* key, long fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!it->is_number_integer())
    throw ParseError(std::string("parameter must be an integer: ") + key);
  return it->get<long>();
}

double param_num(const json& params, const char* key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!it->is_number())
    throw ParseError(std::string("parameter must be a number: ") + key);
  return it->get<double>();
}

Certificate run_stage(const ExperimentConfig& cfg, const Graph& g) {
  const json& pj = cfg.params;
  if (cfg.stage == "unmated") {
    MateParams p;
    p.d = param_rat(pj, "d", density(g));
    p.K = param_rat(pj, "K", rat(4));
    p.eps1 = param_rat(pj, "eps1", rat(1, 10));
    p.eps2 = param_rat(pj, "eps2", rat(1, 10));
    return make_unmated_certificate(g, p, unmated_dichotomy(g, p), cfg.mode);
  }
  if (cfg.stage == "dichotomy") {
    DichotomyParams p;
    p.k = static_cast<int>(param_long(pj, "k", 6));
    p.K = param_rat(pj, "K", Rat(4L * p.k * p.k));
    p.eps1 = param_rat(pj, "eps1", rat(1, p.k));
    p.eps2 = param_rat(pj, "eps2", rat(1, p.k));
    p.strict = cfg.mode == "paper";
    return make_dichotomy_certificate(g, p, dense_bipartite_minor(g, p));
  }
  if (cfg.stage == "increment") {
    IncrementParams p;
    p.strict = cfg.mode == "paper";
    p.c = param_num(pj, "c", p.strict ? std::ldexp(1.0, 50) : 0.1);
    if (pj.contains("target"))
      p.target = param_rat(pj, "target", Rat(0));
    else
      p.target = param_rat(pj, "target_mult", rat(8)) * density(g);
    p.min_k = static_cast<int>(param_long(pj, "min_k", 6));
    return make_increment_certificate(g, p, density_increment(g, p));
  }
  if (cfg.stage == "oracle") {
    int t = static_cast<int>(param_long(pj, "t", 5));
    OracleLimits lim;
    lim.max_vertices = static_cast<int>(
        param_long(pj, "max_vertices", lim.max_vertices));
    return make_oracle_certificate(g, t, clique_minor_oracle(g, t, lim));
  }
  throw ParseError("unknown stage: " + cfg.stage);
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
  RunReport report;
  report.stage = cfg.stage;
  report.mode = cfg.mode;

  std::vector<Graph> graphs;
  graphs.reserve(cfg.instances.size());
  for (const InstanceSpec& s : cfg.instances) graphs.push_back(generate_graph(s));

  std::string cert_dir =
      cfg.out_dir.empty() ? "" : cfg.out_dir + "/certs";
  std::vector<InstanceRow> rows(cfg.instances.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cfg.instances.size()) return;
      const InstanceSpec& spec = cfg.instances[i];
      const Graph& g = graphs[i];
      InstanceRow row;
      row.instance_id = spec.id;
      row.n = g.n();
      row.m = g.m();
      row.density = g.n() > 0 ? density(g) : Rat(0);
      row.stage = cfg.stage;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Certificate cert = run_stage(cfg, g);
        json serialized = certificate_to_json(cert);
        row.branch = cert.branch;
        row.certificate = content_hash(serialized);
        if (!cert_dir.empty()) save_certificate(cert, cert_dir);
        CheckResult check =
            verify_certificate(certificate_from_json(serialized));
        row.verified = check.ok;
        row.verdict = check.reason;
        if (!check.ok)
          row.failure = json{{"spec", spec.fields},
                             {"graph", graph_to_json(g)}};
      } catch (const std::exception& e) {
        row.branch = "error";
        row.verified = false;
        row.verdict = e.what();
        row.failure =
            json{{"spec", spec.fields}, {"graph", graph_to_json(g)}};
      }
      auto t1 = std::chrono::steady_clock::now();
      row.wall_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
              .count();
      rows[i] = std::move(row);
    }
  };
  int jobs = std::max(1, std::min<int>(cfg.jobs, cfg.instances.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(rows.begin(), rows.end(),
            [](const InstanceRow& a, const InstanceRow& b) {
              return a.instance_id < b.instance_id;
            });
  for (const InstanceRow& row : rows) {
    ++report.histogram[row.branch];
    if (row.verified)
      ++report.verified_count;
    else
      ++report.failed_count;
  }
  report.rows = std::move(rows);
  if (!cfg.out_dir.empty()) write_report(report, cfg.out_dir);
  return report;
}

json report_to_json(const RunReport& r) {
  json rows = json::array();
  for (const InstanceRow& row : r.rows) {
    json e{{"instance_id", row.instance_id},
           {"n", row.n},
           {"m", row.m},
           {"density", rat_str(row.density)},
           {"stage", row.stage},
           {"branch", row.branch},
           {"verified", row.verified},
           {"wall_ms", row.wall_ms},
           {"certificate", row.certificate},
           {"verdict", row.verdict}};
    if (!row.failure.is_null()) e["failure"] = row.failure;
    rows.push_back(std::move(e));
  }
  json hist = json::object();
  for (const auto& [branch, count] : r.histogram) hist[branch] = count;
  return json{{"schema", "mdl-report-v1"},
              {"stage", r.stage},
              {"mode", r.mode},
              {"instances", std::move(rows)},
              {"histogram", std::move(hist)},
              {"verified_count", r.verified_count},
              {"failed_count", r.failed_count}};
}

std::string report_csv(const RunReport& r) {
  std::ostringstream out;
  out << "instance_id,n,m,density,stage,branch,verified,wall_ms\n";
  for (const InstanceRow& row : r.rows)
    out << row.instance_id << ',' << row.n << ',' << row.m << ','
        << rat_str(row.density) << ',' << row.stage << ',' << row.branch
        << ',' << (row.verified ? "true" : "false") << ',' << row.wall_ms
        << '\n';
  return out.str();
}

void write_report(const RunReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream jout(dir + "/report.json");
  if (!jout) throw DomainError("cannot write report.json in " + dir);
  jout << report_to_json(r).dump(2) << "\n";
  std::ofstream cout_(dir + "/summary.csv");
  if (!cout_) throw DomainError("cannot write summary.csv in " + dir);
  cout_ << report_csv(r);
}

CheckResult verify_certificate_file(const std::string& path) {
  Certificate c = load_certificate(path);
  return verify_certificate(c);
}

}  // namespace mdl
