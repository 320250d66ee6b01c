#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdl/errors.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/harness.hpp"

namespace {

// --seed fills in instances that do not carry their own seed.
void apply_seed(mdl::ExperimentConfig& cfg, bool has_seed,
                std::uint64_t seed) {
  if (!has_seed) return;
  for (mdl::InstanceSpec& s : cfg.instances)
    if (!s.fields.contains("seed")) s.fields["seed"] = seed;
}

int do_run(mdl::ExperimentConfig cfg) {
  mdl::RunReport report = mdl::run_experiment(cfg);
  std::printf("stage %s, mode %s, %zu instances\n", report.stage.c_str(),
              report.mode.c_str(), report.rows.size());
  for (const auto& [branch, count] : report.histogram)
    std::printf("  %-12s %d\n", branch.c_str(), count);
  std::printf("verified %d, failed %d\n", report.verified_count,
              report.failed_count);
  for (const mdl::InstanceRow& row : report.rows)
    if (!row.verified)
      std::fprintf(stderr, "FAIL %s: %s\n", row.instance_id.c_str(),
                   row.verdict.c_str());
  return report.failed_count > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-minor pipeline: generation, experiments, verification"};
  app.require_subcommand(1);

  std::string config_path, out_dir, mode;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::vector<std::string> cert_paths;

  CLI::App* gen = app.add_subcommand("gen", "write instance graphs as text");
  gen->add_option("--config", config_path, "experiment config")->required();
  gen->add_option("--out", out_dir, "output directory");
  auto* gen_seed = gen->add_option("--seed", seed, "seed for unseeded instances");

  CLI::App* run = app.add_subcommand("run", "run a pipeline stage and verify");
  run->add_option("--config", config_path, "experiment config")->required();
  run->add_option("--out", out_dir, "report and certificate directory");
  run->add_option("--mode", mode, "paper or desk")
      ->check(CLI::IsMember({"paper", "desk"}));
  run->add_option("--jobs", jobs, "worker count");
  auto* run_seed = run->add_option("--seed", seed, "seed for unseeded instances");

  CLI::App* verify = app.add_subcommand("verify", "re-check certificates");
  verify->add_option("paths", cert_paths, "certificate files")->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "exhaustive clique-minor stage");
  oracle->add_option("--config", config_path, "experiment config")->required();
  oracle->add_option("--out", out_dir, "report and certificate directory");
  oracle->add_option("--jobs", jobs, "worker count");
  auto* oracle_seed =
      oracle->add_option("--seed", seed, "seed for unseeded instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      mdl::ExperimentConfig cfg = mdl::load_config(config_path);
      apply_seed(cfg, gen_seed->count() > 0, seed);
      std::string dir = out_dir.empty() ? "." : out_dir;
      for (const mdl::InstanceSpec& spec : cfg.instances) {
        mdl::Graph g = mdl::generate_graph(spec);
        std::string path = dir + "/" + spec.id + ".graph";
        mdl::write_graph_file(g, path);
        std::printf("%s n=%d m=%ld density=%s\n", path.c_str(), g.n(), g.m(),
                    g.n() > 0 ? mdl::rat_str(mdl::density(g)).c_str() : "0");
      }
      return 0;
    }
    if (run->parsed() || oracle->parsed()) {
      mdl::ExperimentConfig cfg = mdl::load_config(config_path);
      if (oracle->parsed()) cfg.stage = "oracle";
      bool has_seed = run->parsed() ? run_seed->count() > 0
                                    : oracle_seed->count() > 0;
      apply_seed(cfg, has_seed, seed);
      if (!mode.empty()) cfg.mode = mode;
      if (jobs > 0) cfg.jobs = jobs;
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      return do_run(std::move(cfg));
    }
    if (verify->parsed()) {
      bool parse_trouble = false, check_trouble = false;
      for (const std::string& path : cert_paths) {
        try {
          mdl::CheckResult res = mdl::verify_certificate_file(path);
          std::printf("%s %s: %s\n", res.ok ? "PASS" : "FAIL", path.c_str(),
                      res.reason.c_str());
          if (!res.ok) check_trouble = true;
        } catch (const mdl::ParseError& e) {
          std::fprintf(stderr, "PARSE %s: %s\n", path.c_str(), e.what());
          parse_trouble = true;
        }
      }
      if (parse_trouble) return 2;
      return check_trouble ? 1 : 0;
    }
  } catch (const mdl::ParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const mdl::DomainError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
