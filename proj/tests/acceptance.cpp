// Acceptance harness: one pass/fail line per criterion, nonzero exit when
// anything fails.  Every bound is recomputed here from scratch; tolerances
// are pinned in this file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mdl/certificate.hpp"
#include "mdl/dichotomy.hpp"
#include "mdl/errors.hpp"
#include "mdl/generators.hpp"
#include "mdl/graph.hpp"
#include "mdl/increment.hpp"
#include "mdl/mates.hpp"
#include "mdl/minor_model.hpp"
#include "mdl/star_forest.hpp"

using namespace mdl;

namespace {

constexpr double kRelTol = 1e-9;

struct Criterion {
  int id = 0;
  std::string label;
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      ok = false;
      detail = why;
    }
  }
};

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

long brute_contraction_loss(const Graph& g,
                            const std::vector<std::pair<int, int>>& s) {
  std::vector<int> parent(g.n());
  for (int v = 0; v < g.n(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (auto [u, v] : s) parent[find(u)] = find(v);
  std::set<std::pair<int, int>> quotient_edges;
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a != b) quotient_edges.insert({std::min(a, b), std::max(a, b)});
  }
  return g.m() - static_cast<long>(quotient_edges.size());
}

std::vector<int> mates_pairwise(const Graph& g, int v, const Rat& eps,
                                const Rat& d) {
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (u != v && Rat(codegree(g, u, v)) >= eps * d) out.push_back(u);
  return out;
}

long mate_count_two_hop(const Graph& g, int v, const Rat& eps, const Rat& d) {
  std::vector<int> codeg(g.n(), 0);
  for (int w : g.neighbors(v))
    for (int u : g.neighbors(w))
      if (u != v) ++codeg[u];
  long cnt = 0;
  for (int u = 0; u < g.n(); ++u)
    if (codeg[u] > 0 && Rat(codeg[u]) >= eps * d) ++cnt;
  return cnt;
}

Graph gnp_with_edges(int n, double p, std::uint64_t seed) {
  for (;; ++seed) {
    Graph g = gen_gnp(n, p, seed);
    if (g.m() >= 1) return g;
  }
}

Graph gnp_with_density(int n, double p, std::uint64_t seed, const Rat& floor) {
  for (;; ++seed) {
    Graph g = gen_gnp(n, p, seed);
    if (g.n() >= 1 && density(g) >= floor) return g;
  }
}

void criterion1(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    int n = 5 + static_cast<int>(rng() % 56);
    double p = 0.05 + static_cast<double>(rng() % 60) / 100.0;
    Graph g = gen_gnp(n, p, rng());
    std::vector<std::pair<int, int>> sub;
    for (auto e : g.edges())
      if (rng() % 3 == 0) sub.push_back(e);
    ContractionResult cr = contract_edges(g, sub);
    long brute = brute_contraction_loss(g, sub);
    if (cr.loss != brute) {
      c.fail("pair " + std::to_string(i) + ": library loss " +
             std::to_string(cr.loss) + " vs recount " + std::to_string(brute));
      return;
    }
    if (cr.loss != g.m() - cr.graph.m()) {
      c.fail("pair " + std::to_string(i) + ": loss differs from edge delta");
      return;
    }
  }
  long ms = elapsed_ms(t0);
  if (ms >= 10000) {
    c.fail("1000 pairs took " + std::to_string(ms) + " ms, limit 10000");
    return;
  }
  c.detail = "1000 pairs exact in " + std::to_string(ms) + " ms";
}

void criterion2(Criterion& c) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 500; ++i) {
    int n = 5 + static_cast<int>(rng() % 76);
    double p = 0.05 + static_cast<double>(rng() % 56) / 100.0;
    Graph g = gnp_with_edges(n, p, rng());
    Rat d = density(g);
    PeelResult peeled = peel_to_min_degree(g);
    if (!(Rat(peeled.graph.min_degree()) > d)) {
      c.fail("graph " + std::to_string(i) + ": min degree " +
             std::to_string(peeled.graph.min_degree()) + " not above " +
             rat_str(d));
      return;
    }
    if (!(density(peeled.graph) >= d)) {
      c.fail("graph " + std::to_string(i) + ": density dropped from " +
             rat_str(d) + " to " + rat_str(density(peeled.graph)));
      return;
    }
  }
  c.detail = "500 graphs, min degree and density contracts exact";
}

void criterion3(Criterion& c) {
  std::mt19937_64 rng(303);
  const std::vector<Rat> eps_grid = {rat(1, 10), rat(1, 5), rat(1, 3),
                                     rat(1, 2), rat(9, 10)};
  for (int i = 0; i < 200; ++i) {
    int n = 4 + static_cast<int>(rng() % 37);
    double p = 0.1 + static_cast<double>(rng() % 61) / 100.0;
    Graph g = gen_gnp(n, p, rng());
    Rat d = g.m() >= g.n() ? density(g) : Rat(1);
    Rat eps = eps_grid[i % eps_grid.size()];
    for (int v = 0; v < g.n(); ++v) {
      if (count_mates(g, v, eps, d) != mates_pairwise(g, v, eps, d)) {
        c.fail("graph " + std::to_string(i) + " vertex " + std::to_string(v) +
               ": mate sets differ");
        return;
      }
    }
  }
  c.detail = "200 graphs, mate sets equal all-pairs brute force";
}

void criterion4(Criterion& c) {
  std::mt19937_64 rng(404);
  int dense_seen = 0, unmated_seen = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g;
    MateParams p;
    p.K = rat(4);
    p.eps1 = rat(1, 10);
    p.eps2 = rat(1, 10);
    switch (i % 6) {
      case 0:
        g = gen_gnp(40 + static_cast<int>(rng() % 81),
                    0.25 + static_cast<double>(rng() % 31) / 100.0, rng());
        break;
      case 1:
        g = gen_gnp(40 + static_cast<int>(rng() % 81),
                    0.02 + static_cast<double>(rng() % 9) / 100.0, rng());
        break;
      case 2:
        g = gen_gnp(40 + static_cast<int>(rng() % 61),
                    0.2 + static_cast<double>(rng() % 21) / 100.0, rng());
        p.eps1 = rat(9, 10);
        p.eps2 = rat(9, 10);
        break;
      case 3:
        g = gen_grid(4 + static_cast<int>(rng() % 9),
                     4 + static_cast<int>(rng() % 9));
        break;
      case 4:
        g = gen_tree(10 + static_cast<int>(rng() % 91), rng());
        p.eps1 = rat(1, 2);
        p.eps2 = rat(1, 2);
        break;
      case 5:
        switch ((i / 6) % 4) {
          case 0: g = gen_projective_incidence(23); break;
          case 1: g = gen_blowup(10, 4); break;
          case 2: g = gen_affine_incidence(13, 6); break;
          case 3: g = gen_complete(30 + (i % 20)); break;
        }
        break;
    }
    p.d = g.n() >= 1 && g.m() >= g.n() ? density(g) : Rat(1);

    std::string id = "instance " + std::to_string(i);
    UnmatedCertificate cert = unmated_dichotomy(g, p);
    auto chk = check_unmated_certificate(g, cert);
    if (!chk.ok) {
      c.fail(id + ": certificate check failed: " + chk.reason);
      return;
    }
    if (cert.verdict == UnmatedCertificate::Verdict::DenseSubgraph) {
      if (!cert.witness) {
        c.fail(id + ": dense verdict without a witness");
        return;
      }
      Graph h = induced(g, cert.witness->subgraph).graph;
      if (!(Rat(h.n()) <= 3 * p.K * p.d)) {
        c.fail(id + ": pocket has " + std::to_string(h.n()) +
               " vertices, cap " + rat_str(Rat(3 * p.K * p.d)));
        return;
      }
      if (!(Rat(2 * h.m()) >= p.eps1 * p.eps2 * p.d * p.d)) {
        c.fail(id + ": pocket misses the edge floor");
        return;
      }
      ++dense_seen;
    } else {
      if (cert.witness) {
        c.fail(id + ": unmated verdict carries a witness");
        return;
      }
      for (int v = 0; v < g.n(); ++v) {
        if (!is_small(g, v, p.K, p.d)) continue;
        long cnt = mate_count_two_hop(g, v, p.eps2, p.d);
        if (Rat(cnt) >= p.eps1 * p.d) {
          c.fail(id + ": census found vertex " + std::to_string(v) + " with " +
                 std::to_string(cnt) + " mates");
          return;
        }
      }
      ++unmated_seen;
    }
  }
  if (dense_seen == 0 || unmated_seen == 0) {
    c.fail("sweep did not span both branches: dense " +
           std::to_string(dense_seen) + ", unmated " +
           std::to_string(unmated_seen));
    return;
  }
  c.detail = "300 instances: " + std::to_string(dense_seen) + " dense, " +
             std::to_string(unmated_seen) + " unmated, all confirmed";
}

void criterion5(Criterion& c) {
  std::mt19937_64 rng(505);
  int built = 0, escaped = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 40 + static_cast<int>(rng() % 81);
    double pr = 0.06 + static_cast<double>(rng() % 10) / 100.0;
    Graph g = gnp_with_density(n, pr, rng(), Rat(1));

    ForestParams p;
    p.K = rat(3);
    p.k = 3;
    p.eps1 = rat(2, 5);
    p.eps2 = rat(3, 5);
    p.d = density(g);
    std::string id = "instance " + std::to_string(i);

    ForestBuild b = build_clean_forest(g, p);
    if (b.rounds > g.n()) {
      c.fail(id + ": " + std::to_string(b.rounds) + " rounds on " +
             std::to_string(g.n()) + " vertices");
      return;
    }
    if (b.dense_escape) {
      Graph h = induced(g, b.escape_subgraph).graph;
      if (!(Rat(h.n()) <= 3 * p.K * p.d) ||
          !(Rat(2 * p.k * h.m()) >= p.eps1 * p.eps2 * p.d * p.d)) {
        c.fail(id + ": escape subgraph misses its bounds");
        return;
      }
      ++escaped;
      continue;
    }
    ++built;

    const StarForest& f = b.forest;
    long loss = edge_loss(g, f);  // also validates disjointness and shape
    if (!(Rat(loss) <= 4 * p.eps2 * p.d * f.vertex_count())) {
      c.fail(id + ": forest is not (4*eps2,d)-clean under recount");
      return;
    }
    for (const Star& s : f.stars) {
      if (static_cast<int>(s.leaves.size()) + 1 != p.k) {
        c.fail(id + ": star size differs from k");
        return;
      }
      if (!is_small(g, s.center, p.K, p.d)) {
        c.fail(id + ": forest center is big");
        return;
      }
      for (int u : s.leaves)
        if (!is_small(g, u, p.K, p.d)) {
          c.fail(id + ": forest leaf is big");
          return;
        }
    }

    std::vector<char> in_f(g.n(), 0);
    for (int v : f.vertices()) in_f[v] = 1;
    std::vector<char> in_ap(g.n(), 0);
    for (int v : b.a_prime) in_ap[v] = 1;
    for (int v = 0; v < g.n(); ++v) {
      bool small = is_small(g, v, p.K, p.d);
      bool expect_ap = small && !in_f[v];
      if (expect_ap != static_cast<bool>(in_ap[v])) {
        c.fail(id + ": a_prime differs from small-minus-forest recount");
        return;
      }
    }

    std::vector<int> ap_nbrs(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbors(v))
        if (in_ap[w]) ++ap_nbrs[v];
    for (int v : b.a_prime)
      if (!(Rat(ap_nbrs[v]) <= 2 * p.eps1 * p.d)) {
        c.fail(id + ": leftover vertex " + std::to_string(v) + " keeps " +
               std::to_string(ap_nbrs[v]) + " leftover neighbors");
        return;
      }
    std::vector<int> heavy_recount;
    for (const Star& s : f.stars) {
      int heavy = 0;
      if (Rat(ap_nbrs[s.center]) >= 3 * p.eps1 * p.d) {
        ++heavy;
        heavy_recount.push_back(s.center);
      }
      for (int u : s.leaves)
        if (Rat(ap_nbrs[u]) >= 3 * p.eps1 * p.d) {
          ++heavy;
          heavy_recount.push_back(u);
        }
      if (heavy > 1) {
        c.fail(id + ": a component holds " + std::to_string(heavy) +
               " heavy vertices");
        return;
      }
    }
    std::sort(heavy_recount.begin(), heavy_recount.end());
    if (heavy_recount != b.c) {
      c.fail(id + ": heavy set differs from recount");
      return;
    }
  }
  if (built < 50) {
    c.fail("only " + std::to_string(built) +
           " of 100 instances built a forest");
    return;
  }
  c.detail = std::to_string(built) + " forests built, " +
             std::to_string(escaped) + " dense escapes, all bounds recounted";
}

void criterion6(Criterion& c) {
  struct Spec {
    Graph g;
    int k;
    std::string id;
  };
  std::vector<Spec> specs;
  for (int i = 0; i < 180; ++i) {
    int n = 300 + 50 * (i % 5);
    double p = 0.26 + 0.01 * (i % 5);
    specs.push_back({gen_gnp(n, p, 1000 + i), 6,
                     "gnp-" + std::to_string(i)});
  }
  for (int i = 0; i < 10; ++i)
    specs.push_back({gen_gnp(500, 0.22 + 0.004 * i, 2000 + i), 7,
                     "gnp-k7-" + std::to_string(i)});
  for (int i = 0; i < 8; ++i)
    specs.push_back({gen_gnp(500, 0.28 + 0.004 * i, 3000 + i), 8,
                     "gnp-k8-" + std::to_string(i)});
  specs.push_back({gen_projective_incidence(71), 6, "projective-71"});
  specs.push_back({gen_projective_incidence(73), 6, "projective-73"});

  std::map<std::string, int> branches;
  for (const Spec& s : specs) {
    DichotomyParams p;
    p.k = s.k;
    p.K = Rat(4L * s.k * s.k);
    p.eps1 = rat(1, s.k);
    p.eps2 = rat(1, s.k);

    DichotomyResult r;
    try {
      r = dense_bipartite_minor(s.g, p);
    } catch (const LemmaViolationError& e) {
      c.fail(s.id + ": lemma violation: " + e.what());
      return;
    }
    auto chk = check_dichotomy_result(s.g, p, r);
    if (!chk.ok) {
      c.fail(s.id + ": result check failed: " + chk.reason);
      return;
    }
    Certificate cert = make_dichotomy_certificate(s.g, p, r);
    auto cchk = verify_certificate(cert);
    if (!cchk.ok) {
      c.fail(s.id + ": certificate failed: " + cchk.reason);
      return;
    }

    if (r.branch == DichotomyBranch::Dense) {
      ++branches["dense"];
      Graph h = induced(s.g, r.subgraph).graph;
      if (!(Rat(h.n()) <= 3 * p.K * r.d_ref)) {
        c.fail(s.id + ": dense pocket above 3*K*d vertices");
        return;
      }
      if (!(density(h) * 6 * p.K * s.k >= p.eps1 * p.eps2 * r.d_ref)) {
        c.fail(s.id + ": dense pocket below eps1*eps2*d/(6Kk)");
        return;
      }
    } else if (r.branch == DichotomyBranch::Bipartite) {
      ++branches["bipartite"];
      if (r.x_side.size() <
          static_cast<size_t>(r.ell) * r.y_side.size()) {
        c.fail(s.id + ": bipartite sides are not lopsided enough");
        return;
      }
      std::vector<char> in_y(s.g.n(), 0);
      for (int v : r.y_side) in_y[v] = 1;
      for (int v : r.x_side) {
        int deg = 0;
        for (int w : s.g.neighbors(v))
          if (in_y[w]) ++deg;
        if (!(Rat(deg) >= (1 - 6 * p.eps1) * r.d_ref)) {
          c.fail(s.id + ": a left vertex misses its degree floor");
          return;
        }
      }
    } else {
      ++branches["shrunken"];
      if (r.model.width > s.k) {
        c.fail(s.id + ": model width above k");
        return;
      }
      auto mchk = verify_model(s.g, r.model);
      if (!mchk.ok) {
        c.fail(s.id + ": model failed: " + mchk.reason);
        return;
      }
      Graph q = contract_model(s.g, r.model);
      if (!(density(q) >= Rat(s.k) * (1 - rat(30, s.k)) * r.d_ref)) {
        c.fail(s.id + ": contracted density below k*(1-30/k)*d");
        return;
      }
    }
  }
  c.detail = "200 certificates verified:";
  for (const auto& [name, count] : branches)
    c.detail += " " + name + "=" + std::to_string(count);
}

struct IncrementRun {
  std::vector<IterationLog> logs;
  double c_scale = 0;
};

void walk_one_increment(Criterion& c, const Graph& g, const Rat& target,
                        double c_scale, const std::string& id,
                        std::vector<IncrementRun>& runs) {
  // Mirror of the refinement schedule, recomputing the per-iteration
  // composition bounds from the actual level graphs.
  std::vector<std::string> walk_branches;
  Graph cur = g;
  for (int guard = 0; guard < 100; ++guard) {
    Rat d = density(cur);
    if (target <= d) {
      walk_branches.push_back("identity");
      break;
    }
    double s = Rat(target / d).get_d();
    double gs = g_value(s, c_scale);
    if (gs >= 2 * d.get_d()) {
      walk_branches.push_back("edge");
      break;
    }
    int k = std::max(static_cast<int>(std::floor(std::pow(gs / 32.0, 0.2))),
                     6);
    StepOutcome step;
    try {
      step = dense_or_bounded_minor(cur, k);
    } catch (const LemmaViolationError& e) {
      c.fail(id + ": lemma violation: " + e.what());
      return;
    }
    if (step.is_subgraph) {
      walk_branches.push_back("dense");
      break;
    }
    walk_branches.push_back("minor");

    Graph q = contract_model(cur, step.model);
    if (!(density(q) > d)) {
      c.fail(id + ": minor step did not raise density");
      return;
    }
    if (!(Rat(target / density(q)).get_d() < s)) {
      c.fail(id + ": s did not fall");
      return;
    }
    std::vector<int> covered;
    for (const auto& set : step.model.branch_sets) {
      if (static_cast<int>(set.size()) > step.m) {
        c.fail(id + ": a branch set exceeds m");
        return;
      }
      covered.insert(covered.end(), set.begin(), set.end());
    }
    std::sort(covered.begin(), covered.end());
    Graph h = induced(cur, covered).graph;
    if (h.n() > step.m * q.n()) {
      c.fail(id + ": v(H) above m*v(H')");
      return;
    }
    if (!(density(h) * step.m >= density(q))) {
      c.fail(id + ": d(H) below d(H')/m");
      return;
    }
    cur = std::move(q);
  }

  IncrementParams p;
  p.c = c_scale;
  p.target = target;
  IncrementOutcome out;
  try {
    out = density_increment(g, p);
  } catch (const LemmaViolationError& e) {
    c.fail(id + ": lemma violation: " + e.what());
    return;
  }

  if (out.iterations.size() != walk_branches.size()) {
    c.fail(id + ": run logged " + std::to_string(out.iterations.size()) +
           " iterations, walk saw " + std::to_string(walk_branches.size()));
    return;
  }
  for (size_t i = 0; i < walk_branches.size(); ++i)
    if (out.iterations[i].branch != walk_branches[i]) {
      c.fail(id + ": branch sequence diverged at iteration " +
             std::to_string(i));
      return;
    }
  for (size_t i = 1; i < out.iterations.size(); ++i) {
    if (!(out.iterations[i].d > out.iterations[i - 1].d)) {
      c.fail(id + ": logged density not strictly increasing");
      return;
    }
    if (!(out.iterations[i].s < out.iterations[i - 1].s)) {
      c.fail(id + ": logged s not strictly decreasing");
      return;
    }
  }

  Rat d0 = density(g);
  double s0 = Rat(target / d0).get_d();
  double g0 = s0 > 1 ? g_value(s0, c_scale) : c_scale;
  if (out.tag == IncrementOutcome::Tag::DenseSubgraph) {
    Graph h = induced(g, out.subgraph).graph;
    if (h.n() > g0 * Rat(target * target / d0).get_d() * (1 + kRelTol)) {
      c.fail(id + ": pocket above g(s)*D^2/d vertices");
      return;
    }
    if (density(h).get_d() * g0 < d0.get_d() * (1 - kRelTol)) {
      c.fail(id + ": pocket below d/g(s) density");
      return;
    }
  } else {
    auto chk = verify_model(g, out.model);
    if (!chk.ok) {
      c.fail(id + ": final model failed: " + chk.reason);
      return;
    }
    if (!(density(contract_model(g, out.model)) >= target)) {
      c.fail(id + ": final minor density below target");
      return;
    }
  }
  runs.push_back({out.iterations, c_scale});
}

void criterion8(Criterion& c, std::vector<IncrementRun>& runs) {
  int minor_steps = 0;
  for (int i = 0; i < 17 && c.ok; ++i) {
    int n = 900 + 50 * i;
    double p = 80.0 / n;
    Graph g = gnp_with_density(n, p, 3000 + i, Rat(36));
    walk_one_increment(c, g, 10 * density(g), 0.1,
                       "gnp-" + std::to_string(i), runs);
  }
  if (c.ok) {
    Graph g71 = gen_projective_incidence(71);
    walk_one_increment(c, g71, 10 * density(g71), 0.1, "projective-71", runs);
  }
  if (c.ok) {
    Graph g73 = gen_projective_incidence(73);
    // Two targets: one past the second-level density (dense pocket finish),
    // one below it (minor found at the second level).
    walk_one_increment(c, g73, 8 * density(g73), 0.1, "projective-73-far",
                       runs);
    if (c.ok)
      walk_one_increment(c, g73, 4 * density(g73), 0.1, "projective-73-near",
                         runs);
  }
  if (!c.ok) return;
  for (const IncrementRun& r : runs)
    for (const IterationLog& log : r.logs)
      if (log.branch == "minor") ++minor_steps;
  if (minor_steps == 0) {
    c.fail("no minor iterations executed across 20 runs");
    return;
  }
  c.detail = "20 runs, " + std::to_string(minor_steps) +
             " minor iterations, all dynamics and outcome bounds hold";
}

void criterion9(Criterion& c, const std::vector<IncrementRun>& runs) {
  const double e1 = std::exp(1.0);
  for (double scale : {1.0, 7.5, std::ldexp(1.0, 50)}) {
    if (std::fabs(g_value(1.0, scale) - scale) > 1e-12 * scale) {
      c.fail("g(1) differs from C");
      return;
    }
    if (std::fabs(g_value(e1, scale) - 32 * scale) > 1e-12 * 32 * scale) {
      c.fail("g(e) differs from 32C");
      return;
    }
    if (std::fabs(g_value(e1 * e1 * e1, scale) - 1024 * scale) >
        1e-12 * 1024 * scale) {
      c.fail("g(e^3) differs from 1024C");
      return;
    }
  }

  int premise_hits = 0;
  for (const IncrementRun& r : runs) {
    for (size_t i = 0; i + 1 < r.logs.size(); ++i) {
      const IterationLog& cur = r.logs[i];
      const IterationLog& nxt = r.logs[i + 1];
      if (cur.branch != "minor") continue;
      if (cur.m < 30 * (1 + std::log(cur.s)) || nxt.s <= 1) continue;
      ++premise_hits;
      double ratio = g_value(nxt.s, r.c_scale) / g_value(cur.s, r.c_scale);
      if (ratio > 1 - 2 / (1 + std::log(cur.s)) + kRelTol) {
        c.fail("executed iteration broke the g-ratio budget");
        return;
      }
    }
  }

  // The premise m >= 30*(1+ln s) never fires with desk widths, so probe the
  // same inequality at the schedule's own scale: width exactly at the
  // premise floor, density gain (m-30)*d as the minor branch guarantees.
  int synthetic = 0;
  for (double s : {150.0, 200.0, 500.0, 1000.0, 5000.0}) {
    for (int bump : {0, 10}) {
      int m = static_cast<int>(std::ceil(30 * (1 + std::log(s)))) + bump;
      double s_next = s / (m - 30);
      if (s_next <= 1) continue;
      ++synthetic;
      double ratio = g_value(s_next, 1.0) / g_value(s, 1.0);
      if (ratio > 1 - 2 / (1 + std::log(s)) + kRelTol) {
        c.fail("ratio bound failed at s=" + std::to_string(s) +
               " m=" + std::to_string(m));
        return;
      }
    }
  }
  c.detail = "identities exact; ratio bound held on " +
             std::to_string(premise_hits) + " executed and " +
             std::to_string(synthetic) + " synthetic iterations";
}

void criterion7(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  OracleLimits lim;

  auto check_found = [&](const Graph& g, int t, const std::string& id) {
    auto m = clique_minor_oracle(g, t, lim);
    if (!m) {
      c.fail(id + ": expected a clique model of order " + std::to_string(t));
      return;
    }
    auto chk = verify_model(g, *m);
    if (!chk.ok) {
      c.fail(id + ": model failed: " + chk.reason);
      return;
    }
    Certificate cert = make_oracle_certificate(g, t, m);
    auto cchk = verify_certificate(cert);
    if (!cchk.ok) c.fail(id + ": certificate failed: " + cchk.reason);
  };
  auto check_absent = [&](const Graph& g, int t, const std::string& id) {
    auto m = clique_minor_oracle(g, t, lim);
    if (m) {
      c.fail(id + ": unexpected clique model of order " + std::to_string(t));
      return;
    }
    Certificate cert = make_oracle_certificate(g, t, m);
    auto cchk = verify_certificate(cert);
    if (!cchk.ok) c.fail(id + ": certificate failed: " + cchk.reason);
  };

  for (int n = 2; n <= 10 && c.ok; ++n)
    for (std::uint64_t seed = 1; seed <= 2; ++seed)
      check_absent(gen_tree(n, seed), 3,
                   "tree-" + std::to_string(n) + "-" + std::to_string(seed));
  if (c.ok) check_found(gen_complete_bipartite(3, 3), 4, "k33");
  if (c.ok) check_absent(gen_complete_bipartite(3, 3), 5, "k33");
  if (c.ok) check_found(gen_petersen(), 5, "petersen");
  if (c.ok) check_absent(gen_grid(3, 3), 5, "grid-3x3");
  if (c.ok) check_absent(gen_grid(2, 5), 5, "grid-2x5");
  if (!c.ok) return;

  long ms = elapsed_ms(t0);
  if (ms >= 60000) {
    c.fail("fixture sweep took " + std::to_string(ms) + " ms, limit 60000");
    return;
  }
  c.detail = "fixture ground truths match in " + std::to_string(ms) + " ms";
}

void criterion10(Criterion& c) {
  auto check_proper = [&](const Graph& g, const std::string& id) {
    Coloring col = degeneracy_coloring(g);
    for (auto [u, v] : g.edges())
      if (col.color[u] == col.color[v]) {
        c.fail(id + ": improper coloring");
        return col;
      }
    if (col.colors > col.degeneracy + 1)
      c.fail(id + ": used more than degeneracy+1 colors");
    return col;
  };

  if (check_proper(gen_complete(5), "k5").colors != 5) {
    c.fail("K5 did not use exactly 5 colors");
    return;
  }
  for (int n : {2, 10, 30, 60}) {
    if (!c.ok) return;
    if (check_proper(gen_tree(n, 7), "tree").colors > 2) {
      c.fail("a tree needed more than 2 colors");
      return;
    }
  }
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  if (check_proper(c5, "c5").colors > 3) {
    c.fail("C5 needed more than 3 colors");
    return;
  }
  check_proper(gen_petersen(), "petersen");
  check_proper(gen_grid(6, 7), "grid");
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 30 && c.ok; ++i) {
    int n = 10 + static_cast<int>(rng() % 71);
    double p = 0.05 + static_cast<double>(rng() % 56) / 100.0;
    check_proper(gen_gnp(n, p, rng()), "gnp-" + std::to_string(i));
  }
  if (c.ok) c.detail = "fixtures and 30 random graphs proper within degeneracy+1";
}

}  // namespace

int main() {
  std::vector<Criterion> cs(10);
  const char* labels[10] = {
      "contraction loss bookkeeping",   "peeling contract",
      "mate oracle equivalence",        "small-vertex dichotomy totality",
      "star forest postconditions",     "level dichotomy certificates",
      "minor models vs exact oracle",   "density increment dynamics",
      "g-function arithmetic",          "degeneracy coloring"};
  for (int i = 0; i < 10; ++i) {
    cs[i].id = i + 1;
    cs[i].label = labels[i];
  }

  std::vector<IncrementRun> runs;
  auto guard = [&](Criterion& c, auto&& fn) {
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.fail(std::string("unexpected exception: ") + e.what());
    }
  };
  guard(cs[0], criterion1);
  guard(cs[1], criterion2);
  guard(cs[2], criterion3);
  guard(cs[3], criterion4);
  guard(cs[4], criterion5);
  guard(cs[5], criterion6);
  guard(cs[6], criterion7);
  guard(cs[7], [&](Criterion& c) { criterion8(c, runs); });
  guard(cs[8], [&](Criterion& c) { criterion9(c, runs); });
  guard(cs[9], criterion10);

  bool all_ok = true;
  for (const Criterion& c : cs) {
    std::printf("[%s] criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), c.detail.empty() ? "" : " - ",
                c.detail.c_str());
    if (!c.ok) all_ok = false;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
