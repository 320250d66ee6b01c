#include "mdl/certificate.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mdl/errors.hpp"

namespace mdl {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

long need_long(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer())
    throw ParseError(std::string("field is not an integer: ") + key);
  return v.get<long>();
}

int need_int(const json& j, const char* key) {
  return static_cast<int>(need_long(j, key));
}

std::string need_str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string())
    throw ParseError(std::string("field is not a string: ") + key);
  return v.get<std::string>();
}

Rat need_rat(const json& j, const char* key) {
  return parse_rat(need_str(j, key));
}

double need_num(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number())
    throw ParseError(std::string("field is not a number: ") + key);
  return v.get<double>();
}

std::vector<int> int_list(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_array())
    throw ParseError(std::string("field is not an array: ") + key);
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ParseError(std::string("non-integer entry in: ") + key);
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  int n = need_int(j, "n");
  const json& ej = need(j, "edges");
  if (!ej.is_array()) throw ParseError("field is not an array: edges");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : ej) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("edge entry is not a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(n, edges);
  } catch (const DomainError& ex) {
    throw ParseError(std::string("bad graph: ") + ex.what());
  }
}

json model_to_json(const MinorModel& m) {
  json sets = json::array();
  for (const auto& s : m.branch_sets) sets.push_back(s);
  json pat = json::array();
  for (auto [a, b] : m.pattern_edges) pat.push_back({a, b});
  return json{{"h", m.h},
              {"branch_sets", std::move(sets)},
              {"pattern_edges", std::move(pat)},
              {"width", m.width}};
}

MinorModel model_from_json(const json& j) {
  MinorModel m;
  m.h = need_int(j, "h");
  m.width = need_int(j, "width");
  const json& sets = need(j, "branch_sets");
  if (!sets.is_array()) throw ParseError("field is not an array: branch_sets");
  for (const json& s : sets) {
    if (!s.is_array()) throw ParseError("branch set is not an array");
    std::vector<int> set;
    for (const json& e : s) set.push_back(e.get<int>());
    m.branch_sets.push_back(std::move(set));
  }
  const json& pat = need(j, "pattern_edges");
  if (!pat.is_array())
    throw ParseError("field is not an array: pattern_edges");
  for (const json& e : pat) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("pattern edge is not a pair");
    m.pattern_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return m;
}

json forest_to_json(const StarForest& f) {
  json stars = json::array();
  for (const Star& s : f.stars)
    stars.push_back(json{{"center", s.center}, {"leaves", s.leaves}});
  return json{{"stars", std::move(stars)}, {"loss", f.loss}};
}

StarForest forest_from_json(const json& j) {
  StarForest f;
  f.loss = need_long(j, "loss");
  const json& stars = need(j, "stars");
  if (!stars.is_array()) throw ParseError("field is not an array: stars");
  for (const json& s : stars) {
    Star star;
    star.center = need_int(s, "center");
    star.leaves = int_list(s, "leaves");
    f.stars.push_back(std::move(star));
  }
  return f;
}

json certificate_to_json(const Certificate& c) {
  json j{{"schema", "mdl-cert-v1"}, {"stage", c.stage},   {"mode", c.mode},
         {"graph", graph_to_json(c.graph)},
         {"params", c.params},       {"branch", c.branch},
         {"witness", c.witness},     {"claims", c.claims}};
  if (!c.trace.is_null()) j["trace"] = c.trace;
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (need_str(j, "schema") != "mdl-cert-v1")
    throw ParseError("unknown certificate schema");
  Certificate c;
  c.stage = need_str(j, "stage");
  c.mode = need_str(j, "mode");
  c.graph = graph_from_json(need(j, "graph"));
  c.params = need(j, "params");
  c.branch = need_str(j, "branch");
  c.witness = need(j, "witness");
  c.claims = need(j, "claims");
  if (j.contains("trace")) c.trace = j["trace"];
  return c;
}

std::string canonical_json(const json& j) { return j.dump(); }

std::string content_hash(const json& j) {
  std::string s = canonical_json(j);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string save_certificate(const Certificate& c, const std::string& dir) {
  json j = certificate_to_json(c);
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + content_hash(j) + ".json";
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << canonical_json(j) << "\n";
  return path;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate parse: ") + e.what());
  }
  return certificate_from_json(j);
}

Certificate make_unmated_certificate(const Graph& g, const MateParams& p,
                                     const UnmatedCertificate& u,
                                     const std::string& mode) {
  Certificate c;
  c.stage = "unmated";
  c.mode = mode;
  c.graph = g;
  c.params = json{{"K", rat_str(p.K)},
                  {"d", rat_str(p.d)},
                  {"eps1", rat_str(p.eps1)},
                  {"eps2", rat_str(p.eps2)}};
  if (u.verdict == UnmatedCertificate::Verdict::DenseSubgraph) {
    c.branch = "dense";
    c.witness = json{{"vertex", u.witness->vertex},
                     {"mates", u.witness->mates},
                     {"subgraph", u.witness->subgraph}};
    c.claims = json{{"h_n", u.witness->h.n()}, {"h_m", u.witness->h.m()}};
  } else {
    c.branch = "unmated";
    c.witness = json::object();
    c.claims = json{{"mate_cap", rat_str(p.eps1 * p.d)}};
  }
  return c;
}

Certificate make_claw_certificate(const Graph& g, int a_count,
                                  const ClawParams& p, const ClawResult& r,
                                  const std::string& mode) {
  Certificate c;
  c.stage = "claw";
  c.mode = mode;
  c.graph = g;
  c.params = json{{"K0", p.K0},
                  {"l0", p.l0},
                  {"eps10", rat_str(p.eps10)},
                  {"eps20", rat_str(p.eps20)},
                  {"d0", rat_str(p.d0)}};
  c.witness = json{{"a_count", a_count}};
  switch (r.branch) {
    case ClawBranch::DenseTight:
    case ClawBranch::DenseWide: {
      c.branch = r.branch == ClawBranch::DenseTight ? "dense-tight"
                                                    : "dense-wide";
      c.witness["subgraph"] = r.subgraph;
      Graph h = induced(g, r.subgraph).graph;
      c.claims = json{{"h_n", h.n()}, {"h_m", h.m()}};
      break;
    }
    case ClawBranch::Minor: {
      c.branch = "minor";
      c.witness["model"] = model_to_json(r.model);
      Graph q = contract_model(g, r.model);
      c.claims = json{{"quotient_density", rat_str(density(q))}};
      break;
    }
  }
  return c;
}

Certificate make_dichotomy_certificate(const Graph& g,
                                       const DichotomyParams& p,
                                       const DichotomyResult& r) {
  Certificate c;
  c.stage = "dichotomy";
  c.mode = p.strict ? "paper" : "desk";
  c.graph = g;
  c.params = json{{"k", p.k},
                  {"K", rat_str(p.K)},
                  {"eps1", rat_str(p.eps1)},
                  {"eps2", rat_str(p.eps2)}};
  c.claims = json{{"d_ref", rat_str(r.d_ref)}, {"ell", r.ell}};
  if (!r.trace.empty()) {
    c.claims["level_n"] = r.trace.back().n;
    c.claims["leftover"] = r.trace.back().leftover;
  }
  json tr = json::array();
  for (const LevelTrace& t : r.trace)
    tr.push_back(json{{"n", t.n},
                      {"m", t.m},
                      {"d", rat_str(t.d)},
                      {"big", t.big},
                      {"stars", t.stars},
                      {"heavy", t.heavy},
                      {"leftover", t.leftover},
                      {"a1", t.a1},
                      {"action", t.action}});
  c.trace = std::move(tr);
  switch (r.branch) {
    case DichotomyBranch::Dense:
      c.branch = "dense";
      c.witness = json{{"subgraph", r.subgraph}};
      break;
    case DichotomyBranch::Bipartite:
      c.branch = "bipartite";
      c.witness = json{{"x", r.x_side}, {"y", r.y_side}};
      break;
    case DichotomyBranch::Shrunken: {
      c.branch = "minor";
      c.witness = json{{"model", model_to_json(r.model)}};
      Graph q = contract_model(g, r.model);
      c.claims["quotient_density"] = rat_str(density(q));
      break;
    }
  }
  return c;
}

Certificate make_increment_certificate(const Graph& g,
                                       const IncrementParams& p,
                                       const IncrementOutcome& o) {
  Certificate c;
  c.stage = "increment";
  c.mode = p.strict ? "paper" : "desk";
  c.graph = g;
  c.params = json{{"c", p.c},
                  {"target", rat_str(p.target)},
                  {"min_k", p.min_k}};
  c.claims = json{{"d0", rat_str(density(g))}};
  json tr = json::array();
  for (const IterationLog& it : o.iterations)
    tr.push_back(json{{"d", rat_str(it.d)},
                      {"s", it.s},
                      {"k", it.k},
                      {"m", it.m},
                      {"branch", it.branch}});
  c.trace = std::move(tr);
  if (o.tag == IncrementOutcome::Tag::MinorFound) {
    c.branch = "minor";
    c.witness = json{{"model", model_to_json(o.model)}};
    c.claims["final_density"] = rat_str(o.final_density);
  } else {
    c.branch = "pocket";
    c.witness = json{{"subgraph", o.subgraph}};
    Graph h = induced(g, o.subgraph).graph;
    c.claims["h_n"] = h.n();
    c.claims["h_density"] = rat_str(density(h));
  }
  return c;
}

Certificate make_oracle_certificate(const Graph& g, int t,
                                    const std::optional<MinorModel>& m) {
  Certificate c;
  c.stage = "oracle";
  c.mode = "desk";
  c.graph = g;
  c.params = json{{"t", t}};
  c.claims = json::object();
  if (m) {
    c.branch = "model";
    c.witness = json{{"model", model_to_json(*m)}};
  } else {
    c.branch = "none";
    c.witness = json::object();
  }
  return c;
}

namespace {

constexpr double kRelTol = 1e-9;

CheckResult pass(std::string summary) { return {true, std::move(summary)}; }
CheckResult fail(std::string why) { return {false, std::move(why)}; }

std::string two(const char* what, const std::string& claimed,
                const std::string& recount) {
  return std::string(what) + ": claimed " + claimed + ", recount " + recount;
}

CheckResult verify_unmated(const Certificate& c) {
  const Graph& g = c.graph;
  Rat K = need_rat(c.params, "K");
  Rat d = need_rat(c.params, "d");
  Rat eps1 = need_rat(c.params, "eps1");
  Rat eps2 = need_rat(c.params, "eps2");
  if (c.branch == "dense") {
    int v = need_int(c.witness, "vertex");
    if (v < 0 || v >= g.n()) return fail("witness vertex out of range");
    if (Rat(g.degree(v)) > K * d) return fail("witness vertex is not small");
    std::vector<int> codeg(g.n(), 0);
    for (int w : g.neighbors(v))
      for (int u : g.neighbors(w))
        if (u != v) ++codeg[u];
    std::vector<int> mates = int_list(c.witness, "mates");
    for (int u : mates) {
      if (u < 0 || u >= g.n() || u == v) return fail("bad mate vertex");
      if (Rat(codeg[u]) < eps2 * d)
        return fail("mate with too small a codegree");
    }
    if (Rat(static_cast<long>(mates.size())) < eps1 * d)
      return fail("fewer mates than eps1*d");
    Graph h = induced(g, int_list(c.witness, "subgraph")).graph;
    if (h.n() != need_int(c.claims, "h_n"))
      return fail(two("h_n", c.claims["h_n"].dump(), std::to_string(h.n())));
    if (h.m() != need_long(c.claims, "h_m"))
      return fail(two("h_m", c.claims["h_m"].dump(), std::to_string(h.m())));
    if (Rat(h.n()) > 3 * K * d) return fail("pocket exceeds 3Kd vertices");
    if (Rat(2 * h.m()) < eps1 * eps2 * d * d)
      return fail("pocket below the edge floor");
    return pass("pocket v=" + std::to_string(h.n()) +
                " e=" + std::to_string(h.m()) +
                " density=" + rat_str(density(h)));
  }
  if (c.branch != "unmated") return fail("unknown unmated branch");
  long worst = 0;
  std::vector<int> codeg(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (Rat(g.degree(v)) > K * d) continue;
    std::fill(codeg.begin(), codeg.end(), 0);
    for (int w : g.neighbors(v))
      for (int u : g.neighbors(w))
        if (u != v) ++codeg[u];
    long cnt = 0;
    for (int u = 0; u < g.n(); ++u)
      if (codeg[u] > 0 && Rat(codeg[u]) >= eps2 * d) ++cnt;
    worst = std::max(worst, cnt);
    if (Rat(cnt) >= eps1 * d)
      return fail("small vertex " + std::to_string(v) + " has " +
                  std::to_string(cnt) + " mates, at or above eps1*d = " +
                  rat_str(eps1 * d));
  }
  return pass("max small-vertex mate count " + std::to_string(worst) +
              " below " + rat_str(eps1 * d));
}

CheckResult verify_claw(const Certificate& c) {
  const Graph& g = c.graph;
  long K0 = need_long(c.params, "K0");
  long l0 = need_long(c.params, "l0");
  Rat eps10 = need_rat(c.params, "eps10");
  Rat eps20 = need_rat(c.params, "eps20");
  Rat d0 = need_rat(c.params, "d0");
  if (c.branch == "dense-tight" || c.branch == "dense-wide") {
    Graph h = induced(g, int_list(c.witness, "subgraph")).graph;
    if (h.n() != need_int(c.claims, "h_n"))
      return fail(two("h_n", c.claims["h_n"].dump(), std::to_string(h.n())));
    if (h.m() != need_long(c.claims, "h_m"))
      return fail(two("h_m", c.claims["h_m"].dump(), std::to_string(h.m())));
    Rat size_cap = c.branch == "dense-tight" ? 4 * K0 * d0 : 4 * l0 * K0 * d0;
    Rat floor2 = c.branch == "dense-tight" ? eps10 * eps20 * d0 * d0
                                           : eps10 * eps10 * d0 * d0;
    if (Rat(h.n()) > size_cap) return fail("pocket exceeds its size cap");
    if (Rat(2 * h.m()) < floor2) return fail("pocket below its edge floor");
    return pass("pocket v=" + std::to_string(h.n()) +
                " e=" + std::to_string(h.m()));
  }
  if (c.branch != "minor") return fail("unknown claw branch");
  MinorModel m = model_from_json(need(c.witness, "model"));
  auto check = verify_model(g, m);
  if (!check.ok) return fail("model: " + check.reason);
  if (m.width > l0 + 1) return fail("model wider than l0+1");
  Graph q = contract_model(g, m);
  Rat dq = density(q);
  Rat claimed = need_rat(c.claims, "quotient_density");
  if (dq != claimed)
    return fail(two("quotient density", rat_str(claimed), rat_str(dq)));
  Rat target = rat(l0 * l0, l0 + 1) *
               (1 - 2 * eps10 - 2 * l0 * eps20 - rat(l0, K0)) * d0;
  if (dq < target)
    return fail(two("quotient density vs floor", rat_str(target),
                    rat_str(dq)));
  return pass("minor width<=" + std::to_string(l0 + 1) +
              " density=" + rat_str(dq));
}

CheckResult verify_dichotomy(const Certificate& c) {
  const Graph& g = c.graph;
  long k = need_long(c.params, "k");
  Rat K = need_rat(c.params, "K");
  Rat eps1 = need_rat(c.params, "eps1");
  Rat eps2 = need_rat(c.params, "eps2");
  Rat d_ref = need_rat(c.claims, "d_ref");
  long ell = need_long(c.claims, "ell");
  if (k < 6 || ell != (k + 5) / 6) return fail("bad k or ell");
  if (d_ref < density(g)) return fail("d_ref below the input density");
  if (c.branch == "dense") {
    std::vector<int> set = int_list(c.witness, "subgraph");
    if (set.empty()) return fail("empty dense pocket");
    Graph h = induced(g, set).graph;
    if (Rat(h.n()) > 3 * K * d_ref)
      return fail("dense pocket exceeds 3Kd vertices");
    if (density(h) * 6 * K * k < eps1 * eps2 * d_ref)
      return fail("dense pocket too sparse");
    return pass("pocket v=" + std::to_string(h.n()) +
                " density=" + rat_str(density(h)));
  }
  if (c.branch == "bipartite") {
    std::vector<int> xs = int_list(c.witness, "x");
    std::vector<int> ys = int_list(c.witness, "y");
    std::vector<char> in_y(g.n(), 0);
    for (int u : ys) {
      if (u < 0 || u >= g.n()) return fail("Y vertex out of range");
      in_y[u] = 1;
    }
    long need_deg = ceil_rat((1 - 6 * eps1) * d_ref);
    for (int x : xs) {
      if (x < 0 || x >= g.n()) return fail("X vertex out of range");
      if (in_y[x]) return fail("sides overlap");
      long cnt = 0;
      for (int w : g.neighbors(x)) cnt += in_y[w];
      if (cnt < need_deg) return fail("X vertex with too few Y neighbours");
    }
    if (static_cast<long>(xs.size()) < ell * static_cast<long>(ys.size()))
      return fail("|X| below ell*|Y|");
    if (c.claims.contains("level_n")) {
      Rat lv(need_long(c.claims, "level_n"));
      if (Rat(static_cast<long>(ys.size())) * K * k > (2 * k + K) * lv)
        return fail("|Y| above (2/K + 1/k) of its level");
    }
    return pass("|X|=" + std::to_string(xs.size()) +
                " |Y|=" + std::to_string(ys.size()) +
                " degree floor " + std::to_string(need_deg));
  }
  if (c.branch != "minor") return fail("unknown dichotomy branch");
  MinorModel m = model_from_json(need(c.witness, "model"));
  auto check = verify_model(g, m);
  if (!check.ok) return fail("model: " + check.reason);
  if (m.width > k) return fail("model wider than k");
  Graph q = contract_model(g, m);
  Rat dq = density(q);
  Rat claimed = need_rat(c.claims, "quotient_density");
  if (dq != claimed)
    return fail(two("quotient density", rat_str(claimed), rat_str(dq)));
  if (k > 30 && dq < (k - 30) * d_ref)
    return fail("contracted density below (k-30)*d_ref");
  if (c.claims.contains("level_n") && c.claims.contains("leftover")) {
    long lv = need_long(c.claims, "level_n");
    Rat a_frac = rat(need_long(c.claims, "leftover"), lv);
    if (Rat(static_cast<long>(m.h)) >=
        Rat(lv) / k * (rat(2 * k + 1, 2 * k) - a_frac))
      return fail("quotient larger than the size bound");
  }
  return pass("minor h=" + std::to_string(m.h) + " density=" + rat_str(dq));
}

CheckResult verify_increment(const Certificate& c) {
  const Graph& g = c.graph;
  double gc = need_num(c.params, "c");
  Rat target = need_rat(c.params, "target");
  Rat d0 = density(g);
  Rat claimed_d0 = need_rat(c.claims, "d0");
  if (d0 != claimed_d0)
    return fail(two("input density", rat_str(claimed_d0), rat_str(d0)));
  if (c.branch == "minor") {
    MinorModel m = model_from_json(need(c.witness, "model"));
    auto check = verify_model(g, m);
    if (!check.ok) return fail("model: " + check.reason);
    Graph q = contract_model(g, m);
    Rat dq = density(q);
    Rat claimed = need_rat(c.claims, "final_density");
    if (dq != claimed)
      return fail(two("final density", rat_str(claimed), rat_str(dq)));
    if (dq < target)
      return fail(two("final density vs target", rat_str(target),
                      rat_str(dq)));
    return pass("minor width<=" + std::to_string(m.width) +
                " density=" + rat_str(dq));
  }
  if (c.branch != "pocket") return fail("unknown increment branch");
  if (target <= d0) return fail("pocket despite target at or below d0");
  Graph h = induced(g, int_list(c.witness, "subgraph")).graph;
  if (h.n() != need_int(c.claims, "h_n"))
    return fail(two("h_n", c.claims["h_n"].dump(), std::to_string(h.n())));
  Rat dh = density(h);
  Rat claimed_dh = need_rat(c.claims, "h_density");
  if (dh != claimed_dh)
    return fail(two("pocket density", rat_str(claimed_dh), rat_str(dh)));
  double s0 = Rat(target / d0).get_d();
  double g0 = gc * std::pow(1.0 + std::log(s0), 5.0);
  double d2_over = Rat(target * target / d0).get_d();
  if (h.n() > g0 * d2_over * (1 + kRelTol))
    return fail("pocket larger than g(s)*D^2/d");
  if (dh.get_d() * g0 < d0.get_d() * (1 - kRelTol))
    return fail("pocket sparser than d/g(s)");
  return pass("pocket v=" + std::to_string(h.n()) +
              " density=" + rat_str(dh));
}

CheckResult verify_oracle(const Certificate& c) {
  const Graph& g = c.graph;
  int t = need_int(c.params, "t");
  if (t < 1) return fail("t below 1");
  if (c.branch == "model") {
    MinorModel m = model_from_json(need(c.witness, "model"));
    if (m.h != t) return fail("model order differs from t");
    std::vector<std::pair<int, int>> want;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) want.emplace_back(i, j);
    auto pat = m.pattern_edges;
    for (auto& [a, b] : pat)
      if (a > b) std::swap(a, b);
    std::sort(pat.begin(), pat.end());
    if (pat != want) return fail("pattern edges are not the complete graph");
    auto check = verify_model(g, m);
    if (!check.ok) return fail("model: " + check.reason);
    return pass("clique model of order " + std::to_string(t));
  }
  if (c.branch != "none") return fail("unknown oracle branch");
  OracleLimits lim;
  if (g.n() > lim.max_vertices)
    return fail("absence recheck needs at most " +
                std::to_string(lim.max_vertices) + " vertices");
  if (clique_minor_oracle(g, t, lim))
    return fail("absence claim contradicted: a model exists");
  return pass("no clique model of order " + std::to_string(t));
}

}  // namespace

CheckResult verify_certificate(const Certificate& c) {
  try {
    if (c.stage == "unmated") return verify_unmated(c);
    if (c.stage == "claw") return verify_claw(c);
    if (c.stage == "dichotomy") return verify_dichotomy(c);
    if (c.stage == "increment") return verify_increment(c);
    if (c.stage == "oracle") return verify_oracle(c);
    return fail("unknown stage: " + c.stage);
  } catch (const ParseError& e) {
    throw;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace mdl
