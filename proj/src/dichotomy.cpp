#include "mdl/dichotomy.hpp"

#include <algorithm>
#include <numeric>

#include "mdl/errors.hpp"
#include "mdl/log.hpp"
#include "mdl/star_forest.hpp"

namespace mdl {

void DichotomyParams::validate() const {
  int floor_k = strict ? 100 : 6;
  if (k < floor_k)
    throw DomainError("dichotomy needs k >= " + std::to_string(floor_k));
  if (K < k) throw DomainError("dichotomy needs K >= k");
  if (K < 4L * k * k) throw DomainError("dichotomy needs K >= 4k^2");
  if (eps1 <= 0 || eps1 > rat(1, k))
    throw DomainError("dichotomy needs eps1 in (0, 1/k]");
  if (eps2 <= 0 || eps2 > rat(1, k))
    throw DomainError("dichotomy needs eps2 in (0, 1/k]");
}

namespace {

struct Level {
  Graph g;
  std::vector<int> verts;  // level label -> input label
};

void require(bool ok, const char* what) {
  if (!ok) throw DiagnosticError(std::string("dichotomy invariant: ") + what);
}

// Peel until the minimum degree exceeds the current density, re-running as
// the density rises.  Keeps density non-decreasing throughout.
void peel_fixpoint(Level& lvl) {
  while (true) {
    if (Rat(lvl.g.min_degree()) > density(lvl.g)) return;
    PeelResult pr = peel_to_min_degree(lvl.g);
    std::vector<int> verts(pr.vertices.size());
    for (size_t i = 0; i < pr.vertices.size(); ++i)
      verts[i] = lvl.verts[pr.vertices[i]];
    lvl.g = std::move(pr.graph);
    lvl.verts = std::move(verts);
  }
}

std::vector<int> to_input(const Level& lvl, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(lvl.verts[v]);
  std::sort(out.begin(), out.end());
  return out;
}

DichotomyResult emit_dense(const Level& lvl, const DichotomyParams& p,
                           const Rat& d, std::vector<int> local,
                           std::vector<LevelTrace> trace) {
  Graph h = induced(lvl.g, local).graph;
  require(Rat(h.n()) <= 3 * p.K * d, "dense pocket within 3Kd vertices");
  require(density(h) * 6 * p.K * p.k >= p.eps1 * p.eps2 * d,
          "dense pocket density");
  DichotomyResult r;
  r.branch = DichotomyBranch::Dense;
  r.d_ref = d;
  r.ell = p.ell();
  r.subgraph = to_input(lvl, local);
  r.trace = std::move(trace);
  return r;
}

}  // namespace

DichotomyResult dense_bipartite_minor(const Graph& g,
                                      const DichotomyParams& p) {
  p.validate();
  if (g.n() < 1) throw DomainError("dichotomy needs a nonempty graph");
  Rat min_eps = std::min(p.eps1, p.eps2);
  if (density(g) < p.k / min_eps)
    throw DomainError("dichotomy needs density at least k/min(eps1,eps2)");

  Level lvl;
  lvl.g = g;
  lvl.verts.resize(g.n());
  std::iota(lvl.verts.begin(), lvl.verts.end(), 0);

  std::vector<LevelTrace> trace;
  for (int depth = 0;; ++depth) {
    if (depth > g.n())
      throw DiagnosticError("dichotomy recursion deeper than vertex count");
    peel_fixpoint(lvl);
    const Graph& cur = lvl.g;
    Rat d = density(cur);
    long v = cur.n();

    LevelTrace t;
    t.n = cur.n();
    t.m = cur.m();
    t.d = d;

    MateParams mp;
    mp.K = p.K;
    mp.d = d;
    mp.eps1 = p.eps1;
    mp.eps2 = p.eps2 / p.k;
    UnmatedCertificate um = unmated_dichotomy(cur, mp);
    if (um.verdict == UnmatedCertificate::Verdict::DenseSubgraph) {
      t.action = "dense";
      trace.push_back(t);
      return emit_dense(lvl, p, d, um.witness->subgraph, std::move(trace));
    }

    ForestParams fp;
    fp.K = p.K;
    fp.k = p.k;
    fp.eps1 = p.eps1;
    fp.eps2 = p.eps2;
    fp.d = d;
    ForestBuild fb = build_clean_forest(cur, fp);
    if (fb.dense_escape) {
      t.action = "escape";
      trace.push_back(t);
      return emit_dense(lvl, p, d, fb.escape_subgraph, std::move(trace));
    }

    t.big = static_cast<int>(fb.b.size());
    t.stars = static_cast<int>(fb.forest.stars.size());
    t.heavy = static_cast<int>(fb.c.size());
    t.leftover = static_cast<int>(fb.a_prime.size());

    // A1: leftover vertices that mostly see B and C.
    std::vector<char> in_bc(cur.n(), 0);
    for (int u : fb.b) in_bc[u] = 1;
    for (int u : fb.c) in_bc[u] = 1;
    long t_bc = ceil_rat((1 - 6 * p.eps1) * d);
    std::vector<int> a1, a2;
    for (int x : fb.a_prime) {
      long cnt = 0;
      for (int w : cur.neighbors(x)) cnt += in_bc[w];
      (cnt >= t_bc ? a1 : a2).push_back(x);
    }
    t.a1 = static_cast<int>(a1.size());

    long bc = static_cast<long>(fb.b.size() + fb.c.size());
    require(Rat(bc) * p.k <= 2 * Rat(v), "B and C within 2v/k");
    require(Rat(bc) * p.K * p.k <= (2 * p.k + p.K) * Rat(v),
            "B and C within (2/K + 1/k)v");

    if (3L * p.k * static_cast<long>(a1.size()) >= (p.k + 6L) * v) {
      require(static_cast<long>(a1.size()) >= static_cast<long>(p.ell()) * bc,
              "bipartite ratio ell");
      t.action = "bipartite";
      trace.push_back(t);
      DichotomyResult r;
      r.branch = DichotomyBranch::Bipartite;
      r.d_ref = d;
      r.ell = p.ell();
      r.x_side = to_input(lvl, a1);
      std::vector<int> y = fb.b;
      y.insert(y.end(), fb.c.begin(), fb.c.end());
      r.y_side = to_input(lvl, y);
      r.trace = std::move(trace);
      return r;
    }

    require(!fb.forest.stars.empty(), "nonempty forest off the bipartite path");
    require(7L * static_cast<long>(a2.size()) <
                3L * (v - static_cast<long>(a1.size())),
            "A2 within 3/7 of the rest");
    require(21L * p.k * static_cast<long>(fb.a_prime.size()) <
                (13L * p.k + 24L) * v,
            "A' within 13/21 + 8/(7k)");

    // Descend when the deleted part is at least as dense as this level.
    std::vector<int> sub = fb.a_prime;
    sub.insert(sub.end(), fb.b.begin(), fb.b.end());
    sub.insert(sub.end(), fb.c.begin(), fb.c.end());
    std::sort(sub.begin(), sub.end());
    if (!sub.empty()) {
      InducedResult ir = induced(cur, sub);
      if (density(ir.graph) >= d) {
        require(static_cast<long>(sub.size()) < v, "descent strictly shrinks");
        std::vector<int> verts(ir.vertices.size());
        for (size_t i = 0; i < ir.vertices.size(); ++i)
          verts[i] = lvl.verts[ir.vertices[i]];
        lvl.g = std::move(ir.graph);
        lvl.verts = std::move(verts);
        t.action = "recurse";
        trace.push_back(t);
        MDL_DEBUG("dichotomy descends to %d vertices", lvl.g.n());
        continue;
      }
    }

    if (p.k >= 24)
      require(3L * static_cast<long>(fb.a_prime.size()) <= 2L * v,
              "A' within two thirds");

    // Contract the stars, drop A'; B survives as singleton sets.
    std::vector<std::vector<int>> sets;
    for (const Star& s : fb.forest.stars) {
      std::vector<int> set = s.leaves;
      set.push_back(s.center);
      std::sort(set.begin(), set.end());
      sets.push_back(std::move(set));
    }
    for (int u : fb.b) sets.push_back({u});
    std::vector<int> owner(cur.n(), -1);
    for (size_t i = 0; i < sets.size(); ++i)
      for (int u : sets[i]) owner[u] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (auto [x, y] : cur.edges()) {
      int a = owner[x], b = owner[y];
      if (a < 0 || b < 0 || a == b) continue;
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    long vq = static_cast<long>(sets.size());
    long eq = static_cast<long>(pairs.size());
    Rat a_frac = rat(static_cast<long>(fb.a_prime.size()), v);
    require(Rat(cur.m() - eq) <=
                (rat(2, p.k) + 3 * p.eps1 + 4 * p.eps2 + a_frac) * d * v,
            "edge loss accounting at shrink");
    require(Rat(vq) < Rat(v) / p.k * (rat(2 * p.k + 1, 2 * p.k) - a_frac),
            "quotient size at shrink");
    if (p.k > 30)
      require(rat(eq, vq) >= (p.k - 30) * d, "density gain at shrink");

    MinorModel m;
    m.h = static_cast<int>(vq);
    m.width = p.k;
    m.pattern_edges = std::move(pairs);
    for (auto& set : sets) m.branch_sets.push_back(to_input(lvl, set));
    auto check = verify_model(g, m);
    require(check.ok, "shrink model verifies");

    t.action = "shrink";
    trace.push_back(t);
    DichotomyResult r;
    r.branch = DichotomyBranch::Shrunken;
    r.d_ref = d;
    r.ell = p.ell();
    r.model = std::move(m);
    r.trace = std::move(trace);
    return r;
  }
}

CheckResult check_dichotomy_result(const Graph& g, const DichotomyParams& p,
                                   const DichotomyResult& r) {
  p.validate();
  CheckResult out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.reason = why;
    return out;
  };
  if (r.d_ref < density(g)) return fail("d_ref below the input density");
  if (r.ell != p.ell()) return fail("ell mismatch");
  switch (r.branch) {
    case DichotomyBranch::Dense: {
      if (r.subgraph.empty()) return fail("empty dense pocket");
      Graph h = induced(g, r.subgraph).graph;
      if (Rat(h.n()) > 3 * p.K * r.d_ref)
        return fail("dense pocket exceeds 3Kd vertices");
      if (density(h) * 6 * p.K * p.k < p.eps1 * p.eps2 * r.d_ref)
        return fail("dense pocket too sparse");
      return out;
    }
    case DichotomyBranch::Bipartite: {
      if (r.y_side.empty() && !r.x_side.empty() &&
          (1 - 6 * p.eps1) * r.d_ref > 0)
        return fail("empty Y side");
      std::vector<char> in_y(g.n(), 0);
      for (int u : r.y_side) {
        if (u < 0 || u >= g.n()) return fail("Y vertex out of range");
        in_y[u] = 1;
      }
      long need = ceil_rat((1 - 6 * p.eps1) * r.d_ref);
      for (int x : r.x_side) {
        if (x < 0 || x >= g.n()) return fail("X vertex out of range");
        if (in_y[x]) return fail("sides overlap");
        long cnt = 0;
        for (int w : g.neighbors(x)) cnt += in_y[w];
        if (cnt < need) return fail("X vertex with too few Y neighbours");
      }
      if (r.x_side.size() <
          static_cast<size_t>(r.ell) * r.y_side.size())
        return fail("|X| below ell * |Y|");
      if (!r.trace.empty()) {
        Rat lv(r.trace.back().n);
        if (Rat(static_cast<long>(r.y_side.size())) * p.K * p.k >
            (2 * p.k + p.K) * lv)
          return fail("|Y| above (2/K + 1/k) of its level");
      }
      return out;
    }
    case DichotomyBranch::Shrunken: {
      auto check = verify_model(g, r.model);
      if (!check.ok) return fail("model: " + check.reason);
      if (r.model.width > p.k) return fail("model wider than k");
      Graph q = contract_model(g, r.model);
      if (p.k > 30 && density(q) < (p.k - 30) * r.d_ref)
        return fail("contracted density below (k-30)*d");
      if (!r.trace.empty()) {
        const LevelTrace& lt = r.trace.back();
        Rat a_frac = rat(lt.leftover, lt.n);
        if (Rat(static_cast<long>(r.model.h)) >=
            Rat(lt.n) / p.k * (rat(2 * p.k + 1, 2 * p.k) - a_frac))
          return fail("quotient larger than the size bound");
      }
      return out;
    }
  }
  return fail("unknown branch");
}

}  // namespace mdl
