#include "mdl/increment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mdl/bipartite_split.hpp"
#include "mdl/dichotomy.hpp"
#include "mdl/errors.hpp"
#include "mdl/log.hpp"

namespace mdl {

double g_value(double s, double c) {
  if (!(s >= 1)) throw DomainError("g needs s >= 1");
  if (!(c > 0)) throw DomainError("g needs a positive scale");
  return c * std::pow(1.0 + std::log(s), 5.0);
}

double chromatic_bound(long t, double c, double hidden_constant) {
  if (t < 3) throw DomainError("chromatic bound needs t >= 3");
  if (!(hidden_constant > 0))
    throw DomainError("chromatic bound needs a positive hidden constant");
  double lt = std::log(static_cast<double>(t));
  double loglog = std::log(lt);
  return hidden_constant * static_cast<double>(t) *
         (g_value(3.2 * std::sqrt(lt), c) + loglog * loglog);
}

Coloring degeneracy_coloring(const Graph& g) {
  if (g.n() < 1) throw DomainError("coloring needs a nonempty graph");
  int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> order_set;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    order_set.insert({deg[v], v});
  }
  std::vector<int> order;
  std::vector<char> removed(n, 0);
  int degeneracy = 0;
  while (!order_set.empty()) {
    auto [d, v] = *order_set.begin();
    order_set.erase(order_set.begin());
    removed[v] = 1;
    degeneracy = std::max(degeneracy, d);
    order.push_back(v);
    for (int w : g.neighbors(v))
      if (!removed[w]) {
        order_set.erase({deg[w], w});
        --deg[w];
        order_set.insert({deg[w], w});
      }
  }
  Coloring col;
  col.color.assign(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    std::vector<char> used(degeneracy + 2, 0);
    for (int w : g.neighbors(v))
      if (col.color[w] >= 0 && col.color[w] <= degeneracy + 1)
        used[col.color[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    col.color[v] = c;
    col.colors = std::max(col.colors, c + 1);
  }
  col.degeneracy = degeneracy;
  return col;
}

namespace {

void check_step(const Graph& g, const StepOutcome& s, int k, const Rat& d) {
  Rat k3 = Rat(k) * k * k;
  Rat k5 = k3 * k * k;
  if (s.is_subgraph) {
    Graph h = induced(g, s.subgraph).graph;
    if (Rat(h.n()) > 12 * k3 * d)
      throw LemmaViolationError("refinement pocket exceeds 12k^3*d vertices");
    if (density(h) * 24 * k5 < d)
      throw LemmaViolationError("refinement pocket sparser than d/(24k^5)");
  } else {
    auto check = verify_model(g, s.model);
    if (!check.ok)
      throw DiagnosticError("refinement minor fails verification: " +
                            check.reason);
    if (s.model.width > s.m)
      throw DiagnosticError("refinement minor wider than m");
    if (6 * s.m < k || s.m > k)
      throw DiagnosticError("refinement width outside [k/6, k]");
    if (s.m > 30) {
      Graph q = contract_model(g, s.model);
      if (density(q) < (s.m - 30) * d)
        throw LemmaViolationError("refinement minor below (m-30)*d density");
    }
  }
}

}  // namespace

StepOutcome dense_or_bounded_from_pair(const Graph& g,
                                       const std::vector<int>& x,
                                       const std::vector<int>& y, int k,
                                       const Rat& d_used) {
  if (k < 7)
    throw LemmaViolationError(
        "pair continuation needs k >= 7 for a two-sided ratio");
  int l0 = (k + 5) / 6;
  ClawParams cp;
  cp.l0 = l0;
  cp.K0 = l0 * (l0 + 1);
  cp.eps10 = rat(1, l0);
  cp.eps20 = rat(1, static_cast<long>(l0) * l0);
  cp.d0 = (1 - rat(6, k)) * d_used;

  BipartiteView view = bipartite_subgraph(g, x, y);
  std::vector<int> a_side(view.a_count), b_side;
  for (int i = 0; i < view.a_count; ++i) a_side[i] = i;
  for (int i = view.a_count; i < view.graph.n(); ++i) b_side.push_back(i);
  ClawResult cr = claw_dichotomy(view.graph, a_side, b_side, cp);

  StepOutcome out;
  if (cr.branch == ClawBranch::Minor) {
    out.m = l0 + 1;
    out.model = std::move(cr.model);
    for (auto& set : out.model.branch_sets)
      for (int& v : set) v = view.vertices[v];
    for (auto& set : out.model.branch_sets) std::sort(set.begin(), set.end());
  } else {
    out.is_subgraph = true;
    for (int v : cr.subgraph) out.subgraph.push_back(view.vertices[v]);
    std::sort(out.subgraph.begin(), out.subgraph.end());
  }
  return out;
}

StepOutcome dense_or_bounded_minor(const Graph& g, int k, bool strict) {
  int floor_k = strict ? 100 : 6;
  if (k < floor_k)
    throw DomainError("refinement needs k >= " + std::to_string(floor_k));
  Rat d = density(g);
  if (d < static_cast<long>(k) * k)
    throw DomainError("refinement needs density at least k^2");

  DichotomyParams dp;
  dp.k = k;
  dp.K = 4L * k * k;
  dp.eps1 = rat(1, k);
  dp.eps2 = rat(1, k);
  dp.strict = strict;
  DichotomyResult r = dense_bipartite_minor(g, dp);

  StepOutcome out;
  switch (r.branch) {
    case DichotomyBranch::Dense:
      out.is_subgraph = true;
      out.subgraph = r.subgraph;
      break;
    case DichotomyBranch::Shrunken:
      out.m = k;
      out.model = std::move(r.model);
      break;
    case DichotomyBranch::Bipartite:
      out = dense_or_bounded_from_pair(g, r.x_side, r.y_side, k, r.d_ref);
      break;
  }
  check_step(g, out, k, d);
  return out;
}

void IncrementParams::validate() const {
  if (target <= 0) throw DomainError("increment needs a positive target");
  if (!(c > 0)) throw DomainError("increment needs a positive g-scale");
  if (strict && c != std::ldexp(1.0, 50))
    throw DomainError("strict increment pins the g-scale to 2^50");
  if (!strict && min_k < 6) throw DomainError("increment needs min_k >= 6");
}

namespace {

constexpr double kRelTol = 1e-9;
constexpr int kMaxIterations = 1000;

struct LevelRec {
  Graph host;
  std::vector<std::vector<int>> sets;  // quotient vertex -> host vertices
  int m = 0;
};

// Pull a quotient-level vertex set back to the bottom host, asserting the
// two composition inequalities at every level on the way down.
std::vector<int> pull_back(const std::vector<LevelRec>& levels,
                           const Graph& top, std::vector<int> set) {
  long e_above = induced(top, set).graph.m();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<int> wide;
    for (int v : set)
      wide.insert(wide.end(), it->sets[v].begin(), it->sets[v].end());
    std::sort(wide.begin(), wide.end());
    if (wide.size() > set.size() * static_cast<size_t>(it->m))
      throw DiagnosticError("pullback grew beyond m per level");
    long e_here = induced(it->host, wide).graph.m();
    if (e_here < e_above)
      throw DiagnosticError("pullback lost edges across a level");
    e_above = e_here;
    set = std::move(wide);
  }
  return set;
}

}  // namespace

IncrementOutcome density_increment(const Graph& g, const IncrementParams& p) {
  p.validate();
  if (g.n() < 1) throw DomainError("increment needs a nonempty graph");
  Rat d0 = density(g);
  if (d0 < 1) throw DomainError("increment needs density at least 1");
  if (d0.get_d() < p.c)
    throw DomainError("increment needs density at least the g-scale");

  double s0 = Rat(p.target / d0).get_d();
  double g0 = s0 > 1 ? g_value(s0, p.c) : p.c;

  IncrementOutcome out;
  MinorModel chain = MinorModel::identity(g);
  Graph cur = g;
  std::vector<LevelRec> levels;

  auto finish_dense = [&](std::vector<int> set, IterationLog log) {
    log.branch = log.branch.empty() ? "dense" : log.branch;
    out.iterations.push_back(std::move(log));
    out.tag = IncrementOutcome::Tag::DenseSubgraph;
    out.subgraph = pull_back(levels, cur, std::move(set));
    Graph h = induced(g, out.subgraph).graph;
    double d2_over = Rat(p.target * p.target / d0).get_d();
    if (h.n() > g0 * d2_over * (1 + kRelTol))
      throw LemmaViolationError("pocket larger than g(s)*D^2/d");
    if (density(h).get_d() * g0 < d0.get_d() * (1 - kRelTol))
      throw LemmaViolationError("pocket sparser than d/g(s)");
    return out;
  };

  for (int iter = 0;; ++iter) {
    if (iter > kMaxIterations)
      throw DiagnosticError("increment ran past the iteration cap");
    Rat d = density(cur);
    IterationLog log;
    log.d = d;
    log.s = Rat(p.target / d).get_d();

    if (p.target <= d) {
      log.branch = "identity";
      out.iterations.push_back(std::move(log));
      out.tag = IncrementOutcome::Tag::MinorFound;
      chain.pattern_edges = cur.edges();
      auto check = verify_model(g, chain);
      if (!check.ok)
        throw DiagnosticError("composed chain fails verification: " +
                              check.reason);
      Graph q = contract_model(g, chain);
      if (density(q) < p.target)
        throw DiagnosticError("composed chain lost density");
      out.model = std::move(chain);
      out.final_density = density(q);
      return out;
    }

    double s = log.s;
    double gs = g_value(s, p.c);
    if (gs >= 2 * d.get_d()) {
      log.branch = "edge";
      auto [u, v] = cur.edges().front();
      return finish_dense({std::min(u, v), std::max(u, v)}, std::move(log));
    }

    int k = static_cast<int>(std::floor(std::pow(gs / 32.0, 0.2)));
    if (!p.strict) k = std::max(k, p.min_k);
    if (p.strict && k < 100)
      throw DiagnosticError("strict schedule fell below 100");
    log.k = k;

    StepOutcome step = dense_or_bounded_minor(cur, k, p.strict);
    if (step.is_subgraph) return finish_dense(step.subgraph, std::move(log));

    log.m = step.m;
    log.branch = "minor";
    Graph q = contract_model(cur, step.model);
    Rat dq = density(q);
    if (dq <= d)
      throw DiagnosticError("minor step failed to raise the density");
    double s_next = Rat(p.target / dq).get_d();
    if (s_next >= s) throw DiagnosticError("s failed to fall");
    if (s_next > 1 && step.m >= 30 * (1 + std::log(s))) {
      double ratio = g_value(s_next, p.c) / gs;
      if (ratio > 1 - 2 / (1 + std::log(s)) + kRelTol)
        throw DiagnosticError("g-ratio step exceeded its budget");
    }

    chain = compose_models(step.model, chain.branch_sets);
    chain.pattern_edges = q.edges();
    auto check = verify_model(g, chain);
    if (!check.ok)
      throw DiagnosticError("composed chain fails verification: " +
                            check.reason);
    levels.push_back({std::move(cur), step.model.branch_sets, step.m});
    cur = std::move(q);
    out.iterations.push_back(std::move(log));
    MDL_DEBUG("increment iteration %d: density %s", iter,
              rat_str(density(cur)).c_str());
  }
}

}  // namespace mdl
