#include "mdl/minor_model.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "mdl/errors.hpp"

namespace mdl {

MinorModel MinorModel::identity(const Graph& g) {
  MinorModel m;
  m.h = g.n();
  m.branch_sets.resize(g.n());
  for (int v = 0; v < g.n(); ++v) m.branch_sets[v] = {v};
  m.pattern_edges = g.edges();
  m.width = g.n() > 0 ? 1 : 0;
  return m;
}

namespace {

bool connected_in_host(const Graph& host, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<char> in(host.n(), 0), seen(host.n(), 0);
  for (int v : set) in[v] = 1;
  std::queue<int> q;
  q.push(set[0]);
  seen[set[0]] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : host.neighbors(u))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == set.size();
}

}  // namespace

ModelCheck verify_model(const Graph& host, const MinorModel& m) {
  auto fail = [](std::string r) { return ModelCheck{false, std::move(r)}; };
  if (m.h < 1) return fail("model has no branch sets");
  if (static_cast<int>(m.branch_sets.size()) != m.h)
    return fail("h does not match branch set count");

  std::vector<int> owner(host.n(), -1);
  int width = 0;
  for (int i = 0; i < m.h; ++i) {
    const auto& set = m.branch_sets[i];
    if (set.empty()) return fail("branch set " + std::to_string(i) + " empty");
    for (int v : set) {
      if (v < 0 || v >= host.n())
        return fail("branch set " + std::to_string(i) + " out of range");
      if (owner[v] != -1)
        return fail("vertex " + std::to_string(v) + " in two branch sets");
      owner[v] = i;
    }
    width = std::max(width, static_cast<int>(set.size()));
    if (!connected_in_host(host, set))
      return fail("branch set " + std::to_string(i) + " not connected");
  }
  if (m.width != width)
    return fail("recorded width " + std::to_string(m.width) +
                " != actual " + std::to_string(width));

  for (auto [i, j] : m.pattern_edges) {
    if (i < 0 || j < 0 || i >= m.h || j >= m.h || i == j)
      return fail("pattern edge out of range");
    bool found = false;
    for (int v : m.branch_sets[i]) {
      for (int w : host.neighbors(v))
        if (owner[w] == j) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found)
      return fail("pattern edge " + std::to_string(i) + "-" +
                  std::to_string(j) + " has no host edge");
  }
  return {};
}

Graph contract_model(const Graph& host, const MinorModel& m) {
  ModelCheck chk = verify_model(host, m);
  if (!chk.ok) throw DomainError("contract_model on invalid model: " + chk.reason);

  std::vector<int> owner(host.n(), -1);
  for (int i = 0; i < m.h; ++i)
    for (int v : m.branch_sets[i]) owner[v] = i;

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < host.n(); ++u) {
    if (owner[u] < 0) continue;
    for (int v : host.neighbors(u)) {
      if (u >= v || owner[v] < 0) continue;
      if (owner[u] == owner[v]) continue;
      edges.emplace_back(std::min(owner[u], owner[v]),
                         std::max(owner[u], owner[v]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  for (auto [i, j] : m.pattern_edges) {
    auto e = std::make_pair(std::min(i, j), std::max(i, j));
    if (!std::binary_search(edges.begin(), edges.end(), e))
      throw DiagnosticError("pattern edge missing from contracted graph");
  }
  return Graph(m.h, edges);
}

MinorModel compose_models(const MinorModel& outer,
                          const std::vector<std::vector<int>>& origin) {
  MinorModel out;
  out.h = outer.h;
  out.pattern_edges = outer.pattern_edges;
  out.branch_sets.resize(outer.h);
  for (int i = 0; i < outer.h; ++i) {
    std::vector<int>& set = out.branch_sets[i];
    for (int q : outer.branch_sets[i]) {
      if (q < 0 || q >= static_cast<int>(origin.size()))
        throw DomainError("compose_models: branch vertex outside origin map");
      set.insert(set.end(), origin[q].begin(), origin[q].end());
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw DomainError("compose_models: origin classes overlap");
    out.width = std::max(out.width, static_cast<int>(set.size()));
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

struct SearchContext {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<Mask> adj;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  void charge() {
    if (++nodes > budget)
      throw ResourceLimitError("model search exceeded node budget (" +
                               std::to_string(budget) + " nodes)");
  }

  Mask nbr(Mask set) const {
    Mask out = 0;
    for (Mask rest = set; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= adj[v];
    }
    return out & ~set;
  }

  bool mask_connected(Mask set) const {
    if (!set) return false;
    Mask seen = set & (~set + 1);  // lowest bit
    while (true) {
      Mask next = seen;
      for (Mask rest = seen; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= adj[v] & set;
      }
      if (next == seen) break;
      seen = next;
    }
    return seen == set;
  }

  // True when some component of `set` can never be linked up again: no
  // member of that component has a neighbor in the rest of the set or among
  // the future (unprocessed) vertices.
  bool stranded(Mask set, Mask future) const {
    if (!set) return false;
    Mask rest = set;
    while (rest) {
      Mask comp = rest & (~rest + 1);
      while (true) {
        Mask next = comp;
        for (Mask r = comp; r;) {
          int v = std::countr_zero(r);
          r &= r - 1;
          next |= adj[v] & rest;
        }
        if (next == comp) break;
        comp = next;
      }
      rest &= ~comp;
      if (comp != set && (nbr(comp) & (future | (set & ~comp))) == 0)
        return true;
    }
    return false;
  }
};

SearchContext make_context(const Graph& g, const OracleLimits& limits) {
  if (g.n() > 16)
    throw DomainError("exhaustive model search limited to 16 vertices, got " +
                      std::to_string(g.n()));
  if (g.n() > limits.max_vertices)
    throw DomainError("instance exceeds configured search cap of " +
                      std::to_string(limits.max_vertices) + " vertices");
  SearchContext ctx;
  ctx.g = &g;
  ctx.n = g.n();
  ctx.adj.assign(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    ctx.adj[u] |= Mask(1) << v;
    ctx.adj[v] |= Mask(1) << u;
  }
  ctx.budget = limits.node_budget;
  return ctx;
}

MinorModel model_from_masks(const SearchContext& ctx,
                            const std::vector<Mask>& sets,
                            bool clique_pattern) {
  MinorModel m;
  m.h = static_cast<int>(sets.size());
  m.branch_sets.resize(m.h);
  for (int i = 0; i < m.h; ++i) {
    for (Mask rest = sets[i]; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      m.branch_sets[i].push_back(v);
    }
    m.width = std::max(m.width, static_cast<int>(m.branch_sets[i].size()));
  }
  for (int i = 0; i < m.h; ++i)
    for (int j = i + 1; j < m.h; ++j) {
      bool adj = (ctx.nbr(sets[i]) & sets[j]) != 0;
      if (clique_pattern || adj) {
        if (!adj) throw DiagnosticError("clique model missing an edge");
        m.pattern_edges.emplace_back(i, j);
      }
    }
  return m;
}

struct CliqueSearch {
  SearchContext ctx;
  int t = 0;
  std::vector<Mask> sets;
  std::optional<MinorModel> found;

  bool dfs(int v) {
    ctx.charge();
    Mask future = v >= ctx.n ? 0 : ~Mask(0) << v;
    if (ctx.n < 32) future &= (Mask(1) << ctx.n) - 1;

    int empties = 0;
    for (Mask s : sets)
      if (!s) ++empties;
    if (empties > ctx.n - v) return false;

    for (int a = 0; a < t; ++a) {
      if (!sets[a]) continue;
      if (ctx.stranded(sets[a], future)) return false;
      for (int b = a + 1; b < t; ++b) {
        if (!sets[b]) continue;
        if ((ctx.nbr(sets[a]) & sets[b]) != 0) continue;
        // Edge still missing; only a future vertex joining one side while
        // touching the other (directly or transitively) can fix it, and any
        // growth of a set starts from a future neighbor of that set.
        if ((ctx.nbr(sets[a]) & future) == 0 &&
            (ctx.nbr(sets[b]) & future) == 0)
          return false;
      }
    }

    if (v == ctx.n) {
      for (int a = 0; a < t; ++a) {
        if (!sets[a] || !ctx.mask_connected(sets[a])) return false;
        for (int b = a + 1; b < t; ++b)
          if ((ctx.nbr(sets[a]) & sets[b]) == 0) return false;
      }
      found = model_from_masks(ctx, sets, true);
      return true;
    }

    Mask bit = Mask(1) << v;
    bool opened_new = false;
    for (int a = 0; a < t; ++a) {
      if (!sets[a]) {
        // Branch sets of a clique pattern are interchangeable: only the
        // first empty set may be opened, which fixes min(X_1)<min(X_2)<...
        if (opened_new) break;
        opened_new = true;
      }
      sets[a] |= bit;
      if (dfs(v + 1)) return true;
      sets[a] &= ~bit;
    }
    return dfs(v + 1);  // leave v unused
  }
};

struct DensitySearch {
  SearchContext ctx;
  int width_cap = 0;
  Rat target;
  std::vector<Mask> sets;
  std::optional<MinorModel> found;

  bool complete_and_check() {
    if (sets.empty()) return false;
    for (Mask s : sets)
      if (!ctx.mask_connected(s)) return false;
    long h = static_cast<long>(sets.size());
    long e = 0;
    for (size_t a = 0; a < sets.size(); ++a)
      for (size_t b = a + 1; b < sets.size(); ++b)
        if ((ctx.nbr(sets[a]) & sets[b]) != 0) ++e;
    if (e < 1) return false;
    if (rat(e, h) < target) return false;
    found = model_from_masks(ctx, sets, false);
    return true;
  }

  bool dfs(int v) {
    ctx.charge();
    Mask future = v >= ctx.n ? 0 : ~Mask(0) << v;
    if (ctx.n < 32) future &= (Mask(1) << ctx.n) - 1;
    for (Mask s : sets)
      if (ctx.stranded(s, future)) return false;

    if (v == ctx.n) return complete_and_check();

    Mask bit = Mask(1) << v;
    for (size_t a = 0; a < sets.size(); ++a) {
      if (std::popcount(sets[a]) >= width_cap) continue;
      sets[a] |= bit;
      if (dfs(v + 1)) return true;
      sets[a] &= ~bit;
    }
    sets.push_back(bit);  // open a new branch set
    if (dfs(v + 1)) return true;
    sets.pop_back();
    return dfs(v + 1);  // leave v unused
  }
};

}  // namespace

std::optional<MinorModel> clique_minor_oracle(const Graph& g, int t,
                                              const OracleLimits& limits) {
  if (t < 1) throw DomainError("clique oracle: t must be >= 1");
  if (t > g.n()) return std::nullopt;
  CliqueSearch s;
  s.ctx = make_context(g, limits);
  s.t = t;
  s.sets.assign(t, 0);
  s.dfs(0);
  return s.found;
}

std::optional<MinorModel> bounded_density_model_search(
    const Graph& g, int width_cap, const Rat& target,
    const OracleLimits& limits) {
  if (width_cap < 1) throw DomainError("model search: width cap must be >= 1");
  DensitySearch s;
  s.ctx = make_context(g, limits);
  s.width_cap = width_cap;
  s.target = target;
  s.dfs(0);
  return s.found;
}

}  // namespace mdl
