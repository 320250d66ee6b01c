#include "mdl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mdl/errors.hpp"

namespace mdl {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw DomainError("graph with negative vertex count");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DomainError("edge endpoint out of range: " + std::to_string(u) +
                        " " + std::to_string(v));
    if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw DomainError("duplicate edge at vertex " + std::to_string(v));
  }
  m_ = static_cast<long>(edges.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n())
    throw DomainError("vertex out of range: " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= n())
    throw DomainError("vertex out of range: " + std::to_string(v));
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  if (n() == 0) throw DomainError("min_degree of empty graph");
  int best = degree(0);
  for (int v = 1; v < n(); ++v) best = std::min(best, degree(v));
  return best;
}

Rat density(const Graph& g) {
  if (g.n() < 1) throw DomainError("density of empty graph");
  return rat(g.m(), g.n());
}

int codegree(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

PeelResult peel_to_min_degree(const Graph& g) {
  if (g.m() < 1) throw DomainError("peeling an edgeless graph");
  const Rat d = density(g);
  std::vector<bool> alive(g.n(), true);
  std::vector<int> deg(g.n());
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);

  // Scan ascending; deleting a vertex can only lower the degrees of later
  // (or earlier) survivors, so restart the scan after each deletion to keep
  // the "lowest qualifying index first" rule exact.
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (int v = 0; v < g.n(); ++v) {
      if (!alive[v]) continue;
      if (Rat(deg[v]) <= d) {
        alive[v] = false;
        for (int w : g.neighbors(v))
          if (alive[w]) --deg[w];
        deleted = true;
        break;
      }
    }
  }

  std::vector<int> kept;
  for (int v = 0; v < g.n(); ++v)
    if (alive[v]) kept.push_back(v);
  if (kept.empty())
    throw DiagnosticError("peeling removed every vertex");

  InducedResult sub = induced(g, kept);
  if (Rat(sub.graph.min_degree()) <= d ||
      density(sub.graph) < d)
    throw DiagnosticError("peel postcondition failed");
  return {std::move(sub.graph), std::move(sub.vertices)};
}

ContractionResult contract_edges(const Graph& g,
                                 const std::vector<std::pair<int, int>>& s) {
  // Union-find over the contracted edge set.
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : s) {
    if (!g.has_edge(u, v))
      throw DomainError("contract_edges: not an edge: " + std::to_string(u) +
                        " " + std::to_string(v));
    int ru = find(u), rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }

  // Classes labelled by ascending minimum original vertex.  Path compression
  // with the "min root wins" rule above makes the root the class minimum.
  std::vector<int> label(g.n(), -1);
  std::vector<std::vector<int>> origin;
  for (int v = 0; v < g.n(); ++v) {
    int r = find(v);
    if (label[r] < 0) {
      label[r] = static_cast<int>(origin.size());
      origin.push_back({});
    }
    origin[label[r]].push_back(v);
  }
  int h = static_cast<int>(origin.size());

  std::vector<std::pair<int, int>> qedges;
  for (int u = 0; u < g.n(); ++u) {
    int lu = label[find(u)];
    for (int v : g.neighbors(u)) {
      if (u >= v) continue;
      int lv = label[find(v)];
      if (lu != lv)
        qedges.emplace_back(std::min(lu, lv), std::max(lu, lv));
    }
  }
  std::sort(qedges.begin(), qedges.end());
  qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());

  ContractionResult out;
  out.graph = Graph(h, qedges);
  out.loss = g.m() - out.graph.m();
  out.origin = std::move(origin);
  return out;
}

InducedResult induced(const Graph& g, const std::vector<int>& a) {
  if (a.empty()) throw DomainError("induced subgraph on empty vertex set");
  std::vector<int> vs = a;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw DomainError("induced subgraph with duplicate vertices");
  if (vs.front() < 0 || vs.back() >= g.n())
    throw DomainError("induced subgraph vertex out of range");

  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (int u : vs)
    for (int v : g.neighbors(u))
      if (u < v && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);

  return {Graph(static_cast<int>(vs.size()), edges), std::move(vs)};
}

}  // namespace mdl
