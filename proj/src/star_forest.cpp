#include "mdl/star_forest.hpp"

#include <algorithm>

#include "mdl/errors.hpp"
#include "mdl/mates.hpp"

namespace mdl {

int StarForest::vertex_count() const {
  int total = 0;
  for (const Star& s : stars) total += 1 + static_cast<int>(s.leaves.size());
  return total;
}

std::vector<int> StarForest::vertices() const {
  std::vector<int> out;
  for (const Star& s : stars) {
    out.push_back(s.center);
    out.insert(out.end(), s.leaves.begin(), s.leaves.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> StarForest::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const Star& s : stars)
    for (int u : s.leaves)
      out.emplace_back(std::min(s.center, u), std::max(s.center, u));
  return out;
}

long edge_loss(const Graph& g, const StarForest& f) {
  std::vector<char> seen(g.n(), 0);
  for (const Star& s : f.stars) {
    if (s.center < 0 || s.center >= g.n())
      throw DomainError("edge_loss: center out of range");
    if (seen[s.center]) throw DomainError("edge_loss: overlapping stars");
    seen[s.center] = 1;
    for (int u : s.leaves) {
      if (u < 0 || u >= g.n())
        throw DomainError("edge_loss: leaf out of range");
      if (seen[u]) throw DomainError("edge_loss: overlapping stars");
      seen[u] = 1;
      if (!g.has_edge(s.center, u))
        throw DomainError("edge_loss: leaf not adjacent to its center");
    }
  }
  return contract_edges(g, f.edges()).loss;
}

namespace {

// Classes of G/(E(F0) u E(S)) labelled by a representative original vertex:
// each F0 star by its center, the growing star by its center, everything
// else by itself.  Only candidates outside V(F0) are ever queried, so their
// classes are singletons.
struct QuotientTracker {
  const Graph* g;
  std::vector<int> label;
  int star_rep;
  std::vector<char> adj_star;  // representative -> class adjacent to the star
  std::vector<int> stamp;
  int tick = 0;

  QuotientTracker(const Graph& host, const StarForest& f0, int v)
      : g(&host),
        label(host.n()),
        star_rep(v),
        adj_star(host.n(), 0),
        stamp(host.n(), 0) {
    for (int x = 0; x < host.n(); ++x) label[x] = x;
    for (const Star& s : f0.stars)
      for (int u : s.leaves) label[u] = s.center;
    for (int w : host.neighbors(v)) {
      int r = label[w];
      if (r != star_rep) adj_star[r] = 1;
    }
  }

  // Number of quotient classes adjacent to both {u} and the star class.
  int codegree_with_star(int u) {
    ++tick;
    int count = 0;
    for (int w : g->neighbors(u)) {
      int r = label[w];
      if (r == star_rep || stamp[r] == tick) continue;
      stamp[r] = tick;
      if (adj_star[r]) ++count;
    }
    return count;
  }

  void absorb(int u) {
    adj_star[u] = 0;
    label[u] = star_rep;
    for (int w : g->neighbors(u)) {
      int r = label[w];
      if (r != star_rep) adj_star[r] = 1;
    }
  }
};

}  // namespace

GrowResult grow_star(const Graph& g, const StarForest& f0, int v, int k,
                     const Rat& eps2, const Rat& d,
                     const std::vector<int>& pool) {
  if (v < 0 || v >= g.n()) throw DomainError("grow_star: center out of range");
  if (k < 1) throw DomainError("grow_star: star size must be >= 1");

  std::vector<char> blocked(g.n(), 0);
  for (const Star& s : f0.stars) {
    blocked[s.center] = 1;
    for (int u : s.leaves) blocked[u] = 1;
  }
  if (blocked[v]) throw DomainError("grow_star: center already in the forest");
  std::vector<char> allowed(g.n(), 0);
  for (int u : pool) {
    if (u < 0 || u >= g.n()) throw DomainError("grow_star: pool out of range");
    allowed[u] = 1;
  }

  QuotientTracker q(g, f0, v);
  GrowResult out;
  out.star.center = v;
  blocked[v] = 1;

  while (static_cast<int>(out.star.leaves.size()) + 1 < k) {
    // Attach the candidate sharing the fewest quotient classes with the
    // star, provided the cumulative loss stays within 2*(v(S)-1)*eps2*d.
    int pick = -1;
    int pick_codeg = 0;
    for (int u : g.neighbors(v)) {
      if (blocked[u] || !allowed[u]) continue;
      int cd = q.codegree_with_star(u);
      if (pick < 0 || cd < pick_codeg) {
        pick = u;
        pick_codeg = cd;
      }
    }
    if (pick >= 0 &&
        Rat(out.loss + 1 + pick_codeg) >
            2 * Rat(static_cast<long>(out.star.leaves.size()) + 1) * eps2 * d)
      pick = -1;
    if (pick < 0) {
      std::sort(out.star.leaves.begin(), out.star.leaves.end());
      return out;  // stuck; partial star and its exact loss reported
    }
    out.star.leaves.push_back(pick);
    out.loss += 1 + pick_codeg;
    blocked[pick] = 1;
    q.absorb(pick);
  }
  std::sort(out.star.leaves.begin(), out.star.leaves.end());
  out.grown = true;
  return out;
}

void ForestParams::validate() const {
  if (K < 1) throw DomainError("forest params: K must be >= 1");
  if (k < 2) throw DomainError("forest params: star size k must be >= 2");
  if (eps1 <= 0 || eps1 >= 1)
    throw DomainError("forest params: eps1 must lie in (0,1)");
  if (eps2 <= 0 || eps2 >= 1)
    throw DomainError("forest params: eps2 must lie in (0,1)");
  if (d < 1) throw DomainError("forest params: d must be >= 1");
}

namespace {

// A stuck grow means some member of the partial star has a mate set dense
// enough to hand back a small dense subgraph: find the member whose mate
// codegree row reaches eps1*eps2*d^2/k, as in the weighted counting that
// backs the growth claim.  Throws when no member qualifies, which under the
// pipeline hypotheses (unmated input, eps1*d >= k) cannot happen.
std::vector<int> dense_escape_or_throw(const Graph& g, const ForestParams& p,
                                       const StarForest& f0,
                                       const Star& partial,
                                       const std::vector<char>& in_a) {
  std::vector<int> members = {partial.center};
  members.insert(members.end(), partial.leaves.begin(), partial.leaves.end());

  std::vector<char> excluded(g.n(), 0);
  for (const Star& s : f0.stars) {
    excluded[s.center] = 1;
    for (int u : s.leaves) excluded[u] = 1;
  }
  for (int x : members) excluded[x] = 1;

  const long mate_cap = ceil_rat(p.eps2 * p.d / p.k);
  std::vector<std::vector<int>> rows(members.size(),
                                     std::vector<int>(g.n(), 0));
  for (size_t i = 0; i < members.size(); ++i)
    for (int w : g.neighbors(members[i]))
      for (int u : g.neighbors(w))
        if (u != members[i]) ++rows[i][u];

  std::vector<int> u_set;
  for (int u = 0; u < g.n(); ++u) {
    if (excluded[u] || !in_a[u]) continue;
    for (size_t i = 0; i < members.size(); ++i)
      if (rows[i][u] >= mate_cap) {
        u_set.push_back(u);
        break;
      }
  }

  const Rat row_target = p.eps1 * p.eps2 * p.d * p.d / p.k;
  for (size_t i = 0; i < members.size(); ++i) {
    long rowsum = 0;
    for (int u : u_set) rowsum += rows[i][u];
    if (Rat(rowsum) < row_target) continue;

    std::vector<int> set = u_set;
    set.push_back(members[i]);
    const auto& nb = g.neighbors(members[i]);
    set.insert(set.end(), nb.begin(), nb.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    Graph h = induced(g, set).graph;
    if (Rat(h.n()) <= 3 * p.K * p.d &&
        Rat(2 * p.k * h.m()) >= p.eps1 * p.eps2 * p.d * p.d)
      return set;
  }
  throw LemmaViolationError(
      "star growth stuck at center " + std::to_string(partial.center) +
      " with no dense escape; a pipeline precondition must have failed");
}

}  // namespace

ForestBuild build_clean_forest(const Graph& g, const ForestParams& p) {
  p.validate();
  const Rat c = 4 * p.eps2;

  ForestBuild out;
  std::vector<char> in_a(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (is_small(g, v, p.K, p.d)) {
      in_a[v] = 1;
      out.a.push_back(v);
    } else {
      out.b.push_back(v);
    }
  }

  StarForest f;
  std::vector<char> in_f(g.n(), 0);
  std::vector<int> ap_nbrs(g.n(), 0);  // neighbors in A' = A \ V(F)
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v))
      if (in_a[w]) ++ap_nbrs[v];

  auto leave_aprime = [&](const Star& s) {
    std::vector<int> mem = {s.center};
    mem.insert(mem.end(), s.leaves.begin(), s.leaves.end());
    for (int w : mem) {
      in_f[w] = 1;
      for (int x : g.neighbors(w)) --ap_nbrs[x];
    }
  };
  auto rejoin_aprime = [&](const Star& s) {
    std::vector<int> mem = {s.center};
    mem.insert(mem.end(), s.leaves.begin(), s.leaves.end());
    for (int w : mem) {
      in_f[w] = 0;
      for (int x : g.neighbors(w)) ++ap_nbrs[x];
    }
  };

  const long t_add = ceil_rat(2 * p.eps1 * p.d);
  const long t_heavy = ceil_rat(3 * p.eps1 * p.d);
  const Rat star_budget = 2 * p.k * p.eps2 * p.d;

  auto attach_star = [&](const GrowResult& gr) {
    if (Rat(gr.loss) > star_budget)
      throw LemmaViolationError("grown star exceeds its 2*k*eps2*d budget");
    leave_aprime(gr.star);
    f.stars.push_back(gr.star);
    f.loss += gr.loss;
  };

  while (true) {
    if (out.rounds > g.n())
      throw DiagnosticError("forest local search exceeded its move cap");

    // Replace a component carrying two vertices that are heavy toward A'.
    int sci = -1, u1 = -1, u2 = -1;
    for (size_t i = 0; i < f.stars.size() && sci < 0; ++i) {
      std::vector<int> mem = {f.stars[i].center};
      mem.insert(mem.end(), f.stars[i].leaves.begin(),
                 f.stars[i].leaves.end());
      std::sort(mem.begin(), mem.end());
      int h1 = -1, h2 = -1;
      for (int x : mem) {
        if (ap_nbrs[x] < t_heavy) continue;
        if (h1 < 0) h1 = x;
        else if (h2 < 0) { h2 = x; break; }
      }
      if (h2 >= 0) { sci = static_cast<int>(i); u1 = h1; u2 = h2; }
    }
    if (sci >= 0) {
      Star t = f.stars[sci];
      f.stars.erase(f.stars.begin() + sci);
      rejoin_aprime(t);
      long loss0 = edge_loss(g, f);

      std::vector<int> pool1;
      for (int x : out.a)
        if (x != u2) pool1.push_back(x);
      GrowResult g1 = grow_star(g, f, u1, p.k, p.eps2, p.d, pool1);
      if (!g1.grown) {
        out.dense_escape = true;
        out.escape_subgraph = dense_escape_or_throw(g, p, f, g1.star, in_a);
        return out;
      }
      attach_star(g1);
      GrowResult g2 = grow_star(g, f, u2, p.k, p.eps2, p.d, out.a);
      if (!g2.grown) {
        out.dense_escape = true;
        out.escape_subgraph = dense_escape_or_throw(g, p, f, g2.star, in_a);
        return out;
      }
      attach_star(g2);
      f.loss = loss0 + g1.loss + g2.loss;
      if (Rat(f.loss) > c * p.d * f.vertex_count())
        throw DiagnosticError("forest lost cleanliness after a swap move");
      ++out.rounds;
      continue;
    }

    // Grow a star at the first A'-vertex with >= 2*eps1*d neighbors in A'.
    int v = -1;
    for (int x = 0; x < g.n(); ++x)
      if (in_a[x] && !in_f[x] && ap_nbrs[x] >= t_add) { v = x; break; }
    if (v < 0) break;

    GrowResult gr = grow_star(g, f, v, p.k, p.eps2, p.d, out.a);
    if (!gr.grown) {
      out.dense_escape = true;
      out.escape_subgraph = dense_escape_or_throw(g, p, f, gr.star, in_a);
      return out;
    }
    attach_star(gr);
    if (Rat(f.loss) > c * p.d * f.vertex_count())
      throw DiagnosticError("forest lost cleanliness after an add move");
    ++out.rounds;
  }

  // Postconditions, all against fresh recomputation.
  long scratch = edge_loss(g, f);
  if (scratch != f.loss)
    throw DiagnosticError("forest loss bookkeeping diverged from recount");
  if (Rat(scratch) > c * p.d * f.vertex_count())
    throw DiagnosticError("finished forest is not clean");
  for (const Star& s : f.stars) {
    if (static_cast<int>(s.leaves.size()) + 1 != p.k)
      throw DiagnosticError("finished forest has a wrong-size star");
    if (!in_a[s.center]) throw DiagnosticError("forest center is not small");
    for (int u : s.leaves)
      if (!in_a[u]) throw DiagnosticError("forest leaf is not small");
  }
  std::vector<int> ap_check(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v))
      if (in_a[w] && !in_f[w]) ++ap_check[v];
  if (ap_check != ap_nbrs)
    throw DiagnosticError("A'-neighbor counters diverged from recount");
  for (int v = 0; v < g.n(); ++v) {
    if (in_a[v] && !in_f[v] && ap_nbrs[v] >= t_add)
      throw DiagnosticError("finished forest left an add trigger live");
  }
  for (const Star& s : f.stars) {
    int heavy = ap_nbrs[s.center] >= t_heavy ? 1 : 0;
    for (int u : s.leaves)
      if (ap_nbrs[u] >= t_heavy) ++heavy;
    if (heavy > 1)
      throw DiagnosticError("finished forest left a swap trigger live");
    if (ap_nbrs[s.center] >= t_heavy) out.c.push_back(s.center);
    for (int u : s.leaves)
      if (ap_nbrs[u] >= t_heavy) out.c.push_back(u);
  }
  std::sort(out.c.begin(), out.c.end());
  if (!out.b.empty() && p.K * p.d * Rat(static_cast<long>(out.b.size())) >
                            Rat(2 * g.m()))
    throw DiagnosticError("big-vertex degree accounting failed");

  for (int v : out.a)
    if (!in_f[v]) out.a_prime.push_back(v);
  out.forest = std::move(f);
  return out;
}

}  // namespace mdl
