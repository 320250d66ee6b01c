#include "mdl/generators.hpp"

#include <array>
#include <random>
#include <string>

#include "mdl/errors.hpp"

namespace mdl {

namespace {

// Uniform double in [0,1) from raw engine output; bit-exact across platforms.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; static_cast<long>(f) * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("gnp: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw DomainError("gnp: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit_double(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gen_complete(int n) {
  if (n < 1) throw DomainError("complete: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete-bipartite: sides must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid: dimensions must be >= 1");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, edges);
}

Graph gen_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("tree: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.emplace_back(parent, v);
  }
  return Graph(n, edges);
}

Graph gen_blowup(int base, int factor) {
  if (base < 3) throw DomainError("blowup: base cycle needs >= 3 vertices");
  if (factor < 1) throw DomainError("blowup: factor must be >= 1");
  std::vector<std::pair<int, int>> edges;
  auto id = [factor](int c, int i) { return c * factor + i; };
  for (int c = 0; c < base; ++c) {
    int d = (c + 1) % base;
    for (int i = 0; i < factor; ++i)
      for (int j = 0; j < factor; ++j) edges.emplace_back(id(c, i), id(d, j));
  }
  return Graph(base * factor, edges);
}

Graph gen_projective_incidence(int q) {
  if (!is_prime(q)) throw DomainError("projective incidence: order must be prime");
  // Canonical representatives of PG(2,q) points: (1,a,b), (0,1,a), (0,0,1).
  std::vector<std::array<int, 3>> pts;
  pts.reserve(q * q + q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int a = 0; a < q; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});

  const int np = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(np) * (q + 1));
  // Lines use the same coordinate list; point i is on line j iff dot = 0.
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      long dot = 0;
      for (int t = 0; t < 3; ++t)
        dot += static_cast<long>(pts[i][t]) * pts[j][t];
      if (dot % q == 0) edges.emplace_back(i, np + j);
    }
  return Graph(2 * np, edges);
}

Graph gen_affine_incidence(int q, int classes) {
  if (!is_prime(q)) throw DomainError("affine incidence: order must be prime");
  if (classes < 1 || classes > q + 1)
    throw DomainError("affine incidence: classes must be in [1, q+1]");
  // Points (x,y) in F_q^2.  Class s < q holds lines y = s*x + b; the last
  // class (index q) holds verticals x = b.
  auto pid = [q](int x, int y) { return x * q + y; };
  const int np = q * q;
  std::vector<std::pair<int, int>> edges;
  int line_base = np;
  for (int s = 0; s < classes; ++s) {
    for (int b = 0; b < q; ++b) {
      int line = line_base + s * q + b;
      for (int x = 0; x < q; ++x) {
        if (s < q) edges.emplace_back(pid(x, (s * x + b) % q), line);
        else edges.emplace_back(pid(b, x), line);
      }
    }
  }
  return Graph(np + classes * q, edges);
}

}  // namespace mdl
