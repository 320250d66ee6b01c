#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "mdl/errors.hpp"
#include "mdl/generators.hpp"
#include "mdl/graph.hpp"
#include "mdl/mates.hpp"

using namespace mdl;

namespace {

// Brute-force mate census straight from the definition.
std::vector<int> mates_brute(const Graph& g, int v, const Rat& eps,
                             const Rat& d) {
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u) {
    if (u == v) continue;
    if (Rat(codegree(g, u, v)) >= eps * d) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("smallness threshold is inclusive") {
  Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(!is_small(star, 0, rat(2), rat(2)));  // deg 5 > 4
  CHECK(is_small(star, 1, rat(2), rat(2)));   // deg 1
  Graph k5 = gen_complete(5);
  CHECK(is_small(k5, 0, rat(2), rat(2)));     // deg 4 == K*d exactly
}

TEST_CASE("mates on a four-cycle") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto m = count_mates(c4, 0, rat(1, 2), rat(2));
  CHECK(m == std::vector<int>{2});
}

TEST_CASE("mates in a complete graph") {
  Graph k4 = gen_complete(4);
  auto m = count_mates(k4, 0, rat(1), rat(2));
  CHECK(m.size() == 3);  // every other vertex has codegree 2
}

TEST_CASE("mates are not restricted to neighbours") {
  // two vertices tied together by three common neighbours, no direct edge
  Graph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(!g.has_edge(0, 1));
  auto m = count_mates(g, 0, rat(1), rat(3));
  CHECK(m == std::vector<int>{1});
}

TEST_CASE("mates match the brute-force census on random graphs") {
  for (int seed = 5; seed < 13; ++seed) {
    Graph g = gen_gnp(30, 0.5, seed);
    Rat d = density(g);
    for (int v = 0; v < g.n(); ++v) {
      CHECK(count_mates(g, v, rat(1, 5), d) == mates_brute(g, v, rat(1, 5), d));
    }
  }
}

TEST_CASE("mate parameters validate") {
  MateParams p{rat(2), rat(2), rat(1, 10), rat(1, 10)};
  p.validate();
  MateParams bad = p;
  bad.K = rat(1, 2);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.d = rat(1, 2);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.eps1 = rat(0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.eps2 = rat(1);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("edgeless graph is unmated") {
  Graph g(6, {});
  MateParams p{rat(2), rat(1), rat(1, 2), rat(1, 2)};
  UnmatedCertificate c = unmated_dichotomy(g, p);
  CHECK(c.verdict == UnmatedCertificate::Verdict::Unmated);
  CHECK(check_unmated_certificate(g, c).ok);
}

TEST_CASE("complete bipartite graph triggers the dense branch") {
  // every left vertex mates with every other left vertex
  Graph g = gen_complete_bipartite(6, 6);
  MateParams p{rat(3), rat(3), rat(1, 2), rat(1, 2)};
  UnmatedCertificate c = unmated_dichotomy(g, p);
  REQUIRE(c.verdict == UnmatedCertificate::Verdict::DenseSubgraph);
  REQUIRE(c.witness.has_value());
  const DenseWitness& w = *c.witness;
  CHECK(Rat(w.h.n()) <= 3 * p.K * p.d);
  CHECK(Rat(2 * w.h.m()) >= p.eps1 * p.eps2 * p.d * p.d);
  CHECK(check_unmated_certificate(g, c).ok);
  // the witness subgraph really is induced on the stored vertex set
  InducedResult ind = induced(g, w.subgraph);
  CHECK(ind.graph.m() == w.h.m());
}

TEST_CASE("random graph certificates agree with an independent census") {
  for (int seed = 6; seed < 12; ++seed) {
    Graph g = gen_gnp(50, 0.4, seed);
    Rat d = density(g);
    if (d < 1) continue;
    MateParams p{rat(4), d, rat(1, 10), rat(1, 10)};
    UnmatedCertificate c = unmated_dichotomy(g, p);
    CHECK(check_unmated_certificate(g, c).ok);

    bool any_trigger = false;
    for (int v = 0; v < g.n() && !any_trigger; ++v) {
      if (!is_small(g, v, p.K, p.d)) continue;
      auto mates = mates_brute(g, v, p.eps2, p.d);
      if (Rat(static_cast<long>(mates.size())) >= p.eps1 * p.d)
        any_trigger = true;
    }
    bool got_dense = c.verdict == UnmatedCertificate::Verdict::DenseSubgraph;
    CHECK(got_dense == any_trigger);
  }
}

TEST_CASE("unmated verdict rejects a graph that has a heavy mate pair") {
  Graph g = gen_complete_bipartite(6, 6);
  MateParams p{rat(3), rat(3), rat(1, 2), rat(1, 2)};
  UnmatedCertificate forged;
  forged.verdict = UnmatedCertificate::Verdict::Unmated;
  forged.params = p;
  CheckResult r = check_unmated_certificate(g, forged);
  CHECK(!r.ok);
  CHECK(!r.reason.empty());
}
