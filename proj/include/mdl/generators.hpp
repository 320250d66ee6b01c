#pragma once

#include <cstdint>

#include "mdl/graph.hpp"

namespace mdl {

// All generators are deterministic: the same arguments and seed produce the
// same graph on every platform (raw mt19937_64 output, no distribution
// adapters).

// Each pair {u,v} becomes an edge independently with probability p.
Graph gen_gnp(int n, double p, std::uint64_t seed);

Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);

// rows x cols lattice, 4-neighbor adjacency.
Graph gen_grid(int rows, int cols);

Graph gen_petersen();

// Uniform random labelled tree (random parent attachment).
Graph gen_tree(int n, std::uint64_t seed);

// Balanced blow-up of a cycle C_base: every cycle vertex becomes an
// independent set of `factor` vertices, cycle edges become complete bipartite
// bundles.
Graph gen_blowup(int base, int factor);

// Point-line incidence graph of the projective plane of prime order q:
// bipartite, (q+1)-regular, any two vertices on the same side have exactly
// one common neighbor, cross-side pairs have none.  Used as a structured
// mate-free instance family.
Graph gen_projective_incidence(int q);

// Point-line incidence graph of `classes` parallel classes of the affine
// plane of prime order q.  Points have degree `classes`, lines degree q, and
// same-side codegrees are at most 1.  Left side (points) occupies vertices
// 0..q*q-1, lines follow.
Graph gen_affine_incidence(int q, int classes);

}  // namespace mdl
