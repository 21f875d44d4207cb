#pragma once

#include "fgc/cyclic.hpp"
#include "fgc/fatgraph.hpp"

#include <random>

namespace fgc {

using Rng = std::mt19937_64;

// Random p-simplex of cyclic sets. Objects are built by inserting fresh
// labels at uniform positions (so every arrow is a degree-1 embedding),
// then hidden behind independent random relabelings.
ZSimplex random_cyclic_simplex(Rng& rng, std::size_t dim, std::size_t max_size = 12);

// Cyclic variant with strictly increasing sizes (at least one fresh label per
// arrow) — the regime where the pulled-back forms are non-degenerate.
ZSimplex random_growing_simplex(Rng& rng, std::size_t dim, std::size_t max_size = 12);

// Same construction with all-linear objects.
ZSimplex random_linear_simplex(Rng& rng, std::size_t dim, std::size_t max_size = 12);

// Random legal simplex in the extended category: a (possibly empty) linear
// prefix followed by a cyclic tail.
ZSimplex random_zplus_simplex(Rng& rng, std::size_t dim, std::size_t max_size = 12);

// Random connected trivalent fat graph with n_vertices vertices (n even).
FatGraph random_trivalent_graph(Rng& rng, std::size_t n_vertices);

// Random p-simplex of edge collapses starting from a random trivalent graph;
// each arrow collapses up to max_step edges (possibly none, i.e. identity).
FatSimplex random_collapse_simplex(Rng& rng, std::size_t dim, std::size_t n_vertices,
                                   std::size_t max_step = 2);

}  // namespace fgc
