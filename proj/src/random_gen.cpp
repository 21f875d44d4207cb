#include "fgc/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fgc {

namespace {

// nested label sequences O_0 within O_1 within ... built by inserting fresh
// labels at uniform positions; arrows are then conjugated by random
// relabelings so they are not literal inclusions
ZSimplex random_nested_simplex(Rng& rng, std::size_t dim, std::size_t max_size,
                               std::size_t n_linear, std::size_t min_growth = 0) {
  if (max_size < dim * min_growth + 1)
    throw std::invalid_argument("random_nested_simplex: max_size too small");
  std::uniform_int_distribution<std::size_t> d_start(1, 3);
  std::vector<std::vector<Label>> base(dim + 1);
  std::size_t size0 = std::min(max_size - dim * min_growth, d_start(rng));
  int next_label = 0;
  for (std::size_t i = 0; i < size0; i++) base[0].push_back(next_label++);
  std::size_t budget = max_size - size0 - dim * min_growth;  // beyond the forced growth
  for (std::size_t i = 1; i <= dim; i++) {
    base[i] = base[i - 1];
    std::size_t extra = min_growth +
        std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(2 - min_growth, budget))(rng);
    budget -= extra - min_growth;
    for (std::size_t e = 0; e < extra; e++) {
      std::uniform_int_distribution<std::size_t> d_pos(0, base[i].size());
      base[i].insert(base[i].begin() + d_pos(rng), next_label++);
    }
  }
  // random relabeling per object
  std::vector<std::map<Label, Label>> relabel(dim + 1);
  for (std::size_t i = 0; i <= dim; i++) {
    std::vector<Label> pool(base[i].size());
    std::iota(pool.begin(), pool.end(), 0);
    for (auto& x : pool) x = x * 7 + int(std::uniform_int_distribution<int>(0, 6)(rng));
    // pool entries must be distinct: x*7 + r with r < 7 is injective in x
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t j = 0; j < base[i].size(); j++) relabel[i][base[i][j]] = pool[j];
  }
  auto object = [&](std::size_t i) {
    std::vector<Label> elems;
    for (Label x : base[i]) elems.push_back(relabel[i][x]);
    return i < n_linear ? OrderedSet::linear(elems) : OrderedSet::cyclic(elems);
  };
  if (dim == 0) return ZSimplex(object(0));
  std::vector<OrderedMono> arrows;
  for (std::size_t i = 0; i + 1 <= dim; i++) {
    std::map<Label, Label> m;
    for (Label x : base[i]) m[relabel[i][x]] = relabel[i + 1][x];
    arrows.emplace_back(object(i), object(i + 1), std::move(m));
  }
  return ZSimplex(std::move(arrows));
}

}  // namespace

ZSimplex random_cyclic_simplex(Rng& rng, std::size_t dim, std::size_t max_size) {
  return random_nested_simplex(rng, dim, max_size, 0);
}

ZSimplex random_growing_simplex(Rng& rng, std::size_t dim, std::size_t max_size) {
  return random_nested_simplex(rng, dim, max_size, 0, 1);
}

ZSimplex random_linear_simplex(Rng& rng, std::size_t dim, std::size_t max_size) {
  return random_nested_simplex(rng, dim, max_size, dim + 1);
}

ZSimplex random_zplus_simplex(Rng& rng, std::size_t dim, std::size_t max_size) {
  std::size_t n_linear = std::uniform_int_distribution<std::size_t>(0, dim + 1)(rng);
  return random_nested_simplex(rng, dim, max_size, n_linear);
}

FatGraph random_trivalent_graph(Rng& rng, std::size_t n_vertices) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw std::invalid_argument("random_trivalent_graph: need a positive even vertex count");
  for (int attempt = 0; attempt < 1000; attempt++) {
    std::vector<int> halves(3 * n_vertices);
    std::iota(halves.begin(), halves.end(), 0);
    std::map<int, std::vector<int>> stars;
    for (std::size_t v = 0; v < n_vertices; v++)
      stars[int(v)] = {int(3 * v), int(3 * v + 1), int(3 * v + 2)};
    std::shuffle(halves.begin(), halves.end(), rng);
    std::map<int, int> pairing;
    for (std::size_t i = 0; i < halves.size(); i += 2) {
      pairing[halves[i]] = halves[i + 1];
      pairing[halves[i + 1]] = halves[i];
    }
    FatGraph g(std::move(stars), std::move(pairing));
    if (validate(g).empty()) return g;
  }
  throw std::runtime_error("random_trivalent_graph: rejection sampling failed");
}

FatSimplex random_collapse_simplex(Rng& rng, std::size_t dim, std::size_t n_vertices,
                                   std::size_t max_step) {
  FatGraph g = random_trivalent_graph(rng, n_vertices);
  if (dim == 0) return FatSimplex(g);
  std::vector<FatMorphism> arrows;
  for (std::size_t i = 0; i < dim; i++) {
    FatMorphism step = FatMorphism::identity(g);
    std::size_t n_collapse = std::uniform_int_distribution<std::size_t>(0, max_step)(rng);
    for (std::size_t c = 0; c < n_collapse; c++) {
      std::vector<int> non_loops;
      for (auto [h, hbar] : g.edges())
        if (g.vertex_of(h) != g.vertex_of(hbar)) non_loops.push_back(h);
      if (non_loops.empty()) break;
      int h = non_loops[std::uniform_int_distribution<std::size_t>(0, non_loops.size() - 1)(rng)];
      auto [g2, m] = collapse_edge(g, h);
      step = step.then(m);
      g = g2;
    }
    arrows.push_back(step);
  }
  return FatSimplex(std::move(arrows));
}

}  // namespace fgc
