#pragma once

#include "fgc/cyclic.hpp"
#include "fgc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fgc {

// A fat (ribbon) graph in half-edge form: per-vertex cyclic star order sigma
// and a fixed-point-free edge pairing iota. Stars are stored in canonical
// rotation (smallest half-edge first) so graph equality is structural.
class FatGraph {
 public:
  FatGraph(std::map<int, std::vector<int>> stars, std::map<int, int> pairing);

  const std::map<int, std::vector<int>>& stars() const { return stars_; }
  const std::map<int, int>& pairing() const { return pairing_; }

  std::vector<int> vertices() const;
  std::vector<int> half_edges() const;
  // edges as {h, iota(h)} with h < iota(h)
  std::vector<std::pair<int, int>> edges() const;
  std::size_t valence(int v) const;
  int vertex_of(int h) const;
  int sigma(int h) const;      // next half-edge around the vertex
  int sigma_inv(int h) const;  // previous half-edge
  int iota(int h) const;

  bool operator==(const FatGraph&) const = default;

 private:
  std::map<int, std::vector<int>> stars_;
  std::map<int, int> pairing_;
  std::map<int, int> vertex_of_;
};

// empty list means the graph satisfies every structural invariant
std::vector<std::string> validate(const FatGraph& g);

// boundary cycles: orbits of sigma∘iota, each rotated to its smallest half-edge
std::vector<std::vector<int>> faces(const FatGraph& g);

struct Topology {
  int euler_char;
  int genus;
  int punctures;
  int codimension;
  bool operator==(const Topology&) const = default;
};

Topology topology(const FatGraph& g);

// angle set at v: the valence(v) angles (h, sigma h), each labeled by its
// first half-edge, in the induced cyclic order
OrderedSet angles(const FatGraph& g, int v);

// multiplicity m(v) = valence - 2
int multiplicity(const FatGraph& g, int v);

// A morphism generated by edge collapses: carries the vertex map and the
// total angle-label map (defined on all source half-edges; collapsed labels
// are redirected to the surviving angle label).
class FatMorphism {
 public:
  FatMorphism(FatGraph source, FatGraph target, std::map<int, int> vertex_map,
              std::map<int, int> angle_label);

  const FatGraph& source() const { return source_; }
  const FatGraph& target() const { return target_; }
  const std::map<int, int>& vertex_map() const { return vertex_map_; }
  const std::map<int, int>& angle_label() const { return angle_label_; }
  int map_vertex(int v) const { return vertex_map_.at(v); }

  static FatMorphism identity(const FatGraph& g);
  FatMorphism then(const FatMorphism& g) const;

  bool operator==(const FatMorphism&) const = default;

 private:
  FatGraph source_, target_;
  std::map<int, int> vertex_map_;
  std::map<int, int> angle_label_;
};

// collapse the non-loop edge containing half-edge h; endpoints merge to the
// smaller vertex id, the two half-edges are retired
std::pair<FatGraph, FatMorphism> collapse_edge(const FatGraph& g, int h);

// induced degree-1 mono C(v) -> C(f v) on angle sets
OrderedMono angle_map(const FatMorphism& m, int v);

// A 2k-simplex in the nerve of the fat-graph category.
class FatSimplex {
 public:
  explicit FatSimplex(FatGraph graph);  // 0-simplex
  explicit FatSimplex(std::vector<FatMorphism> arrows);

  std::size_t dimension() const { return arrows_.size(); }
  const FatGraph& graph(std::size_t i) const { return graphs_.at(i); }
  const FatMorphism& arrow(std::size_t i) const { return arrows_.at(i); }
  FatMorphism composite(std::size_t i, std::size_t j) const;
  FatSimplex face(std::size_t i) const;

  bool operator==(const FatSimplex&) const = default;

 private:
  std::vector<FatMorphism> arrows_;
  std::vector<FatGraph> graphs_;
};

// c_Fat^k: sum over vertices v of the initial graph of m(v) times c_z of the
// angle simplex of v along the chain
Rational c_fat(const FatSimplex& s, unsigned k);

}  // namespace fgc
