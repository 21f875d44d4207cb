#pragma once

#include "fgc/cyclic.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fgc {

using Chord = std::pair<int, int>;  // unordered pair of regions, stored a < b

// A set of pairwise non-crossing chords of an n-gon. Region i is the gap
// between consecutive leaves i and i+1 (residues mod n).
struct ChordSet {
  int n = 0;
  std::set<Chord> chords;
  auto operator<=>(const ChordSet&) const = default;
};

bool is_valid(const ChordSet& c);

// all valid chord sets including the empty one; 3 <= n <= 12
std::vector<ChordSet> enumerate_chord_sets(int n);

// Dual planar tree of a chorded polygon: one vertex per cell, carrying the
// cell's cyclically ordered region list; one edge per chord.
struct PlanarTree {
  struct Edge {
    int v1, v2;
    Chord chord;
  };
  std::vector<std::vector<int>> regions;  // vertex id -> cyclic region list
  std::vector<Edge> edges;

  // the two endpoint vertices of a chord's dual edge
  std::pair<int, int> endpoints(const Chord& c) const;
  // hop distances from v to every vertex
  std::vector<int> distances_from(int v) const;
  // the unique vertex with the largest region set (the growing vertex)
  int max_vertex() const;
};

PlanarTree tree_of(const ChordSet& c);

// inclusion-decreasing chain of chord sets; maximal = triangulation down to
// the empty set, one chord removed per step
using AChain = std::vector<ChordSet>;

void for_each_maximal_chain(int n, const std::function<void(const AChain&)>& fn);
std::vector<AChain> maximal_chains(int n);

// Orientation labels of a maximal chain of A_{2k+3}:
// (a_1,a_2,a_3,b_1,...,b_{2k}) as a permutation of the regions {0..2k+2}.
// role 0 uses the deterministic v_0 (endpoint of e_1 whose free region is
// smaller); role 1 swaps v_0 and v_1.
std::vector<int> orientation_labels(const AChain& ch, int role = 0);

int orientation_sign(const AChain& ch);

// nullopt if every interior face of the signed top chain cancels
std::optional<std::string> boundary_consistency(int n);

struct SignedChain {
  AChain chain;
  int sign;
};

// maximal chains of A_{2k+3} whose collapses all feed one growing vertex
std::vector<SignedChain> b_chains(unsigned k);

// region-set chain C(v) into C(f_1 v) into ... for a B_k chain, at the vertex
// picked by role (0 = v_0, 1 = v_1); sizes 3,4,...,2k+3
ZSimplex angle_simplex(const AChain& ch, int role);

}  // namespace fgc
