#include "fgc/associahedron.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace fgc {

namespace {

bool chord_in_range(const ChordSet& c, const Chord& ch) {
  auto [a, b] = ch;
  if (a < 0 || b < 0 || a >= c.n || b >= c.n || a >= b) return false;
  int d = b - a;
  return d >= 2 && d <= c.n - 2;
}

bool chords_cross(const Chord& p, const Chord& q) {
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second)
    return false;
  auto inside = [&](int x) { return p.first < x && x < p.second; };
  return inside(q.first) != inside(q.second);
}

}  // namespace

bool is_valid(const ChordSet& c) {
  if (c.n < 3) return false;
  for (const auto& ch : c.chords)
    if (!chord_in_range(c, ch)) return false;
  for (auto i = c.chords.begin(); i != c.chords.end(); ++i)
    for (auto j = std::next(i); j != c.chords.end(); ++j)
      if (chords_cross(*i, *j)) return false;
  return true;
}

std::vector<ChordSet> enumerate_chord_sets(int n) {
  if (n < 3 || n > 12) throw std::invalid_argument("enumerate_chord_sets: n out of bounds");
  std::vector<Chord> candidates;
  for (int a = 0; a < n; a++)
    for (int b = a + 2; b < n; b++)
      if (b - a <= n - 2) candidates.push_back({a, b});
  std::vector<ChordSet> out;
  std::vector<Chord> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == candidates.size()) {
      ChordSet c{n, std::set<Chord>(chosen.begin(), chosen.end())};
      out.push_back(std::move(c));
      return;
    }
    self(self, i + 1);
    for (const auto& c : chosen)
      if (chords_cross(c, candidates[i])) return;
    chosen.push_back(candidates[i]);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> PlanarTree::endpoints(const Chord& c) const {
  for (const auto& e : edges)
    if (e.chord == c) return {e.v1, e.v2};
  throw std::invalid_argument("PlanarTree::endpoints: chord has no dual edge");
}

std::vector<int> PlanarTree::distances_from(int v) const {
  std::vector<int> dist(regions.size(), -1);
  dist.at(v) = 0;
  std::vector<int> frontier{v};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (const auto& e : edges) {
        int other = e.v1 == x ? e.v2 : e.v2 == x ? e.v1 : -1;
        if (other >= 0 && dist[other] < 0) {
          dist[other] = dist[x] + 1;
          next.push_back(other);
        }
      }
    frontier = std::move(next);
  }
  return dist;
}

int PlanarTree::max_vertex() const {
  int best = 0;
  for (std::size_t i = 1; i < regions.size(); i++)
    if (regions[i].size() > regions[best].size()) best = int(i);
  return best;
}

namespace {

// recursive cell splitting; returns ids of vertices created for this cell
void build_tree(PlanarTree& t, std::vector<int> cell, std::vector<Chord> chords) {
  if (chords.empty()) {
    t.regions.push_back(std::move(cell));
    return;
  }
  Chord c = chords.front();
  auto pa = std::find(cell.begin(), cell.end(), c.first);
  auto pb = std::find(cell.begin(), cell.end(), c.second);
  if (pa == cell.end() || pb == cell.end())
    throw std::logic_error("build_tree: chord endpoint missing from cell");
  // arc from c.first to c.second inclusive, in the cell's cyclic order
  std::vector<int> cell_a, cell_b;
  std::size_t ia = pa - cell.begin(), ib = pb - cell.begin();
  for (std::size_t i = ia;; i = (i + 1) % cell.size()) {
    cell_a.push_back(cell[i]);
    if (i == ib) break;
  }
  for (std::size_t i = ib;; i = (i + 1) % cell.size()) {
    cell_b.push_back(cell[i]);
    if (i == ia) break;
  }
  std::set<int> set_a(cell_a.begin(), cell_a.end());
  std::set<int> set_b(cell_b.begin(), cell_b.end());
  std::vector<Chord> chords_a, chords_b;
  for (std::size_t i = 1; i < chords.size(); i++) {
    const Chord& x = chords[i];
    if (set_a.count(x.first) && set_a.count(x.second))
      chords_a.push_back(x);
    else if (set_b.count(x.first) && set_b.count(x.second))
      chords_b.push_back(x);
    else
      throw std::logic_error("build_tree: crossing chord");
  }
  std::size_t start_a = t.regions.size();
  build_tree(t, std::move(cell_a), std::move(chords_a));
  std::size_t start_b = t.regions.size();
  build_tree(t, std::move(cell_b), std::move(chords_b));
  auto adjacent = [&](std::size_t lo, std::size_t hi) -> int {
    for (std::size_t i = lo; i < hi; i++) {
      const auto& r = t.regions[i];
      if (std::find(r.begin(), r.end(), c.first) != r.end() &&
          std::find(r.begin(), r.end(), c.second) != r.end())
        return int(i);
    }
    throw std::logic_error("build_tree: no cell adjacent to chord");
  };
  t.edges.push_back({adjacent(start_a, start_b), adjacent(start_b, t.regions.size()), c});
}

}  // namespace

PlanarTree tree_of(const ChordSet& c) {
  if (!is_valid(c)) throw std::invalid_argument("tree_of: invalid chord set");
  std::vector<int> cell(c.n);
  for (int i = 0; i < c.n; i++) cell[i] = i;
  PlanarTree t;
  build_tree(t, std::move(cell), std::vector<Chord>(c.chords.begin(), c.chords.end()));
  return t;
}

void for_each_maximal_chain(int n, const std::function<void(const AChain&)>& fn) {
  if (n < 4 || n > 11) throw std::invalid_argument("for_each_maximal_chain: n out of bounds");
  for (const auto& cs : enumerate_chord_sets(n)) {
    if (int(cs.chords.size()) != n - 3) continue;  // triangulations only
    std::vector<Chord> order(cs.chords.begin(), cs.chords.end());
    std::sort(order.begin(), order.end());
    do {
      AChain ch{cs};
      ChordSet cur = cs;
      for (const Chord& c : order) {
        cur.chords.erase(c);
        ch.push_back(cur);
      }
      fn(ch);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

std::vector<AChain> maximal_chains(int n) {
  std::vector<AChain> out;
  for_each_maximal_chain(n, [&](const AChain& ch) { out.push_back(ch); });
  return out;
}

namespace {

void check_maximal(const AChain& ch) {
  if (ch.empty()) throw std::invalid_argument("chain: empty");
  int n = ch[0].n;
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("chain: need odd n >= 5");
  if (ch.size() != std::size_t(n - 2)) throw std::invalid_argument("chain: not maximal");
  for (std::size_t i = 0; i < ch.size(); i++) {
    if (ch[i].n != n || int(ch[i].chords.size()) != n - 3 - int(i))
      throw std::invalid_argument("chain: bad object sizes");
    if (i > 0 && !std::includes(ch[i - 1].chords.begin(), ch[i - 1].chords.end(),
                                ch[i].chords.begin(), ch[i].chords.end()))
      throw std::invalid_argument("chain: not inclusion-decreasing");
  }
}

Chord dropped_chord(const ChordSet& a, const ChordSet& b) {
  for (const Chord& c : a.chords)
    if (!b.chords.count(c)) return c;
  throw std::invalid_argument("chain: no chord dropped");
}

int free_region(const std::vector<int>& cell, const Chord& c) {
  for (int r : cell)
    if (r != c.first && r != c.second) return r;
  throw std::logic_error("free_region: degenerate cell");
}

}  // namespace

std::vector<int> orientation_labels(const AChain& ch, int role) {
  check_maximal(ch);
  const int n = ch[0].n;
  const int k2 = n - 3;  // 2k
  std::vector<Chord> e(k2 + 1);
  for (int i = 1; i <= k2; i++) e[i] = dropped_chord(ch[i - 1], ch[i]);

  PlanarTree t0 = tree_of(ch[0]);
  auto [x, y] = t0.endpoints(e[1]);
  int rx = free_region(t0.regions[x], e[1]);
  int ry = free_region(t0.regions[y], e[1]);
  int v0 = rx < ry ? x : y;
  if (role == 1) v0 = rx < ry ? y : x;
  int v1 = v0 == x ? y : x;

  std::vector<int> labels;
  // a_1,a_2,a_3: regions at v_0 in cyclic order with e_1 = {a_1,a_3}
  {
    const auto& cell = t0.regions[v0];
    int mid = free_region(cell, e[1]);
    std::size_t p = std::find(cell.begin(), cell.end(), mid) - cell.begin();
    labels.push_back(cell[(p + 2) % 3]);
    labels.push_back(cell[p]);
    labels.push_back(cell[(p + 1) % 3]);
  }
  labels.push_back(free_region(t0.regions[v1], e[1]));  // b_1

  std::vector<int> dist = t0.distances_from(v0);
  for (int i = 2; i <= k2; i++) {
    auto [p, q] = t0.endpoints(e[i]);
    int vi = dist[p] > dist[q] ? p : q;
    labels.push_back(free_region(t0.regions[vi], e[i]));
  }

  std::vector<bool> seen(n, false);
  for (int l : labels) {
    if (seen.at(l)) throw std::logic_error("orientation_labels: repeated label");
    seen[l] = true;
  }
  return labels;
}

int orientation_sign(const AChain& ch) {
  std::vector<int> labels = orientation_labels(ch, 0);
  int inv = 0;
  for (std::size_t i = 0; i < labels.size(); i++)
    for (std::size_t j = i + 1; j < labels.size(); j++)
      if (labels[i] > labels[j]) inv++;
  return inv % 2 == 0 ? 1 : -1;
}

namespace {

std::string face_key(const AChain& ch, std::size_t skip) {
  std::string key;
  for (std::size_t i = 0; i < ch.size(); i++) {
    if (i == skip) continue;
    for (const Chord& c : ch[i].chords) key.push_back(char(c.first * 16 + c.second));
    key.push_back(char(0xFF));
  }
  return key;
}

// union-find with parity relative to the root
struct ParityDsu {
  std::vector<int> parent, parity;
  std::pair<int, int> find(int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }
  // s(a) differs from s(b) iff diff; false on contradiction
  bool merge(int a, int b, int diff) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == diff;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ diff;
    return true;
  }
};

}  // namespace

std::optional<std::string> boundary_consistency(int n) {
  if (n < 5 || n > 9) throw std::invalid_argument("boundary_consistency: need 5 <= n <= 9");
  if (n % 2 == 1) {
    // odd n: the explicit orientation signs must cancel on every interior face
    std::unordered_map<std::string, std::pair<int, int>> table;  // key -> (hits, signed sum)
    for_each_maximal_chain(n, [&](const AChain& ch) {
      int s = orientation_sign(ch);
      for (std::size_t i = 0; i < ch.size(); i++) {
        auto& [hits, sum] = table[face_key(ch, i)];
        hits++;
        sum += (i % 2 == 0) ? s : -s;
      }
    });
    for (const auto& [key, hs] : table) {
      auto [hits, sum] = hs;
      if (hits > 2) return "face shared by " + std::to_string(hits) + " chains";
      if (hits == 2 && sum != 0) return "interior face with non-cancelling orientations";
    }
    return std::nullopt;
  }
  // even n carries no orientation labels; check that some global sign choice
  // cancels every interior face: s_a (-1)^{i_a} + s_b (-1)^{i_b} = 0
  std::unordered_map<std::string, std::pair<int, std::pair<int, int>>> table;  // (hits, (chain, skip))
  ParityDsu dsu;
  std::optional<std::string> fail;
  int chain_idx = 0;
  for_each_maximal_chain(n, [&](const AChain& ch) {
    dsu.parent.push_back(chain_idx);
    dsu.parity.push_back(0);
    for (std::size_t i = 0; i < ch.size(); i++) {
      auto& [hits, first] = table[face_key(ch, i)];
      hits++;
      if (hits == 1) {
        first = {chain_idx, int(i)};
      } else if (hits == 2) {
        int diff = (first.second + int(i)) % 2 == 0 ? 1 : 0;
        if (!dsu.merge(first.first, chain_idx, diff) && !fail)
          fail = "interior face forces contradictory orientations";
      } else if (!fail) {
        fail = "face shared by more than two chains";
      }
    }
    chain_idx++;
  });
  return fail;
}

std::vector<SignedChain> b_chains(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("b_chains: k out of bounds");
  const int n = 2 * int(k) + 3;
  std::vector<SignedChain> out;
  for (const auto& cs : enumerate_chord_sets(n)) {
    if (int(cs.chords.size()) != n - 3) continue;
    PlanarTree t = tree_of(cs);
    const auto& edges = t.edges;
    std::vector<bool> used(edges.size(), false);
    std::set<int> grown;
    std::vector<Chord> order;
    auto rec = [&](auto&& self) -> void {
      if (order.size() == edges.size()) {
        AChain ch{cs};
        ChordSet cur = cs;
        for (const Chord& c : order) {
          cur.chords.erase(c);
          ch.push_back(cur);
        }
        out.push_back({ch, orientation_sign(ch)});
        return;
      }
      for (std::size_t i = 0; i < edges.size(); i++) {
        if (used[i]) continue;
        bool has1 = grown.count(edges[i].v1), has2 = grown.count(edges[i].v2);
        if (!grown.empty() && !has1 && !has2) continue;  // prefix must stay connected
        used[i] = true;
        order.push_back(edges[i].chord);
        bool add1 = !has1 && grown.insert(edges[i].v1).second;
        bool add2 = !has2 && grown.insert(edges[i].v2).second;
        self(self);
        if (add1) grown.erase(edges[i].v1);
        if (add2) grown.erase(edges[i].v2);
        order.pop_back();
        used[i] = false;
      }
    };
    rec(rec);
  }
  return out;
}

ZSimplex angle_simplex(const AChain& ch, int role) {
  check_maximal(ch);
  std::vector<int> labels = orientation_labels(ch, role);  // also validates maximality
  PlanarTree t0 = tree_of(ch[0]);
  Chord e1 = dropped_chord(ch[0], ch[1]);
  auto [x, y] = t0.endpoints(e1);
  int v0 = free_region(t0.regions[x], e1) == labels[1] ? x : y;

  std::vector<OrderedSet> objects{OrderedSet::cyclic(t0.regions[v0])};
  for (std::size_t i = 1; i < ch.size(); i++) {
    PlanarTree ti = tree_of(ch[i]);
    int big = ti.max_vertex();
    for (std::size_t v = 0; v < ti.regions.size(); v++)
      if (int(v) != big && ti.regions[v].size() != 3)
        throw std::invalid_argument("angle_simplex: chain not in B_k");
    if (ti.regions[big].size() != i + 3)
      throw std::invalid_argument("angle_simplex: chain not in B_k");
    objects.push_back(OrderedSet::cyclic(ti.regions[big]));
  }
  std::vector<OrderedMono> arrows;
  for (std::size_t i = 1; i < objects.size(); i++)
    arrows.push_back(OrderedMono::inclusion(objects[i - 1], objects[i]));
  return ZSimplex(std::move(arrows));
}

}  // namespace fgc
