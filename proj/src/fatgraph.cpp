#include "fgc/fatgraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace fgc {

FatGraph::FatGraph(std::map<int, std::vector<int>> stars, std::map<int, int> pairing)
    : stars_(std::move(stars)), pairing_(std::move(pairing)) {
  for (auto& [v, star] : stars_) {
    if (star.empty()) throw std::invalid_argument("FatGraph: empty star");
    auto it = std::min_element(star.begin(), star.end());
    std::rotate(star.begin(), it, star.end());
    for (int h : star)
      if (!vertex_of_.emplace(h, v).second)
        throw std::invalid_argument("FatGraph: half-edge in two star slots");
  }
}

std::vector<int> FatGraph::vertices() const {
  std::vector<int> out;
  for (const auto& [v, star] : stars_) out.push_back(v);
  return out;
}

std::vector<int> FatGraph::half_edges() const {
  std::vector<int> out;
  for (const auto& [h, v] : vertex_of_) out.push_back(h);
  return out;
}

std::vector<std::pair<int, int>> FatGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [h, hbar] : pairing_)
    if (h < hbar) out.push_back({h, hbar});
  return out;
}

std::size_t FatGraph::valence(int v) const { return stars_.at(v).size(); }

int FatGraph::vertex_of(int h) const {
  auto it = vertex_of_.find(h);
  if (it == vertex_of_.end()) throw std::invalid_argument("FatGraph: unknown half-edge");
  return it->second;
}

int FatGraph::sigma(int h) const {
  const auto& star = stars_.at(vertex_of(h));
  auto it = std::find(star.begin(), star.end(), h);
  return star[(it - star.begin() + 1) % star.size()];
}

int FatGraph::sigma_inv(int h) const {
  const auto& star = stars_.at(vertex_of(h));
  auto it = std::find(star.begin(), star.end(), h);
  return star[(it - star.begin() + star.size() - 1) % star.size()];
}

int FatGraph::iota(int h) const {
  auto it = pairing_.find(h);
  if (it == pairing_.end()) throw std::invalid_argument("FatGraph: half-edge not paired");
  return it->second;
}

std::vector<std::string> validate(const FatGraph& g) {
  std::vector<std::string> out;
  std::set<int> halves;
  for (int h : g.half_edges()) halves.insert(h);
  for (const auto& [h, hbar] : g.pairing()) {
    if (!halves.count(h) || !halves.count(hbar)) {
      out.push_back("pairing mentions unknown half-edge");
      continue;
    }
    if (h == hbar) out.push_back("involution not fixed-point free at " + std::to_string(h));
    auto it = g.pairing().find(hbar);
    if (it == g.pairing().end() || it->second != h)
      out.push_back("pairing not an involution at " + std::to_string(h));
  }
  for (int h : halves)
    if (!g.pairing().count(h))
      out.push_back("half-edge " + std::to_string(h) + " not paired");
  for (const auto& [v, star] : g.stars())
    if (star.size() < 3)
      out.push_back("valence < 3 at vertex " + std::to_string(v));
  // connectivity over vertices through edges
  if (!g.stars().empty() && out.empty()) {
    std::set<int> seen;
    std::queue<int> frontier;
    frontier.push(g.stars().begin()->first);
    seen.insert(g.stars().begin()->first);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int h : g.stars().at(v)) {
        int w = g.vertex_of(g.iota(h));
        if (seen.insert(w).second) frontier.push(w);
      }
    }
    if (seen.size() != g.stars().size()) out.push_back("graph not connected");
  }
  return out;
}

namespace {

void require_valid(const FatGraph& g, const char* who) {
  auto v = validate(g);
  if (!v.empty()) throw std::invalid_argument(std::string(who) + ": invalid graph: " + v.front());
}

}  // namespace

std::vector<std::vector<int>> faces(const FatGraph& g) {
  require_valid(g, "faces");
  std::set<int> remaining;
  for (int h : g.half_edges()) remaining.insert(h);
  std::vector<std::vector<int>> out;
  while (!remaining.empty()) {
    int start = *remaining.begin();
    std::vector<int> orbit;
    int h = start;
    do {
      orbit.push_back(h);
      remaining.erase(h);
      h = g.sigma(g.iota(h));
    } while (h != start);
    auto it = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), it, orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Topology topology(const FatGraph& g) {
  require_valid(g, "topology");
  int V = int(g.stars().size());
  int E = int(g.edges().size());
  int s = int(faces(g).size());
  int chi = V - E;
  int two_g = 2 - s - chi;
  if (two_g < 0 || two_g % 2 != 0) throw std::logic_error("topology: non-integral genus");
  int codim = 0;
  for (int v : g.vertices()) codim += int(g.valence(v)) - 3;
  return Topology{chi, two_g / 2, s, codim};
}

OrderedSet angles(const FatGraph& g, int v) {
  auto it = g.stars().find(v);
  if (it == g.stars().end()) throw std::invalid_argument("angles: unknown vertex");
  return OrderedSet::cyclic(it->second);
}

int multiplicity(const FatGraph& g, int v) { return int(g.valence(v)) - 2; }

FatMorphism::FatMorphism(FatGraph source, FatGraph target, std::map<int, int> vertex_map,
                         std::map<int, int> angle_label)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      angle_label_(std::move(angle_label)) {
  for (int v : source_.vertices())
    if (!vertex_map_.count(v)) throw std::invalid_argument("FatMorphism: vertex map not total");
  for (int h : source_.half_edges()) {
    auto it = angle_label_.find(h);
    if (it == angle_label_.end())
      throw std::invalid_argument("FatMorphism: angle label map not total");
    if (target_.vertex_of(it->second) != vertex_map_.at(source_.vertex_of(h)))
      throw std::invalid_argument("FatMorphism: angle label not at image vertex");
  }
}

FatMorphism FatMorphism::identity(const FatGraph& g) {
  std::map<int, int> vm, al;
  for (int v : g.vertices()) vm[v] = v;
  for (int h : g.half_edges()) al[h] = h;
  return FatMorphism(g, g, std::move(vm), std::move(al));
}

FatMorphism FatMorphism::then(const FatMorphism& g) const {
  if (!(target_ == g.source())) throw std::invalid_argument("FatMorphism::then: not composable");
  std::map<int, int> vm, al;
  for (const auto& [v, w] : vertex_map_) vm[v] = g.vertex_map().at(w);
  for (const auto& [h, l] : angle_label_) al[h] = g.angle_label().at(l);
  return FatMorphism(source_, g.target(), std::move(vm), std::move(al));
}

std::pair<FatGraph, FatMorphism> collapse_edge(const FatGraph& g, int h) {
  int hbar = g.iota(h);
  int u = g.vertex_of(h), v = g.vertex_of(hbar);
  if (u == v) throw std::invalid_argument("collapse_edge: loop edge");
  int merged = std::min(u, v);

  // merged star: u's fan after h, then v's fan after hbar
  std::vector<int> star;
  for (int x = g.sigma(h); x != h; x = g.sigma(x)) star.push_back(x);
  for (int x = g.sigma(hbar); x != hbar; x = g.sigma(x)) star.push_back(x);

  std::map<int, std::vector<int>> stars;
  for (const auto& [w, s] : g.stars())
    if (w != u && w != v) stars[w] = s;
  stars[merged] = star;

  std::map<int, int> pairing = g.pairing();
  pairing.erase(h);
  pairing.erase(hbar);
  FatGraph out(std::move(stars), std::move(pairing));

  std::map<int, int> vm, al;
  for (int w : g.vertices()) vm[w] = (w == u || w == v) ? merged : w;
  for (int x : g.half_edges()) al[x] = x;
  al[h] = g.sigma_inv(hbar);
  al[hbar] = g.sigma_inv(h);
  return {out, FatMorphism(g, out, std::move(vm), std::move(al))};
}

OrderedMono angle_map(const FatMorphism& m, int v) {
  OrderedSet src = angles(m.source(), v);
  OrderedSet tgt = angles(m.target(), m.map_vertex(v));
  std::map<Label, Label> map;
  for (Label h : src.elements()) map[h] = m.angle_label().at(h);
  return OrderedMono(std::move(src), std::move(tgt), std::move(map));
}

FatSimplex::FatSimplex(FatGraph graph) { graphs_.push_back(std::move(graph)); }

FatSimplex::FatSimplex(std::vector<FatMorphism> arrows) : arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw std::invalid_argument("FatSimplex: use the 0-simplex constructor");
  graphs_.push_back(arrows_.front().source());
  for (std::size_t i = 0; i < arrows_.size(); i++) {
    if (i + 1 < arrows_.size() && !(arrows_[i].target() == arrows_[i + 1].source()))
      throw std::invalid_argument("FatSimplex: arrows not composable");
    graphs_.push_back(arrows_[i].target());
  }
}

FatMorphism FatSimplex::composite(std::size_t i, std::size_t j) const {
  if (i > j || j > dimension()) throw std::invalid_argument("FatSimplex::composite: bad range");
  FatMorphism f = FatMorphism::identity(graph(i));
  for (std::size_t t = i; t < j; t++) f = f.then(arrows_[t]);
  return f;
}

FatSimplex FatSimplex::face(std::size_t i) const {
  const std::size_t p = dimension();
  if (p == 0 || i > p) throw std::invalid_argument("FatSimplex::face: bad index");
  if (p == 1) return FatSimplex(graph(i == 0 ? 1 : 0));
  std::vector<FatMorphism> out;
  for (std::size_t t = 0; t < p; t++) {
    if (i > 0 && i < p && t == i - 1) {
      out.push_back(arrows_[t].then(arrows_[t + 1]));
      t++;
    } else if ((i == 0 && t == 0) || (i == p && t == p - 1)) {
      continue;
    } else {
      out.push_back(arrows_[t]);
    }
  }
  return FatSimplex(std::move(out));
}

Rational c_fat(const FatSimplex& s, unsigned k) {
  if (s.dimension() != 2 * k) throw std::invalid_argument("c_fat: dimension must be 2k");
  const FatGraph& g0 = s.graph(0);
  if (k == 0) {
    Rational acc = 0;
    for (int v : g0.vertices()) acc += multiplicity(g0, v);  // k=0 angle cocycle is 1
    return acc;
  }
  Rational acc = 0;
  for (int v : g0.vertices()) {
    std::vector<OrderedMono> arrows;
    int cur = v;
    for (std::size_t i = 0; i < 2 * k; i++) {
      arrows.push_back(angle_map(s.arrow(i), cur));
      cur = s.arrow(i).map_vertex(cur);
    }
    acc += Rational(multiplicity(g0, v)) * c_z(ZSimplex(std::move(arrows)), k);
  }
  return acc;
}

}  // namespace fgc
