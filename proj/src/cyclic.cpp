#include "fgc/cyclic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fgc {

OrderedSet::OrderedSet(OrderKind kind, std::vector<Label> elems)
    : kind_(kind), elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("OrderedSet: empty");
  std::set<Label> seen(elems_.begin(), elems_.end());
  if (seen.size() != elems_.size()) throw std::invalid_argument("OrderedSet: repeated label");
  if (kind_ == OrderKind::cyclic) {
    auto it = std::min_element(elems_.begin(), elems_.end());
    std::rotate(elems_.begin(), it, elems_.end());
  }
}

OrderedSet OrderedSet::linear(std::vector<Label> elems) {
  return OrderedSet(OrderKind::linear, std::move(elems));
}

OrderedSet OrderedSet::cyclic(std::vector<Label> elems) {
  return OrderedSet(OrderKind::cyclic, std::move(elems));
}

int OrderedSet::position(Label x) const {
  auto it = std::find(elems_.begin(), elems_.end(), x);
  return it == elems_.end() ? -1 : int(it - elems_.begin());
}

OrderedSet OrderedSet::as_cyclic() const { return cyclic(elems_); }

OrderedMono::OrderedMono(OrderedSet source, OrderedSet target, std::map<Label, Label> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (source_.is_cyclic() && !target_.is_cyclic())
    throw std::invalid_argument("OrderedMono: cyclic source with linear target");
  std::set<Label> image;
  for (Label x : source_.elements()) {
    auto it = map_.find(x);
    if (it == map_.end()) throw std::invalid_argument("OrderedMono: map not total");
    if (!target_.contains(it->second))
      throw std::invalid_argument("OrderedMono: image outside target");
    if (!image.insert(it->second).second)
      throw std::invalid_argument("OrderedMono: map not injective");
  }
}

Label OrderedMono::apply(Label x) const {
  auto it = map_.find(x);
  if (it == map_.end()) throw std::invalid_argument("OrderedMono::apply: label not in source");
  return it->second;
}

OrderedMono OrderedMono::identity(const OrderedSet& s) { return inclusion(s, s); }

OrderedMono OrderedMono::inclusion(const OrderedSet& src, const OrderedSet& tgt) {
  std::map<Label, Label> m;
  for (Label x : src.elements()) m[x] = x;
  return OrderedMono(src, tgt, std::move(m));
}

OrderedMono OrderedMono::then(const OrderedMono& g) const {
  if (!(target_ == g.source())) throw std::invalid_argument("OrderedMono::then: not composable");
  std::map<Label, Label> m;
  for (Label x : source_.elements()) m[x] = g.apply(apply(x));
  return OrderedMono(source_, g.target(), std::move(m));
}

OrderedMono OrderedMono::as_cyclic() const {
  return OrderedMono(source_.as_cyclic(), target_.as_cyclic(), map_);
}

Rational degree(const OrderedMono& f) {
  const auto& src = f.source().elements();
  const auto& tgt = f.target().elements();
  if (!f.source().is_cyclic() || !f.target().is_cyclic())
    throw std::invalid_argument("degree: endpoints must be cyclic");
  const int n = int(src.size()), m = int(tgt.size());
  long long total = 0;
  for (int i = 0; i < n; i++) {
    Label fx = f.apply(src[i]);
    Label fsx = f.apply(src[(i + 1) % n]);
    int p = f.target().position(fx), q = f.target().position(fsx);
    int k = (q - p) % m;
    if (k <= 0) k += m;  // least positive power of tau
    total += k;
  }
  return Rational(total, m);
}

bool is_morphism(const OrderedMono& f) {
  if (f.target().is_cyclic()) {
    if (f.source().size() <= 2) return true;  // degree of small domains is always 1
    return degree(f.as_cyclic()) == 1;
  }
  // both linear: positions must be strictly increasing
  int prev = -1;
  for (Label x : f.source().elements()) {
    int p = f.target().position(f.apply(x));
    if (p <= prev) return false;
    prev = p;
  }
  return true;
}

namespace {

int permutation_parity(std::vector<int> v) {
  // sign via inversion count; inputs are small
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); i++)
    for (std::size_t j = i + 1; j < v.size(); j++)
      if (v[i] > v[j]) inv++;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

int tuple_sign(std::span<const Label> tuple, const OrderedSet& reference) {
  const int n = int(reference.size());
  if (reference.is_cyclic() && tuple.size() % 2 == 0)
    throw std::invalid_argument("tuple_sign: even-length tuple with cyclic reference");
  std::vector<int> pos;
  pos.reserve(tuple.size());
  for (Label x : tuple) {
    int p = reference.position(x);
    if (p < 0) throw std::invalid_argument("tuple_sign: label not in reference");
    pos.push_back(p);
  }
  std::set<int> distinct(pos.begin(), pos.end());
  if (distinct.size() != pos.size()) return 0;
  if (reference.is_cyclic())
    for (auto& p : pos) p = (p - reference.position(tuple[0]) + n) % n;
  return permutation_parity(std::move(pos));
}

ZSimplex::ZSimplex(OrderedSet object) { objects_.push_back(std::move(object)); }

ZSimplex::ZSimplex(std::vector<OrderedMono> arrows) : arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw std::invalid_argument("ZSimplex: use the 0-simplex constructor");
  objects_.push_back(arrows_.front().source());
  for (std::size_t i = 0; i < arrows_.size(); i++) {
    if (i + 1 < arrows_.size() && !(arrows_[i].target() == arrows_[i + 1].source()))
      throw std::invalid_argument("ZSimplex: arrows not composable");
    objects_.push_back(arrows_[i].target());
  }
}

const OrderedSet& ZSimplex::object(std::size_t i) const { return objects_.at(i); }

OrderedMono ZSimplex::composite(std::size_t i, std::size_t j) const {
  if (i > j || j > dimension()) throw std::invalid_argument("ZSimplex::composite: bad range");
  OrderedMono f = OrderedMono::identity(object(i));
  for (std::size_t t = i; t < j; t++) f = f.then(arrows_[t]);
  return f;
}

ZSimplex ZSimplex::face(std::size_t i) const {
  const std::size_t p = dimension();
  if (p == 0 || i > p) throw std::invalid_argument("ZSimplex::face: bad index");
  if (p == 1) return ZSimplex(object(i == 0 ? 1 : 0));
  std::vector<OrderedMono> out;
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
  return ZSimplex(std::move(out));
}

ZSimplex ZSimplex::as_cyclic() const {
  if (dimension() == 0) return ZSimplex(object(0).as_cyclic());
  std::vector<OrderedMono> out;
  for (const auto& a : arrows_) out.push_back(a.as_cyclic());
  return ZSimplex(std::move(out));
}

namespace {

// shared kernel for c_z / c_z_full / s_k: sum tuple signs against a reference
// with a_i drawn from choice set i, then scale by (-1)^k k! / ((2k)! prod sizes)
Rational scaled_sign_sum(const std::vector<std::vector<Label>>& choices,
                         const OrderedSet& reference, unsigned k,
                         const std::vector<std::size_t>& object_sizes) {
  long long sum = 0;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Label> tuple(choices.size());
  for (const auto& c : choices)
    if (c.empty()) return 0;
  while (true) {
    for (std::size_t i = 0; i < choices.size(); i++) tuple[i] = choices[i][idx[i]];
    sum += tuple_sign(tuple, reference);
    std::size_t i = 0;
    for (; i < idx.size(); i++) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  BigInt den = factorial(2 * k);
  for (auto s : object_sizes) den *= BigInt(s);
  BigInt num = factorial(k) * sum;
  if (k % 2 == 1) num = -num;
  return Rational(num, den);
}

Rational c_z_impl(const ZSimplex& s, unsigned k, bool restricted) {
  if (s.dimension() != 2 * k) throw std::invalid_argument("c_z: dimension must be 2k");
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i <= 2 * k; i++) {
    if (!s.object(i).is_cyclic()) throw std::invalid_argument("c_z: all objects must be cyclic");
    sizes.push_back(s.object(i).size());
  }
  std::vector<std::vector<Label>> choices(2 * k + 1);
  std::set<Label> prev_image;
  for (std::size_t i = 0; i <= 2 * k; i++) {
    OrderedMono f = s.composite(i, 2 * k);
    std::set<Label> image;
    for (Label x : s.object(i).elements()) image.insert(f.apply(x));
    for (Label y : image)
      if (!restricted || !prev_image.count(y)) choices[i].push_back(y);
    prev_image = std::move(image);
  }
  return scaled_sign_sum(choices, s.object(2 * k), k, sizes);
}

}  // namespace

Rational c_z(const ZSimplex& s, unsigned k) { return c_z_impl(s, k, true); }

Rational c_z_full(const ZSimplex& s, unsigned k) { return c_z_impl(s, k, false); }

Rational s_k(const ZSimplex& s, unsigned k) {
  if (k == 0) throw std::invalid_argument("s_k: k must be positive");
  if (s.dimension() != 2 * k - 1) throw std::invalid_argument("s_k: dimension must be 2k-1");
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i <= 2 * k - 1; i++) {
    if (s.object(i).is_cyclic()) throw std::invalid_argument("s_k: all objects must be linear");
    sizes.push_back(s.object(i).size());
  }
  std::vector<std::vector<Label>> choices(2 * k);
  std::set<Label> prev_image;
  for (std::size_t i = 0; i <= 2 * k - 1; i++) {
    OrderedMono f = s.composite(i, 2 * k - 1);
    std::set<Label> image;
    for (Label x : s.object(i).elements()) image.insert(f.apply(x));
    for (Label y : image)
      if (!prev_image.count(y)) choices[i].push_back(y);
    prev_image = std::move(image);
  }
  return scaled_sign_sum(choices, s.object(2 * k - 1), k, sizes);
}

Rational c_z_plus(const ZSimplex& s, unsigned k) {
  const std::size_t p = s.dimension();
  if (p != 2 * k) throw std::invalid_argument("c_z_plus: dimension must be 2k");
  if (!s.object(p).is_cyclic()) return 0;  // kind monotonicity: all objects linear
  if (p == 0 || s.object(p - 1).is_cyclic()) return c_z(s.as_cyclic(), k);
  // last object cyclic, the rest linear up to C_{2k-1}
  return c_z(s.as_cyclic(), k) - s_k(s.face(p), k);
}

}  // namespace fgc
