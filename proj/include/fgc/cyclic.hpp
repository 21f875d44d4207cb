#pragma once

#include "fgc/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace fgc {

using Label = int;

enum class OrderKind { linear, cyclic };

// A finite linearly or cyclically ordered set of labels. Cyclic sets are
// stored in canonical rotation (smallest label first); equality is sequence
// equality, so canonical rotation makes cyclic equality well-defined.
class OrderedSet {
 public:
  static OrderedSet linear(std::vector<Label> elems);
  static OrderedSet cyclic(std::vector<Label> elems);

  OrderKind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == OrderKind::cyclic; }
  const std::vector<Label>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(Label x) const { return position(x) >= 0; }
  // index of x in the stored sequence, or -1
  int position(Label x) const;
  // J: forgets nothing on cyclic sets, closes up linear ones
  OrderedSet as_cyclic() const;

  bool operator==(const OrderedSet&) const = default;
  auto operator<=>(const OrderedSet&) const = default;

 private:
  OrderedSet(OrderKind kind, std::vector<Label> elems);
  OrderKind kind_;
  std::vector<Label> elems_;
};

// An injective map between ordered sets. Construction checks injectivity,
// totality, and kind legality (no map from a cyclic set to a linear one);
// it does not require degree 1 — use is_morphism for that.
class OrderedMono {
 public:
  OrderedMono(OrderedSet source, OrderedSet target, std::map<Label, Label> map);

  const OrderedSet& source() const { return source_; }
  const OrderedSet& target() const { return target_; }
  const std::map<Label, Label>& map() const { return map_; }
  Label apply(Label x) const;

  static OrderedMono identity(const OrderedSet& s);
  // label-identity inclusion; every element of src must occur in tgt
  static OrderedMono inclusion(const OrderedSet& src, const OrderedSet& tgt);
  // composition: this first, then g
  OrderedMono then(const OrderedMono& g) const;
  // same underlying map with both endpoints pushed to cyclic sets
  OrderedMono as_cyclic() const;

  bool operator==(const OrderedMono&) const = default;

 private:
  OrderedSet source_, target_;
  std::map<Label, Label> map_;
};

// degree of a monomorphism of cyclic sets: (1/|D|) sum_x k(x) where k(x) is
// least positive with f(sigma x) = tau^{k(x)} f(x)
Rational degree(const OrderedMono& f);

// true iff f is a morphism of the ordered-set category: degree 1 when the
// target is cyclic (applying J to a linear source), order-preserving when
// both endpoints are linear
bool is_morphism(const OrderedMono& f);

// sign of a label tuple against the ordering induced from a reference set;
// 0 on repeats. Cyclic references require odd tuple length.
int tuple_sign(std::span<const Label> tuple, const OrderedSet& reference);

// A p-simplex in the nerve: objects C_0 -> ... -> C_p with composable arrows.
class ZSimplex {
 public:
  explicit ZSimplex(OrderedSet object);  // 0-simplex
  explicit ZSimplex(std::vector<OrderedMono> arrows);

  std::size_t dimension() const { return arrows_.size(); }
  const OrderedSet& object(std::size_t i) const;
  const OrderedMono& arrow(std::size_t i) const { return arrows_.at(i); }
  // composite arrow object(i) -> object(j), i <= j
  OrderedMono composite(std::size_t i, std::size_t j) const;
  ZSimplex face(std::size_t i) const;
  // J-bar: push every object to its cyclic closure
  ZSimplex as_cyclic() const;

  bool operator==(const ZSimplex&) const = default;

 private:
  std::vector<OrderedMono> arrows_;
  std::vector<OrderedSet> objects_;
};

// c_Z^k on a 2k-simplex of cyclic sets (restricted summation a_i in
// im C_i \ im C_{i-1}); c_z_full sums over all a_i in im C_i — provably equal
Rational c_z(const ZSimplex& s, unsigned k);
Rational c_z_full(const ZSimplex& s, unsigned k);

// s_k on an all-linear (2k-1)-simplex, k >= 1
Rational s_k(const ZSimplex& s, unsigned k);

// extended cocycle on Z+
Rational c_z_plus(const ZSimplex& s, unsigned k);

// alternating face sum of any cochain on any simplex type with face()/dimension()
template <typename Simplex, typename Cochain>
Rational coboundary(Cochain&& cochain, const Simplex& s) {
  Rational acc = 0;
  for (std::size_t i = 0; i <= s.dimension(); i++) {
    Rational v = cochain(s.face(i));
    acc += (i % 2 == 0) ? v : -v;
  }
  return acc;
}

}  // namespace fgc
