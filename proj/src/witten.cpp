#include "fgc/witten.hpp"

#include "fgc/associahedron.hpp"
#include "fgc/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fgc {

namespace {

OrderedSet region_circle(int n) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), 0);
  return OrderedSet::cyclic(v);
}

void check(Report& r, const std::string& name, const Rational& got, const Rational& want) {
  if (got != want)
    r.failures.push_back(name + ": got " + to_fraction(got) + ", want " + to_fraction(want));
}

void finish(Report& r) { r.match = r.failures.empty() && r.exact == r.closed_form; }

Rational rational_pow(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; i++) r *= x;
  return r;
}

}  // namespace

Report eval_bk(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("eval_bk: k out of bounds");
  Report r;
  r.name = "eval_bk(k=" + std::to_string(k) + ")";
  auto chains = b_chains(k);
  Rational acc = 0;
  for (const auto& [chain, sign] : chains) {
    Rational v = c_z(angle_simplex(chain, 0), k) + c_z(angle_simplex(chain, 1), k);
    acc += sign > 0 ? v : -v;
  }
  r.exact = acc;
  r.closed_form = Rational(factorial(k), factorial(2 * k + 1));
  if (k % 2 == 1) r.closed_form = -r.closed_form;
  r.counts["chains"] = (long long)chains.size();
  r.counts["evaluations"] = 2 * (long long)chains.size();
  finish(r);
  return r;
}

Report stat_x(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("stat_x: k out of bounds");
  Report r;
  r.name = "stat_x(k=" + std::to_string(k) + ")";
  const int n = 2 * int(k) + 3;
  OrderedSet ref = region_circle(n);
  std::vector<Label> t(n);
  std::iota(t.begin(), t.end(), 0);
  long long sum_x = 0, total = 0;
  std::vector<long long> y_count(n, 0);
  do {
    // keep (a_1,a_2,a_3,b_1) in cyclic order
    auto q = [&](int x) { return (x - t[0] + n) % n; };
    if (!(q(t[1]) < q(t[2]) && q(t[2]) < q(t[3]))) continue;
    total++;
    int s_all = tuple_sign(t, ref);
    int s3 = 0;
    std::vector<Label> ai_b(std::size_t(n) - 2);
    std::copy(t.begin() + 3, t.end(), ai_b.begin() + 1);
    for (int i = 0; i < 3; i++) {
      ai_b[0] = t[i];
      s3 += tuple_sign(ai_b, ref);
    }
    sum_x += s_all * s3;
    y_count[(t[1] - t[3] - 1 + n) % n]++;
  } while (std::next_permutation(t.begin(), t.end()));

  long long expected_total = 1;
  for (int i = 2; i <= n; i++) expected_total *= i;
  expected_total /= 6;
  r.counts["placements"] = total;
  if (total != expected_total) r.failures.push_back("placement count != (2k+3)!/6");

  r.exact = Rational(sum_x, total);  // E(X)
  r.closed_form = Rational(3, 2 * k + 1);
  r.stats["E(X)"] = r.exact;

  // Y-distribution: P(Y=y) proportional to y(2k+1-y), supported on 1..2k
  long long denom = 0;
  for (unsigned j = 1; j <= 2 * k; j++) denom += (long long)j * (2 * k + 1 - j);
  check(r, "Y denominator identity", Rational(denom),
        Rational((long long)k * (2 * k + 1) * (2 * k + 2), 3));
  r.stats["Y_denominator"] = Rational(denom);
  for (int y = 0; y < n; y++) {
    if (y >= 1 && y <= 2 * int(k)) {
      check(r, "P(Y=" + std::to_string(y) + ")", Rational(y_count[y], total),
            Rational((long long)y * (2 * k + 1 - y), denom));
    } else if (y_count[y] != 0) {
      r.failures.push_back("Y out of range: y=" + std::to_string(y));
    }
  }
  finish(r);
  return r;
}

namespace {

// shared enumeration core for the half-disk: sum of Z over all configurations
// with a_1 = base (constraints rotated by base)
long long half_disk_sum(unsigned k, int base) {
  const int n = 2 * int(k) + 3;
  OrderedSet ref = region_circle(n);
  long long sum = 0;
  for (int d2 = 1; d2 <= int(k) + 1; d2++) {
    for (int d3 = int(k) + 2; d3 <= d2 + int(k) + 1; d3++) {
      int a1 = base, a2 = (base + d2) % n, a3 = (base + d3) % n;
      std::vector<Label> rest;
      for (int x = 0; x < n; x++)
        if (x != a1 && x != a2 && x != a3) rest.push_back(x);
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<Label> full{a1, a2, a3};
        full.insert(full.end(), rest.begin(), rest.end());
        int s_all = tuple_sign(full, ref);
        int s3 = 0;
        std::vector<Label> ai_b(rest.size() + 1);
        std::copy(rest.begin(), rest.end(), ai_b.begin() + 1);
        for (int i = 0; i < 3; i++) {
          ai_b[0] = full[std::size_t(i)];
          s3 += tuple_sign(ai_b, ref);
        }
        sum += s_all * s3;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return sum;
}

}  // namespace

Report half_disk(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("half_disk: k out of bounds");
  Report r;
  r.name = "half_disk(k=" + std::to_string(k) + ")";
  const int n = 2 * int(k) + 3;

  long long fixed_sum = half_disk_sum(k, 0);
  long long full_sum = 0;
  for (int base = 0; base < n; base++) full_sum += half_disk_sum(k, base);
  if (full_sum != (long long)n * fixed_sum)
    r.failures.push_back("full enumeration disagrees with fixed a_1 = 0 mode");

  BigInt fact2k = factorial(2 * k);
  BigInt fixed_count = BigInt(k + 1) * BigInt(k + 2) * fact2k / 2;
  BigInt term_count = BigInt(n) * BigInt(k + 1) * BigInt(k + 2) * fact2k / 6;
  r.counts["terms"] = term_count.convert_to<long long>();
  r.counts["fixed_configs"] = fixed_count.convert_to<long long>();

  Rational ez(BigInt(fixed_sum), fixed_count);
  r.stats["E(Z)"] = ez;
  Rational ez_closed =
      (k % 2 == 1) ? Rational(-3, int(k) + 2) : Rational(3, int(k) + 1);
  check(r, "E(Z)", ez, ez_closed);

  // z^k(A^{1/2}) = term_count * (-1)^k k! E(Z) / ((2k)! (2k+3)!/2)
  Rational denom(fact2k * factorial(2 * k + 3), 2);
  r.exact = Rational(term_count) * Rational(factorial(k)) * ez / denom;
  if (k % 2 == 1) r.exact = -r.exact;
  // (-1)^{k+1}(k+1)!/(2k+2)! for odd k, (-1)^k k!(k+2)/(2k+2)! for even k;
  // both are positive
  r.closed_form = (k % 2 == 1)
                      ? Rational(factorial(k + 1), factorial(2 * k + 2))
                      : Rational(factorial(k) * (k + 2), factorial(2 * k + 2));
  finish(r);
  return r;
}

namespace {

long long collar_sum(unsigned k, int base) {
  const int n = 2 * int(k) + 3;
  OrderedSet ref = region_circle(n);
  long long sum = 0;
  int a1 = base, a2 = (base + int(k) + 1) % n;
  for (int db0 = int(k) + 2; db0 <= 2 * int(k) + 2; db0++) {
    int b0 = (base + db0) % n;
    for (int dbl = int(k) + 2; dbl <= 2 * int(k) + 2; dbl++) {
      int b_last = (base + dbl) % n;
      if (b_last == b0) continue;
      std::vector<Label> rest;
      for (int x = 0; x < n; x++)
        if (x != a1 && x != a2 && x != b0 && x != b_last) rest.push_back(x);
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<Label> full{a1, a2, b0};
        full.insert(full.end(), rest.begin(), rest.end());
        full.push_back(b_last);
        int s_or = tuple_sign(full, ref);
        std::vector<Label> ai_b{0, b0};
        ai_b.insert(ai_b.end(), rest.begin(), rest.end());
        int s2 = 0;
        for (int i = 0; i < 2; i++) {
          ai_b[0] = i == 0 ? a1 : a2;
          s2 += tuple_sign(ai_b, ref);
        }
        sum += -s2 * s_or;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return sum;
}

}  // namespace

Report collar(unsigned k) {
  if (k < 1 || k > 4) throw std::invalid_argument("collar: k out of bounds");
  Report r;
  r.name = "collar(k=" + std::to_string(k) + ")";
  const int n = 2 * int(k) + 3;

  long long fixed_sum = collar_sum(k, 0);
  long long full_sum = 0;
  for (int base = 0; base < n; base++) full_sum += collar_sum(k, base);
  if (full_sum != (long long)n * fixed_sum)
    r.failures.push_back("full enumeration disagrees with fixed a_1 = 0 mode");

  BigInt fixed_count = BigInt(k + 1) * BigInt(k) * factorial(2 * k - 1);
  BigInt term_count = BigInt(n) * fixed_count;
  r.counts["terms"] = term_count.convert_to<long long>();
  r.counts["fixed_configs"] = fixed_count.convert_to<long long>();

  Rational ew(BigInt(fixed_sum), fixed_count);
  r.stats["E(W)"] = ew;
  Rational ew_closed = (k % 2 == 1) ? Rational(0) : Rational(-2, int(k) + 1);
  check(r, "E(W)", ew, ew_closed);

  // collar total = term_count * (-1)^k k! E(W) / ((2k)! (2k+2)!)
  Rational denom(factorial(2 * k) * factorial(2 * k + 2));
  r.exact = Rational(term_count) * Rational(factorial(k)) * ew / denom;
  if (k % 2 == 1) r.exact = -r.exact;
  if (k % 2 == 1) {
    r.closed_form = 0;
  } else {
    r.closed_form = -Rational(factorial(k) * (2 * k + 3), factorial(2 * k + 2));
  }
  finish(r);
  return r;
}

Report kappa_constant(unsigned k) {
  if (k < 1 || k > 3) throw std::invalid_argument("kappa_constant: k out of bounds");
  Report r;
  r.name = "kappa_constant(k=" + std::to_string(k) + ")";
  Report hd = half_disk(k), co = collar(k), bk = eval_bk(k);
  if (!hd.match) r.failures.push_back("half_disk sub-report failed");
  if (!co.match) r.failures.push_back("collar sub-report failed");
  if (!bk.match) r.failures.push_back("eval_bk sub-report failed");

  r.exact = hd.exact + co.exact;
  r.closed_form = Rational(factorial(k + 1), factorial(2 * k + 2));
  if (k % 2 == 0) r.closed_form = -r.closed_form;  // (-1)^{k+1}
  r.stats["half_disk"] = hd.exact;
  r.stats["collar"] = co.exact;
  r.stats["c_fat(B_k)"] = bk.exact;
  check(r, "kappa = -1/2 c_fat(B_k)", r.exact, -bk.exact / 2);
  check(r, "(k+1)!/(2k+2)! = k!/(2(2k+1)!)",
        Rational(factorial(k + 1), factorial(2 * k + 2)),
        Rational(factorial(k), 2 * factorial(2 * k + 1)));
  finish(r);
  return r;
}

std::pair<Rational, Rational> kontsevich_coeff(const WeightSpec& w) {
  if (w.terms.empty()) throw std::invalid_argument("kontsevich_coeff: empty weight spec");
  for (std::size_t i = 0; i < w.terms.size(); i++) {
    auto [ki, ni] = w.terms[i];
    if (ki < 1 || ni < 1) throw std::invalid_argument("kontsevich_coeff: bad term");
    if (i > 0 && w.terms[i - 1].first >= ki)
      throw std::invalid_argument("kontsevich_coeff: k_i must strictly increase");
  }
  Rational cfat = 1, ktilde = 1;
  for (auto [ki, ni] : w.terms) {
    Rational base_cfat(factorial(2 * ki + 1), factorial(ki));
    if (ki % 2 == 1) base_cfat = -base_cfat;  // (2k+1)!/((-1)^k k!)
    Rational base_ktilde(2 * factorial(2 * ki + 1), factorial(ki));
    if (ki % 2 == 0) base_ktilde = -base_ktilde;  // 2(2k+1)!/((-1)^{k+1} k!)
    cfat *= rational_pow(base_cfat, ni) / Rational(factorial(ni));
    ktilde *= rational_pow(base_ktilde, ni) / Rational(factorial(ni));
  }
  return {cfat, ktilde};
}

}  // namespace fgc
