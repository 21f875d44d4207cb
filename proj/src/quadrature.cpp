#include "fgc/quadrature.hpp"

#include "fgc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace fgc {

void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 2) throw std::invalid_argument("gauss_legendre_01: order too small");
  nodes.assign(order, 0);
  weights.assign(order, 0);
  for (int i = 0; i < order; i++) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; it++) {
      // Legendre recurrence for P_n(x) and P'_n(x)
      double p0 = 1, p1 = x;
      for (int n = 2; n <= order; n++) {
        double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1, p1 = x;
    for (int n = 2; n <= order; n++) {
      double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1);
    nodes[i] = (x + 1) / 2;
    weights[i] = 1 / ((1 - x * x) * dp * dp);
  }
}

namespace {

void check_profile(unsigned k, const MassProfile& p) {
  if (p.a.size() != 2 * k + 1) throw std::invalid_argument("MassProfile: need 2k+1 sizes");
  if (p.a[0] < 1) throw std::invalid_argument("MassProfile: a_0 must be >= 1");
  for (long long x : p.a)
    if (x < 0) throw std::invalid_argument("MassProfile: negative size");
}

double mass_at(const MassProfile& p, const std::vector<double>& t) {
  double m = double(p.a[0]);
  for (std::size_t i = 1; i < p.a.size(); i++) m += double(p.a[i]) * t[i - 1];
  return m;
}

}  // namespace

Rational simplex_integral_exact(unsigned k, const MassProfile& p) {
  check_profile(k, p);
  BigInt den = factorial(2 * k);
  BigInt partial = 0;
  for (long long x : p.a) {
    partial += x;
    den *= partial;
  }
  return Rational(BigInt(1), den);
}

namespace {

// integral of f over the order simplex 1 >= t_1 >= ... >= t_m >= 0 by tensor
// Gauss-Legendre through the map t_i = u_1 u_2 ... u_i
template <typename F>
double gl_simplex(int m, int order, F&& f) {
  std::vector<double> x, w;
  gauss_legendre_01(order, x, w);
  std::vector<int> idx(m, 0);
  std::vector<double> t(m);
  double acc = 0;
  while (true) {
    double weight = 1, prod = 1;
    for (int i = 0; i < m; i++) {
      weight *= w[idx[i]];
      prod *= x[idx[i]];
      t[i] = prod;
      // Jacobian contribution u_i^{m-1-i}
      for (int e = 0; e < m - 1 - i; e++) weight *= x[idx[i]];
    }
    acc += weight * f(t);
    int i = 0;
    for (; i < m; i++) {
      if (++idx[i] < order) break;
      idx[i] = 0;
    }
    if (i == m) break;
  }
  return acc;
}

}  // namespace

QuadratureResult simplex_integral_grid(unsigned k, const MassProfile& p, int order) {
  check_profile(k, p);
  if (k < 1 || k > 2) throw std::invalid_argument("simplex_integral_grid: k must be 1 or 2");
  auto f = [&](const std::vector<double>& t) {
    return std::pow(mass_at(p, t), -double(2 * k + 1));
  };
  double fine = gl_simplex(2 * k, order, f);
  double coarse = gl_simplex(2 * k, std::max(2, order / 2), f);
  long long pts = 1;
  for (unsigned i = 0; i < 2 * k; i++) pts *= order;
  return {fine, std::abs(fine - coarse), pts, 0};
}

QuadratureResult simplex_integral_mc(unsigned k, const MassProfile& p, long long samples,
                                     std::uint64_t seed, unsigned threads) {
  check_profile(k, p);
  if (k < 1 || k > 3) throw std::invalid_argument("simplex_integral_mc: k out of bounds");
  const long long batch = 1 << 16;
  const std::size_t n_batches = std::size_t((samples + batch - 1) / batch);
  struct Acc {
    double sum = 0, sumsq = 0;
    long long n = 0;
  };
  Acc total = parallel_reduce<Acc>(
      n_batches,
      [&](std::size_t b) {
        Acc a;
        std::mt19937_64 rng(derive_seed(seed, b));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        long long count = std::min(batch, samples - (long long)b * batch);
        std::vector<double> t(2 * k);
        for (long long i = 0; i < count; i++) {
          for (auto& x : t) x = uni(rng);
          std::sort(t.begin(), t.end(), std::greater<>());
          double f = std::pow(mass_at(p, t), -double(2 * k + 1));
          a.sum += f;
          a.sumsq += f * f;
          a.n++;
        }
        return a;
      },
      Acc{},
      [](Acc x, const Acc& y) {
        x.sum += y.sum;
        x.sumsq += y.sumsq;
        x.n += y.n;
        return x;
      },
      threads);
  double vol = 1.0 / double(factorial(2 * k).convert_to<long long>());
  double mean = total.sum / double(total.n);
  double var = std::max(0.0, total.sumsq / double(total.n) - mean * mean);
  double se = std::sqrt(var / double(total.n));
  return {vol * mean, vol * se, total.n, seed};
}

std::vector<int> level_vector(const ZSimplex& s, unsigned k) {
  if (s.dimension() != 2 * k) throw std::invalid_argument("level_vector: dimension must be 2k");
  const OrderedSet& top = s.object(2 * k);
  std::vector<int> levels(top.size(), int(2 * k));
  for (int i = int(2 * k); i >= 0; i--) {
    if (!s.object(i).is_cyclic())
      throw std::invalid_argument("level_vector: objects must be cyclic");
    OrderedMono f = s.composite(i, 2 * k);
    for (Label x : s.object(i).elements()) levels[top.position(f.apply(x))] = i;
  }
  return levels;
}

namespace {

double det_small(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1;
  for (std::size_t c = 0; c < n; c++) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; r++)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; r++) {
      double factor = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; j++) m[r][j] -= factor * m[c][j];
    }
  }
  return det;
}

// signed count of index subsets per level mask: det over indices i_1<...<i_m
// equals (parity of the level sequence) times det of level-sorted rows
struct SubsetTable {
  std::vector<std::pair<std::uint32_t, double>> terms;  // (level bitmask, signed count)
};

SubsetTable build_subset_table(const std::vector<int>& levels, unsigned k) {
  const int n = int(levels.size()), m = 2 * int(k);
  std::map<std::uint32_t, double> acc;
  std::vector<int> idx(m);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      std::vector<int> ls;
      std::uint32_t mask = 0;
      for (int i = 0; i < m; i++) {
        int l = levels[idx[i]];
        if (mask & (1u << l)) return;  // repeated level: zero rows
        mask |= 1u << l;
        ls.push_back(l);
      }
      int inv = 0;
      for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++)
          if (ls[i] > ls[j]) inv++;
      acc[mask] += (inv % 2 == 0) ? 1.0 : -1.0;
      return;
    }
    for (int i = start; i <= n - (m - depth); i++) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  SubsetTable t;
  for (auto& [mask, c] : acc)
    if (c != 0) t.terms.push_back({mask, c});
  return t;
}

double density_from_table(const SubsetTable& table, const std::vector<int>& levels, unsigned k,
                          const std::vector<double>& t) {
  const int m = 2 * int(k);
  std::vector<long long> a(m + 1, 0);
  for (int l : levels) a[l]++;
  double mass = double(a[0]);
  for (int l = 1; l <= m; l++) mass += double(a[l]) * t[l - 1];
  // row(l)[q] = d(t_l / M)/d t_q = delta_{lq}/M - t_l a_q / M^2
  auto row = [&](int l) {
    std::vector<double> r(m);
    double tl = l == 0 ? 1.0 : t[l - 1];
    for (int q = 1; q <= m; q++) r[q - 1] = -tl * double(a[q]) / (mass * mass);
    if (l >= 1) r[l - 1] += 1.0 / mass;
    return r;
  };
  double acc = 0;
  for (const auto& [mask, coeff] : table.terms) {
    std::vector<std::vector<double>> rows;
    for (int l = 0; l <= m; l++)
      if (mask & (1u << l)) rows.push_back(row(l));
    acc += coeff * det_small(std::move(rows));
  }
  double kfact = 1;
  for (unsigned i = 2; i <= k; i++) kfact *= i;
  return (k % 2 == 1 ? -1.0 : 1.0) * kfact * acc;
}

}  // namespace

double form_density(const std::vector<int>& levels, unsigned k, const std::vector<double>& t) {
  if (t.size() != 2 * k) throw std::invalid_argument("form_density: need 2k parameters");
  return density_from_table(build_subset_table(levels, k), levels, k, t);
}

QuadratureResult euler_2form(const ZSimplex& s, int order) {
  std::vector<int> levels = level_vector(s, 1);
  SubsetTable table = build_subset_table(levels, 1);
  auto f = [&](const std::vector<double>& t) { return density_from_table(table, levels, 1, t); };
  double fine = gl_simplex(2, order, f);
  double coarse = gl_simplex(2, std::max(2, order / 2), f);
  return {fine, std::abs(fine - coarse), (long long)order * order, 0};
}

QuadratureResult power_form(const ZSimplex& s, long long samples, std::uint64_t seed,
                            unsigned threads) {
  std::vector<int> levels = level_vector(s, 2);
  SubsetTable table = build_subset_table(levels, 2);
  const long long batch = 1 << 16;
  const std::size_t n_batches = std::size_t((samples + batch - 1) / batch);
  struct Acc {
    double sum = 0, sumsq = 0;
    long long n = 0;
  };
  Acc total = parallel_reduce<Acc>(
      n_batches,
      [&](std::size_t b) {
        Acc a;
        std::mt19937_64 rng(derive_seed(seed, b));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        long long count = std::min(batch, samples - (long long)b * batch);
        std::vector<double> t(4);
        for (long long i = 0; i < count; i++) {
          for (auto& x : t) x = uni(rng);
          std::sort(t.begin(), t.end(), std::greater<>());
          double f = density_from_table(table, levels, 2, t);
          a.sum += f;
          a.sumsq += f * f;
          a.n++;
        }
        return a;
      },
      Acc{},
      [](Acc x, const Acc& y) {
        x.sum += y.sum;
        x.sumsq += y.sumsq;
        x.n += y.n;
        return x;
      },
      threads);
  double vol = 1.0 / 24.0;
  double mean = total.sum / double(total.n);
  double var = std::max(0.0, total.sumsq / double(total.n) - mean * mean);
  double se = std::sqrt(var / double(total.n));
  return {vol * mean, vol * se, total.n, seed};
}

}  // namespace fgc
