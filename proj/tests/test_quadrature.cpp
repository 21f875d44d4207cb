#include "doctest.h"

#include "fgc/cyclic.hpp"
#include "fgc/parallel.hpp"
#include "fgc/quadrature.hpp"
#include "fgc/random_gen.hpp"

#include <cmath>

using namespace fgc;

namespace {

ZSimplex worked_simplex() {
  OrderedSet c0 = OrderedSet::cyclic({0});
  OrderedSet c1 = OrderedSet::cyclic({0, 1});
  OrderedSet c2 = OrderedSet::cyclic({0, 2, 1});
  return ZSimplex({OrderedMono::inclusion(c0, c1), OrderedMono::inclusion(c1, c2)});
}

double rat(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

TEST_CASE("exact simplex integral closed form") {
  CHECK(simplex_integral_exact(1, {{1, 1, 1}}) == Rational(1, 12));
  CHECK(simplex_integral_exact(1, {{2, 0, 0}}) == Rational(1, 16));  // 1/(2a^3), a=2
  CHECK(simplex_integral_exact(2, {{1, 1, 1, 1, 1}}) == Rational(1, 2880));
}

TEST_CASE("grid quadrature hits the closed form") {
  QuadratureResult q = simplex_integral_grid(1, {{1, 1, 1}});
  CHECK(std::abs(q.estimate - 1.0 / 12) < 1e-6);
  QuadratureResult q2 = simplex_integral_grid(2, {{1, 1, 1, 1, 1}});
  CHECK(std::abs(q2.estimate - 1.0 / 2880) < 1e-6);

  Rng rng(2);
  for (int trial = 0; trial < 25; trial++) {
    MassProfile p{{1 + (long long)(rng() % 5), (long long)(rng() % 4), (long long)(rng() % 4)}};
    CHECK(std::abs(simplex_integral_grid(1, p).estimate - rat(simplex_integral_exact(1, p))) <
          1e-6);
  }
}

TEST_CASE("grid error shrinks fast under refinement") {
  MassProfile p{{1, 2, 3}};
  double exact = rat(simplex_integral_exact(1, p));
  double e4 = std::abs(simplex_integral_grid(1, p, 4).estimate - exact);
  double e8 = std::abs(simplex_integral_grid(1, p, 8).estimate - exact);
  CHECK(e8 < e4 / 4);  // observed order well above 2
}

TEST_CASE("monte carlo is unbiased and thread-count invariant") {
  MassProfile p{{1, 1, 1}};
  double exact = rat(simplex_integral_exact(1, p));
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 5; seed++) {
    QuadratureResult q = simplex_integral_mc(1, p, 1 << 18, seed);
    CHECK(std::abs(q.estimate - exact) < 5 * q.error_bound);
    if (std::abs(q.estimate - exact) < 3 * q.error_bound) within++;
  }
  CHECK(within >= 4);

  QuadratureResult a = simplex_integral_mc(2, {{1, 2, 1, 0, 3}}, 1 << 18, 99, 1);
  QuadratureResult b = simplex_integral_mc(2, {{1, 2, 1, 0, 3}}, 1 << 18, 99, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.error_bound == b.error_bound);
}

TEST_CASE("level vector of the worked simplex") {
  CHECK(level_vector(worked_simplex(), 1) == std::vector<int>{0, 2, 1});
}

TEST_CASE("euler 2-form reproduces c_z") {
  QuadratureResult q = euler_2form(worked_simplex());
  CHECK(std::abs(q.estimate - 1.0 / 12) < 1e-6);

  // size-degenerate simplex: identically zero
  OrderedSet c = OrderedSet::cyclic({0, 1, 2});
  ZSimplex degen({OrderedMono::identity(c), OrderedMono::identity(c)});
  CHECK(euler_2form(degen).estimate == 0);
  CHECK(c_z(degen, 1) == 0);

  Rng rng(3);
  for (int trial = 0; trial < 20; trial++) {
    ZSimplex s = random_growing_simplex(rng, 2, 8);
    CHECK(std::abs(euler_2form(s).estimate - rat(c_z(s, 1))) < 1e-6);
  }
}

TEST_CASE("4-form monte carlo reproduces c_z at k=2") {
  Rng rng(5);
  for (int trial = 0; trial < 3; trial++) {
    ZSimplex s = random_growing_simplex(rng, 4, 8);
    QuadratureResult q = power_form(s, 1 << 19, derive_seed(17, trial));
    CHECK(std::abs(q.estimate - rat(c_z(s, 2))) < 5 * q.error_bound);
  }
}

TEST_CASE("density is invariant under rotation of the weight labels") {
  Rng rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 20; trial++) {
    for (unsigned k : {1u, 2u}) {
      std::size_t m = 2 * k;
      std::vector<int> levels(m + 2 + rng() % 3);
      for (std::size_t i = 0; i < levels.size(); i++)
        levels[i] = i <= m ? int(i) : int(rng() % (m + 1));  // every level occupied
      std::vector<double> t(m);
      for (auto& x : t) x = uni(rng);
      std::sort(t.begin(), t.end(), std::greater<>());
      double d = form_density(levels, k, t);
      std::vector<int> rotated(levels);
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      CHECK(std::abs(form_density(rotated, k, t) - d) < 1e-12);
    }
  }
}

TEST_CASE("weights sum to one at every sample point") {
  Rng rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 50; trial++) {
    std::size_t m = 2 + rng() % 4;
    std::vector<int> levels(m + 1 + rng() % 4);
    for (std::size_t i = 0; i < levels.size(); i++)
      levels[i] = i <= m ? int(i) : int(rng() % (m + 1));
    std::vector<double> t(m + 1, 1.0);  // t_0 = 1
    for (std::size_t i = 1; i <= m; i++) t[i] = uni(rng);
    double mass = 0;
    for (int l : levels) mass += t[l];
    double total = 0;
    for (int l : levels) total += t[l] / mass;  // w(x) = mu_t(x) / M_t
    CHECK(std::abs(total - 1.0) < 1e-14);
  }
}

TEST_CASE("gauss-legendre weights integrate polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre_01(6, x, w);
  double sum = 0, cube = 0;
  for (int i = 0; i < 6; i++) {
    sum += w[i];
    cube += w[i] * x[i] * x[i] * x[i];
  }
  CHECK(std::abs(sum - 1.0) < 1e-14);
  CHECK(std::abs(cube - 0.25) < 1e-14);
}

TEST_CASE("deterministic parallel reduction") {
  auto chunk = [](std::size_t i) { return double(i) * 1e-7; };
  auto comb = [](double a, double b) { return a + b; };
  double s1 = parallel_reduce<double>(1000, chunk, 0.0, comb, 1);
  double s4 = parallel_reduce<double>(1000, chunk, 0.0, comb, 4);
  CHECK(s1 == s4);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}
