#pragma once

#include "fgc/cyclic.hpp"
#include "fgc/rational.hpp"

#include <cstdint>
#include <vector>

namespace fgc {

// sizes a_0 = |C_0| and a_i = |C_i| - |C_{i-1}| of a 2k-simplex; the total
// mass at simplex parameter t (with t_0 = 1) is M_t = sum a_j t_j
struct MassProfile {
  std::vector<long long> a;  // 2k+1 entries, a_0 >= 1, a_j >= 0
};

struct QuadratureResult {
  double estimate = 0;
  double error_bound = 0;  // Richardson difference (grid) or standard error (MC)
  long long size = 0;      // grid points or samples
  std::uint64_t seed = 0;  // 0 for deterministic grid schemes
};

// exact value 1/((2k)! a_0 (a_0+a_1) ... (a_0+...+a_{2k}))
Rational simplex_integral_exact(unsigned k, const MassProfile& p);

// integral of prod dt / M_t^{2k+1} over 1 >= t_1 >= ... >= t_{2k} >= 0
QuadratureResult simplex_integral_grid(unsigned k, const MassProfile& p, int order = 32);
QuadratureResult simplex_integral_mc(unsigned k, const MassProfile& p, long long samples,
                                     std::uint64_t seed, unsigned threads = 1);

// level of each element of C_{2k} (stored order): the first i with the
// element in the image of C_i
std::vector<int> level_vector(const ZSimplex& s, unsigned k);

// pulled-back 2k-form density at parameter t (t_1..t_{2k}); k=1 is the Euler
// 2-form, k=2 its square times 2!; exposed for the pointwise invariance tests
double form_density(const std::vector<int>& levels, unsigned k, const std::vector<double>& t);

// grid integral of the Euler 2-form density against c_z on a 2-simplex
QuadratureResult euler_2form(const ZSimplex& s, int order = 32);

// Monte Carlo integral of the 4-form density on a 4-simplex (k = 2)
QuadratureResult power_form(const ZSimplex& s, long long samples, std::uint64_t seed,
                            unsigned threads = 1);

// Gauss-Legendre nodes and weights on [0,1]
void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace fgc
