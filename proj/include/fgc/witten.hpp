#pragma once

#include "fgc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fgc {

// One enumeration-vs-closed-form comparison.
struct Report {
  std::string name;
  Rational exact = 0;        // value obtained by enumeration
  Rational closed_form = 0;  // the closed-form constant it must equal
  bool match = false;        // exact == closed_form and all sub-checks hold
  std::map<std::string, long long> counts;  // enumeration sizes
  std::map<std::string, Rational> stats;    // named sub-values (expectations etc.)
  std::vector<std::string> failures;        // descriptions of failed sub-checks
};

// c_Fat^k evaluated on the chain B_k by full enumeration; closed form
// (-1)^k k!/(2k+1)!
Report eval_bk(unsigned k);

// E(X) over all (2k+3)!/6 placements keeping (a_1,a_2,a_3,b_1) in cyclic
// order; also checks the Y-distribution and its denominator identity
Report stat_x(unsigned k);

// value of the 0-cell cocycle z^k on the half-sized associahedron
Report half_disk(unsigned k);

// value of z^k on the collar of the associahedron boundary
Report collar(unsigned k);

// half_disk + collar = (-1)^{k+1}(k+1)!/(2k+2)! = -1/2 eval_bk
Report kappa_constant(unsigned k);

struct WeightSpec {
  // (k_i, n_i) with k_i strictly increasing, n_i >= 1
  std::vector<std::pair<unsigned, unsigned>> terms;
};

// leading Kontsevich-cycle coefficients in the c_Fat and kappa-tilde bases
std::pair<Rational, Rational> kontsevich_coeff(const WeightSpec& w);

}  // namespace fgc
