#pragma once

#include "fgc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fgc {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  std::map<std::string, long long> counts;
  std::uint64_t seed = 0;

  bool pass() const;
  CheckResult& add(std::string name, std::string expected, std::string actual);
};

// delta c_Z^k = 0 on `trials` random (2k+1)-simplices of cyclic sets and
// delta s_k = c_Z^k o J on trials/2 random all-linear 2k-simplices
SuiteResult verify_cyclic_cocycle(unsigned k, long long trials, std::uint64_t seed,
                                  unsigned threads = 1);

// delta c_Fat^k = 0 on `trials` random (2k+1)-chains of edge collapses
SuiteResult verify_fat_cocycle(unsigned k, long long trials, std::uint64_t seed,
                               unsigned threads = 1);

// element and maximal-chain counts of A_n plus interior-face orientation
// cancellation (the latter for 5 <= n <= 9)
SuiteResult verify_associahedron(int n);

}  // namespace fgc
