#include "fgc/verify.hpp"

#include "fgc/associahedron.hpp"
#include "fgc/cyclic.hpp"
#include "fgc/fatgraph.hpp"
#include "fgc/parallel.hpp"
#include "fgc/random_gen.hpp"

#include <stdexcept>

namespace fgc {

bool SuiteResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckResult& SuiteResult::add(std::string name, std::string expected, std::string actual) {
  checks.push_back({std::move(name), expected, actual, expected == actual});
  return checks.back();
}

namespace {

struct TrialTally {
  long long failures = 0;
  long long first_failure = -1;

  static TrialTally combine(TrialTally a, const TrialTally& b) {
    if (a.first_failure < 0) a.first_failure = b.first_failure;
    a.failures += b.failures;
    return a;
  }
};

template <typename TrialFn>
void run_trials(SuiteResult& suite, const std::string& name, long long trials, std::uint64_t seed,
                unsigned threads, TrialFn&& trial) {
  TrialTally tally = parallel_reduce<TrialTally>(
      std::size_t(trials),
      [&](std::size_t i) {
        TrialTally t;
        Rng rng(derive_seed(seed, i));
        if (!trial(rng)) {
          t.failures = 1;
          t.first_failure = (long long)i;
        }
        return t;
      },
      TrialTally{}, TrialTally::combine, threads);
  std::string actual = tally.failures == 0
                           ? "0 failures"
                           : std::to_string(tally.failures) + " failures (first at trial " +
                                 std::to_string(tally.first_failure) + ")";
  suite.add(name, "0 failures", actual);
  suite.counts[name + " trials"] = trials;
}

}  // namespace

SuiteResult verify_cyclic_cocycle(unsigned k, long long trials, std::uint64_t seed,
                                  unsigned threads) {
  if (k < 1 || k > 3) throw std::invalid_argument("verify_cyclic_cocycle: k out of bounds");
  if (trials < 1) throw std::invalid_argument("verify_cyclic_cocycle: need trials >= 1");
  SuiteResult suite;
  suite.name = "cyclic-cocycle k=" + std::to_string(k);
  suite.seed = seed;
  run_trials(suite, "delta c_Z = 0", trials, seed, threads, [k](Rng& rng) {
    ZSimplex s = random_cyclic_simplex(rng, 2 * k + 1);
    return coboundary([k](const ZSimplex& f) { return c_z(f, k); }, s) == 0;
  });
  run_trials(suite, "delta s_k = c_Z o J", std::max<long long>(1, trials / 2),
             derive_seed(seed, 0x5f5f), threads, [k](Rng& rng) {
               ZSimplex s = random_linear_simplex(rng, 2 * k);
               Rational lhs = coboundary([k](const ZSimplex& f) { return s_k(f, k); }, s);
               return lhs == c_z(s.as_cyclic(), k);
             });
  return suite;
}

SuiteResult verify_fat_cocycle(unsigned k, long long trials, std::uint64_t seed, unsigned threads) {
  if (k < 1 || k > 2) throw std::invalid_argument("verify_fat_cocycle: k out of bounds");
  if (trials < 1) throw std::invalid_argument("verify_fat_cocycle: need trials >= 1");
  SuiteResult suite;
  suite.name = "fat-cocycle k=" + std::to_string(k);
  suite.seed = seed;
  run_trials(suite, "delta c_Fat = 0", trials, seed, threads, [k](Rng& rng) {
    std::size_t n_vertices = 2 * std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    FatSimplex s = random_collapse_simplex(rng, 2 * k + 1, n_vertices);
    return coboundary([k](const FatSimplex& f) { return c_fat(f, k); }, s) == 0;
  });
  return suite;
}

namespace {

// Kirkman-Cayley count of i-element non-crossing chord sets of an n-gon
long long dissection_count(int n, int i) {
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0ll;
    long long r = 1;
    for (long long j = 1; j <= b; j++) r = r * (a - b + j) / j;
    return r;
  };
  return binom(n - 3, i) * binom(n + i - 1, i) / (i + 1);
}

}  // namespace

SuiteResult verify_associahedron(int n) {
  if (n < 4 || n > 11) throw std::invalid_argument("verify_associahedron: need 4 <= n <= 11");
  SuiteResult suite;
  suite.name = "associahedron n=" + std::to_string(n);

  long long expect_elems = 0;
  for (int i = 0; i <= n - 3; i++) expect_elems += dissection_count(n, i);
  long long elems = (long long)enumerate_chord_sets(n).size();
  suite.add("element count", std::to_string(expect_elems), std::to_string(elems));
  suite.counts["elements"] = elems;

  long long expect_chains = dissection_count(n, n - 3);  // Catalan(n-2)
  for (long long j = 2; j <= n - 3; j++) expect_chains *= j;
  long long chains = 0;
  for_each_maximal_chain(n, [&](const AChain&) { chains++; });
  suite.add("maximal chain count", std::to_string(expect_chains), std::to_string(chains));
  suite.counts["chains"] = chains;

  if (n >= 5 && n <= 9) {
    auto fail = boundary_consistency(n);
    suite.add("boundary consistency", "ok", fail ? *fail : "ok");
  }
  return suite;
}

}  // namespace fgc
