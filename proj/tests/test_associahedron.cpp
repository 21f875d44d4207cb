#include "doctest.h"

#include "fgc/associahedron.hpp"

#include <map>
#include <unordered_map>

using namespace fgc;

namespace {

int parity_sign(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); i++)
    for (std::size_t j = i + 1; j < t.size(); j++)
      if (t[i] > t[j]) inv++;
  return inv % 2 == 0 ? 1 : -1;
}

// (a_1,a_2,a_3,b_1) must sit in cyclic order on the region circle
bool head_in_cyclic_order(const std::vector<int>& labels, int n) {
  int q1 = (labels[1] - labels[0] + n) % n;
  int q2 = (labels[2] - labels[0] + n) % n;
  int q3 = (labels[3] - labels[0] + n) % n;
  return 0 < q1 && q1 < q2 && q2 < q3;
}

std::string chain_face_key(const AChain& ch, std::size_t skip) {
  std::string key;
  for (std::size_t i = 0; i < ch.size(); i++) {
    if (i == skip) continue;
    for (const Chord& c : ch[i].chords) key.push_back(char(c.first * 16 + c.second));
    key.push_back(char(0xFF));
  }
  return key;
}

}  // namespace

TEST_CASE("chord validity: spacing and crossing rules") {
  CHECK(is_valid(ChordSet{5, {{0, 2}, {2, 4}}}));
  CHECK_FALSE(is_valid(ChordSet{5, {{0, 1}}}));        // adjacent regions
  CHECK_FALSE(is_valid(ChordSet{5, {{0, 4}}}));        // adjacent mod n
  CHECK_FALSE(is_valid(ChordSet{6, {{0, 2}, {1, 3}}}));  // crossing
  CHECK(is_valid(ChordSet{6, {{0, 2}, {0, 3}}}));      // shared endpoint is fine
}

TEST_CASE("element counts") {
  CHECK(enumerate_chord_sets(4).size() == 3);
  CHECK(enumerate_chord_sets(5).size() == 11);
  CHECK(enumerate_chord_sets(6).size() == 45);
}

TEST_CASE("maximal chain counts") {
  CHECK(maximal_chains(4).size() == 2);
  CHECK(maximal_chains(5).size() == 10);
  CHECK(maximal_chains(6).size() == 84);
  long long n7 = 0;
  for_each_maximal_chain(7, [&](const AChain&) { n7++; });
  CHECK(n7 == 1008);
}

TEST_CASE("maximal chains decrease one chord at a time") {
  for (const AChain& ch : maximal_chains(5)) {
    REQUIRE(ch.size() == 3);
    for (std::size_t i = 0; i < ch.size(); i++) {
      CHECK(int(ch[i].chords.size()) == 2 - int(i));
      if (i > 0)
        CHECK(std::includes(ch[i - 1].chords.begin(), ch[i - 1].chords.end(),
                            ch[i].chords.begin(), ch[i].chords.end()));
    }
  }
}

TEST_CASE("dual tree of a single chord in the pentagon") {
  PlanarTree t = tree_of(ChordSet{5, {{0, 2}}});
  REQUIRE(t.regions.size() == 2);
  std::multiset<std::vector<int>> cells(t.regions.begin(), t.regions.end());
  CHECK(cells.count({0, 1, 2}) == 1);
  CHECK(cells.count({2, 3, 4, 0}) == 1);
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0].chord == Chord{0, 2});
}

TEST_CASE("orientation labels are a permutation and role-independent in sign") {
  for (int n : {5, 7}) {
    for_each_maximal_chain(n, [&](const AChain& ch) {
      std::vector<int> l0 = orientation_labels(ch, 0);
      std::vector<int> l1 = orientation_labels(ch, 1);
      REQUIRE(int(l0.size()) == n);
      std::vector<bool> seen(n, false);
      for (int x : l0) {
        CHECK(!seen.at(x));
        seen[x] = true;
      }
      CHECK(parity_sign(l0) == parity_sign(l1));
    });
  }
}

TEST_CASE("boundary consistency holds for n = 5..8") {
  for (int n : {5, 6, 7, 8})
    CHECK_FALSE(boundary_consistency(n).has_value());
}

TEST_CASE("a sign-flipped chain breaks interior cancellation") {
  std::vector<AChain> chains = maximal_chains(5);
  for (std::size_t flipped = 0; flipped < 2; flipped++) {
    std::unordered_map<std::string, int> sums;
    for (std::size_t c = 0; c < chains.size(); c++) {
      int s = orientation_sign(chains[c]) * (c == 0 && flipped ? -1 : 1);
      for (std::size_t i = 0; i < chains[c].size(); i++)
        sums[chain_face_key(chains[c], i)] += (i % 2 == 0) ? s : -s;
    }
    int boundary_faces = 0, broken_faces = 0;
    for (const auto& [key, sum] : sums) {
      if (std::abs(sum) == 1) boundary_faces++;
      if (std::abs(sum) >= 2) broken_faces++;
    }
    // each of the 10 triangulation edges on the pentagon boundary is hit
    // once; flipping one chain additionally breaks its two interior faces
    CHECK(boundary_faces == 10);
    CHECK(broken_faces == (flipped ? 2 : 0));
  }
}

TEST_CASE("growing-vertex chains biject onto constrained permutations") {
  // the (2k+3)!/6 permutations with (a_1,a_2,a_3,b_1) in cyclic order arise
  // exactly once from each (chain, role) pair, so |B_k| = (2k+3)!/12
  for (unsigned k : {1u, 2u}) {
    const int n = 2 * int(k) + 3;
    long long expect_chains = 1;
    for (int j = 2; j <= n; j++) expect_chains *= j;
    std::vector<SignedChain> bk = b_chains(k);
    CHECK((long long)bk.size() == expect_chains / 12);
    std::set<std::vector<int>> tuples;
    for (const SignedChain& sc : bk) {
      CHECK(sc.sign == orientation_sign(sc.chain));
      for (int role : {0, 1}) {
        std::vector<int> labels = orientation_labels(sc.chain, role);
        CHECK(head_in_cyclic_order(labels, n));
        CHECK(tuples.insert(labels).second);  // never seen twice
      }
    }
    CHECK((long long)tuples.size() == expect_chains / 6);
  }
}

TEST_CASE("angle simplices of growing-vertex chains have sizes 3..2k+3") {
  for (unsigned k : {1u, 2u}) {
    for (const SignedChain& sc : b_chains(k)) {
      for (int role : {0, 1}) {
        ZSimplex s = angle_simplex(sc.chain, role);
        REQUIRE(s.dimension() == 2 * k);
        for (std::size_t i = 0; i <= 2 * k; i++) {
          CHECK(s.object(i).size() == i + 3);
          CHECK(s.object(i).is_cyclic());
        }
        for (std::size_t i = 0; i < 2 * k; i++) CHECK(is_morphism(s.arrow(i)));
      }
    }
  }
}
