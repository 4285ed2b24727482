#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "heitmann/lattice/poset.hpp"
#include "support.hpp"

using namespace heitmann::lattice;

namespace {

// Same order with the points relabelled by `perm` (new index perm[i] for old i).
FinPoset permuted(const FinPoset& p, const std::vector<int>& perm) {
  std::vector<std::string> names(p.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < p.size(); ++i) {
    names[perm[i]] = "q" + std::to_string(perm[i]);
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j)) rel.emplace_back(perm[i], perm[j]);
  }
  return FinPoset::from_relations(names, rel);
}

}  // namespace

TEST_CASE("relations are closed transitively and checked for antisymmetry") {
  auto p = FinPoset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.longest_chain() == 3);
  CHECK(p.covers().size() == 2);
  CHECK_THROWS_AS(FinPoset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(FinPoset::antichain(kMaxPoints + 1), CapacityError);
}

TEST_CASE("closures and interiors") {
  auto p = FinPoset::from_relations({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {2, 3}});
  CHECK(p.down_closure(0b0100) == 0b0111);
  CHECK(p.up_closure(0b0001) == 0b1101);
  CHECK(p.downset_interior(0b1011) == 0b0011);
  CHECK(p.maximal_points() == 0b1000);
  CHECK(p.minimal_points() == 0b0011);
  CHECK(p.is_downset(0b0011));
  CHECK_FALSE(p.is_downset(0b0100));
}

TEST_CASE("induced subposet and compress/expand") {
  auto p = FinPoset::chain(4);
  auto q = p.induced(0b1010);
  CHECK(q.size() == 2);
  CHECK(q.name(0) == "c1");
  CHECK(q.leq(0, 1));
  CHECK(FinPoset::compress(0b1000, 0b1010) == 0b10);
  CHECK(FinPoset::expand(0b10, 0b1010) == 0b1000);
}

TEST_CASE("canonical form is invariant under relabelling and separates non-isomorphic posets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testsupport::random_poset(rng, 1 + trial % 8, 0.4);
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(p) == canonical_form(permuted(p, perm)));
  }
  // The N poset drawn two ways.
  auto n_shape = FinPoset::from_relations({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {1, 3}});
  auto z = FinPoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {2, 1}, {2, 3}});
  CHECK(isomorphic(n_shape, z));
  CHECK_FALSE(isomorphic(FinPoset::chain(3), FinPoset::antichain(3)));
  CHECK_FALSE(isomorphic(n_shape, FinPoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("canonical form agrees with brute-force isomorphism on small posets") {
  std::mt19937_64 rng(11);
  auto brute = [](const FinPoset& a, const FinPoset& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < a.size() && ok; ++i)
        for (int j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testsupport::random_poset(rng, 5, 0.35);
    auto b = testsupport::random_poset(rng, 5, 0.35);
    CHECK(isomorphic(a, b) == brute(a, b));
  }
}
