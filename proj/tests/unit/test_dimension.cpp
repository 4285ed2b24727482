#include <doctest.h>

#include <random>

#include "heitmann/lattice/dimension.hpp"
#include "heitmann/lattice/spectra.hpp"
#include "support.hpp"

using namespace heitmann::lattice;
using testsupport::boolean_lattice;
using testsupport::chain_lattice;

namespace {
constexpr Mask kX = 0b01;  // middle element of the chain 0 < x < 1
}

TEST_CASE("boundary quotient examples") {
  auto c = chain_lattice(2);
  CHECK(boundary_quotient(c, BoundaryKind::KrullUpper, c.top()).target.trivial());
  CHECK(boundary_quotient(c, BoundaryKind::KrullUpper, 0).target.trivial());
  CHECK(boundary_set(c, BoundaryKind::KrullUpper, kX) == ElemSet{0, kX});
  CHECK(boundary_quotient(c, BoundaryKind::KrullUpper, kX).target.count_elements() == 2);
}

TEST_CASE("kdim examples, three strategies") {
  CHECK(kdim_upper(Lattice()) == -1);
  CHECK(kdim_lower(Lattice()) == -1);
  CHECK(kdim_chain(Lattice()) == -1);
  for (int n = 1; n <= 4; ++n) {
    CHECK(kdim(boolean_lattice(n)) == 0);
    CHECK(kdim_lower(boolean_lattice(n)) == 0);
  }
  for (int k = 1; k <= 5; ++k) {
    // Chain lattice with k+1 elements has k points.
    CHECK(kdim_upper(chain_lattice(k)) == k - 1);
    CHECK(kdim_lower(chain_lattice(k)) == k - 1);
    CHECK(kdim_chain(chain_lattice(k)) == k - 1);
  }
}

TEST_CASE("kdim predicate and opposite invariance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    const int d = kdim(t);
    CHECK(kdim_at_most(t, d));
    if (d >= 0) CHECK_FALSE(kdim_at_most(t, d - 1));
    CHECK(kdim(opposite(t)) == d);
  }
}

TEST_CASE("global witness search examples") {
  auto b = boolean_lattice(2);
  for (Mask x : b.elements()) {
    auto w = kdim_global_check(b, {x});
    REQUIRE(w.has_value());
    CHECK(b.meet((*w)[0], x) == 0);
    CHECK(b.join((*w)[0], x) == b.top());
  }
  auto c = chain_lattice(2);
  CHECK_FALSE(kdim_global_check(c, {kX}).has_value());
  auto w = kdim_global_check(c, {kX, c.top()});
  REQUIRE(w.has_value());
  CHECK(c.meet((*w)[0], kX) == 0);
}

TEST_CASE("Heyting and Brouwer formulas on small cases") {
  auto b = boolean_lattice(2);
  for (Mask x : b.elements()) CHECK(heyting_dim_formula(b, {x}) == b.top());
  auto c = chain_lattice(2);
  CHECK(heyting_dim_formula(c, {kX}) == kX);
  for (Mask x0 : c.elements())
    for (Mask x1 : c.elements()) {
      CHECK(heyting_dim_formula(c, {x0, x1}) == c.top());
      CHECK(brouwer_dim_formula(c, {x0, x1}) == 0);
    }
}

TEST_CASE("the witness search and the Heyting formula agree sequence by sequence") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = testsupport::random_lattice(rng, 5);
    const auto e = t.elements();
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Mask> xs(1 + rep % 3);
      for (auto& x : xs) x = e[pick(rng)];
      CHECK(kdim_global_check(t, xs).has_value() == (heyting_dim_formula(t, xs) == t.top()));
    }
  }
}

TEST_CASE("jdim and hdim examples") {
  CHECK(hdim(Lattice()) == -1);
  CHECK(jdim(boolean_lattice(3)) == 0);
  CHECK(hdim(boolean_lattice(3)) == 0);
  CHECK(jdim(chain_lattice(2)) == 0);
  for (int len = 1; len <= 3; ++len) {
    Lattice h(heitmann_example(3, len));
    CHECK(kdim(h) == len);
    CHECK(jdim(h) == 0);
    CHECK(hdim(h) == 0);
  }
}

TEST_CASE("dimension ordering and locality on random lattices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    const int h = hdim(t), j = jdim(t), k = kdim(t);
    const auto tprime = kill(t, jacobson_zero(t)).target;
    CHECK(h == hdim_all(t));
    CHECK(h <= j);
    CHECK(j <= kdim(tprime));
    CHECK(kdim(tprime) <= k);
    CHECK(h == j);
    CHECK(hdim(tprime) == h);
    CHECK((j <= 0) == (kdim(tprime) <= 0));
    // Quotient monotonicity.
    for (Mask x : t.elements()) {
      CHECK(kdim(kill(t, x).target) <= k);
      CHECK(kdim(force(t, x).target) <= k);
      CHECK(hdim(kill(t, x).target) <= h);
    }
    // Locality for two ideals ↓a, ↓b with a ∧ b = 0.
    const auto e = t.elements();
    for (Mask a : e)
      for (Mask b : e) {
        if (t.meet(a, b) != 0) continue;
        CHECK(k == std::max(kdim(kill(t, a).target), kdim(kill(t, b).target)));
        CHECK(h == std::max(hdim(kill(t, a).target), hdim(kill(t, b).target)));
      }
  }
}

TEST_CASE("boundary identities and regularity") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    const auto e = t.elements();
    for (Mask x : e) {
      const ElemSet k = boundary_set(t, BoundaryKind::KrullUpper, x);
      CHECK(annihilator(t, k) == ElemSet{0});
      for (Mask y : e)
        for (auto kind : {BoundaryKind::KrullUpper, BoundaryKind::Heitmann}) {
          auto lhs = intersect(boundary_set(t, kind, x), boundary_set(t, kind, y));
          auto rhs = intersect(boundary_set(t, kind, t.join(x, y)), boundary_set(t, kind, t.meet(x, y)));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("generator-restricted dimension checks") {
  auto b = boolean_lattice(2);
  CHECK(kdim_over(b, {0b01, 0b10}) == 0);
  CHECK(hdim_over(b, {0b01, 0b10}) == 0);
  auto c = chain_lattice(2);
  CHECK(kdim_over(c, {kX}) == 1);
  CHECK_THROWS_AS(kdim_over(b, {0b01}), ValidationError);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = testsupport::random_lattice(rng, 5);
    CHECK(kdim_over(t, t.elements()) == kdim(t));
    CHECK(kdim_over(t, t.join_irreducibles()) == kdim(t));
    CHECK(hdim_over(t, t.join_irreducibles()) == hdim(t));
  }
}
