#include <doctest.h>

#include <random>

#include "heitmann/lattice/dimension.hpp"
#include "heitmann/lattice/glue.hpp"
#include "heitmann/lattice/spectra.hpp"
#include "support.hpp"

using namespace heitmann::lattice;

TEST_CASE("spectral subsets on small posets") {
  auto a = testsupport::boolean_lattice(3);
  auto s = spec_subsets(a);
  CHECK(s.max == a.top());
  CHECK(s.min == a.top());
  CHECK(s.jspec == a.top());
  CHECK(s.Jspec == a.top());

  auto c = testsupport::chain_lattice(2);  // p < q
  auto sc = spec_subsets(c);
  CHECK(sc.max == 0b10);
  CHECK(sc.min == 0b01);
  CHECK(sc.Jspec == 0b10);
  CHECK(sc.jspec == 0b10);

  Lattice h(heitmann_example(3, 2));
  auto sh = spec_subsets(h);
  CHECK(popcount(sh.Jspec) == 4);
  CHECK(sh.Jspec == sh.max);
  CHECK(kdim(subspace_lattice(h, sh.Jspec).target) == 0);
}

TEST_CASE("jspec equals Jspec on random finite lattices") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    auto s = spec_subsets(t);
    CHECK(s.jspec == s.Jspec);
    CHECK(s.Jspec == s.max);
  }
}

TEST_CASE("subspace lattices") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    CHECK(subspace_lattice(t, t.top()).is_identity());
    CHECK(subspace_lattice(t, 0).target.trivial());
    for (Mask a : t.elements()) {
      // Z = D(a) gives T/(a=1).
      CHECK(isomorphic(subspace_lattice(t, a).target.base(), force(t, a).target.base()));
      // The Krull-boundary quotient keeps exactly the topological boundary of D(a).
      CHECK(boundary_quotient(t, BoundaryKind::KrullUpper, a).image == topological_boundary(t, a));
    }
    // Closed sets: intersections of closed sets are the complements of joins.
    for (Mask a : t.elements())
      for (Mask b : t.elements()) {
        const Mask va = t.top() & ~a, vb = t.top() & ~b;
        CHECK((va & vb) == kill(t, t.join(a, b)).image);
        CHECK((va | vb) == kill(t, t.meet(a, b)).image);
      }
  }
}

TEST_CASE("gluing spectra") {
  auto x = FinPoset::from_relations({"a", "b"}, {{0, 1}});
  auto y = FinPoset::from_relations({"c"}, {});
  auto disjoint = glue_spectra({x, y}, SubspaceKind::Open);
  CHECK(disjoint.size() == 3);
  CHECK(isomorphic(glue_spectra({x, x}, SubspaceKind::Open), x));
  auto fan_chain = heitmann_example(3, 3);
  CHECK(fan_chain.size() == 7);
  CHECK(popcount(fan_chain.maximal_points()) == 4);
  CHECK(fan_chain.longest_chain() == 4);
  // {b} is not open in a < b.
  auto z = FinPoset::from_relations({"b"}, {});
  auto w = FinPoset::from_relations({"b", "d"}, {{0, 1}});
  CHECK_THROWS_AS(glue_spectra({x, w}, SubspaceKind::Open), ValidationError);
  CHECK_NOTHROW(glue_spectra({x, z}, SubspaceKind::Closed));
}

TEST_CASE("spectral gluing is dual to lattice gluing") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    // Cover a random poset by two opens U and V.
    auto p = testsupport::random_poset(rng, 6, 0.35);
    Lattice t(p);
    const auto e = t.elements();
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    const Mask u = e[pick(rng)];
    const Mask v = p.down_closure(t.top() & ~u) | e[pick(rng)];
    auto xu = p.induced(u), xv = p.induced(v);
    auto spectral = glue_spectra({xu, xv}, SubspaceKind::Open);
    CHECK(isomorphic(spectral, p));
    Lattice lu(xu), lv(xv);
    Diagram d{GlueKind::Filter, {lu, lv}, {Overlap{0, 1, FinPoset::compress(u & v, u), FinPoset::compress(u & v, v)}}};
    CHECK(isomorphic(glue(d).lattice.base(), spectral));
  }
}
