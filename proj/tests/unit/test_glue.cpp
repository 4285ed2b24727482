#include <doctest.h>

#include <random>

#include "heitmann/lattice/glue.hpp"
#include "heitmann/lattice/io.hpp"
#include "heitmann/lattice/spectra.hpp"
#include "support.hpp"

using namespace heitmann::lattice;

TEST_CASE("single-piece diagram glues to itself") {
  auto t = testsupport::chain_lattice(3);
  Diagram d{GlueKind::Ideal, {t}, {}};
  auto g = glue(d);
  CHECK(isomorphic(g.lattice.base(), t.base()));
}

TEST_CASE("Boolean 4 from the quotients by an atom and its complement") {
  auto t = testsupport::boolean_lattice(2);
  auto d = decompose(t, {0b01, 0b10}, GlueKind::Ideal);
  CHECK(d.pieces.size() == 2);
  CHECK(isomorphic(glue(d).lattice.base(), t.base()));
}

TEST_CASE("decompose refuses a non-covering family") {
  auto t = testsupport::boolean_lattice(2);
  CHECK_THROWS_AS(decompose(t, {0b01}, GlueKind::Ideal), ValidationError);
  CHECK_THROWS_AS(decompose(t, {0b01}, GlueKind::Filter), ValidationError);
}

TEST_CASE("Heitmann diagram: fan and chain glued along the shared open point") {
  auto fan = FinPoset::from_relations({"m", "f1", "f2", "f3"}, {{0, 1}, {0, 2}, {0, 3}});
  auto chain = FinPoset::from_relations({"m", "c1", "c2"}, {{0, 1}, {1, 2}});
  Lattice a(fan), b(chain);
  Diagram d{GlueKind::Filter, {a, b}, {Overlap{0, 1, 0b0001, 0b001}}};
  auto g = glue(d);
  CHECK(isomorphic(g.lattice.base(), heitmann_example(3, 2)));
  CHECK(g.lattice.base().maximal_points() != 0);
}

TEST_CASE("glue rejects incompatible overlaps") {
  auto p = FinPoset::from_relations({"a", "b"}, {{0, 1}});
  auto q = FinPoset::from_relations({"a", "b"}, {});
  Lattice a(p), b(q);
  // Both sides keep {a, b} but order it differently.
  CHECK_THROWS_AS(glue(Diagram{GlueKind::Filter, {a, b}, {Overlap{0, 1, a.top(), b.top()}}}), ValidationError);
  // Overlap names differ.
  auto r = FinPoset::from_relations({"a", "c"}, {});
  CHECK_THROWS_AS(glue(Diagram{GlueKind::Filter, {Lattice(q), Lattice(r)}, {Overlap{0, 1, 0b11, 0b11}}}),
                  ValidationError);
}

TEST_CASE("decompose then glue is the identity up to isomorphism") {
  std::mt19937_64 rng(31);
  int tried = 0;
  for (int trial = 0; trial < 200 && tried < 60; ++trial) {
    auto t = testsupport::random_lattice(rng, 6);
    const auto e = t.elements();
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    const GlueKind kind = trial % 2 ? GlueKind::Ideal : GlueKind::Filter;
    std::vector<Mask> s;
    for (int k = 0; k < 1 + trial % 3; ++k) s.push_back(e[pick(rng)]);
    Mask cover = kind == GlueKind::Ideal ? t.top() : 0;
    for (Mask x : s) cover = kind == GlueKind::Ideal ? (cover & x) : (cover | x);
    if (cover != (kind == GlueKind::Ideal ? t.bottom() : t.top())) continue;
    ++tried;
    auto d = decompose(t, s, kind);
    auto g = glue(d);
    CHECK(isomorphic(g.lattice.base(), t.base()));
    // Round-trip through JSON as well.
    auto back = diagram_from_json(diagram_to_json(d));
    CHECK(isomorphic(glue(back).lattice.base(), t.base()));
  }
  CHECK(tried >= 30);
}
