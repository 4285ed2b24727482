#include <doctest.h>

#include <random>

#include "heitmann/errors.hpp"
#include "heitmann/poly/ideal.hpp"
#include "poly_support.hpp"

using namespace heitmann::poly;

namespace {

RingPtr qxy() { return make_ring(0, {"x", "y"}); }
Poly P(const RingPtr& r, const char* s) { return parse_poly(r, s); }

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("arithmetic and printing") {
  auto r = qxy();
  CHECK((P(r, "x+y") + Poly(r)) == P(r, "x+y"));
  CHECK((P(r, "x+y") * P(r, "x-y")) == P(r, "x^2 - y^2"));
  CHECK(P(r, "3/2*x^2*y - y + 1").to_string() == "3/2*x^2*y - y + 1");
  CHECK(P(r, "(x+1)^3").to_string() == "x^3 + 3*x^2 + 3*x + 1");
  CHECK(P(r, "x/2 + x/2") == P(r, "x"));
  CHECK(P(r, "-(y - x)") == P(r, "x - y"));
  CHECK(P(r, "0").is_zero());

  auto f2 = make_ring(2, {"x"});
  CHECK(P(f2, "(x+1)^2") == P(f2, "x^2+1"));
  auto f5 = make_ring(5, {"x"});
  CHECK(P(f5, "x/2").to_string() == "3*x");

  CHECK(P(r, "x*y + 1").substitute(1, P(r, "x")) == P(r, "x^2 + 1"));
}

TEST_CASE("malformed input is rejected") {
  auto r = qxy();
  CHECK_THROWS_AS(parse_poly(r, "x +"), heitmann::InputError);
  CHECK_THROWS_AS(parse_poly(r, "z"), heitmann::InputError);
  CHECK_THROWS_AS(parse_poly(r, "x/y"), heitmann::InputError);
  CHECK_THROWS_AS(parse_poly(r, "(x"), heitmann::InputError);
  CHECK_THROWS_AS(make_ring(4, {"x"}), heitmann::InputError);
  CHECK_THROWS_AS(make_ring(0, {"x", "x"}), heitmann::InputError);
  CHECK(parse_poly_list(r, "x, (x+y)^2, y").size() == 3);
  CHECK(parse_poly_list(r, "  ").empty());
}

TEST_CASE("groebner examples") {
  auto r = qxy();
  const Budget b;
  CHECK(strings(groebner(r, {P(r, "x")}, false, b).basis) == std::vector<std::string>{"x"});
  CHECK(strings(groebner(r, {P(r, "x+y"), P(r, "x-y")}, false, b).basis) == std::vector<std::string>{"y", "x"});
  CHECK(strings(groebner(r, {P(r, "1")}, false, b).basis) == std::vector<std::string>{"1"});
  // Characteristic 2 collapses x+y and x−y.
  auto f2 = make_ring(2, {"x", "y"});
  CHECK(groebner(f2, {P(f2, "x+y"), P(f2, "x-y")}, false, b).basis.size() == 1);
}

TEST_CASE("tracked groebner reproduces its basis from the generators") {
  std::mt19937_64 rng(7);
  auto r = qxy();
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = testsupport::random_polys(rng, r, 3, 3);
    auto gb = groebner(r, gens, true, Budget{});
    for (std::size_t i = 0; i < gb.basis.size(); ++i) CHECK(dot(gb.cofactors[i], gens) == gb.basis[i]);
    // Reduced: nothing reduces further, and generators reduce to zero.
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
      std::vector<Poly> others = gb.basis;
      others.erase(others.begin() + static_cast<long>(i));
      CHECK(normal_form(gb.basis[i], others) == gb.basis[i]);
      CHECK(gb.basis[i].lead_coeff() == 1);
    }
    for (const auto& g : gens) CHECK(normal_form(g, gb.basis).is_zero());
    auto again = groebner(r, gb.basis, false, Budget{});
    CHECK(strings(again.basis) == strings(gb.basis));
  }
}

TEST_CASE("budget turns runaway computations into errors") {
  auto r = make_ring(0, {"x", "y", "z"});
  std::vector<Poly> gens{P(r, "x^3*y - z^2"), P(r, "y^3*z - x^2"), P(r, "z^3*x - y^2")};
  Budget tiny{3, 60};
  CHECK_THROWS_AS(groebner(r, gens, false, tiny), heitmann::ResourceError);
  Budget low_degree{50000, 4};
  CHECK_THROWS_AS(groebner(r, gens, false, low_degree), heitmann::ResourceError);
}

TEST_CASE("ideal membership") {
  auto qx = make_ring(0, {"x"});
  Ideal i(qx, {P(qx, "x"), P(qx, "1+x")});
  auto w = ideal_member(Poly::constant(qx, 1), i);
  REQUIRE(w);
  CHECK(witness_holds(*w, i.gens()));
  CHECK(w->cofactors[0] == P(qx, "-1"));
  CHECK(w->cofactors[1] == P(qx, "1"));

  auto zero = ideal_member(Poly(qx), i);
  REQUIRE(zero);
  for (const auto& c : zero->cofactors) CHECK(c.is_zero());

  CHECK_FALSE(ideal_member(P(qx, "x"), Ideal(qx, {P(qx, "x^2")})));
}

TEST_CASE("radical membership") {
  auto qx = make_ring(0, {"x"});
  auto w = radical_member(P(qx, "x"), Ideal(qx, {P(qx, "x^2")}));
  REQUIRE(w);
  CHECK(w->exponent == 2);
  CHECK(witness_holds(*w, {P(qx, "x^2")}));
  CHECK_FALSE(radical_member(P(qx, "1"), Ideal(qx, {P(qx, "x")})));

  auto r = qxy();
  auto s = radical_member(P(r, "x+y"), Ideal(r, {P(r, "x"), P(r, "y")}));
  REQUIRE(s);
  CHECK(s->exponent == 1);

  // Closure under sums and squares on random data.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    auto gens = testsupport::random_polys(rng, r, 2, 2);
    Ideal I(r, gens);
    Poly f = gens[0] * testsupport::random_poly(rng, r, 1);
    Poly g = gens[1].pow(2);
    CHECK(radical_member(f, I));
    CHECK(radical_member(f + g, I));
    Poly h = testsupport::random_poly(rng, r, 2);
    CHECK(radical_member(h, I).has_value() == radical_member(h.pow(2), I).has_value());
  }
}

TEST_CASE("quotients and saturation") {
  auto r = qxy();
  auto q = ideal_quotient(Ideal(r, {P(r, "x*y")}), P(r, "x"));
  CHECK(strings(q.basis().basis) == std::vector<std::string>{"y"});
  CHECK(ideal_quotient(Ideal(r, {}), P(r, "x")).basis().basis.empty());

  auto s = saturation(Ideal(r, {P(r, "x^2*y")}), P(r, "x"));
  CHECK(strings(s.ideal.basis().basis) == std::vector<std::string>{"y"});
  CHECK(s.exponent == 2);

  auto qx = make_ring(0, {"x"});
  auto unit = saturation(Ideal(qx, {P(qx, "x^2")}), P(qx, "x"));
  CHECK(unit.ideal.is_unit());
  CHECK(unit.exponent == 2);

  // (I : f^e) == (I : f^{e+1}) on random data.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I(r, testsupport::random_polys(rng, r, 2, 2));
    Poly f = testsupport::random_poly(rng, r, 1, 2);
    if (f.is_zero()) continue;
    auto sat = saturation(I, f);
    auto at_e = I;
    for (unsigned k = 0; k < sat.exponent; ++k) at_e = ideal_quotient(at_e, f);
    auto next = ideal_quotient(at_e, f);
    for (const auto& g : next.gens()) CHECK(at_e.contains(g));
    for (const auto& g : sat.ideal.gens()) CHECK(at_e.contains(g));
  }
}

TEST_CASE("intersection and affine dimension") {
  auto r = qxy();
  auto i = intersection(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "y")}));
  CHECK(strings(i.basis().basis) == std::vector<std::string>{"x*y"});
  CHECK(affine_dimension(Ideal(r, {})) == 2);
  CHECK(affine_dimension(Ideal(r, {P(r, "x*y")})) == 1);
  CHECK(affine_dimension(Ideal(r, {P(r, "x"), P(r, "y-1")})) == 0);
  CHECK(affine_dimension(Ideal(r, {P(r, "x"), P(r, "x+1")})) == -1);
}
