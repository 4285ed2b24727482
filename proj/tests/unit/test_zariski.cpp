#include <doctest.h>

#include <random>

#include "heitmann/errors.hpp"
#include "heitmann/zariski/zariski.hpp"
#include "poly_support.hpp"

using namespace heitmann::zariski;
using heitmann::poly::make_ring;
using heitmann::poly::parse_poly;
using heitmann::poly::parse_poly_list;

namespace {

ZarElem D(const RingPtr& r, const char* gens) { return ZarElem{r, parse_poly_list(r, gens)}; }

bool same_radical(const RadQuotientRing& a, const RadQuotientRing& b) {
  for (const auto& g : a.modulus.gens())
    if (!b.nilpotent(g)) return false;
  for (const auto& g : b.modulus.gens())
    if (!a.nilpotent(g)) return false;
  return true;
}

}  // namespace

TEST_CASE("Zariski lattice relations") {
  auto r = make_ring(0, {"x", "y"});
  auto A = ambient(r);
  CHECK(zar_equal(A, D(r, "x*y"), zar_meet(D(r, "x"), D(r, "y"))));
  CHECK(zar_leq(D(r, "x+y"), zar_join(D(r, "x"), D(r, "y"))).holds);
  CHECK_FALSE(zar_leq(zar_join(D(r, "x"), D(r, "y")), D(r, "x+y")).holds);
  auto qx = make_ring(0, {"x"});
  CHECK(zar_equal(ambient(qx), D(qx, "x^2"), D(qx, "x")));

  auto res = zar_leq(D(r, "x^3, x*y"), D(r, "x"));
  REQUIRE(res.holds);
  for (const auto& w : res.witnesses) CHECK(w);
}

TEST_CASE("zar_leq is a preorder compatible with join and meet") {
  std::mt19937_64 rng(3);
  auto r = make_ring(0, {"x", "y"});
  auto A = ambient(r);
  for (int trial = 0; trial < 10; ++trial) {
    ZarElem u{r, testsupport::random_polys(rng, r, 2, 2)};
    ZarElem v{r, testsupport::random_polys(rng, r, 1, 2)};
    ZarElem w{r, testsupport::random_polys(rng, r, 1, 2)};
    CHECK(zar_leq(A, u, u).holds);
    CHECK(zar_leq(A, u, zar_join(u, v)).holds);
    CHECK(zar_leq(A, zar_meet(u, v), u).holds);
    if (zar_leq(A, u, v).holds && zar_leq(A, v, w).holds) CHECK(zar_leq(A, u, w).holds);
    // Distributivity of the presentation.
    CHECK(zar_equal(A, zar_meet(u, zar_join(v, w)), zar_join(zar_meet(u, v), zar_meet(u, w))));
  }
}

TEST_CASE("Krull boundary examples") {
  auto qx = make_ring(0, {"x"});
  auto A = ambient(qx);
  CHECK(krull_boundary_ideal(A, parse_poly_list(qx, "1")).trivial());
  auto bx = krull_boundary_ideal(A, parse_poly_list(qx, "x"));
  CHECK_FALSE(bx.trivial());
  CHECK(same_radical(bx, quotient_ring(qx, parse_poly_list(qx, "x"))));
  CHECK(krull_boundary_ideal(quotient_ring(qx, parse_poly_list(qx, "x^2")), parse_poly_list(qx, "x")).trivial());
}

TEST_CASE("Heitmann boundary under the Jacobson policy") {
  auto qx = make_ring(0, {"x"});
  auto A = ambient(qx);
  CHECK(same_radical(heitmann_boundary_ideal(A, parse_poly_list(qx, "x")),
                     krull_boundary_ideal(A, parse_poly_list(qx, "x"))));
  // (J(0) : 0) = A, so H(0) is everything.
  CHECK(heitmann_boundary_ideal(A, parse_poly_list(qx, "0")).trivial());

  auto field = make_ring(0, {});
  CHECK(heitmann_boundary_ideal(ambient(field), parse_poly_list(field, "0")).trivial());
  CHECK(heitmann_boundary_ideal(ambient(field), parse_poly_list(field, "2")).trivial());

  RadQuotientRing odd = A;
  odd.policy = JacobsonPolicy::Unspecified;
  CHECK_THROWS_AS(heitmann_boundary_ideal(odd, parse_poly_list(qx, "x")), heitmann::MathRefusal);

  std::mt19937_64 rng(8);
  auto r = make_ring(0, {"x", "y"});
  for (int trial = 0; trial < 8; ++trial) {
    auto R = quotient_ring(r, testsupport::random_polys(rng, r, 1, 2));
    auto j = testsupport::random_polys(rng, r, 1, 1);
    CHECK(same_radical(heitmann_boundary_ideal(R, j), krull_boundary_ideal(R, j)));
  }
}

TEST_CASE("boundaries depend only on the radical of the modulus") {
  std::mt19937_64 rng(21);
  auto r = make_ring(0, {"x", "y"});
  for (int trial = 0; trial < 8; ++trial) {
    auto gens = testsupport::random_polys(rng, r, 2, 2);
    auto squared = gens;
    for (auto& g : squared) g = g.pow(2);
    squared.push_back(gens[0] * gens[1]);
    auto x = testsupport::random_poly(rng, r, 1);
    CHECK(same_radical(krull_boundary_ideal(quotient_ring(r, gens), {x}),
                       krull_boundary_ideal(quotient_ring(r, squared), {x})));
  }
}

TEST_CASE("iterated boundaries") {
  auto qx = make_ring(0, {"x"});
  auto A = ambient(qx);
  CHECK_FALSE(iterated_boundary(A, parse_poly_list(qx, "x")).trivial());
  CHECK(iterated_boundary(A, parse_poly_list(qx, "x, 1+x")).trivial());
  CHECK(iterated_boundary(A, parse_poly_list(qx, "1")).trivial());
  // The hand-written certificate m = (1, 1), a = (1+x, -1) also checks out.
  auto xs = parse_poly_list(qx, "x, 1+x");
  auto as = parse_poly_list(qx, "1+x, -1");
  CHECK(collapse_polynomial(qx, xs, {1, 1}, as).is_zero());
}

TEST_CASE("dimension certificates") {
  auto field = make_ring(0, {});
  auto zero = dim_cert_search(ambient(field), parse_poly_list(field, "0"));
  REQUIRE(zero);
  CHECK(zero->ms == std::vector<unsigned>{1});
  CHECK(dim_cert_search(ambient(field), parse_poly_list(field, "3")));

  auto qx = make_ring(0, {"x"});
  auto A = ambient(qx);
  auto cert = dim_cert_search(A, parse_poly_list(qx, "x, 1+x"));
  REQUIRE(cert);
  CHECK(collapse_polynomial(qx, cert->xs, cert->ms, cert->as).is_zero());
  CHECK(verify_dim_cert(A, *cert));
  CHECK(verify_complementary(A, cert->bs, cert->xs).holds);
  CHECK_FALSE(dim_cert_search(A, parse_poly_list(qx, "x")));
  CHECK_FALSE(verify_complementary(A, parse_poly_list(qx, "0, 0"), parse_poly_list(qx, "x, 1+x")).holds);

  // Tampering breaks verification.
  auto bad = *cert;
  bad.as[0] += parse_poly(qx, "x");
  CHECK_FALSE(verify_dim_cert(A, bad));
}

TEST_CASE("certificates for random sequences in Q[x,y]") {
  std::mt19937_64 rng(13);
  auto r = make_ring(0, {"x", "y"});
  auto A = ambient(r);
  for (int trial = 0; trial < 10; ++trial) {
    auto xs = testsupport::random_polys(rng, r, 3, 2);
    auto cert = dim_cert_search(A, xs);
    REQUIRE(cert);
    CHECK(collapse_polynomial(r, cert->xs, cert->ms, cert->as).is_zero());
    CHECK(verify_dim_cert(A, *cert));
  }
  // Two variables need three elements: x, y alone do not collapse.
  CHECK_FALSE(dim_cert_search(A, parse_poly_list(r, "x, y")));
}

TEST_CASE("upper and lower boundary routes agree") {
  std::mt19937_64 rng(17);
  auto r = make_ring(0, {"x", "y"});
  for (int trial = 0; trial < 10; ++trial) {
    auto R = quotient_ring(r, testsupport::random_polys(rng, r, 2, 2));
    auto x = testsupport::random_poly(rng, r, 2);
    CHECK(lower_boundary_collapses(R, x) == krull_boundary_ideal(R, {x}).trivial());
  }
  auto qx = make_ring(0, {"x"});
  CHECK(lower_boundary_collapses(quotient_ring(qx, parse_poly_list(qx, "x^2 - x")), parse_poly(qx, "x")));
  CHECK_FALSE(lower_boundary_collapses(ambient(qx), parse_poly(qx, "x")));
}

TEST_CASE("degree bound is enforced") {
  auto r = make_ring(0, {"x", "y"});
  auto xs = parse_poly_list(r, "x^3*y, y^3 + x, x^2*y^2 + 1");
  CHECK_THROWS_AS(dim_cert_search(ambient(r), xs, 2), heitmann::ResourceError);
}
