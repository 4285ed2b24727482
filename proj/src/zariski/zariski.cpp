#include "heitmann/zariski/zariski.hpp"

#include <string>

#include "heitmann/errors.hpp"

namespace heitmann::zariski {

using poly::Budget;
using poly::saturation;
using poly::sum;

RadQuotientRing ambient(const RingPtr& ring) { return RadQuotientRing{Ideal(ring, {})}; }

RadQuotientRing quotient_ring(const RingPtr& ring, std::vector<Poly> modulus) {
  return RadQuotientRing{Ideal(ring, std::move(modulus))};
}

ZarElem zar_join(const ZarElem& u, const ZarElem& v) {
  ZarElem out = u;
  out.gens.insert(out.gens.end(), v.gens.begin(), v.gens.end());
  return out;
}

ZarElem zar_meet(const ZarElem& u, const ZarElem& v) {
  ZarElem out{u.ring, {}};
  for (const auto& a : u.gens)
    for (const auto& b : v.gens) out.gens.push_back(a * b);
  return out;
}

LeqResult zar_leq(const RadQuotientRing& r, const ZarElem& u, const ZarElem& v) {
  const Ideal target = sum(r.modulus, v.gens);
  LeqResult out{true, {}};
  for (const auto& f : u.gens) {
    out.witnesses.push_back(poly::radical_member(f, target));
    if (!out.witnesses.back()) out.holds = false;
  }
  return out;
}

LeqResult zar_leq(const ZarElem& u, const ZarElem& v) { return zar_leq(ambient(u.ring), u, v); }

bool zar_equal(const RadQuotientRing& r, const ZarElem& u, const ZarElem& v) {
  return zar_leq(r, u, v).holds && zar_leq(r, v, u).holds;
}

BoundaryStep krull_boundary_step(const RadQuotientRing& r, const std::vector<Poly>& j) {
  const RingPtr& ring = r.ring();
  const Budget& budget = r.modulus.budget();
  std::optional<Ideal> transporter;
  std::vector<unsigned> exponents;
  for (const auto& x : j) {
    auto sat = saturation(r.modulus, x);
    exponents.push_back(sat.exponent);
    transporter = transporter ? poly::intersection(*transporter, sat.ideal) : sat.ideal;
  }
  // An empty j gives (D(0) : 0) = A.
  if (!transporter) transporter = Ideal(ring, {Poly::constant(ring, 1)}, budget);
  std::vector<Poly> gens = r.modulus.gens();
  gens.insert(gens.end(), j.begin(), j.end());
  gens.insert(gens.end(), transporter->gens().begin(), transporter->gens().end());
  return BoundaryStep{RadQuotientRing{Ideal(ring, gens, budget), r.policy}, j, *transporter, exponents};
}

RadQuotientRing krull_boundary_ideal(const RadQuotientRing& r, const std::vector<Poly>& j) {
  return krull_boundary_step(r, j).result;
}

RadQuotientRing heitmann_boundary_ideal(const RadQuotientRing& r, const std::vector<Poly>& j) {
  if (r.policy != JacobsonPolicy::JacobsonRing)
    throw MathRefusal("no J-membership decision for this ring: only Jacobson rings are supported");
  return krull_boundary_ideal(r, j);
}

RadQuotientRing iterated_boundary(const RadQuotientRing& r, const std::vector<Poly>& xs) {
  RadQuotientRing cur = r;
  for (const auto& x : xs) cur = krull_boundary_ideal(cur, {x});
  return cur;
}

bool lower_boundary_collapses(const RadQuotientRing& r, const Poly& x) {
  auto sat = saturation(r.modulus, x);
  return sum(sat.ideal, {x}).is_unit();
}

Poly collapse_polynomial(const RingPtr& ring, const std::vector<Poly>& xs, const std::vector<unsigned>& ms,
                         const std::vector<Poly>& as) {
  if (xs.size() != ms.size() || xs.size() != as.size()) throw InputError("certificate lists differ in length");
  Poly e = Poly::constant(ring, 1);
  for (std::size_t k = xs.size(); k-- > 0;) e = xs[k].pow(ms[k]) * (e + as[k] * xs[k]);
  return e;
}

std::vector<Poly> complements(const RingPtr& ring, const std::vector<Poly>& xs, const std::vector<unsigned>& ms,
                              const std::vector<Poly>& as) {
  if (xs.empty()) return {};
  const std::size_t l = xs.size() - 1;
  std::vector<Poly> bs(xs.size(), Poly(ring));
  bs[l] = Poly::constant(ring, 1) + as[l] * xs[l];
  for (std::size_t k = l; k > 0; --k) bs[k - 1] = xs[k].pow(ms[k]) * bs[k] + as[k - 1] * xs[k - 1];
  return bs;
}

std::optional<DimCert> dim_cert_search(const RadQuotientRing& r, const std::vector<Poly>& xs, int degree_bound) {
  const RingPtr& ring = r.ring();
  if (xs.empty()) {
    // ℓ = −1: the ring itself must be trivial.
    auto w = poly::ideal_member(Poly::constant(ring, 1), r.modulus);
    if (!w) return std::nullopt;
    return DimCert{{}, {}, {}, {}, *w};
  }
  std::vector<BoundaryStep> steps;
  RadQuotientRing cur = r;
  for (const auto& x : xs) {
    steps.push_back(krull_boundary_step(cur, {x}));
    cur = steps.back().result;
  }
  if (!cur.trivial()) return std::nullopt;

  const std::size_t n = xs.size();
  std::vector<unsigned> ms(n);
  std::vector<Poly> as(n, Poly(ring));
  Poly e = Poly::constant(ring, 1);
  for (std::size_t k = n; k-- > 0;) {
    const BoundaryStep& st = steps[k];
    auto w = poly::ideal_member(e, st.result.modulus);
    if (!w) throw MathRefusal("internal: boundary element escaped its ideal");
    // Generators of I_{k+1} are [gens(I_k), x_k, gens(S_k)].
    const std::size_t base = k == 0 ? r.modulus.gens().size() : steps[k - 1].result.modulus.gens().size();
    const auto& gens = st.result.modulus.gens();
    // Zero generators are dropped by Ideal, so locate x_k by value.
    std::size_t xi = base;
    Poly c(ring);
    if (!xs[k].is_zero()) {
      if (xi >= gens.size() || gens[xi] != xs[k]) throw MathRefusal("internal: boundary generator layout");
      c = w->cofactors[xi];
    }
    as[k] = -c;
    ms[k] = st.exponents[0];
    e = xs[k].pow(ms[k]) * (e + as[k] * xs[k]);
    if (e.total_degree() > degree_bound)
      throw ResourceError("collapse certificate exceeds the degree bound " + std::to_string(degree_bound));
  }
  auto identity = poly::ideal_member(e, r.modulus);
  if (!identity) throw MathRefusal("internal: assembled collapse identity does not reduce to zero");
  DimCert cert{xs, ms, as, complements(ring, xs, ms, as), *identity};
  if (!verify_dim_cert(r, cert)) throw MathRefusal("internal: assembled certificate does not verify");
  return cert;
}

ComplementaryCheck verify_complementary(const RadQuotientRing& r, const std::vector<Poly>& bs,
                                        const std::vector<Poly>& xs) {
  if (bs.size() != xs.size()) throw InputError("complementary sequences must have equal length");
  const RingPtr& ring = r.ring();
  ComplementaryCheck out{true, {}};
  auto record = [&](const Poly& f, const std::vector<Poly>& rhs) {
    out.witnesses.push_back(poly::radical_member(f, sum(r.modulus, rhs)));
    if (!out.witnesses.back()) out.holds = false;
  };
  if (xs.empty()) {
    record(Poly::constant(ring, 1), {});
    return out;
  }
  record(bs[0] * xs[0], {});
  for (std::size_t i = 1; i < xs.size(); ++i) record(bs[i] * xs[i], {bs[i - 1], xs[i - 1]});
  record(Poly::constant(ring, 1), {bs.back(), xs.back()});
  return out;
}

bool verify_dim_cert(const RadQuotientRing& r, const DimCert& c) {
  const RingPtr& ring = r.ring();
  if (c.xs.size() != c.ms.size() || c.xs.size() != c.as.size() || c.xs.size() != c.bs.size()) return false;
  const Poly e = c.xs.empty() ? Poly::constant(ring, 1) : collapse_polynomial(ring, c.xs, c.ms, c.as);
  if (c.identity.element != e || !poly::witness_holds(c.identity, r.modulus.gens())) return false;
  const auto expected = complements(ring, c.xs, c.ms, c.as);
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (expected[k] != c.bs[k]) return false;
  return verify_complementary(r, c.bs, c.xs).holds;
}

}  // namespace heitmann::zariski
