#include "common.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

Vec claim_generators(const RadQuotientRing& r, const Vec& extra) {
  Vec out = r.modulus.gens();
  for (const auto& e : extra)
    if (!e.is_zero()) out.push_back(e);
  return out;
}

std::optional<Claim> try_claim(const std::string& label, const RadQuotientRing& r, const Poly& f, const Vec& extra,
                               bool radical) {
  Vec gens = claim_generators(r, extra);
  Ideal ideal(r.ring(), gens, r.modulus.budget());
  auto w = radical ? poly::radical_member(f, ideal) : poly::ideal_member(f, ideal);
  if (!w) return std::nullopt;
  return Claim{label, std::move(gens), std::move(*w)};
}

Claim claim(const std::string& label, const RadQuotientRing& r, const Poly& f, const Vec& extra, bool radical) {
  auto c = try_claim(label, r, f, extra, radical);
  if (!c) throw MathRefusal("hypothesis fails: " + label);
  return std::move(*c);
}

bool claim_holds(const Claim& c) { return poly::witness_holds(c.witness, c.generators); }

bool unimodular(const RadQuotientRing& r, const Vec& v) {
  return poly::sum(r.modulus, v).is_unit();
}

namespace detail {

std::optional<std::vector<Vec>> cofactors_over(const RingPtr& ring, const Poly& f, const std::vector<Vec>& groups,
                                               const poly::Budget& budget) {
  Vec flat;
  std::vector<std::vector<int>> where;
  for (const auto& g : groups) {
    where.emplace_back();
    for (const auto& p : g) {
      where.back().push_back(p.is_zero() ? -1 : static_cast<int>(flat.size()));
      if (!p.is_zero()) flat.push_back(p);
    }
  }
  auto w = poly::ideal_member(f, Ideal(ring, flat, budget));
  if (!w) return std::nullopt;
  std::vector<Vec> out;
  for (const auto& idx : where) {
    out.emplace_back();
    for (int i : idx) out.back().push_back(i < 0 ? Poly(ring) : w->cofactors[i]);
  }
  return out;
}

zariski::BoundaryStep heitmann_step(const RadQuotientRing& r, const Poly& x) {
  if (r.policy != zariski::JacobsonPolicy::JacobsonRing)
    throw MathRefusal("no J-membership decision for this ring: only Jacobson rings are supported");
  return zariski::krull_boundary_step(r, {x});
}

RadQuotientRing with_modulus(const RadQuotientRing& r, const Vec& extra) {
  return RadQuotientRing{poly::sum(r.modulus, extra), r.policy};
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<long>(n)); }

Poly lift(const Poly& f, const RingPtr& target) { return f.map_to(target, poly::variable_map(*f.ring(), *target)); }

Vec lift(const Vec& v, const RingPtr& target) {
  Vec out;
  for (const auto& f : v) out.push_back(f.ring() ? lift(f, target) : Poly(target));
  return out;
}

RadQuotientRing localize(const RadQuotientRing& r, const Poly& a) {
  const RingPtr& base = r.ring();
  auto ext = poly::with_elimination_vars(base, {poly::fresh_name(*base, "u")});
  Vec gens = lift(r.modulus.gens(), ext);
  gens.push_back(Poly::variable(ext, 0) * lift(a, ext) - Poly::constant(ext, 1));
  return RadQuotientRing{Ideal(ext, gens, r.modulus.budget()), r.policy};
}

RadQuotientRing contract(const RadQuotientRing& loc, const RingPtr& base, zariski::JacobsonPolicy policy) {
  return RadQuotientRing{Ideal(base, poly::eliminate_block(loc.modulus, 1, base), loc.modulus.budget()), policy};
}

Poly clear_denominator(const Poly& s, const Poly& a, const RingPtr& base) {
  const int n = s.degree_in(0);
  std::vector<int> map(s.ring()->nvars(), -1);
  for (int i = 1; i < s.ring()->nvars(); ++i) map[i] = base->index_of(s.ring()->var(i));
  std::vector<std::vector<poly::Term>> parts(n + 1);
  for (const auto& t : s.terms()) {
    poly::Term u = t;
    const int j = u.m.e[0];
    u.m.deg -= u.m.e[0];
    u.m.e[0] = 0;
    parts[j].push_back(u);
  }
  Poly out(base);
  for (int j = 0; j <= n; ++j) {
    if (parts[j].empty()) continue;
    Poly sj = Poly::from_terms(s.ring(), std::move(parts[j])).map_to(base, map);
    out += sj * a.pow(static_cast<unsigned>(n - j));
  }
  return out;
}

}  // namespace detail
}  // namespace heitmann::genred
