#include "heitmann/poly/ideal.hpp"

#include <string>

#include "heitmann/errors.hpp"

namespace heitmann::poly {

bool witness_holds(const MembershipWitness& w, const std::vector<Poly>& gens) {
  if (w.cofactors.size() != gens.size()) return false;
  const RingPtr& ring = w.element.ring();
  Poly lhs(ring);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!w.cofactors[i].is_zero()) lhs += w.cofactors[i] * gens[i];
  return lhs == w.element.pow(w.exponent);
}

void check_witness(const MembershipWitness& w, const std::vector<Poly>& gens) {
  if (!witness_holds(w, gens))
    throw MathRefusal("membership witness for " + w.element.to_string() + " does not verify");
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens, Budget budget)
    : ring_(std::move(ring)), budget_(budget), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.ring() && !g.ring()->same_as(*ring_)) throw InputError("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [&] { cache_->gb = groebner(ring_, gens_, true, budget_); });
  return cache_->gb;
}

Poly Ideal::normal_form(const Poly& f) const { return poly::normal_form(f, basis().basis); }
bool Ideal::contains(const Poly& f) const { return normal_form(f).is_zero(); }
bool Ideal::is_unit() const { return contains(Poly::constant(ring_, 1)); }

std::optional<MembershipWitness> ideal_member(const Poly& f, const Ideal& ideal) {
  const auto& gb = ideal.basis();
  Reduction r = reduce(f, gb.basis);
  if (!r.remainder.is_zero()) return std::nullopt;
  MembershipWitness w{f, 1, express(gb, r)};
  check_witness(w, ideal.gens());
  return w;
}

namespace {

Ideal in_ring(const RingPtr& target, const std::vector<Poly>& gens, const Budget& b) {
  return Ideal(target, gens, b);
}

std::vector<Poly> lift_all(const std::vector<Poly>& ps, const RingPtr& target) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(p.map_to(target, variable_map(*p.ring(), *target)));
  return out;
}

}  // namespace

std::optional<MembershipWitness> radical_member(const Poly& f, const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (f.is_zero()) return MembershipWitness{f, 1, std::vector<Poly>(ideal.gens().size(), Poly(ring))};
  if (!ideal.contains(f)) {
    const std::string t = fresh_name(*ring, "t");
    auto ext = make_ring(ring->characteristic(), [&] {
      auto v = ring->vars();
      v.push_back(t);
      return v;
    }());
    auto gens = lift_all(ideal.gens(), ext);
    const Poly tf = Poly::variable(ext, ring->nvars()) * f.map_to(ext, variable_map(*ring, *ext));
    gens.push_back(Poly::constant(ext, 1) - tf);
    if (!Ideal(ext, gens, ideal.budget()).is_unit()) return std::nullopt;
  }
  // Some power lies in I; the least one is found by increasing k.
  Poly power = f;
  for (unsigned k = 1;; ++k) {
    if (power.total_degree() > ideal.budget().max_degree)
      throw ResourceError("radical exponent search exceeded the degree budget");
    if (auto w = ideal_member(power, ideal)) {
      w->element = f;
      w->exponent = k;
      check_witness(*w, ideal.gens());
      return w;
    }
    power = power * f;
  }
}

std::vector<Poly> eliminate_block(const Ideal& ideal, int count, const RingPtr& target) {
  std::vector<Poly> out;
  std::vector<int> map(ideal.ring()->nvars(), -1);
  for (int i = count; i < ideal.ring()->nvars(); ++i) map[i] = target->index_of(ideal.ring()->var(i));
  for (const auto& g : ideal.basis().basis) {
    bool free = true;
    for (int i = 0; i < count && free; ++i) free = g.degree_in(i) == 0;
    if (free) out.push_back(g.map_to(target, map));
  }
  return out;
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  const std::string t = fresh_name(*ring, "t");
  auto ext = with_elimination_vars(ring, {t});
  const Poly tv = Poly::variable(ext, 0);
  const Poly one = Poly::constant(ext, 1);
  std::vector<Poly> gens;
  for (const auto& g : lift_all(a.gens(), ext)) gens.push_back(tv * g);
  for (const auto& g : lift_all(b.gens(), ext)) gens.push_back((one - tv) * g);
  return in_ring(ring, eliminate_block(Ideal(ext, gens, a.budget()), 1, ring), a.budget());
}

namespace {

// Exact division of g by f, known to be divisible.
Poly divide_exact(const Poly& g, const Poly& f) {
  Reduction r = reduce(g, {f});
  if (!r.remainder.is_zero()) throw MathRefusal("internal: inexact division in ideal quotient");
  return r.quotients[0];
}

}  // namespace

Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
  const RingPtr& ring = ideal.ring();
  if (f.is_zero()) return Ideal(ring, {Poly::constant(ring, 1)}, ideal.budget());
  Ideal both = intersection(ideal, Ideal(ring, {f}, ideal.budget()));
  std::vector<Poly> gens;
  for (const auto& g : both.gens()) gens.push_back(divide_exact(g, f));
  return Ideal(ring, gens, ideal.budget());
}

Saturation saturation(const Ideal& ideal, const Poly& f) {
  const RingPtr& ring = ideal.ring();
  const std::string t = fresh_name(*ring, "t");
  auto ext = with_elimination_vars(ring, {t});
  auto gens = lift_all(ideal.gens(), ext);
  gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, 0) * f.map_to(ext, variable_map(*ring, *ext)));
  Ideal sat(ring, eliminate_block(Ideal(ext, gens, ideal.budget()), 1, ring), ideal.budget());
  // Least e with f^e·h ∈ I for every generator h of the saturation.
  unsigned e = 0;
  Poly fe = Poly::constant(ring, 1);
  for (const auto& h : sat.gens()) {
    while (!ideal.contains(fe * h)) {
      fe = fe * f;
      if (++e > static_cast<unsigned>(ideal.budget().max_degree) ||
          fe.total_degree() > ideal.budget().max_degree)
        throw ResourceError("saturation exponent exceeded the degree budget");
    }
  }
  return Saturation{sat, e};
}

Ideal sum(const Ideal& a, const std::vector<Poly>& extra) {
  auto gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), gens, a.budget());
}

Ideal sum(const Ideal& a, const Ideal& b) { return sum(a, b.gens()); }

int affine_dimension(const Ideal& ideal) {
  const auto& basis = ideal.basis().basis;
  const int n = ideal.ring()->nvars();
  if (ideal.is_unit()) return -1;
  // Largest set of variables containing no leading monomial's support.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : basis) {
      const Monomial& lm = g.lead_monomial();
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (lm.e[i] && !((mask >> i) & 1u)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace heitmann::poly
