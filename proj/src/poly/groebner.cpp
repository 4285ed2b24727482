#include "heitmann/poly/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>
#include <string>

#include "heitmann/errors.hpp"

namespace heitmann::poly {

Budget Budget::from_env() {
  Budget b;
  const char* env = std::getenv("HEITMANN_BUDGET");
  if (!env || !*env) return b;
  std::string s(env);
  try {
    if (s.find('=') == std::string::npos) {
      b.max_pairs = std::stoul(s);
      return b;
    }
    std::size_t start = 0;
    while (start < s.size()) {
      std::size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      const std::string item = s.substr(start, end - start);
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw InputError("bad HEITMANN_BUDGET entry " + item);
      const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "pairs") {
        b.max_pairs = std::stoul(value);
      } else if (key == "degree") {
        b.max_degree = std::stoi(value);
      } else {
        throw InputError("unknown HEITMANN_BUDGET key " + key);
      }
      start = end + 1;
    }
  } catch (const std::logic_error&) {
    throw InputError("cannot read HEITMANN_BUDGET=" + s);
  }
  return b;
}

namespace {

int find_divisor(const std::vector<Poly>& basis, const Monomial& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].lead_monomial().divides(m)) return static_cast<int>(i);
  return -1;
}

}  // namespace

Reduction reduce(const Poly& f, const std::vector<Poly>& basis) {
  const RingPtr& ring = f.ring();
  Reduction r{std::vector<Poly>(basis.size(), Poly(ring)), Poly(ring)};
  Poly rest = f;
  std::vector<Term> rem;
  while (!rest.is_zero()) {
    const Term lt = rest.lead();
    const int i = find_divisor(basis, lt.m);
    if (i < 0) {
      rem.push_back(lt);
      rest -= Poly::term(ring, lt.m, lt.c);
      continue;
    }
    const Monomial q = lt.m / basis[i].lead_monomial();
    mpq_class c = lt.c * ring->inverse(basis[i].lead_coeff());
    ring->normalize(c);
    rest.sub_mul(q, c, basis[i]);
    r.quotients[i] += Poly::term(ring, q, c);
  }
  r.remainder = Poly::from_terms(ring, std::move(rem));
  return r;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) { return reduce(f, basis).remainder; }

std::vector<Poly> express(const GroebnerBasis& gb, const Reduction& r) {
  std::vector<Poly> out(gb.gens.size(), Poly(gb.ring));
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (r.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gb.gens.size(); ++j)
      if (!gb.cofactors[i][j].is_zero()) out[j] += r.quotients[i] * gb.cofactors[i][j];
  }
  return out;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const std::vector<Poly>& gens, bool track, const Budget& budget)
      : ring_(ring), gens_(gens), track_(track), budget_(budget) {}

  GroebnerBasis run() {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (gens_[k].is_zero()) continue;
      std::vector<Poly> cof;
      if (track_) {
        cof.assign(gens_.size(), Poly(ring_));
        cof[k] = Poly::constant(ring_, 1);
      }
      add(gens_[k], std::move(cof));
    }
    while (!pairs_.empty()) {
      if (++processed_ > budget_.max_pairs)
        throw ResourceError("Groebner basis exceeded " + std::to_string(budget_.max_pairs) + " S-pairs");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        return ring_->compare(a.lcm, b.lcm) < 0;
      });
      const Pair p = *best;
      pairs_.erase(best);
      std::vector<Poly> cof;
      Poly s = spoly(p, cof);
      reduce_tracked(s, cof);
      if (!s.is_zero()) add(s, std::move(cof));
      if (polys_.back().is_one() && active_.back()) break;
    }
    return finish();
  }

 private:
  Poly spoly(const Pair& p, std::vector<Poly>& cof) {
    const Poly& f = polys_[p.i];
    const Poly& g = polys_[p.j];
    const Monomial mf = p.lcm / f.lead_monomial(), mg = p.lcm / g.lead_monomial();
    const mpq_class cf = ring_->inverse(f.lead_coeff()), cg = ring_->inverse(g.lead_coeff());
    Poly s = f.mul_term(mf, cf);
    s.sub_mul(mg, cg, g);
    if (track_) {
      cof.assign(gens_.size(), Poly(ring_));
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (!cofs_[p.i][k].is_zero()) cof[k] += cofs_[p.i][k].mul_term(mf, cf);
        if (!cofs_[p.j][k].is_zero()) cof[k].sub_mul(mg, cg, cofs_[p.j][k]);
      }
    }
    return s;
  }

  // Full reduction against the active basis, keeping cofactors in step.
  void reduce_tracked(Poly& h, std::vector<Poly>& cof) {
    std::vector<Term> rem;
    while (!h.is_zero()) {
      const Term lt = h.lead();
      int div = -1;
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k] && polys_[k].lead_monomial().divides(lt.m)) {
          div = static_cast<int>(k);
          break;
        }
      if (div < 0) {
        rem.push_back(lt);
        h -= Poly::term(ring_, lt.m, lt.c);
        continue;
      }
      const Monomial q = lt.m / polys_[div].lead_monomial();
      mpq_class c = lt.c * ring_->inverse(polys_[div].lead_coeff());
      ring_->normalize(c);
      h.sub_mul(q, c, polys_[div]);
      if (track_)
        for (std::size_t k = 0; k < gens_.size(); ++k)
          if (!cofs_[div][k].is_zero()) cof[k].sub_mul(q, c, cofs_[div][k]);
    }
    h = Poly::from_terms(ring_, std::move(rem));
    if (!h.is_zero()) {
      const mpq_class inv = ring_->inverse(h.lead_coeff());
      h = h.scaled(inv);
      if (track_)
        for (auto& c : cof) c = c.scaled(inv);
    }
  }

  // Gebauer–Möller update with the new element h.
  void add(Poly h, std::vector<Poly> cof) {
    if (h.total_degree() > budget_.max_degree)
      throw ResourceError("Groebner basis element of degree " + std::to_string(h.total_degree()) +
                          " exceeds the degree budget " + std::to_string(budget_.max_degree));
    const int hi = static_cast<int>(polys_.size());
    const Monomial lh = h.lead_monomial();
    polys_.push_back(std::move(h));
    cofs_.push_back(std::move(cof));
    active_.push_back(true);

    std::vector<Pair> c;
    for (int g = 0; g < hi; ++g)
      if (active_[g]) c.push_back(Pair{g, hi, lcm(polys_[g].lead_monomial(), lh)});
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const bool coprime = polys_[c[a].i].lead_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < c.size() && !dominated; ++b) dominated = c[b].lcm.divides(c[a].lcm);
        for (const auto& e : d) {
          if (dominated) break;
          dominated = e.lcm.divides(c[a].lcm);
        }
      }
      if (coprime || !dominated) d.push_back(c[a]);
    }
    std::vector<Pair> fresh;
    for (const auto& p : d)
      if (!polys_[p.i].lead_monomial().coprime(lh)) fresh.push_back(p);
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].lead_monomial(), lh) == p.lcm) &&
                        !(lcm(polys_[p.j].lead_monomial(), lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(kept);
    for (int g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].lead_monomial())) active_[g] = false;
  }

  GroebnerBasis finish() {
    GroebnerBasis out{ring_, gens_, {}, {}, track_};
    std::vector<int> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(static_cast<int>(k));
    // A unit swallows everything else.
    for (int k : idx)
      if (polys_[k].is_constant() && !polys_[k].is_zero()) idx = {k};
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<int> minimal;
    for (int k : idx) {
      bool redundant = false;
      for (int l : idx)
        if (l != k && polys_[l].lead_monomial().divides(polys_[k].lead_monomial()) &&
            (!(polys_[l].lead_monomial() == polys_[k].lead_monomial()) || l < k))
          redundant = true;
      if (!redundant) minimal.push_back(k);
    }
    std::sort(minimal.begin(), minimal.end(), [&](int a, int b) {
      return ring_->compare(polys_[a].lead_monomial(), polys_[b].lead_monomial()) < 0;
    });
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cofs;
    for (int k : minimal) {
      basis.push_back(polys_[k]);
      cofs.push_back(track_ ? cofs_[k] : std::vector<Poly>{});
    }
    // Tail-reduce each element by the others.
    for (std::size_t a = 0; a < basis.size(); ++a) {
      std::vector<Poly> others;
      for (std::size_t b = 0; b < basis.size(); ++b) others.push_back(b == a ? Poly(ring_) : basis[b]);
      Poly lead_part = Poly::term(ring_, basis[a].lead_monomial(), basis[a].lead_coeff());
      Poly tail = basis[a] - lead_part;
      Reduction r = reduce(tail, others);
      Poly reduced = lead_part + r.remainder;
      const mpq_class inv = ring_->inverse(reduced.lead_coeff());
      if (track_) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (b == a || r.quotients[b].is_zero()) continue;
          for (std::size_t k = 0; k < gens_.size(); ++k)
            if (!cofs[b][k].is_zero()) cofs[a][k] -= r.quotients[b] * cofs[b][k];
        }
        for (auto& c : cofs[a]) c = c.scaled(inv);
      }
      basis[a] = reduced.scaled(inv);
    }
    out.basis = std::move(basis);
    out.cofactors = std::move(cofs);
    return out;
  }

  RingPtr ring_;
  std::vector<Poly> gens_;
  bool track_;
  Budget budget_;
  std::vector<Poly> polys_;
  std::vector<std::vector<Poly>> cofs_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

}  // namespace

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& gens, bool track, const Budget& budget) {
  for (const auto& g : gens)
    if (g.ring() && !g.ring()->same_as(*ring)) throw InputError("generator from a different ring");
  return Buchberger(ring, gens, track, budget).run();
}

}  // namespace heitmann::poly
