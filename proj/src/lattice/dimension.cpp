#include "heitmann/lattice/dimension.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

namespace heitmann::lattice {

namespace {

using Memo = std::unordered_map<std::string, int>;

Memo& memo(int which) {
  thread_local Memo tables[4];
  return tables[which];
}

enum MemoSlot { kUpper = 0, kLower = 1, kHdimJI = 2, kHdimAll = 3 };

int boundary_recursion(const Lattice& t, BoundaryKind kind, bool join_irreducible_only, MemoSlot slot) {
  if (t.trivial()) return -1;
  const std::string key = canonical_form(t.base());
  auto& table = memo(slot);
  if (auto it = table.find(key); it != table.end()) return it->second;
  const auto xs = join_irreducible_only ? t.join_irreducibles() : t.elements();
  int best = -1;
  for (Mask x : xs) {
    const QuotientMap q = boundary_quotient(t, kind, x);
    best = std::max(best, boundary_recursion(q.target, kind, join_irreducible_only, slot));
  }
  const int d = best + 1;
  table.emplace(key, d);
  return d;
}

int restricted_recursion(const Lattice& t, BoundaryKind kind, const std::vector<Mask>& gens) {
  if (t.trivial()) return -1;
  int best = -1;
  for (Mask x : gens) {
    const QuotientMap q = boundary_quotient(t, kind, x);
    std::vector<Mask> images;
    for (Mask g : gens) images.push_back(q.apply(g));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    best = std::max(best, restricted_recursion(q.target, kind, images));
  }
  return best + 1;
}

}  // namespace

Mask boundary_generator(const Lattice& t, BoundaryKind kind, Mask x) {
  switch (kind) {
    case BoundaryKind::KrullUpper:
      return t.join(x, t.neg(x));
    case BoundaryKind::KrullLower:
      return t.meet(x, t.coneg(x));
    case BoundaryKind::Heitmann:
      return t.join(x, t.implies(x, jacobson_zero(t)));
  }
  return 0;
}

ElemSet boundary_set(const Lattice& t, BoundaryKind kind, Mask x) {
  const Mask g = boundary_generator(t, kind, x);
  return kind == BoundaryKind::KrullLower ? principal_filter(t, g) : principal_ideal(t, g);
}

QuotientMap boundary_quotient(const Lattice& t, BoundaryKind kind, Mask x) {
  const Mask g = boundary_generator(t, kind, x);
  return kind == BoundaryKind::KrullLower ? force(t, g) : kill(t, g);
}

ElemSet annihilator(const Lattice& t, const ElemSet& ideal) {
  ElemSet out;
  for (Mask a : t.elements()) {
    bool ok = true;
    for (Mask y : ideal)
      if (t.meet(a, y) != t.bottom()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

int kdim_upper(const Lattice& t) { return boundary_recursion(t, BoundaryKind::KrullUpper, false, kUpper); }
int kdim_lower(const Lattice& t) { return boundary_recursion(t, BoundaryKind::KrullLower, false, kLower); }
int kdim_chain(const Lattice& t) { return t.base().longest_chain() - 1; }

bool kdim_at_most(const Lattice& t, int ell) {
  if (t.trivial()) return true;
  if (ell < 0) return false;
  for (Mask x : t.elements())
    if (!kdim_at_most(boundary_quotient(t, BoundaryKind::KrullUpper, x).target, ell - 1)) return false;
  return true;
}

std::optional<std::vector<Mask>> kdim_global_check(const Lattice& t, const std::vector<Mask>& xs) {
  if (xs.empty()) return t.trivial() ? std::optional<std::vector<Mask>>(std::vector<Mask>{}) : std::nullopt;
  const auto elems = t.elements();
  const std::size_t len = xs.size();
  // Dead (level, bound) states: no completion exists from there.
  std::vector<std::set<Mask>> dead(len);
  std::vector<Mask> as(len, 0);
  auto dfs = [&](auto&& self, std::size_t level, Mask bound) -> bool {
    if (level == len) return bound == t.top();
    if (dead[level].count(bound)) return false;
    for (Mask a : elems) {
      if (!t.leq(t.meet(a, xs[level]), bound)) continue;
      as[level] = a;
      if (self(self, level + 1, t.join(a, xs[level]))) return true;
    }
    dead[level].insert(bound);
    return false;
  };
  if (dfs(dfs, 0, t.bottom())) return as;
  return std::nullopt;
}

Mask heyting_dim_formula(const Lattice& t, const std::vector<Mask>& xs) {
  if (xs.empty()) return t.bottom();
  Mask v = t.join(xs[0], t.neg(xs[0]));
  for (std::size_t k = 1; k < xs.size(); ++k) v = t.join(xs[k], t.implies(xs[k], v));
  return v;
}

Mask brouwer_dim_formula(const Lattice& t, const std::vector<Mask>& xs) {
  if (xs.empty()) return t.top();
  const std::size_t last = xs.size() - 1;
  Mask v = t.meet(xs[last], t.coneg(xs[last]));
  for (std::size_t k = last; k-- > 0;) v = t.meet(xs[k], t.minus(v, xs[k]));
  return v;
}

int jdim(const Lattice& t) { return kdim(heitmann_lattice(t).target); }

int hdim(const Lattice& t) { return boundary_recursion(t, BoundaryKind::Heitmann, true, kHdimJI); }
int hdim_all(const Lattice& t) { return boundary_recursion(t, BoundaryKind::Heitmann, false, kHdimAll); }

ElemSet sublattice_generated(const Lattice& t, const std::vector<Mask>& gens) {
  std::set<Mask> s(gens.begin(), gens.end());
  s.insert(t.bottom());
  s.insert(t.top());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> cur(s.begin(), s.end());
    for (Mask a : cur)
      for (Mask b : cur) {
        grew |= s.insert(t.meet(a, b)).second;
        grew |= s.insert(t.join(a, b)).second;
      }
  }
  return ElemSet(s.begin(), s.end());
}

int kdim_over(const Lattice& t, const std::vector<Mask>& gens) {
  if (sublattice_generated(t, gens) != t.elements()) throw ValidationError("the given set does not generate the lattice");
  return restricted_recursion(t, BoundaryKind::KrullUpper, gens);
}

int hdim_over(const Lattice& t, const std::vector<Mask>& gens) {
  if (sublattice_generated(t, gens) != t.elements()) throw ValidationError("the given set does not generate the lattice");
  return restricted_recursion(t, BoundaryKind::Heitmann, gens);
}

void clear_dimension_cache() {
  for (int k = 0; k < 4; ++k) memo(k).clear();
}

}  // namespace heitmann::lattice
