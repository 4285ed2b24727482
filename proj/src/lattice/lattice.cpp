#include "heitmann/lattice/lattice.hpp"

#include <algorithm>

namespace heitmann::lattice {

namespace {

// Points ordered so that every point comes after everything below it.
std::vector<int> linear_extension(const FinPoset& p) {
  std::vector<int> order(p.size());
  for (int i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
  return order;
}

template <class Visit>
void walk_downsets(const FinPoset& p, const std::vector<int>& order, std::size_t k, Mask cur,
                   Visit& visit) {
  if (k == order.size()) {
    visit(cur);
    return;
  }
  const int i = order[k];
  walk_downsets(p, order, k + 1, cur, visit);
  const Mask below = p.down(i) & ~(Mask{1} << i);
  if ((below & ~cur) == 0) walk_downsets(p, order, k + 1, cur | (Mask{1} << i), visit);
}

}  // namespace

std::vector<Mask> Lattice::elements() const {
  std::vector<Mask> out;
  auto visit = [&](Mask m) {
    if (out.size() >= kMaxEnumeratedElements)
      throw CapacityError("lattice has more than " + std::to_string(kMaxEnumeratedElements) + " elements");
    out.push_back(m);
  };
  walk_downsets(base_, linear_extension(base_), 0, 0, visit);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Lattice::count_elements() const {
  std::size_t n = 0;
  auto visit = [&](Mask) { ++n; };
  walk_downsets(base_, linear_extension(base_), 0, 0, visit);
  return n;
}

std::vector<Mask> Lattice::join_irreducibles() const {
  std::vector<Mask> out;
  for (int i = 0; i < points(); ++i) out.push_back(base_.down(i));
  return out;
}

std::vector<int> QuotientMap::embedding() const {
  std::vector<int> out;
  for (int i = 0; i < source.points(); ++i)
    if ((image >> i) & 1u) out.push_back(i);
  return out;
}

QuotientMap restrict_to(const Lattice& t, Mask points) {
  points &= t.top();
  return QuotientMap{t, Lattice(t.base().induced(points)), points};
}

QuotientMap identity_map(const Lattice& t) { return restrict_to(t, t.top()); }

QuotientMap quotient(const Lattice& t, const std::vector<Mask>& zero, const std::vector<Mask>& one) {
  Mask keep = t.top();
  for (Mask x : zero) keep &= ~x;
  for (Mask y : one) keep &= y;
  return restrict_to(t, keep);
}

QuotientMap kill(const Lattice& t, Mask s) { return restrict_to(t, t.top() & ~s); }
QuotientMap force(const Lattice& t, Mask s) { return restrict_to(t, s); }

QuotientMap quotient_by_preorder(const Lattice& t, const std::function<bool(Mask, Mask)>& below) {
  const auto elems = t.elements();
  Mask keep = 0;
  for (int p = 0; p < t.points(); ++p) {
    const Mask bit = Mask{1} << p;
    bool closed = true;
    for (Mask b : elems) {
      if (b & bit) continue;  // b is not in the prime ideal of p
      for (Mask a : elems)
        if ((a & bit) && below(a, b)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) keep |= bit;
  }
  return restrict_to(t, keep);
}

QuotientMap compose(const QuotientMap& first, const QuotientMap& second) {
  if (!(first.target.base() == second.source.base()))
    throw ValidationError("quotient maps do not compose");
  const Mask image = FinPoset::expand(second.image, first.image);
  return QuotientMap{first.source, second.target, image};
}

ElemSet principal_ideal(const Lattice& t, Mask a) {
  ElemSet out;
  for (Mask x : t.elements())
    if (t.leq(x, a)) out.push_back(x);
  return out;
}

ElemSet principal_filter(const Lattice& t, Mask a) {
  ElemSet out;
  for (Mask x : t.elements())
    if (t.leq(a, x)) out.push_back(x);
  return out;
}

bool is_ideal(const Lattice& t, const ElemSet& s) {
  if (!std::binary_search(s.begin(), s.end(), t.bottom())) return false;
  const auto elems = t.elements();
  for (Mask x : s) {
    if (!t.contains(x)) return false;
    for (Mask y : s)
      if (!std::binary_search(s.begin(), s.end(), t.join(x, y))) return false;
    for (Mask z : elems)
      if (!std::binary_search(s.begin(), s.end(), t.meet(x, z))) return false;
  }
  return true;
}

bool is_filter(const Lattice& t, const ElemSet& s) {
  if (!std::binary_search(s.begin(), s.end(), t.top())) return false;
  const auto elems = t.elements();
  for (Mask x : s) {
    if (!t.contains(x)) return false;
    for (Mask y : s)
      if (!std::binary_search(s.begin(), s.end(), t.meet(x, y))) return false;
    for (Mask z : elems)
      if (!std::binary_search(s.begin(), s.end(), t.join(x, z))) return false;
  }
  return true;
}

Mask ideal_top(const ElemSet& ideal) {
  Mask r = 0;
  for (Mask x : ideal) r |= x;
  return r;
}

Mask filter_bottom(const Lattice& t, const ElemSet& filter) {
  Mask r = t.top();
  for (Mask x : filter) r &= x;
  return r;
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet jacobson_radical(const Lattice& t, const ElemSet& ideal) {
  const auto elems = t.elements();
  // rescued[k]: some z in the ideal has z ∨ elems[k] = 1.
  std::vector<char> rescued(elems.size(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (Mask z : ideal)
      if (t.join(z, elems[k]) == t.top()) {
        rescued[k] = 1;
        break;
      }
  ElemSet out;
  for (Mask a : elems) {
    bool member = true;
    for (std::size_t k = 0; k < elems.size() && member; ++k)
      if (t.join(a, elems[k]) == t.top() && !rescued[k]) member = false;
    if (member) out.push_back(a);
  }
  return out;
}

Mask jacobson_zero(const Lattice& t) { return ideal_top(jacobson_radical(t, {t.bottom()})); }

QuotientMap heitmann_lattice(const Lattice& t) {
  // a ∈ J_T(↓b) ⟺ every x with a ∨ x = 1 also has b ∨ x = 1, because ↓b
  // contains a z with z ∨ x = 1 exactly when b itself works.
  const auto elems = t.elements();
  auto below = [&](Mask a, Mask b) {
    for (Mask x : elems)
      if (t.join(a, x) == t.top() && t.join(b, x) != t.top()) return false;
    return true;
  };
  return quotient_by_preorder(t, below);
}

bool is_weakly_jacobson(const Lattice& t) { return heitmann_lattice(t).is_identity(); }

Lattice boolean_closure(const Lattice& t) {
  return Lattice(FinPoset::from_relations(t.base().names(), {}));
}

Lattice opposite(const Lattice& t) { return Lattice(t.base().reversed()); }

}  // namespace heitmann::lattice
