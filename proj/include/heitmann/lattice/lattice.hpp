#pragma once

#include <functional>
#include <vector>

#include "heitmann/lattice/poset.hpp"

namespace heitmann::lattice {

/// Sorted, duplicate-free set of lattice elements (ideals, filters, ...).
using ElemSet = std::vector<Mask>;

/// Upper bound on the number of elements `Lattice::elements()` will list.
inline constexpr std::size_t kMaxEnumeratedElements = std::size_t{1} << 22;

/// Finite distributive lattice presented by its poset of prime points.
///
/// An element is a downset of the base poset, stored as a bitmask; the
/// points in the mask are the primes p with the element outside p. Meet and
/// join are intersection and union, 0 is the empty downset and 1 is the full
/// point set. An empty base gives the trivial lattice 1 = 0.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(FinPoset base) : base_(std::move(base)) {}

  const FinPoset& base() const { return base_; }
  int points() const { return base_.size(); }
  bool trivial() const { return base_.size() == 0; }

  Mask bottom() const { return 0; }
  Mask top() const { return base_.all(); }
  bool contains(Mask a) const { return (a & ~top()) == 0 && base_.is_downset(a); }

  Mask meet(Mask a, Mask b) const { return a & b; }
  Mask join(Mask a, Mask b) const { return a | b; }
  bool leq(Mask a, Mask b) const { return (a & ~b) == 0; }

  /// Heyting implication: the largest x with x ∧ a ≤ b.
  Mask implies(Mask a, Mask b) const { return base_.downset_interior((~a | b) & top()); }
  /// Brouwer difference: the least x with a ≤ x ∨ b.
  Mask minus(Mask a, Mask b) const { return base_.down_closure(a & ~b); }
  Mask neg(Mask a) const { return implies(a, bottom()); }
  /// 1 − a, the Brouwer dual of negation.
  Mask coneg(Mask a) const { return minus(top(), a); }

  /// Largest x with x ∧ a ≤ b, written (b : a) for ideals.
  Mask transporter(Mask b, Mask a) const { return implies(a, b); }
  /// Least x with b ≤ x ∨ a.
  Mask difference(Mask b, Mask a) const { return minus(b, a); }

  /// Every element in increasing mask order. Throws CapacityError when the
  /// lattice has more than kMaxEnumeratedElements elements.
  std::vector<Mask> elements() const;
  std::size_t count_elements() const;

  /// Join-irreducible elements, one principal downset per base point.
  std::vector<Mask> join_irreducibles() const;

  /// Element generated by a set of base points (their down closure).
  Mask generated(Mask points) const { return base_.down_closure(points); }

 private:
  FinPoset base_;
};

/// Surjective lattice map realised as the restriction to a subset of points.
///
/// The target's base is the source base restricted to `image`; an element a
/// maps to a ∩ image, re-indexed over the surviving points.
struct QuotientMap {
  Lattice source;
  Lattice target;
  Mask image = 0;

  Mask apply(Mask a) const { return FinPoset::compress(a & image, image); }
  /// Least source element mapping to b.
  Mask lift_min(Mask b) const { return source.base().down_closure(FinPoset::expand(b, image)); }
  /// Greatest source element mapping to b.
  Mask lift_max(Mask b) const {
    return source.base().downset_interior(FinPoset::expand(b, image) | (source.top() & ~image));
  }
  /// Source index of each target point.
  std::vector<int> embedding() const;
  bool is_identity() const { return image == source.top(); }
};

QuotientMap restrict_to(const Lattice& t, Mask points);
QuotientMap identity_map(const Lattice& t);

/// T/(J=0, U=1): a prime survives iff every x in J lies in it and no y in U
/// does, i.e. the point is outside every x ∈ J and inside every y ∈ U.
QuotientMap quotient(const Lattice& t, const std::vector<Mask>& zero, const std::vector<Mask>& one);
QuotientMap kill(const Lattice& t, Mask s);   // T/(s=0)
QuotientMap force(const Lattice& t, Mask s);  // T/(s=1)

/// Quotient of T by a preorder compatible with ∨ and ∧, given as a predicate.
/// The surviving primes are those whose ideal is closed downward for the
/// preorder.
QuotientMap quotient_by_preorder(const Lattice& t, const std::function<bool(Mask, Mask)>& below);

/// Composition `second ∘ first`; requires second.source to be first.target.
QuotientMap compose(const QuotientMap& first, const QuotientMap& second);

ElemSet principal_ideal(const Lattice& t, Mask a);
ElemSet principal_filter(const Lattice& t, Mask a);
bool is_ideal(const Lattice& t, const ElemSet& s);
bool is_filter(const Lattice& t, const ElemSet& s);
/// Largest element of a finite ideal (the join of its members).
Mask ideal_top(const ElemSet& ideal);
/// Smallest element of a finite filter.
Mask filter_bottom(const Lattice& t, const ElemSet& filter);
ElemSet intersect(const ElemSet& a, const ElemSet& b);

/// J_T(J) = { a : for all x, a ∨ x = 1 implies z ∨ x = 1 for some z ∈ J },
/// evaluated exhaustively over the lattice.
ElemSet jacobson_radical(const Lattice& t, const ElemSet& ideal);
/// Largest element of J_T(0).
Mask jacobson_zero(const Lattice& t);

/// He(T): the quotient by the preorder a ⪯ b ⟺ a ∈ J_T(↓b).
QuotientMap heitmann_lattice(const Lattice& t);
/// T = He(T).
bool is_weakly_jacobson(const Lattice& t);

/// Boolean lattice on Spec T; T embeds by a ↦ the same point set.
Lattice boolean_closure(const Lattice& t);

/// T° with the base order reversed; `opposite_element` is the matching
/// order-reversing bijection a ↦ complement of a.
Lattice opposite(const Lattice& t);
inline Mask opposite_element(const Lattice& t, Mask a) { return t.top() & ~a; }

}  // namespace heitmann::lattice
