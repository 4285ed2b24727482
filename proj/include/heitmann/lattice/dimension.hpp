#pragma once

#include <optional>
#include <vector>

#include "heitmann/lattice/lattice.hpp"

namespace heitmann::lattice {

enum class BoundaryKind { KrullUpper, KrullLower, Heitmann };

/// Generator of the boundary: the ideal ↓g (KrullUpper, Heitmann) or the
/// filter ↑g (KrullLower).
///   KrullUpper: g = x ∨ ¬x          (↓x ∨ (0 : x))
///   KrullLower: g = x ∧ (1 − x)     (↑x ∧ (1 \ x))
///   Heitmann:   g = x ∨ (x → j0)    (↓x ∨ (J(0) : x)), j0 = max J_T(0)
Mask boundary_generator(const Lattice& t, BoundaryKind kind, Mask x);

/// The boundary ideal or filter, listed element by element.
ElemSet boundary_set(const Lattice& t, BoundaryKind kind, Mask x);

/// T/(K^x = 0), T/(K_x = 1) or T/(H^x = 0).
QuotientMap boundary_quotient(const Lattice& t, BoundaryKind kind, Mask x);

/// Annihilator (0 : I) of a finite ideal: elements meeting every member in 0.
ElemSet annihilator(const Lattice& t, const ElemSet& ideal);

/// Krull dimension by the upper-boundary recursion over all x ∈ T.
int kdim_upper(const Lattice& t);
/// Krull dimension by the lower-boundary recursion over all x ∈ T.
int kdim_lower(const Lattice& t);
/// Longest chain of primes minus one.
int kdim_chain(const Lattice& t);
inline int kdim(const Lattice& t) { return kdim_upper(t); }
/// The predicate "Kdim T ≤ ℓ", by the inductive definition.
bool kdim_at_most(const Lattice& t, int ell);

/// Witnesses a_0..a_ℓ with a_0∧x_0 ≤ 0, a_i∧x_i ≤ a_{i−1}∨x_{i−1},
/// 1 ≤ a_ℓ∨x_ℓ, found by exhaustive search; nullopt when none exist.
std::optional<std::vector<Mask>> kdim_global_check(const Lattice& t, const std::vector<Mask>& xs);
/// x_ℓ ∨ (x_ℓ → (⋯ (x_0 ∨ ¬x_0) ⋯)).
Mask heyting_dim_formula(const Lattice& t, const std::vector<Mask>& xs);
/// x_0 ∧ ((x_1 ∧ ((⋯ (x_ℓ ∧ (1 − x_ℓ)) ⋯) − x_1)) − x_0), the order dual of
/// the Heyting formula; c − b is the least x with c ≤ x ∨ b.
Mask brouwer_dim_formula(const Lattice& t, const std::vector<Mask>& xs);

/// Krull dimension of He(T).
int jdim(const Lattice& t);
/// Heitmann dimension; the recursion runs over join-irreducible x.
int hdim(const Lattice& t);
/// Same recursion over every x ∈ T, kept as a cross-check.
int hdim_all(const Lattice& t);

/// Closure of `gens ∪ {0, 1}` under ∨ and ∧.
ElemSet sublattice_generated(const Lattice& t, const std::vector<Mask>& gens);
/// Dimensions where each boundary step only ranges over the images of S.
/// Throws ValidationError when S does not generate T.
int kdim_over(const Lattice& t, const std::vector<Mask>& gens);
int hdim_over(const Lattice& t, const std::vector<Mask>& gens);

/// Drops the memo tables (they are thread-local).
void clear_dimension_cache();

}  // namespace heitmann::lattice
