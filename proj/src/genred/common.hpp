#pragma once

#include <optional>
#include <vector>

#include "heitmann/genred/genred.hpp"

namespace heitmann::genred::detail {

/// Cofactors of f over the concatenated groups, split back per group (zero
/// entries get zero cofactors).
std::optional<std::vector<Vec>> cofactors_over(const RingPtr& ring, const Poly& f, const std::vector<Vec>& groups,
                                               const poly::Budget& budget);

/// Heitmann boundary step of x; equal to the Krull step under the Jacobson
/// policy, refused otherwise.
zariski::BoundaryStep heitmann_step(const RadQuotientRing& r, const Poly& x);

RadQuotientRing with_modulus(const RadQuotientRing& r, const Vec& extra);

Vec head(const Vec& v, std::size_t n);

/// A[1/a] as A[t]/(I + ⟨ta − 1⟩), t eliminated first.
RadQuotientRing localize(const RadQuotientRing& r, const Poly& a);
/// Preimage in A of an ideal of the localisation.
RadQuotientRing contract(const RadQuotientRing& loc, const RingPtr& base, zariski::JacobsonPolicy policy);
/// a^N·s(1/a) ∈ A for s ∈ A[t], N the t-degree of s.
Poly clear_denominator(const Poly& s, const Poly& a, const RingPtr& base);
Poly lift(const Poly& f, const RingPtr& target);
Vec lift(const Vec& v, const RingPtr& target);

Vec mainlemma_ys(const RadQuotientRing& r, const Poly& a, const Vec& bs, const Vec& L, const std::vector<Vec>& Ls);

/// t with C + Σ tⱼ Gⱼ unimodular, given D(C) ∨ Δ_k(G) = 1.
Vec unimodular_combination(const RadQuotientRing& r, const Vec& C, const std::vector<Vec>& G, int k);

}  // namespace heitmann::genred::detail
