#pragma once

#include <optional>
#include <vector>

#include "heitmann/poly/ideal.hpp"

namespace heitmann::zariski {

using poly::Ideal;
using poly::MembershipWitness;
using poly::Poly;
using poly::RingPtr;

/// How J_A(I) is decided. Finitely generated algebras over a field are
/// Jacobson rings, where J_A(I) = √I; nothing else is implemented.
enum class JacobsonPolicy { JacobsonRing, Unspecified };

/// A/√I. The radical is never computed; every question goes through
/// radical membership in the modulus.
struct RadQuotientRing {
  Ideal modulus;
  JacobsonPolicy policy = JacobsonPolicy::JacobsonRing;

  const RingPtr& ring() const { return modulus.ring(); }
  /// 1 ∈ √I, i.e. A/√I is the trivial ring.
  bool trivial() const { return modulus.is_unit(); }
  std::optional<MembershipWitness> nilpotent(const Poly& f) const { return poly::radical_member(f, modulus); }
};

RadQuotientRing ambient(const RingPtr& ring);
RadQuotientRing quotient_ring(const RingPtr& ring, std::vector<Poly> modulus);

/// D_A(gens) = √⟨gens⟩, compared semantically.
struct ZarElem {
  RingPtr ring;
  std::vector<Poly> gens;
};

ZarElem zar_join(const ZarElem& u, const ZarElem& v);  // concatenation
ZarElem zar_meet(const ZarElem& u, const ZarElem& v);  // pairwise products

struct LeqResult {
  bool holds = false;
  /// One entry per generator of u: f ∈ √(I + ⟨v⟩) or nothing. Cofactors
  /// run over the nonzero generators of the modulus followed by those of v.
  std::vector<std::optional<MembershipWitness>> witnesses;
};

/// D(u) ≤ D(v) in Zar(A/√I): every generator of u lies in √(I + ⟨v⟩).
LeqResult zar_leq(const RadQuotientRing& r, const ZarElem& u, const ZarElem& v);
LeqResult zar_leq(const ZarElem& u, const ZarElem& v);
bool zar_equal(const RadQuotientRing& r, const ZarElem& u, const ZarElem& v);

/// One boundary step together with what the unwinding needs: the new modulus
/// is I + ⟨j⟩ + S where S = ⋂ᵢ (I : jᵢ^∞), and every element s of S
/// satisfies jᵢ^{exponents[i]}·s ∈ I.
struct BoundaryStep {
  RadQuotientRing result;
  std::vector<Poly> j;
  Ideal transporter;  // S
  std::vector<unsigned> exponents;
};

/// K_A(j) = j + (D_A(0) : j), realised as I + ⟨j⟩ + ⋂ (I : jᵢ^∞).
BoundaryStep krull_boundary_step(const RadQuotientRing& r, const std::vector<Poly>& j);
RadQuotientRing krull_boundary_ideal(const RadQuotientRing& r, const std::vector<Poly>& j);

/// H_A(j) = j + (J_A(0) : j). Equal to the Krull boundary for Jacobson
/// rings; any other policy is refused.
RadQuotientRing heitmann_boundary_ideal(const RadQuotientRing& r, const std::vector<Poly>& j);

/// Left fold of the Krull boundary over xs (x₀ first).
RadQuotientRing iterated_boundary(const RadQuotientRing& r, const std::vector<Poly>& xs);

/// 0 ∈ x^ℕ(1 + xA) modulo √I, decided as 1 ∈ (I : x^∞) + ⟨x⟩.
bool lower_boundary_collapses(const RadQuotientRing& r, const Poly& x);

/// Collapse identity x₀^{m₀}(x₁^{m₁}(⋯ x_ℓ^{m_ℓ}(1 + a_ℓx_ℓ) ⋯) + a₀x₀) ∈ I,
/// with complements b_ℓ = 1 + a_ℓx_ℓ, b_{k−1} = x_k^{m_k}b_k + a_{k−1}x_{k−1}.
struct DimCert {
  std::vector<Poly> xs;
  std::vector<unsigned> ms;
  std::vector<Poly> as;
  std::vector<Poly> bs;
  /// Cofactors of the collapse polynomial over the modulus generators.
  MembershipWitness identity;
};

Poly collapse_polynomial(const RingPtr& ring, const std::vector<Poly>& xs, const std::vector<unsigned>& ms,
                         const std::vector<Poly>& as);
std::vector<Poly> complements(const RingPtr& ring, const std::vector<Poly>& xs, const std::vector<unsigned>& ms,
                              const std::vector<Poly>& as);

inline constexpr int kDefaultDegreeBound = 30;

/// Certificate that the sequence xs collapses, by unwinding the iterated
/// boundary. Nothing when the iterated boundary is proper; ResourceError when
/// an intermediate polynomial exceeds the degree bound.
std::optional<DimCert> dim_cert_search(const RadQuotientRing& r, const std::vector<Poly>& xs,
                                       int degree_bound = kDefaultDegreeBound);

struct ComplementaryCheck {
  bool holds = false;
  /// k-th entry witnesses the k-th inequality (ℓ + 2 of them), over the
  /// generator list modulus ++ (the right-hand side generators).
  std::vector<std::optional<MembershipWitness>> witnesses;
};

/// D(b₀x₀) = D(0), D(bᵢxᵢ) ≤ D(b_{i−1}, x_{i−1}), 1 = D(b_ℓ, x_ℓ).
ComplementaryCheck verify_complementary(const RadQuotientRing& r, const std::vector<Poly>& bs,
                                        const std::vector<Poly>& xs);

/// Re-checks the collapse identity and the complements of a certificate.
bool verify_dim_cert(const RadQuotientRing& r, const DimCert& c);

}  // namespace heitmann::zariski
