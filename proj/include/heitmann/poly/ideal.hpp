#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "heitmann/poly/groebner.hpp"

namespace heitmann::poly {

/// Σ cofactors[i]·gens[i] == element^exponent, checked on construction.
struct MembershipWitness {
  Poly element;
  unsigned exponent = 1;
  std::vector<Poly> cofactors;
};

/// Throws MathRefusal when the identity does not hold exactly.
void check_witness(const MembershipWitness& w, const std::vector<Poly>& gens);
bool witness_holds(const MembershipWitness& w, const std::vector<Poly>& gens);

/// The ideal ⟨gens⟩ with a lazily computed, tracked Gröbner basis. Copies
/// share the cache; the first reader computes it, the others wait.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens, Budget budget = Budget::from_env());

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const Budget& budget() const { return budget_; }
  const GroebnerBasis& basis() const;

  bool contains(const Poly& f) const;
  bool is_unit() const;
  Poly normal_form(const Poly& f) const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  Budget budget_;
  std::shared_ptr<Cache> cache_;
};

std::optional<MembershipWitness> ideal_member(const Poly& f, const Ideal& ideal);

/// Decides f ∈ √I with one extra variable, then finds the least k with
/// f^k ∈ I and its cofactors.
std::optional<MembershipWitness> radical_member(const Poly& f, const Ideal& ideal);

/// (I : f).
Ideal ideal_quotient(const Ideal& ideal, const Poly& f);

struct Saturation {
  Ideal ideal;     // (I : f^∞)
  unsigned exponent = 0;  // e with f^e·(I : f^∞) ⊆ I
};
Saturation saturation(const Ideal& ideal, const Poly& f);

Ideal intersection(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const std::vector<Poly>& extra);

/// Generators of I ∩ K[vars not in the first `count` variables] read in
/// `target`; `ideal` must live in an elimination ring whose first block has
/// `count` variables.
std::vector<Poly> eliminate_block(const Ideal& ideal, int count, const RingPtr& target);

/// Krull dimension of K[X]/I (−1 for the unit ideal).
int affine_dimension(const Ideal& ideal);

}  // namespace heitmann::poly
