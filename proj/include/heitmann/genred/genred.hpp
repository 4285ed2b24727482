#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heitmann/genred/matrix.hpp"
#include "heitmann/zariski/zariski.hpp"

namespace heitmann::genred {

using poly::Ideal;
using poly::MembershipWitness;
using zariski::JacobsonPolicy;
using zariski::RadQuotientRing;

/// element^exponent ∈ ⟨generators⟩ with explicit cofactors. The generator
/// list is the nonzero part of (modulus ++ extra), in that order.
struct Claim {
  std::string label;
  Vec generators;
  MembershipWitness witness;
};

/// Generator list used by claims: nonzero modulus generators, then nonzero
/// entries of `extra`.
Vec claim_generators(const RadQuotientRing& r, const Vec& extra);
/// f ∈ I + ⟨extra⟩, or f ∈ √(I + ⟨extra⟩) when `radical` is set.
std::optional<Claim> try_claim(const std::string& label, const RadQuotientRing& r, const Poly& f, const Vec& extra,
                               bool radical);
/// As try_claim, throwing MathRefusal(label) on failure.
Claim claim(const std::string& label, const RadQuotientRing& r, const Poly& f, const Vec& extra, bool radical);
bool claim_holds(const Claim& c);

bool unimodular(const RadQuotientRing& r, const Vec& v);

// ---------------------------------------------------------------------------
// Kronecker

/// uv nilpotent implies D(u, v) = D(u + v).
struct GcdTrick {
  Poly u, v;
  Claim product_nilpotent;
  Claim u_below, v_below;  // u, v ∈ √(I + ⟨u+v⟩)
};
GcdTrick gcd_trick(const RadQuotientRing& r, const Poly& u, const Poly& v);

/// D(a, b₁..bₙ) = D(b₁+ax₁, …, bₙ+axₙ) for complementary (bs, xs).
struct KroneckerStep {
  Vec bs, xs;
  Poly a;
  Vec outputs;
  Claim a_below;  // a ∈ √(I + ⟨outputs⟩)
};
KroneckerStep kronecker_step(const RadQuotientRing& r, const Vec& bs, const Vec& xs, const Poly& a);

enum class KroneckerRoute {
  Krull,     // complements from dimension certificates
  Heitmann,  // the A[1/a] variant
};

struct KroneckerReduce {
  KroneckerRoute route = KroneckerRoute::Krull;
  Vec inputs;
  Vec outputs;
  /// Dimension of A/I, so the target count is dimension + 1.
  int dimension = 0;
  std::vector<Claim> forward;   // each input in √(I + ⟨outputs⟩)
  std::vector<Claim> backward;  // each output in I + ⟨inputs⟩
};
KroneckerReduce kronecker_reduce(const RadQuotientRing& r, const Vec& gens,
                                 KroneckerRoute route = KroneckerRoute::Krull);

/// X with a ∈ √(I + ⟨L + bX⟩), given D(b) ≤ D(a) ≤ D(b, L) and
/// Hdim A[1/a] < |L|. Heitmann boundaries of A[1/a] are computed in A[t]/(ta−1).
Vec localized_combination(const RadQuotientRing& r, const Poly& a, const Poly& b, const Vec& L);

// ---------------------------------------------------------------------------
// Bass stable range and unimodular completion

struct BassStableRange {
  Poly a;
  Vec bs, xs;
  Vec outputs;  // bᵢ + a·xᵢ
  Claim hypothesis;  // 1 ∈ I + ⟨a, bs⟩
  Claim conclusion;  // 1 ∈ I + ⟨outputs⟩
};
BassStableRange bass_stable_range(const RadQuotientRing& r, const Poly& a, const Vec& bs);

/// v[target] += coeff · v[source].
struct AddMultiple {
  int target = 0;
  int source = 0;
  Poly coeff;
};
using Script = std::vector<AddMultiple>;
Vec replay(const Script& s, Vec v);
/// Matrix E with E·v = replay(s, v), and its inverse.
Matrix script_matrix(const RingPtr& ring, int n, const Script& s);
Matrix script_inverse(const RingPtr& ring, int n, const Script& s);

struct UnimodularToE1 {
  Vec v;
  Script script;
  Claim hypothesis;  // 1 ∈ I + ⟨v⟩
};
/// Elementary script taking v to (1, 0, …, 0) modulo I.
UnimodularToE1 unimodular_to_e1(const RadQuotientRing& r, const Vec& v);

// ---------------------------------------------------------------------------
// Column combinations

/// Column lemma: from 1 = D(a, bs) ∨ D(L), find xᵢ ∈ aA with
/// 1 = D(bᵢ + a xᵢ) ∨ D(L + Σ xᵢLᵢ).
struct MainLemma {
  Poly a;
  Vec bs;
  Vec L;
  std::vector<Vec> Ls;
  Vec ys;  // xᵢ = a·yᵢ
  Vec xs;
  Claim hypothesis;
  Claim conclusion;
};
MainLemma swan_mainlemma(const RadQuotientRing& r, const Poly& a, const Vec& bs, const Vec& L,
                         const std::vector<Vec>& Ls);

/// From 1 = D(ν) ∨ D(C) with ν the minor of Cs on `rows`, find xs with
/// C + Σ xᵢCᵢ unimodular.
struct MinorStep {
  Vec C;
  std::vector<Vec> Cs;
  std::vector<int> rows;
  Vec xs;
  Vec combined;
  Claim hypothesis;
  Claim conclusion;
};
MinorStep minor_step(const RadQuotientRing& r, const Vec& C, const std::vector<Vec>& Cs,
                     const std::vector<int>& rows);

enum class CombineMode {
  Global,     // Δ_k(F) = 1 and dim A < k
  Stratified, // 1 ∈ Δ₁(F) and dim A/Δ_{k+1}(F) < k for every k
  Localized,  // per-minor bound dim A[1/ν] < k, radical conclusion only
};

struct MatrixCombine {
  Matrix F;  // columns C₀ … C_p
  int k = 0;
  CombineMode mode = CombineMode::Global;
  Vec t;         // length p
  Vec combined;  // C₀ + Σ tⱼCⱼ
  /// Dimension bounds that were checked (value, required strict bound).
  std::vector<std::pair<int, int>> dimensions;
  std::vector<Claim> hypotheses;
  std::vector<Claim> conclusions;
};
MatrixCombine matrix_combine(const RadQuotientRing& r, const Matrix& F, int k, CombineMode mode);

// ---------------------------------------------------------------------------
// Modules

/// Rank-one free summand A·C of the image of an idempotent F, with λ(C) = 1.
struct SerreSplit {
  Matrix F;
  int k = 0;
  Vec t;
  Vec C;
  Vec lambda;
  Claim delta_unit;   // 1 ∈ I + Δ_k(F)
  Claim unimodular;   // 1 ∈ I + ⟨C⟩
};
SerreSplit serre_split(const RadQuotientRing& r, const Matrix& F, int k);

/// The module with generators h₁…h_q and relation columns F is regenerated by
/// h·P; each old generator satisfies e_j = P·Q_j + F·R_j.
struct SwanGenerate {
  Matrix presentation;  // q×n, with modulus relations appended
  int target = 0;
  Matrix P;    // q×m
  Matrix Q;    // m×q
  Matrix Rel;  // n×q
  /// affine dimension of A/f_k for k = 0..target
  std::vector<int> fitting_dimensions;
};
SwanGenerate forster_swan_generate(const RadQuotientRing& r, const Matrix& presentation, int target);
/// Least m with dim A/f_k < m − k for all k ≤ m.
int swan_bound(const RadQuotientRing& r, const Matrix& presentation);
/// Presentation with one copy of g·I_q appended for each modulus generator g.
Matrix with_modulus_relations(const RadQuotientRing& r, const Matrix& presentation);

/// Automorphisms ψ₁, ψ₂, ψ₃ of N ⊕ A sending (C, a) to (0, 1).
struct BassCancel {
  Matrix F;  // idempotent, N = image
  Vec C;
  Poly a;
  int k = 0;
  Vec t;
  Vec Cprime;  // F·t
  Vec lambda;  // λ(C + aC') = 1
  Matrix psi[3];
  Matrix psi_inv[3];
  Claim hypothesis;  // 1 ∈ I + ⟨C, a⟩
};
BassCancel bass_cancel(const RadQuotientRing& r, const Matrix& F, const Vec& C, const Poly& a, int k);

}  // namespace heitmann::genred
