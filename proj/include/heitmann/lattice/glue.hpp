#pragma once

#include <vector>

#include "heitmann/lattice/lattice.hpp"

namespace heitmann::lattice {

/// Whether the pieces of a covering are quotients by principal ideals
/// T/(s=0) or by principal filters T/(s=1).
enum class GlueKind { Ideal, Filter };

/// Overlap data between pieces i and j: s_ij ∈ T_i and s_ji ∈ T_j, with
/// T_ij = T_i/(s_ij=0) identified with T_ji = T_j/(s_ji=0) through point names
/// (filter kind: T_i/(s_ij=1)).
struct Overlap {
  int i = 0;
  int j = 0;
  Mask s_ij = 0;
  Mask s_ji = 0;
};

/// A diagram of principal quotients. Pairs without an explicit overlap are
/// treated as having a trivial common quotient.
struct Diagram {
  GlueKind kind = GlueKind::Ideal;
  std::vector<Lattice> pieces;
  std::vector<Overlap> overlaps;
};

struct GlueResult {
  Lattice lattice;
  /// π_i : T → T_i, as restrictions to the points named in piece i.
  std::vector<QuotientMap> projections;
  /// s_i with π_i the quotient by ↓s_i (filter kind: ↑s_i).
  std::vector<Mask> kernels;
};

/// Projective limit of the diagram, after checking the gluing conditions:
/// each overlap quotient is identified consistently on both sides, triple
/// overlaps agree, and the sections φ_i satisfy π_i ∘ φ_i = Id. A failed
/// condition throws ValidationError naming the pieces involved.
GlueResult glue(const Diagram& d);

/// Covering of T by the principal quotients attached to `s`; requires
/// ⋀ s_i = 0 (ideal kind) or ⋁ s_i = 1 (filter kind).
Diagram decompose(const Lattice& t, const std::vector<Mask>& s, GlueKind kind);

}  // namespace heitmann::lattice
