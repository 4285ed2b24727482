#pragma once

#include <cstddef>
#include <vector>

#include "heitmann/poly/poly.hpp"

namespace heitmann::poly {

/// Limits that turn runaway Gröbner computations into ResourceError.
struct Budget {
  std::size_t max_pairs = 50000;
  int max_degree = 60;

  /// Defaults, overridden by HEITMANN_BUDGET ("pairs=N,degree=D" or just N).
  static Budget from_env();
};

/// Reduced Gröbner basis. When tracked, basis[i] = Σ_j cofactors[i][j]·gens[j].
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> gens;
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;
  bool tracked = false;
};

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& gens, bool track, const Budget& budget);

/// f = Σ quotients[i]·basis[i] + remainder, remainder fully reduced.
struct Reduction {
  std::vector<Poly> quotients;
  Poly remainder;
};

Reduction reduce(const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

/// Cofactors of f over the original generators, given a tracked basis and a
/// reduction of f with zero remainder.
std::vector<Poly> express(const GroebnerBasis& gb, const Reduction& r);

}  // namespace heitmann::poly
