#pragma once

#include <random>

#include "heitmann/genred/matrix.hpp"
#include "poly_support.hpp"

namespace testsupport {

using heitmann::genred::Matrix;

// Product of `steps` random elementary matrices, with its exact inverse.
inline std::pair<Matrix, Matrix> random_elementary(std::mt19937_64& rng, const RingPtr& ring, int n, int steps,
                                                   int deg) {
  Matrix e = Matrix::identity(ring, n), inv = Matrix::identity(ring, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng);
    int j = pick(rng);
    if (i == j) j = (j + 1) % n;
    const Poly c = random_poly(rng, ring, deg, 2, 2);
    Matrix step = Matrix::identity(ring, n), undo = Matrix::identity(ring, n);
    step.at(i, j) = c;
    undo.at(i, j) = -c;
    e = step * e;
    inv = inv * undo;
  }
  return {e, inv};
}

}  // namespace testsupport
