#pragma once

#include <random>
#include <string>
#include <vector>

#include "heitmann/lattice/lattice.hpp"

namespace testsupport {

using heitmann::lattice::FinPoset;
using heitmann::lattice::Lattice;
using heitmann::lattice::Mask;

// Random poset on n points: each pair i < j is related with probability
// `density`, then the transitive closure is taken.
inline FinPoset random_poset(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    for (int j = 0; j < i; ++j)
      if (coin(rng)) rel.emplace_back(j, i);
  }
  return FinPoset::from_relations(std::move(names), rel);
}

inline Lattice random_lattice(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> size(0, max_points);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  return Lattice(random_poset(rng, size(rng), density(rng)));
}

inline Lattice chain_lattice(int points) { return Lattice(FinPoset::chain(points)); }
inline Lattice boolean_lattice(int atoms) { return Lattice(FinPoset::antichain(atoms)); }

}  // namespace testsupport
