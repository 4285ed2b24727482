#pragma once

#include <vector>

#include "heitmann/lattice/lattice.hpp"

namespace heitmann::lattice {

struct SpecSubsets {
  Mask max = 0;    // maximal primes
  Mask min = 0;    // minimal primes
  Mask jspec = 0;  // primes p with J_T(p) = p
  Mask Jspec = 0;  // primes of He(T), seen inside Spec T
};

SpecSubsets spec_subsets(const Lattice& t);

/// Prime ideal of the point p, as the set of elements not containing p.
ElemSet prime_ideal(const Lattice& t, int p);

/// The quotient whose primes are exactly Z, with the induced order.
QuotientMap subspace_lattice(const Lattice& t, Mask z);

/// Closed sets of Spec T are the upsets of the base poset.
inline Mask closure(const Lattice& t, Mask points) { return t.base().up_closure(points); }
/// closure(D(x)) ∩ closure(Spec T \ D(x)).
Mask topological_boundary(const Lattice& t, Mask x);

enum class SubspaceKind { Open, Closed };

/// Union of the spaces along their shared points (identified by name). Every
/// space must sit in the result as an open (downset) or closed (upset) subset
/// carrying its own order, and pairwise overlaps must be open (closed) in
/// both spaces with matching order; otherwise ValidationError.
FinPoset glue_spectra(const std::vector<FinPoset>& spaces, SubspaceKind kind);

}  // namespace heitmann::lattice

namespace heitmann::lattice {

/// The fan (a minimum m below `maxima` points f1..) and the chain
/// m < c1 < ... < c_length, glued along the shared open {m}.
FinPoset heitmann_example(int maxima, int length);

}  // namespace heitmann::lattice
