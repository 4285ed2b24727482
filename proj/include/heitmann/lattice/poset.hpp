#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heitmann::lattice {

using Mask = std::uint32_t;

/// Largest base poset accepted; downsets are stored as 32-bit masks.
inline constexpr int kMaxPoints = 24;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// A finite partially ordered set of named points.
///
/// Point i is below point j when `leq(i, j)`. The order is stored as two
/// bitmask tables (strict-or-equal up-sets and down-sets), which makes the
/// downset/upset closures used throughout the lattice code a few word ops.
class FinPoset {
 public:
  FinPoset() = default;

  /// Builds a poset from strict relations `first < second` (any generating
  /// set, e.g. covers); the reflexive-transitive closure is taken and
  /// antisymmetry is checked.
  static FinPoset from_relations(std::vector<std::string> names,
                                 const std::vector<std::pair<int, int>>& less);
  static FinPoset antichain(int n);
  static FinPoset chain(int n);

  int size() const { return static_cast<int>(names_.size()); }
  Mask all() const { return size() == 0 ? 0u : (size() == 32 ? ~0u : ((Mask{1} << size()) - 1)); }

  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  Mask up(int i) const { return up_[i]; }
  Mask down(int i) const { return down_[i]; }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  bool is_downset(Mask m) const;
  bool is_upset(Mask m) const;
  Mask down_closure(Mask m) const;
  Mask up_closure(Mask m) const;
  /// Largest downset contained in `m`.
  Mask downset_interior(Mask m) const;

  Mask maximal_points() const;
  Mask minimal_points() const;
  /// Number of points on a longest chain (0 for the empty poset).
  int longest_chain() const;

  /// Subposet on the points of `subset`, kept in increasing index order.
  FinPoset induced(Mask subset) const;
  FinPoset reversed() const;

  std::vector<std::pair<int, int>> covers() const;

  /// Re-indexes a mask over `subset` (bit k = k-th point of subset).
  static Mask compress(Mask m, Mask subset);
  static Mask expand(Mask m, Mask subset);

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Mask> up_;    // up_[i]: points j with i <= j
  std::vector<Mask> down_;  // down_[i]: points j with j <= i
};

/// Canonical encoding of the unlabelled order; equal strings iff isomorphic.
std::string canonical_form(const FinPoset& p);
bool isomorphic(const FinPoset& a, const FinPoset& b);

}  // namespace heitmann::lattice
