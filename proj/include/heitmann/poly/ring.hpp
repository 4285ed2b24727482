#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heitmann::poly {

inline constexpr int kMaxVars = 16;

/// Exponent vector with its cached total degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

enum class MonomialOrder {
  Grevlex,
  /// Block order: the first `block` variables are compared first (by degree,
  /// then reverse lexicographically), then the rest by grevlex.
  Elimination,
};

/// Coefficient field (ℚ or 𝔽p), variable names and monomial order.
class Ring {
 public:
  Ring(unsigned long characteristic, std::vector<std::string> vars,
       MonomialOrder order = MonomialOrder::Grevlex, int block = 0);

  unsigned long characteristic() const { return p_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[i]; }
  int index_of(const std::string& name) const;
  MonomialOrder order() const { return order_; }
  int block() const { return block_; }

  /// Three-way comparison in this ring's order (positive when a > b).
  int compare(const Monomial& a, const Monomial& b) const;
  /// Brings a coefficient to canonical form (reduced fraction or least residue).
  void normalize(mpq_class& c) const;
  mpq_class inverse(const mpq_class& c) const;

  bool same_as(const Ring& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_ && block_ == o.block_;
  }

 private:
  unsigned long p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  int block_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(unsigned long characteristic, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::Grevlex, int block = 0);

/// Same field with fresh variables prepended and eliminated first.
RingPtr with_elimination_vars(const RingPtr& r, const std::vector<std::string>& fresh);

/// A variable name not already used by the ring.
std::string fresh_name(const Ring& r, const std::string& stem);

}  // namespace heitmann::poly
