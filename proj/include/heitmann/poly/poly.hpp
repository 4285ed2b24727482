#pragma once

#include <string>
#include <vector>

#include "heitmann/poly/ring.hpp"

namespace heitmann::poly {

struct Term {
  Monomial m;
  mpq_class c;
};

/// Exact multivariate polynomial; terms strictly decreasing in the ring
/// order, no zero coefficients, coefficients canonical.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(const RingPtr& ring, const mpq_class& c);
  static Poly variable(const RingPtr& ring, int i);
  static Poly term(const RingPtr& ring, const Monomial& m, const mpq_class& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.deg == 0 && terms_[0].c == 1; }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const mpq_class& lead_coeff() const { return terms_.front().c; }
  /// Constant coefficient (0 when absent).
  mpq_class constant_term() const;

  int total_degree() const;
  int degree_in(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly mul_term(const Monomial& m, const mpq_class& c) const;
  Poly pow(unsigned k) const;
  /// Divides every coefficient by the leading coefficient.
  Poly monic() const;

  /// this − c·m·g, computed in one merge.
  void sub_mul(const Monomial& m, const mpq_class& c, const Poly& g);

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Replaces variable `var` by `value` (same ring).
  Poly substitute(int var, const Poly& value) const;
  /// Re-expresses the polynomial in `target`, variable i going to map[i].
  Poly map_to(const RingPtr& target, const std::vector<int>& map) const;
  /// Same polynomial read in a ring with identical variables but another order.
  Poly reorder(const RingPtr& target) const;

  std::string to_string() const;

  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses text such as `3/2*x^2*y - (y + 1)^2`.
Poly parse_poly(const RingPtr& ring, const std::string& text);
/// Comma-separated list; an empty string gives an empty list.
std::vector<Poly> parse_poly_list(const RingPtr& ring, const std::string& text);

/// Embedding of `from`'s variables into `to` by name.
std::vector<int> variable_map(const Ring& from, const Ring& to);

/// Σ a_i b_i.
Poly dot(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace heitmann::poly
