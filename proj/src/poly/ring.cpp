#include "heitmann/poly/ring.hpp"

#include <algorithm>

#include "heitmann/errors.hpp"

namespace heitmann::poly {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 0xFFFFu) throw ResourceError("exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Reverse lexicographic tie-break on variables [lo, hi): the monomial with
// the smaller exponent in the last differing variable is larger.
int revlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int block_degree(const Monomial& m, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += m.e[i];
  return d;
}

}  // namespace

Ring::Ring(unsigned long characteristic, std::vector<std::string> vars, MonomialOrder order, int block)
    : p_(characteristic), vars_(std::move(vars)), order_(order), block_(block) {
  if (p_ != 0 && !is_prime(p_)) throw InputError("characteristic " + std::to_string(p_) + " is not prime");
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw InputError("duplicate variable " + vars_[i]);
  }
  if (order_ == MonomialOrder::Elimination && (block_ < 0 || block_ > nvars()))
    throw InputError("elimination block out of range");
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  if (order_ == MonomialOrder::Elimination) {
    const int da = block_degree(a, 0, block_), db = block_degree(b, 0, block_);
    if (da != db) return da > db ? 1 : -1;
    if (int c = revlex(a, b, 0, block_)) return c;
    const int ra = static_cast<int>(a.deg) - da, rb = static_cast<int>(b.deg) - db;
    if (ra != rb) return ra > rb ? 1 : -1;
    return revlex(a, b, block_, n);
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  return revlex(a, b, 0, n);
}

void Ring::normalize(mpq_class& c) const {
  if (p_ == 0) {
    c.canonicalize();
    return;
  }
  mpz_class pz(p_);
  mpz_class num = c.get_num() % pz;
  mpz_class den = c.get_den() % pz;
  if (den < 0) den += pz;
  if (den == 0) throw MathRefusal("division by zero modulo " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  num = (num * inv) % pz;
  if (num < 0) num += pz;
  c = mpq_class(num);
}

mpq_class Ring::inverse(const mpq_class& c) const {
  if (c == 0) throw MathRefusal("inverse of zero");
  mpq_class r = 1 / c;
  normalize(r);
  return r;
}

RingPtr make_ring(unsigned long characteristic, std::vector<std::string> vars, MonomialOrder order, int block) {
  return std::make_shared<const Ring>(characteristic, std::move(vars), order, block);
}

RingPtr with_elimination_vars(const RingPtr& r, const std::vector<std::string>& fresh) {
  std::vector<std::string> vars = fresh;
  vars.insert(vars.end(), r->vars().begin(), r->vars().end());
  return make_ring(r->characteristic(), std::move(vars), MonomialOrder::Elimination, static_cast<int>(fresh.size()));
}

std::string fresh_name(const Ring& r, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; r.index_of(name) >= 0; ++k) name = stem + std::to_string(k);
  return name;
}

}  // namespace heitmann::poly
