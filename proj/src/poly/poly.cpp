#include "heitmann/poly/poly.hpp"

#include <algorithm>
#include <cctype>

#include "heitmann/errors.hpp"

namespace heitmann::poly {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && !a.ring()->same_as(*b.ring()))
    throw InputError("polynomials from different rings");
}

}  // namespace

Poly Poly::constant(const RingPtr& ring, const mpq_class& c) {
  Poly p(ring);
  mpq_class v = c;
  ring->normalize(v);
  if (v != 0) p.terms_.push_back(Term{Monomial{}, v});
  return p;
}

Poly Poly::variable(const RingPtr& ring, int i) {
  Monomial m;
  m.e[i] = 1;
  m.deg = 1;
  return term(ring, m, 1);
}

Poly Poly::term(const RingPtr& ring, const Monomial& m, const mpq_class& c) {
  Poly p(ring);
  mpq_class v = c;
  ring->normalize(v);
  if (v != 0) p.terms_.push_back(Term{m, v});
  return p;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty()) {
        r.normalize(p.terms_.back().c);
        if (p.terms_.back().c == 0) p.terms_.pop_back();
      }
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty()) {
    r.normalize(p.terms_.back().c);
    if (p.terms_.back().c == 0) p.terms_.pop_back();
  }
  return p;
}

mpq_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
  return 0;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.e[var]));
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.c = -t.c;
    ring_->normalize(t.c);
  }
  return p;
}

namespace {

// Merges b·scale into a (both sorted); scale is applied to b's coefficients.
std::vector<Term> merge(const Ring& r, const std::vector<Term>& a, const std::vector<Term>& b,
                        const mpq_class& scale, const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) { return shift ? b[k].m * *shift : b[k].m; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial mb = shifted(j);
    if (i == a.size()) {
      mpq_class c = b[j++].c * scale;
      r.normalize(c);
      if (c != 0) out.push_back(Term{mb, std::move(c)});
      continue;
    }
    const int cmp = r.compare(a[i].m, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      mpq_class c = b[j++].c * scale;
      r.normalize(c);
      if (c != 0) out.push_back(Term{mb, std::move(c)});
    } else {
      mpq_class c = a[i++].c + b[j++].c * scale;
      r.normalize(c);
      if (c != 0) out.push_back(Term{mb, std::move(c)});
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_same(*this, o);
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  terms_ = merge(*ring_, terms_, o.terms_, 1, nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(*this, o);
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  terms_ = merge(*ring_, terms_, o.terms_, -1, nullptr);
  return *this;
}

void Poly::sub_mul(const Monomial& m, const mpq_class& c, const Poly& g) {
  check_same(*this, g);
  if (!ring_) ring_ = g.ring_;
  if (g.terms_.empty() || c == 0) return;
  terms_ = merge(*ring_, terms_, g.terms_, -c, &m);
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (a.is_zero() || b.is_zero()) return Poly(ring);
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  Poly acc(ring);
  for (const auto& t : small.terms()) acc.terms_ = merge(*ring, acc.terms_, large.terms_, t.c, &t.m);
  return acc;
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  for (const auto& t : terms_) {
    mpq_class v = t.c * c;
    ring_->normalize(v);
    if (v != 0) p.terms_.push_back(Term{t.m, std::move(v)});
  }
  return p;
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  for (const auto& t : terms_) {
    mpq_class v = t.c * c;
    ring_->normalize(v);
    if (v != 0) p.terms_.push_back(Term{t.m * m, std::move(v)});
  }
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->inverse(terms_.front().c));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Poly Poly::substitute(int var, const Poly& value) const {
  // Horner-free: group by the exponent of `var` and use cached powers.
  const int d = degree_in(var);
  std::vector<Poly> powers{constant(ring_, 1)};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  std::vector<Poly> buckets(std::max(d + 1, 0), Poly(ring_));
  for (const auto& t : terms_) {
    Monomial m = t.m;
    const int k = m.e[var];
    m.e[var] = 0;
    m.deg -= k;
    buckets[k] += term(ring_, m, t.c);
  }
  Poly out(ring_);
  for (int k = 0; k <= d; ++k) out += buckets[k] * powers[k];
  return out;
}

Poly Poly::map_to(const RingPtr& target, const std::vector<int>& map) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (map[i] < 0) throw InputError("variable " + ring_->var(i) + " has no image");
      m.e[map[i]] = static_cast<std::uint16_t>(m.e[map[i]] + t.m.e[i]);
    }
    m.deg = t.m.deg;
    mpq_class c = t.c;
    target->normalize(c);
    ts.push_back(Term{m, c});
  }
  return from_terms(target, std::move(ts));
}

Poly Poly::reorder(const RingPtr& target) const { return from_terms(target, terms_); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    if (ring_->characteristic() == 0) {
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Poly product() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->inverse(d.constant_term()));
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const unsigned long k = std::stoul(s_.substr(start, pos_ - start));
      if (k > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      const int i = ring_->index_of(name);
      if (i < 0) fail("unknown variable " + name);
      return Poly::variable(ring_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) { return Parser(ring, text).parse_all(); }

std::vector<Poly> parse_poly_list(const RingPtr& ring, const std::string& text) {
  std::vector<Poly> out;
  std::string cur;
  int depth = 0;
  bool any = false;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_poly(ring, cur));
      cur.clear();
      any = true;
      continue;
    }
    cur += c;
  }
  const bool blank = std::all_of(cur.begin(), cur.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!blank || any) out.push_back(parse_poly(ring, cur));
  return out;
}

std::vector<int> variable_map(const Ring& from, const Ring& to) {
  std::vector<int> map(from.nvars());
  for (int i = 0; i < from.nvars(); ++i) {
    map[i] = to.index_of(from.var(i));
    if (map[i] < 0) throw InputError("variable " + from.var(i) + " missing from target ring");
  }
  return map;
}

Poly dot(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw InputError("length mismatch in dot product");
  Poly acc = a.empty() ? Poly() : Poly(a[0].ring());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace heitmann::poly
