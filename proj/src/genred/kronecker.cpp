#include "common.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

using namespace detail;

GcdTrick gcd_trick(const RadQuotientRing& r, const Poly& u, const Poly& v) {
  Claim product = claim("uv is nilpotent", r, u * v, {}, true);
  const Vec sum{u + v};
  return GcdTrick{u, v, std::move(product), claim("u in D(u+v)", r, u, sum, true),
                  claim("v in D(u+v)", r, v, sum, true)};
}

KroneckerStep kronecker_step(const RadQuotientRing& r, const Vec& bs, const Vec& xs, const Poly& a) {
  if (bs.size() != xs.size()) throw InputError("Kronecker step needs sequences of equal length");
  if (!zariski::verify_complementary(r, bs, xs).holds)
    throw MathRefusal("hypothesis fails: the sequences are not complementary");
  Vec outputs;
  for (std::size_t i = 0; i < bs.size(); ++i) outputs.push_back(bs[i] + a * xs[i]);
  auto below = try_claim("a in D(b + a x)", r, a, outputs, true);
  if (!below) throw MathRefusal("internal: Kronecker step did not absorb a");
  return KroneckerStep{bs, xs, a, std::move(outputs), std::move(*below)};
}

namespace {

Vec lemma57(const RadQuotientRing& r, const Poly& a, const Poly& b, const Vec& L) {
  const std::size_t n = L.size();
  if (n == 0) {
    if (!r.nilpotent(a)) throw MathRefusal("hypothesis fails: Heitmann dimension of A[1/a] is not below the length");
    return {};
  }
  const RingPtr& base = r.ring();
  RadQuotientRing loc = localize(r, a);
  const RingPtr& lring = loc.ring();
  const Poly bn = lift(L[n - 1], lring);
  auto st = heitmann_step(loc, bn);
  RadQuotientRing next = contract(st.result, base, r.policy);
  Vec X = lemma57(next, a, b, head(L, n - 1));
  Vec Z;
  for (std::size_t i = 0; i + 1 < n; ++i) Z.push_back(L[i] + b * X[i]);
  auto cof = cofactors_over(lring, Poly::constant(lring, 1),
                            {lift(Z, lring), loc.modulus.gens(), {bn}, st.transporter.gens()}, r.modulus.budget());
  if (!cof) throw MathRefusal("internal: localized boundary quotient is not trivial");
  const Poly s = poly::dot((*cof)[3], st.transporter.gens());
  X.push_back(clear_denominator(s.is_zero() ? Poly(lring) : s, a, base));
  Vec out = Z;
  out.push_back(L[n - 1] + b * X.back());
  if (!r.nilpotent(a) && !poly::radical_member(a, poly::sum(r.modulus, out)))
    throw MathRefusal("internal: localized combination lost a");
  return X;
}

Vec drop_zeros(const Vec& v) {
  Vec out;
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

}  // namespace

Vec localized_combination(const RadQuotientRing& r, const Poly& a, const Poly& b, const Vec& L) {
  Vec bl = L;
  bl.push_back(b);
  if (!try_claim("b in D(a)", r, b, {a}, true)) throw MathRefusal("hypothesis fails: D(b) <= D(a)");
  if (!try_claim("a in D(b, L)", r, a, bl, true)) throw MathRefusal("hypothesis fails: D(a) <= D(b, L)");
  return lemma57(r, a, b, L);
}

KroneckerReduce kronecker_reduce(const RadQuotientRing& r, const Vec& gens, KroneckerRoute route) {
  KroneckerReduce out;
  out.route = route;
  out.inputs = gens;
  out.dimension = poly::affine_dimension(r.modulus);
  const std::size_t target = static_cast<std::size_t>(std::max(out.dimension + 1, 0));
  Vec cur = drop_zeros(gens);
  if (cur.size() > target) {
    Vec bs = head(cur, target);
    for (std::size_t k = target; k < cur.size(); ++k) {
      const Poly& a = cur[k];
      if (route == KroneckerRoute::Krull) {
        auto cert = zariski::dim_cert_search(r, bs);
        if (!cert) throw MathRefusal("no dimension certificate for the first generators");
        bs = kronecker_step(r, bs, cert->bs, a).outputs;
      } else {
        Vec X = localized_combination(r, a, a, bs);
        for (std::size_t i = 0; i < bs.size(); ++i) bs[i] += a * X[i];
      }
    }
    cur = bs;
  }
  out.outputs = cur;
  for (const auto& g : gens) out.forward.push_back(claim("input in D(outputs)", r, g, out.outputs, true));
  for (const auto& h : out.outputs) out.backward.push_back(claim("output in <inputs>", r, h, gens, false));
  return out;
}

}  // namespace heitmann::genred
