#include "common.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

using namespace detail;

namespace {

Vec bass_rec(const RadQuotientRing& r, const Poly& a, const Vec& bs) {
  const std::size_t n = bs.size();
  if (n == 0) {
    if (!r.trivial()) throw MathRefusal("hypothesis fails: Heitmann dimension is not below the length");
    return {};
  }
  auto st = heitmann_step(r, bs[n - 1]);
  Vec xs = bass_rec(st.result, a, head(bs, n - 1));
  Vec L;
  for (std::size_t i = 0; i + 1 < n; ++i) L.push_back(bs[i] + xs[i] * a);
  const RingPtr& ring = r.ring();
  auto cof = cofactors_over(ring, Poly::constant(ring, 1), {L, r.modulus.gens(), {bs[n - 1]}, st.transporter.gens()},
                            r.modulus.budget());
  if (!cof) throw MathRefusal("internal: boundary quotient is not trivial");
  xs.push_back(poly::dot((*cof)[3], st.transporter.gens()));
  if (xs.back().ring() == nullptr) xs.back() = Poly(ring);
  L.push_back(bs[n - 1] + xs.back() * a);
  if (!unimodular(r, L)) throw MathRefusal("internal: Bass step lost unimodularity");
  return xs;
}

}  // namespace

BassStableRange bass_stable_range(const RadQuotientRing& r, const Poly& a, const Vec& bs) {
  Vec all = bs;
  all.push_back(a);
  Claim hyp = claim("1 in <a, b>", r, Poly::constant(r.ring(), 1), all, false);
  Vec xs = unimodular(r, bs) ? zeros(r.ring(), static_cast<int>(bs.size())) : bass_rec(r, a, bs);
  Vec outputs;
  for (std::size_t i = 0; i < bs.size(); ++i) outputs.push_back(bs[i] + a * xs[i]);
  Claim concl = claim("1 in <b + a x>", r, Poly::constant(r.ring(), 1), outputs, false);
  return BassStableRange{a, bs, std::move(xs), std::move(outputs), std::move(hyp), std::move(concl)};
}

Vec replay(const Script& s, Vec v) {
  for (const auto& op : s) {
    if (op.target < 0 || op.source < 0 || op.target >= static_cast<int>(v.size()) ||
        op.source >= static_cast<int>(v.size()) || op.target == op.source)
      throw InputError("elementary operation out of range");
    v[op.target] += op.coeff * v[op.source];
  }
  return v;
}

Matrix script_matrix(const RingPtr& ring, int n, const Script& s) {
  Matrix e = Matrix::identity(ring, n);
  for (const auto& op : s) {
    Matrix step = Matrix::identity(ring, n);
    step.at(op.target, op.source) = op.coeff;
    e = step * e;
  }
  return e;
}

Matrix script_inverse(const RingPtr& ring, int n, const Script& s) {
  Matrix e = Matrix::identity(ring, n);
  for (const auto& op : s) {
    Matrix step = Matrix::identity(ring, n);
    step.at(op.target, op.source) = -op.coeff;
    e = e * step;
  }
  return e;
}

UnimodularToE1 unimodular_to_e1(const RadQuotientRing& r, const Vec& v) {
  const RingPtr& ring = r.ring();
  const int n = static_cast<int>(v.size());
  if (n < 2) throw InputError("unimodular completion needs a vector of length at least 2");
  Claim hyp = claim("1 in <v>", r, Poly::constant(ring, 1), v, false);
  UnimodularToE1 out{v, {}, std::move(hyp)};
  auto is_e1 = [&](const Vec& w) {
    if (!r.modulus.contains(w[0] - Poly::constant(ring, 1))) return false;
    for (int i = 1; i < n; ++i)
      if (!r.modulus.contains(w[i])) return false;
    return true;
  };
  if (is_e1(v)) return out;
  auto push = [&](int target, int source, const Poly& c) {
    if (!c.is_zero()) out.script.push_back(AddMultiple{target, source, c});
  };
  const int last = n - 1;
  Vec bs = head(v, last);
  auto bass = bass_stable_range(r, v[last], bs);
  for (int i = 0; i < last; ++i) push(i, last, bass.xs[i]);
  Vec cur = replay(out.script, v);
  auto cof = cofactors_over(ring, Poly::constant(ring, 1), {head(cur, last), r.modulus.gens()}, r.modulus.budget());
  if (!cof) throw MathRefusal("internal: Bass output is not unimodular");
  const Poly w = cur[last];
  for (int i = 0; i < last; ++i) push(last, i, (Poly::constant(ring, 1) - w) * (*cof)[0][i]);
  cur = replay(out.script, v);
  // cur[last] ≡ 1: clear the other entries, then move the 1 to the front.
  Script tail;
  for (int i = 0; i < last; ++i)
    if (!cur[i].is_zero()) tail.push_back(AddMultiple{i, last, -cur[i]});
  tail.push_back(AddMultiple{0, last, Poly::constant(ring, 1)});
  tail.push_back(AddMultiple{last, 0, Poly::constant(ring, -1)});
  out.script.insert(out.script.end(), tail.begin(), tail.end());
  if (!is_e1(replay(out.script, v))) throw MathRefusal("internal: elementary script does not reach e1");
  return out;
}

}  // namespace heitmann::genred
