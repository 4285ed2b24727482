#include "common.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

using namespace detail;

namespace detail {

Vec mainlemma_ys(const RadQuotientRing& r, const Poly& a, const Vec& bs, const Vec& L, const std::vector<Vec>& Ls) {
  const std::size_t n = bs.size();
  const RingPtr& ring = r.ring();
  if (n == 0) {
    if (!unimodular(r, L)) throw MathRefusal("dimension hypothesis fails: the iterated boundary does not collapse");
    return {};
  }
  auto st = heitmann_step(r, bs[n - 1]);
  Vec ys = mainlemma_ys(st.result, a, head(bs, n - 1), L, Ls);
  Vec X;
  Vec Lp = L;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    X.push_back(bs[i] + a * a * ys[i]);
    Lp = add(Lp, scale(a * ys[i], Ls[i]));
  }
  Vec front = X;
  front.insert(front.end(), Lp.begin(), Lp.end());
  auto cof = cofactors_over(ring, Poly::constant(ring, 1), {front, r.modulus.gens(), {bs[n - 1]}, st.transporter.gens()},
                            r.modulus.budget());
  if (!cof) throw MathRefusal("internal: boundary quotient is not trivial");
  Poly y = poly::dot((*cof)[3], st.transporter.gens());
  ys.push_back(y.ring() ? y : Poly(ring));
  X.push_back(bs[n - 1] + a * a * ys.back());
  Lp = add(Lp, scale(a * ys.back(), Ls[n - 1]));
  X.insert(X.end(), Lp.begin(), Lp.end());
  if (!unimodular(r, X)) throw MathRefusal("internal: column step lost unimodularity");
  return ys;
}

Vec unimodular_combination(const RadQuotientRing& r, const Vec& C, const std::vector<Vec>& G, int k) {
  const RingPtr& ring = r.ring();
  Vec t = zeros(ring, static_cast<int>(G.size()));
  if (unimodular(r, C)) return t;
  if (k < 1 || static_cast<std::size_t>(k) > G.size())
    throw MathRefusal("hypothesis fails: no " + std::to_string(k) + "-minors to combine with");
  const Matrix g = Matrix::from_columns(ring, static_cast<int>(C.size()), G);
  std::vector<Minor> all;
  for (auto& m : minors(g, k))
    if (!m.value.is_zero()) all.push_back(std::move(m));
  Vec values;
  for (const auto& m : all) values.push_back(m.value);
  auto cof = cofactors_over(ring, Poly::constant(ring, 1), {C, values, r.modulus.gens()}, r.modulus.budget());
  if (!cof) throw MathRefusal("hypothesis fails: 1 is not in <C> + minors");
  std::vector<Minor> used;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!(*cof)[1][i].is_zero()) used.push_back(all[i]);
  Vec cur = C;
  for (std::size_t i = 0; i < used.size(); ++i) {
    Vec later;
    for (std::size_t j = i + 1; j < used.size(); ++j) later.push_back(used[j].value);
    RadQuotientRing ri = with_modulus(r, later);
    if (unimodular(ri, cur)) continue;
    std::vector<Vec> cs;
    for (int c : used[i].cols) cs.push_back(G[c]);
    MinorStep step = minor_step(ri, cur, cs, used[i].rows);
    for (std::size_t j = 0; j < used[i].cols.size(); ++j) t[used[i].cols[j]] += step.xs[j];
    cur = combine(C, G, t);
  }
  if (!unimodular(r, cur)) throw MathRefusal("internal: combination is not unimodular");
  return t;
}

}  // namespace detail

MainLemma swan_mainlemma(const RadQuotientRing& r, const Poly& a, const Vec& bs, const Vec& L,
                         const std::vector<Vec>& Ls) {
  if (Ls.size() != bs.size()) throw InputError("one column is needed per b");
  for (const auto& l : Ls)
    if (l.size() != L.size()) throw InputError("columns have different lengths");
  const RingPtr& ring = r.ring();
  Vec all = bs;
  all.push_back(a);
  all.insert(all.end(), L.begin(), L.end());
  Claim hyp = claim("1 in <a, b, L>", r, Poly::constant(ring, 1), all, false);
  Vec ys = mainlemma_ys(r, a, bs, L, Ls);
  Vec xs;
  Vec out;
  Vec Lp = L;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    xs.push_back(a * ys[i]);
    out.push_back(bs[i] + a * xs.back());
    Lp = add(Lp, scale(xs.back(), Ls[i]));
  }
  out.insert(out.end(), Lp.begin(), Lp.end());
  Claim concl = claim("1 in <b + a x, L + sum x L>", r, Poly::constant(ring, 1), out, false);
  return MainLemma{a, bs, L, Ls, std::move(ys), std::move(xs), std::move(hyp), std::move(concl)};
}

MinorStep minor_step(const RadQuotientRing& r, const Vec& C, const std::vector<Vec>& Cs,
                     const std::vector<int>& rows) {
  const RingPtr& ring = r.ring();
  const int k = static_cast<int>(Cs.size());
  if (static_cast<int>(rows.size()) != k) throw InputError("minor needs as many rows as columns");
  const int n = static_cast<int>(C.size());
  const Matrix cs = Matrix::from_columns(ring, n, Cs);
  std::vector<int> all_cols(k);
  for (int j = 0; j < k; ++j) all_cols[j] = j;
  const Matrix sq = cs.submatrix(rows, all_cols);
  const Poly nu = determinant(sq);
  Vec bs;
  for (int i = 0; i < k; ++i) {
    Matrix m = sq;
    for (int row = 0; row < k; ++row) m.at(row, i) = C[rows[row]];
    bs.push_back(determinant(m));
  }
  Vec nuC = C;
  nuC.push_back(nu);
  Claim hyp = claim("1 in <minor, C>", r, Poly::constant(ring, 1), nuC, false);
  MainLemma ml = swan_mainlemma(r, nu, bs, C, Cs);
  Vec combined = combine(C, Cs, ml.xs);
  Claim concl = claim("1 in <C + sum x C>", r, Poly::constant(ring, 1), combined, false);
  return MinorStep{C, Cs, rows, std::move(ml.xs), std::move(combined), std::move(hyp), std::move(concl)};
}

namespace {

std::vector<Vec> columns_from(const Matrix& F, int first) {
  std::vector<Vec> out;
  for (int j = first; j < F.cols(); ++j) out.push_back(F.column(j));
  return out;
}

}  // namespace

MatrixCombine matrix_combine(const RadQuotientRing& r, const Matrix& F, int k, CombineMode mode) {
  if (F.cols() < 1) throw InputError("matrix has no columns");
  const RingPtr& ring = r.ring();
  const Poly one = Poly::constant(ring, 1);
  MatrixCombine out;
  out.F = F;
  out.k = k;
  out.mode = mode;
  const Vec C0 = F.column(0);
  const std::vector<Vec> G = columns_from(F, 1);
  out.t = zeros(ring, static_cast<int>(G.size()));

  switch (mode) {
    case CombineMode::Global: {
      out.hypotheses.push_back(claim("1 in Delta_k(F)", r, one, determinantal_ideal(F, k), false));
      if (!unimodular(r, C0)) {
        const int d = poly::affine_dimension(r.modulus);
        out.dimensions.emplace_back(d, k);
        if (d >= k) throw MathRefusal("hypothesis fails: dimension " + std::to_string(d) + " is not below " + std::to_string(k));
        out.t = unimodular_combination(r, C0, G, k);
      }
      out.combined = combine(C0, G, out.t);
      out.conclusions.push_back(claim("1 in <combined>", r, one, out.combined, false));
      break;
    }
    case CombineMode::Stratified: {
      out.hypotheses.push_back(claim("1 in Delta_1(F)", r, one, determinantal_ideal(F, 1), false));
      Vec cur = C0;
      for (int j = 1; j <= static_cast<int>(G.size()) && !unimodular(r, cur); ++j) {
        RadQuotientRing rj = with_modulus(r, determinantal_ideal(F, j + 1));
        if (unimodular(rj, cur)) continue;
        const int d = poly::affine_dimension(rj.modulus);
        out.dimensions.emplace_back(d, j);
        if (d >= j)
          throw MathRefusal("hypothesis fails: A/Delta_" + std::to_string(j + 1) + "(F) has dimension " +
                            std::to_string(d) + ", not below " + std::to_string(j));
        Vec step = unimodular_combination(rj, cur, G, j);
        for (std::size_t i = 0; i < G.size(); ++i) out.t[i] += step[i];
        cur = combine(C0, G, out.t);
      }
      out.combined = cur;
      out.conclusions.push_back(claim("1 in <combined>", r, one, out.combined, false));
      break;
    }
    case CombineMode::Localized: {
      if (k < 1) throw InputError("minor size must be positive");
      const int n = F.rows();
      const Matrix g = Matrix::from_columns(ring, n, G);
      std::vector<Minor> ms;
      if (k <= static_cast<int>(G.size()) && k <= n)
        for (auto& m : minors(g, k))
          if (!r.nilpotent(m.value)) ms.push_back(std::move(m));
      for (const auto& m : ms) {
        const int d = poly::affine_dimension(localize(r, m.value).modulus);
        out.dimensions.emplace_back(d, k);
        if (d >= k)
          throw MathRefusal("hypothesis fails: A[1/minor] has dimension " + std::to_string(d) + ", not below " +
                            std::to_string(k));
      }
      Vec cur = C0;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        Vec later;
        for (std::size_t j = i + 1; j < ms.size(); ++j) later.push_back(ms[j].value);
        RadQuotientRing ri = with_modulus(r, later);
        const Poly& nu = ms[i].value;
        if (ri.nilpotent(nu)) continue;
        const Matrix M = g.submatrix(ms[i].rows, ms[i].cols);
        Vec cs;
        for (int row : ms[i].rows) cs.push_back(cur[row]);
        const Vec L = adjugate(M).apply(cs);
        const Vec Y = localized_combination(ri, nu, nu * nu, L);
        for (std::size_t j = 0; j < ms[i].cols.size(); ++j) out.t[ms[i].cols[j]] += nu * Y[j];
        cur = combine(C0, G, out.t);
      }
      out.combined = cur;
      if (k <= F.rows() && k <= F.cols())
        for (const auto& m : minors(F, k))
          if (!m.value.is_zero())   out.conclusions.push_back(claim("minor in D(combined)", r, m.value, cur, true));
      for (const auto& c : C0)
        if (!c.is_zero()) out.conclusions.push_back(claim("C0 entry in D(combined)", r, c, cur, true));
      break;
    }
  }
  return out;
}

}  // namespace heitmann::genred
