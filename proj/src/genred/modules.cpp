#include "common.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

using namespace detail;

namespace {

bool vanishes(const RadQuotientRing& r, const Vec& v) {
  for (const auto& p : v)
    if (!r.modulus.contains(p)) return false;
  return true;
}

bool congruent(const RadQuotientRing& r, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!r.modulus.contains(a.at(i, j) - b.at(i, j))) return false;
  return true;
}

void require_idempotent(const RadQuotientRing& r, const Matrix& F) {
  if (F.rows() != F.cols()) throw InputError("projection matrix must be square");
  if (!congruent(r, F * F, F)) throw MathRefusal("hypothesis fails: the matrix is not idempotent");
}

Vec unit_cofactors(const RadQuotientRing& r, const Vec& v) {
  const RingPtr& ring = r.ring();
  auto cof = cofactors_over(ring, Poly::constant(ring, 1), {v, r.modulus.gens()}, r.modulus.budget());
  if (!cof) throw MathRefusal("internal: vector is not unimodular");
  return (*cof)[0];
}

// Part of f of degree 0 in the first `tags` variables, mapped to `base`.
Poly untagged(const Poly& f, int tags, const RingPtr& base) {
  std::vector<poly::Term> keep;
  for (const auto& t : f.terms()) {
    bool plain = true;
    for (int i = 0; i < tags; ++i) plain = plain && t.m.e[i] == 0;
    if (plain) keep.push_back(t);
  }
  std::vector<int> map(f.ring()->nvars(), -1);
  for (int i = tags; i < f.ring()->nvars(); ++i) map[i] = base->index_of(f.ring()->var(i));
  return Poly::from_terms(f.ring(), std::move(keep)).map_to(base, map);
}

std::vector<int> fitting_dims(const Matrix& F, int upto) {
  const RingPtr& ring = F.ring();
  const int q = F.rows();
  std::vector<int> out;
  for (int k = 0; k <= upto; ++k) {
    Vec gens = determinantal_ideal(F, q - k);
    out.push_back(gens.empty() ? static_cast<int>(ring->nvars()) : poly::affine_dimension(Ideal(ring, gens)));
  }
  return out;
}

}  // namespace

SerreSplit serre_split(const RadQuotientRing& r, const Matrix& F, int k) {
  require_idempotent(r, F);
  const RingPtr& ring = r.ring();
  SerreSplit out{F, k, {}, {}, {},
                 claim("1 in Delta_k(F)", r, Poly::constant(ring, 1), determinantal_ideal(F, k), false),
                 {}};
  MatrixCombine mc = matrix_combine(r, F, k, CombineMode::Global);
  out.t = mc.t;
  out.C = mc.combined;
  out.lambda = unit_cofactors(r, out.C);
  if (!vanishes(r, add(F.apply(out.C), scale(Poly::constant(ring, -1), out.C))))
    throw MathRefusal("internal: split vector is not in the image");
  out.unimodular = claim("1 in <C>", r, Poly::constant(ring, 1), out.C, false);
  if (!r.modulus.contains(poly::dot(out.lambda, out.C) - Poly::constant(ring, 1)))
    throw MathRefusal("internal: splitting form does not evaluate to 1");
  return out;
}

Matrix with_modulus_relations(const RadQuotientRing& r, const Matrix& presentation) {
  const int q = presentation.rows();
  std::vector<Vec> cols;
  for (int j = 0; j < presentation.cols(); ++j) cols.push_back(presentation.column(j));
  for (const auto& g : r.modulus.gens())
    for (int i = 0; i < q; ++i) {
      Vec c = zeros(presentation.ring(), q);
      c[i] = g;
      cols.push_back(std::move(c));
    }
  return Matrix::from_columns(presentation.ring(), q, cols);
}

int swan_bound(const RadQuotientRing& r, const Matrix& presentation) {
  const Matrix F = with_modulus_relations(r, presentation);
  const int q = F.rows();
  const int n = static_cast<int>(F.ring()->nvars());
  const auto dims = fitting_dims(F, q);
  for (int m = 0;; ++m) {
    bool ok = true;
    for (int k = 0; k <= m && ok; ++k) ok = (k <= q ? dims[k] : -1) < m - k;
    if (ok) return m;
    if (m > q + n + 1) throw MathRefusal("no generator bound found");
  }
}

SwanGenerate forster_swan_generate(const RadQuotientRing& r, const Matrix& presentation, int target) {
  if (target < 0) throw InputError("target must be non-negative");
  const RingPtr& ring = r.ring();
  const Matrix F = with_modulus_relations(r, presentation);
  const int q = F.rows();
  SwanGenerate out;
  out.presentation = F;
  out.target = target;
  out.fitting_dimensions = fitting_dims(F, std::min(target, q));
  for (int k = 0; k <= target; ++k) {
    const int d = k <= q ? out.fitting_dimensions[k] : -1;
    if (d >= target - k)
      throw MathRefusal("hypothesis fails: the Fitting ideal f_" + std::to_string(k) + " has dimension " +
                        std::to_string(d) + ", not below " + std::to_string(target - k));
  }
  const RadQuotientRing base{Ideal(ring, {}, r.modulus.budget()), r.policy};

  Matrix P = Matrix::identity(ring, q);
  Matrix Fc = F;
  while (Fc.rows() > target) {
    const int qc = Fc.rows();
    const RadQuotientRing r0 = with_modulus(base, determinantal_ideal(Fc, qc));
    std::vector<Vec> G;
    for (int j = 0; j < Fc.cols(); ++j) G.push_back(Fc.column(j));
    Vec C = zeros(ring, qc);
    Vec t = zeros(ring, Fc.cols());
    for (int k = 1; k < qc; ++k) {
      const RadQuotientRing rk = with_modulus(r0, determinantal_ideal(Fc, k + 1));
      Vec step = unimodular_combination(rk, C, G, k);
      // Only the class of the step modulo rk matters; keeping it reduced
      // keeps the degrees of P and of the new presentation down.
      for (std::size_t j = 0; j < t.size(); ++j) t[j] += rk.modulus.normal_form(step[j]);
      C = combine(zeros(ring, qc), G, t);
    }
    Script script;
    if (qc == 1) {
      // The lone generator already vanishes in the module.
      if (!unimodular(r0, C)) throw MathRefusal("internal: relation is not unimodular");
    } else {
      for (auto& op : unimodular_to_e1(r0, C).script) {
        op.coeff = r0.modulus.normal_form(op.coeff);
        if (!op.coeff.is_zero()) script.push_back(std::move(op));
      }
      Vec e1 = replay(script, C);
      e1[0] -= Poly::constant(ring, 1);
      if (!vanishes(r0, e1)) throw MathRefusal("internal: reduced script does not reach e1");
    }
    const Matrix E = script_matrix(ring, qc, script);
    const Matrix Einv = script_inverse(ring, qc, script);
    const Matrix PE = P * Einv;
    const Matrix EF = E * Fc;
    std::vector<int> keep_rows, all_p, all_f;
    for (int i = 1; i < qc; ++i) keep_rows.push_back(i);
    for (int i = 0; i < PE.rows(); ++i) all_p.push_back(i);
    for (int j = 0; j < EF.cols(); ++j) all_f.push_back(j);
    P = PE.submatrix(all_p, keep_rows);
    Fc = EF.submatrix(keep_rows, all_f);
  }
  if (P.cols() < target) {
    std::vector<Vec> cols;
    for (int j = 0; j < P.cols(); ++j) cols.push_back(P.column(j));
    while (static_cast<int>(cols.size()) < target) cols.push_back(zeros(ring, q));
    P = Matrix::from_columns(ring, q, cols);
  }

  // Witness e_j = P Q_j + F Rel_j through membership in a ring with tag
  // variables e_1..e_q, where a column v becomes Σ vᵢeᵢ.
  std::vector<std::string> tags;
  for (int i = 0; i < q; ++i) tags.push_back(poly::fresh_name(*ring, "e" + std::to_string(i + 1)));
  if (q + static_cast<int>(ring->nvars()) > static_cast<int>(poly::kMaxVars))
    throw ResourceError("too many generators to witness the presentation");
  const RingPtr tr = poly::with_elimination_vars(ring, tags);
  const Matrix PF = P.hconcat(F);
  Vec gens;
  for (int c = 0; c < PF.cols(); ++c) {
    Poly g(tr);
    for (int i = 0; i < q; ++i) g += lift(PF.at(i, c), tr) * Poly::variable(tr, i);
    gens.push_back(std::move(g));
  }
  for (int i = 0; i < q; ++i)
    for (int l = i; l < q; ++l) gens.push_back(Poly::variable(tr, i) * Poly::variable(tr, l));
  const int ncols = PF.cols();
  out.P = P;
  out.Q = Matrix(ring, P.cols(), q);
  out.Rel = Matrix(ring, F.cols(), q);
  for (int j = 0; j < q; ++j) {
    auto cof = cofactors_over(tr, Poly::variable(tr, j), {head(gens, ncols), Vec(gens.begin() + ncols, gens.end())},
                              r.modulus.budget());
    if (!cof) throw MathRefusal("internal: new generators do not generate the module");
    for (int c = 0; c < ncols; ++c) {
      Poly h = untagged((*cof)[0][c], q, ring);
      if (c < P.cols())
        out.Q.at(c, j) = std::move(h);
      else
        out.Rel.at(c - P.cols(), j) = std::move(h);
    }
  }
  const Matrix lhs = out.P * out.Q + F * out.Rel;
  if (!(lhs == Matrix::identity(ring, q))) throw MathRefusal("internal: generator witness does not check");
  return out;
}

BassCancel bass_cancel(const RadQuotientRing& r, const Matrix& F, const Vec& C, const Poly& a, int k) {
  require_idempotent(r, F);
  const RingPtr& ring = r.ring();
  const int m = F.rows();
  if (static_cast<int>(C.size()) != m) throw InputError("vector length does not match the projection");
  if (!vanishes(r, add(F.apply(C), scale(Poly::constant(ring, -1), C))))
    throw MathRefusal("hypothesis fails: C is not in the image of F");
  Vec Ca = C;
  Ca.push_back(a);
  BassCancel out;
  out.F = F;
  out.C = C;
  out.a = a;
  out.k = k;
  out.hypothesis = claim("1 in <C, a>", r, Poly::constant(ring, 1), Ca, false);
  claim("1 in Delta_k(F)", r, Poly::constant(ring, 1), determinantal_ideal(F, k), false);
  std::vector<Vec> G;
  for (int j = 0; j < m; ++j) G.push_back(scale(a, F.column(j)));
  out.t = unimodular_combination(r, C, G, k);
  out.Cprime = F.apply(out.t);
  const Vec D = add(C, scale(a, out.Cprime));
  out.lambda = unit_cofactors(r, D);

  const Poly one = Poly::constant(ring, 1);
  const Poly lc = poly::dot(out.lambda, C);
  Matrix p1 = Matrix::identity(ring, m + 1), q1 = Matrix::identity(ring, m + 1);
  Matrix p2 = Matrix::identity(ring, m + 1), q2 = Matrix::identity(ring, m + 1);
  Matrix p3 = Matrix::identity(ring, m + 1), q3 = Matrix::identity(ring, m + 1);
  for (int i = 0; i < m; ++i) {
    p1.at(i, m) = out.Cprime[i];
    p1.at(m, i) = -(a * out.lambda[i]);
    q1.at(i, m) = -out.Cprime[i];
    q1.at(m, i) = a * out.lambda[i];
    for (int j = 0; j < m; ++j) q1.at(i, j) -= a * out.Cprime[i] * out.lambda[j];
    p2.at(m, i) = out.lambda[i];
    q2.at(m, i) = -out.lambda[i];
    p3.at(i, m) = -D[i];
    q3.at(i, m) = D[i];
  }
  p1.at(m, m) = lc;
  out.psi[0] = p1, out.psi[1] = p2, out.psi[2] = p3;
  out.psi_inv[0] = q1, out.psi_inv[1] = q2, out.psi_inv[2] = q3;

  const Matrix id = Matrix::identity(ring, m + 1);
  for (int i = 0; i < 3; ++i)
    if (!congruent(r, out.psi[i] * out.psi_inv[i], id) || !congruent(r, out.psi_inv[i] * out.psi[i], id))
      throw MathRefusal("internal: automorphism " + std::to_string(i + 1) + " is not inverted");
  Vec image = (p3 * p2 * p1).apply(Ca);
  Vec e = zeros(ring, m + 1);
  e[m] = one;
  if (!vanishes(r, add(image, scale(Poly::constant(ring, -1), e))))
    throw MathRefusal("internal: (C, a) is not sent to (0, 1)");
  return out;
}

}  // namespace heitmann::genred
