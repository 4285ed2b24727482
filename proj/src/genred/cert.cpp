#include "heitmann/genred/cert.hpp"

#include "heitmann/errors.hpp"

namespace heitmann::genred {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("certificate is missing \"") + key + "\"");
  return j.at(key);
}

Poly poly_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_string()) throw InputError("polynomial must be a string, got " + j.dump());
  return poly::parse_poly(ring, j.get<std::string>());
}

json claim_to_json(const Claim& c) {
  return json{{"label", c.label},
              {"element", c.witness.element.to_string()},
              {"exponent", c.witness.exponent},
              {"cofactors", vec_to_json(c.witness.cofactors)}};
}

json claims_to_json(const std::vector<Claim>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(claim_to_json(c));
  return out;
}

json script_to_json(const Script& s) {
  json out = json::array();
  for (const auto& op : s) out.push_back(json{{"target", op.target}, {"source", op.source}, {"coeff", op.coeff.to_string()}});
  return out;
}

Script script_from_json(const RingPtr& ring, const json& j) {
  Script s;
  for (const auto& op : j)
    s.push_back(AddMultiple{field(op, "target").get<int>(), field(op, "source").get<int>(),
                            poly_from_json(ring, field(op, "coeff"))});
  return s;
}

json base_cert(const char* kind, const RadQuotientRing& r) {
  return json{{"kind", kind}, {"ring", ring_to_json(r)}};
}

// Collects failures while walking a certificate.
class Checker {
 public:
  explicit Checker(const RadQuotientRing& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) report_.failures.push_back(what);
  }

  /// A stored claim: element^exponent = Σ cofactors·(modulus ++ extra),
  /// with the element required to equal `expected`.
  void claim(const json& c, const Poly& expected, const Vec& extra, bool radical, const std::string& what) {
    const RingPtr& ring = r_.ring();
    MembershipWitness w{poly_from_json(ring, field(c, "element")), field(c, "exponent").get<unsigned>(),
                        vec_from_json(ring, field(c, "cofactors"))};
    expect(w.element == expected, what + ": claim is about the wrong element");
    expect(radical || w.exponent == 1, what + ": exponent must be 1");
    expect(poly::witness_holds(w, claim_generators(r_, extra)), what + ": identity does not hold");
  }

  void vanishes(const Poly& p, const std::string& what) { expect(r_.modulus.contains(p), what); }
  void vanishes(const Vec& v, const std::string& what) {
    for (const auto& p : v) vanishes(p, what);
  }
  void congruent(const Matrix& a, const Matrix& b, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      expect(false, what + ": shape mismatch");
      return;
    }
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) vanishes(a.at(i, j) - b.at(i, j), what);
  }

  VerifyReport done() {
    report_.ok = report_.failures.empty();
    return report_;
  }

 private:
  const RadQuotientRing& r_;
  VerifyReport report_;
};

Vec minus(const Vec& a, const Vec& b) { return add(a, scale(Poly::constant(a.empty() ? b[0].ring() : a[0].ring(), -1), b)); }

}  // namespace

RadQuotientRing ring_from_json(const json& j) {
  if (!j.is_object()) throw InputError("ring must be a JSON object");
  const unsigned long p = j.value("char", 0ul);
  std::vector<std::string> vars;
  for (const auto& v : field(j, "vars")) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  RingPtr ring = poly::make_ring(p, vars);
  Vec modulus = j.contains("modulus") ? vec_from_json(ring, j.at("modulus")) : Vec{};
  JacobsonPolicy policy = JacobsonPolicy::JacobsonRing;
  if (j.contains("policy")) {
    const std::string s = j.at("policy").get<std::string>();
    if (s == "unspecified")
      policy = JacobsonPolicy::Unspecified;
    else if (s != "jacobson")
      throw InputError("unknown policy \"" + s + "\"");
  }
  return RadQuotientRing{Ideal(ring, modulus), policy};
}

json ring_to_json(const RadQuotientRing& r) {
  const auto& ring = *r.ring();
  json vars = json::array();
  for (int i = 0; i < ring.nvars(); ++i) vars.push_back(ring.var(i));
  json out{{"char", ring.characteristic()}, {"vars", vars}, {"modulus", vec_to_json(r.modulus.gens())}};
  if (r.policy == JacobsonPolicy::Unspecified) out["policy"] = "unspecified";
  return out;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

Vec vec_from_json(const RingPtr& ring, const json& j) {
  if (j.is_string()) return poly::parse_poly_list(ring, j.get<std::string>());
  if (!j.is_array()) throw InputError("expected a list of polynomials");
  Vec out;
  for (const auto& p : j) out.push_back(poly_from_json(ring, p));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) throw InputError("matrix must be a list of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(vec_from_json(ring, row));
  return Matrix::from_rows(ring, rows);
}

json to_cert(const RadQuotientRing& r, const KroneckerReduce& k) {
  json c = base_cert("kronecker", r);
  c["route"] = k.route == KroneckerRoute::Krull ? "krull" : "heitmann";
  c["dimension"] = k.dimension;
  c["inputs"] = json{{"gens", vec_to_json(k.inputs)}};
  c["outputs"] = json{{"gens", vec_to_json(k.outputs)}};
  c["claims"] = json{{"forward", claims_to_json(k.forward)}, {"backward", claims_to_json(k.backward)}};
  return c;
}

json to_cert(const RadQuotientRing& r, const BassStableRange& b) {
  json c = base_cert("bass", r);
  c["inputs"] = json{{"a", b.a.to_string()}, {"bs", vec_to_json(b.bs)}};
  c["outputs"] = json{{"xs", vec_to_json(b.xs)}, {"combined", vec_to_json(b.outputs)}};
  c["claims"] = json{{"hypothesis", claim_to_json(b.hypothesis)}, {"conclusion", claim_to_json(b.conclusion)}};
  return c;
}

json to_cert(const RadQuotientRing& r, const UnimodularToE1& u) {
  json c = base_cert("unimod-e1", r);
  c["inputs"] = json{{"v", vec_to_json(u.v)}};
  c["outputs"] = json{{"script", script_to_json(u.script)}};
  c["claims"] = json{{"hypothesis", claim_to_json(u.hypothesis)}};
  return c;
}

json to_cert(const RadQuotientRing& r, const SerreSplit& s) {
  json c = base_cert("serre-split", r);
  c["inputs"] = json{{"F", matrix_to_json(s.F)}, {"k", s.k}};
  c["outputs"] = json{{"t", vec_to_json(s.t)}, {"C", vec_to_json(s.C)}, {"lambda", vec_to_json(s.lambda)}};
  c["claims"] = json{{"delta", claim_to_json(s.delta_unit)}, {"unimodular", claim_to_json(s.unimodular)}};
  return c;
}

json to_cert(const RadQuotientRing& r, const SwanGenerate& s) {
  json c = base_cert("swan", r);
  c["inputs"] = json{{"presentation", matrix_to_json(s.presentation)}, {"target", s.target}};
  c["outputs"] = json{{"P", matrix_to_json(s.P)},
                      {"Q", matrix_to_json(s.Q)},
                      {"Rel", matrix_to_json(s.Rel)},
                      {"fittingDimensions", s.fitting_dimensions}};
  return c;
}

json to_cert(const RadQuotientRing& r, const BassCancel& b) {
  json c = base_cert("cancel", r);
  c["inputs"] = json{{"F", matrix_to_json(b.F)}, {"C", vec_to_json(b.C)}, {"a", b.a.to_string()}, {"k", b.k}};
  json psi = json::array(), inv = json::array();
  for (int i = 0; i < 3; ++i) {
    psi.push_back(matrix_to_json(b.psi[i]));
    inv.push_back(matrix_to_json(b.psi_inv[i]));
  }
  c["outputs"] = json{{"t", vec_to_json(b.t)},
                      {"Cprime", vec_to_json(b.Cprime)},
                      {"lambda", vec_to_json(b.lambda)},
                      {"psi", psi},
                      {"psiInverse", inv}};
  c["claims"] = json{{"hypothesis", claim_to_json(b.hypothesis)}};
  return c;
}

json to_cert(const RadQuotientRing& r, const zariski::DimCert& d) {
  json c = base_cert("kdim", r);
  c["xs"] = vec_to_json(d.xs);
  c["ms"] = d.ms;
  c["as"] = vec_to_json(d.as);
  c["bs"] = vec_to_json(d.bs);
  const auto comp = zariski::verify_complementary(r, d.bs, d.xs);
  json ineq = json::array();
  for (const auto& w : comp.witnesses) ineq.push_back(w.has_value());
  c["verification"] = json{{"identityHolds", zariski::verify_dim_cert(r, d)},
                           {"identity", vec_to_json(d.identity.cofactors)},
                           {"inequalities", ineq}};
  return c;
}

VerifyReport verify_cert(const json& cert) {
  const std::string kind = field(cert, "kind").get<std::string>();
  const RadQuotientRing r = ring_from_json(field(cert, "ring"));
  const RingPtr& ring = r.ring();
  const Poly one = Poly::constant(ring, 1);
  Checker ck(r);

  if (kind == "kdim") {
    zariski::DimCert d;
    d.xs = vec_from_json(ring, field(cert, "xs"));
    d.ms = field(cert, "ms").get<std::vector<unsigned>>();
    d.as = vec_from_json(ring, field(cert, "as"));
    d.bs = vec_from_json(ring, field(cert, "bs"));
    if (d.ms.size() != d.xs.size() || d.as.size() != d.xs.size() || d.bs.size() != d.xs.size())
      throw InputError("dimension certificate sequences differ in length");
    const Poly collapse = zariski::collapse_polynomial(ring, d.xs, d.ms, d.as);
    const Vec cof = vec_from_json(ring, field(field(cert, "verification"), "identity"));
    ck.expect(poly::witness_holds(MembershipWitness{collapse, 1, cof}, r.modulus.gens()),
              "collapse identity does not reduce to zero");
    ck.expect(d.bs == zariski::complements(ring, d.xs, d.ms, d.as), "complements do not match the identity");
    ck.expect(zariski::verify_complementary(r, d.bs, d.xs).holds, "sequences are not complementary");
    return ck.done();
  }

  const json& in = field(cert, "inputs");
  const json& out = field(cert, "outputs");
  if (kind == "kronecker") {
    const Vec inputs = vec_from_json(ring, field(in, "gens"));
    const Vec outputs = vec_from_json(ring, field(out, "gens"));
    const json& claims = field(cert, "claims");
    const json& fwd = field(claims, "forward");
    const json& bwd = field(claims, "backward");
    ck.expect(fwd.size() == inputs.size(), "one forward claim is needed per input");
    ck.expect(bwd.size() == outputs.size(), "one backward claim is needed per output");
    for (std::size_t i = 0; i < std::min(fwd.size(), inputs.size()); ++i)
      ck.claim(fwd[i], inputs[i], outputs, true, "forward claim " + std::to_string(i));
    for (std::size_t i = 0; i < std::min(bwd.size(), outputs.size()); ++i)
      ck.claim(bwd[i], outputs[i], inputs, false, "backward claim " + std::to_string(i));
  } else if (kind == "bass") {
    const Poly a = poly_from_json(ring, field(in, "a"));
    const Vec bs = vec_from_json(ring, field(in, "bs"));
    const Vec xs = vec_from_json(ring, field(out, "xs"));
    if (xs.size() != bs.size()) throw InputError("bass certificate has the wrong number of multipliers");
    Vec combined;
    for (std::size_t i = 0; i < bs.size(); ++i) combined.push_back(bs[i] + a * xs[i]);
    ck.expect(combined == vec_from_json(ring, field(out, "combined")), "combined vector does not match b + a x");
    Vec hyp = bs;
    hyp.push_back(a);
    ck.claim(field(field(cert, "claims"), "hypothesis"), one, hyp, false, "hypothesis");
    ck.claim(field(field(cert, "claims"), "conclusion"), one, combined, false, "conclusion");
  } else if (kind == "unimod-e1") {
    const Vec v = vec_from_json(ring, field(in, "v"));
    const Script s = script_from_json(ring, field(out, "script"));
    ck.claim(field(field(cert, "claims"), "hypothesis"), one, v, false, "hypothesis");
    Vec e = zeros(ring, static_cast<int>(v.size()));
    e[0] = one;
    ck.vanishes(minus(replay(s, v), e), "replay does not end at e1");
  } else if (kind == "serre-split") {
    const Matrix F = matrix_from_json(ring, field(in, "F"));
    const int k = field(in, "k").get<int>();
    const Vec t = vec_from_json(ring, field(out, "t"));
    const Vec C = vec_from_json(ring, field(out, "C"));
    const Vec lambda = vec_from_json(ring, field(out, "lambda"));
    if (F.rows() != F.cols() || static_cast<int>(C.size()) != F.rows() || lambda.size() != C.size() ||
        static_cast<int>(t.size()) + 1 != F.cols())
      throw InputError("serre-split certificate has inconsistent shapes");
    std::vector<Vec> G;
    for (int j = 1; j < F.cols(); ++j) G.push_back(F.column(j));
    ck.congruent(F * F, F, "F is not idempotent");
    ck.expect(C == combine(F.column(0), G, t), "C is not the stated column combination");
    ck.vanishes(minus(F.apply(C), C), "F C differs from C");
    ck.vanishes(poly::dot(lambda, C) - one, "lambda(C) differs from 1");
    ck.claim(field(field(cert, "claims"), "delta"), one, determinantal_ideal(F, k), false, "Delta_k claim");
    ck.claim(field(field(cert, "claims"), "unimodular"), one, C, false, "unimodularity claim");
  } else if (kind == "swan") {
    const Matrix F = matrix_from_json(ring, field(in, "presentation"));
    const int target = field(in, "target").get<int>();
    const Matrix P = matrix_from_json(ring, field(out, "P"));
    const Matrix Q = matrix_from_json(ring, field(out, "Q"));
    const Matrix Rel = matrix_from_json(ring, field(out, "Rel"));
    const int q = F.rows();
    // Empty matrices lose their shape in JSON; rebuild it from the others.
    const Matrix Pq = P.rows() == 0 ? Matrix(ring, q, 0) : P;
    const Matrix Qq = Q.rows() == 0 ? Matrix(ring, Pq.cols(), q) : Q;
    const Matrix Rq = Rel.rows() == 0 ? Matrix(ring, F.cols(), q) : Rel;
    ck.expect(Pq.rows() == q && Pq.cols() == target, "P does not have the target number of columns");
    if (Pq.rows() == q && Qq.rows() == Pq.cols() && Qq.cols() == q && Rq.rows() == F.cols() && Rq.cols() == q &&
        F.rows() == q)
      ck.expect(Pq * Qq + F * Rq == Matrix::identity(ring, q), "old generators are not recovered exactly");
    else
      ck.expect(false, "swan certificate has inconsistent shapes");
  } else if (kind == "cancel") {
    const Matrix F = matrix_from_json(ring, field(in, "F"));
    const Vec C = vec_from_json(ring, field(in, "C"));
    const Poly a = poly_from_json(ring, field(in, "a"));
    const Vec t = vec_from_json(ring, field(out, "t"));
    const Vec Cp = vec_from_json(ring, field(out, "Cprime"));
    const Vec lambda = vec_from_json(ring, field(out, "lambda"));
    const int m = F.rows();
    if (F.cols() != m || static_cast<int>(C.size()) != m || static_cast<int>(t.size()) != m ||
        static_cast<int>(Cp.size()) != m || static_cast<int>(lambda.size()) != m)
      throw InputError("cancel certificate has inconsistent shapes");
    const json& psi = field(out, "psi");
    const json& inv = field(out, "psiInverse");
    if (!psi.is_array() || psi.size() != 3 || !inv.is_array() || inv.size() != 3)
      throw InputError("cancel certificate needs three automorphisms and their inverses");
    ck.congruent(F * F, F, "F is not idempotent");
    ck.vanishes(minus(F.apply(C), C), "C is not in the image of F");
    ck.expect(Cp == F.apply(t), "C' differs from F t");
    ck.vanishes(poly::dot(lambda, add(C, scale(a, Cp))) - one, "lambda(C + aC') differs from 1");
    Vec ca = C;
    ca.push_back(a);
    ck.claim(field(field(cert, "claims"), "hypothesis"), one, ca, false, "hypothesis");
    const Matrix id = Matrix::identity(ring, m + 1);
    Matrix total = id;
    for (int i = 0; i < 3; ++i) {
      const Matrix p = matrix_from_json(ring, psi[i]);
      const Matrix q = matrix_from_json(ring, inv[i]);
      ck.congruent(p * q, id, "automorphism " + std::to_string(i + 1) + " times its inverse is not the identity");
      ck.congruent(q * p, id, "inverse " + std::to_string(i + 1) + " times the automorphism is not the identity");
      if (p.rows() == m + 1 && p.cols() == m + 1) total = p * total;
    }
    Vec e = zeros(ring, m + 1);
    e[m] = one;
    ck.vanishes(minus(total.apply(ca), e), "the automorphisms do not send (C, a) to (0, 1)");
  } else {
    throw InputError("unknown certificate kind \"" + kind + "\"");
  }
  return ck.done();
}

}  // namespace heitmann::genred
