#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heitmann/genred/genred.hpp"

namespace heitmann::genred {

using nlohmann::json;

/// {"char": p, "vars": [...], "modulus": ["poly", ...]}; "modulus" may be
/// omitted. Throws InputError on malformed input.
RadQuotientRing ring_from_json(const json& j);
json ring_to_json(const RadQuotientRing& r);

json vec_to_json(const Vec& v);
Vec vec_from_json(const RingPtr& ring, const json& j);
/// Matrices are lists of rows, each a list of polynomial strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const RingPtr& ring, const json& j);

// Certificates. Each carries "kind", "ring", "inputs", "outputs" and, where
// the construction proves memberships, a "claims" list of
// {label, element, exponent, cofactors}. Generator lists are never stored:
// the verifier rebuilds them from the inputs and outputs.
json to_cert(const RadQuotientRing& r, const KroneckerReduce& k);
json to_cert(const RadQuotientRing& r, const BassStableRange& b);
json to_cert(const RadQuotientRing& r, const UnimodularToE1& u);
json to_cert(const RadQuotientRing& r, const SerreSplit& s);
json to_cert(const RadQuotientRing& r, const SwanGenerate& s);
json to_cert(const RadQuotientRing& r, const BassCancel& c);
json to_cert(const RadQuotientRing& r, const zariski::DimCert& c);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-checks a certificate from its JSON alone. Malformed certificates throw
/// InputError; failed identities are reported, not thrown.
VerifyReport verify_cert(const json& cert);

}  // namespace heitmann::genred
