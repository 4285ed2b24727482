#include <iostream>

#include "commands.hpp"
#include "heitmann/errors.hpp"
#include "heitmann/genred/cert.hpp"

namespace heitmann::cli {

using namespace heitmann::genred;

namespace {

struct RingArgs {
  std::string ring;
  RadQuotientRing load() const { return ring_from_json(load_json(ring)); }
};

void add_ring_option(CLI::App* cmd, RingArgs& r) {
  cmd->add_option("--ring", r.ring, "Ring JSON {char, vars, modulus} (file or inline)")->required();
}

Matrix load_matrix(const RingPtr& ring, const std::string& arg) { return matrix_from_json(ring, load_json(arg)); }

// Every certificate is re-read from its serialized form and re-verified
// before it is printed.
void emit_cert(const Common& c, const json& cert) {
  const json again = json::parse(cert.dump());
  if (again != cert) throw MathRefusal("internal: certificate does not round-trip");
  const VerifyReport rep = verify_cert(again);
  if (!rep.ok) throw MathRefusal("internal: emitted certificate fails verification: " + rep.failures.front());
  emit(c, cert);
}

}  // namespace

void add_ring_commands(CLI::App& app, Common& common, int& code) {
  auto* ring = app.add_subcommand("ring", "Constructions over K[X]/I with certificates");
  ring->require_subcommand(1);

  {
    auto* cmd = ring->add_subcommand("kdim-cert", "Certificate that a sequence collapses (Krull dimension below its length)");
    static RingArgs r;
    static std::string seq;
    static int bound = zariski::kDefaultDegreeBound;
    add_ring_option(cmd, r);
    cmd->add_option("--seq", seq, "Comma-separated sequence x0, x1, ...")->required();
    cmd->add_option("--degree-bound", bound, "Largest degree allowed in the certificate")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      auto cert = zariski::dim_cert_search(A, poly::parse_poly_list(A.ring(), seq), bound);
      if (!cert) {
        emit_text(common, "no-collapse");
        code = 1;
        return;
      }
      json j = to_cert(A, *cert);
      if (!verify_cert(json::parse(j.dump())).ok) throw MathRefusal("internal: certificate fails verification");
      emit(common, j);
    });
  }
  {
    auto* cmd = ring->add_subcommand("kronecker", "Fewer generators with the same radical");
    static RingArgs r;
    static std::string gens, route = "krull";
    add_ring_option(cmd, r);
    cmd->add_option("--gens", gens, "Comma-separated generators")->required();
    cmd->add_option("--route", route, "krull (complementary sequences) or heitmann (localized)")
        ->check(CLI::IsMember({"krull", "heitmann"}));
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      const auto k = kronecker_reduce(A, poly::parse_poly_list(A.ring(), gens),
                                      route == "krull" ? KroneckerRoute::Krull : KroneckerRoute::Heitmann);
      emit_cert(common, to_cert(A, k));
    });
  }
  {
    auto* cmd = ring->add_subcommand("bass", "x with b + a x unimodular, given (a, b) unimodular");
    static RingArgs r;
    static std::string a, bs;
    add_ring_option(cmd, r);
    cmd->add_option("--a", a, "The element a")->required();
    cmd->add_option("--bs", bs, "Comma-separated b1, ..., bn")->required();
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      emit_cert(common, to_cert(A, bass_stable_range(A, poly::parse_poly(A.ring(), a),
                                                      poly::parse_poly_list(A.ring(), bs))));
    });
  }
  {
    auto* cmd = ring->add_subcommand("unimod-e1", "Elementary operations taking a unimodular vector to e1");
    static RingArgs r;
    static std::string v;
    add_ring_option(cmd, r);
    cmd->add_option("--v", v, "Comma-separated entries")->required();
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      emit_cert(common, to_cert(A, unimodular_to_e1(A, poly::parse_poly_list(A.ring(), v))));
    });
  }
  {
    auto* cmd = ring->add_subcommand("serre-split", "Split a free rank-one summand off the image of an idempotent");
    static RingArgs r;
    static std::string matrix;
    static int k = 1;
    add_ring_option(cmd, r);
    cmd->add_option("--matrix", matrix, "Idempotent matrix, rows of polynomial strings")->required();
    cmd->add_option("--k", k, "Minor size with Delta_k(F) = 1")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      emit_cert(common, to_cert(A, serre_split(A, load_matrix(A.ring(), matrix), k)));
    });
  }
  {
    auto* cmd = ring->add_subcommand("swan", "Regenerate a finitely presented module with fewer generators");
    static RingArgs r;
    static std::string matrix;
    static int target = -1;
    add_ring_option(cmd, r);
    cmd->add_option("--presentation", matrix, "Relation matrix: one column per relation")->required();
    cmd->add_option("--target", target, "Number of generators (default: the least the theorem allows)");
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      const Matrix F = load_matrix(A.ring(), matrix);
      const int m = target >= 0 ? target : swan_bound(A, F);
      emit_cert(common, to_cert(A, forster_swan_generate(A, F, m)));
    });
  }
  {
    auto* cmd = ring->add_subcommand("cancel", "Automorphisms of N + A sending (C, a) to (0, 1)");
    static RingArgs r;
    static std::string matrix, C, a;
    static int k = 1;
    add_ring_option(cmd, r);
    cmd->add_option("--matrix", matrix, "Idempotent F with image N")->required();
    cmd->add_option("--C", C, "Comma-separated entries of C in N")->required();
    cmd->add_option("--a", a, "The element a")->required();
    cmd->add_option("--k", k, "Minor size with Delta_k(F) = 1")->check(CLI::PositiveNumber);
    cmd->callback([&] {
      const RadQuotientRing A = r.load();
      emit_cert(common, to_cert(A, bass_cancel(A, load_matrix(A.ring(), matrix), poly::parse_poly_list(A.ring(), C),
                                               poly::parse_poly(A.ring(), a), k)));
    });
  }
}

void add_verify_command(CLI::App& app, Common& common, int& code) {
  auto* cmd = app.add_subcommand("verify", "Re-check a certificate from scratch");
  static std::string path;
  cmd->add_option("--cert", path, "Certificate JSON (file or inline)")->required();
  cmd->callback([&] {
    const VerifyReport rep = verify_cert(load_json(path));
    json out{{"ok", rep.ok}, {"failures", rep.failures}};
    emit(common, out);
    code = rep.ok ? 0 : 1;
  });
}

}  // namespace heitmann::cli
