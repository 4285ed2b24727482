#include "commands.hpp"
#include "heitmann/errors.hpp"
#include "heitmann/lattice/dimension.hpp"
#include "heitmann/lattice/io.hpp"
#include "heitmann/lattice/spectra.hpp"

namespace heitmann::cli {

using namespace heitmann::lattice;

namespace {

json points_json(const FinPoset& p, Mask m) {
  json out = json::array();
  for (int i = 0; i < p.size(); ++i)
    if ((m >> i) & 1u) out.push_back(p.name(i));
  return out;
}

// Element given as point names; the down closure is taken.
Mask generated_element(const Lattice& t, const std::string& names) {
  Mask m = 0;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(' ');
    const auto e = cur.find_last_not_of(' ');
    if (b != std::string::npos) {
      const std::string name = cur.substr(b, e - b + 1);
      const int i = t.base().index_of(name);
      if (i < 0) throw ValidationError("unknown point \"" + name + "\"");
      m |= Mask{1} << i;
    }
    cur.clear();
  };
  for (char ch : names) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return t.generated(m);
}

json dimensions(const Lattice& t) {
  return json{{"kdim", kdim_upper(t)},
              {"kdimLower", kdim_lower(t)},
              {"kdimChain", kdim_chain(t)},
              {"hdim", hdim(t)},
              {"jdim", jdim(t)},
              {"kdimModJ0", kdim(kill(t, jacobson_zero(t)).target)}};
}

}  // namespace

void add_lattice_commands(CLI::App& app, Common& common, int& code) {
  auto* lat = app.add_subcommand("lattice", "Finite distributive lattices given by their poset of primes");
  lat->require_subcommand(1);

  auto* dim = lat->add_subcommand("dim", "Print one dimension of the lattice");
  static std::string poset_arg, kind = "kdim";
  dim->add_option("--poset", poset_arg, "Poset JSON (file or inline)")->required();
  dim->add_option("--kind", kind, "kdim, kdim-lower, chain, hdim, jdim, kdim-mod-j0 or all")
      ->check(CLI::IsMember({"kdim", "kdim-lower", "chain", "hdim", "jdim", "kdim-mod-j0", "all"}));
  dim->callback([&] {
    const Lattice t(poset_from_json(load_json(poset_arg)));
    if (kind == "all") return emit(common, dimensions(t));
    int d = 0;
    if (kind == "kdim") d = kdim_upper(t);
    if (kind == "kdim-lower") d = kdim_lower(t);
    if (kind == "chain") d = kdim_chain(t);
    if (kind == "hdim") d = hdim(t);
    if (kind == "jdim") d = jdim(t);
    if (kind == "kdim-mod-j0") d = kdim(kill(t, jacobson_zero(t)).target);
    emit_text(common, std::to_string(d));
    code = 0;
  });

  auto* info = lat->add_subcommand("info", "Summary of the lattice: size, join-irreducibles, J(0), dimensions");
  static std::string info_poset;
  info->add_option("--poset", info_poset, "Poset JSON (file or inline)")->required();
  info->callback([&] {
    const Lattice t(poset_from_json(load_json(info_poset)));
    json ji = json::array();
    for (Mask x : t.join_irreducibles()) ji.push_back(element_to_json(t, x));
    emit(common, json{{"points", t.points()},
                      {"elements", t.count_elements()},
                      {"joinIrreducibles", ji},
                      {"jacobsonZero", element_to_json(t, jacobson_zero(t))},
                      {"weaklyJacobson", is_weakly_jacobson(t)},
                      {"heitmannLattice", poset_to_json(heitmann_lattice(t).target.base())},
                      {"dimensions", dimensions(t)}});
  });

  auto* glue_cmd = lat->add_subcommand("glue", "Glue a diagram of principal quotients");
  static std::string diagram_arg;
  glue_cmd->add_option("--diagram", diagram_arg, "Diagram JSON (file or inline)")->required();
  glue_cmd->callback([&] {
    const Diagram d = diagram_from_json(load_json(diagram_arg));
    const GlueResult g = glue(d);
    json kernels = json::array();
    for (Mask k : g.kernels) kernels.push_back(element_to_json(g.lattice, k));
    emit(common, json{{"poset", poset_to_json(g.lattice.base())}, {"kernels", kernels}});
  });

  auto* quot = lat->add_subcommand("quotient", "Quotient T/(J=0, U=1) or by a boundary");
  static std::string quot_poset;
  static std::vector<std::string> zero, one;
  static std::string boundary, boundary_at;
  quot->add_option("--poset", quot_poset, "Poset JSON (file or inline)")->required();
  quot->add_option("--zero", zero, "Element sent to 0, as comma-separated generating points");
  quot->add_option("--one", one, "Element sent to 1, as comma-separated generating points");
  quot->add_option("--boundary", boundary, "krull-upper, krull-lower or heitmann")
      ->check(CLI::IsMember({"krull-upper", "krull-lower", "heitmann"}));
  quot->add_option("--at", boundary_at, "Element whose boundary is taken");
  quot->callback([&] {
    const Lattice t(poset_from_json(load_json(quot_poset)));
    QuotientMap q;
    if (!boundary.empty()) {
      if (!zero.empty() || !one.empty()) throw InputError("--boundary cannot be combined with --zero/--one");
      const BoundaryKind kind = boundary == "krull-upper"   ? BoundaryKind::KrullUpper
                                : boundary == "krull-lower" ? BoundaryKind::KrullLower
                                                            : BoundaryKind::Heitmann;
      q = boundary_quotient(t, kind, generated_element(t, boundary_at));
    } else {
      std::vector<Mask> z, u;
      for (const auto& s : zero) z.push_back(generated_element(t, s));
      for (const auto& s : one) u.push_back(generated_element(t, s));
      q = quotient(t, z, u);
    }
    emit(common, json{{"poset", poset_to_json(q.target.base())}, {"kept", points_json(t.base(), q.image)}});
  });
}

void add_spectra_commands(CLI::App& app, Common& common, int& code) {
  (void)code;
  auto* sp = app.add_subcommand("spectra", "Spectral spaces of finite lattices");
  sp->require_subcommand(1);

  auto* info = sp->add_subcommand("info", "Max, Min, jspec and Jspec of Spec T");
  static std::string poset_arg;
  info->add_option("--poset", poset_arg, "Poset JSON (file or inline)")->required();
  info->callback([&] {
    const Lattice t(poset_from_json(load_json(poset_arg)));
    const SpecSubsets s = spec_subsets(t);
    const FinPoset& p = t.base();
    emit(common, json{{"points", p.names()},
                      {"max", points_json(p, s.max)},
                      {"min", points_json(p, s.min)},
                      {"jspec", points_json(p, s.jspec)},
                      {"Jspec", points_json(p, s.Jspec)}});
  });

  auto* gl = sp->add_subcommand("glue", "Union of spectral spaces along open or closed overlaps");
  static std::vector<std::string> spaces;
  static std::string kind = "open";
  gl->add_option("--space", spaces, "Poset JSON of one space (repeat)")->required();
  gl->add_option("--kind", kind, "open or closed")->check(CLI::IsMember({"open", "closed"}));
  gl->callback([&] {
    std::vector<FinPoset> ps;
    for (const auto& s : spaces) ps.push_back(poset_from_json(load_json(s)));
    emit(common, poset_to_json(glue_spectra(ps, kind == "open" ? SubspaceKind::Open : SubspaceKind::Closed)));
  });

  auto* ex = sp->add_subcommand("heitmann-example", "Fan of maxima glued to a chain along one minimal point");
  static int maxima = 3, length = 1;
  ex->add_option("--maxima", maxima, "Number of maximal points in the fan")->check(CLI::Range(1, 20));
  ex->add_option("--length", length, "Length of the chain")->check(CLI::Range(0, 20));
  ex->callback([&] { emit(common, poset_to_json(heitmann_example(maxima, length))); });
}

}  // namespace heitmann::cli
