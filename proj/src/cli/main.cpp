#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "heitmann/errors.hpp"
#include "heitmann/lattice/poset.hpp"

namespace heitmann::cli {

json load_json(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open \"" + arg + "\"");
  return json::parse(in);
}

void emit_text(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write \"" + c.out + "\"");
  f << text << "\n";
}

void emit(const Common& c, const json& j) { emit_text(c, c.compact ? j.dump() : j.dump(2)); }

}  // namespace heitmann::cli

int main(int argc, char** argv) {
  using namespace heitmann;
  CLI::App app{"Constructive Krull and Heitmann dimension: lattices, spectra and generator reduction"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Common common;
  app.add_option("-o,--out", common.out, "Write the result to this file instead of stdout");
  app.add_option("--seed", common.seed, "Accepted and ignored; no verb draws random numbers");
  app.add_flag("--compact", common.compact, "Print JSON on one line");
  int code = 0;
  cli::add_lattice_commands(app, common, code);
  cli::add_spectra_commands(app, common, code);
  cli::add_ring_commands(app, common, code);
  cli::add_verify_command(app, common, code);
  try {
    app.parse(argc, argv);
    return code;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  } catch (const MathRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const lattice::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const lattice::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  }
}
