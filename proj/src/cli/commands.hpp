#pragma once

#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace heitmann::cli {

using nlohmann::json;

/// Options shared by every verb.
struct Common {
  std::string out;  // empty: stdout
  unsigned long seed = 0;
  bool compact = false;
};

/// Reads a JSON argument: inline text when it starts with '{' or '[',
/// otherwise a file path.
json load_json(const std::string& arg);
/// Writes `j` to the output path or stdout.
void emit(const Common& c, const json& j);
void emit_text(const Common& c, const std::string& text);

/// Registers the subcommands; each stores its action in the callback and
/// returns the exit code through `code`.
void add_lattice_commands(CLI::App& app, Common& common, int& code);
void add_spectra_commands(CLI::App& app, Common& common, int& code);
void add_ring_commands(CLI::App& app, Common& common, int& code);
void add_verify_command(CLI::App& app, Common& common, int& code);

}  // namespace heitmann::cli
