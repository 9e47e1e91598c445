#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "jumpnum/cluster.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum::cli {

enum class Command { resolve, jump, relevance, oracle, graph };
enum class Format { text, json };

struct RunConfig {
  Command command = Command::resolve;
  std::optional<std::string> poly;
  std::optional<std::string> branches_file;
  std::optional<std::string> diagram_file;
  Rational bound = Rational(1);
  Format format = Format::text;
  int ext_depth = 2;
  std::optional<unsigned long long> seed;  // reruns every unloading in a shuffled order as a self-check
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Diagram from the branch file format.
EnriquesDiagram read_branches(const nlohmann::json& doc);
/// Diagram from the explicit diagram file format.
EnriquesDiagram read_diagram(const nlohmann::json& doc);

/// The report as a json document. Throws InputError / InvariantError.
nlohmann::json report(const RunConfig& config);
/// Text rendering of a report produced by `report`.
std::string render_text(const nlohmann::json& doc);

/// Writes the report to out, diagnostics to err; returns the exit code
/// (0 success, 1 input error, 2 internal invariant failure).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line handling; argv[0] is the program name.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jumpnum::cli
