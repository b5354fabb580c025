// etensor: command-line front end for embedding-tensor computations.
//
// Exit codes: 0 pass, 1 a mathematical check failed, 2 bad input (parse, shape, size cap, usage).

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "etensor/commands.hpp"
#include "etensor/errors.hpp"

namespace {

using etensor::io::Json;
using namespace etensor;

struct Options {
  std::string input;
  std::size_t cap = 0;
  std::string format = "json";
  CommandOptions command;
};

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Aligned text: scalar fields as "key  value", witnesses as a table, anything else compact.
std::string render_table(const Json& body) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& [k, v] : body.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : body.items()) {
    if (k == "witnesses") continue;
    out << std::left << std::setw(static_cast<int>(width) + 2) << k << cell(v) << "\n";
  }
  if (body.contains("witnesses") && !body["witnesses"].empty()) {
    std::vector<std::array<std::string, 3>> rows{{"axiom", "indices", "residual"}};
    for (const auto& w : body["witnesses"]) rows.push_back({cell(w["axiom"]), cell(w["indices"]), cell(w["residual"])});
    std::size_t a = 0, b = 0;
    for (const auto& r : rows) {
      a = std::max(a, r[0].size());
      b = std::max(b, r[1].size());
    }
    out << "\n";
    for (const auto& r : rows)
      out << std::left << std::setw(static_cast<int>(a) + 2) << r[0] << std::setw(static_cast<int>(b) + 2) << r[1]
          << r[2] << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with embedding tensors on 3-Lie algebras"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify-algebra", "Check the fundamental identity"},
      {"verify-rep", "Check the fundamental identity and the representation axioms"},
      {"check-et", "Check that T is an embedding tensor"},
      {"mc-check", "Evaluate the Maurer-Cartan defect (1/6){T,T,T}"},
      {"cohomology", "Compute Z, B and H at level --degree"},
      {"deform-check", "Check an order-n deformation"},
      {"deform-extend", "Extend an order-n deformation by one order, or report the obstruction"},
      {"equivalence-check", "Check equivalence data between two deformations"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "Algebra JSON file")->required();
    sub->add_option("--cap", opt.cap, "Maximum number of dense tensor entries");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    if (name == "cohomology") sub->add_option("--degree", opt.command.degree, "Cochain level k >= 1");
    if (name.rfind("deform", 0) == 0 || name == "equivalence-check")
      sub->add_option("--order", opt.command.order, "Truncation order (default: the order stored in the file)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opt.cap > 0) set_entry_cap(opt.cap);
    const CommandResult out = run_command(command, io::load_algebra(opt.input), opt.command);
    std::cout << (opt.format == "table" ? render_table(out.body) : io::dump(out.body));
    return out.code;
  } catch (const RejectedError& e) {
    std::cerr << "etensor: " << e.what() << "\n";
    return kFail;
  } catch (const UnverifiedError& e) {
    std::cerr << "etensor: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "etensor: " << e.what() << "\n";
    return kBadInput;
  }
}
