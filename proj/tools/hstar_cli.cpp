// hstar <command> [--input PATH] [--output PATH] [--seed N] [--attempts N] [--field F]

#include "hstar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using hstar::cli::json;

int emit(const json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hadamard star configurations"};
  std::string command;
  std::string input_path;
  std::string output_path;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::string field;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(hstar::cli::commands()));
  app.add_option("--input", input_path, "Input document (default: standard input)");
  app.add_option("--output", output_path, "Output document (default: standard output)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for search commands");
  auto* attempts_opt = app.add_option("--attempts", attempts, "Attempt budget for search commands");
  auto* field_opt = app.add_option("--field", field, "rational or quadext:<m>");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hstar::cli::Options opt;
  if (*seed_opt) opt.seed = seed;
  if (*attempts_opt) opt.attempts = attempts;

  json input = json::object();
  try {
    if (*field_opt) opt.field = hstar::cli::FieldPolicy::parse(field);
    std::string text;
    if (input_path.empty() || input_path == "-") {
      if (command != "verify-paper") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      }
    } else {
      std::ifstream in(input_path);
      if (!in) throw hstar::cli::SchemaError("cannot read " + input_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (text.find_first_not_of(" \t\r\n") != std::string::npos) input = json::parse(text);
  } catch (const std::exception& e) {
    emit(hstar::cli::detail::error_document(command, "schema", e.what()), output_path);
    return 2;
  }

  const auto outcome = hstar::cli::run(command, input, opt);
  if (emit(outcome.document, output_path) != 0) return 1;
  return outcome.exit_code;
}
