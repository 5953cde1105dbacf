// logtoric: run a problem file and print its certificate.

#include "logtoric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

int main(int argc, char** argv) {
  using namespace logtoric::cli;

  CLI::App app{"Exact toric chart computations driven by a JSON problem file"};
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  std::string seed;
  app.add_option("-i,--input", input, "problem file, or - for stdin");
  app.add_option("-o,--output", output, "certificate destination, or - for stdout");
  app.add_option("-f,--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  // Accepted by the parser only so that it can be refused explicitly.
  auto* seed_opt = app.add_option("--seed", seed, "not supported")->group("");
  CLI11_PARSE(app, argc, argv);

  if (*seed_opt) {
    std::cerr << "--seed is not accepted: every computation is deterministic\n";
    return kExitParseError;
  }

  std::string text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << input << ": cannot open\n";
      return kExitParseError;
    }
    text = read_all(in);
  }

  ProblemFile problem;
  try {
    problem = parse(text);
  } catch (const ParseError& e) {
    std::cerr << (input == "-" ? "<stdin>" : input) << ": " << e.what() << '\n';
    return kExitParseError;
  }

  RunResult result = run(problem);
  std::string rendered =
      format == "json" ? result.certificate.dump(2) + "\n" : render_text(result.certificate);

  if (output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << output << ": cannot write\n";
      return kExitTaskFailure;
    }
    out << rendered;
  }
  return result.exit_code();
}
