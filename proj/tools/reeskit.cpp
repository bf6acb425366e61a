#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reeskit/cli.hpp"

using namespace reeskit;

namespace {

std::vector<std::string> split_checks(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "QQ" or "Fp=P"; 0 means QQ.
std::uint64_t parse_field(const std::string& s) {
  if (s == "QQ") return 0;
  if (s.rfind("Fp=", 0) != 0) throw ParseError(0, 0, "--field expects QQ or Fp=P, got '" + s + "'");
  try {
    std::size_t used = 0;
    auto p = std::stoull(s.substr(3), &used);
    if (used != s.size() - 3) throw std::invalid_argument(s);
    return p;
  } catch (const std::logic_error&) {
    throw ParseError(0, 0, "--field expects QQ or Fp=P, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebra and Koszul homology checks"};
  std::string file, checks, format = "markdown", field;
  std::optional<std::uint64_t> seed;
  std::optional<long> max_pairs, max_minor, red_cap, hilb_window;
  bool timings = false;
  app.add_option("file", file, "problem file, '-' for stdin")->required();
  app.add_option("--check", checks, "comma-separated: rank,proj-ci,ext-ci,min-gen,d2,hilb,gulliksen or none");
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--seed", seed, "seed for random choices");
  app.add_option("--field", field, "override the field: QQ or Fp=P");
  app.add_option("--max-pairs", max_pairs, "cap on critical pairs per Groebner basis");
  app.add_option("--max-minor", max_minor, "cap on matrix width for minors");
  app.add_option("--red-cap", red_cap, "cap on the reduction number search");
  app.add_option("--hilb-window", hilb_window, "t-degrees sampled by hilb");
  app.add_flag("--timings", timings, "include wall-clock timings");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  ProblemFile p;
  try {
    std::stringstream text;
    if (file == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) throw ParseError(0, 0, "cannot open " + file);
      text << in.rdbuf();
    }
    p = parse_problem(text.str());
    if (!checks.empty()) p.checks = checks == "none" ? std::vector<std::string>{} : split_checks(checks);
    if (!field.empty()) p.prime = parse_field(field);
    if (seed) p.seed = *seed;
    if (max_pairs) p.max_pairs = *max_pairs;
    if (max_minor) p.max_minor = *max_minor;
    if (red_cap) p.red_cap = *red_cap;
    if (hilb_window) p.hilb_window = *hilb_window;
    p = normalized(p);
  } catch (const ParseError& e) {
    std::cerr << (file == "-" ? "<stdin>" : file) << (e.line() > 0 ? ":" : ": ") << e.what() << "\n";
    return 4;
  }

  auto doc = run(p);
  std::cout << render(doc, format == "json" ? Format::Json : Format::Markdown, timings);
  return doc.exit_code();
}
