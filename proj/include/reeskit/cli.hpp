#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/verifiers.hpp"

namespace reeskit {

/// Problem file error with a 1-based position; line 0 when the problem came
/// from overrides rather than text.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  int line_, column_;
  std::string msg_;
};

/// Check names in the order they run.
const std::vector<std::string>& all_checks();
const std::vector<std::string>& default_checks();

struct ProblemFile {
  std::uint64_t prime = 0;  // 0 for QQ
  std::vector<std::string> vars;
  std::vector<std::string> quotient;  // forms, normalized
  std::vector<std::string> ideal;     // generators, normalized
  std::optional<std::vector<std::string>> checks;  // nullopt: defaults
  std::uint64_t seed = 0;
  std::optional<long> max_pairs, max_minor, red_cap, hilb_window;

  std::vector<std::string> effective_checks() const;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Grammar, one statement per ';':
///   field QQ | field Fp <p>
///   vars <name>, ...
///   quotient <label> = <form>, ...
///   ideal <label> = <generator>, ...
///   check <name>, ... | check none
///   seed <n>
///   max-pairs | max-minor | red-cap | hilb-window <n>
/// '#' starts a comment running to the end of the line.
ProblemFile parse_problem(const std::string& text);

/// Canonical text for a problem; parse_problem(echo(p)) == p.
std::string echo(const ProblemFile& p);

/// Re-checks and re-normalizes a problem changed after parsing (e.g. moved to
/// another field); throws ParseError with line 0.
ProblemFile normalized(const ProblemFile& p);

struct Stage {
  std::string name;
  double seconds = 0;
};

struct SidePresentation {
  std::vector<std::string> J_min;
  long mu = 0;
};

struct ReportDocument {
  std::string version;
  ProblemFile problem;
  std::string error;  // construction failure, empty otherwise
  long mu_I = 0;
  long dim_A = 0;
  SidePresentation rees, ext;
  std::vector<TheoremReport> reports;
  std::vector<Stage> stages;

  /// 0 all consistent or inapplicable, 2 some VIOLATION, 3 an engine error.
  int exit_code() const;
};

/// Applies the problem's caps, builds the presentations, then runs the
/// requested checks; a failing check becomes an error report.
ReportDocument run(const ProblemFile& p);

enum class Format { Json, Markdown };
/// JSON keys are sorted; timings appear only when asked for.
std::string render(const ReportDocument& d, Format f, bool timings = false);

}  // namespace reeskit
