#include "reeskit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace reeskit {

ParseError::ParseError(int line, int column, const std::string& msg)
    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + msg : msg),
      line_(line),
      column_(column),
      msg_(msg) {}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> v{"rank", "proj-ci", "ext-ci", "min-gen", "d2", "hilb", "gulliksen"};
  return v;
}

const std::vector<std::string>& default_checks() {
  static const std::vector<std::string> v{"rank", "ext-ci", "d2"};
  return v;
}

std::vector<std::string> ProblemFile::effective_checks() const { return checks ? *checks : default_checks(); }

namespace {

// A piece of the source with the offset of its first character.
struct Span {
  std::string text;
  std::size_t at = 0;
};

class Source {
 public:
  explicit Source(const std::string& text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '\n') newlines_.push_back(i);
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    auto it = std::lower_bound(newlines_.begin(), newlines_.end(), at);
    int line = static_cast<int>(it - newlines_.begin()) + 1;
    std::size_t start = it == newlines_.begin() ? 0 : *(it - 1) + 1;
    throw ParseError(line, static_cast<int>(at - start) + 1, msg);
  }

  std::size_t end() const { return text_.size(); }

 private:
  const std::string& text_;
  std::vector<std::size_t> newlines_;
};

Span trim(const Span& s) {
  std::size_t b = 0, e = s.text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s.text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s.text[e - 1]))) --e;
  return {s.text.substr(b, e - b), s.at + b};
}

std::vector<Span> split(const Span& s, char sep) {
  std::vector<Span> out;
  std::size_t from = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i == s.text.size() || s.text[i] == sep) {
      out.push_back(trim({s.text.substr(from, i - from), s.at + from}));
      from = i + 1;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Names the presentation rings add on top of the base variables.
bool is_reserved(const std::string& s) {
  if (s == "T") return true;
  return s.size() > 1 && s[0] == 'X' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<std::uint64_t> to_uint(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

RingPtr base_ring(const ProblemFile& p) {
  return standard_ring(p.prime ? Field::prime(p.prime) : Field::rationals(), p.vars);
}

// Parses a form or generator and returns its normalized text.
template <class Fail>
std::string checked_form(const std::string& text, const RingPtr& ring, const char* what, Fail&& fail) {
  Polynomial f;
  try {
    f = parse_polynomial(text, ring);
  } catch (const std::exception& e) {
    fail(std::string("cannot read ") + what + ": " + e.what());
  }
  if (f.is_zero()) fail(std::string(what) + " is zero");
  if (!f.is_homogeneous(ring->grading())) fail(std::string("inhomogeneous ") + what + " '" + text + "'");
  return f.to_string();
}

std::vector<std::string> canonical_checks(const std::vector<std::string>& given) {
  std::vector<std::string> out;
  for (const auto& c : all_checks())
    if (std::find(given.begin(), given.end(), c) != given.end()) out.push_back(c);
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& raw) {
  std::string text = raw;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '#')
      while (i < text.size() && text[i] != '\n') text[i++] = ' ';
  Source src(raw);

  ProblemFile p;
  bool have_field = false, have_vars = false, have_ideal = false, have_seed = false;
  RingPtr ring;

  auto statements = split({text, 0}, ';');
  if (!statements.back().text.empty()) src.fail(statements.back().at, "missing ';'");
  statements.pop_back();

  for (const auto& st : statements) {
    if (st.text.empty()) continue;
    std::size_t k = 0;
    while (k < st.text.size() && !std::isspace(static_cast<unsigned char>(st.text[k]))) ++k;
    std::string key = st.text.substr(0, k);
    Span rest = trim({st.text.substr(k), st.at + k});

    if (key == "field") {
      if (have_field) src.fail(st.at, "field given twice");
      if (have_vars) src.fail(st.at, "field must come before vars");
      have_field = true;
      auto words = split(rest, ' ');
      words.erase(std::remove_if(words.begin(), words.end(), [](const Span& w) { return w.text.empty(); }), words.end());
      if (words.size() == 1 && words[0].text == "QQ") continue;
      if (words.empty() || words[0].text != "Fp") src.fail(rest.at, "unknown field '" + rest.text + "'");
      if (words.size() != 2) src.fail(rest.at, "expected 'Fp <prime>'");
      auto n = to_uint(words[1].text);
      if (!n) src.fail(words[1].at, "modulus '" + words[1].text + "' is not an integer");
      if (!is_prime(*n)) src.fail(words[1].at, "modulus " + words[1].text + " is not prime");
      p.prime = *n;
    } else if (key == "vars") {
      if (have_vars) src.fail(st.at, "vars given twice");
      have_vars = true;
      for (const auto& v : split(rest, ',')) {
        if (!is_identifier(v.text)) src.fail(v.at, "bad variable name '" + v.text + "'");
        if (is_reserved(v.text)) src.fail(v.at, "variable name '" + v.text + "' is reserved");
        if (std::find(p.vars.begin(), p.vars.end(), v.text) != p.vars.end())
          src.fail(v.at, "repeated variable '" + v.text + "'");
        p.vars.push_back(v.text);
      }
      ring = base_ring(p);
    } else if (key == "quotient" || key == "ideal") {
      if (!have_vars) src.fail(st.at, key + " before vars");
      if (key == "ideal" && have_ideal) src.fail(st.at, "ideal given twice");
      auto eq = rest.text.find('=');
      if (eq == std::string::npos) src.fail(rest.at, "expected '<name> = ...'");
      Span label = trim({rest.text.substr(0, eq), rest.at});
      if (!is_identifier(label.text)) src.fail(label.at, "bad name '" + label.text + "'");
      auto& out = key == "ideal" ? p.ideal : p.quotient;
      for (const auto& g : split({rest.text.substr(eq + 1), rest.at + eq + 1}, ',')) {
        const char* what = key == "ideal" ? "generator" : "form";
        out.push_back(checked_form(g.text, ring, what, [&](const std::string& m) { src.fail(g.at, m); }));
      }
      if (key == "ideal") have_ideal = true;
    } else if (key == "check") {
      std::vector<std::string> given;
      if (rest.text != "none") {
        for (const auto& c : split(rest, ',')) {
          if (std::find(all_checks().begin(), all_checks().end(), c.text) == all_checks().end())
            src.fail(c.at, "unknown check '" + c.text + "'");
          given.push_back(c.text);
        }
      }
      auto merged = p.checks.value_or(std::vector<std::string>{});
      merged.insert(merged.end(), given.begin(), given.end());
      p.checks = canonical_checks(merged);
    } else if (key == "seed") {
      if (have_seed) src.fail(st.at, "seed given twice");
      have_seed = true;
      auto n = to_uint(rest.text);
      if (!n) src.fail(rest.at, "seed must be a non-negative integer");
      p.seed = *n;
    } else if (key == "max-pairs" || key == "max-minor" || key == "red-cap" || key == "hilb-window") {
      auto n = to_uint(rest.text);
      if (!n || *n == 0) src.fail(rest.at, key + " must be a positive integer");
      auto& slot = key == "max-pairs" ? p.max_pairs
                   : key == "max-minor" ? p.max_minor
                   : key == "red-cap"   ? p.red_cap
                                        : p.hilb_window;
      slot = static_cast<long>(*n);
    } else {
      src.fail(st.at, "unknown statement '" + key + "'");
    }
  }
  if (!have_vars) src.fail(src.end(), "missing 'vars' statement");
  if (!have_ideal) src.fail(src.end(), "missing 'ideal' statement");
  return p;
}

ProblemFile normalized(const ProblemFile& in) {
  if (in.prime && !is_prime(in.prime)) throw ParseError(0, 0, "modulus " + std::to_string(in.prime) + " is not prime");
  ProblemFile p = in;
  auto ring = base_ring(p);
  auto fix = [&](std::vector<std::string>& v, const char* what) {
    for (auto& s : v) s = checked_form(s, ring, what, [&](const std::string& m) -> void { throw ParseError(0, 0, m); });
  };
  fix(p.quotient, "form");
  fix(p.ideal, "generator");
  if (p.ideal.empty()) throw ParseError(0, 0, "empty ideal");
  if (p.checks) {
    for (const auto& c : *p.checks)
      if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
        throw ParseError(0, 0, "unknown check '" + c + "'");
    p.checks = canonical_checks(*p.checks);
  }
  return p;
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string echo(const ProblemFile& p) {
  std::ostringstream o;
  o << "field " << (p.prime ? "Fp " + std::to_string(p.prime) : std::string("QQ")) << ";\n";
  o << "vars " << join(p.vars, ", ") << ";\n";
  if (!p.quotient.empty()) o << "quotient f = " << join(p.quotient, ", ") << ";\n";
  o << "ideal I = " << join(p.ideal, ", ") << ";\n";
  if (p.checks) o << "check " << (p.checks->empty() ? std::string("none") : join(*p.checks, ", ")) << ";\n";
  o << "seed " << p.seed << ";\n";
  if (p.max_pairs) o << "max-pairs " << *p.max_pairs << ";\n";
  if (p.max_minor) o << "max-minor " << *p.max_minor << ";\n";
  if (p.red_cap) o << "red-cap " << *p.red_cap << ";\n";
  if (p.hilb_window) o << "hilb-window " << *p.hilb_window << ";\n";
  return o.str();
}

int ReportDocument::exit_code() const {
  bool violation = false, error_seen = !error.empty();
  for (const auto& r : reports) {
    violation = violation || r.status == ReportStatus::Violation;
    error_seen = error_seen || r.status == ReportStatus::Error;
  }
  if (violation) return 2;
  return error_seen ? 3 : 0;
}

namespace {

// Process-wide caps set for one run and restored afterwards.
class CapScope {
 public:
  explicit CapScope(const ProblemFile& p)
      : gb_(default_gb_options()), mat_(default_matrix_caps()), rnd_(default_random_options()) {
    if (p.max_pairs) default_gb_options().max_pairs = static_cast<std::size_t>(*p.max_pairs);
    if (p.max_minor) default_matrix_caps().max_minor = static_cast<std::size_t>(*p.max_minor);
    if (p.red_cap) default_random_options().red_cap = static_cast<int>(*p.red_cap);
  }
  ~CapScope() {
    default_gb_options() = gb_;
    default_matrix_caps() = mat_;
    default_random_options() = rnd_;
  }
  CapScope(const CapScope&) = delete;
  CapScope& operator=(const CapScope&) = delete;

 private:
  GbOptions gb_;
  MatrixCaps mat_;
  RandomOptions rnd_;
};

SidePresentation side_of(const std::vector<Polynomial>& gens) {
  SidePresentation s;
  for (const auto& g : gens) s.J_min.push_back(g.to_string());
  s.mu = static_cast<long>(gens.size());
  return s;
}

}  // namespace

ReportDocument run(const ProblemFile& p) {
  ReportDocument d;
  d.version = REESKIT_VERSION;
  d.problem = p;
  CapScope caps(p);
  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  std::optional<Analysis> a;
  try {
    auto ring = base_ring(p);
    std::vector<Polynomial> forms, gens;
    for (const auto& f : p.quotient) forms.push_back(parse_polynomial(f, ring));
    for (const auto& g : p.ideal) gens.push_back(parse_polynomial(g, ring));
    a.emplace(rees_presentation(BaseRing::make(ring, forms), gens));
    d.mu_I = static_cast<long>(a->rees().mu_I());
    d.dim_A = a->rees().base.dim;
    d.rees = side_of(a->J_min(Side::Rees));
    d.ext = side_of(a->J_min(Side::Ext));
  } catch (const std::exception& e) {
    d.error = e.what();
  }
  d.stages.push_back({"presentations", std::chrono::duration<double>(clock::now() - t0).count()});
  if (!a) return d;

  for (const auto& check : p.effective_checks()) {
    auto t = clock::now();
    auto one = [&](const std::function<TheoremReport()>& body) {
      d.reports.push_back(guarded(check, echo(p), body));
    };
    if (check == "rank") one([&] { return check_rank_formula(*a); });
    if (check == "proj-ci") one([&] { return verify_thm_proj_ci(*a); });
    if (check == "ext-ci") one([&] { return verify_thm_ext_ci(*a); });
    if (check == "min-gen") one([&] { return verify_min_gen_bound(*a, p.seed); });
    if (check == "d2") one([&] { return verify_d2_criteria(*a); });
    if (check == "gulliksen") one([&] { return gulliksen_locus_check(*a); });
    if (check == "hilb") {
      int window = p.hilb_window ? static_cast<int>(*p.hilb_window) : 8;
      for (int i = 1; i <= std::max(1L, d.dim_A); ++i) one([&] { return hilbert_degree_D2(*a, i, window); });
    }
    d.stages.push_back({check, std::chrono::duration<double>(clock::now() - t).count()});
  }
  return d;
}

namespace {

using nlohmann::json;

json verdict_value(const Verdict& v) {
  return std::visit([](const auto& x) { return json(x); }, v.value);
}

std::string value_text(const Verdict& v) {
  if (auto b = std::get_if<bool>(&v.value)) return *b ? "true" : "false";
  if (auto n = std::get_if<long>(&v.value)) return std::to_string(*n);
  return std::get<std::string>(v.value);
}

json to_json(const ReportDocument& d, bool timings) {
  const auto& p = d.problem;
  json input = {{"text", echo(p)},
                {"field", p.prime ? "F_" + std::to_string(p.prime) : std::string("QQ")},
                {"vars", p.vars},
                {"quotient", p.quotient},
                {"ideal", p.ideal},
                {"checks", p.effective_checks()},
                {"seed", p.seed}};
  json pres = {{"mu_I", d.mu_I},
               {"dim_A", d.dim_A},
               {"rees", {{"J_min", d.rees.J_min}, {"mu_J", d.rees.mu}}},
               {"ext", {{"J_min", d.ext.J_min}, {"mu_J", d.ext.mu}}}};
  json reports = json::array();
  std::map<std::string, long> counts{{"consistent", 0}, {"VIOLATION", 0}, {"inapplicable", 0}, {"error", 0}};
  for (const auto& r : d.reports) {
    json vs = json::array();
    for (const auto& v : r.verdicts)
      vs.push_back({{"name", v.name}, {"value", verdict_value(v)}, {"certificate", v.certificate}});
    json jr = {{"check", r.check}, {"input", r.input}, {"status", to_string(r.status)}, {"note", r.note}, {"verdicts", vs}};
    if (timings) jr["seconds"] = r.seconds;
    reports.push_back(jr);
    ++counts[to_string(r.status)];
  }
  json out = {{"schema_version", 1},
              {"tool", "reeskit"},
              {"version", d.version},
              {"input", input},
              {"error", d.error},
              {"presentations", pres},
              {"reports", reports},
              {"summary", {{"counts", counts}, {"exit_code", d.exit_code()}}}};
  if (timings) {
    json st = json::array();
    for (const auto& s : d.stages) st.push_back({{"name", s.name}, {"seconds", s.seconds}});
    out["timings"] = st;
  }
  return out;
}

std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string markdown(const ReportDocument& d, bool timings) {
  std::ostringstream o;
  o << "# reeskit " << d.version << " report\n\n";
  o << "```\n" << echo(d.problem) << "```\n\n";
  if (!d.error.empty()) {
    o << "**ERROR** building presentations: " << d.error << "\n";
    return o.str();
  }
  o << "mu(I) = " << d.mu_I << ", dim A = " << d.dim_A << "\n\n";
  o << "- J (" << d.rees.mu << " generators): " << join(d.rees.J_min, ", ") << "\n";
  o << "- J^ (" << d.ext.mu << " generators): " << join(d.ext.J_min, ", ") << "\n\n";
  if (d.reports.empty()) return o.str();

  o << "| check | status | verdicts |\n|---|---|---|\n";
  for (const auto& r : d.reports) {
    std::string status = to_string(r.status);
    if (r.status == ReportStatus::Violation) status = "**!! VIOLATION !!**";
    std::vector<std::string> vs;
    for (const auto& v : r.verdicts) vs.push_back(v.name + "=" + value_text(v));
    if (!r.note.empty()) vs.push_back("note: " + r.note);
    o << "| " << r.check << " | " << status << " | " << cell(join(vs, ", ")) << " |\n";
  }
  o << "\n## Certificates\n";
  for (const auto& r : d.reports) {
    bool any = std::any_of(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return !v.certificate.empty(); });
    if (!any) continue;
    o << "\n### " << r.check << "\n";
    for (const auto& v : r.verdicts)
      if (!v.certificate.empty()) o << "- " << v.name << ": " << v.certificate << "\n";
  }
  if (timings) {
    o << "\n## Timings\n";
    for (const auto& s : d.stages) o << "- " << s.name << ": " << s.seconds << " s\n";
  }
  return o.str();
}

}  // namespace

std::string render(const ReportDocument& d, Format f, bool timings) {
  if (f == Format::Json) return to_json(d, timings).dump(2) + "\n";
  return markdown(d, timings);
}

}  // namespace reeskit
