// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cfapprox/cli/number_spec.hpp"
#include "cfapprox/errors.hpp"
#include "cfapprox/verify/verify.hpp"
#include "json.hpp"

namespace cfapprox::cli {

namespace {

using json = nlohmann::ordered_json;
using bounds::BoundKind;
using bounds::BoundSpec;
using bounds::Outcome;
using verify::ExactNumber;

// ------------------------------------------------------------------ output

enum class Format { json, csv };

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (!v.is_string()) return v.dump();
  const auto& s = v.get_ref<const std::string&>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Fixed field list per command; absent fields are emitted as null.
class Table {
 public:
  Table(Format format, std::vector<std::string> fields) : format_(format), fields_(std::move(fields)) {}

  std::string header() const {
    if (format_ == Format::json) return "";
    std::string line;
    for (std::size_t i = 0; i < fields_.size(); ++i) line += (i ? "," : "") + fields_[i];
    return line + "\n";
  }

  std::string line(const json& row) const {
    if (format_ == Format::json) {
      json ordered = json::object();
      for (const auto& f : fields_) ordered[f] = row.contains(f) ? row[f] : json(nullptr);
      return ordered.dump() + "\n";
    }
    std::string line;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      line += (i ? "," : "") + (row.contains(fields_[i]) ? csv_cell(row[fields_[i]]) : std::string());
    }
    return line + "\n";
  }

 private:
  Format format_;
  std::vector<std::string> fields_;
};

json truth(verify::Truth t) {
  if (t == verify::Truth::unknown) return "unknown";
  return t == verify::Truth::yes;
}

json family_name(const std::optional<cf::ExtremalFamily>& f) {
  if (!f) return nullptr;
  return *f == cf::ExtremalFamily::alpha1 ? "alpha1" : "alpha2";
}

bool uses_k(BoundKind kind) { return kind == BoundKind::nathanson || kind == BoundKind::refined_f; }

// ------------------------------------------------------------- predictions

// What the theorems say about convergent n of x for this bound, if
// anything: Dirichlet for every n; equality for the refined bound (and
// strict Nathanson) at the parity fixed by the extremal family.
std::optional<Outcome> predicted(const ExactNumber& x, const BoundSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case BoundKind::dirichlet:
      return Outcome::holds_strict;
    case BoundKind::refined_f:
    case BoundKind::hancl_g:
    case BoundKind::nathanson: {
      const unsigned long k = spec.kind == BoundKind::hancl_g ? 1 : spec.k;
      const auto family = verify::extremal_family(x, k);
      if (!family || !verify::predicted_equal(*family, k, n)) return std::nullopt;
      return spec.kind == BoundKind::nathanson ? Outcome::holds_strict : Outcome::holds_equal;
    }
    default:
      return std::nullopt;
  }
}

json record_row(const std::string& input, const char* command, const BoundSpec& spec,
                const verify::VerificationRecord& r) {
  json row;
  row["input"] = input;
  row["command"] = command;
  row["bound"] = std::string(bounds::name(spec.kind));
  row["k"] = uses_k(spec.kind) ? json(spec.k) : json(nullptr);
  row["n"] = r.n;
  row["p"] = r.p.get_str();
  row["q"] = r.q.get_str();
  row["outcome"] = std::string(bounds::name(r.outcome));
  row["margin_sign"] = r.margin_sign;
  row["margin_decimal_50"] = to_decimal(r.margin, 50);
  return row;
}

// ---------------------------------------------------------------- commands

struct Options {
  Format format = Format::json;
  std::string number;
  std::size_t n = 0;
  std::string bound;
  unsigned long k = 1;
  std::string k_range;
  std::size_t depth = 20;
  std::string rule;
  std::string corpus;
};

struct CommandError {
  int code;
  std::string message;
};

ExactNumber exact(const verify::Number& x) { return verify::resolve(x); }

int cmd_expand(const Options& o, const verify::Number& x, std::ostream& out) {
  Table t(o.format, {"input", "command", "cf", "exact"});
  json row{{"input", o.number}, {"command", "expand"}};
  if (const auto* d = std::get_if<verify::DecimalPrefix>(&x)) {
    const auto prefix = verify::certain_prefix(*d);
    std::string s = "[";
    for (std::size_t i = 0; i < prefix.size(); ++i) s += prefix[i].get_str() + (i == 0 ? ";" : ",");
    row["cf"] = s + "...]";
    row["exact"] = false;
  } else {
    row["cf"] = exact(x).cf.to_string();
    row["exact"] = true;
  }
  out << t.header() << t.line(row);
  return kExitOk;
}

int cmd_convergents(const Options& o, const verify::Number& x, std::ostream& out) {
  std::vector<cf::Convergent> list;
  if (const auto* d = std::get_if<verify::DecimalPrefix>(&x)) {
    // Only the certain quotients of the interval carry over.
    const auto prefix = verify::certain_prefix(*d);
    if (o.n >= prefix.size()) {
      throw RangeError("only " + std::to_string(prefix.size()) + " partial quotients are certain");
    }
    BigInt p0(1), q0(0), p1 = prefix[0], q1(1);
    list.push_back({0, p1, q1});
    for (std::size_t i = 1; i <= o.n; ++i) {
      BigInt p2 = prefix[i] * p1 + p0, q2 = prefix[i] * q1 + q0;
      p0 = std::move(p1), q0 = std::move(q1);
      p1 = std::move(p2), q1 = std::move(q2);
      list.push_back({i, p1, q1});
    }
  } else {
    list = cf::convergents(exact(x).cf, o.n);
  }
  Table t(o.format, {"input", "command", "n", "p", "q"});
  std::string text = t.header();
  for (const auto& c : list) {
    text += t.line({{"input", o.number}, {"command", "convergents"}, {"n", c.n}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
  }
  out << text;
  return kExitOk;
}

std::vector<std::string> verify_fields() {
  return {"input", "command", "bound", "k", "n", "p", "q", "outcome", "margin_sign", "margin_decimal_50", "predicted"};
}

int cmd_verify(const Options& o, const verify::Number& x, std::ostream& out) {
  const ExactNumber e = exact(x);
  const BoundSpec spec{*bounds::parse_bound_kind(o.bound), o.k};
  const auto scan = verify::verify_bound_scan(e, spec, o.n);
  Table t(o.format, verify_fields());
  std::string text = t.header();
  int code = kExitOk;
  for (const auto& r : scan.records) {
    json row = record_row(o.number, "verify", spec, r);
    const auto want = predicted(e, spec, r.n);
    row["predicted"] = want ? json(std::string(bounds::name(*want))) : json(nullptr);
    if (want && r.outcome != *want) code = kExitFailed;
    text += t.line(row);
  }
  out << text;
  return code;
}

int cmd_classify(const Options& o, const verify::Number& x, std::ostream& out) {
  const ExactNumber e = exact(x);
  const BoundSpec spec{BoundKind::refined_f, o.k};
  const auto family = verify::extremal_family(e, o.k);
  const auto scan = verify::verify_bound_scan(e, spec, o.n);
  Table t(o.format, {"input", "command", "k", "n", "p", "q", "outcome", "margin_sign", "margin_decimal_50", "family",
                     "predicted_equal", "match"});
  std::string text = t.header();
  int code = kExitOk;
  for (const auto& r : scan.records) {
    json row = record_row(o.number, "classify-equality", spec, r);
    const bool want = family && verify::predicted_equal(*family, o.k, r.n);
    const bool match = want == (r.outcome == Outcome::holds_equal);
    row["family"] = family_name(family);
    row["predicted_equal"] = want;
    row["match"] = match;
    if (!match) code = kExitFailed;
    text += t.line(row);
  }
  out << text;
  return code;
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no ..");
    std::size_t used = 0;
    const unsigned long a = std::stoul(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("junk");
    const std::string tail = text.substr(dots + 2);
    const unsigned long b = std::stoul(tail, &used);
    if (used != tail.size() || a == 0 || a > b || text[0] == '-' || tail[0] == '-') throw std::invalid_argument("bad");
    return {a, b};
  } catch (const std::exception&) {
    throw CommandError{kExitUsage, "--k-range expects A..B with 1 <= A <= B, got '" + text + "'"};
  }
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(o.k_range);
  Table t(o.format, {"input", "command", "lemma", "k", "depth", "holds", "margin_sign", "margin_decimal_50"});
  std::string text = t.header();
  int code = kExitOk;
  for (unsigned long k = lo; k <= hi; ++k) {
    std::size_t j = 0;
    verify::LemmaId last = verify::LemmaId::L0_limit;
    for (const auto& inst : verify::lemma_suite(k, o.depth)) {
      j = inst.id == last ? j + 1 : 1;
      last = inst.id;
      const auto res = verify::check_lemma(inst);
      if (!res.holds) code = kExitFailed;
      text += t.line({{"command", "lemmas"},
                      {"lemma", std::string(verify::name(inst.id))},
                      {"k", k},
                      {"depth", inst.params.qstar ? json(j) : json(nullptr)},
                      {"holds", res.holds},
                      {"margin_sign", radical_sign(res.margin)},
                      {"margin_decimal_50", to_decimal(res.margin, 50)}});
    }
  }
  out << text;
  return code;
}

int cmd_classical(const Options& o, const verify::Number& x, std::ostream& out) {
  const ExactNumber e = exact(x);
  const auto rule = *verify::parse_window_rule(o.rule);
  const auto res = verify::classical_window_check(e, rule, o.n);
  const std::size_t width = rule == verify::WindowRule::vahlen_pairs ? 2 : 3;
  Table t(o.format, {"input", "command", "rule", "n_first", "n_last", "witness", "holds"});
  std::string text = t.header();
  for (const auto& w : res.windows) {
    text += t.line({{"input", o.number},
                    {"command", "classical"},
                    {"rule", o.rule},
                    {"n_first", w.first},
                    {"n_last", w.first + width - 1},
                    {"witness", w.witness ? json(*w.witness) : json(nullptr)},
                    {"holds", w.witness.has_value()}});
  }
  out << text;
  return res.passed ? kExitOk : kExitFailed;
}

// One corpus entry: detail lines for each convergent, then a summary.
struct EntryOutput {
  std::string text;
  int code = kExitOk;
};

const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> fields{"input",   "command",     "record", "bound",      "k",
                                               "n",       "p",           "q",      "outcome",    "margin_sign",
                                               "margin_decimal_50", "predicted", "cf", "family", "applicable",
                                               "holds_strict", "holds_equal", "fails", "error"};
  return fields;
}

EntryOutput report_entry(const std::string& spec_text, const Options& o, const Table& t) {
  EntryOutput out;
  const BoundSpec spec{*bounds::parse_bound_kind(o.bound), o.k};
  json summary{{"input", spec_text}, {"command", "report"}, {"record", "summary"}, {"bound", std::string(bounds::name(spec.kind))},
               {"k", uses_k(spec.kind) ? json(spec.k) : json(nullptr)}};
  try {
    const verify::Number x = parse_number(spec_text);
    if (!verify::is_exact(x)) {
      summary["error"] = "finite-precision input is excluded from exact claims";
      summary["applicable"] = "unknown";
      out.text = t.line(summary);
      return out;
    }
    const ExactNumber e = verify::resolve(x);
    std::size_t n = o.n;
    if (e.cf.is_finite()) n = std::min(n, e.cf.head().size());
    const auto scan = verify::verify_bound_scan(e, spec, n);
    for (const auto& r : scan.records) {
      json row = record_row(spec_text, "report", spec, r);
      row["record"] = "detail";
      const auto want = predicted(e, spec, r.n);
      row["predicted"] = want ? json(std::string(bounds::name(*want))) : json(nullptr);
      if (want && r.outcome != *want) out.code = kExitFailed;
      out.text += t.line(row);
    }
    summary["n"] = n;
    summary["cf"] = e.cf.to_string();
    summary["family"] = family_name(verify::extremal_family(e, uses_k(spec.kind) ? spec.k : 1));
    summary["applicable"] = truth(verify::nathanson_applicable(x, uses_k(spec.kind) ? spec.k : 1));
    summary["holds_strict"] = scan.holds_strict;
    summary["holds_equal"] = scan.holds_equal;
    summary["fails"] = scan.fails;
  } catch (const ParseError& ex) {
    summary["error"] = ex.what();
    out.code = kExitBadNumber;
  } catch (const std::exception& ex) {
    summary["error"] = ex.what();
    out.code = kExitFailed;
  }
  out.text += t.line(summary);
  return out;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.corpus);
  if (!in) throw CommandError{kExitUsage, "cannot read corpus file '" + o.corpus + "'"};
  std::vector<std::string> specs;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }

  const Table t(o.format, report_fields());
  std::vector<EntryOutput> results(specs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) results[i] = report_entry(specs[i], o, t);
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < std::min(threads, specs.size()); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kExitOk;
  std::string text = t.header();
  for (std::size_t i = 0; i < results.size(); ++i) {
    text += results[i].text;
    if (results[i].code == kExitBadNumber) err << "corpus entry " << (i + 1) << ": invalid number spec\n";
    code = std::max(code, results[i].code);
  }
  out << text;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string format = "json";
  CLI::App app{"Continued fractions, convergents and exact approximation-bound checks.", "cfapprox"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", format, "Output format: json (JSON lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> bound_names;
  for (auto kind : {BoundKind::dirichlet, BoundKind::hurwitz, BoundKind::hancl_g, BoundKind::vahlen, BoundKind::borel,
                    BoundKind::hancl_nair, BoundKind::nathanson, BoundKind::refined_f}) {
    bound_names.emplace_back(bounds::name(kind));
  }

  const auto number_arg = [&](CLI::App* sub) { sub->add_option("number", o.number, "Number spec")->required(); };
  const auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Last convergent index")->required(); };

  auto* expand = app.add_subcommand("expand", "Continued fraction expansion");
  number_arg(expand);

  auto* convergents = app.add_subcommand("convergents", "Convergents p_n/q_n for n = 0..N");
  number_arg(convergents);
  n_opt(convergents);

  auto* verify_cmd = app.add_subcommand("verify", "Check convergents 0..N against a bound");
  number_arg(verify_cmd);
  verify_cmd->add_option("--bound", o.bound, "Bound kind")->required()->check(CLI::IsMember(bound_names));
  verify_cmd->add_option("--k", o.k, "Parameter k of nathanson/refined_f")->check(CLI::PositiveNumber);
  n_opt(verify_cmd);

  auto* classify = app.add_subcommand("classify-equality", "Compare refined-bound equality with the prediction");
  number_arg(classify);
  classify->add_option("--k", o.k, "Parameter k")->required()->check(CLI::PositiveNumber);
  n_opt(classify);

  auto* lemmas = app.add_subcommand("lemmas", "Evaluate the proof inequalities for a range of k");
  lemmas->add_option("--k-range", o.k_range, "A..B")->required();
  lemmas->add_option("--depth", o.depth, "Starred-convergent depths 1..D for the final cases")
      ->check(CLI::Range(1, 200));

  auto* classical = app.add_subcommand("classical", "Vahlen/Borel/Hancl-Nair window checks");
  number_arg(classical);
  classical->add_option("--rule", o.rule, "Window rule")
      ->required()
      ->check(CLI::IsMember({"vahlen_pairs", "borel_triples", "hancl_nair_triples"}));
  n_opt(classical);

  auto* report = app.add_subcommand("report", "Scan every number spec in a corpus file");
  report->add_option("--corpus", o.corpus, "One number spec per line, # comments")->required();
  o.bound = "refined_f";
  report->add_option("--bound", o.bound, "Bound kind")->check(CLI::IsMember(bound_names));
  report->add_option("--k", o.k, "Parameter k")->check(CLI::PositiveNumber);
  o.n = 30;
  report->add_option("--n", o.n, "Last convergent index");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.format = format == "csv" ? Format::csv : Format::json;

  try {
    if (*lemmas) return cmd_lemmas(o, out);
    if (*report) return cmd_report(o, out, err);
    verify::Number x;
    try {
      x = parse_number(o.number);
    } catch (const ParseError& e) {
      err << e.what() << "\n";
      return kExitBadNumber;
    }
    if (*expand) return cmd_expand(o, x, out);
    if (*convergents) return cmd_convergents(o, x, out);
    if (*verify_cmd) return cmd_verify(o, x, out);
    if (*classify) return cmd_classify(o, x, out);
    return cmd_classical(o, x, out);
  } catch (const CommandError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace cfapprox::cli
