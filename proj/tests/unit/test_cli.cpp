// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cfapprox/cf/extremal.hpp"
#include "cfapprox/cli/app.hpp"
#include "cfapprox/cli/number_spec.hpp"
#include "json.hpp"
#include "support/generators.hpp"

using namespace cfapprox;
using namespace cfapprox::cli;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  for (const auto& line : lines(text)) out.push_back(json::parse(line));
  return out;
}

std::vector<std::string> keys(const json& row) {
  std::vector<std::string> out;
  for (const auto& item : row.items()) out.push_back(item.key());
  return out;
}

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_number(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("accepted: " << text);
  return 0;
}

std::filesystem::path write_corpus(const std::string& name, const std::vector<std::string>& entries) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << "# generated corpus\n";
  for (const auto& e : entries) f << e << "\n\n";
  return path;
}

}  // namespace

TEST_CASE("parse_number examples") {
  CHECK(std::get<QuadSurd>(parse_number("surd:(-1+1*sqrt(5))/2")) == cf::alpha1(1));
  const auto root2 = std::get<cf::CFExpansion>(parse_number("cf:[0;(2)]"));
  CHECK(root2 == cf::CFExpansion::periodic(BigInt(0), {}, {BigInt(2)}));
  CHECK(std::get<QuadSurd>(verify::resolve(root2).value) == QuadSurd::normalize(-1, 1, 1, 2));
  CHECK(std::get<BigRat>(parse_number("rat:10/7")) == BigRat(10, 7));

  CHECK(parse_number(" surd: ( 3 - 2 * sqrt( 8 ) ) / 4 ") == parse_number("surd:(3+-2*sqrt(8))/4"));
  CHECK(std::get<BigRat>(parse_number("surd:(1+2*sqrt(9))/7")) == BigRat(1));
  CHECK(std::get<BigRat>(parse_number("rat:-6/4")) == BigRat(-3, 2));
  CHECK(parse_number("cf:[ 1 ; 2 , 3 ]") == parse_number("cf:[1;2,3]"));
  CHECK(parse_number("cf:[1;2(3,4)]") == parse_number("cf:[1;2,(3,4)]"));
  CHECK(parse_number("cf:[-2]") == parse_number("cf:[-2;]"));
  CHECK(parse_number("cf:[1;2,1]") == parse_number("cf:[1;3]"));
  // Leading zeros are decimal, never octal.
  CHECK(std::get<BigRat>(parse_number("rat:010/07")) == BigRat(10, 7));
  CHECK(std::get<verify::DecimalPrefix>(parse_number("dec:0.0718~4")).value == BigRat(718, 10000));

  const auto pi = std::get<verify::DecimalPrefix>(parse_number("dec:3.14159~5"));
  CHECK(pi.value == BigRat(314159, 100000));
  CHECK(pi.precision == 5);
  CHECK_FALSE(verify::is_exact(pi));
}

TEST_CASE("parse_number rejects malformed text with a position") {
  CHECK(parse_error_position("rat:1/0") == 6);
  CHECK(parse_error_position("rat:1/-2") == 6);
  CHECK(parse_error_position("rat:1") == 5);
  CHECK(parse_error_position("real:1/2") == 0);
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("surd:(1+2*sqrt(0))/1") == 15);
  CHECK(parse_error_position("surd:(1+2*sqrt(5))/0") == 19);
  CHECK(parse_error_position("surd:(1+2*sqr(5))/1") == 10);
  CHECK(parse_error_position("cf:[1;0]") == 6);
  CHECK(parse_error_position("cf:[1;2,-3]") == 8);
  CHECK(parse_error_position("cf:[1;2,()]") == 9);
  CHECK(parse_error_position("cf:[1;2,]") == 8);
  CHECK(parse_error_position("cf:[1;(2),3]") == 9);
  CHECK(parse_error_position("cf:[1;2") == 7);
  CHECK(parse_error_position("dec:3.14") == 8);
  CHECK(parse_error_position("dec:.5~2") == 4);
  CHECK(parse_error_position("dec:3.1~1234567") == 8);
  CHECK(parse_error_position("rat:1/2 x") == 8);
}

TEST_CASE("render and parse round-trip") {
  gen::Source src(71);
  for (int i = 0; i < 300; ++i) {
    std::vector<verify::Number> values;
    values.emplace_back(src.rational(10000, 5000));
    const QuadSurd s = src.irrational_surd(50, 1000);
    values.emplace_back(s);
    values.emplace_back(cf::expand_surd(s));
    values.emplace_back(cf::expand_rational(src.rational(10000, 5000)));
    values.emplace_back(verify::DecimalPrefix{BigRat(src.uniform(0, 10000000), 10000), 4});
    for (const auto& v : values) {
      const std::string text = render(v);
      CAPTURE(text);
      CHECK(parse_number(text) == v);
      CHECK(render(parse_number(text)) == text);
    }
  }
}

TEST_CASE("exit codes over an invocation matrix") {
  const std::string a1 = "surd:(-1+1*sqrt(5))/2";
  const std::vector<std::pair<std::vector<std::string>, int>> matrix{
      {{"expand", "rat:10/7"}, 0},
      {{"expand", "dec:3.14159~5"}, 0},
      {{"convergents", "cf:[0;(2)]", "--n", "8"}, 0},
      {{"convergents", "dec:3.14159265358979~14", "--n", "4"}, 0},
      {{"convergents", "rat:10/7", "--n", "5"}, 1},
      {{"convergents", "dec:3.14~2", "--n", "6"}, 1},
      {{"verify", a1, "--bound", "refined_f", "--k", "1", "--n", "9"}, 0},
      {{"verify", "surd:(1+1*sqrt(2))/1", "--bound", "dirichlet", "--n", "12"}, 0},
      {{"verify", "rat:355/113", "--bound", "dirichlet", "--n", "2"}, 0},
      {{"verify", "rat:355/113", "--bound", "dirichlet", "--n", "3"}, 1},
      {{"verify", "cf:[0;(3)]", "--bound", "nathanson", "--k", "3", "--n", "10"}, 0},
      {{"verify", "cf:[0;(3)]", "--bound", "hurwitz", "--n", "10"}, 0},
      {{"verify", "dec:3.14~2", "--bound", "hurwitz", "--n", "1"}, 1},
      {{"classify-equality", a1, "--k", "1", "--n", "12"}, 0},
      {{"classify-equality", "cf:[0;2,(1)]", "--k", "1", "--n", "12"}, 0},
      {{"classify-equality", "cf:[4;(1,3)]", "--k", "3", "--n", "12"}, 0},
      {{"lemmas", "--k-range", "2..4", "--depth", "6"}, 0},
      {{"lemmas", "--k-range", "1..1", "--depth", "3"}, 1},
      {{"classical", a1, "--rule", "borel_triples", "--n", "10"}, 0},
      {{"classical", "rat:1/3", "--rule", "vahlen_pairs", "--n", "1"}, 1},
      {{"--help"}, 0},
      {{}, 2},
      {{"frobnicate", "rat:1/2"}, 2},
      {{"expand"}, 2},
      {{"expand", "rat:1/2", "--bogus"}, 2},
      {{"convergents", "rat:1/2"}, 2},
      {{"verify", a1, "--bound", "nope", "--n", "3"}, 2},
      {{"verify", a1, "--bound", "refined_f", "--k", "0", "--n", "3"}, 2},
      {{"lemmas", "--k-range", "5..2"}, 2},
      {{"lemmas", "--k-range", "x"}, 2},
      {{"--format", "xml", "expand", "rat:1/2"}, 2},
      {{"report", "--corpus", "/nonexistent/corpus.txt"}, 2},
      {{"expand", "rat:1/0"}, 3},
      {{"verify", "cf:[1;0]", "--bound", "hurwitz", "--n", "1"}, 3},
      {{"classify-equality", "surd:(1+1*sqrt(5)/2", "--k", "1", "--n", "1"}, 3},
  };
  for (const auto& [args, want] : matrix) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    const Run r = invoke(args);
    CHECK(r.code == want);
    if (want == 0) CHECK(r.err.empty());
    if (want >= 2 && !args.empty() && args[0] != "--help") CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("verify output matches the documented example") {
  const Run r = invoke({"verify", "surd:(-1+1*sqrt(5))/2", "--bound", "refined_f", "--k", "1", "--n", "9"});
  REQUIRE(r.code == 0);
  const auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 10);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    CHECK(rows[n]["n"] == n);
    CHECK(rows[n]["outcome"] == (n % 2 == 1 ? "Holds_Equal" : "Fails"));
    CHECK(rows[n]["margin_sign"] == (n % 2 == 1 ? 0 : -1));
  }
  CHECK(rows[9]["p"] == "34");
  CHECK(rows[9]["q"] == "55");

  const auto expand = json_lines(invoke({"expand", "rat:10/7"}).out);
  REQUIRE(expand.size() == 1);
  CHECK(expand[0]["cf"] == "[1;2,3]");
}

TEST_CASE("every line parses and each command keeps one field set") {
  const std::string x = "cf:[1;2,(1,4)]";
  const std::vector<std::vector<std::string>> commands{
      {"expand", x},
      {"convergents", x, "--n", "6"},
      {"verify", x, "--bound", "borel", "--n", "6"},
      {"verify", x, "--bound", "refined_f", "--k", "4", "--n", "6"},
      {"classify-equality", x, "--k", "2", "--n", "6"},
      {"lemmas", "--k-range", "3..4", "--depth", "3"},
      {"classical", x, "--rule", "hancl_nair_triples", "--n", "6"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const Run r = invoke(args);
    const auto rows = json_lines(r.out);
    REQUIRE_FALSE(rows.empty());
    const auto first = keys(rows[0]);
    CHECK(first[0] == "input");
    CHECK(first[1] == "command");
    for (const auto& row : rows) {
      CHECK(keys(row) == first);
      CHECK(row["command"] == args[0]);
    }

    // Same fields as CSV: a header, then one row per JSON line.
    auto csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    const Run c = invoke(csv_args);
    CHECK(c.code == r.code);
    const auto csv = lines(c.out);
    REQUIRE(csv.size() == rows.size() + 1);
    std::string header;
    for (const auto& k : first) header += (header.empty() ? "" : ",") + k;
    CHECK(csv[0] == header);
  }
}

TEST_CASE("csv quoting") {
  const Run c = invoke({"--format", "csv", "convergents", "cf:[0;1,2]", "--n", "1"});
  const auto csv = lines(c.out);
  REQUIRE(csv.size() == 3);
  CHECK(csv[1] == "\"cf:[0;1,2]\",convergents,0,0,1");
  CHECK(csv[2] == "\"cf:[0;1,2]\",convergents,1,1,1");
}

TEST_CASE("report: one summary per spec, deterministic order") {
  gen::Source src(2024);
  std::vector<std::string> entries;
  for (int i = 0; i < 100; ++i) {
    switch (i % 5) {
      case 0: entries.push_back(render(src.rational(500, 300))); break;
      case 1: entries.push_back(render(src.irrational_surd(10, 60))); break;
      case 2: entries.push_back(render(cf::expand_surd(src.surd_reaching(2)))); break;
      case 3: entries.push_back(render(cf::extremal(src.coin() ? cf::ExtremalFamily::alpha1 : cf::ExtremalFamily::alpha2,
                                                    static_cast<unsigned long>(src.uniform(1, 6))))); break;
      default: entries.push_back("dec:" + std::to_string(src.uniform(0, 9)) + ".7182818~6"); break;
    }
  }
  const auto path = write_corpus("cfapprox_test_corpus.txt", entries);
  const std::vector<std::string> args{"report", "--corpus", path.string(), "--n", "12"};
  const Run first = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.err.empty());

  std::vector<std::string> summaries;
  std::size_t details = 0;
  for (const auto& row : json_lines(first.out)) {
    if (row["record"] == "summary") {
      summaries.push_back(row["input"]);
    } else {
      CHECK(row["record"] == "detail");
      ++details;
    }
  }
  CHECK(summaries == entries);
  CHECK(details > 0);

  for (int rerun = 0; rerun < 3; ++rerun) {
    const Run again = invoke(args);
    CHECK(again.code == first.code);
    CHECK(again.out == first.out);
  }

  // One bad entry: exit 3, but every other entry is still reported.
  entries[17] = "cf:[1;0,2]";
  const auto bad_path = write_corpus("cfapprox_test_corpus_bad.txt", entries);
  const Run bad = invoke({"report", "--corpus", bad_path.string(), "--n", "12"});
  CHECK(bad.code == 3);
  std::size_t bad_summaries = 0;
  for (const auto& row : json_lines(bad.out)) {
    if (row["record"] != "summary") continue;
    ++bad_summaries;
    CHECK(row["error"].is_null() == (row["input"] != "cf:[1;0,2]" && !row["input"].get<std::string>().starts_with("dec:")));
  }
  CHECK(bad_summaries == 100);
  std::filesystem::remove(path);
  std::filesystem::remove(bad_path);
}

TEST_CASE("report carries per-convergent predictions") {
  // Dirichlet is predicted for every convergent; the refined bound at
  // k = 1 is predicted with equality on alpha1's odd convergents.
  const auto path = write_corpus("cfapprox_test_corpus_pred.txt", {"surd:(-1+1*sqrt(5))/2", "cf:[0;1,(2)]"});
  const Run r = invoke({"report", "--corpus", path.string(), "--bound", "dirichlet", "--n", "10"});
  CHECK(r.code == 0);
  for (const auto& row : json_lines(r.out)) {
    if (row["record"] == "detail") CHECK(row["predicted"] == "Holds_Strict");
  }
  std::filesystem::remove(path);
}
