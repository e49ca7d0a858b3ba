// Copyright 2026 The gmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gmean/gmean.h"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = gmean::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

bool parse_number(const std::string& tok, double* v) {
  if (tok.empty()) return false;
  std::size_t used = 0;
  try {
    *v = std::stod(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

void collect(const nlohmann::ordered_json& j, std::vector<double>* out) {
  if (j.is_number()) {
    out->push_back(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (const auto& child : j) collect(child, out);
  }
}

std::vector<double> json_numbers(const std::string& text) {
  std::vector<double> out;
  collect(nlohmann::ordered_json::parse(text).at("results"), &out);
  return out;
}

// Numbers from every non-header line; a header line has no numeric cell.
std::vector<double> tsv_numbers(const std::string& text) {
  std::vector<double> out;
  for (const std::string& line : split(text, '\n')) {
    std::vector<double> row;
    for (const std::string& cell : split(line, '\t')) {
      for (const std::string& tok : split(cell, ',')) {
        double v = 0.0;
        if (parse_number(tok, &v)) row.push_back(v);
      }
    }
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

std::string text_value(const std::string& text, const std::string& label) {
  for (const std::string& line : split(text, '\n')) {
    const std::string prefix = label + " = ";
    if (line.rfind(prefix, 0) == 0) {
      const std::string rest = line.substr(prefix.size());
      return rest.substr(0, rest.find(' '));
    }
  }
  FAIL("label not found: " << label);
  return {};
}

const std::vector<std::vector<std::string>> kInvocations = {
    {"solve", "--n", "2", "--m", "2", "--digits", "7"},
    {"solve", "--n", "3", "--m", "5"},
    {"solve", "--n", "5", "--m", "0", "--digits", "15"},
    {"mmf", "--n", "3", "--p", "2", "--sign", "minus", "--m", "1"},
    {"mmf", "--n", "2", "--p", "3", "--sign", "minus", "--m", "4", "--lower", "n-1"},
    {"mmf", "--n", "4", "--p", "3", "--sign", "plus", "--m", "8", "--lower", "n-1"},
    {"stakhov", "--n", "3", "--variant", "a"},
    {"euler", "--a", "1", "--n", "2", "--x", "1", "--mode", "direct"},
    {"euler", "--a", "0", "--n", "2", "--x", "1/2", "--mode", "constrained", "--digits", "12"},
    {"metallic", "--p", "2", "--q", "1", "--cf-terms", "20"},
    {"metallic", "--p", "1", "--q", "2"},
    {"table1", "--rows", "6", "--side", "both"},
    {"diophantus", "--count", "7"},
    {"harmonic", "--size", "10"},
    {"harmonic", "--size", "10", "--doublets", "--key", "9"},
};

}  // namespace

TEST_CASE("solve prints the satisfactory golden root") {
  const Outcome o = invoke({"solve", "--n", "2", "--m", "2", "--digits", "7", "--format", "text"});
  CHECK(o.code == 0);
  CHECK(o.out.find("x1 = 0.6180339 (satisfactory)") != std::string::npos);
  CHECK(o.err.empty());
}

TEST_CASE("diophantus tsv ends with the seventh triple") {
  const Outcome o = invoke({"diophantus", "--count", "7", "--format", "tsv"});
  CHECK(o.code == 0);
  const auto lines = split(o.out, '\n');
  REQUIRE(!lines.empty());
  CHECK(lines.back() == "13\t84\t85");
}

TEST_CASE("degenerate identity exits with a domain error") {
  const Outcome o = invoke({"mmf", "--n", "1", "--p", "1", "--sign", "minus", "--m", "4"});
  CHECK(o.code == 2);
  CHECK(o.out.empty());
  CHECK(o.err.find("degenerate-identity") != std::string::npos);
}

TEST_CASE("other domain errors") {
  Outcome o = invoke({"euler", "--a", "3", "--n", "2", "--x", "1", "--mode", "direct"});
  CHECK(o.code == 2);
  CHECK(o.err.find("no-real-root") != std::string::npos);
  o = invoke({"metallic", "--p", "1", "--q", "-5"});
  CHECK(o.code != 0);
  CHECK(o.out.empty());
}

TEST_CASE("usage errors exit with 1") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"solve", "--n", "2"},
           {"solve", "--n", "2", "--m", "2", "--wat"},
           {"solve", "--n", "2", "--m", "2", "--format", "xml"},
           {"solve", "--n", "2", "--m", "2", "--digits", "0"},
           {"solve", "--n", "2", "--m", "2", "--digits", "1001"},
           {"solve", "--n", "two", "--m", "2"},
           {"mmf", "--n", "2", "--p", "1", "--sign", "sideways", "--m", "1"},
           {"table1", "--rows", "3", "--side", "middle"},
       }) {
    const Outcome o = invoke(args);
    CAPTURE(o.err);
    CHECK(o.code == 1);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error: ", 0) == 0);
  }
}

TEST_CASE("json has the documented top-level layout") {
  const Outcome o = invoke({"solve", "--n", "2", "--m", "2", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "errors"});
  CHECK(doc["errors"].empty());
  const auto& root = doc["results"]["roots"][0];
  CHECK(root["value"].get<double>() == 0.6180339887);
  CHECK(root["exact"]["d"] == 5);
  CHECK(root["exact"]["b_den"] == 2);
  CHECK(root.contains("bracket"));
  CHECK(root.contains("residual"));
}

TEST_CASE("json and tsv carry the same numbers") {
  for (const auto& args : kInvocations) {
    const Outcome j = invoke(with(args, {"--format", "json"}));
    const Outcome t = invoke(with(args, {"--format", "tsv"}));
    CAPTURE(args.front());
    CAPTURE(t.out);
    REQUIRE(j.code == 0);
    REQUIRE(t.code == 0);
    const auto jn = json_numbers(j.out);
    const auto tn = tsv_numbers(t.out);
    CHECK(!jn.empty());
    CHECK(jn == tn);
  }
}

TEST_CASE("identical arguments give identical bytes") {
  for (const auto& args : kInvocations) {
    for (const char* fmt : {"text", "json", "tsv"}) {
      const Outcome a = invoke(with(args, {"--format", fmt}));
      const Outcome b = invoke(with(args, {"--format", fmt}));
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(!a.out.empty());
    }
  }
}

TEST_CASE("quadratic digits are exact truncations") {
  for (int m = 0; m <= 12; ++m) {
    gm_root_pair* rp = nullptr;
    REQUIRE(gm_generalized_gm(static_cast<uint64_t>(m), &rp) == GM_OK);
    for (unsigned digits : {1u, 7u, 10u, 33u, 200u}) {
      const Outcome o = invoke({"solve", "--n", "2", "--m", std::to_string(m), "--digits",
                                std::to_string(digits)});
      REQUIRE(o.code == 0);
      std::vector<char> buf(digits + 32);
      size_t len = 0;
      REQUIRE(gm_surd_to_decimal(gm_root_pair_x1(rp), digits, buf.data(), buf.size(), &len) ==
              GM_OK);
      const std::string exact(buf.data(), len);
      CHECK(text_value(o.out, "x1") == exact);
      const Outcome longer = invoke({"solve", "--n", "2", "--m", std::to_string(m), "--digits",
                                     std::to_string(digits + 5)});
      CHECK(text_value(longer.out, "x1").rfind(exact, 0) == 0);
      CHECK(text_value(longer.out, "x2").rfind(text_value(o.out, "x2"), 0) == 0);
    }
    gm_root_pair_destroy(rp);
  }
}

TEST_CASE("default digits is ten") {
  const Outcome o = invoke({"solve", "--n", "2", "--m", "2"});
  CHECK(text_value(o.out, "x1") == "0.6180339887");
}

TEST_CASE("global flags are accepted before the subcommand") {
  const Outcome a = invoke({"--format", "tsv", "--digits", "7", "diophantus", "--count", "3"});
  const Outcome b = invoke({"diophantus", "--count", "3", "--format", "tsv", "--digits", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
