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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmean/gmean.h"

namespace gmean::cli {

namespace {

using json = nlohmann::ordered_json;

// A failed library call, carrying the C status.
class CallError : public std::runtime_error {
 public:
  CallError(gm_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  gm_status status() const noexcept { return status_; }

 private:
  gm_status status_;
};

void check(gm_status status) {
  if (status != GM_OK) throw CallError(status, gm_last_error());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Destroy(p); }
};

using Surd = std::unique_ptr<gm_surd, Deleter<gm_surd, gm_surd_destroy>>;
using RootPair = std::unique_ptr<gm_root_pair, Deleter<gm_root_pair, gm_root_pair_destroy>>;
using RootSet = std::unique_ptr<gm_root_set, Deleter<gm_root_set, gm_root_set_destroy>>;
using ContFrac = std::unique_ptr<gm_cf, Deleter<gm_cf, gm_cf_destroy>>;
using Harmonic = std::unique_ptr<gm_harmonic, Deleter<gm_harmonic, gm_harmonic_destroy>>;

template <typename Fn>
std::string read_string(Fn&& fn) {
  size_t len = 0;
  const gm_status probe = fn(nullptr, 0, &len);
  if (probe != GM_OK && probe != GM_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string buf(len + 1, '\0');
  check(fn(buf.data(), buf.size(), &len));
  buf.resize(len);
  return buf;
}

Surd clone(const gm_surd* v) {
  gm_surd* out = nullptr;
  check(gm_surd_clone(v, &out));
  return Surd(out);
}

std::string surd_decimal(const gm_surd* v, unsigned digits) {
  return read_string([&](char* b, size_t c, size_t* l) { return gm_surd_to_decimal(v, digits, b, c, l); });
}

std::string surd_text(const gm_surd* v) {
  return read_string([&](char* b, size_t c, size_t* l) { return gm_surd_to_string(v, b, c, l); });
}

std::string surd_part(const gm_surd* v, gm_surd_part part) {
  return read_string([&](char* b, size_t c, size_t* l) { return gm_surd_part_string(v, part, b, c, l); });
}

// Integer-valued decimal string as a JSON number.
json number(const std::string& decimal) { return json::parse(decimal); }

json surd_json(const gm_surd* v) {
  return json{{"a_num", number(surd_part(v, GM_PART_A_NUM))},
              {"a_den", number(surd_part(v, GM_PART_A_DEN))},
              {"b_num", number(surd_part(v, GM_PART_B_NUM))},
              {"b_den", number(surd_part(v, GM_PART_B_DEN))},
              {"d", gm_surd_radicand(v)}};
}

std::vector<std::string> surd_columns(const gm_surd* v) {
  return {surd_part(v, GM_PART_A_NUM), surd_part(v, GM_PART_A_DEN), surd_part(v, GM_PART_B_NUM),
          surd_part(v, GM_PART_B_DEN), std::to_string(gm_surd_radicand(v))};
}

// Exact decimal expansion of a double, truncated toward zero. glibc prints
// the exact binary value for any precision, and 1100 digits cover every
// double, so the cut below never sees a rounded digit.
std::string double_decimal(double v, unsigned digits) {
  std::vector<char> buf(1500);
  std::snprintf(buf.data(), buf.size(), "%.1100f", v);
  std::string s(buf.data());
  const auto dot = s.find('.');
  return s.substr(0, dot + 1 + digits);
}

// Round-trip representation for brackets and residuals.
std::string double_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Table> tables;
  std::vector<std::string> lines;
};

struct Globals {
  std::string format = "text";
  unsigned digits = 10;
};

void render(const Report& report, const Globals& g, std::ostream& out) {
  if (g.format == "json") {
    json doc{{"command", report.command},
             {"inputs", report.inputs},
             {"results", report.results},
             {"errors", json::array()}};
    out << doc.dump(2) << '\n';
  } else if (g.format == "tsv") {
    for (const Table& t : report.tables) {
      out << join(t.header, "\t") << '\n';
      for (const auto& row : t.rows) out << join(row, "\t") << '\n';
    }
  } else {
    for (const std::string& line : report.lines) out << line << '\n';
  }
}

// ---- root listings ---------------------------------------------------------

struct RootView {
  gm_root root{};
  Surd exact;
  std::string decimal;
};

std::vector<RootView> collect_roots(const gm_root_set* set) {
  std::vector<RootView> roots(gm_root_set_size(set));
  for (std::size_t i = 0; i < roots.size(); ++i) check(gm_root_set_get(set, i, &roots[i].root));
  // Label x1 as the largest root, as in the quadratic closed form.
  std::reverse(roots.begin(), roots.end());
  return roots;
}

// Attaches exact closed-form roots (x1 >= x2) when they line up one to one.
void attach_exact(std::vector<RootView>& roots, const gm_root_pair* pair) {
  if (roots.size() != 2) return;
  roots[0].exact = clone(gm_root_pair_x1(pair));
  roots[1].exact = clone(gm_root_pair_x2(pair));
}

void add_roots(Report& report, std::vector<RootView>& roots, const Globals& g) {
  json list = json::array();
  Table table{{"label", "value", "bracket_lo", "bracket_hi", "residual", "iterations",
               "satisfactory", "a_num", "a_den", "b_num", "b_den", "d"},
              {}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RootView& r = roots[i];
    r.decimal = r.exact ? surd_decimal(r.exact.get(), g.digits) : double_decimal(r.root.value, g.digits);
    const bool satisfactory = r.root.value > 0.0;
    const std::string label = "x" + std::to_string(i + 1);

    json item{{"label", label},
              {"value", number(r.decimal)},
              {"bracket", json::array({r.root.bracket.lo, r.root.bracket.hi})},
              {"residual", r.root.residual},
              {"iterations", r.root.iterations},
              {"satisfactory", satisfactory}};
    if (r.exact) item["exact"] = surd_json(r.exact.get());
    list.push_back(std::move(item));

    std::vector<std::string> row{label,
                                 r.decimal,
                                 double_text(r.root.bracket.lo),
                                 double_text(r.root.bracket.hi),
                                 double_text(r.root.residual),
                                 std::to_string(r.root.iterations),
                                 satisfactory ? "true" : "false"};
    if (r.exact) {
      for (auto& c : surd_columns(r.exact.get())) row.push_back(std::move(c));
    } else {
      row.resize(table.header.size());
    }
    table.rows.push_back(std::move(row));

    std::string line = label + " = " + r.decimal;
    if (satisfactory) line += " (satisfactory)";
    if (r.exact) line += "  exact = " + surd_text(r.exact.get());
    report.lines.push_back(std::move(line));
  }
  if (roots.empty()) report.lines.push_back("no real roots");
  report.results["roots"] = std::move(list);
  report.tables.push_back(std::move(table));
}

std::string sign_text(gm_sign s) { return s == GM_SIGN_PLUS ? "+" : "-"; }

// ---- subcommands -------------------------------------------------------------

struct SolveArgs {
  uint32_t n = 2;
  uint64_t m = 0;
  std::optional<double> tol;
};

gm_solver_config config_with(std::optional<double> tol) {
  gm_solver_config cfg;
  gm_solver_config_default(&cfg);
  if (tol) cfg.tolerance = *tol;
  return cfg;
}

Report cmd_solve(const SolveArgs& a, const Globals& g) {
  Report report;
  report.command = "solve";
  report.inputs = json{{"n", a.n}, {"m", a.m}};
  if (a.tol) report.inputs["tol"] = *a.tol;

  const gm_solver_config cfg = config_with(a.tol);
  gm_root_set* raw = nullptr;
  check(gm_solve_gm_general(a.n, a.m, &cfg, &raw));
  RootSet set(raw);
  std::vector<RootView> roots = collect_roots(set.get());

  report.lines.push_back("x^" + std::to_string(a.n) + " + x = " + std::to_string(a.m) + "/2");
  RootPair pair;
  if (a.n == 2) {
    gm_root_pair* p = nullptr;
    check(gm_generalized_gm(a.m, &p));
    pair.reset(p);
    attach_exact(roots, pair.get());
  }
  add_roots(report, roots, g);
  if (pair) {
    const uint64_t r = gm_root_pair_r(pair.get());
    report.results["r"] = r;
    report.lines.push_back("r = " + std::to_string(r));
    report.tables.push_back({{"r"}, {{std::to_string(r)}}});
  }
  return report;
}

struct MmfArgs {
  uint32_t n = 2;
  uint64_t p = 1;
  std::string sign = "plus";
  uint64_t m = 0;
  std::string lower = "one";
  std::optional<double> tol;
};

Report cmd_mmf(const MmfArgs& a, const Globals& g) {
  Report report;
  report.command = "mmf";
  report.inputs = json{{"n", a.n}, {"p", a.p}, {"sign", a.sign}, {"m", a.m}, {"lower", a.lower}};
  if (a.tol) report.inputs["tol"] = *a.tol;

  const gm_trinomial_spec spec{a.n, a.p, a.sign == "minus" ? GM_SIGN_MINUS : GM_SIGN_PLUS, a.m,
                               a.lower == "n-1" ? GM_LOWER_N_MINUS_ONE : GM_LOWER_ONE};
  const gm_solver_config cfg = config_with(a.tol);
  gm_root_set* raw = nullptr;
  check(gm_solve_trinomial(&spec, &cfg, &raw));
  RootSet set(raw);
  std::vector<RootView> roots = collect_roots(set.get());

  const std::string lower_term = a.lower == "n-1" ? "x^" + std::to_string(a.n - 1) : "x";
  report.lines.push_back("x^" + std::to_string(a.n) + " " + sign_text(spec.sign) + " " +
                         std::to_string(a.p) + "*" + lower_term + " = " + std::to_string(a.m) + "/2");
  if (a.n == 2) {
    // Both lower exponents coincide at n = 2: x^2 + s p x - m/2 = 0.
    gm_root_pair* p = nullptr;
    const std::string q = std::to_string(a.m) + "/2";
    check(gm_solve_quadratic(a.p, q.c_str(), spec.sign, &p));
    RootPair pair(p);
    attach_exact(roots, pair.get());
  }
  add_roots(report, roots, g);
  return report;
}

struct StakhovArgs {
  uint32_t n = 2;
  std::string variant = "a";
};

Report cmd_stakhov(const StakhovArgs& a, const Globals& g) {
  Report report;
  report.command = "stakhov";
  report.inputs = json{{"n", a.n}, {"variant", a.variant}};
  const gm_stakhov_variant variant = a.variant == "b" ? GM_STAKHOV_B : GM_STAKHOV_A;
  double root = 0.0;
  check(gm_solve_stakhov(a.n, variant, nullptr, &root));

  std::string decimal = double_decimal(root, g.digits);
  Surd exact;
  if (a.n == 2) {
    // Both variants read x^2 + x = 1 at n = 2.
    gm_root_pair* p = nullptr;
    check(gm_generalized_gm(2, &p));
    RootPair pair(p);
    exact = clone(gm_root_pair_x1(pair.get()));
    decimal = surd_decimal(exact.get(), g.digits);
  }
  const std::string equation = variant == GM_STAKHOV_A
                                   ? "x^" + std::to_string(a.n) + " + x = 1"
                                   : "x^" + std::to_string(a.n) + " + x^" + std::to_string(a.n - 1) + " = 1";
  report.lines.push_back(equation);
  std::string line = "x = " + decimal;
  if (exact) line += "  exact = " + surd_text(exact.get());
  report.lines.push_back(line);

  report.results["value"] = number(decimal);
  if (exact) report.results["exact"] = surd_json(exact.get());
  Table t{{"value", "a_num", "a_den", "b_num", "b_den", "d"}, {{decimal}}};
  if (exact) {
    for (auto& c : surd_columns(exact.get())) t.rows[0].push_back(std::move(c));
  } else {
    t.rows[0].resize(t.header.size());
  }
  report.tables.push_back(std::move(t));
  return report;
}

struct EulerArgs {
  std::string a = "0";
  uint32_t n = 2;
  std::string x;
  std::string mode = "direct";
  std::optional<double> tol;
};

Report cmd_euler(const EulerArgs& a, const Globals& g) {
  Report report;
  report.command = "euler";
  report.inputs = json{{"a", a.a}, {"n", a.n}, {"x", a.x}, {"mode", a.mode}};
  if (a.tol) report.inputs["tol"] = *a.tol;
  const gm_solver_config cfg = config_with(a.tol);
  const gm_euler_mode mode = a.mode == "constrained" ? GM_EULER_CONSTRAINED : GM_EULER_DIRECT;
  gm_root_set* raw = nullptr;
  check(gm_solve_euler(a.a.c_str(), a.n, a.x.c_str(), mode, &cfg, &raw));
  RootSet set(raw);
  std::vector<RootView> roots = collect_roots(set.get());
  const std::string n = std::to_string(a.n);
  report.lines.push_back(mode == GM_EULER_CONSTRAINED
                             ? "(b + b^" + n + ")/" + n + " = " + a.x
                             : "(" + a.a + " + b^" + n + ")/" + n + " = " + a.x);
  add_roots(report, roots, g);
  return report;
}

struct MetallicArgs {
  uint64_t p = 1;
  std::string q = "1";
  std::optional<uint32_t> cf_terms;
};

Report cmd_metallic(const MetallicArgs& a, const Globals& g) {
  Report report;
  report.command = "metallic";
  report.inputs = json{{"p", a.p}, {"q", a.q}};
  if (a.cf_terms) report.inputs["cf_terms"] = *a.cf_terms;

  gm_surd* raw = nullptr;
  check(gm_metallic_mean(a.p, a.q.c_str(), &raw));
  Surd mean(raw);
  const std::string decimal = surd_decimal(mean.get(), g.digits);
  const std::string exact = surd_text(mean.get());

  report.results["value"] = number(decimal);
  report.results["exact"] = surd_json(mean.get());
  report.lines.push_back("x^2 - " + std::to_string(a.p) + "*x - " + a.q + " = 0");
  report.lines.push_back("x = " + decimal + "  exact = " + exact);
  Table t{{"value", "a_num", "a_den", "b_num", "b_den", "d"}, {{decimal}}};
  for (auto& c : surd_columns(mean.get())) t.rows[0].push_back(std::move(c));
  report.tables.push_back(std::move(t));

  // Integer metallic means belong to x^2 - x - q with integer q.
  if (a.p == 1 && a.q.find_first_not_of("0123456789") == std::string::npos) {
    int found = 0;
    uint64_t k = 0, k1 = 0;
    check(gm_integer_metallic(std::stoull(a.q), &found, &k, &k1));
    if (found) {
      report.results["integer_pair"] = json::array({k, k1});
      report.lines.push_back("integer metallic mean: (" + std::to_string(k) + ", " + std::to_string(k1) + ")");
      report.tables.push_back({{"integer_x1", "integer_x2"}, {{std::to_string(k), std::to_string(k1)}}});
    }
  }

  if (a.cf_terms) {
    gm_cf* cf_raw = nullptr;
    check(gm_continued_fraction(mean.get(), *a.cf_terms, &cf_raw));
    ContFrac cf(cf_raw);
    size_t ni = 0, np = 0;
    const uint64_t* init = gm_cf_initial(cf.get(), &ni);
    const uint64_t* period = gm_cf_period(cf.get(), &np);
    std::vector<uint64_t> iv(init, init + ni), pv(period, period + np);
    const bool truncated = gm_cf_truncated(cf.get()) != 0;
    report.results["continued_fraction"] =
        json{{"initial", iv}, {"period", pv}, {"truncated", truncated}};

    auto to_strings = [](const std::vector<uint64_t>& v) {
      std::vector<std::string> out;
      for (uint64_t x : v) out.push_back(std::to_string(x));
      return out;
    };
    const auto is = to_strings(iv);
    const auto ps = to_strings(pv);
    std::string line = "continued fraction = [" + (is.empty() ? "" : is[0]);
    if (is.size() > 1 || !ps.empty()) line += "; ";
    line += join(std::vector<std::string>(is.begin() + std::min<std::size_t>(1, is.size()), is.end()), ", ");
    if (!ps.empty()) line += (is.size() > 1 ? ", " : "") + std::string("(") + join(ps, ", ") + ")";
    line += "]";
    if (truncated) line += " (truncated)";
    report.lines.push_back(line);
    report.tables.push_back({{"cf_initial", "cf_period", "cf_truncated"},
                             {{join(is, ","), join(ps, ","), truncated ? "true" : "false"}}});
  }
  return report;
}

std::string triplet_name(gm_triplet_tag tag) {
  switch (tag) {
    case GM_TRIPLET_FIBONACCI: return "fibonacci";
    case GM_TRIPLET_LUCAS: return "lucas";
    case GM_TRIPLET_NEITHER: break;
  }
  return "neither";
}

struct Table1Args {
  uint64_t rows = 6;
  std::string side = "both";
};

Report cmd_table1(const Table1Args& a, const Globals&) {
  Report report;
  report.command = "table1";
  report.inputs = json{{"rows", a.rows}, {"side", a.side}};
  const gm_table_side side = a.side == "left"    ? GM_SIDE_LEFT
                             : a.side == "right" ? GM_SIDE_RIGHT
                                                 : GM_SIDE_BOTH;
  size_t count = 0;
  gm_status probe = gm_table_one(a.rows, side, nullptr, 0, &count);
  if (probe != GM_OK && probe != GM_ERR_BUFFER_TOO_SMALL) check(probe);
  std::vector<gm_table_row> rows(count);
  check(gm_table_one(a.rows, side, rows.data(), rows.size(), &count));

  json list = json::array();
  Table t{{"side", "N", "m", "h", "r", "triplet"}, {}};
  for (const gm_table_row& row : rows) {
    const std::string side_name = row.side == GM_SIDE_LEFT ? "left" : "right";
    const std::string N = std::to_string(row.index);
    const std::string m = std::to_string(row.m), h = std::to_string(row.h), r = std::to_string(row.r);
    std::string triplet;
    json item{{"side", side_name}, {"N", row.index}, {"m", row.m}, {"h", row.h}, {"r", row.r}};
    if (row.side == GM_SIDE_RIGHT) {
      const uint64_t values[3] = {row.m, row.h, row.r};
      gm_triplet_tag tag = GM_TRIPLET_NEITHER;
      check(gm_classify_triplet(values, &tag, nullptr));
      triplet = triplet_name(tag);
      item["triplet"] = triplet;
      report.lines.push_back(side_name + " " + N + ": x1^2 + x2^2 = " + h + ", (|x1| + |x2|)^2 = " + r +
                             ", m = " + m + ", h = " + h + ", r = " + r + " [" + triplet + "]");
    } else {
      const std::string next = std::to_string(row.index + 1);
      report.lines.push_back(side_name + " " + N + ": " + N + "^2 + " + next + "^2 = " + h + ", (" + N +
                             " + " + next + ")^2 = " + r + ", m = " + m + ", h = " + h + ", r = " + r);
    }
    list.push_back(std::move(item));
    t.rows.push_back({side_name, N, m, h, r, triplet});
  }
  report.results["rows"] = std::move(list);
  report.tables.push_back(std::move(t));
  return report;
}

struct DiophantusArgs {
  uint64_t count = 7;
};

Report cmd_diophantus(const DiophantusArgs& a, const Globals&) {
  Report report;
  report.command = "diophantus";
  report.inputs = json{{"count", a.count}};
  json list = json::array();
  Table t{{"a", "b", "c"}, {}};
  for (uint64_t i = 0; i < a.count; ++i) {
    gm_triple tr{};
    check(gm_diophantus_triple(i, &tr));
    const std::string as = std::to_string(tr.a), bs = std::to_string(tr.b), cs = std::to_string(tr.c);
    list.push_back(json{{"a", tr.a}, {"b", tr.b}, {"c", tr.c}});
    t.rows.push_back({as, bs, cs});
    report.lines.push_back(cs + "^2 = " + bs + "^2 + " + as + "^2");
  }
  report.results["triples"] = std::move(list);
  report.tables.push_back(std::move(t));
  return report;
}

struct HarmonicArgs {
  size_t size = 10;
  bool doublets = false;
  std::optional<uint64_t> key;
};

Report cmd_harmonic(const HarmonicArgs& a, const Globals&) {
  Report report;
  report.command = "harmonic";
  report.inputs = json{{"size", a.size}, {"doublets", a.doublets}};
  if (a.key) report.inputs["key"] = *a.key;

  gm_harmonic* raw = nullptr;
  check(gm_harmonic_create(a.size, &raw));
  Harmonic table(raw);
  const bool grid = !a.doublets && !a.key;

  if (grid) {
    json cells = json::array();
    Table t{{}, {}};
    for (size_t j = 0; j < a.size; ++j) t.header.push_back("c" + std::to_string(j));
    for (size_t i = 0; i < a.size; ++i) {
      json row = json::array();
      std::vector<std::string> cols;
      for (size_t j = 0; j < a.size; ++j) {
        uint64_t v = 0;
        check(gm_harmonic_cell(table.get(), i, j, &v));
        row.push_back(v);
        cols.push_back(std::to_string(v));
      }
      cells.push_back(std::move(row));
      report.lines.push_back(join(cols, " "));
      t.rows.push_back(std::move(cols));
    }
    report.results["cells"] = std::move(cells);
    report.tables.push_back(std::move(t));
  }

  if (a.doublets) {
    size_t n = 0;
    gm_status probe = gm_harmonic_doublets(table.get(), nullptr, 0, &n);
    if (probe != GM_OK && probe != GM_ERR_BUFFER_TOO_SMALL) check(probe);
    std::vector<gm_doublet> ds(n);
    check(gm_harmonic_doublets(table.get(), ds.data(), ds.size(), &n));
    std::vector<gm_integer_mean> means(n);
    check(gm_harmonic_cross_check(table.get(), means.data(), means.size(), &n));

    json list = json::array();
    Table t{{"q", "k", "upper", "lower", "x1", "x2"}, {}};
    for (size_t i = 0; i < ds.size(); ++i) {
      const gm_doublet& d = ds[i];
      const std::string upper = std::to_string(d.upper_row) + "," + std::to_string(d.upper_col);
      const std::string lower = std::to_string(d.lower_row) + "," + std::to_string(d.lower_col);
      list.push_back(json{{"q", d.q},
                          {"k", d.k},
                          {"upper", json::array({d.upper_row, d.upper_col})},
                          {"lower", json::array({d.lower_row, d.lower_col})},
                          {"integer_pair", json::array({means[i].x1, means[i].x2})}});
      t.rows.push_back({std::to_string(d.q), std::to_string(d.k), upper, lower,
                        std::to_string(means[i].x1), std::to_string(means[i].x2)});
      report.lines.push_back("doublet " + std::to_string(d.q) + "-" + std::to_string(d.q) + " at (" + upper +
                             ") and (" + lower + "), integer metallic mean (" +
                             std::to_string(means[i].x1) + ", " + std::to_string(means[i].x2) + ")");
    }
    report.results["doublets"] = std::move(list);
    report.tables.push_back(std::move(t));
  }

  if (a.key) {
    size_t n = 0;
    gm_status probe = gm_harmonic_key_rows(*a.key, nullptr, 0, &n);
    if (probe != GM_OK && probe != GM_ERR_BUFFER_TOO_SMALL) check(probe);
    std::vector<gm_key_row> rows(n);
    check(gm_harmonic_key_rows(*a.key, rows.data(), rows.size(), &n));
    json list = json::array();
    Table t{{"k", "k*k+k", "k*(k+1)"}, {}};
    for (const gm_key_row& r : rows) {
      const std::string k = std::to_string(r.k), sq = std::to_string(r.square_plus_k),
                        pr = std::to_string(r.product);
      list.push_back(json{{"k", r.k}, {"square_plus_k", r.square_plus_k}, {"product", r.product}});
      t.rows.push_back({k, sq, pr});
      report.lines.push_back("(" + k + " x " + k + ") + " + k + " = " + sq + "    " + k + " x " +
                             std::to_string(r.k + 1) + " = " + pr);
    }
    report.results["key"] = std::move(list);
    report.tables.push_back(std::move(t));
  }
  return report;
}

bool is_domain_error(gm_status s) {
  return s != GM_ERR_INVALID_ARGUMENT && s != GM_ERR_BUFFER_TOO_SMALL;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized golden means, metallic means and their tables", "gmean"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--digits", g.digits, "Fractional digits for decimal output")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();

  std::function<Report()> action;

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Real roots of x^n + x = m/2");
  s->add_option("--n", solve.n, "Exponent")->required()->check(CLI::Range(1u, 1000000u));
  s->add_option("--m", solve.m, "Right-hand numerator")->required();
  s->add_option("--tol", solve.tol, "Scaled residual tolerance")->check(CLI::PositiveNumber);
  s->callback([&] { action = [&] { return cmd_solve(solve, g); }; });

  MmfArgs mmf;
  auto* mf = app.add_subcommand("mmf", "Real roots of x^n +/- p x^e = m/2");
  mf->add_option("--n", mmf.n, "Exponent")->required()->check(CLI::Range(1u, 1000000u));
  mf->add_option("--p", mmf.p, "Linear coefficient")->required()->check(CLI::Range(uint64_t{1}, UINT64_MAX));
  mf->add_option("--sign", mmf.sign, "Sign of the p term")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  mf->add_option("--m", mmf.m, "Right-hand numerator")->required();
  mf->add_option("--lower", mmf.lower, "Exponent of the p term: one or n-1")
      ->check(CLI::IsMember({"one", "n-1"}))
      ->capture_default_str();
  mf->add_option("--tol", mmf.tol, "Scaled residual tolerance")->check(CLI::PositiveNumber);
  mf->callback([&] { action = [&] { return cmd_mmf(mmf, g); }; });

  StakhovArgs stakhov;
  auto* st = app.add_subcommand("stakhov", "Positive root of x^n + x = 1 (a) or x^n + x^(n-1) = 1 (b)");
  st->add_option("--n", stakhov.n, "Exponent")->required()->check(CLI::Range(1u, 1000000u));
  st->add_option("--variant", stakhov.variant, "a or b")->check(CLI::IsMember({"a", "b"}))->capture_default_str();
  st->callback([&] { action = [&] { return cmd_stakhov(stakhov, g); }; });

  EulerArgs euler;
  auto* eu = app.add_subcommand("euler", "Solve (a + b^n)/n = x for b");
  eu->add_option("--a", euler.a, "Rational a (ignored in constrained mode)")->capture_default_str();
  eu->add_option("--n", euler.n, "Exponent")->required()->check(CLI::Range(1u, 1000000u));
  eu->add_option("--x", euler.x, "Rational x")->required();
  eu->add_option("--mode", euler.mode, "direct or constrained (a = b)")
      ->check(CLI::IsMember({"direct", "constrained"}))
      ->capture_default_str();
  eu->add_option("--tol", euler.tol, "Scaled residual tolerance")->check(CLI::PositiveNumber);
  eu->callback([&] { action = [&] { return cmd_euler(euler, g); }; });

  MetallicArgs metallic;
  auto* me = app.add_subcommand("metallic", "Metallic mean (p + sqrt(p^2 + 4q))/2");
  me->add_option("--p", metallic.p, "Linear coefficient")->required()->check(CLI::Range(uint64_t{1}, UINT64_MAX));
  me->add_option("--q", metallic.q, "Rational q >= 0")->required();
  me->add_option("--cf-terms", metallic.cf_terms, "Continued fraction term budget")->check(CLI::Range(1u, 100000u));
  me->callback([&] { action = [&] { return cmd_metallic(metallic, g); }; });

  Table1Args table1;
  auto* t1 = app.add_subcommand("table1", "Integer and non-integer solution table");
  t1->add_option("--rows", table1.rows, "Number of rows")->required()->check(CLI::Range(uint64_t{1}, uint64_t{1000000}));
  t1->add_option("--side", table1.side, "left, right or both")
      ->check(CLI::IsMember({"left", "right", "both"}))
      ->capture_default_str();
  t1->callback([&] { action = [&] { return cmd_table1(table1, g); }; });

  DiophantusArgs dioph;
  auto* di = app.add_subcommand("diophantus", "Triples (2N+1, 2N(N+1), 2N(N+1)+1)");
  di->add_option("--count", dioph.count, "Number of triples")->required()->check(CLI::Range(uint64_t{1}, uint64_t{1000000}));
  di->callback([&] { action = [&] { return cmd_diophantus(dioph, g); }; });

  HarmonicArgs harmonic;
  auto* ha = app.add_subcommand("harmonic", "Multiplication table, doublets and key");
  ha->add_option("--size", harmonic.size, "Table size")->required()->check(CLI::Range(size_t{1}, size_t{65536}));
  ha->add_flag("--doublets", harmonic.doublets, "List diagonal doublets and their integer metallic means");
  ha->add_option("--key", harmonic.key, "Key rows for k = 0..K");
  ha->callback([&] { action = [&] { return cmd_harmonic(harmonic, g); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    const Report report = action();
    std::ostringstream buffer;
    render(report, g, buffer);
    out << buffer.str();
    return kSuccess;
  } catch (const CallError& e) {
    err << "error: " << gm_status_name(e.status()) << ": " << e.what() << '\n';
    return is_domain_error(e.status()) ? kDomainError : kUsageError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace gmean::cli
