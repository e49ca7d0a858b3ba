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

#include "gmean/gmean.h"

#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "gmean/continued_fraction.hpp"
#include "gmean/error.hpp"
#include "gmean/harmonic_table.hpp"
#include "gmean/quadratic_means.hpp"
#include "gmean/surd.hpp"
#include "gmean/triangle_catalog.hpp"
#include "gmean/trinomial.hpp"

struct gm_surd {
  gmean::QuadraticSurd value;
};

struct gm_cf {
  std::vector<uint64_t> initial;
  std::vector<uint64_t> period;
  bool truncated = false;
};

struct gm_root_pair {
  gm_surd x1;
  gm_surd x2;
  gmean::Rational discriminant;
  uint64_t r = 0;
};

struct gm_root_set {
  gmean::RootSet roots;
};

struct gm_harmonic {
  gmean::HarmonicTable table;
};

namespace {

thread_local std::string g_last_error;

gm_status to_status(gmean::ErrorCode code) {
  using gmean::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GM_ERR_INVALID_ARGUMENT;
    case ErrorCode::NoRealRoots: return GM_ERR_NO_REAL_ROOTS;
    case ErrorCode::DegenerateIdentity: return GM_ERR_DEGENERATE_IDENTITY;
    case ErrorCode::NoRealRoot: return GM_ERR_NO_REAL_ROOT;
    case ErrorCode::MixedRadicands: return GM_ERR_MIXED_RADICANDS;
    case ErrorCode::DivisionByZero: return GM_ERR_DIVISION_BY_ZERO;
    case ErrorCode::NonPositive: return GM_ERR_NON_POSITIVE;
    case ErrorCode::NoConvergence: return GM_ERR_NO_CONVERGENCE;
    case ErrorCode::CrossCheckFailed: return GM_ERR_CROSS_CHECK_FAILED;
    case ErrorCode::Overflow: return GM_ERR_OVERFLOW;
  }
  return GM_ERR_INTERNAL;
}

gm_status fail(gm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
gm_status guard(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const gmean::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GM_ERR_INTERNAL, "unknown failure");
  }
}

gm_status require(bool ok, const char* what) {
  return ok ? GM_OK : fail(GM_ERR_INVALID_ARGUMENT, what);
}

#define GM_REQUIRE(cond, msg)                          \
  do {                                                 \
    if (gm_status s_ = require((cond), (msg)); s_)     \
      return s_;                                       \
  } while (0)

gm_status write_string(const std::string& s, char* buf, size_t cap, size_t* len) {
  if (len) *len = s.size();
  if (cap <= s.size() || buf == nullptr) {
    return fail(GM_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return GM_OK;
}

template <typename T>
gm_status write_array(const std::vector<T>& items, T* out, size_t cap, size_t* count) {
  if (count) *count = items.size();
  if (cap < items.size() || (out == nullptr && !items.empty())) {
    return fail(GM_ERR_BUFFER_TOO_SMALL, "array needs " + std::to_string(items.size()) + " slots");
  }
  for (size_t i = 0; i < items.size(); ++i) out[i] = items[i];
  return GM_OK;
}

gmean::Sign to_sign(gm_sign s) { return s == GM_SIGN_MINUS ? gmean::Sign::Minus : gmean::Sign::Plus; }

gmean::SolverConfig to_config(const gm_solver_config* cfg) {
  gmean::SolverConfig out;
  if (cfg) {
    out.tolerance = cfg->tolerance;
    out.max_iterations = cfg->max_iterations;
    out.bracket_growth = cfg->bracket_growth;
  }
  return out;
}

gmean::TrinomialSpec to_spec(const gm_trinomial_spec& s) {
  return {s.n, s.p, to_sign(s.sign), s.m,
          s.lower == GM_LOWER_N_MINUS_ONE ? gmean::LowerExponent::NMinusOne
                                          : gmean::LowerExponent::One};
}

std::vector<uint64_t> narrow_terms(const std::vector<gmean::BigInt>& terms) {
  std::vector<uint64_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.sign() < 0 || t > std::numeric_limits<uint64_t>::max()) {
      throw gmean::Error(gmean::ErrorCode::Overflow, "partial quotient " + t.str() + " exceeds 64 bits");
    }
    out.push_back(t.convert_to<uint64_t>());
  }
  return out;
}

uint64_t narrow(const gmean::BigInt& v) {
  if (v > std::numeric_limits<uint64_t>::max()) {
    throw gmean::Error(gmean::ErrorCode::Overflow, v.str() + " exceeds 64 bits");
  }
  return v.convert_to<uint64_t>();
}

gm_surd* new_surd(gmean::QuadraticSurd v) { return new gm_surd{std::move(v)}; }

}  // namespace

extern "C" {

const char* gm_status_name(gm_status status) {
  switch (status) {
    case GM_OK: return "ok";
    case GM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GM_ERR_NO_REAL_ROOTS: return "no-real-roots";
    case GM_ERR_DEGENERATE_IDENTITY: return "degenerate-identity";
    case GM_ERR_NO_REAL_ROOT: return "no-real-root";
    case GM_ERR_MIXED_RADICANDS: return "mixed-radicands";
    case GM_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case GM_ERR_NON_POSITIVE: return "non-positive";
    case GM_ERR_NO_CONVERGENCE: return "no-convergence";
    case GM_ERR_CROSS_CHECK_FAILED: return "cross-check-failed";
    case GM_ERR_OVERFLOW: return "overflow";
    case GM_ERR_BUFFER_TOO_SMALL: return "buffer-too-small";
    case GM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gm_last_error(void) { return g_last_error.c_str(); }

const char* gm_version(void) { return GMEAN_VERSION; }

/* surds */

gm_status gm_surd_create(const char* a, const char* b, uint64_t d, gm_surd** out) {
  return guard([&] {
    GM_REQUIRE(a && b && out, "null argument");
    *out = new_surd(gmean::QuadraticSurd::make(gmean::Rational::parse(a),
                                               gmean::Rational::parse(b), d));
    return GM_OK;
  });
}

gm_status gm_surd_clone(const gm_surd* v, gm_surd** out) {
  return guard([&] {
    GM_REQUIRE(v && out, "null argument");
    *out = new_surd(v->value);
    return GM_OK;
  });
}

void gm_surd_destroy(gm_surd* v) { delete v; }

gm_status gm_surd_combine(gm_surd_op op, const gm_surd* lhs, const gm_surd* rhs, gm_surd** out) {
  return guard([&] {
    GM_REQUIRE(lhs && rhs && out, "null argument");
    GM_REQUIRE(op >= GM_OP_ADD && op <= GM_OP_DIV, "unknown surd operation");
    *out = new_surd(gmean::combine(static_cast<gmean::SurdOp>(op), lhs->value, rhs->value));
    return GM_OK;
  });
}

gm_status gm_surd_compare(const gm_surd* lhs, const gm_surd* rhs, int* out) {
  return guard([&] {
    GM_REQUIRE(lhs && rhs && out, "null argument");
    const auto c = gmean::compare(lhs->value, rhs->value);
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
    return GM_OK;
  });
}

gm_status gm_surd_part_string(const gm_surd* v, gm_surd_part part, char* buf, size_t cap,
                              size_t* len) {
  return guard([&] {
    GM_REQUIRE(v, "null argument");
    const gmean::Rational& r = (part == GM_PART_A_NUM || part == GM_PART_A_DEN) ? v->value.rat()
                                                                                : v->value.coeff();
    switch (part) {
      case GM_PART_A_NUM:
      case GM_PART_B_NUM: return write_string(r.num().str(), buf, cap, len);
      case GM_PART_A_DEN:
      case GM_PART_B_DEN: return write_string(r.den().str(), buf, cap, len);
    }
    return fail(GM_ERR_INVALID_ARGUMENT, "unknown surd part");
  });
}

uint64_t gm_surd_radicand(const gm_surd* v) { return v ? v->value.radicand() : 0; }

double gm_surd_to_double(const gm_surd* v) { return v ? v->value.to_double() : 0.0; }

gm_status gm_surd_to_string(const gm_surd* v, char* buf, size_t cap, size_t* len) {
  return guard([&] {
    GM_REQUIRE(v, "null argument");
    return write_string(v->value.to_string(), buf, cap, len);
  });
}

gm_status gm_surd_to_decimal(const gm_surd* v, uint32_t digits, char* buf, size_t cap,
                             size_t* len) {
  return guard([&] {
    GM_REQUIRE(v, "null argument");
    return write_string(gmean::to_decimal(v->value, digits), buf, cap, len);
  });
}

/* continued fractions */

gm_status gm_continued_fraction(const gm_surd* v, uint32_t max_terms, gm_cf** out) {
  return guard([&] {
    GM_REQUIRE(v && out, "null argument");
    const gmean::ContinuedFraction cf = gmean::continued_fraction_of(v->value, max_terms);
    auto handle = std::make_unique<gm_cf>();
    handle->initial = narrow_terms(cf.initial_terms);
    handle->period = narrow_terms(cf.periodic_part);
    handle->truncated = cf.truncated;
    *out = handle.release();
    return GM_OK;
  });
}

void gm_cf_destroy(gm_cf* cf) { delete cf; }

const uint64_t* gm_cf_initial(const gm_cf* cf, size_t* count) {
  if (count) *count = cf ? cf->initial.size() : 0;
  return cf ? cf->initial.data() : nullptr;
}

const uint64_t* gm_cf_period(const gm_cf* cf, size_t* count) {
  if (count) *count = cf ? cf->period.size() : 0;
  return cf ? cf->period.data() : nullptr;
}

int gm_cf_truncated(const gm_cf* cf) { return cf && cf->truncated ? 1 : 0; }

/* quadratics */

namespace {
gm_root_pair* new_pair(const gmean::RootPair& p) {
  return new gm_root_pair{{p.x1}, {p.x2}, p.discriminant, p.r.value_or(0)};
}
}  // namespace

gm_status gm_solve_quadratic(uint64_t p, const char* q, gm_sign sign, gm_root_pair** out) {
  return guard([&] {
    GM_REQUIRE(q && out, "null argument");
    *out = new_pair(gmean::solve_quadratic({p, gmean::Rational::parse(q), to_sign(sign)}));
    return GM_OK;
  });
}

gm_status gm_generalized_gm(uint64_t m, gm_root_pair** out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    *out = new_pair(gmean::generalized_gm(m));
    return GM_OK;
  });
}

void gm_root_pair_destroy(gm_root_pair* pair) { delete pair; }

const gm_surd* gm_root_pair_x1(const gm_root_pair* pair) { return pair ? &pair->x1 : nullptr; }

const gm_surd* gm_root_pair_x2(const gm_root_pair* pair) { return pair ? &pair->x2 : nullptr; }

gm_status gm_root_pair_discriminant(const gm_root_pair* pair, char* buf, size_t cap, size_t* len) {
  return guard([&] {
    GM_REQUIRE(pair, "null argument");
    return write_string(pair->discriminant.to_string(), buf, cap, len);
  });
}

uint64_t gm_root_pair_r(const gm_root_pair* pair) { return pair ? pair->r : 0; }

gm_status gm_metallic_mean(uint64_t p, const char* q, gm_surd** out) {
  return guard([&] {
    GM_REQUIRE(q && out, "null argument");
    *out = new_surd(gmean::metallic_mean(p, gmean::Rational::parse(q)));
    return GM_OK;
  });
}

gm_status gm_integer_metallic(uint64_t q, int* found, uint64_t* k, uint64_t* k_next) {
  return guard([&] {
    GM_REQUIRE(found, "null argument");
    const auto pair = gmean::integer_metallic(q);
    *found = pair ? 1 : 0;
    if (pair) {
      if (k) *k = pair->first;
      if (k_next) *k_next = pair->second;
    }
    return GM_OK;
  });
}

/* trinomials */

void gm_solver_config_default(gm_solver_config* cfg) {
  if (!cfg) return;
  const gmean::SolverConfig d;
  cfg->tolerance = d.tolerance;
  cfg->max_iterations = d.max_iterations;
  cfg->bracket_growth = d.bracket_growth;
}

gm_status gm_isolate_real_roots(const gm_trinomial_spec* spec, const gm_solver_config* cfg,
                                gm_bracket* out, size_t cap, size_t* count) {
  return guard([&] {
    GM_REQUIRE(spec, "null argument");
    std::vector<gm_bracket> brackets;
    for (const auto& b : gmean::isolate_real_roots(to_spec(*spec), to_config(cfg))) {
      brackets.push_back({b.lo, b.hi});
    }
    return write_array(brackets, out, cap, count);
  });
}

gm_status gm_solve_trinomial(const gm_trinomial_spec* spec, const gm_solver_config* cfg,
                             gm_root_set** out) {
  return guard([&] {
    GM_REQUIRE(spec && out, "null argument");
    *out = new gm_root_set{gmean::solve_trinomial(to_spec(*spec), to_config(cfg))};
    return GM_OK;
  });
}

gm_status gm_solve_gm_general(uint32_t n, uint64_t m, const gm_solver_config* cfg,
                              gm_root_set** out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    *out = new gm_root_set{gmean::solve_gm_general(n, m, to_config(cfg))};
    return GM_OK;
  });
}

gm_status gm_solve_stakhov(uint32_t n, gm_stakhov_variant variant, const gm_solver_config* cfg,
                           double* out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    *out = gmean::solve_stakhov(
        n, variant == GM_STAKHOV_B ? gmean::StakhovVariant::B : gmean::StakhovVariant::A,
        to_config(cfg));
    return GM_OK;
  });
}

gm_status gm_solve_euler(const char* a, uint32_t n, const char* x, gm_euler_mode mode,
                         const gm_solver_config* cfg, gm_root_set** out) {
  return guard([&] {
    GM_REQUIRE(x && out, "null argument");
    GM_REQUIRE(a || mode == GM_EULER_CONSTRAINED, "direct mode needs a");
    const gmean::Rational av = a ? gmean::Rational::parse(a) : gmean::Rational();
    *out = new gm_root_set{gmean::solve_euler(
        av, n, gmean::Rational::parse(x),
        mode == GM_EULER_CONSTRAINED ? gmean::EulerMode::Constrained : gmean::EulerMode::Direct,
        to_config(cfg))};
    return GM_OK;
  });
}

void gm_root_set_destroy(gm_root_set* set) { delete set; }

size_t gm_root_set_size(const gm_root_set* set) { return set ? set->roots.roots.size() : 0; }

gm_status gm_root_set_get(const gm_root_set* set, size_t index, gm_root* out) {
  return guard([&] {
    GM_REQUIRE(set && out, "null argument");
    GM_REQUIRE(index < set->roots.roots.size(), "root index out of range");
    const gmean::RootEntry& r = set->roots.roots[index];
    *out = gm_root{r.value, {r.bracket.lo, r.bracket.hi}, r.residual, r.iterations};
    return GM_OK;
  });
}

int gm_root_set_exhaustive(const gm_root_set* set) {
  return set && set->roots.exhaustive ? 1 : 0;
}

/* triangle catalog */

gm_status gm_diophantus_triple(uint64_t index, gm_triple* out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    const gmean::PythagoreanTriple t = gmean::diophantus_triple(index);
    *out = gm_triple{narrow(t.a), narrow(t.b), narrow(t.c)};
    return GM_OK;
  });
}

gm_status gm_four_k_sequence(size_t count, uint64_t* out) {
  return guard([&] {
    GM_REQUIRE(out || count == 0, "null argument");
    const auto seq = gmean::four_k_sequence(count);
    for (size_t i = 0; i < seq.size(); ++i) out[i] = seq[i];
    return GM_OK;
  });
}

gm_status gm_table_one(uint64_t rows, gm_table_side side, gm_table_row* out, size_t cap,
                       size_t* count) {
  return guard([&] {
    GM_REQUIRE(side >= GM_SIDE_LEFT && side <= GM_SIDE_BOTH, "unknown table side");
    const size_t per_row = side == GM_SIDE_BOTH ? 2 : 1;
    if (rows > (std::numeric_limits<size_t>::max() / 2) || cap < rows * per_row) {
      if (count) *count = static_cast<size_t>(rows) * per_row;
      return fail(GM_ERR_BUFFER_TOO_SMALL, "table needs more slots");
    }
    const gmean::SideSelect select = side == GM_SIDE_LEFT    ? gmean::SideSelect::Left
                                     : side == GM_SIDE_RIGHT ? gmean::SideSelect::Right
                                                             : gmean::SideSelect::Both;
    std::vector<gm_table_row> table;
    for (const auto& r : gmean::table_one(rows, select)) {
      table.push_back({r.side == gmean::TableSide::Left ? GM_SIDE_LEFT : GM_SIDE_RIGHT, r.index,
                       r.m, r.h, r.r});
    }
    return write_array(table, out, cap, count);
  });
}

gm_status gm_table_one_roots(uint64_t index, gm_table_side side, gm_surd** x1, gm_surd** x2) {
  return guard([&] {
    GM_REQUIRE(x1 && x2, "null argument");
    GM_REQUIRE(side == GM_SIDE_LEFT || side == GM_SIDE_RIGHT, "side must be left or right");
    const gmean::TableOneRow row = gmean::table_one_row(
        index, side == GM_SIDE_LEFT ? gmean::TableSide::Left : gmean::TableSide::Right);
    auto first = std::make_unique<gm_surd>(gm_surd{row.x1});
    *x2 = new_surd(row.x2);
    *x1 = first.release();
    return GM_OK;
  });
}

gm_status gm_left_to_right_index(uint64_t index, uint64_t* out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    *out = gmean::left_to_right_index(index);
    return GM_OK;
  });
}

gm_status gm_classify_triplet(const uint64_t values[3], gm_triplet_tag* tag, uint64_t indices[3]) {
  return guard([&] {
    GM_REQUIRE(values && tag, "null argument");
    const gmean::TripletClass c = gmean::classify_triplet({values[0], values[1], values[2]});
    switch (c.tag) {
      case gmean::TripletTag::Fibonacci: *tag = GM_TRIPLET_FIBONACCI; break;
      case gmean::TripletTag::Lucas: *tag = GM_TRIPLET_LUCAS; break;
      case gmean::TripletTag::Neither: *tag = GM_TRIPLET_NEITHER; break;
    }
    if (indices && c.member_indices) {
      for (int i = 0; i < 3; ++i) indices[i] = (*c.member_indices)[i];
    }
    return GM_OK;
  });
}

/* harmonic table */

gm_status gm_harmonic_create(size_t size, gm_harmonic** out) {
  return guard([&] {
    GM_REQUIRE(out, "null argument");
    *out = new gm_harmonic{gmean::build_table(size)};
    return GM_OK;
  });
}

void gm_harmonic_destroy(gm_harmonic* table) { delete table; }

size_t gm_harmonic_size(const gm_harmonic* table) { return table ? table->table.size() : 0; }

gm_status gm_harmonic_cell(const gm_harmonic* table, size_t row, size_t col, uint64_t* out) {
  return guard([&] {
    GM_REQUIRE(table && out, "null argument");
    *out = table->table.cell(row, col);
    return GM_OK;
  });
}

gm_status gm_harmonic_doublets(const gm_harmonic* table, gm_doublet* out, size_t cap,
                               size_t* count) {
  return guard([&] {
    GM_REQUIRE(table, "null argument");
    std::vector<gm_doublet> items;
    for (const auto& d : gmean::find_doublets(table->table)) {
      items.push_back({d.q, d.k, d.upper.first, d.upper.second, d.lower.first, d.lower.second});
    }
    return write_array(items, out, cap, count);
  });
}

gm_status gm_harmonic_key_rows(uint64_t k_max, gm_key_row* out, size_t cap, size_t* count) {
  return guard([&] {
    if (k_max >= cap) {
      if (count) *count = static_cast<size_t>(k_max) + 1;
      return fail(GM_ERR_BUFFER_TOO_SMALL, "key table needs more slots");
    }
    std::vector<gm_key_row> items;
    for (const auto& r : gmean::key_rows(k_max)) items.push_back({r.k, r.square_plus_k, r.product});
    return write_array(items, out, cap, count);
  });
}

gm_status gm_harmonic_cross_check(const gm_harmonic* table, gm_integer_mean* out, size_t cap,
                                  size_t* count) {
  return guard([&] {
    GM_REQUIRE(table, "null argument");
    std::vector<gm_integer_mean> items;
    for (const auto& m : gmean::cross_check_integer_means(table->table)) {
      items.push_back({m.q, m.roots.first, m.roots.second});
    }
    return write_array(items, out, cap, count);
  });
}

}  // extern "C"
