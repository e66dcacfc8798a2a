#include "ymstrat/ymstrat.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/ab_types.hpp"
#include "core/errors.hpp"
#include "core/index_theory.hpp"
#include "core/json_io.hpp"
#include "core/morse.hpp"
#include "core/surface.hpp"
#include "core/tables.hpp"

struct yms_context {
  ymstrat::SeriesTable table;
  std::string last_error;
};

namespace {

using namespace ymstrat;

yms_status map_errc(errc c) { return static_cast<yms_status>(static_cast<int>(c)); }

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

yms_status emit(const nlohmann::json& j, char** out) {
  *out = dup_string(dump_canonical(j));
  return *out ? YMS_OK : YMS_E_INTERNAL;
}

/* Run a body with the context's error channel wired up. */
template <typename F>
yms_status guarded(yms_context* ctx, F&& body) {
  if (!ctx) return YMS_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const error& e) {
    ctx->last_error = e.what();
    return map_errc(e.code);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return YMS_E_INTERNAL;
  }
}

template <typename T>
T* require(T* arg, const char* what) {
  if (!arg) fail(errc::invalid_argument, std::string(what) + " must not be null");
  return arg;
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

/* "(2,1,-1,-2)"-style tuple or a {"blocks": ..., "n0": ...} object. */
ABType parse_type_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) fail(errc::parse_error, "empty type");
  if (text[first] == '{') return type_from_json(parse_json_text(text));
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](unsigned char c) { return c == ' ' || c == '\t'; }),
             body.end());
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') fail(errc::parse_error, "unbalanced parentheses in type tuple");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Rational> weights;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    weights.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ABType::from_tuple(weights);
}

nlohmann::json type_with_codim(const ABType& mu, const SurfaceSpec& surface) {
  nlohmann::json j = to_json(mu);
  j["pretty"] = mu.pretty();
  if (surface.is_orientable()) {
    j["codim"] = codim_orientable(mu, surface.genus);
  } else {
    const CodimBreakdown c = codim_nonorientable(mu, surface.double_cover_genus());
    j["lambda"] = c.lambda;
    j["lambda_C"] = c.lambda_C;
    j["lambda_R"] = c.lambda_R;
  }
  return j;
}

} // namespace

extern "C" {

const char* yms_version(void) { return "0.1.0"; }

const char* yms_status_name(yms_status status) {
  switch (status) {
    case YMS_OK: return "ok";
    case YMS_E_INVALID_ARGUMENT: return "invalid_argument";
    case YMS_E_PARSE: return "parse_error";
    case YMS_E_DIVISION_INEXACT: return "division_inexact";
    case YMS_E_INVALID_PROGRESSION: return "invalid_progression";
    case YMS_E_INCOMPARABLE_INPUT: return "incomparable_input";
    case YMS_E_UNSUPPORTED_RANK: return "unsupported_rank";
    case YMS_E_NEGATIVE_DIMENSION: return "negative_dimension";
    case YMS_E_UNSUPPORTED_GROUP: return "unsupported_group";
    case YMS_E_UNSUPPORTED_STRATUM: return "unsupported_stratum";
    case YMS_E_LEDGER_INCONSISTENT: return "ledger_inconsistent";
    case YMS_E_MISSING_TOTAL_SERIES: return "missing_total_series";
    case YMS_E_INSUFFICIENT_BOUND: return "insufficient_bound";
    case YMS_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

yms_status yms_context_create(const char* tables_path, yms_context** out) {
  if (!out) return YMS_E_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    auto ctx = new yms_context{
        tables_path ? SeriesTable::load_file(tables_path) : SeriesTable::builtin(), ""};
    *out = ctx;
    return YMS_OK;
  } catch (const error& e) {
    return map_errc(e.code);
  } catch (const std::exception&) {
    return YMS_E_INTERNAL;
  }
}

void yms_context_destroy(yms_context* ctx) { delete ctx; }

const char* yms_last_error(const yms_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void yms_string_free(char* s) { std::free(s); }

yms_status yms_enumerate_json(yms_context* ctx, const char* group, const char* surface,
                              int parity, long long degree, long long codim_bound, char** out) {
  return guarded(ctx, [&]() -> yms_status {
    require(out, "out");
    const Group grp = parse_group(require(group, "group"));
    const SurfaceSpec surf = parse_surface(require(surface, "surface"));
    std::vector<ABType> types;
    if (surf.is_orientable()) {
      types = enumerate_types(rank_of(grp), degree, codim_bound, surf);
    } else {
      BundleSpec bundle;
      bundle.group = grp;
      bundle.parity = parity;
      types = symmetric_strata(bundle, surf, codim_bound);
    }
    nlohmann::json list = nlohmann::json::array();
    for (const ABType& mu : types) list.push_back(type_with_codim(mu, surf));
    const bool parity_used = !surf.is_orientable() && !is_special(grp);
    nlohmann::json j{{"codim_bound", codim_bound},
                     {"degree", degree},
                     {"group", group_name(grp)},
                     {"parity", parity_used ? nlohmann::json(parity) : nlohmann::json(nullptr)},
                     {"surface", surf.name()},
                     {"types", std::move(list)}};
    return emit(j, out);
  });
}

yms_status yms_codim_json(yms_context* ctx, const char* type, const char* surface, char** out) {
  return guarded(ctx, [&]() -> yms_status {
    require(out, "out");
    const ABType mu = parse_type_arg(require(type, "type"));
    const SurfaceSpec surf = parse_surface(require(surface, "surface"));
    nlohmann::json j;
    if (surf.is_orientable()) {
      j["codim"] = codim_orientable(mu, surf.genus);
    } else {
      j = to_json(codim_nonorientable(mu, surf.double_cover_genus()));
    }
    j["pretty"] = mu.pretty();  // echo of the parsed type
    return emit(j, out);
  });
}

namespace {

yms_status emit_series(const RationalFunction& f, int truncate, char** out) {
  if (truncate < 0) fail(errc::invalid_argument, "truncation order must be >= 0");
  nlohmann::json j{{"closed_form", to_string(f)},
                   {"rational_function", to_json(f)},
                   {"series", to_json(rf_expand(f, truncate))}};
  return emit(j, out);
}

} // namespace

yms_status yms_series_json(yms_context* ctx, const char* group, const char* role,
                           const char* surface, int truncate, char** out) {
  return guarded(ctx, [&]() -> yms_status {
    require(out, "out");
    const Group grp = parse_group(require(group, "group"));
    const SurfaceSpec surf = parse_surface(require(surface, "surface"));
    if (surf.is_orientable()) {
      fail(errc::invalid_argument,
           "no tabulated closed forms over orientable surfaces; supply ambient series to the "
           "recursion instead");
    }
    const std::string role_s = require(role, "role");
    RationalFunction f;
    if (role_s == "bg") f = bg_series(grp, surf.double_cover_genus(), ctx->table);
    else if (role_s == "stratum") f = stratum_family_series(grp, surf.double_cover_genus(), ctx->table);
    else fail(errc::invalid_argument, "role must be bg or stratum");
    return emit_series(f, truncate, out);
  });
}

yms_status yms_flat_json(yms_context* ctx, const char* group, int parity, const char* surface,
                         int truncate, char** out) {
  return guarded(ctx, [&]() -> yms_status {
    require(out, "out");
    BundleSpec bundle;
    bundle.group = parse_group(require(group, "group"));
    bundle.parity = parity;
    const SurfaceSpec surf = parse_surface(require(surface, "surface"));
    const FlatSeriesResult res = a5_flat_series(bundle, surf, truncate, ctx->table);
    return emit_series(res.closed_form, truncate, out);
  });
}

yms_status yms_verify_json(yms_context* ctx, const char* group, int parity, const char* surface,
                           int truncate, int* verified, char** out) {
  return guarded(ctx, [&]() -> yms_status {
    require(out, "out");
    require(verified, "verified");
    BundleSpec bundle;
    bundle.group = parse_group(require(group, "group"));
    bundle.parity = parity;
    const SurfaceSpec surf = parse_surface(require(surface, "surface"));
    const VerifyReport report = verify_closed_forms(bundle, surf, truncate, ctx->table);
    *verified = report.ok() ? 1 : 0;
    return emit(to_json(report), out);
  });
}

} /* extern "C" */
