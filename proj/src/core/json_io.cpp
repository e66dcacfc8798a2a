#include "core/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "core/errors.hpp"

namespace ymstrat {

namespace {

nlohmann::json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return to_string(v);
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail(errc::parse_error, "expected an integer or a decimal string");
}

int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) fail(errc::parse_error, std::string(what) + " must be an integer");
  return j.get<int>();
}

const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(errc::parse_error, std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

} // namespace

nlohmann::json to_json(const PowerSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(to_string(s.coeff(d)));
  return nlohmann::json{{"coeffs", std::move(coeffs)}, {"truncation", s.order()}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  const int n = require_int(require_key(j, "truncation"), "truncation");
  const auto& coeffs = require_key(j, "coeffs");
  if (n < 0 || !coeffs.is_array() || static_cast<int>(coeffs.size()) != n + 1) {
    fail(errc::parse_error, "coeffs must hold exactly truncation+1 entries");
  }
  PowerSeries s(n);
  for (int d = 0; d <= n; ++d) {
    if (!coeffs[d].is_string()) fail(errc::parse_error, "series coefficients must be strings");
    s.set_coeff(d, parse_rational(coeffs[d].get<std::string>()));
  }
  return s;
}

nlohmann::json to_json(const RationalFunction& f) {
  nlohmann::json num = nlohmann::json::array();
  for (const Int& c : f.numerator().coeffs()) num.push_back(int_to_json(c));
  nlohmann::json den = nlohmann::json::array();
  for (const DenomFactor& d : f.denominator()) {
    den.push_back(nlohmann::json{{"form", d.form == FactorForm::one_minus ? "one_minus" : "one_plus"},
                                 {"k", d.k},
                                 {"power", d.power}});
  }
  return nlohmann::json{
      {"denominator", std::move(den)}, {"numerator", std::move(num)}, {"sign", f.sign()}};
}

RationalFunction rf_from_json(const nlohmann::json& j) {
  const int sign = require_int(require_key(j, "sign"), "sign");
  if (sign != 1 && sign != -1) fail(errc::parse_error, "sign must be 1 or -1");
  const auto& num_j = require_key(j, "numerator");
  if (!num_j.is_array()) fail(errc::parse_error, "numerator must be an array");
  std::vector<Int> coeffs;
  coeffs.reserve(num_j.size());
  for (const auto& c : num_j) coeffs.push_back(int_from_json(c));
  const auto& den_j = require_key(j, "denominator");
  if (!den_j.is_array()) fail(errc::parse_error, "denominator must be an array");
  std::vector<DenomFactor> den;
  for (const auto& d : den_j) {
    const auto& form = require_key(d, "form");
    FactorForm f;
    if (form == "one_minus") f = FactorForm::one_minus;
    else if (form == "one_plus") f = FactorForm::one_plus;
    else fail(errc::parse_error, "form must be one_minus or one_plus");
    den.push_back(DenomFactor{f, require_int(require_key(d, "k"), "k"),
                              require_int(require_key(d, "power"), "power")});
  }
  return RationalFunction(sign, Polynomial(std::move(coeffs)), std::move(den));
}

nlohmann::json to_json(const ABType& mu) {
  nlohmann::json blocks = nlohmann::json::array();
  long long n0 = 0;
  for (const Block& b : mu.blocks()) {
    if (b.k == 0) n0 = b.n;
    else blocks.push_back(nlohmann::json::array({b.n, b.k}));
  }
  return nlohmann::json{{"blocks", std::move(blocks)}, {"n0", n0}};
}

ABType type_from_json(const nlohmann::json& j) {
  const auto& blocks_j = require_key(j, "blocks");
  if (!blocks_j.is_array()) fail(errc::parse_error, "blocks must be an array");
  std::vector<Block> blocks;
  for (const auto& b : blocks_j) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer()) {
      fail(errc::parse_error, "each block must be a pair of integers [n, k]");
    }
    blocks.push_back(Block{b[0].get<long long>(), b[1].get<long long>()});
    if (blocks.back().k == 0) fail(errc::parse_error, "the slope-zero block belongs in n0");
  }
  const auto& n0_j = require_key(j, "n0");
  if (!n0_j.is_number_integer()) fail(errc::parse_error, "n0 must be an integer");
  const long long n0 = n0_j.get<long long>();
  if (n0 < 0) fail(errc::parse_error, "n0 must be >= 0");
  if (n0 > 0) blocks.push_back(Block{n0, 0});
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.slope() > b.slope(); });
  return ABType::from_blocks(std::move(blocks));
}

nlohmann::json to_json(const CodimBreakdown& c) {
  return nlohmann::json{{"lambda", c.lambda}, {"lambda_C", c.lambda_C}, {"lambda_R", c.lambda_R}};
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : r.r_coeffs) coeffs.push_back(to_string(c));
  nlohmann::json j{{"N", r.N},
                   {"R_coeffs", std::move(coeffs)},
                   {"antiperfect_through_N", r.antiperfect_through_N},
                   {"morse_inequality", to_string(r.morse_inequality)},
                   {"perfect_through_N", r.perfect_through_N},
                   {"scenario", r.scenario}};
  j["first_discrepancy"] =
      r.first_discrepancy ? nlohmann::json(*r.first_discrepancy) : nlohmann::json(nullptr);
  return j;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace ymstrat
