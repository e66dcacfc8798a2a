#include "core/rational_function.hpp"

#include <algorithm>
#include <map>

namespace ymstrat {

namespace {

std::vector<DenomFactor> canonical(std::vector<DenomFactor> den) {
  std::map<std::pair<int, int>, int> merged;  // (form, k) -> power
  for (const auto& f : den) {
    if (f.k < 1) fail(errc::invalid_argument, "denominator factor exponent k must be >= 1");
    if (f.power < 1) fail(errc::invalid_argument, "denominator factor power must be >= 1");
    merged[{static_cast<int>(f.form), f.k}] += f.power;
  }
  std::vector<DenomFactor> out;
  for (const auto& [key, power] : merged)
    out.push_back({static_cast<FactorForm>(key.first), key.second, power});
  return out;
}

Polynomial factor_polynomial(const DenomFactor& f) {
  Polynomial base = Polynomial::constant(1) +
                    Polynomial::monomial(f.k, f.form == FactorForm::one_minus ? Int(-1) : Int(1));
  return pow(base, f.power);
}

/* Multiply a series by the expansion of 1/(1 -+ t^k): 1/(1-t^k) = sum t^(mk),
 * 1/(1+t^k) = sum (-1)^m t^(mk).  Done in place per factor power. */
PowerSeries divide_by_factor(PowerSeries s, FactorForm form, int k) {
  // s / (1 -+ t^k) == q with q_d = s_d +- q_{d-k}
  PowerSeries q(s.order());
  for (int d = 0; d <= s.order(); ++d) {
    Rational v = s.coeff(d);
    if (d >= k) v += (form == FactorForm::one_minus ? q.coeff(d - k) : -q.coeff(d - k));
    q.set_coeff(d, v);
  }
  return q;
}

} // namespace

RationalFunction::RationalFunction() : sign_(1) {}

RationalFunction::RationalFunction(int sign, Polynomial numerator,
                                   std::vector<DenomFactor> denominator)
    : sign_(sign), num_(std::move(numerator)), den_(canonical(std::move(denominator))) {
  if (sign_ != 1 && sign_ != -1) fail(errc::invalid_argument, "sign must be +1 or -1");
}

PowerSeries rf_expand(const RationalFunction& f, int N) {
  if (N < 0) fail(errc::invalid_argument, "expansion order must be >= 0");
  PowerSeries s = to_series(f.numerator(), N);
  if (f.sign() < 0) s = ps_scale(Rational(-1), s);
  for (const auto& factor : f.denominator())
    for (int p = 0; p < factor.power; ++p) s = divide_by_factor(std::move(s), factor.form, factor.k);
  return s;
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
  std::vector<DenomFactor> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return RationalFunction(a.sign() * b.sign(), a.numerator() * b.numerator(), std::move(den));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  // Factorwise max multiset of the two denominators.
  std::map<std::pair<int, int>, int> powers;
  for (const auto& f : a.denominator())
    powers[{static_cast<int>(f.form), f.k}] = f.power;
  for (const auto& f : b.denominator()) {
    int& p = powers[{static_cast<int>(f.form), f.k}];
    p = std::max(p, f.power);
  }
  std::vector<DenomFactor> den;
  for (const auto& [key, power] : powers)
    den.push_back({static_cast<FactorForm>(key.first), key.second, power});

  auto complement = [&](const RationalFunction& f) {
    // Product of the factors missing from f's denominator relative to den.
    Polynomial c = Polynomial::constant(1);
    for (const auto& d : den) {
      int have = 0;
      for (const auto& own : f.denominator())
        if (own.form == d.form && own.k == d.k) have = own.power;
      if (d.power > have) c = c * factor_polynomial({d.form, d.k, d.power - have});
    }
    return c;
  };

  Polynomial na = a.numerator() * complement(a);
  if (a.sign() < 0) na = Polynomial() - na;
  Polynomial nb = b.numerator() * complement(b);
  if (b.sign() < 0) nb = Polynomial() - nb;
  return RationalFunction(1, na + nb, std::move(den));
}

RationalFunction rf_scale(const Int& c, const RationalFunction& f) {
  return RationalFunction(f.sign(), f.numerator() * Polynomial::constant(c), f.denominator());
}

Polynomial denominator_polynomial(const RationalFunction& f) {
  Polynomial d = Polynomial::constant(1);
  for (const auto& factor : f.denominator()) d = d * factor_polynomial(factor);
  return d;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  Polynomial lhs = a.numerator() * denominator_polynomial(b);
  if (a.sign() < 0) lhs = Polynomial() - lhs;
  Polynomial rhs = b.numerator() * denominator_polynomial(a);
  if (b.sign() < 0) rhs = Polynomial() - rhs;
  return lhs == rhs;
}

std::string to_string(const RationalFunction& f) {
  std::string num = to_string(f.numerator());
  if (f.sign() < 0) num = "-(" + num + ")";
  if (f.denominator().empty()) return num;
  const bool wrap = f.numerator().degree() > 0 && f.sign() > 0;
  std::string out = wrap ? "(" + num + ")" : num;
  out += " / ";
  for (const auto& d : f.denominator()) {
    out += "(1";
    out += d.form == FactorForm::one_minus ? "-" : "+";
    out += "t";
    if (d.k != 1) out += "^" + std::to_string(d.k);
    out += ")";
    if (d.power != 1) out += "^" + std::to_string(d.power);
  }
  return out;
}

Progression sum_progression(int c, int b, std::optional<std::pair<int, int>> residue_class,
                            int N) {
  if (c < 1) fail(errc::invalid_argument, "progression requires c >= 1");
  if (N < 0) fail(errc::invalid_argument, "truncation order must be >= 0");
  long long r0 = 1, step = 1;
  if (residue_class) {
    auto [a, m] = *residue_class;
    if (m < 1) fail(errc::invalid_argument, "residue modulus must be >= 1");
    long long rem = ((static_cast<long long>(a) % m) + m) % m;
    r0 = rem == 0 ? m : rem;  // least r >= 1 with r = a (mod m)
    step = m;
  }
  const long long first_exp = static_cast<long long>(c) * r0 + b;
  if (first_exp < 0)
    fail(errc::invalid_progression,
         "least contributing exponent c*" + std::to_string(r0) + "+" + std::to_string(b) +
             " is negative");

  PowerSeries s(N);
  for (long long e = first_exp; e <= N; e += static_cast<long long>(c) * step)
    s.set_coeff(static_cast<int>(e), s.coeff(static_cast<int>(e)) + 1);

  RationalFunction closed(1, Polynomial::monomial(static_cast<int>(first_exp)),
                          {{FactorForm::one_minus, static_cast<int>(c * step), 1}});
  return Progression{std::move(s), std::move(closed)};
}

} // namespace ymstrat
