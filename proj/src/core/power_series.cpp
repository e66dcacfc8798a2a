#include "core/power_series.hpp"

#include <algorithm>

namespace ymstrat {

PowerSeries::PowerSeries(int truncation_order) {
  if (truncation_order < 0) fail(errc::invalid_argument, "truncation order must be >= 0");
  coeffs_.assign(static_cast<size_t>(truncation_order) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(int degree, const Rational& c, int order) {
  PowerSeries s(order);
  if (degree < 0) fail(errc::invalid_argument, "monomial degree must be >= 0");
  if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = c;
  return s;
}

const Rational& PowerSeries::coeff(int degree) const {
  if (degree < 0 || degree > order())
    fail(errc::invalid_argument, "coefficient degree outside stored range");
  return coeffs_[static_cast<size_t>(degree)];
}

void PowerSeries::set_coeff(int degree, const Rational& value) {
  if (degree < 0 || degree > order())
    fail(errc::invalid_argument, "coefficient degree outside stored range");
  coeffs_[static_cast<size_t>(degree)] = value;
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    fail(errc::invalid_argument, "re-truncation order outside 0..N");
  PowerSeries s(new_order);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
  return s;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  if (order() != o.order())
    fail(errc::invalid_argument, "equality of series with different truncation orders;"
                                 " re-truncate explicitly");
  return coeffs_ == o.coeffs_;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int d = 0; d <= n; ++d) s.set_coeff(d, a.coeff(d) + b.coeff(d));
  return s;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int d = 0; d <= n; ++d) s.set_coeff(d, a.coeff(d) - b.coeff(d));
  return s;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      s.set_coeff(i + j, s.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return s;
}

PowerSeries ps_scale(const Rational& c, const PowerSeries& a) {
  PowerSeries s(a.order());
  for (int d = 0; d <= a.order(); ++d) s.set_coeff(d, c * a.coeff(d));
  return s;
}

PowerSeries ps_shift(const PowerSeries& a, int j) {
  if (j < 0) fail(errc::invalid_argument, "shift exponent must be >= 0");
  PowerSeries s(a.order());
  for (int d = 0; d + j <= a.order(); ++d) s.set_coeff(d + j, a.coeff(d));
  return s;
}

bool is_nonneg(const PowerSeries& s) {
  for (int d = 0; d <= s.order(); ++d)
    if (s.coeff(d) < 0) return false;
  return true;
}

bool is_zero(const PowerSeries& s) {
  for (int d = 0; d <= s.order(); ++d)
    if (s.coeff(d) != 0) return false;
  return true;
}

bool agree(const PowerSeries& a, const PowerSeries& b) {
  return !first_difference(a, b).has_value();
}

std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d)
    if (a.coeff(d) != b.coeff(d)) return d;
  return std::nullopt;
}

DivOnePlusT div_one_plus_t(const PowerSeries& s) {
  const int n = s.order();
  if (n < 1) fail(errc::invalid_argument, "division by (1+t) needs order >= 1");
  PowerSeries q(n - 1);
  Rational prev(0);
  for (int d = 0; d <= n - 1; ++d) {
    prev = s.coeff(d) - prev;
    q.set_coeff(d, prev);
  }
  return DivOnePlusT{std::move(q), s.coeff(n) - prev};
}

PowerSeries exact_div_one_plus_t(const PowerSeries& s) {
  DivOnePlusT d = div_one_plus_t(s);
  if (d.remainder != 0)
    fail(errc::division_inexact,
         "series is not divisible by (1+t) through its truncation order"
         " (remainder indicator " + to_string(d.remainder) + ")");
  return d.quotient;
}

} // namespace ymstrat
