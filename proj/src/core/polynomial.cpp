#include "core/polynomial.hpp"

#include <algorithm>

namespace ymstrat {

namespace {
void strip(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
} // namespace

Polynomial::Polynomial(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  strip(coeffs_);
}

Polynomial Polynomial::constant(const Int& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, const Int& c) {
  if (degree < 0) fail(errc::invalid_argument, "monomial degree must be >= 0");
  std::vector<Int> v(static_cast<size_t>(degree) + 1, Int(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Int Polynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return Int(0);
  return coeffs_[static_cast<size_t>(d)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Polynomial(std::move(c));
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) fail(errc::invalid_argument, "polynomial exponent must be >= 0");
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

PowerSeries to_series(const Polynomial& p, int order) {
  PowerSeries s(order);
  for (int d = 0; d <= std::min(order, p.degree()); ++d)
    s.set_coeff(d, Rational(p.coeff(d)));
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const Int& c = p.coeff(d);
    if (c == 0) continue;
    const Int mag = abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    if (mag != 1 || d == 0) out += to_string(mag);
    if (d >= 1) out += (d == 1) ? "t" : "t^" + std::to_string(d);
  }
  return out;
}

} // namespace ymstrat
