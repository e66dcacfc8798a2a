#pragma once

#include <string>
#include <vector>

#include "core/power_series.hpp"
#include "core/rational.hpp"

namespace ymstrat {

/* Polynomial in t with arbitrary-precision integer coefficients, stored by
 * ascending degree with no trailing zeros (the zero polynomial is empty). */
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> ascending_coeffs);
  static Polynomial constant(const Int& c);
  static Polynomial monomial(int degree, const Int& c = Int(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
  std::vector<Int> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, int e);

/* Truncation into a power series of the given order. */
PowerSeries to_series(const Polynomial& p, int order);

/* Ascending form, e.g. "1 + 2t + t^3" / "-1 + t" / "0". */
std::string to_string(const Polynomial& p);

} // namespace ymstrat
