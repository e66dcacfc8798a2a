#pragma once

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace ymstrat {

/* Formal power series over Q truncated at an explicit order N: exactly the
 * coefficients of t^0..t^N are stored, and every predicate is a statement
 * about degrees <= N only.  Binary operations on mismatched orders truncate
 * to the minimum; the result's order records the effective precision. */
class PowerSeries {
public:
  explicit PowerSeries(int truncation_order);
  static PowerSeries constant(const Rational& c, int order);
  static PowerSeries monomial(int degree, const Rational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int degree) const;
  void set_coeff(int degree, const Rational& value);

  /* Re-truncation to new_order <= order (explicit, per the mixing rule). */
  PowerSeries truncated(int new_order) const;

  /* Strict equality of coefficient vectors; requires equal orders. */
  bool operator==(const PowerSeries& o) const;
  bool operator!=(const PowerSeries& o) const { return !(*this == o); }

private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const Rational& c, const PowerSeries& a);
/* Multiplication by t^j at unchanged order (top j coefficients drop off). */
PowerSeries ps_shift(const PowerSeries& a, int j);

bool is_nonneg(const PowerSeries& s);
bool is_zero(const PowerSeries& s);
/* Coefficientwise agreement through min(order_a, order_b). */
bool agree(const PowerSeries& a, const PowerSeries& b);
/* First degree <= min order where a and b differ, if any. */
std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b);

/* Synthetic division by (1+t): quotient of order N-1 with
 * (1+t)*quotient + remainder*t^N == s through degree N.  Total function;
 * the remainder is the divisibility indicator (s evaluated at t = -1). */
struct DivOnePlusT {
  PowerSeries quotient;
  Rational remainder;
};
DivOnePlusT div_one_plus_t(const PowerSeries& s);

/* Exact division: as above but demands remainder == 0, i.e. a quotient
 * reproducing s through its full order N exists.  Throws division_inexact
 * otherwise (e.g. 1 + t^2, whose value at t = -1 is 2). */
PowerSeries exact_div_one_plus_t(const PowerSeries& s);

/* Sum of t^(c*r + b) over integers r >= 1, optionally restricted to a
 * residue class r = a (mod m).  Returns both the truncated series and the
 * geometric closed form t^(c*r0 + b) / (1 - t^(c*m')) where r0 is the least
 * admissible r and m' the step. */
struct Progression;  // defined in rational_function.hpp (needs RationalFunction)

} // namespace ymstrat
