#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/polynomial.hpp"

namespace ymstrat {

/* One denominator factor (1 - t^k) or (1 + t^k), k >= 1, power >= 1. */
enum class FactorForm { one_minus, one_plus };
struct DenomFactor {
  FactorForm form;
  int k;
  int power;
  bool operator==(const DenomFactor&) const = default;
};

/* sign * numerator / product of factors.  Every factor has constant term 1,
 * so the function is regular at t = 0 and has a unique series expansion,
 * independent of factor order.  The denominator is kept factored (never
 * expanded) so closed forms print in their natural shape. */
class RationalFunction {
public:
  RationalFunction();  // the zero function
  RationalFunction(int sign, Polynomial numerator, std::vector<DenomFactor> denominator);

  int sign() const { return sign_; }
  const Polynomial& numerator() const { return num_; }
  const std::vector<DenomFactor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

private:
  int sign_;
  Polynomial num_;
  std::vector<DenomFactor> den_;  // canonical: sorted by (form, k), merged
};

/* Unique power-series expansion at t = 0, truncated to order N. */
PowerSeries rf_expand(const RationalFunction& f, int N);

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/* Common-denominator sum; the result keeps the factorwise max multiset of
 * the two denominators (no cancellation is attempted). */
RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_scale(const Int& c, const RationalFunction& f);

/* Exact equality decided by cross-multiplied polynomial identity:
 * sign_a*num_a*den_b == sign_b*num_b*den_a with denominators expanded. */
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/* The denominator multiset expanded into a single polynomial. */
Polynomial denominator_polynomial(const RationalFunction& f);

/* e.g. "(1 + t + t^2 + t^3) / (1-t^2)(1-t^4)" or "2 / (1-t^4)" or "1 + 2t + t^2". */
std::string to_string(const RationalFunction& f);

/* Sum of t^(c*r+b) over r >= 1 (optionally r = a mod m): truncated series
 * plus geometric closed form t^(c*r0+b)/(1 - t^(c*m')).  Throws
 * invalid_progression if the least contributing exponent is negative. */
struct Progression {
  PowerSeries series;
  RationalFunction closed_form;
};
Progression sum_progression(int c, int b, std::optional<std::pair<int, int>> residue_class,
                            int N);

} // namespace ymstrat
