#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/power_series.hpp"
#include "core/rational_function.hpp"
#include "core/tables.hpp"

using namespace ymstrat;

namespace {

PowerSeries from_ints(const std::vector<long long>& v) {
  PowerSeries s(static_cast<int>(v.size()) - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s.set_coeff(static_cast<int>(i), Rational(v[i]));
  return s;
}

RationalFunction one_plus_t_pow(int e, std::vector<DenomFactor> den) {
  return RationalFunction(+1, pow(Polynomial({1, 1}), e), std::move(den));
}

#define CHECK_ERRC_MSG(expr, expected, needle)         \
  do {                                                 \
    try {                                              \
      (void)(expr);                                    \
      FAIL("expected a failure: " #expr);              \
    } catch (const error& e) {                         \
      CHECK(e.code == errc::expected);                 \
      CHECK(std::string(e.what()).find(needle) != std::string::npos); \
    }                                                  \
  } while (0)

#define CHECK_ERRC(expr, expected)        \
  do {                                    \
    try {                                 \
      (void)(expr);                       \
      FAIL("expected a failure: " #expr); \
    } catch (const error& e) {            \
      CHECK(e.code == errc::expected);    \
    }                                     \
  } while (0)

} // namespace

TEST_CASE("builtin table inventory") {
  const SeriesTable& table = SeriesTable::builtin();
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"SU2", "bg"},     {"SU2", "flat.reven"}, {"SU2", "flat.rodd"}, {"SU2", "stratum"},
      {"SU3", "bg"},     {"SU3", "flat.all"},   {"SU3", "stratum"},   {"SU4", "bg"},
      {"U1", "bg"},      {"U1", "flat.all"},    {"U2", "bg"},         {"U2", "flat.reven"},
      {"U2", "flat.rodd"}, {"U2", "stratum"},   {"U3", "bg"},         {"U3", "flat.all"},
      {"U3", "stratum"}, {"U4", "bg"}};
  CHECK(table.keys() == expected);
  CHECK(table.has("U2", "bg"));
  CHECK(!table.has("U2", "flat.all"));
  CHECK(!table.is_external("U2", "bg"));
  CHECK(table.is_external("U4", "bg"));
  CHECK(table.is_external("SU4", "bg"));
  CHECK(!table.is_external("U5", "bg"));  // absent rows are not external
}

TEST_CASE("external rows refuse evaluation, with a reason") {
  const SeriesTable& table = SeriesTable::builtin();
  CHECK_ERRC_MSG(table.evaluate("U4", "bg", 2), unsupported_group, "external");
  CHECK_ERRC_MSG(table.evaluate("SU4", "bg", 0), unsupported_group, "external");
  CHECK_ERRC_MSG(table.evaluate("U5", "bg", 2), unsupported_group, "no table entry");
  CHECK_ERRC(table.evaluate("U2", "bg", -1), invalid_argument);
}

TEST_CASE("frozen expansions of the tabulated closed forms") {
  // full-space series of U(2) at g~ = 1
  CHECK(rf_expand(bg_series(Group::U2, 1), 4) == from_ints({1, 1, 1, 2, 3}));
  // flat series of SU(2) at g~ = 0 (two isolated flat connections, each
  // contributing the series of the classifying space of SU(2))
  const RationalFunction su2_flat = flat_closed_form(Group::SU2, +1, 0);
  const RationalFunction two_points(
      +1, Polynomial::constant(2), {DenomFactor{FactorForm::one_minus, 4, 1}});
  CHECK(rf_equal(su2_flat, two_points));
  CHECK(to_string(su2_flat) == "2 / (1-t^4)");
  // flat series of U(2) at g~ = 0
  const RationalFunction u2_flat = flat_closed_form(Group::U2, +1, 0);
  const RationalFunction two_points_u(
      +1, Polynomial::constant(2),
      {DenomFactor{FactorForm::one_minus, 2, 1}, DenomFactor{FactorForm::one_minus, 4, 1}});
  CHECK(rf_equal(u2_flat, two_points_u));
  CHECK(rf_expand(u2_flat, 4) == from_ints({2, 0, 2, 0, 4}));
  // unstable-stratum series of U(3) at g~ = 1: (1+t)^3/(1-t^2)^2 = (1+t)/(1-t)^2
  CHECK(rf_expand(stratum_family_series(Group::U3, 1), 4) == from_ints({1, 3, 5, 7, 9}));
  // flat series of SU(3) at g~ = 1, numerator expanded by hand:
  // (1+t^3)(1+t^5) + t^3 (1+t)^2 (1+t^2+t^4)
  const Polynomial num({1, 0, 0, 2, 2, 3, 2, 2, 3, 1});
  const RationalFunction hand(+1, num,
                              {DenomFactor{FactorForm::one_minus, 4, 1},
                               DenomFactor{FactorForm::one_minus, 6, 1}});
  CHECK(rf_equal(flat_closed_form(Group::SU3, +1, 1), hand));
}

TEST_CASE("parity selects the rank-2 family with the matching flat form") {
  // The two rank-2 flat forms differ exactly by which r-family of unstable
  // strata the component carries: odd r for the bundle whose parity equals
  // (-1)^g~, even r for the other.  Their difference is the geometric tail
  //   (t^g~ - t^(g~+2)) (1+t)^(2g~) / (1-t^2)(1-t^4)
  //     = t^g~ (1+t)^(2g~) / (1-t^4).
  for (int gt = 0; gt <= 6; ++gt) {
    const SeriesTable& table = SeriesTable::builtin();
    const RationalFunction rodd = table.evaluate("U2", "flat.rodd", gt);
    const RationalFunction reven = table.evaluate("U2", "flat.reven", gt);
    const RationalFunction diff = rf_add(rodd, rf_scale(Int(-1), reven));
    RationalFunction tail = rf_mul(
        RationalFunction(+1, Polynomial::monomial(gt), {DenomFactor{FactorForm::one_minus, 4, 1}}),
        one_plus_t_pow(2 * gt, {}));
    CHECK(rf_equal(diff, tail));

    // flat_closed_form picks rodd exactly when parity == (-1)^g~
    const int odd_parity = gt % 2 == 0 ? +1 : -1;
    CHECK(rf_equal(flat_closed_form(Group::U2, odd_parity, gt), rodd));
    CHECK(rf_equal(flat_closed_form(Group::U2, -odd_parity, gt), reven));
    // SU(2) always selects the +1 component
    CHECK(rf_equal(flat_closed_form(Group::SU2, -1, gt),
                   table.evaluate("SU2", gt % 2 == 0 ? "flat.rodd" : "flat.reven", gt)));
  }
}

TEST_CASE("rank-3 flat forms are parity independent") {
  for (int gt = 0; gt <= 6; ++gt) {
    CHECK(rf_equal(flat_closed_form(Group::U3, +1, gt), flat_closed_form(Group::U3, -1, gt)));
    CHECK(rf_equal(flat_closed_form(Group::SU3, +1, gt), flat_closed_form(Group::SU3, -1, gt)));
  }
  CHECK_ERRC(flat_closed_form(Group::U3, 0, 2), invalid_argument);
}

TEST_CASE("stratum series validates membership in the group family") {
  const ABType r2 = ABType::from_blocks({{1, 2}, {1, -2}});
  const ABType r3 = ABType::from_blocks({{1, 2}, {1, 0}, {1, -2}});
  // families are tabulated independently of r
  CHECK(rf_equal(stratum_series(Group::U2, r2, 3), stratum_family_series(Group::U2, 3)));
  CHECK(rf_equal(stratum_series(Group::SU3, r3, 2), stratum_family_series(Group::SU3, 2)));
  // wrong family for the group's rank
  CHECK_ERRC(stratum_series(Group::U2, r3, 2), unsupported_stratum);
  CHECK_ERRC(stratum_series(Group::U3, r2, 2), unsupported_stratum);
  // the semistable type is not an unstable stratum
  CHECK_ERRC(stratum_series(Group::U2, ABType::semistable(2, 0), 2), unsupported_stratum);
  // rank 1 has no unstable strata at all
  CHECK_ERRC(stratum_family_series(Group::U1, 2), unsupported_stratum);
}

TEST_CASE("parsing accepts the documented format and reports origins") {
  const SeriesTable t = SeriesTable::parse(
      "# comment\n"
      "U2 bg (1+t)^g*(1+t^3)^g / (1-t^2)(1-t^4)\n"
      "\n"
      "U2 stratum (1+t)^(2g) / (1-t^2)\n",
      "inline");
  CHECK(t.has("U2", "bg"));
  CHECK(rf_equal(t.evaluate("U2", "bg", 1), bg_series(Group::U2, 1)));

  CHECK_ERRC_MSG(SeriesTable::parse("U2 bg (1+t^^2)\n", "somefile"), parse_error, "somefile");
  CHECK_ERRC_MSG(SeriesTable::parse("U2\n", "somefile:1"), parse_error, "somefile");
  CHECK_ERRC_MSG(SeriesTable::parse("U2 bg (1+t)^g / (2-t^2)\n", "f"), parse_error, "f");
  // duplicate rows are rejected
  CHECK_ERRC(SeriesTable::parse("U2 bg 1\nU2 bg 1\n", "f"), parse_error);
  // negative exponents are caught at evaluation time with the row origin
  const SeriesTable neg = SeriesTable::parse("U2 bg t^(g-2)\n", "negfile");
  CHECK_ERRC_MSG(neg.evaluate("U2", "bg", 0), invalid_argument, "negfile");
  CHECK(rf_equal(neg.evaluate("U2", "bg", 2), RationalFunction(+1, Polynomial::constant(1), {})));

  CHECK_ERRC(SeriesTable::load_file("/nonexistent/tables.txt"), invalid_argument);
}

TEST_CASE("a mutated table is visible in expansions") {
  // Shift the full-space denominator (1-t^4) -> (1-t^6); the expansions
  // must part ways at degree 4.
  const SeriesTable mutated = SeriesTable::parse(
      "U2 bg (1+t)^g*(1+t^3)^g / (1-t^2)(1-t^6)\n", "mutated");
  const PowerSeries good = rf_expand(bg_series(Group::U2, 1), 10);
  const PowerSeries bad = rf_expand(bg_series(Group::U2, 1, mutated), 10);
  CHECK(!agree(good, bad));
  CHECK(first_difference(good, bad) == 4);
  CHECK(agree(good.truncated(3), bad.truncated(3)));
}
