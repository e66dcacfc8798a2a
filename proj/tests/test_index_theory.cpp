#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/ab_types.hpp"
#include "core/errors.hpp"
#include "core/index_theory.hpp"
#include "core/json_io.hpp"

using namespace ymstrat;

namespace {

ABType family2(long long r) { return ABType::from_blocks({Block{1, r}, Block{1, -r}}); }
ABType family3(long long r) {
  return ABType::from_blocks({Block{1, r}, Block{1, 0}, Block{1, -r}});
}

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

TEST_CASE("nonorientable codimension of the rank-2 family") {
  // lambda(r, -r) = 2r + g~ - 1
  for (int gt = 0; gt <= 10; ++gt) {
    for (long long r = 1; r <= 12; ++r) {
      CHECK(codim_nonorientable(family2(r), gt).lambda == 2 * r + gt - 1);
    }
  }
  // the breakdown at (1,-1), g~ = 0: the complex part is the (+,-) Hom
  // block H^1 = r + r + (g~ - 1), the real part the two self-Homs
  const CodimBreakdown b = codim_nonorientable(family2(1), 0);
  CHECK(b.lambda == 2 * b.lambda_C + b.lambda_R);
  CHECK(b.lambda == 1);
}

TEST_CASE("nonorientable codimension of the rank-3 family") {
  // lambda(r, 0, -r) = 4r + 3(g~ - 1)
  for (int gt = 0; gt <= 10; ++gt) {
    for (long long r = 1; r <= 12; ++r) {
      const CodimBreakdown b = codim_nonorientable(family3(r), gt);
      CHECK(b.lambda == 4 * r + 3 * (gt - 1));
      CHECK(b.lambda == 2 * b.lambda_C + b.lambda_R);
    }
  }
  // spot values used elsewhere as fixtures
  CHECK(codim_nonorientable(family3(1), 2).lambda == 7);
  CHECK(codim_nonorientable(family3(2), 2).lambda == 11);
}

TEST_CASE("a rank-4 breakdown, fully itemized") {
  // mu = (2,1,-1,-2) over g~ = 3, positive half (1,2),(1,1), g~ - 1 = 2.
  // Real part, one summand per positive block: (2*2+2) + (2*1+2) = 10.
  // Complex part, Hom and twisted Hom across the positive pair:
  //   (2-1+2) + (2+1+2) = 8.  lambda = 2*8 + 10 = 26.
  const ABType mu = ABType::from_tuple({Rational(2), Rational(1), Rational(-1), Rational(-2)});
  const CodimBreakdown b = codim_nonorientable(mu, 3);
  CHECK(b.lambda_C == 8);
  CHECK(b.lambda_R == 10);
  CHECK(b.lambda == 26);
  CHECK(b.lambda == 2 * b.lambda_C + b.lambda_R);
}

TEST_CASE("nonorientable codimension rejects bad inputs") {
  CHECK_ERRC(codim_nonorientable(family2(1), -1), invalid_argument);
  // non-symmetric types carry no nonorientable codimension
  CHECK_ERRC(codim_nonorientable(ABType::from_tuple({Rational(1), Rational(0), Rational(0)}), 2),
             invalid_argument);
  // the semistable type is the open stratum, codimension 0
  CHECK(codim_nonorientable(ABType::semistable(2, 0), 5).lambda == 0);
  CHECK(codim_nonorientable(ABType::semistable(3, 0), 5).lambda_C == 0);
}

TEST_CASE("orientable codimension") {
  // 2d = 2 * sum_{i<j} (n_j k_i - n_i k_j + n_i n_j (g-1))
  CHECK(codim_orientable(family2(1), 2) == 6);
  CHECK(codim_orientable(family3(1), 2) == 14);
  for (int g = 1; g <= 8; ++g) {
    for (long long r = 1; r <= 10; ++r) {
      CHECK(codim_orientable(family2(r), g) == 2 * (2 * r + g - 1));
    }
  }
  // fractional-slope blocks
  CHECK(codim_orientable(ABType::from_blocks({{2, 1}, {1, -1}}), 2) == 10);
  CHECK_ERRC(codim_orientable(family2(1), -2), invalid_argument);

  // genus-0 empty strata: negative Riemann-Roch summand
  const ABType empty_stratum = ABType::from_blocks({{2, 1}, {1, 0}});
  CHECK_ERRC(codim_orientable(empty_stratum, 0), negative_dimension);
  CHECK(!detail::codim_orientable_raw(empty_stratum, 0).has_value());
  CHECK(detail::codim_orientable_raw(empty_stratum, 1) == 2);
  CHECK(detail::codim_nonorientable_raw(family2(2), 4).has_value());
}

TEST_CASE("codimension growth is monotone in depth and genus") {
  for (int gt = 0; gt <= 6; ++gt) {
    for (long long r = 1; r < 10; ++r) {
      CHECK(codim_nonorientable(family2(r), gt).lambda <
            codim_nonorientable(family2(r + 1), gt).lambda);
      CHECK(codim_nonorientable(family3(r), gt).lambda <
            codim_nonorientable(family3(r + 1), gt).lambda);
    }
  }
  for (long long r = 1; r <= 10; ++r) {
    for (int gt = 0; gt < 6; ++gt) {
      CHECK(codim_nonorientable(family2(r), gt).lambda <
            codim_nonorientable(family2(r), gt + 1).lambda);
    }
  }
}

TEST_CASE("codimension breakdown JSON shape") {
  // family3(2) at g~ = 2: real part 2*2 + 1 = 5, complex part (middle
  // block only) 2 + 1 = 3, so lambda = 2*3 + 5 = 11
  const nlohmann::json j = to_json(codim_nonorientable(family3(2), 2));
  CHECK(j["lambda"] == 11);
  CHECK(j["lambda_C"] == 3);
  CHECK(j["lambda_R"] == 5);
  CHECK(j.size() == 3);
}
