#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/index_theory.hpp"
#include "core/morse.hpp"

using namespace ymstrat;

namespace {

std::mt19937 rng(0x5eed1234);

int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

PowerSeries random_series(int order, int lo = -9, int hi = 9) {
  PowerSeries s(order);
  for (int d = 0; d <= order; ++d) s.set_coeff(d, Rational(rand_int(lo, hi)));
  return s;
}

Polynomial random_poly(int max_deg, int lo = -9, int hi = 9) {
  std::vector<Int> coeffs(static_cast<std::size_t>(rand_int(0, max_deg)) + 1);
  for (auto& c : coeffs) c = rand_int(lo, hi);
  return Polynomial(std::move(coeffs));
}

RationalFunction random_rf() {
  std::vector<DenomFactor> den;
  const int nfactors = rand_int(0, 3);
  for (int i = 0; i < nfactors; ++i) {
    den.push_back(DenomFactor{rand_int(0, 1) ? FactorForm::one_minus : FactorForm::one_plus,
                              rand_int(1, 5), rand_int(1, 2)});
  }
  return RationalFunction(rand_int(0, 1) ? +1 : -1, random_poly(6), std::move(den));
}

/* A random weakly-decreasing integer tuple of the given length and total. */
std::vector<Rational> random_tuple(int len, int total) {
  std::vector<long long> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = rand_int(-6, 6);
  const long long sum = std::accumulate(v.begin(), v.end(), 0LL);
  v[0] += total - sum;  // fix the total, then restore monotonicity by sorting
  std::sort(v.rbegin(), v.rend());
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("series arithmetic satisfies the ring laws") {
  for (int iter = 0; iter < 400; ++iter) {
    const int order = rand_int(0, 12);
    const PowerSeries a = random_series(order);
    const PowerSeries b = random_series(order);
    const PowerSeries c = random_series(order);
    CHECK(ps_add(a, b) == ps_add(b, a));
    CHECK(ps_add(ps_add(a, b), c) == ps_add(a, ps_add(b, c)));
    CHECK(ps_mul(a, b) == ps_mul(b, a));
    CHECK(ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c)));
    CHECK(ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c)));
    CHECK(is_zero(ps_sub(ps_add(a, b), ps_add(b, a))));
    CHECK(ps_sub(ps_add(a, b), b) == a);
    const Rational k(rand_int(-5, 5), rand_int(1, 4));
    CHECK(ps_scale(k, ps_add(a, b)) == ps_add(ps_scale(k, a), ps_scale(k, b)));
  }
}

TEST_CASE("shift composes additively and respects truncation") {
  for (int iter = 0; iter < 300; ++iter) {
    const int order = rand_int(0, 14);
    const PowerSeries a = random_series(order);
    const int i = rand_int(0, 6);
    const int j = rand_int(0, 6);
    CHECK(ps_shift(ps_shift(a, i), j) == ps_shift(a, i + j));
    CHECK(ps_shift(a, 0) == a);
    // truncating commutes with every operation
    const int m = rand_int(0, order);
    const PowerSeries b = random_series(order);
    CHECK(ps_add(a, b).truncated(m) == ps_add(a.truncated(m), b.truncated(m)));
    CHECK(ps_mul(a, b).truncated(m) == ps_mul(a.truncated(m), b.truncated(m)));
    // mixed orders truncate to the shorter operand
    CHECK(ps_add(a, b.truncated(m)) == ps_add(a.truncated(m), b.truncated(m)));
  }
}

TEST_CASE("synthetic division inverts multiplication by 1 + t") {
  for (int iter = 0; iter < 400; ++iter) {
    const int order = rand_int(1, 14);
    const PowerSeries q = random_series(order - 1);
    PowerSeries one_plus_t(order);
    one_plus_t.set_coeff(0, 1);
    one_plus_t.set_coeff(1, 1);
    // build s = (1+t) q at full order: embed q, then multiply
    PowerSeries q_up(order);
    for (int d = 0; d < order; ++d) q_up.set_coeff(d, q.coeff(d));
    const PowerSeries s = ps_mul(one_plus_t, q_up);
    // an exact multiple: the quotient recovers q, the remainder vanishes
    const DivOnePlusT div = div_one_plus_t(s);
    CHECK(div.quotient == q);
    CHECK(div.remainder == 0);
    CHECK(exact_div_one_plus_t(s) == q);
    // reconstruction identity for arbitrary s: (1+t) quotient + rem t^N = s
    const PowerSeries r = random_series(order);
    const DivOnePlusT dr = div_one_plus_t(r);
    PowerSeries qq(order);
    for (int d = 0; d < order; ++d) qq.set_coeff(d, dr.quotient.coeff(d));
    PowerSeries rebuilt = ps_mul(one_plus_t, qq);
    rebuilt.set_coeff(order, rebuilt.coeff(order) + dr.remainder);
    CHECK(rebuilt == r);
  }
}

TEST_CASE("closed-form arithmetic matches series arithmetic") {
  const int N = 16;
  for (int iter = 0; iter < 300; ++iter) {
    const RationalFunction f = random_rf();
    const RationalFunction g = random_rf();
    const PowerSeries fs = rf_expand(f, N);
    const PowerSeries gs = rf_expand(g, N);
    CHECK(rf_expand(rf_add(f, g), N) == ps_add(fs, gs));
    CHECK(rf_expand(rf_mul(f, g), N) == ps_mul(fs, gs));
    const Int k = rand_int(-7, 7);
    CHECK(rf_expand(rf_scale(k, f), N) == ps_scale(Rational(k), fs));
    // rf_equal is an equivalence respected by representation changes:
    // multiplying numerator and denominator by the same factor is invisible
    const DenomFactor extra{rand_int(0, 1) ? FactorForm::one_minus : FactorForm::one_plus,
                            rand_int(1, 4), 1};
    Polynomial factor_poly = Polynomial::constant(1);
    const Polynomial tk = Polynomial::monomial(extra.k);
    factor_poly = extra.form == FactorForm::one_minus ? factor_poly - tk : factor_poly + tk;
    auto den = f.denominator();
    den.push_back(extra);
    const RationalFunction inflated(f.sign(), f.numerator() * factor_poly, std::move(den));
    CHECK(rf_equal(f, inflated));
    CHECK(rf_equal(f, f));
    if (rf_equal(f, g)) CHECK(!first_difference(fs, gs));
    if (first_difference(fs, gs)) CHECK(!rf_equal(f, g));
  }
}

TEST_CASE("dominance is a partial order") {
  for (int iter = 0; iter < 500; ++iter) {
    const int len = rand_int(2, 6);
    const int total = rand_int(-4, 4);
    const auto a = random_tuple(len, total);
    const auto b = random_tuple(len, total);
    const auto c = random_tuple(len, total);
    CHECK(dominates(a, a));
    if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("ledger verdicts are independent of stratum order") {
  BundleSpec b;
  b.group = Group::U3;
  b.parity = +1;
  const int N = 24;
  for (int iter = 0; iter < 40; ++iter) {
    const int gt = rand_int(0, 6);
    const SurfaceSpec surf = SurfaceSpec::nonorientable(gt + 1);
    std::vector<StratumRecord> recs;
    for (const ABType& mu : symmetric_strata(b, surf, N + 2)) {
      if (mu.is_semistable()) continue;
      recs.push_back(StratumRecord{mu, codim_nonorientable(mu, gt).lambda,
                                   SeriesInput(stratum_series(b.group, mu, gt)), std::nullopt});
    }
    const SeriesInput total(bg_series(b.group, gt));
    const SeriesInput open(flat_closed_form(b.group, +1, gt));
    const MorseLedger sorted_ledger = assemble(total, open, recs, N);
    std::shuffle(recs.begin(), recs.end(), rng);
    const MorseLedger shuffled_ledger = assemble(total, open, std::move(recs), N);
    CHECK(sorted_ledger.m_tilde == shuffled_ledger.m_tilde);
    CHECK(*sorted_ledger.remainder == *shuffled_ledger.remainder);
    CHECK(sorted_ledger.morse_inequality == shuffled_ledger.morse_inequality);
    CHECK(sorted_ledger.perfect == shuffled_ledger.perfect);
    CHECK(sorted_ledger.antiperfect == shuffled_ledger.antiperfect);
  }
}

TEST_CASE("deepening the codimension cutoff never changes certified degrees") {
  // semistable recursion: any bound >= N yields the same truncated answer
  for (int g = 0; g <= 3; ++g) {
    std::map<std::pair<long long, long long>, SeriesInput> totals;
    for (long long nn = 1; nn <= 3; ++nn) {
      for (long long rr = 0; rr < nn; ++rr) {
        totals.emplace(std::make_pair(nn, rr),
                       SeriesInput(orientable_total_series(static_cast<int>(nn), g)));
      }
    }
    for (long long k : {0LL, 1LL, 2LL}) {
      const int N = 14;
      const PowerSeries tight = p5_recursion(3, k, g, totals, N, N);
      const PowerSeries deep = p5_recursion(3, k, g, totals, N + 10, N);
      CHECK(tight == deep);
    }
  }
  // stratum enumeration: a deeper bound only appends deeper strata
  BundleSpec b;
  b.group = Group::U2;
  b.parity = -1;
  for (int gt = 0; gt <= 6; ++gt) {
    const SurfaceSpec surf = SurfaceSpec::nonorientable(gt + 1);
    const auto tight = symmetric_strata(b, surf, 20);
    const auto deep = symmetric_strata(b, surf, 30);
    REQUIRE(tight.size() <= deep.size());
    for (std::size_t i = 0; i < tight.size(); ++i) CHECK(tight[i] == deep[i]);
    for (std::size_t i = tight.size(); i < deep.size(); ++i) {
      CHECK(codim_nonorientable(deep[i], gt).lambda > 20);
    }
  }
}

TEST_CASE("flat-series assembly is stable under deeper truncation") {
  for (int gt = 0; gt <= 6; ++gt) {
    const SurfaceSpec surf = SurfaceSpec::nonorientable(gt + 1);
    for (Group grp : {Group::U2, Group::SU2, Group::U3, Group::SU3}) {
      BundleSpec bundle;
      bundle.group = grp;
      bundle.parity = gt % 2 == 0 ? +1 : -1;
      const int N = 18;
      const FlatSeriesResult shallow = a5_flat_series(bundle, surf, N);
      const FlatSeriesResult deeper = a5_flat_series(bundle, surf, N + 10);
      CHECK(shallow.series == deeper.series.truncated(N));
      CHECK(rf_equal(shallow.closed_form, deeper.closed_form));
    }
  }
}
