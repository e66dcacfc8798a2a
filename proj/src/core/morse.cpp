#include "core/morse.hpp"

#include <algorithm>
#include <functional>

#include "core/errors.hpp"
#include "core/index_theory.hpp"

namespace ymstrat {

PowerSeries expand_input(const SeriesInput& in, int N) {
  if (std::holds_alternative<RationalFunction>(in)) {
    return rf_expand(std::get<RationalFunction>(in), N);
  }
  const PowerSeries& s = std::get<PowerSeries>(in);
  if (s.order() < N) {
    fail(errc::ledger_inconsistent, "series of order " + std::to_string(s.order()) +
                                        " cannot certify degree " + std::to_string(N));
  }
  return s.truncated(N);
}

const char* to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::holds: return "holds";
    case Verdict3::fails: return "fails";
    case Verdict3::not_evaluated: return "not_evaluated";
  }
  return "?";
}

const char* to_string(Tri v) {
  switch (v) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::undetermined: return "undetermined";
  }
  return "?";
}

MorseLedger assemble(const SeriesInput& total, const std::optional<SeriesInput>& open_stratum,
                     std::vector<StratumRecord> strata, int N) {
  if (N < 1) fail(errc::invalid_argument, "truncation order must be >= 1");
  MorseLedger ledger;
  ledger.N = N;
  ledger.total = expand_input(total, N);
  ledger.m_tilde = PowerSeries(N);
  for (const StratumRecord& rec : strata) {
    if (rec.lambda < 1) {
      fail(errc::ledger_inconsistent, "stratum " + rec.mu.pretty() + " has codimension " +
                                          std::to_string(rec.lambda) +
                                          "; unstable strata need lambda >= 1");
    }
    if (rec.lambda - 1 > N) continue;  // contributes nothing through degree N
    const PowerSeries p = expand_input(rec.series, N);
    ledger.m_tilde = ps_add(ledger.m_tilde, ps_shift(p, static_cast<int>(rec.lambda) - 1));
  }
  ledger.strata = std::move(strata);

  if (open_stratum) {
    ledger.open_stratum = expand_input(*open_stratum, N);
    ledger.morse = ps_add(*ledger.open_stratum, ps_shift(ledger.m_tilde, 1));
    // (1+t) R = morse - total; the truncation determines R through N exactly
    // (coefficients 0..N-1 from the synthetic quotient, coefficient N from
    // the remainder indicator).
    const PowerSeries diff = ps_sub(*ledger.morse, ledger.total);
    const DivOnePlusT div = div_one_plus_t(diff);
    PowerSeries r(N);
    for (int d = 0; d < N; ++d) r.set_coeff(d, div.quotient.coeff(d));
    r.set_coeff(N, div.remainder);
    ledger.remainder = r;

    const bool ineq = is_nonneg(r) && is_nonneg(ps_sub(ledger.m_tilde, r));
    ledger.morse_inequality = ineq ? Verdict3::holds : Verdict3::fails;
    ledger.perfect = is_zero(r) ? Tri::yes : Tri::no;
    ledger.antiperfect = (r == ledger.m_tilde) ? Tri::yes : Tri::no;
  }
  return ledger;
}

namespace {

ABType family_type(Group group, long long r) {
  SymmetricForm form;
  form.positive = {Block{1, r}};
  form.n0 = rank_of(group) == 3 ? 1 : 0;
  return ABType::from_symmetric(form);
}

int effective_parity(const BundleSpec& bundle) {
  if (is_special(bundle.group)) return +1;
  if (bundle.parity != +1 && bundle.parity != -1) {
    fail(errc::invalid_argument, "bundle parity must be +1 or -1");
  }
  return bundle.parity;
}

} // namespace

FlatSeriesResult a5_flat_series(const BundleSpec& bundle, const SurfaceSpec& surface, int N,
                                const SeriesTable& table) {
  if (surface.is_orientable()) {
    fail(errc::invalid_argument, "the flat-series assembly runs over nonorientable surfaces");
  }
  const int g = surface.double_cover_genus();
  const Group group = bundle.group;
  const int parity = effective_parity(bundle);
  const RationalFunction total = bg_series(group, g, table);
  if (rank_of(group) == 1) {
    return FlatSeriesResult{rf_expand(total, N), total};  // no unstable strata
  }

  // Codimension is affine in r: lambda(r) = c*r + lambda(1) - c, so the
  // contributing exponents lambda(r) - 1 form the progression c*r + b.
  const long long l1 = codim_nonorientable(family_type(group, 1), g).lambda;
  const long long l2 = codim_nonorientable(family_type(group, 2), g).lambda;
  const long long c = l2 - l1;
  const long long b = l1 - c - 1;

  // Which r the bundle parity keeps: both for a family with a slope-zero
  // block, else the residue class matching at r = 1.
  std::optional<std::pair<int, int>> residue;
  const auto p1 = parity_of_symmetric_type(family_type(group, 1), surface);
  if (p1) residue = std::make_pair(*p1 == parity ? 1 : 2, 2);

  const Progression prog =
      sum_progression(static_cast<int>(c), static_cast<int>(b), residue, N);
  const RationalFunction stratum = stratum_family_series(group, g, table);
  const RationalFunction closed = rf_add(total, rf_mul(prog.closed_form, stratum));
  return FlatSeriesResult{rf_expand(closed, N), closed};
}

VerifyReport verify_closed_forms(const BundleSpec& bundle, const SurfaceSpec& surface, int N,
                                 const SeriesTable& table) {
  if (surface.is_orientable()) {
    fail(errc::invalid_argument, "closed-form verification runs over nonorientable surfaces");
  }
  const int g = surface.double_cover_genus();
  const Group group = bundle.group;
  const int parity = effective_parity(bundle);

  VerifyReport report;
  report.N = N;
  {
    std::string s = std::string(group_name(group)) + " " + surface.name();
    if (!is_special(group)) s += std::string(" parity=") + (parity > 0 ? "+" : "-");
    report.scenario = s + " N=" + std::to_string(N);
  }

  std::vector<StratumRecord> records;
  for (const ABType& mu : symmetric_strata(bundle, surface, static_cast<long long>(N) + 2)) {
    if (mu.is_semistable()) continue;
    const long long lambda = codim_nonorientable(mu, g).lambda;
    records.push_back(StratumRecord{mu, lambda, stratum_series(group, mu, g, table), std::nullopt});
  }
  const RationalFunction total = bg_series(group, g, table);
  const RationalFunction open = flat_closed_form(group, parity, g, table);
  const MorseLedger ledger = assemble(total, SeriesInput(open), std::move(records), N);

  const FlatSeriesResult a5 = a5_flat_series(bundle, surface, N, table);
  report.closed_form_equal = rf_equal(open, a5.closed_form);
  report.first_discrepancy = first_difference(rf_expand(open, N), a5.series);
  report.morse_inequality = ledger.morse_inequality;
  report.perfect_through_N = ledger.perfect == Tri::yes;
  report.antiperfect_through_N = ledger.antiperfect == Tri::yes;
  report.r_coeffs.reserve(N + 1);
  for (int d = 0; d <= N; ++d) report.r_coeffs.push_back(ledger.remainder->coeff(d));
  return report;
}

PowerSeries p5_recursion(long long n, long long k, int g,
                         const std::map<std::pair<long long, long long>, SeriesInput>& totals,
                         long long codim_bound, int N) {
  if (n < 1) fail(errc::invalid_argument, "rank must be >= 1");
  if (g < 0) fail(errc::invalid_argument, "genus must be >= 0");
  if (N < 0) fail(errc::invalid_argument, "truncation order must be >= 0");
  if (codim_bound < N) {
    fail(errc::insufficient_bound, "real-codimension bound " + std::to_string(codim_bound) +
                                       " cannot certify degree " + std::to_string(N));
  }
  const SurfaceSpec surface = SurfaceSpec::orientable(g);

  std::map<std::pair<long long, long long>, PowerSeries> memo;
  std::function<PowerSeries(long long, long long)> solve = [&](long long nn,
                                                                long long kk) -> PowerSeries {
    const long long norm = ((kk % nn) + nn) % nn;  // P_ss(n,k) = P_ss(n,k+n)
    const auto key = std::make_pair(nn, norm);
    if (const auto hit = memo.find(key); hit != memo.end()) return hit->second;

    auto it = totals.find({nn, kk});
    if (it == totals.end()) it = totals.find({nn, norm});
    if (it == totals.end()) {
      fail(errc::missing_total_series, "no ambient series supplied for rank " +
                                           std::to_string(nn) + ", degree " + std::to_string(kk));
    }
    PowerSeries result = expand_input(it->second, N);
    for (const ABType& mu : enumerate_types(nn, norm, codim_bound, surface)) {
      if (mu.is_semistable()) continue;
      const long long d2 = codim_orientable(mu, g);
      if (d2 > N) continue;
      PowerSeries term = PowerSeries::constant(1, N);
      for (const Block& blk : mu.blocks()) term = ps_mul(term, solve(blk.n, blk.k));
      result = ps_sub(result, ps_shift(term, static_cast<int>(d2)));
    }
    memo.emplace(key, result);
    return result;
  };

  return solve(n, k);
}

RationalFunction orientable_total_series(int n, int g) {
  if (n < 1) fail(errc::invalid_argument, "rank must be >= 1");
  if (g < 0) fail(errc::invalid_argument, "genus must be >= 0");
  Polynomial num = Polynomial::constant(1);
  for (int k = 1; k <= n; ++k) {
    const Polynomial factor = Polynomial::constant(1) + Polynomial::monomial(2 * k - 1);
    num = num * pow(factor, 2 * g);
  }
  std::vector<DenomFactor> den;
  den.push_back(DenomFactor{FactorForm::one_minus, 2 * n, 1});
  for (int k = 1; k < n; ++k) den.push_back(DenomFactor{FactorForm::one_minus, 2 * k, 2});
  return RationalFunction(+1, std::move(num), std::move(den));
}

bool z_bounds_check(const StratumRecord& record, Hypothesis hypothesis, int N) {
  if (!record.z_series) fail(errc::invalid_argument, "record carries no Z series");
  int m = std::min(N, record.z_series->order());
  if (std::holds_alternative<PowerSeries>(record.series)) {
    m = std::min(m, std::get<PowerSeries>(record.series).order());
  }
  const PowerSeries p = std::holds_alternative<PowerSeries>(record.series)
                            ? std::get<PowerSeries>(record.series).truncated(m)
                            : rf_expand(std::get<RationalFunction>(record.series), m);
  const PowerSeries z = record.z_series->truncated(m);
  bool ok = is_nonneg(z) && is_nonneg(ps_sub(p, z));
  if (hypothesis == Hypothesis::perfection) ok = ok && is_zero(z);
  if (hypothesis == Hypothesis::antiperfection) ok = ok && z == p;
  return ok;
}

} // namespace ymstrat
