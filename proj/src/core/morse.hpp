#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/ab_types.hpp"
#include "core/power_series.hpp"
#include "core/rational_function.hpp"
#include "core/surface.hpp"
#include "core/tables.hpp"

namespace ymstrat {

/* A series supplied either pre-expanded or in closed form; closed forms are
 * expanded once, at ledger construction. */
using SeriesInput = std::variant<PowerSeries, RationalFunction>;

PowerSeries expand_input(const SeriesInput& in, int N);

/* One unstable stratum: its type, real codimension, equivariant series, and
 * (optionally, under a declared perfection/antiperfection hypothesis) the
 * image series Z_t. */
struct StratumRecord {
  ABType mu;
  long long lambda = 0;
  SeriesInput series;
  std::optional<PowerSeries> z_series;
};

enum class Verdict3 { holds, fails, not_evaluated };
enum class Tri { yes, no, undetermined };

const char* to_string(Verdict3 v);
const char* to_string(Tri v);

/* The assembled Morse data of one stratification, all series truncated at
 * order N:
 *   m_tilde = sum over strata of t^(lambda-1) * P_mu
 *   morse   = open_stratum + t * m_tilde            (when open is known)
 *   remainder = the unique R with (1+t) R = morse - total through N
 * Verdicts are statements about degrees <= N only. */
struct MorseLedger {
  int N = 0;
  PowerSeries total = PowerSeries(0);
  std::optional<PowerSeries> open_stratum;
  std::vector<StratumRecord> strata;
  PowerSeries m_tilde = PowerSeries(0);
  std::optional<PowerSeries> morse;
  std::optional<PowerSeries> remainder;
  Verdict3 morse_inequality = Verdict3::not_evaluated;
  Tri perfect = Tri::undetermined;      // "through N"
  Tri antiperfect = Tri::undetermined;  // "through N"
};

/* Build the ledger.  Requires N >= 1, every stratum to have lambda >= 1 and
 * every plain-series input to carry order >= N (ledger_inconsistent
 * otherwise).  With open_stratum present, the remainder R is recovered by
 * synthetic division of (morse - total) by (1+t) — the truncation determines
 * R through N exactly — and the verdicts become:
 *   morse_inequality holds  iff  0 <= R and R <= m_tilde coefficientwise
 *   perfect     = yes iff R = 0        through N
 *   antiperfect = yes iff R = m_tilde  through N. */
MorseLedger assemble(const SeriesInput& total, const std::optional<SeriesInput>& open_stratum,
                     std::vector<StratumRecord> strata, int N);

/* The flat-connection series assembled from first principles per stratum:
 * bg_series + sum over kept strata of t^(lambda-1) * stratum series.  The
 * r-independence of the stratum series turns the sum into a geometric
 * progression, giving an exact factored closed form. */
struct FlatSeriesResult {
  PowerSeries series;
  RationalFunction closed_form;
};
FlatSeriesResult a5_flat_series(const BundleSpec& bundle, const SurfaceSpec& surface, int N,
                                const SeriesTable& table = SeriesTable::builtin());

/* Compare the per-stratum assembly against the tabulated closed form, and
 * run the Morse-inequality/antiperfection checks with the tabulated form as
 * the open stratum.  All verdicts are exact and truncation-bounded. */
struct VerifyReport {
  std::string scenario;
  int N = 0;
  Verdict3 morse_inequality = Verdict3::not_evaluated;
  bool perfect_through_N = false;
  bool antiperfect_through_N = false;
  std::vector<Rational> r_coeffs;
  std::optional<int> first_discrepancy;  // first degree where the expansions differ
  bool closed_form_equal = false;        // exact rational-function identity

  bool ok() const {
    return closed_form_equal && !first_discrepancy && morse_inequality == Verdict3::holds &&
           antiperfect_through_N;
  }
};
VerifyReport verify_closed_forms(const BundleSpec& bundle, const SurfaceSpec& surface, int N,
                                 const SeriesTable& table = SeriesTable::builtin());

/* Semistable series over an orientable surface by the stratification
 * recursion P_ss(n,k) = P(n,k) - sum over unstable mu of
 * t^(2 d_mu) prod_j P_ss(n_j,k_j), memoized on (n, k mod n).  Ambient
 * series are caller-supplied, keyed by (rank, degree); a key is also tried
 * with the degree reduced mod rank.  codim_bound is a real-codimension
 * cutoff and must be >= N to certify all degrees <= N. */
PowerSeries p5_recursion(long long n, long long k, int g,
                         const std::map<std::pair<long long, long long>, SeriesInput>& totals,
                         long long codim_bound, int N);

/* The standard ambient input for the recursion: the rational-cohomology
 * series of the classifying space of the gauge group of a rank-n bundle on
 * an orientable genus-g surface,
 * prod_{k=1..n} (1+t^(2k-1))^(2g) / ((1-t^(2n)) prod_{k=1..n-1} (1-t^(2k))^2). */
RationalFunction orientable_total_series(int n, int g);

/* Constraint check for a supplied Z_t: 0 <= Z <= P coefficientwise, plus
 * Z = 0 under a declared perfection hypothesis and Z = P under a declared
 * antiperfection hypothesis; compared through the smallest order involved. */
enum class Hypothesis { none, perfection, antiperfection };
bool z_bounds_check(const StratumRecord& record, Hypothesis hypothesis, int N);

} // namespace ymstrat
