#include "core/ab_types.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"
#include "core/index_theory.hpp"

namespace ymstrat {

namespace {

void validate_blocks(const std::vector<Block>& blocks) {
  if (blocks.empty()) fail(errc::invalid_argument, "a type needs at least one block");
  for (const auto& b : blocks) {
    if (b.n < 1) fail(errc::invalid_argument, "block rank must be >= 1");
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (!(blocks[i].slope() > blocks[i + 1].slope())) {
      fail(errc::invalid_argument, "block slopes must be strictly decreasing");
    }
  }
}

} // namespace

ABType ABType::semistable(long long n, long long k) {
  return from_blocks({Block{n, k}});
}

ABType ABType::from_blocks(std::vector<Block> blocks) {
  validate_blocks(blocks);
  return ABType(std::move(blocks));
}

ABType ABType::from_tuple(const std::vector<Rational>& mu) {
  if (mu.empty()) fail(errc::invalid_argument, "a type needs at least one entry");
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    if (mu[i] < mu[i + 1]) fail(errc::invalid_argument, "tuple entries must be weakly decreasing");
  }
  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    const long long run = static_cast<long long>(j - i);
    const Rational deg = mu[i] * run;
    if (boost::multiprecision::denominator(deg) != 1) {
      fail(errc::invalid_argument, "tuple does not describe an integral type: slope " +
                                       to_string(mu[i]) + " with multiplicity " + std::to_string(run));
    }
    blocks.push_back(Block{run, static_cast<long long>(boost::multiprecision::numerator(deg))});
    i = j;
  }
  return from_blocks(std::move(blocks));
}

ABType ABType::from_symmetric(const SymmetricForm& form) {
  std::vector<Block> blocks;
  for (const auto& b : form.positive) {
    if (b.k < 1) fail(errc::invalid_argument, "positive blocks must have positive slope");
    blocks.push_back(b);
  }
  if (form.n0 < 0) fail(errc::invalid_argument, "middle rank must be >= 0");
  if (form.n0 > 0) blocks.push_back(Block{form.n0, 0});
  for (auto it = form.positive.rbegin(); it != form.positive.rend(); ++it) {
    blocks.push_back(Block{it->n, -it->k});
  }
  return from_blocks(std::move(blocks));
}

long long ABType::rank() const {
  long long r = 0;
  for (const auto& b : blocks_) r += b.n;
  return r;
}

long long ABType::degree() const {
  long long d = 0;
  for (const auto& b : blocks_) d += b.k;
  return d;
}

ABType ABType::tau0() const {
  std::vector<Block> rev;
  rev.reserve(blocks_.size());
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) rev.push_back(Block{it->n, -it->k});
  return ABType(std::move(rev));
}

SymmetricForm ABType::symmetric_form() const {
  if (!is_tau0_fixed()) fail(errc::invalid_argument, "type " + pretty() + " is not tau0-fixed");
  SymmetricForm form;
  for (const auto& b : blocks_) {
    if (b.k > 0) {
      form.positive.push_back(b);
    } else if (b.k == 0) {
      form.n0 = b.n;
    }
  }
  return form;
}

std::vector<Rational> ABType::tuple() const {
  std::vector<Rational> mu;
  for (const auto& b : blocks_) {
    const Rational s = b.slope();
    for (long long i = 0; i < b.n; ++i) mu.push_back(s);
  }
  return mu;
}

std::string ABType::pretty() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const Rational& q : tuple()) {
    if (!first) out << ',';
    out << to_string(q);
    first = false;
  }
  out << ')';
  return out.str();
}

bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) fail(errc::incomparable_input, "tuples have different lengths");
  const Rational total_a = std::accumulate(a.begin(), a.end(), Rational(0));
  const Rational total_b = std::accumulate(b.begin(), b.end(), Rational(0));
  if (total_a != total_b) fail(errc::incomparable_input, "tuples have different totals");
  Rational pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

bool po_leq(const ABType& nu, const ABType& mu) {
  if (nu.rank() != mu.rank() || nu.degree() != mu.degree()) {
    fail(errc::incomparable_input, "types " + nu.pretty() + " and " + mu.pretty() +
                                       " have different rank or degree");
  }
  return dominates(mu.tuple(), nu.tuple());
}

std::optional<int> parity_of_symmetric_type(const ABType& mu, const SurfaceSpec& surface) {
  if (surface.is_orientable()) {
    fail(errc::invalid_argument, "parity selection applies to nonorientable surfaces");
  }
  const SymmetricForm form = mu.symmetric_form();
  if (form.n0 > 0) return std::nullopt;  // slope-zero block: kept by both parities
  long long np = 0, kp = 0;
  for (const auto& b : form.positive) {
    np += b.n;
    kp += b.k;
  }
  const long long chi = surface.euler_characteristic();
  const long long e = np * chi + kp;
  return (e % 2 == 0) ? +1 : -1;
}

namespace {

long long floor_ll(const Rational& q) {
  Int n = boost::multiprecision::numerator(q);
  const Int d = boost::multiprecision::denominator(q);  // always > 0
  Int f = n / d;
  if (n % d != 0 && n < 0) --f;
  return static_cast<long long>(f);
}

long long ceil_ll(const Rational& q) { return -floor_ll(-q); }

/* All types of rank n and degree k whose slopes stay within [lo, hi]. */
void dfs_orientable(long long n, long long k, const Rational& lo, const Rational& hi,
                    std::vector<Block>& current, long long used_rank, long long used_deg,
                    std::vector<ABType>& out) {
  const long long remaining = n - used_rank;
  for (long long nj = 1; nj <= remaining; ++nj) {
    if (nj == remaining) {
      const long long kj = k - used_deg;  // degree of the final block is forced
      const Rational slope(kj, nj);
      if (slope < lo || slope > hi) continue;
      if (!current.empty() && !(slope < current.back().slope())) continue;
      current.push_back(Block{nj, kj});
      out.push_back(ABType::from_blocks(current));
      current.pop_back();
      continue;
    }
    long long kj_hi = floor_ll(hi * nj);
    if (!current.empty()) kj_hi = std::min(kj_hi, ceil_ll(current.back().slope() * nj) - 1);
    const long long kj_lo = ceil_ll(lo * nj);
    for (long long kj = kj_hi; kj >= kj_lo; --kj) {
      current.push_back(Block{nj, kj});
      dfs_orientable(n, k, lo, hi, current, used_rank + nj, used_deg + kj, out);
      current.pop_back();
    }
  }
}

std::vector<ABType> enumerate_orientable(long long n, long long k, long long codim_bound, int g) {
  // Any type with real codimension <= bound has slope spread at most
  // bound/2 + n^2 (each of the < n^2/2 pair summands is >= -n_i*n_j at
  // g = 0 and the extreme pair contributes at least the spread), so the
  // window below loses nothing.
  const Rational mean(k, n);
  const Rational span = Rational(codim_bound, 2) + n * n + 1;
  std::vector<Block> current;
  std::vector<ABType> all;
  dfs_orientable(n, k, mean - span, mean + span, current, 0, 0, all);

  std::vector<ABType> kept;
  for (const auto& mu : all) {
    const auto d2 = detail::codim_orientable_raw(mu, g);
    if (d2 && *d2 <= codim_bound) kept.push_back(mu);
  }
  return kept;
}

std::vector<ABType> enumerate_symmetric(long long n, long long codim_bound, int g_tilde) {
  // Positive blocks with strictly decreasing positive slopes and total rank
  // <= n/2; the middle rank n0 absorbs the rest.  Degrees are capped by the
  // codimension bound: the real summand n_j(2k_j + n_j(g~-1)) already
  // exceeds the bound once k_j does.
  const long long k_cap = codim_bound + n * n + 1;
  std::vector<ABType> all;
  std::vector<Block> positive;

  auto emit = [&]() {
    SymmetricForm form;
    form.positive = positive;
    form.n0 = n;
    for (const auto& b : positive) form.n0 -= 2 * b.n;
    all.push_back(ABType::from_symmetric(form));
  };

  std::function<void(long long)> dfs = [&](long long used) {
    emit();
    const long long cap = (n - 2 * used) / 2;
    for (long long nj = 1; nj <= cap; ++nj) {
      long long kj_hi = k_cap;
      if (!positive.empty()) kj_hi = std::min(kj_hi, ceil_ll(positive.back().slope() * nj) - 1);
      for (long long kj = 1; kj <= kj_hi; ++kj) {
        positive.push_back(Block{nj, kj});
        dfs(used + nj);
        positive.pop_back();
      }
    }
  };
  dfs(0);

  std::vector<ABType> kept;
  for (const auto& mu : all) {
    const auto cd = detail::codim_nonorientable_raw(mu, g_tilde);
    if (cd && cd->lambda <= codim_bound) kept.push_back(mu);
  }
  return kept;
}

long long order_codim(const ABType& mu, const SurfaceSpec& surface) {
  if (surface.is_orientable()) return codim_orientable(mu, surface.genus);
  if (mu.is_tau0_fixed()) return codim_nonorientable(mu, surface.double_cover_genus()).lambda;
  if (mu.is_semistable()) return 0;
  fail(errc::invalid_argument,
       "type " + mu.pretty() + " has no codimension on a nonorientable surface");
}

std::vector<ABType> sort_keyed(std::vector<ABType> types,
                               const std::function<long long(const ABType&)>& codim_key) {
  struct Keyed {
    long long codim;
    std::vector<Rational> tup;
    ABType type;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(types.size());
  for (auto& t : types) {
    const long long c = codim_key(t);
    keyed.push_back(Keyed{c, t.tuple(), std::move(t)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return std::lexicographical_compare(a.tup.begin(), a.tup.end(), b.tup.begin(), b.tup.end());
  });
  std::vector<ABType> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.type));
  return out;
}

} // namespace

std::vector<ABType> enumerate_types(long long n, long long k, long long codim_bound,
                                    const SurfaceSpec& surface) {
  if (n < 1) fail(errc::invalid_argument, "rank must be >= 1");
  if (codim_bound < 0) fail(errc::invalid_argument, "codimension bound must be >= 0");
  std::vector<ABType> types;
  if (surface.is_orientable()) {
    types = enumerate_orientable(n, k, codim_bound, surface.genus);
  } else if (k == 0) {
    types = enumerate_symmetric(n, codim_bound, surface.double_cover_genus());
  } else {
    // No tau0-fixed type has nonzero degree; only the semistable stratum remains.
    types = {ABType::semistable(n, k)};
  }
  return refine_total_order(std::move(types), surface);
}

std::vector<ABType> refine_total_order(std::vector<ABType> types, const SurfaceSpec& surface) {
  return sort_keyed(std::move(types), [&](const ABType& mu) { return order_codim(mu, surface); });
}

std::vector<ABType> refine_lex_order(std::vector<ABType> types) {
  return sort_keyed(std::move(types), [](const ABType&) { return 0; });
}

std::vector<ABType> symmetric_strata(const BundleSpec& bundle, const SurfaceSpec& surface,
                                     long long codim_bound) {
  if (surface.is_orientable()) {
    fail(errc::invalid_argument, "symmetric strata are defined over nonorientable surfaces");
  }
  const long long n = rank_of(bundle.group);
  if (n >= 4 && surface.klein_index() == 2 && !bundle.allow_high_rank) {
    fail(errc::unsupported_rank,
         "rank >= 4 over a Klein-bottle-family surface needs the high-rank override");
  }
  int parity = +1;  // SU(n) selects the +1 family
  if (!is_special(bundle.group)) {
    if (bundle.parity != +1 && bundle.parity != -1) {
      fail(errc::invalid_argument, "bundle parity must be +1 or -1");
    }
    parity = bundle.parity;
  }

  std::vector<ABType> kept;
  for (auto& mu : enumerate_symmetric(n, codim_bound, surface.double_cover_genus())) {
    const auto p = parity_of_symmetric_type(mu, surface);  // nullopt for the semistable type
    if (!p || *p == parity) kept.push_back(std::move(mu));
  }
  return refine_total_order(std::move(kept), surface);
}

} // namespace ymstrat
