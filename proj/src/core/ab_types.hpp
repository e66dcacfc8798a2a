#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/surface.hpp"

namespace ymstrat {

/* One block of a Harder-Narasimhan type: a rank-n, degree-k summand.
 * Its slope is k/n. */
struct Block {
  long long n = 0;
  long long k = 0;
  Rational slope() const { return Rational(k, n); }
  friend bool operator==(const Block& a, const Block& b) { return a.n == b.n && a.k == b.k; }
};

/* The symmetric presentation of a tau0-fixed type: the blocks of positive
 * slope, plus the rank n0 >= 0 of the slope-zero middle block.  The full
 * type is (positive blocks, middle, negated mirror). */
struct SymmetricForm {
  std::vector<Block> positive;
  long long n0 = 0;

  long long rank() const {
    long long r = n0;
    for (const auto& b : positive) r += 2 * b.n;
    return r;
  }
};

/* A stratum type: a list of blocks with strictly decreasing slopes.
 * Rank is the sum of block ranks, degree the sum of block degrees; the
 * semistable type is the single block (n, k). */
class ABType {
public:
  ABType() = default;

  static ABType semistable(long long n, long long k);
  static ABType from_blocks(std::vector<Block> blocks);
  // Weakly decreasing slope tuple (mu_1, ..., mu_n); each maximal run of an
  // equal value q with length r becomes the block (r, q*r), which must have
  // integral degree.
  static ABType from_tuple(const std::vector<Rational>& mu);
  static ABType from_symmetric(const SymmetricForm& form);

  const std::vector<Block>& blocks() const { return blocks_; }
  long long rank() const;
  long long degree() const;
  bool is_semistable() const { return blocks_.size() == 1; }

  // The involution (mu_1, ..., mu_n) -> (-mu_n, ..., -mu_1).
  ABType tau0() const;
  bool is_tau0_fixed() const { return *this == tau0(); }
  SymmetricForm symmetric_form() const;  // requires tau0-fixed

  // The expanded slope tuple: each block contributes n copies of its slope.
  std::vector<Rational> tuple() const;
  // "(2,1,-1,-2)" style; fractional slopes print as "p/q".
  std::string pretty() const;

  friend bool operator==(const ABType& a, const ABType& b) { return a.blocks_ == b.blocks_; }
  friend bool operator!=(const ABType& a, const ABType& b) { return !(a == b); }

private:
  explicit ABType(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}
  std::vector<Block> blocks_;
};

/* Partial-sum dominance on raw slope tuples: a >= b iff both have the same
 * length and total and every prefix sum of a is >= the matching prefix sum
 * of b.  Throws incomparable_input when length or total differ. */
bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b);

/* The stratification partial order: nu <= mu iff mu dominates nu.
 * Requires equal rank and degree (else incomparable_input); the semistable
 * type is the unique minimum. */
bool po_leq(const ABType& nu, const ABType& mu);

/* Which bundle parity keeps the stratum of a tau0-fixed type over a
 * nonorientable surface: nullopt when the type has a slope-zero block
 * (kept by both parities), otherwise +1 or -1 via the sign
 * (-1)^(n' * chi + k') where (n', k') are the rank and degree of the
 * positive half and chi the Euler characteristic of the surface. */
std::optional<int> parity_of_symmetric_type(const ABType& mu, const SurfaceSpec& surface);

/* All types of rank n and degree k whose real codimension on the surface is
 * <= codim_bound, plus the semistable type, sorted by codimension then by
 * tuple.  On a nonorientable surface only tau0-fixed types carry a
 * codimension, so the result is the symmetric types (k = 0) or just the
 * semistable type (k != 0).  Candidates with a negative Riemann-Roch summand
 * (empty strata, genus 0 only) are omitted. */
std::vector<ABType> enumerate_types(long long n, long long k, long long codim_bound,
                                    const SurfaceSpec& surface);

/* Linear extensions of po_leq.  refine_total_order sorts by codimension on
 * the given surface, ties broken lexicographically on the expanded tuple;
 * refine_lex_order sorts purely lexicographically.  Both put the semistable
 * type first. */
std::vector<ABType> refine_total_order(std::vector<ABType> types, const SurfaceSpec& surface);
std::vector<ABType> refine_lex_order(std::vector<ABType> types);

/* The strata of the space of connections for the given bundle over a
 * nonorientable surface, within the codimension bound: the semistable type
 * plus every tau0-fixed type kept by the bundle parity — types whose
 * positive half (n', k') satisfies (-1)^(n' chi + k') = parity, plus all
 * types with a slope-zero block.  SU(n) bundles select the +1 family. */
std::vector<ABType> symmetric_strata(const BundleSpec& bundle, const SurfaceSpec& surface,
                                     long long codim_bound);

} // namespace ymstrat
