#pragma once

#include <optional>

#include "core/ab_types.hpp"

namespace ymstrat {

/* Codimension data of a stratum: lambda = 2*lambda_C + lambda_R, where
 * lambda_C is the complex rank of the complex part of the normal bundle and
 * lambda_R the real rank of the real part. */
struct CodimBreakdown {
  long long lambda_C = 0;
  long long lambda_R = 0;
  long long lambda = 0;

  friend bool operator==(const CodimBreakdown& a, const CodimBreakdown& b) {
    return a.lambda_C == b.lambda_C && a.lambda_R == b.lambda_R && a.lambda == b.lambda;
  }
};

/* Codimension of the stratum of a tau0-symmetric type over a nonorientable
 * surface whose orientable double cover has genus g_tilde.  Each summand is
 * a Riemann-Roch count dim H^1 = -deg + rank*(g_tilde - 1) of a Hom bundle
 * with vanishing H^0; any negative summand throws negative_dimension. */
CodimBreakdown codim_nonorientable(const ABType& mu, int g_tilde);

/* Real codimension 2*d of a stratum over an orientable genus-g surface,
 * d = sum over block pairs i<j of (n_j k_i - n_i k_j + n_i n_j (g-1)).
 * Any negative summand throws negative_dimension. */
long long codim_orientable(const ABType& mu, int g);

namespace detail {
/* Non-throwing variants: nullopt when a Riemann-Roch summand is negative.
 * A negative summand can only arise at genus 0 with a fractionally sloped
 * block, whose semistable factor is empty there — enumeration drops such
 * candidates instead of failing. */
std::optional<CodimBreakdown> codim_nonorientable_raw(const ABType& mu, int g_tilde);
std::optional<long long> codim_orientable_raw(const ABType& mu, int g);
} // namespace detail

} // namespace ymstrat
