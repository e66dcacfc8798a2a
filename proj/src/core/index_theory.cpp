#include "core/index_theory.hpp"

#include <string>

#include "core/errors.hpp"

namespace ymstrat {

namespace detail {

std::optional<CodimBreakdown> codim_nonorientable_raw(const ABType& mu, int g_tilde) {
  const SymmetricForm form = mu.symmetric_form();
  const long long gm1 = g_tilde - 1;
  const auto& pos = form.positive;

  CodimBreakdown out;
  // Real part: one summand per positive block.
  for (const auto& b : pos) {
    const long long s = 2 * b.n * b.k + b.n * b.n * gm1;
    if (s < 0) return std::nullopt;
    out.lambda_R += s;
  }
  // Complex part: Hom(D_i, D_j) and Hom(D_i, tau_C(D_j)) for i < j over the
  // positive blocks, plus Hom(D_j, D_0) against the middle block.
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const auto& bi = pos[i];
      const auto& bj = pos[j];
      const long long s1 = bj.n * bi.k - bi.n * bj.k + bi.n * bj.n * gm1;
      const long long s2 = bj.n * bi.k + bi.n * bj.k + bi.n * bj.n * gm1;
      if (s1 < 0 || s2 < 0) return std::nullopt;
      out.lambda_C += s1 + s2;
    }
  }
  for (const auto& b : pos) {
    const long long s = form.n0 * b.k + form.n0 * b.n * gm1;
    if (s < 0) return std::nullopt;
    out.lambda_C += s;
  }
  out.lambda = 2 * out.lambda_C + out.lambda_R;
  return out;
}

std::optional<long long> codim_orientable_raw(const ABType& mu, int g) {
  const auto& blocks = mu.blocks();
  const long long gm1 = g - 1;
  long long d = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& bi = blocks[i];
      const auto& bj = blocks[j];
      const long long s = bj.n * bi.k - bi.n * bj.k + bi.n * bj.n * gm1;
      if (s < 0) return std::nullopt;
      d += s;
    }
  }
  return 2 * d;
}

} // namespace detail

CodimBreakdown codim_nonorientable(const ABType& mu, int g_tilde) {
  if (g_tilde < 0) fail(errc::invalid_argument, "double-cover genus must be >= 0");
  auto out = detail::codim_nonorientable_raw(mu, g_tilde);
  if (!out) {
    fail(errc::negative_dimension,
         "negative Riemann-Roch summand for type " + mu.pretty() + " at g~=" + std::to_string(g_tilde));
  }
  return *out;
}

long long codim_orientable(const ABType& mu, int g) {
  if (g < 0) fail(errc::invalid_argument, "genus must be >= 0");
  auto d2 = detail::codim_orientable_raw(mu, g);
  if (!d2) {
    fail(errc::negative_dimension,
         "negative Riemann-Roch summand for type " + mu.pretty() + " at g=" + std::to_string(g));
  }
  return *d2;
}

} // namespace ymstrat
