#pragma once

#include <stdexcept>
#include <string>

namespace ymstrat {

/* Failure classes; mirrored one-to-one by the C API status codes. */
enum class errc {
  invalid_argument = 1,
  parse_error = 2,
  division_inexact = 3,
  invalid_progression = 4,
  incomparable_input = 5,
  unsupported_rank = 6,
  negative_dimension = 7,
  unsupported_group = 8,
  unsupported_stratum = 9,
  ledger_inconsistent = 10,
  missing_total_series = 11,
  insufficient_bound = 12,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace ymstrat
