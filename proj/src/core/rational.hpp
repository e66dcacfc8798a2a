#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

#include "core/errors.hpp"

namespace ymstrat {

/* Exact arbitrary-precision arithmetic. cpp_rational keeps lowest terms and a
 * positive denominator internally; coefficient arithmetic never rounds. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* "p" when the denominator is 1, otherwise "p/q"; exact round-trip. */
inline std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string to_string(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    if (s.empty() || s == "-" || s.back() == '/')
      fail(errc::parse_error, "malformed rational: '" + s + "'");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    if (slash == 0) fail(errc::parse_error, "malformed rational: '" + s + "'");
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q <= 0) fail(errc::parse_error, "rational with nonpositive denominator: " + s);
    return Rational(p, q);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "malformed rational: " + s);
  }
}

} // namespace ymstrat
