#pragma once

#include <string>

#include "core/errors.hpp"

namespace ymstrat {

/* A closed connected surface: orientable of genus g, or nonorientable with
 * m crosscaps.  For nonorientable surfaces the orientable double cover has
 * genus g~ = m - 1, and m = 2l + i with i in {1,2} distinguishes the
 * projective-plane family (i = 1) from the Klein-bottle family (i = 2). */
struct SurfaceSpec {
  enum class Kind { orientable, nonorientable };
  Kind kind;
  int genus = 0;      // orientable only, g >= 0
  int crosscaps = 0;  // nonorientable only, m >= 1

  static SurfaceSpec orientable(int g) {
    if (g < 0) fail(errc::invalid_argument, "genus must be >= 0");
    return SurfaceSpec{Kind::orientable, g, 0};
  }
  static SurfaceSpec nonorientable(int m) {
    if (m < 1) fail(errc::invalid_argument, "crosscap number must be >= 1");
    return SurfaceSpec{Kind::nonorientable, 0, m};
  }

  bool is_orientable() const { return kind == Kind::orientable; }
  int double_cover_genus() const {
    if (is_orientable()) fail(errc::invalid_argument, "double-cover genus is for nonorientable surfaces");
    return crosscaps - 1;
  }
  int euler_characteristic() const { return is_orientable() ? 2 - 2 * genus : 2 - crosscaps; }
  int klein_index() const {  // the i of m = 2l + i
    if (is_orientable()) fail(errc::invalid_argument, "klein index is for nonorientable surfaces");
    return crosscaps % 2 == 1 ? 1 : 2;
  }
  std::string name() const {
    if (is_orientable()) return "genus=" + std::to_string(genus);
    if (crosscaps == 1) return "rp2";
    if (crosscaps == 2) return "klein";
    return "crosscaps=" + std::to_string(crosscaps);
  }
};

/* Accepted spellings: "rp2", "klein", "crosscaps:M" and "genus:G" (also
 * with '=' or a space in place of ':').  rp2 = crosscaps:1,
 * klein = crosscaps:2. */
inline SurfaceSpec parse_surface(const std::string& text) {
  if (text == "rp2" || text == "RP2") return SurfaceSpec::nonorientable(1);
  if (text == "klein") return SurfaceSpec::nonorientable(2);
  const auto sep = text.find_first_of(":= ");
  if (sep != std::string::npos) {
    const std::string head = text.substr(0, sep);
    const std::string tail = text.substr(sep + 1);
    int value = -1;
    try {
      size_t used = 0;
      value = std::stoi(tail, &used);
      if (used != tail.size()) value = -1;
    } catch (...) {
      value = -1;
    }
    if (value >= 0) {
      if (head == "crosscaps") return SurfaceSpec::nonorientable(value);
      if (head == "genus") return SurfaceSpec::orientable(value);
    }
  }
  fail(errc::invalid_argument,
       "unrecognized surface '" + text + "' (use rp2, klein, crosscaps:M, or genus:G)");
}

enum class Group { U1, U2, SU2, U3, SU3 };

inline int rank_of(Group g) {
  switch (g) {
    case Group::U1: return 1;
    case Group::U2: case Group::SU2: return 2;
    case Group::U3: case Group::SU3: return 3;
  }
  fail(errc::invalid_argument, "unknown group");
}

inline bool is_special(Group g) { return g == Group::SU2 || g == Group::SU3; }

inline const char* group_name(Group g) {
  switch (g) {
    case Group::U1: return "U1";
    case Group::U2: return "U2";
    case Group::SU2: return "SU2";
    case Group::U3: return "U3";
    case Group::SU3: return "SU3";
  }
  fail(errc::invalid_argument, "unknown group");
}

inline Group parse_group(const std::string& s) {
  if (s == "U1") return Group::U1;
  if (s == "U2") return Group::U2;
  if (s == "SU2") return Group::SU2;
  if (s == "U3") return Group::U3;
  if (s == "SU3") return Group::SU3;
  fail(errc::unsupported_group, "unsupported group '" + s + "' (use U1, U2, SU2, U3, SU3)");
}

/* Bundle data: degree for orientable U(n), parity (+1/-1, the mod-2 first
 * Chern class) for nonorientable U(n); SU(n) bundles are topologically
 * trivial and carry neither.  allow_high_rank overrides the rejection of
 * Klein-bottle-family surfaces at rank >= 4, where orientability of the
 * stratum normal bundles is not guaranteed. */
struct BundleSpec {
  Group group;
  int parity = +1;
  long long degree = 0;
  bool allow_high_rank = false;
};

} // namespace ymstrat
