#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/ab_types.hpp"
#include "core/rational_function.hpp"
#include "core/surface.hpp"

namespace ymstrat {

/* Closed-form series table, loaded from the data file format documented in
 * data/poincare_tables.txt: one row per (group, role), the value a rational
 * function whose numerator is a sum of atom products with exponents affine
 * in the double-cover genus g.  A row may instead be marked "external":
 * the value exists in the literature but is not reproduced here, and
 * evaluating it reports unsupported. */
class SeriesTable {
public:
  /* The compiled-in copy of data/poincare_tables.txt. */
  static const SeriesTable& builtin();
  static SeriesTable load_file(const std::string& path);
  static SeriesTable parse(const std::string& text, const std::string& origin);

  bool has(const std::string& group, const std::string& role) const;
  bool is_external(const std::string& group, const std::string& role) const;
  /* The row's closed form at double-cover genus g_tilde >= 0. */
  RationalFunction evaluate(const std::string& group, const std::string& role, int g_tilde) const;
  std::vector<std::pair<std::string, std::string>> keys() const;

private:
  // exponent a*g + b
  struct AffineExp {
    long long a = 0;
    long long b = 0;
  };
  struct Atom {
    enum class Kind { integer, t_power, poly_power };
    Kind kind = Kind::integer;
    Int value = 0;       // integer
    Polynomial poly;     // poly_power
    AffineExp exp;       // t_power, poly_power
  };
  struct Entry {
    bool external = false;
    std::vector<std::vector<Atom>> terms;  // sum of products
    std::vector<DenomFactor> den;
    std::string origin;  // "file:line" for diagnostics
  };

  static Entry parse_entry(const std::string& body, const std::string& origin);
  static AffineExp parse_affine(std::string s, const std::string& origin);
  static Atom parse_atom(const std::string& s, const std::string& origin);
  std::map<std::pair<std::string, std::string>, Entry> entries_;
};

/* Equivariant series of the full connection space over a nonorientable
 * surface with double-cover genus g_tilde (the classifying space of the
 * gauge group). */
RationalFunction bg_series(Group group, int g_tilde, const SeriesTable& table = SeriesTable::builtin());

/* Equivariant series of one unstable stratum of the family the group
 * supports; independent of r.  Throws unsupported_stratum when the group
 * has no tabulated family (U1). */
RationalFunction stratum_family_series(Group group, int g_tilde,
                                       const SeriesTable& table = SeriesTable::builtin());

/* As above, after checking that mu actually belongs to the group's family:
 * (r,-r) for rank 2, (r,0,-r) for rank 3, r >= 1. */
RationalFunction stratum_series(Group group, const ABType& mu, int g_tilde,
                                const SeriesTable& table = SeriesTable::builtin());

/* Closed form of the flat-connection (= semistable) series for the bundle
 * component selected by the parity: rank 2 splits into the odd-r and even-r
 * families, rank 3 and U1 have a single formula. */
RationalFunction flat_closed_form(Group group, int parity, int g_tilde,
                                  const SeriesTable& table = SeriesTable::builtin());

} // namespace ymstrat
