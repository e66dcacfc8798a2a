#include "core/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace ymstrat {

namespace {

#include "builtin_tables_data.inc"

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void bad(const std::string& origin, const std::string& msg) {
  fail(errc::parse_error, origin + ": " + msg);
}

long long parse_ll(const std::string& s, const std::string& origin) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) bad(origin, "trailing junk in integer '" + s + "'");
    return v;
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    bad(origin, "malformed integer '" + s + "'");
  }
}

/* Split on sep at parenthesis depth 0. */
std::vector<std::string> split_depth0(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

} // namespace

/* Exponent: INT, g,derived forms "3g", "g+2", "2g-1", optionally in parens. */
SeriesTable::AffineExp SeriesTable::parse_affine(std::string s, const std::string& origin) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) bad(origin, "empty exponent");
  SeriesTable::AffineExp e;
  const auto gpos = s.find('g');
  if (gpos == std::string::npos) {
    e.b = parse_ll(s, origin);
    return e;
  }
  const std::string coef = s.substr(0, gpos);
  e.a = coef.empty() ? 1 : parse_ll(coef, origin);
  const std::string rest = s.substr(gpos + 1);
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-') bad(origin, "malformed exponent '" + s + "'");
    e.b = parse_ll(rest, origin);
  }
  return e;
}

/* Integer polynomial in t: terms INT, t, t^INT, INT*t^INT joined by +/-. */
static Polynomial parse_poly(const std::string& s, const std::string& origin) {
  Polynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i > 0) {
      bad(origin, "expected + or - in polynomial '" + s + "'");
    }
    Int coef = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (!digits.empty()) {
      coef = Int(digits);
      saw_digits = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ds;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds.push_back(s[i++]);
        if (ds.empty()) bad(origin, "missing exponent in polynomial '" + s + "'");
        deg = static_cast<int>(parse_ll(ds, origin));
      }
    } else if (!saw_digits) {
      bad(origin, "malformed polynomial term in '" + s + "'");
    }
    out = out + Polynomial::monomial(deg, sign * coef);
  }
  if (out.is_zero() && s.empty()) bad(origin, "empty polynomial");
  return out;
}

SeriesTable::Atom SeriesTable::parse_atom(const std::string& s, const std::string& origin) {
  SeriesTable::Atom atom;
  if (s.empty()) bad(origin, "empty atom");
  if (s[0] == '(') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) bad(origin, "unbalanced parentheses in '" + s + "'");
    atom.kind = SeriesTable::Atom::Kind::poly_power;
    atom.poly = parse_poly(s.substr(1, close - 1), origin);
    const std::string rest = s.substr(close + 1);
    if (rest.empty()) {
      atom.exp = {0, 1};
    } else if (rest[0] == '^') {
      atom.exp = parse_affine(rest.substr(1), origin);
    } else {
      bad(origin, "trailing junk after ')' in '" + s + "'");
    }
    return atom;
  }
  if (s[0] == 't') {
    atom.kind = SeriesTable::Atom::Kind::t_power;
    const std::string rest = s.substr(1);
    if (rest.empty()) {
      atom.exp = {0, 1};
    } else if (rest[0] == '^') {
      atom.exp = parse_affine(rest.substr(1), origin);
    } else {
      bad(origin, "malformed atom '" + s + "'");
    }
    return atom;
  }
  atom.kind = SeriesTable::Atom::Kind::integer;
  atom.value = parse_ll(s, origin);
  return atom;
}

static std::vector<DenomFactor> parse_denominator(const std::string& s, const std::string& origin) {
  std::vector<DenomFactor> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') bad(origin, "expected '(' in denominator '" + s + "'");
    ++i;
    if (i >= s.size() || s[i] != '1') bad(origin, "denominator factor must start with 1");
    ++i;
    if (i >= s.size() || (s[i] != '-' && s[i] != '+')) bad(origin, "expected sign in denominator factor");
    const FactorForm form = (s[i] == '-') ? FactorForm::one_minus : FactorForm::one_plus;
    ++i;
    if (i >= s.size() || s[i] != 't') bad(origin, "expected t in denominator factor");
    ++i;
    int k = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::string ds;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds.push_back(s[i++]);
      k = static_cast<int>(parse_ll(ds, origin));
    }
    if (i >= s.size() || s[i] != ')') bad(origin, "expected ')' in denominator '" + s + "'");
    ++i;
    int power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::string ds;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds.push_back(s[i++]);
      power = static_cast<int>(parse_ll(ds, origin));
    }
    out.push_back(DenomFactor{form, k, power});
  }
  return out;
}

SeriesTable::Entry SeriesTable::parse_entry(const std::string& body, const std::string& origin) {
  Entry entry;
  entry.origin = origin;
  const auto halves = split_depth0(body, '/');
  if (halves.size() > 2) bad(origin, "more than one '/' in entry");
  const std::string num = strip_spaces(halves[0]);
  if (num.empty()) bad(origin, "empty numerator");
  for (const std::string& term : split_depth0(num, '+')) {
    std::vector<Atom> atoms;
    for (const std::string& a : split_depth0(term, '*')) atoms.push_back(parse_atom(a, origin));
    entry.terms.push_back(std::move(atoms));
  }
  if (halves.size() == 2) entry.den = parse_denominator(strip_spaces(halves[1]), origin);
  return entry;
}

SeriesTable SeriesTable::parse(const std::string& text, const std::string& origin) {
  SeriesTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string group, role;
    if (!(ls >> group)) continue;  // blank
    if (!(ls >> role)) bad(where, "row needs <group> <role> <body>");
    std::string body;
    std::getline(ls, body);
    // trim
    const auto b = body.find_first_not_of(" \t");
    body = (b == std::string::npos) ? "" : body.substr(b);
    if (body.empty()) bad(where, "row needs a body");

    const auto key = std::make_pair(group, role);
    if (table.entries_.count(key)) bad(where, "duplicate entry for " + group + " " + role);
    if (strip_spaces(body) == "external") {
      Entry e;
      e.external = true;
      e.origin = where;
      table.entries_.emplace(key, std::move(e));
    } else {
      table.entries_.emplace(key, parse_entry(body, where));
    }
  }
  return table;
}

SeriesTable SeriesTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const SeriesTable& SeriesTable::builtin() {
  static const SeriesTable table = parse(kBuiltinTablesText, "<builtin>");
  return table;
}

bool SeriesTable::has(const std::string& group, const std::string& role) const {
  return entries_.count({group, role}) > 0;
}

bool SeriesTable::is_external(const std::string& group, const std::string& role) const {
  const auto it = entries_.find({group, role});
  return it != entries_.end() && it->second.external;
}

std::vector<std::pair<std::string, std::string>> SeriesTable::keys() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, entry] : entries_) out.push_back(key);
  return out;
}

RationalFunction SeriesTable::evaluate(const std::string& group, const std::string& role,
                                       int g_tilde) const {
  if (g_tilde < 0) fail(errc::invalid_argument, "double-cover genus must be >= 0");
  const auto it = entries_.find({group, role});
  if (it == entries_.end()) {
    fail(errc::unsupported_group, "no table entry for " + group + " " + role);
  }
  const Entry& entry = it->second;
  if (entry.external) {
    fail(errc::unsupported_group,
         "table entry " + group + " " + role + " is external (not reproduced here)");
  }
  auto exp_at = [&](const AffineExp& e) {
    const long long v = e.a * g_tilde + e.b;
    if (v < 0) {
      fail(errc::invalid_argument, entry.origin + ": exponent " + std::to_string(v) +
                                       " negative at g=" + std::to_string(g_tilde));
    }
    return static_cast<int>(v);
  };
  Polynomial num;
  for (const auto& term : entry.terms) {
    Polynomial p = Polynomial::constant(1);
    for (const Atom& atom : term) {
      switch (atom.kind) {
        case Atom::Kind::integer: p = p * Polynomial::constant(atom.value); break;
        case Atom::Kind::t_power: p = p * Polynomial::monomial(exp_at(atom.exp)); break;
        case Atom::Kind::poly_power: p = p * pow(atom.poly, exp_at(atom.exp)); break;
      }
    }
    num = num + p;
  }
  return RationalFunction(+1, std::move(num), entry.den);
}

RationalFunction bg_series(Group group, int g_tilde, const SeriesTable& table) {
  return table.evaluate(group_name(group), "bg", g_tilde);
}

RationalFunction stratum_family_series(Group group, int g_tilde, const SeriesTable& table) {
  if (!table.has(group_name(group), "stratum")) {
    fail(errc::unsupported_stratum,
         std::string("no stratum family tabulated for ") + group_name(group));
  }
  return table.evaluate(group_name(group), "stratum", g_tilde);
}

RationalFunction stratum_series(Group group, const ABType& mu, int g_tilde,
                                const SeriesTable& table) {
  const auto& blocks = mu.blocks();
  const long long n = rank_of(group);
  bool in_family = false;
  if (n == 2) {
    in_family = blocks.size() == 2 && blocks[0].n == 1 && blocks[1].n == 1 && blocks[0].k >= 1 &&
                blocks[1].k == -blocks[0].k;
  } else if (n == 3) {
    in_family = blocks.size() == 3 && blocks[0].n == 1 && blocks[1].n == 1 && blocks[2].n == 1 &&
                blocks[0].k >= 1 && blocks[1].k == 0 && blocks[2].k == -blocks[0].k;
  }
  if (!in_family) {
    fail(errc::unsupported_stratum, "no tabulated stratum series for " + mu.pretty() + " under " +
                                        group_name(group));
  }
  return stratum_family_series(group, g_tilde, table);
}

RationalFunction flat_closed_form(Group group, int parity, int g_tilde, const SeriesTable& table) {
  if (parity != +1 && parity != -1) fail(errc::invalid_argument, "parity must be +1 or -1");
  const int effective = is_special(group) ? +1 : parity;
  std::string role = "flat.all";
  if (rank_of(group) == 2) {
    const bool odd_family = effective == ((g_tilde % 2 == 0) ? +1 : -1);
    role = odd_family ? "flat.rodd" : "flat.reven";
  }
  return table.evaluate(group_name(group), role, g_tilde);
}

} // namespace ymstrat
