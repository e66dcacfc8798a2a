/* ymstrat command-line front end.
 *
 * Five subcommands — enumerate, codim, series, flat, verify — over the
 * shared-library C interface.  Output formats: json (canonical, round-trip
 * stable), csv (one row per coefficient or per stratum), plain (human
 * readable).  Exit codes: 0 success / verified, 1 verification failed,
 * 2 usage or configuration error (single-line diagnostic on stderr).
 */

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ymstrat/ymstrat.h>

namespace {

struct Args {
  std::string group;
  std::vector<std::string> surface;
  std::string parity = "+";
  std::string format = "json";
  std::string tables;
  std::string type;
  std::string role = "bg";
  int truncate = 40;
  long long degree = 0;
  long long codim_bound = -1;  // -1: default to truncate + 2
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

int parse_parity(const std::string& s) {
  if (s == "+" || s == "plus" || s == "+1" || s == "1") return +1;
  if (s == "-" || s == "minus" || s == "-1") return -1;
  die("parity must be + or - (got '" + s + "')");
}

std::string join_surface(const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts[0];
  return parts[0] + ":" + parts[1];
}

using ctx_ptr = std::unique_ptr<yms_context, decltype(&yms_context_destroy)>;

ctx_ptr make_context(const Args& a) {
  yms_context* raw = nullptr;
  const yms_status st =
      yms_context_create(a.tables.empty() ? nullptr : a.tables.c_str(), &raw);
  if (st != YMS_OK) {
    die(std::string("could not load tables") +
        (a.tables.empty() ? "" : " from '" + a.tables + "'") + " (" + yms_status_name(st) + ")");
  }
  return ctx_ptr(raw, &yms_context_destroy);
}

/* Take ownership of a C-API string result. */
std::string take(yms_context* ctx, yms_status st, char* s) {
  if (st != YMS_OK) die(yms_last_error(ctx));
  std::string text(s ? s : "");
  yms_string_free(s);
  return text;
}

nlohmann::json parse_report(const std::string& text) {
  return nlohmann::json::parse(text);  // C API output; never fails
}

/* CSV fields containing commas (type tuples) get quoted. */
std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void print_coeff_rows(const nlohmann::json& coeffs) {
  std::cout << "degree,value\n";
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::cout << d << "," << coeffs[d].get<std::string>() << "\n";
  }
}

int run_enumerate(const Args& a) {
  auto ctx = make_context(a);
  char* out = nullptr;
  const long long bound = a.codim_bound >= 0 ? a.codim_bound : a.truncate + 2;
  const yms_status st =
      yms_enumerate_json(ctx.get(), a.group.c_str(), join_surface(a.surface).c_str(),
                         parse_parity(a.parity), a.degree, bound, &out);
  const std::string text = take(ctx.get(), st, out);
  if (a.format == "json") {
    std::cout << text;
    return 0;
  }
  const nlohmann::json j = parse_report(text);
  const bool orientable = !j["types"].empty() && j["types"][0].contains("codim");
  if (a.format == "csv") {
    std::cout << (orientable ? "type,codim\n" : "type,lambda,lambda_C,lambda_R\n");
    for (const auto& t : j["types"]) {
      std::cout << csv_quote(t["pretty"].get<std::string>());
      if (orientable) std::cout << "," << t["codim"].get<long long>();
      else
        std::cout << "," << t["lambda"].get<long long>() << "," << t["lambda_C"].get<long long>()
                  << "," << t["lambda_R"].get<long long>();
      std::cout << "\n";
    }
    return 0;
  }
  for (const auto& t : j["types"]) {
    std::cout << t["pretty"].get<std::string>();
    if (orientable) std::cout << "  codim=" << t["codim"].get<long long>();
    else
      std::cout << "  lambda=" << t["lambda"].get<long long>()
                << "  (lambda_C=" << t["lambda_C"].get<long long>()
                << ", lambda_R=" << t["lambda_R"].get<long long>() << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_codim(const Args& a) {
  auto ctx = make_context(a);
  char* out = nullptr;
  const yms_status st =
      yms_codim_json(ctx.get(), a.type.c_str(), join_surface(a.surface).c_str(), &out);
  const std::string text = take(ctx.get(), st, out);
  if (a.format == "json") {
    std::cout << text;
    return 0;
  }
  const nlohmann::json j = parse_report(text);
  if (j.contains("codim")) {
    if (a.format == "csv") std::cout << "codim\n" << j["codim"].get<long long>() << "\n";
    else std::cout << "codim=" << j["codim"].get<long long>() << "\n";
    return 0;
  }
  if (a.format == "csv") {
    std::cout << "lambda,lambda_C,lambda_R\n"
              << j["lambda"].get<long long>() << "," << j["lambda_C"].get<long long>() << ","
              << j["lambda_R"].get<long long>() << "\n";
  } else {
    std::cout << "lambda=" << j["lambda"].get<long long>()
              << "  lambda_C=" << j["lambda_C"].get<long long>()
              << "  lambda_R=" << j["lambda_R"].get<long long>() << "\n";
  }
  return 0;
}

int print_series_result(const Args& a, const std::string& text) {
  if (a.format == "json") {
    std::cout << text;
    return 0;
  }
  const nlohmann::json j = parse_report(text);
  if (a.format == "csv") {
    print_coeff_rows(j["series"]["coeffs"]);
    return 0;
  }
  std::cout << j["closed_form"].get<std::string>() << "\n";
  const auto& coeffs = j["series"]["coeffs"];
  std::cout << "coefficients:";
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::cout << (d ? "," : " ") << coeffs[d].get<std::string>();
  }
  std::cout << "\n";
  return 0;
}

int run_series(const Args& a) {
  auto ctx = make_context(a);
  char* out = nullptr;
  const yms_status st = yms_series_json(ctx.get(), a.group.c_str(), a.role.c_str(),
                                        join_surface(a.surface).c_str(), a.truncate, &out);
  return print_series_result(a, take(ctx.get(), st, out));
}

int run_flat(const Args& a) {
  auto ctx = make_context(a);
  char* out = nullptr;
  const yms_status st = yms_flat_json(ctx.get(), a.group.c_str(), parse_parity(a.parity),
                                      join_surface(a.surface).c_str(), a.truncate, &out);
  return print_series_result(a, take(ctx.get(), st, out));
}

int run_verify(const Args& a) {
  auto ctx = make_context(a);
  char* out = nullptr;
  int verified = 0;
  const yms_status st =
      yms_verify_json(ctx.get(), a.group.c_str(), parse_parity(a.parity),
                      join_surface(a.surface).c_str(), a.truncate, &verified, &out);
  const std::string text = take(ctx.get(), st, out);
  if (a.format == "json") {
    std::cout << text;
  } else if (a.format == "csv") {
    print_coeff_rows(parse_report(text)["R_coeffs"]);
  } else {
    const nlohmann::json j = parse_report(text);
    std::cout << "scenario: " << j["scenario"].get<std::string>() << "\n"
              << "morse_inequality: " << j["morse_inequality"].get<std::string>() << "\n"
              << "perfect_through_N: " << (j["perfect_through_N"].get<bool>() ? "yes" : "no")
              << "\n"
              << "antiperfect_through_N: "
              << (j["antiperfect_through_N"].get<bool>() ? "yes" : "no") << "\n"
              << "first_discrepancy: "
              << (j["first_discrepancy"].is_null()
                      ? std::string("none")
                      : std::to_string(j["first_discrepancy"].get<long long>()))
              << "\n"
              << "verified: " << (verified ? "yes" : "no") << "\n";
  }
  return verified ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Morse-stratification series for Yang-Mills theory on surfaces"};
  app.require_subcommand(1);
  Args a;

  const std::string surface_help =
      "surface: rp2 | klein | crosscaps M | genus G (one or two tokens)";
  const std::string format_help = "output format: json | csv | plain";

  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", a.surface, surface_help)->required()->expected(1, 2);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", a.format, format_help)
        ->check(CLI::IsMember({"json", "csv", "plain"}));
  };
  auto add_tables = [&](CLI::App* cmd) {
    cmd->add_option("--tables", a.tables, "path to an alternative closed-form table file");
  };
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", a.group, "group: U1 | U2 | SU2 | U3 | SU3")->required();
  };
  auto add_parity = [&](CLI::App* cmd) {
    cmd->add_option("--parity", a.parity,
                    "mod-2 first Chern class, + or - (U(n) over nonorientable surfaces)");
  };
  auto add_truncate = [&](CLI::App* cmd) {
    cmd->add_option("--truncate", a.truncate, "series truncation order N")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list stratum types with codimensions, ordered");
  add_group(enumerate);
  add_surface(enumerate);
  add_parity(enumerate);
  add_truncate(enumerate);
  enumerate->add_option("--degree", a.degree, "bundle degree (orientable surfaces)");
  enumerate->add_option("--codim-bound", a.codim_bound,
                        "real-codimension cutoff (default: truncate + 2)");
  add_format(enumerate);
  add_tables(enumerate);

  CLI::App* codim = app.add_subcommand("codim", "codimension of one stratum type");
  codim
      ->add_option("--type", a.type,
                   "stratum type: tuple like \"(1,0,-1)\" or JSON {\"blocks\":..., \"n0\":...}")
      ->required();
  add_surface(codim);
  add_format(codim);
  add_tables(codim);

  CLI::App* series = app.add_subcommand("series", "expand a tabulated closed form");
  add_group(series);
  add_surface(series);
  series->add_option("--role", a.role, "which closed form: bg | stratum")
      ->check(CLI::IsMember({"bg", "stratum"}));
  add_truncate(series);
  add_format(series);
  add_tables(series);

  CLI::App* flat = app.add_subcommand("flat", "assemble the flat-connection series");
  add_group(flat);
  add_surface(flat);
  add_parity(flat);
  add_truncate(flat);
  add_format(flat);
  add_tables(flat);

  CLI::App* verify = app.add_subcommand("verify", "verify closed forms and Morse identities");
  add_group(verify);
  add_surface(verify);
  add_parity(verify);
  add_truncate(verify);
  add_format(verify);
  add_tables(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text on stdout, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (enumerate->parsed()) return run_enumerate(a);
  if (codim->parsed()) return run_codim(a);
  if (series->parsed()) return run_series(a);
  if (flat->parsed()) return run_flat(a);
  return run_verify(a);
}
