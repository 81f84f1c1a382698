#ifndef POLYBOUND_TOOLS_CLI_APP_HPP
#define POLYBOUND_TOOLS_CLI_APP_HPP

// Front end of the polybound command: subcommands, report rendering and the
// corpus runner. Kept in a header so the tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "polybound/polybound.hpp"

namespace polybound::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 1, kBudget = 2, kCorpusMismatch = 3 };

inline json degree_json(Degree d) { return d.is_finite() ? json(d.value()) : json(nullptr); }

inline json verdict_json(const CriterionVerdict& v) {
  json j;
  j["id"] = std::string(criterion_name(v.id));
  j["status"] = v.applicable ? "applicable" : "inapplicable";
  if (v.applicable) j["bound"] = v.bound;
  else j["failed_hypothesis"] = v.failed_hypothesis;
  json w;
  w["n"] = v.witness.n;
  if (v.witness.j) w["j"] = *v.witness.j;
  w["degrees"] = json::array();
  for (Degree d : v.witness.degrees) w["degrees"].push_back(degree_json(d));
  if (v.witness.nu0) w["nu0"] = *v.witness.nu0;
  if (v.witness.nun) w["nun"] = *v.witness.nun;
  if (v.witness.deg_q) w["deg_q"] = *v.witness.deg_q;
  w["checks"] = v.witness.checks;
  j["witness"] = std::move(w);
  return j;
}

inline json report_json(const AnalysisReport& r) {
  json j;
  j["input"] = r.input;
  j["field"] = r.field;
  j["stripped_y_power"] = r.stripped_power;
  j["content"] = r.content ? json(*r.content) : json(nullptr);
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_json(v));
  j["best_bound"] = r.best_bound ? json(*r.best_bound) : json(nullptr);
  if (r.certificate) j["certificate"] = std::string(criterion_name(*r.certificate));
  if (!r.assumptions.empty()) j["assumptions"] = r.assumptions;
  return j;
}

inline std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  const std::string main = r.variables.empty() ? "y" : r.variables.back();
  os << "input        " << r.input << '\n';
  os << "field        " << r.field << '\n';
  std::string power_label = main + "-power";
  power_label.resize(std::max<std::size_t>(power_label.size() + 1, 13), ' ');
  os << power_label << r.stripped_power << '\n';
  os << "content      " << (r.content ? *r.content : "not computed") << '\n';
  for (const auto& v : r.verdicts) {
    std::string name(criterion_name(v.id));
    name.resize(6, ' ');
    os << name;
    if (v.applicable) os << "bound " << v.bound << "    " << criterion_summary(v.id) << '\n';
    else os << "fails: " << v.failed_hypothesis << '\n';
  }
  for (const auto& a : r.assumptions) os << "assumption   " << a << '\n';
  os << "best bound   " << (r.best_bound ? std::to_string(*r.best_bound) : "none (no applicable criterion)") << '\n';
  os << "certificate  "
     << (r.certificate ? std::string(criterion_name(*r.certificate)) + " (irreducible)" : std::string("none")) << '\n';
  return os.str();
}

inline std::string rational_text(const Rational& r) { return r.to_string(); }

inline json polygon_json(const NewtonPolygon& np, const RootLocation& loc) {
  json j;
  auto pts = [](const std::vector<NewtonPoint>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(json::array({p.i, p.v}));
    return a;
  };
  j["points"] = pts(np.points);
  j["vertices"] = pts(np.vertices);
  j["edges"] = json::array();
  for (const auto& e : np.edges) j["edges"].push_back({{"width", e.width}, {"slope", rational_text(e.slope)}});
  j["root_location"] = {{"inside", loc.inside}, {"boundary", loc.boundary}, {"outside", loc.outside}};
  return j;
}

struct Options {
  std::string field = "Q";
  std::string vars;
  bool json_out = false;
  bool assume_primitive = false;
  std::string svg_path;
  std::optional<std::uint64_t> seed;
  std::string input;
};

/// Calls fn with a type tag for the element type of the field.
template <typename Fn>
decltype(auto) with_field(const FieldDescriptor& fd, Fn&& fn) {
  if (fd.is_rationals()) return fn(std::type_identity<Rational>{});
  return fn(std::type_identity<PrimeFieldElem>{});
}

inline std::vector<std::string> resolve_vars(const std::string& text, std::size_t default_arity) {
  return text.empty() ? default_variables(default_arity) : parse_variable_list(text);
}

template <FieldElement E>
AnalysisReport analyze_text(const std::string& text, const FieldDescriptor& fd, const std::vector<std::string>& vars,
                            bool assume_primitive) {
  const MultiPoly<E> f = parse_poly<E>(text, fd, vars);
  return analyze(f, vars, AnalyzeOptions{assume_primitive});
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const FieldDescriptor fd = parse_field(o.field);
  const auto vars = resolve_vars(o.vars, 2);
  const AnalysisReport r = with_field(fd, [&](auto tag) {
    using E = typename decltype(tag)::type;
    return analyze_text<E>(o.input, fd, vars, o.assume_primitive);
  });
  if (o.json_out) out << report_json(r).dump(2) << '\n';
  else out << report_text(r);
  return kOk;
}

inline int cmd_newton(const Options& o, std::ostream& out) {
  const FieldDescriptor fd = parse_field(o.field);
  const auto vars = resolve_vars(o.vars, 2);
  if (vars.size() != 2) throw Error(Errc::ArityMismatch, "newton needs exactly two variables");
  return with_field(fd, [&](auto tag) {
    using E = typename decltype(tag)::type;
    const BiPoly<E> f = parse_bipoly<E>(o.input, fd, vars);
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "newton polygon of 0");
    const auto [k, g] = strip_y_power(f);
    const NewtonPolygon np = build_polygon(g);
    const RootLocation loc = root_location(g);
    if (!o.svg_path.empty()) {
      std::ofstream svg(o.svg_path, std::ios::binary);
      if (!svg) throw Error(Errc::NotSupported, "cannot write " + o.svg_path);
      svg << render_svg(np);
    }
    if (o.json_out) {
      json j;
      j["input"] = format_poly(f, vars);
      j["field"] = fd.to_string();
      j["stripped_y_power"] = k;
      j.update(polygon_json(np, loc));
      out << j.dump(2) << '\n';
      return int{kOk};
    }
    out << "input      " << format_poly(f, vars) << '\n';
    if (k) out << vars[1] << "-power    " << k << " (stripped)\n";
    out << "vertices  ";
    for (const auto& v : np.vertices) out << " (" << v.i << ',' << v.v << ')';
    out << "\nedges     ";
    for (const auto& e : np.edges) out << " [width " << e.width << ", slope " << e.slope << ']';
    out << "\nroots      inside " << loc.inside << ", boundary " << loc.boundary << ", outside " << loc.outside
        << '\n';
    return int{kOk};
  });
}

inline int cmd_ufactor(const Options& o, std::ostream& out) {
  const FieldDescriptor fd = parse_field(o.field);
  const std::string var = o.vars.empty() ? "x" : o.vars;
  return with_field(fd, [&](auto tag) {
    using E = typename decltype(tag)::type;
    const UniPoly<E> p = parse_unipoly<E>(o.input, fd, var);
    const auto fm = factor_uni(p);
    if (o.json_out) {
      json j;
      j["input"] = format_poly(p, var);
      j["field"] = fd.to_string();
      j["unit"] = fm.unit.to_string();
      j["factors"] = json::array();
      for (const auto& [g, m] : fm.factors) j["factors"].push_back({{"factor", format_poly(g, var)}, {"multiplicity", m}});
      j["nu"] = fm.count();
      out << j.dump(2) << '\n';
      return int{kOk};
    }
    out << "input   " << format_poly(p, var) << '\n';
    out << "unit    " << fm.unit << '\n';
    for (const auto& [g, m] : fm.factors) out << "factor  " << format_poly(g, var) << (m > 1 ? "  ^" + std::to_string(m) : "") << '\n';
    out << "nu      " << fm.count() << '\n';
    return int{kOk};
  });
}

inline OracleBudget budget_from_env() {
  if (const char* env = std::getenv("POLYBOUND_BUDGET"); env && *env) return OracleBudget::from_string(env);
  return {};
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  const FieldDescriptor fd = parse_field(o.field);
  if (!fd.is_prime_field()) throw Error(Errc::NotSupported, "oracle needs --field Fp");
  const auto vars = resolve_vars(o.vars, 2);
  if (vars.size() != 2) throw Error(Errc::ArityMismatch, "oracle needs exactly two variables");
  const BiPoly<PrimeFieldElem> f = parse_bipoly<PrimeFieldElem>(o.input, fd, vars);
  const auto fac = oracle_factor_fp(f, budget_from_env());
  if (o.json_out) {
    json j;
    j["input"] = format_poly(f, vars);
    j["field"] = fd.to_string();
    j["content"] = format_poly(fac.content, vars[0]);
    j["unit"] = fac.unit.to_string();
    j["factors"] = json::array();
    for (const auto& [g, m] : fac.factors) j["factors"].push_back({{"factor", format_poly(g, vars)}, {"multiplicity", m}});
    j["count"] = fac.count();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "input    " << format_poly(f, vars) << '\n';
  out << "content  " << format_poly(fac.content, vars[0]) << '\n';
  out << "unit     " << fac.unit << '\n';
  for (const auto& [g, m] : fac.factors) out << "factor   " << format_poly(g, vars) << (m > 1 ? "  ^" + std::to_string(m) : "") << '\n';
  out << "count    " << fac.count() << '\n';
  return kOk;
}

/// expected matches actual if every key of expected is present with a matching
/// value. An object matched against an array selects the element by "id".
inline bool fragment_matches(const json& expected, const json& actual, const std::string& path, std::string& diff) {
  if (expected.is_object()) {
    if (actual.is_array()) {
      for (const auto& [id, sub] : expected.items()) {
        const json* hit = nullptr;
        for (const auto& a : actual)
          if (a.is_object() && a.contains("id") && a["id"] == id) hit = &a;
        if (!hit) {
          diff = path + "[" + id + "]: missing";
          return false;
        }
        if (!fragment_matches(sub, *hit, path + "[" + id + "]", diff)) return false;
      }
      return true;
    }
    if (!actual.is_object()) {
      diff = path + ": expected an object, got " + actual.dump();
      return false;
    }
    for (const auto& [key, sub] : expected.items()) {
      if (!actual.contains(key)) {
        if (sub.is_null()) continue;
        diff = path + "." + key + ": missing";
        return false;
      }
      if (!fragment_matches(sub, actual[key], path + "." + key, diff)) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!fragment_matches(expected[i], actual[i], path + "[" + std::to_string(i) + "]", diff)) return false;
    return true;
  }
  if (expected != actual) {
    diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

/// Seeded soundness spot checks: each applicable bound is compared with the oracle count.
inline std::size_t random_soundness_checks(std::uint64_t seed, std::size_t count, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0, done = 0;
  while (done < count) {
    const FieldDescriptor fd = FieldDescriptor::prime(rng() % 2 ? 2 : 3);
    const std::size_t n = 2 + rng() % 3;
    std::vector<UniPoly<PrimeFieldElem>> a;
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<PrimeFieldElem> c;
      const std::size_t len = rng() % 5;
      for (std::size_t k = 0; k < len; ++k) c.push_back(PrimeFieldElem::from_integer(fd, static_cast<long>(rng() % fd.characteristic())));
      a.emplace_back(fd, std::move(c));
    }
    const BiPoly<PrimeFieldElem> f(fd, std::move(a));
    if (f.deg_y() < Degree(2) || f.coeff(0).is_zero() || !content_y(f).is_constant()) continue;
    ++done;
    const BivariateContext<PrimeFieldElem> ctx(f);
    const std::size_t truth = oracle_count(f);
    for (CriterionId id : kBivariateCriteria) {
      const auto v = check_criterion(id, ctx);
      if (v.applicable && static_cast<std::int64_t>(truth) > v.bound) {
        ++failures;
        out << "random: " << format_poly(f) << " over " << fd.to_string() << ": " << criterion_name(id) << " bound "
            << v.bound << " < " << truth << " factors\n";
      }
    }
  }
  return failures;
}

inline int cmd_corpus(const Options& o, std::ostream& out) {
  std::ifstream in(o.input);
  if (!in) throw Error(Errc::NotSupported, "cannot read corpus file " + o.input);
  FieldDescriptor fd = FieldDescriptor::rationals();
  std::string vars_text;
  bool assume_primitive = false;
  std::size_t passed = 0, failed = 0, line_no = 0;
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = o.input + ":" + std::to_string(line_no);
    if (line[0] == '@') {
      std::istringstream ds(line.substr(1));
      std::string key, value;
      ds >> key >> value;
      if (key == "field") fd = parse_field(value);
      else if (key == "vars") vars_text = value == "default" ? "" : value;
      else if (key == "assume-primitive") assume_primitive = value == "on";
      else throw Error(Errc::NotSupported, where + ": unknown directive @" + key);
      continue;
    }
    const auto semi = line.find(';');
    const std::string poly = trim(line.substr(0, semi));
    json expected = json::object();
    if (semi != std::string::npos) {
      try {
        expected = json::parse(trim(line.substr(semi + 1)));
      } catch (const json::parse_error& e) {
        out << where << ": FAIL bad expectation: " << e.what() << '\n';
        ++failed;
        continue;
      }
    }
    json actual;
    try {
      const auto vars = resolve_vars(vars_text, 2);
      actual = report_json(with_field(fd, [&](auto tag) {
        using E = typename decltype(tag)::type;
        return analyze_text<E>(poly, fd, vars, assume_primitive);
      }));
    } catch (const ParseError& e) {
      actual = {{"error", "ParseError"}, {"message", e.message()}};
    } catch (const Error& e) {
      actual = {{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
    }
    std::string diff;
    if (fragment_matches(expected, actual, "$", diff)) {
      ++passed;
      out << where << ": PASS " << poly << '\n';
    } else {
      ++failed;
      out << where << ": FAIL " << poly << "\n  " << diff << '\n';
    }
  }
  if (o.seed) {
    const std::size_t bad = random_soundness_checks(*o.seed, 50, out);
    out << "random soundness checks (seed " << *o.seed << "): " << (50 - std::min<std::size_t>(bad, 50))
        << " clean of 50\n";
    failed += bad;
  }
  out << "corpus: " << passed << " passed, " << failed << " failed\n";
  return failed ? kCorpusMismatch : kOk;
}

/// Runs the command line; output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"polybound: bounds on the number of irreducible factors of bivariate polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_vars) {
    sub->add_option("--field", o.field, "coefficient field: Q or Fp (for example F3)")->capture_default_str();
    if (with_vars) sub->add_option("--vars", o.vars, "comma-separated variable names, last one is the main variable");
    sub->add_flag("--json", o.json_out, "machine-readable output");
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "run every applicable criterion");
  add_common(analyze_cmd, true);
  analyze_cmd->add_flag("--assume-primitive", o.assume_primitive,
                        "assert trivial content where it cannot be computed (four or more variables)");
  analyze_cmd->add_option("polynomial", o.input)->required();

  CLI::App* newton_cmd = app.add_subcommand("newton", "Newton polygon for the degree valuation");
  add_common(newton_cmd, true);
  newton_cmd->add_option("--svg", o.svg_path, "write the polygon as SVG");
  newton_cmd->add_option("polynomial", o.input)->required();

  CLI::App* ufactor_cmd = app.add_subcommand("ufactor", "factor a univariate polynomial");
  add_common(ufactor_cmd, false);
  ufactor_cmd->add_option("--var", o.vars, "variable name (default x)");
  ufactor_cmd->add_option("polynomial", o.input)->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force factorization over a small prime field");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("polynomial", o.input)->required();

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "check a corpus of polynomials against expected reports");
  corpus_cmd->add_option("--seed", o.seed, "also run seeded random soundness checks");
  corpus_cmd->add_option("file", o.input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!*corpus_cmd) {
    try {
      (void)parse_field(o.field);
    } catch (const ParseError& e) {
      err << render_parse_error(o.field, e);
      return kInputError;
    } catch (const Error& e) {
      err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
      return kInputError;
    }
    try {
      if (!o.vars.empty()) (void)parse_variable_list(o.vars);
    } catch (const ParseError& e) {
      err << render_parse_error(o.vars, e);
      return kInputError;
    }
  }
  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*newton_cmd) return cmd_newton(o, out);
    if (*ufactor_cmd) return cmd_ufactor(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*corpus_cmd) return cmd_corpus(o, out);
  } catch (const ParseError& e) {
    err << render_parse_error(o.input, e);
    return kInputError;
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return e.is_budget() ? kBudget : kInputError;
  }
  return kInputError;
}

}  // namespace polybound::cli

#endif  // POLYBOUND_TOOLS_CLI_APP_HPP
