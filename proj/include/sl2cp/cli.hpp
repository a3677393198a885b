#pragma once

// Command-line front end. run() parses argv, executes one subcommand and
// writes its payload to `out` (JSON unless --format=text). Exit codes:
// 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/polynomial_io.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/serialize.hpp"
#include "sl2cp/sln.hpp"
#include "sl2cp/verify/acceptance.hpp"
#include "sl2cp/verify/generators.hpp"

namespace sl2cp::cli {

enum class Status { ok, error };

struct CommandResult {
  Status status = Status::ok;
  json payload;
  std::optional<ErrorKind> error_kind;
  int exit_code = 0;
};

enum class Format { json, text };

struct Options {
  std::uint64_t seed = 0;
  unsigned trials = kDefaultTrials;
  std::size_t exact_cap = kDefaultExactCap;
  Format format = Format::json;
};

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON, or the contents of a file when the argument is "@path".
inline std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::optional<json> try_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

inline json parse_json(const std::string& arg) {
  auto j = try_json(read_argument(arg));
  if (!j) throw Error(ErrorKind::BadInput, "argument is not valid JSON");
  return *j;
}

/// Polynomial given as {"terms": ...} JSON or in text form.
inline MultiPoly read_polynomial(const std::string& arg) {
  const std::string text = read_argument(arg);
  if (auto j = try_json(text); j && j->is_object()) return j->get<MultiPoly>();
  return parse_polynomial(text);
}

/// Factored form as {"d0": ..., "factors": ...}, or any polynomial form,
/// which is then recognized.
inline CanonicalCP read_canonical(const std::string& arg) {
  const std::string text = read_argument(arg);
  if (auto j = try_json(text); j && j->is_object() && j->contains("d0"))
    return j->get<CanonicalCP>();
  return recognize(read_polynomial(arg));
}

/// {"irrep": m} | {"sum": [expr, ...]} | {"tensor": [expr, ...]} | m
inline RepTriple build_expression(const json& e, int depth = 0) {
  if (depth > 64) throw Error(ErrorKind::BadInput, "expression nested too deeply");
  if (e.is_number_unsigned()) return irrep_matrices(e.get<Weight>());
  if (!e.is_object() || e.size() != 1)
    throw Error(ErrorKind::BadInput,
                "expression must be m, {\"irrep\": m}, {\"sum\": [...]} or {\"tensor\": [...]}");
  const auto& [key, value] = *e.items().begin();
  if (key == "irrep") {
    if (!value.is_number_unsigned()) throw Error(ErrorKind::BadInput, "irrep needs m >= 0");
    return irrep_matrices(value.get<Weight>());
  }
  if (key != "sum" && key != "tensor")
    throw Error(ErrorKind::BadInput, "unknown expression operator \"" + key + "\"");
  if (!value.is_array() || value.empty())
    throw Error(ErrorKind::BadInput, key + " needs a nonempty array");
  RepTriple acc = build_expression(value[0], depth + 1);
  for (std::size_t k = 1; k < value.size(); ++k) {
    const RepTriple next = build_expression(value[k], depth + 1);
    acc = key == "sum" ? direct_sum(acc, next) : tensor(acc, next);
  }
  return acc;
}

struct RepSource {
  std::optional<Weight> m;
  std::string expr;
  std::string triple;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--m", m, "highest weight of an irreducible module");
    cmd->add_option("--expr", expr, "JSON expression of sums/tensors of irreducibles");
    cmd->add_option("--triple", triple, "RepTriple JSON (or @file)");
  }

  RepTriple get() const {
    const int given = (m ? 1 : 0) + (expr.empty() ? 0 : 1) + (triple.empty() ? 0 : 1);
    if (given != 1) throw UsageError("give exactly one of --m, --expr, --triple");
    if (m) return irrep_matrices(*m);
    if (!expr.empty()) return build_expression(parse_json(expr));
    RepTriple t = parse_json(triple).get<RepTriple>();
    validate(t);
    return t;
  }
};

inline std::string decomposition_text(const Decomposition& d) {
  if (d.entries().empty()) return "0";
  std::string out;
  for (const auto& [m, mult] : d.entries()) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + " ";
    out += "V(" + std::to_string(m) + ")";
  }
  return out;
}

inline std::string matrix_text(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).get_str();
    out += "]\n";
  }
  return out;
}

inline std::string triple_text(const RepTriple& t) {
  return "H =\n" + matrix_text(t.H) + "E =\n" + matrix_text(t.E) + "F =\n" + matrix_text(t.F);
}

}  // namespace detail

/// Executes one command line (argv[0] is the program name).
inline CommandResult run(const std::vector<std::string>& argv, std::ostream& out,
                         std::ostream& err) {
  Options opt;
  std::string format = "json";

  CLI::App app{"Characteristic polynomials of sl(2) representations", "sl2cp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--trials", opt.trials, "randomized evaluation points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--exact-cap", opt.exact_cap, "largest dimension for symbolic determinants")
      ->capture_default_str();
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // Every subcommand fills `payload` and optionally `text`.
  json payload;
  std::optional<std::string> text;
  std::function<void()> action;

  auto* irrep = app.add_subcommand("irrep", "matrices of the irreducible module V(m)");
  Weight irrep_m = 0;
  irrep->add_option("--m", irrep_m, "highest weight")->required();
  irrep->callback([&] {
    action = [&] {
      const auto t = irrep_matrices(irrep_m);
      payload = t;
      text = detail::triple_text(t);
    };
  });

  auto* rep_build = app.add_subcommand("rep-build", "matrices of a sum/tensor expression");
  std::string build_expr;
  rep_build->add_option("--expr", build_expr,
                        R"(e.g. {"sum": [{"irrep": 1}, {"tensor": [2, 1]}]})")
      ->required();
  rep_build->callback([&] {
    action = [&] {
      const auto t = detail::build_expression(detail::parse_json(build_expr));
      payload = t;
      text = detail::triple_text(t);
    };
  });

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a module");
  detail::RepSource cp_src;
  cp_src.add_to(charpoly);
  bool cp_expand = false;
  std::string cp_oracle;
  charpoly->add_flag("--expand", cp_expand, "print the expanded polynomial");
  charpoly->add_option("--oracle", cp_oracle, "cross-check with a determinant: exact|randomized")
      ->check(CLI::IsMember({"exact", "randomized"}));
  charpoly->callback([&] {
    action = [&] {
      const auto t = cp_src.get();
      const auto c = charpoly_of_rep(t);
      const json body = cp_expand ? json(expand_canonical(c)) : json(c);
      text = cp_expand ? to_text(expand_canonical(c)) : to_text(c);
      if (cp_oracle.empty()) {
        payload = body;
        return;
      }
      const auto report = cp_oracle == "exact"
                              ? pencil_verify_exact(t, c, opt.exact_cap)
                              : pencil_verify_randomized(t, c, opt.trials, opt.seed);
      payload = json{{cp_expand ? "expanded" : "charpoly", body}, {"verification", report}};
      *text += std::string("\n") + (report.agreed ? "verified" : "MISMATCH") + " (" +
               (report.mode == VerificationReport::Mode::exact ? "exact" : "randomized") + ")";
    };
  });

  auto* decompose = app.add_subcommand("decompose", "module structure from a characteristic polynomial");
  std::string dec_cp;
  decompose->add_option("--cp", dec_cp, "CanonicalCP JSON, polynomial JSON or text")->required();
  decompose->callback([&] {
    action = [&] {
      const auto d = decompose_charpoly(detail::read_canonical(dec_cp));
      payload = d;
      text = detail::decomposition_text(d);
    };
  });

  auto* recog = app.add_subcommand("recognize", "factored form of an expanded polynomial");
  std::string rec_poly;
  recog->add_option("--poly", rec_poly, "polynomial JSON or text")->required();
  recog->callback([&] {
    action = [&] {
      const auto c = recognize(detail::read_polynomial(rec_poly));
      payload = c;
      text = to_text(c);
    };
  });

  auto* product = app.add_subcommand("product", "resolution product of two characteristic polynomials");
  std::string prod_a, prod_b;
  product->add_option("--a", prod_a, "first factor")->required();
  product->add_option("--b", prod_b, "second factor")->required();
  product->callback([&] {
    action = [&] {
      const auto r = resolution_product(MonoidElement(detail::read_canonical(prod_a)),
                                        MonoidElement(detail::read_canonical(prod_b)));
      payload = r.cp();
      text = to_text(r.cp());
    };
  });

  auto* cg = app.add_subcommand("clebsch-gordan", "decomposition of V(m) (x) V(n)");
  Weight cg_m = 0, cg_n = 0;
  cg->add_option("--m", cg_m)->required();
  cg->add_option("--n", cg_n)->required();
  cg->callback([&] {
    action = [&] {
      const auto d = clebsch_gordan(cg_m, cg_n);
      if (!(d == clebsch_gordan_by_weights(cg_m, cg_n)))
        throw std::logic_error("closed form and weight convolution disagree");
      payload = d;
      text = detail::decomposition_text(d);
    };
  });

  auto* monoid = app.add_subcommand("monoid-check", "check the monoid laws on sample elements");
  std::string mc_samples;
  Weight mc_irreducibles = 5;
  unsigned mc_random = 50;
  long mc_max_dim = 12;
  monoid->add_option("--samples", mc_samples, "JSON array of CanonicalCP (replaces the defaults)");
  monoid->add_option("--irreducibles", mc_irreducibles, "include f of V(0)..V(k)")
      ->capture_default_str();
  monoid->add_option("--random", mc_random, "number of seeded random elements")
      ->capture_default_str();
  monoid->add_option("--max-dim", mc_max_dim, "dimension bound for random elements")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  monoid->callback([&] {
    action = [&] {
      std::vector<MonoidElement> samples;
      if (!mc_samples.empty()) {
        const json arr = detail::parse_json(mc_samples);
        if (!arr.is_array()) throw Error(ErrorKind::BadInput, "--samples must be an array");
        for (const auto& e : arr) samples.emplace_back(e.get<CanonicalCP>());
      } else {
        for (Weight m = 0; m <= mc_irreducibles; ++m)
          samples.push_back(MonoidElement::irreducible(m));
        verify::Gen g(verify::stream_seed(opt.seed, "monoid"));
        for (unsigned k = 0; k < mc_random; ++k)
          samples.push_back(verify::random_element(g, mc_max_dim));
      }
      const auto report = verify_monoid_laws(samples, opt.seed);
      payload = report;
      payload["samples"] = samples.size();
    };
  });

  auto* hz = app.add_subcommand("hu-zhang", "det(z0 I + z1 H + E + F) against the paired product");
  Weight hz_m = 0;
  hz->add_option("--m", hz_m)->required();
  hz->callback([&] {
    action = [&] {
      const bool holds = hu_zhang_check(hz_m, opt.exact_cap);
      const auto poly = hu_zhang_product(hz_m);
      payload = json{{"m", hz_m}, {"holds", holds}, {"polynomial", poly}};
      text = to_text(poly) + (holds ? "\nholds" : "\nFAILS");
    };
  });

  auto* sym = app.add_subcommand("symmetry-check", "f(z0,z1,1,1) = f(z0,1,z1,z1)");
  detail::RepSource sym_src;
  sym_src.add_to(sym);
  sym->callback([&] {
    action = [&] {
      const auto t = sym_src.get();
      const bool holds = symmetry_identity_check(t, opt.exact_cap);
      payload = json{{"dim", t.dim()}, {"holds", holds}};
      text = holds ? "holds" : "FAILS";
    };
  });

  auto* adj = app.add_subcommand("adjoint", "adjoint of sl(n) restricted to a simple-root sl(2)");
  std::size_t adj_n = 2, adj_i = 1;
  bool adj_report = false, adj_matrices = false;
  adj->add_option("--n", adj_n)->required();
  adj->add_option("--i", adj_i, "simple root index 1..n-1")->capture_default_str();
  adj->add_flag("--report", adj_report, "compare the z0 exponent with n^2 - 5n + 6");
  adj->add_flag("--matrices", adj_matrices, "print the RepTriple instead");
  adj->callback([&] {
    action = [&] {
      if (adj_report) {
        const auto r = adjoint_report(adj_n);
        payload = r;
        return;
      }
      const auto t = ad_restriction_rep(adj_n, adj_i);
      if (adj_matrices) {
        payload = t;
        text = detail::triple_text(t);
        return;
      }
      const auto c = charpoly_of_rep(t);
      const auto check = pencil_verify_randomized(t, c, opt.trials, opt.seed);
      payload = json{{"n", adj_n},
                     {"i", adj_i},
                     {"charpoly", c},
                     {"same_for_all_i", simple_root_equivalence(adj_n)},
                     {"verification", check}};
      text = to_text(c);
    };
  });

  auto* verify_all = app.add_subcommand("verify-all", "run the full acceptance suite");
  bool va_timing = false;
  verify_all->add_flag("--timing", va_timing, "include wall-clock seconds in the output");
  verify_all->callback([&] {
    action = [&] {
      const auto results = verify::run_acceptance(opt.seed);
      json arr = json::array();
      std::string lines;
      bool all = true;
      for (const auto& r : results) {
        json row{{"id", r.id},
                 {"name", r.name},
                 {"passed", r.passed()},
                 {"budget_seconds", r.budget_seconds},
                 {"detail", r.detail}};
        if (va_timing) row["seconds"] = r.seconds;
        arr.push_back(row);
        all = all && r.passed();
        lines += std::string(r.passed() ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " +
                 r.name + (r.passed() ? "" : " -- " + r.detail) + "\n";
      }
      payload = json{{"passed", all}, {"criteria", arr}};
      text = lines + (all ? "all criteria passed" : "some criteria FAILED");
      if (!all) throw Error(ErrorKind::NotCharPoly, "acceptance suite failed");
    };
  });

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  CommandResult result;
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    result.status = Status::error;
    result.exit_code = 2;
    return result;
  }
  opt.format = format == "text" ? Format::text : Format::json;

  try {
    action();
    result.payload = payload;
    if (opt.format == Format::text && text)
      out << *text << "\n";
    else
      out << payload.dump(2) << "\n";
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    result.status = Status::error;
    result.exit_code = 2;
  } catch (const Error& e) {
    result.status = Status::error;
    result.error_kind = e.kind();
    result.exit_code = 1;
    // verify-all reports its own failure in the payload.
    result.payload = payload.is_null()
                         ? json{{"status", "error"},
                                {"error_kind", std::string(to_string(e.kind()))},
                                {"message", e.what()}}
                         : payload;
    if (opt.format == Format::text && text && !payload.is_null())
      out << *text << "\n";
    else
      out << result.payload.dump(2) << "\n";
    err << to_string(e.kind()) << ": " << e.what() << "\n";
  } catch (const json::exception& e) {
    result.status = Status::error;
    result.error_kind = ErrorKind::BadInput;
    result.exit_code = 1;
    result.payload = json{{"status", "error"}, {"error_kind", "BadInput"}, {"message", e.what()}};
    out << result.payload.dump(2) << "\n";
    err << "BadInput: " << e.what() << "\n";
  }
  return result;
}

}  // namespace sl2cp::cli
