#pragma once

// Command-line front end: flag parsing, dispatch, and report output.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "polysym/checks.hpp"
#include "polysym/report.hpp"

namespace polysym {

inline constexpr int kMaxRows = 6;
inline constexpr int kMaxSymbols = 6;
inline constexpr int kMaxDegreeCap = 12;

struct RunConfig {
  std::vector<std::string> command;
  int n = 3;
  int m = 2;
  int max_degree = kGenerationDegreeBoundN3;
  int degree = 6;
  int truncate = 6;
  int cap = 3;
  int table = 0;
  std::string expr;
  Format format = Format::text;
  std::string output;
  int threads = 0;
  bool certificates = false;
};

/// Usage-level validation; violations exit with status 2.
inline void validate(const RunConfig& c) {
  if (c.n < 1 || c.n > kMaxRows) throw DomainError("--n must be in 1.." + std::to_string(kMaxRows));
  if (c.m < 1 || c.m > kMaxSymbols) throw DomainError("--m must be in 1.." + std::to_string(kMaxSymbols));
  for (int v : {c.max_degree, c.degree, c.truncate, c.cap})
    if (v < 0 || v > kMaxDegreeCap) throw DomainError("degree caps must be in 0.." + std::to_string(kMaxDegreeCap));
  if (c.threads < 0) throw DomainError("--threads must be nonnegative");
}

namespace detail {

inline std::string join_command(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string weight_text(const std::optional<WeightVector>& w) {
  return w ? multidegree_text(w->to_vector()) : std::string("none");
}

inline void relation_report(Report& r, const RelationCheck& c) {
  r.lines.push_back(c.name + ": phi-image zero " + yes_no(c.in_kernel) + ", highest weight " + yes_no(c.highest) + ", weight " +
                    weight_text(c.weight) + " (expected " + weight_text(c.expected_weight) + ")");
  if (c.forms_equal) r.lines.push_back("defining and expanded forms agree: " + yes_no(*c.forms_equal));
  r.data["name"] = c.name;
  r.data["in_kernel"] = c.in_kernel;
  r.data["highest_weight"] = c.highest;
  r.data["weight"] = c.weight ? nlohmann::json(c.weight->to_vector()) : nlohmann::json(nullptr);
  if (c.forms_equal) r.data["forms_equal"] = *c.forms_equal;
  r.passed = c.passed();
}

inline void series_report(Report& r, const TruncatedSeries& s) {
  r.lines.push_back(s.text());
  r.data["series"] = s.to_json();
  r.data["text"] = s.text();
  r.columns = {"exponent", "coeff"};
  for (const auto& [alpha, c] : s.coefficients()) r.rows.push_back({multidegree_text(alpha.to_vector()), c.get_str()});
}

}  // namespace detail

/// Executes one configured command. Throws DomainError on precondition violations.
inline Report run(const RunConfig& c) {
  validate(c);
  const unsigned threads = resolve_threads(c.threads);
  Report r;
  r.command = detail::join_command(c.command);
  const std::string cmd = r.command;
  auto param = [&](const char* key, const nlohmann::json& v) { r.params[key] = v; };

  if (cmd == "verify psi") {
    param("n", c.n), param("m", c.m), param("max_degree", c.max_degree);
    const PsiSweep s = psi_sweep(c.n, c.m, c.max_degree, threads);
    r.lines.push_back("tuples checked: " + std::to_string(s.tuples));
    r.lines.push_back("nonzero images: " + std::to_string(s.failures.size()));
    for (const auto& f : s.failures) r.lines.push_back("failure " + f);
    r.data["tuples"] = s.tuples;
    r.data["failures"] = s.failures;
    r.passed = s.passed();
  } else if (cmd == "verify gram") {
    param("n", c.n);
    if (c.n > 4) throw DomainError("gram verification supports n <= 4");
    detail::relation_report(r, gram_check(c.n));
  } else if (cmd == "verify j32" || cmd == "verify j42") {
    param("m", c.m);
    if (c.m < 2 || c.m > 4) throw DomainError("explicit relations are checked for 2 <= m <= 4");
    detail::relation_report(r, explicit_relation_check(c.command[1], c.m));
  } else if (cmd == "verify catalog") {
    const auto records = standard_relations();
    r.data["catalog"] = relation_catalog_json(records);
    for (const auto& rec : records) {
      const int rows = rec.name == "J32" || rec.name == "J42" ? 3 : static_cast<int>(rec.name.size()) - 1;
      const bool zero = phi_eval(rec.element, rows).is_zero();
      r.lines.push_back(rec.name + ": " + std::to_string(rec.element.size()) + " terms, phi-image zero for n = " + std::to_string(rows) +
                        ": " + detail::yes_no(zero));
      r.rows.push_back({rec.name, std::to_string(rows), std::to_string(rec.element.size()), detail::yes_no(zero)});
      r.passed = r.passed && zero;
    }
    r.columns = {"name", "n", "terms", "in_kernel"};
  } else if (cmd == "hwv") {
    param("m", c.m), param("cap", c.cap), param("expr", c.expr);
    if (c.expr.empty()) throw DomainError("hwv needs --expr");
    const FPoly f = parse_fpoly(c.expr, c.m, c.cap);
    const auto hw = is_highest_weight(f);
    r.lines.push_back("highest weight: " + detail::yes_no(hw.highest) + ", weight " + detail::weight_text(hw.weight));
    r.data["highest_weight"] = hw.highest;
    r.data["weight"] = hw.weight ? nlohmann::json(hw.weight->to_vector()) : nlohmann::json(nullptr);
    r.passed = hw.highest;
  } else if (cmd == "orbit-span") {
    param("m", c.m);
    if (c.m < 2 || c.m > 4) throw DomainError("orbit spans are computed for 2 <= m <= 4");
    const OrbitSpanCheck s = orbit_span_check(c.m);
    for (const auto& [name, d] : s.dims) {
      r.lines.push_back(name + ": " + std::to_string(d));
      r.data["dims"][name] = d;
      r.rows.push_back({name, std::to_string(d)});
    }
    r.lines.push_back("total: " + std::to_string(s.total()) + ", all phi-killed: " + detail::yes_no(s.all_in_kernel));
    r.columns = {"seed", "dimension"};
    r.data["total"] = s.total();
    r.data["all_in_kernel"] = s.all_in_kernel;
    r.passed = s.all_in_kernel;
  } else if (cmd == "decompose kernel" || cmd == "decompose F" || cmd == "decompose R") {
    param("n", c.n), param("m", c.m), param("degree", c.degree);
    const char which = c.command[1][0];
    const SchurMultiset s = which == 'k' ? kernel_decomposition(c.n, c.m, c.degree)
                            : which == 'F' ? f_decomposition(c.n, c.m, c.degree)
                                           : r_decomposition(c.n, c.m, c.degree);
    r.lines.push_back(schur_text(s));
    r.lines.push_back("dimension: " + total_dimension(s, c.m).get_str());
    r.data["decomposition"] = schur_json(s);
    r.data["text"] = schur_text(s);
    r.data["dimension"] = total_dimension(s, c.m).get_str();
    r.columns = {"partition", "multiplicity"};
    for (const auto& [lambda, mult] : s) r.rows.push_back({lambda.text(), std::to_string(mult)});
  } else if (cmd == "hilbert secondary") {
    param("m", c.m), param("truncate", c.truncate);
    detail::series_report(r, secondary_hilbert(c.m, c.truncate));
  } else if (cmd == "hilbert molien") {
    param("n", c.n), param("m", c.m), param("truncate", c.truncate);
    detail::series_report(r, molien_hilbert_R(c.n, c.m, c.truncate));
  } else if (cmd == "hilbert hironaka-check") {
    param("m", c.m), param("truncate", c.truncate);
    const HironakaCheck h = hironaka_check(c.m, c.truncate);
    r.lines.push_back("identity holds through degree " + std::to_string(c.truncate) + ": " + detail::yes_no(h.holds));
    if (h.first_mismatch) r.lines.push_back("first mismatch at " + detail::multidegree_text(h.first_mismatch->to_vector()));
    r.data["holds"] = h.holds;
    r.passed = h.holds;
  } else if (cmd == "tables verify") {
    param("id", c.table);
    if (c.table < 1 || c.table > 6) throw DomainError("--id must be in 1..6");
    if (c.table == 1 || c.table == 6) {
      add_table(r, verify_monomial_table(c.table), c.certificates);
    } else if (c.table == 2 || c.table == 4) {
      add_table(r, verify_congruence_table(c.table), c.certificates);
    } else {
      const SecondaryBuild b = build_secondary_generators(c.table == 3 ? 3 : 4, kGenerationDegreeBoundN3);
      add_table(r, b.comparison, c.certificates);
      for (const auto& f : b.count_failures) r.lines.push_back("count failure: " + f);
      r.passed = r.passed && b.passed();
    }
  } else if (cmd == "secondary build") {
    param("m", c.m), param("max_degree", c.max_degree);
    const SecondaryBuild b = build_secondary_generators(c.m, c.max_degree);
    nlohmann::json chosen = nlohmann::json::array();
    for (int d = 0; d <= c.max_degree; ++d)
      for (const auto& alpha : weights_of_degree(c.m, d)) {
        auto it = b.chosen.find(alpha);
        if (it == b.chosen.end()) continue;
        std::vector<std::string> texts;
        std::string joined;
        for (const auto& f : it->second) {
          texts.push_back(bracket_text(f));
          joined += (joined.empty() ? "" : ", ") + texts.back();
        }
        r.lines.push_back(detail::multidegree_text(alpha.to_vector()) + ": " + joined);
        chosen.push_back({{"multidegree", alpha.to_vector()}, {"products", texts}});
      }
    r.lines.push_back("total: " + std::to_string(b.total()));
    for (const auto& f : b.count_failures) r.lines.push_back("count failure: " + f);
    add_table(r, b.comparison, false);
    r.data["chosen"] = chosen;
    r.data["total"] = b.total();
    r.data["count_failures"] = b.count_failures;
    r.passed = r.passed && b.passed();
  } else if (cmd == "generation check") {
    param("m", c.m), param("max_degree", c.max_degree);
    const GeneratorSet g = polarization_generators(c.m);
    const GenerationReport g_report = check_generation(g, 3, c.max_degree, threads);
    r.lines.push_back("generators: " + std::to_string(g_report.generators));
    for (const auto& [d, ok] : g_report.by_degree) {
      r.lines.push_back("degree " + std::to_string(d) + ": " + (ok ? "generated" : "NOT generated"));
      r.data["by_degree"][std::to_string(d)] = ok;
    }
    nlohmann::json failing = nlohmann::json::array();
    r.columns = {"multidegree", "kernel_dim", "rank", "status"};
    for (const auto& comp : g_report.components) {
      r.rows.push_back({detail::multidegree_text(comp.multidegree.to_vector()), std::to_string(comp.target), std::to_string(comp.rank),
                        comp.passed ? "ok" : "deficit"});
      if (!comp.passed) {
        failing.push_back({{"multidegree", comp.multidegree.to_vector()}, {"deficit", comp.target - comp.rank}});
        r.lines.push_back("deficit " + std::to_string(comp.target - comp.rank) + " at " + detail::multidegree_text(comp.multidegree.to_vector()));
      }
    }
    r.data["generators"] = g_report.generators;
    r.data["failing"] = failing;
    r.passed = g_report.passed();
  } else if (cmd == "minimality check") {
    param("m", c.m);
    const GeneratorSet g = polarization_generators(c.m);
    const MinimalityReport mr = check_minimality(g, 3, {5, 6}, threads);
    r.lines.push_back("generators: " + std::to_string(g.members.size()));
    for (const auto& [d, count] : mr.members_by_degree) {
      r.lines.push_back("degree " + std::to_string(d) + ": " + std::to_string(count));
      r.data["by_degree"][std::to_string(d)] = count;
    }
    r.lines.push_back("beta: " + std::to_string(mr.beta));
    r.columns = {"multidegree", "kernel_dim", "decomposable_dim", "members", "status"};
    for (const auto& comp : mr.components) {
      r.rows.push_back({detail::multidegree_text(comp.multidegree.to_vector()), std::to_string(comp.dim_kernel),
                        std::to_string(comp.dim_decomposable), std::to_string(comp.members), comp.passed ? "ok" : "fail"});
      if (!comp.passed) r.lines.push_back("not minimal at " + detail::multidegree_text(comp.multidegree.to_vector()));
    }
    r.data["generators"] = g.members.size();
    r.data["beta"] = mr.beta;
    r.passed = mr.passed();
  } else if (cmd == "lowerbound") {
    param("n", c.n);
    const LowerBoundResult lb = lowerbound_check(c.n);
    if (!lb.supported) {
      r.lines.push_back("unsupported for n = " + std::to_string(c.n));
      r.data["status"] = "unsupported";
    } else {
      r.lines.push_back("phi-image zero: " + detail::yes_no(lb.in_kernel));
      r.lines.push_back("outside the decomposable part: " + detail::yes_no(lb.outside));
      r.data["status"] = lb.passed() ? "pass" : "fail";
    }
    r.data["in_kernel"] = lb.in_kernel;
    r.data["outside"] = lb.outside;
    r.passed = lb.passed();
  } else if (cmd == "reduce") {
    param("n", c.n), param("m", c.m), param("expr", c.expr);
    if (c.expr.empty()) throw DomainError("reduce needs --expr");
    const FPoly f = parse_fpoly(c.expr, c.m, kMaxDegreeCap);
    const PMembership mem = reduce_mod_P(phi_eval(f, c.n));
    r.lines.push_back(std::string("in (P): ") + detail::yes_no(mem.member));
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& t : mem.certificate) {
      const std::string text = certificate_text({c.n, c.m}, t);
      cert.push_back(text);
      if (c.certificates) r.lines.push_back("  " + text);
    }
    r.data["member"] = mem.member;
    if (c.certificates) r.data["certificate"] = cert;
    r.passed = mem.member;
  } else {
    throw DomainError("unknown command '" + cmd + "'");
  }
  return r;
}

/// Parses argv, runs the command, and writes the report. Returns 0 when every
/// check passes, 1 when a check fails, 2 on usage errors.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact verification of multisymmetric relations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  std::vector<std::string> path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--output", cfg.output, "write the report to this file");
    sub->add_option("--threads", cfg.threads, "worker count (POLYSYM_THREADS overrides)");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::vector<std::string>& opts) {
    CLI::App* sub = parent->add_subcommand(name, help);
    common(sub);
    for (const auto& o : opts) {
      if (o == "n") sub->add_option("--n", cfg.n, "number of rows");
      if (o == "m") sub->add_option("--m", cfg.m, "number of symbols");
      if (o == "max-degree") sub->add_option("--max-degree", cfg.max_degree, "largest total degree");
      if (o == "degree") sub->add_option("--degree", cfg.degree, "total degree");
      if (o == "truncate") sub->add_option("--truncate", cfg.truncate, "series truncation degree");
      if (o == "cap") sub->add_option("--cap", cfg.cap, "largest index degree of t-variables");
      if (o == "expr") sub->add_option("--expr", cfg.expr, "expression such as \"[x^2y][xz] - 3[xy]^2\"");
      if (o == "id") sub->add_option("--id", cfg.table, "table number 1..6")->required();
      if (o == "certificates") sub->add_flag("--certificates", cfg.certificates, "include membership certificates");
    }
    sub->callback([&path, sub, parent] {
      path.clear();
      if (parent->get_parent() != nullptr) path.push_back(parent->get_name());
      path.push_back(sub->get_name());
    });
    return sub;
  };

  CLI::App* verify = app.add_subcommand("verify", "relation checks");
  verify->require_subcommand(1);
  leaf(verify, "psi", "phi kills every Psi up to a total degree", {"n", "m", "max-degree"});
  leaf(verify, "gram", "the Gram relation for n rows", {"n"});
  leaf(verify, "j32", "both constructions of J32", {"m"});
  leaf(verify, "j42", "both constructions of J42", {"m"});
  leaf(verify, "catalog", "relation catalog", {});
  leaf(&app, "hwv", "highest weight test", {"m", "cap", "expr"});
  leaf(&app, "orbit-span", "gl_m spans of the degree 5 and 6 relations", {"m"});
  CLI::App* decompose = app.add_subcommand("decompose", "Schur decompositions");
  decompose->require_subcommand(1);
  for (const char* which : {"kernel", "F", "R"}) leaf(decompose, which, "degree slice decomposition", {"n", "m", "degree"});
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series");
  hilbert->require_subcommand(1);
  leaf(hilbert, "secondary", "secondary generator series", {"m", "truncate"});
  leaf(hilbert, "molien", "invariant count series", {"n", "m", "truncate"});
  leaf(hilbert, "hironaka-check", "free-module identity for three rows", {"m", "truncate"});
  CLI::App* tables = app.add_subcommand("tables", "table verification");
  tables->require_subcommand(1);
  leaf(tables, "verify", "verify a table", {"id", "certificates"});
  CLI::App* secondary = app.add_subcommand("secondary", "secondary generators");
  secondary->require_subcommand(1);
  leaf(secondary, "build", "greedy construction", {"m", "max-degree"});
  CLI::App* generation = app.add_subcommand("generation", "kernel generation");
  generation->require_subcommand(1);
  leaf(generation, "check", "generation through a degree", {"m", "max-degree"});
  CLI::App* minimality = app.add_subcommand("minimality", "minimal generation");
  minimality->require_subcommand(1);
  leaf(minimality, "check", "minimality in degrees 5 and 6", {"m"});
  leaf(&app, "lowerbound", "Gram relation outside the decomposable part", {"n"});
  leaf(&app, "reduce", "membership of phi(expr) in (P)", {"n", "m", "expr", "certificates"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Report report;
  try {
    cfg.command = path;
    cfg.format = parse_format(format);
    report = run(cfg);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  const std::string text = render(report, cfg.format);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    file << text;
    out << report.command << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? 0 : 1;
}

}  // namespace polysym
