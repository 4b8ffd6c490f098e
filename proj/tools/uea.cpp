// Command-line front end: catalog listing, verification suites, invariant
// bases. Text output is human-oriented; --format json emits the stable
// report schema.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uea/center_lab.hpp"
#include "uea/expr.hpp"
#include "uea/invariants.hpp"
#include "uea/lie.hpp"
#include "uea/linalg.hpp"
#include "uea/report.hpp"

namespace {

using namespace uea;

uint32_t next_prime_at_least(uint32_t n) {
  while (!Fp::is_prime(n)) ++n;
  return n;
}

/// Primes auto-selected per family: the smallest valid prime (>= max(2,
/// class)) and the next one after it. The characteristic-2-only family
/// admits p = 2 alone.
std::vector<uint32_t> auto_primes(const LieAlgebraSpec& fam) {
  if (fam.param == ParamKind::eps_char2) return {2};
  uint32_t q0 = next_prime_at_least(std::max(2u, static_cast<uint32_t>(fam.nilpotency_class)));
  uint32_t q1 = next_prime_at_least(q0 + 1);
  return {q0, q1};
}

/// Parameter values to run at prime p. Explicit --eps wins; otherwise
/// unit-constrained families default to 1, field-valued families to {0, 1},
/// and the exhaustive sweep uses {1, 2} reduced mod p.
std::vector<std::optional<uint32_t>> eps_values(const LieAlgebraSpec& fam, uint32_t p,
                                                std::optional<uint32_t> explicit_eps,
                                                bool sweep_defaults) {
  if (!fam.parametric()) return {std::nullopt};
  if (explicit_eps) return {explicit_eps};
  std::vector<uint32_t> raw;
  if (sweep_defaults)
    raw = {1, 2};
  else if (fam.param == ParamKind::eps_nonzero)
    raw = {1};
  else
    raw = {0, 1};
  std::vector<std::optional<uint32_t>> out;
  for (uint32_t v : raw) {
    uint32_t r = v % p;
    if (fam.param == ParamKind::eps_nonzero && r == 0) continue;
    std::optional<uint32_t> cand = r;
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  return out;
}

/// Both verification suites on one instance, merged into a single report.
VerificationReport run_suites(const LieAlgebraPtr& alg, int sweep_bound, int membership_bound) {
  VerificationReport rep = verify_center_description(alg, sweep_bound, membership_bound);
  VerificationReport inv = verify_invariant_correspondence(alg);
  rep.claims.insert(rep.claims.end(), inv.claims.begin(), inv.claims.end());
  rep.sort_claims();
  return rep;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot write " + output_path);
  out << text;
}

std::string claim_counts(const VerificationReport& r) {
  size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::pass) ++pass;
    if (c.status == ClaimStatus::fail) ++fail;
    if (c.status == ClaimStatus::skipped) ++skip;
  }
  std::string s = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail";
  if (skip) s += ", " + std::to_string(skip) + " skipped";
  return s;
}

std::string reports_as_text(const std::vector<VerificationReport>& reports) {
  std::string text;
  size_t failures = 0;
  for (const auto& r : reports) {
    text += to_text(r);
    failures += r.failed_count();
  }
  text += "instances: " + std::to_string(reports.size()) + ", failed claims: " +
          std::to_string(failures) + "\n";
  return text;
}

std::string reports_as_json(const std::vector<VerificationReport>& reports) {
  if (reports.size() == 1) return to_json(reports.front());
  return to_json(reports);
}

int report_exit(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_passed()) return 1;
  return 0;
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
  std::string text;
  size_t failures = 0;
  for (const auto& r : reports) {
    std::string tag = r.algebra + "  p=" + std::to_string(r.p);
    if (r.eps) tag += "  eps=" + std::to_string(*r.eps);
    while (tag.size() < 28) tag += ' ';
    text += tag + "  " + claim_counts(r) + "\n";
    failures += r.failed_count();
  }
  text += "instances: " + std::to_string(reports.size()) + ", failed claims: " +
          std::to_string(failures) + "\n";
  return text;
}

std::string center_vars_str(const LieAlgebraSpec& fam) {
  std::string s;
  for (int v : fam.center_vars) {
    if (!s.empty()) s += ", ";
    s += "x" + std::to_string(v);
  }
  return s;
}

int cmd_list(std::optional<int> dim, const std::string& format) {
  std::vector<const LieAlgebraSpec*> rows;
  for (const auto& fam : catalog())
    if (!dim || fam.dim == *dim) rows.push_back(&fam);

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto* fam : rows) {
      nlohmann::json j;
      j["name"] = fam->name;
      j["dim"] = fam->dim;
      j["relations"] = fam->relations_str();
      switch (fam->param) {
        case ParamKind::none: j["param"] = nullptr; break;
        case ParamKind::eps_any: j["param"] = "any"; break;
        case ParamKind::eps_nonzero: j["param"] = "nonzero"; break;
        case ParamKind::eps_char2: j["param"] = "char2"; break;
      }
      j["center"] = fam->center_vars;
      j["class"] = fam->nilpotency_class;
      j["rank"] = fam->rank_mult_matrix;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }

  size_t wname = 4, wrel = 9, wcen = 6;
  for (const auto* fam : rows) {
    wname = std::max(wname, fam->name.size());
    wrel = std::max(wrel, fam->relations_str().size());
    wcen = std::max(wcen, center_vars_str(*fam).size());
  }
  auto pad = [](std::string s, size_t w) {
    while (s.size() < w + 2) s += ' ';
    return s;
  };
  std::cout << pad("name", wname) << "dim  " << pad("relations", wrel) << pad("center", wcen)
            << "class  rank\n";
  for (const auto* fam : rows)
    std::cout << pad(fam->name, wname) << pad(std::to_string(fam->dim), 3)
              << pad(fam->relations_str(), wrel) << pad(center_vars_str(*fam), wcen)
              << pad(std::to_string(fam->nilpotency_class), 5) << fam->rank_mult_matrix << "\n";
  return 0;
}

struct VerifyOptions {
  std::string name;
  std::string algebra_file;
  std::optional<uint32_t> p;
  std::optional<uint32_t> eps;
  int sweep_bound = 0;
  int membership_bound = 0;
  std::string format = "text";
  std::string output;
};

int cmd_verify(const VerifyOptions& opt) {
  std::vector<VerificationReport> reports;

  if (!opt.algebra_file.empty()) {
    std::ifstream in(opt.algebra_file);
    if (!in) throw std::runtime_error("cannot read " + opt.algebra_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string stem = opt.algebra_file;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    LieAlgebraSpec spec = parse_algebra_file(ss.str(), stem);
    if (!opt.p) throw std::invalid_argument("--p is required with --algebra-file");
    LieAlgebraPtr alg = instantiate(spec, *opt.p, opt.eps);
    reports.push_back(run_suites(alg, opt.sweep_bound, opt.membership_bound));
  } else {
    const LieAlgebraSpec* fam = find_family(opt.name);
    if (!fam) throw std::invalid_argument("unknown algebra " + opt.name);
    std::vector<uint32_t> primes = opt.p ? std::vector<uint32_t>{*opt.p} : auto_primes(*fam);
    for (uint32_t p : primes)
      for (const auto& e : eps_values(*fam, p, opt.eps, false))
        reports.push_back(run_suites(lookup(opt.name, p, e), opt.sweep_bound, opt.membership_bound));
  }

  emit(opt.format == "json" ? reports_as_json(reports) : reports_as_text(reports), opt.output);
  return report_exit(reports);
}

int cmd_verify_all(bool only_catalogued, const std::string& format, const std::string& output) {
  std::vector<VerificationReport> reports;
  for (const auto& fam : catalog()) {
    if (only_catalogued) {
      bool has = false;
      for (const auto& r : center_generator_table())
        if (r.algebra == fam.name) has = true;
      if (!has) continue;
    }
    for (uint32_t p : auto_primes(fam))
      for (const auto& e : eps_values(fam, p, std::nullopt, true))
        reports.push_back(run_suites(lookup(fam.name, p, e), 0, 0));
  }
  emit(format == "json" ? reports_as_json(reports) : summary_table(reports), output);
  return report_exit(reports);
}

int cmd_rational_check(uint32_t p, const std::string& format, const std::string& output) {
  VerificationReport rep = verify_rational_generators(p);
  std::vector<VerificationReport> reports = {rep};
  emit(format == "json" ? reports_as_json(reports) : reports_as_text(reports), output);
  return report_exit(reports);
}

struct InvariantsOptions {
  std::string name;
  uint32_t p = 0;
  std::optional<uint32_t> eps;
  int degree = 0;
  std::string format = "text";
  std::string output;
};

int cmd_invariants(const InvariantsOptions& opt) {
  LieAlgebraPtr alg = lookup(opt.name, opt.p, opt.eps);
  InvariantBasis basis = invariant_basis(*alg, opt.degree);
  PCenterFrame frame = p_center_frame(alg);

  auto in_pcenter_poly = [&](const Poly& f) {
    for (const auto& [m, c] : f.terms()) {
      (void)c;
      for (int i : frame.noncentral)
        if (m.e[static_cast<size_t>(i)] % alg->p() != 0) return false;
    }
    return true;
  };

  // Catalogued generators matched modulo the p-center span of their degree.
  std::vector<std::pair<std::string, Poly>> named;
  for (const auto& r : center_generator_table()) {
    if (r.algebra != alg->name()) continue;
    ParseEnv env;
    env.p = alg->p();
    env.nvars = alg->dim();
    env.eps = alg->eps();
    for (size_t i = 0; i < r.generators.size(); ++i)
      named.emplace_back("z" + std::to_string(i + 1), parse_poly(r.generators[i], env));
  }
  auto matches_named = [&](const Poly& f) -> std::string {
    int d = f.total_degree();
    if (d < 0 || in_pcenter_poly(f)) return "";
    std::vector<Monomial> monos = monomials_of_degree(alg->dim(), d);
    std::vector<Monomial> pmonos;
    for (const auto& m : monos) {
      bool ok = true;
      for (int i : frame.noncentral)
        if (m.e[static_cast<size_t>(i)] % alg->p() != 0) ok = false;
      if (ok) pmonos.push_back(m);
    }
    auto coords = [&](const Poly& g) {
      std::vector<uint32_t> v(monos.size(), 0);
      for (size_t c = 0; c < monos.size(); ++c) v[c] = g.coeff(monos[c]);
      return v;
    };
    for (const auto& [tag, z] : named) {
      if (z.total_degree() != d) continue;
      FpMat span(alg->field(), pmonos.size() + 1, monos.size());
      for (size_t r = 0; r < pmonos.size(); ++r) {
        size_t c = static_cast<size_t>(
            std::find(monos.begin(), monos.end(), pmonos[r]) - monos.begin());
        span.at(r, c) = 1;
      }
      auto zc = coords(z);
      for (size_t c = 0; c < monos.size(); ++c) span.at(pmonos.size(), c) = zc[c];
      if (in_row_space(span, coords(f))) return tag;
    }
    return "";
  };

  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["algebra"] = alg->name();
    j["p"] = alg->p();
    if (alg->eps())
      j["eps"] = *alg->eps();
    else
      j["eps"] = nullptr;
    j["degree_bound"] = basis.degree_bound;
    j["dim_by_degree"] = basis.dim_by_degree;
    j["basis"] = nlohmann::json::array();
    for (const auto& f : basis.elems) {
      nlohmann::json e;
      e["degree"] = f.total_degree();
      e["poly"] = f.str();
      e["p_center"] = in_pcenter_poly(f);
      std::string tag = matches_named(f);
      if (tag.empty())
        e["matches"] = nullptr;
      else
        e["matches"] = tag;
      j["basis"].push_back(e);
    }
    emit(j.dump(2), opt.output);
    return 0;
  }

  std::string text = alg->name() + "  p=" + std::to_string(alg->p());
  if (alg->eps()) text += "  eps=" + std::to_string(*alg->eps());
  text += "  invariants up to degree " + std::to_string(opt.degree) + "\n";
  text += "dim by degree:";
  for (size_t d = 0; d < basis.dim_by_degree.size(); ++d)
    text += " " + std::to_string(basis.dim_by_degree[d]);
  text += "\n";
  for (const auto& f : basis.elems) {
    text += "  deg " + std::to_string(f.total_degree()) + "  " + f.str();
    if (in_pcenter_poly(f)) text += "  [p-center]";
    std::string tag = matches_named(f);
    if (!tag.empty()) text += "  [matches " + tag + " mod p-center]";
    text += "\n";
  }
  emit(text, opt.output);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"center and invariant laboratory for enveloping algebras of "
               "nilpotent Lie algebras over F_p"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* list = app.add_subcommand("list", "print the built-in catalog");
  std::optional<int> list_dim;
  std::string list_format = "text";
  list->add_option("--dim", list_dim, "restrict to one dimension");
  list->add_option("--format", list_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  list->callback([&] { exit_code = cmd_list(list_dim, list_format); });

  auto* verify = app.add_subcommand("verify", "run the verification suites on one family");
  VerifyOptions vo;
  verify->add_option("name", vo.name, "catalog family, e.g. g_5_5");
  verify->add_option("--algebra-file", vo.algebra_file, "custom structure-constant file");
  verify->add_option("--p", vo.p, "prime (default: two smallest valid primes)");
  verify->add_option("--eps", vo.eps, "parameter value for parametric families");
  verify->add_option("--sweep-bound", vo.sweep_bound, "override the centrality sweep degree bound");
  verify->add_option("--membership-bound", vo.membership_bound,
                     "override the subalgebra membership degree bound");
  verify->add_option("--format", vo.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", vo.output, "write the report here instead of stdout");
  verify->callback([&] {
    if (vo.name.empty() == vo.algebra_file.empty())
      throw CLI::ValidationError("verify", "give exactly one of a family name or --algebra-file");
    exit_code = cmd_verify(vo);
  });

  auto* all = app.add_subcommand("verify-all", "run the verification suites on the whole catalog");
  bool only_catalogued = false;
  std::string all_format = "text", all_output;
  all->add_flag("--only-catalogued", only_catalogued,
                "restrict to families with catalogued center generators");
  all->add_option("--format", all_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  all->add_option("--output", all_output, "write the report here instead of stdout");
  all->callback([&] { exit_code = cmd_verify_all(only_catalogued, all_format, all_output); });

  auto* rat = app.add_subcommand(
      "rational-check", "check centrality of the rational center generators for g_5_5");
  uint32_t rat_p = 0;
  std::string rat_format = "text", rat_output;
  rat->add_option("--p", rat_p, "prime, 5 or 7")->required();
  rat->add_option("--format", rat_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rat->add_option("--output", rat_output, "write the report here instead of stdout");
  rat->callback([&] { exit_code = cmd_rational_check(rat_p, rat_format, rat_output); });

  auto* inv = app.add_subcommand("invariants", "print a basis of polynomial invariants");
  InvariantsOptions io;
  inv->add_option("name", io.name, "catalog family")->required();
  inv->add_option("--p", io.p, "prime")->required();
  inv->add_option("--eps", io.eps, "parameter value for parametric families");
  inv->add_option("--degree", io.degree, "degree bound")->required();
  inv->add_option("--format", io.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  inv->add_option("--output", io.output, "write the listing here instead of stdout");
  inv->callback([&] { exit_code = cmd_invariants(io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
