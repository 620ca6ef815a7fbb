// Command-line front end for the q-series identity verifier.
//
//   qiv list [--json]
//   qiv verify <id|all> [--backend exact|numeric|both] [--order N] [--tol T]
//              [--samples K] [--seed S] [--nome RE[,IM]] [--json PATH]
//              [--no-suggested]
//   qiv coeffs <id> --assign "a=2, b=3*q^2, r=4" [--order N]
//   qiv compare-rho --arity 4|5 [--assign "..."] [--order N]
//
// verify exits 0 when no report fails; skipped reports do not fail a run.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qiv/errors.hpp"
#include "qiv/harness.hpp"
#include "qiv/rational.hpp"

namespace {

using namespace qiv;

Complex parse_nome(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(Real(text));
    return Complex(Real(text.substr(0, comma)), Real(text.substr(comma + 1)));
  } catch (const std::exception&) {
    raise(Err::BadInput, "bad nome (expected RE or RE,IM): " + text);
  }
}

std::string backends_of(const IdentityEntry& e) {
  if (e.exact && e.numeric) return "exact+numeric";
  return e.exact ? "exact" : "numeric";
}

int run_list(bool as_json) {
  if (as_json) {
    for (const IdentityEntry& e : catalog()) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["anchor"] = e.anchor;
      j["backends"] = backends_of(e);
      nlohmann::ordered_json slots = nlohmann::ordered_json::array();
      for (const ParamSlotDecl& d : e.slots) {
        nlohmann::ordered_json s;
        s["name"] = d.name;
        s["sort"] = d.sort == SlotSort::IntegerParam ? "integer" : "monomial";
        s["constraint"] = d.constraint;
        slots.push_back(std::move(s));
      }
      j["slots"] = std::move(slots);
      j["summary"] = e.summary;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  std::size_t idw = 2;
  for (const IdentityEntry& e : catalog()) idw = std::max(idw, e.id.size());
  for (const IdentityEntry& e : catalog()) {
    std::ostringstream slots;
    for (std::size_t i = 0; i < e.slots.size(); ++i)
      slots << (i ? "," : "") << e.slots[i].name;
    std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << e.id
              << std::setw(15) << backends_of(e) << std::setw(14) << e.anchor
              << "(" << slots.str() << ")  " << e.summary << "\n";
  }
  std::cout << catalog().size() << " identities\n";
  return 0;
}

void print_report(const VerificationReport& r) {
  std::ostringstream head;
  head << "[" << verdict_name(r.verdict) << "]";
  std::cout << std::left << std::setw(10) << head.str() << std::setw(14) << r.id
            << std::setw(9) << backend_name(r.backend) << "#" << std::setw(3)
            << r.sample_index;
  if (r.backend == Backend::Exact)
    std::cout << " order=" << r.order_or_tol;
  else
    std::cout << " tol=" << r.order_or_tol << " residual=" << r.residual;
  std::cout << "  " << std::fixed << std::setprecision(1) << r.wall_ms << " ms"
            << std::defaultfloat << "  " << r.assignment;
  if (!r.note.empty()) std::cout << "  (" << r.note << ")";
  std::cout << "\n";
}

int run_verify(const std::string& target, const std::string& backend_s, const SampleConfig& cfg,
               const std::string& json_path) {
  std::vector<Backend> backends;
  if (backend_s == "exact" || backend_s == "both") backends.push_back(Backend::Exact);
  if (backend_s == "numeric" || backend_s == "both") backends.push_back(Backend::Numeric);

  std::vector<VerificationReport> reports;
  for (Backend b : backends) {
    std::vector<VerificationReport> part =
        target == "all" ? verify_all(b, cfg) : verify_identity(target, b, cfg);
    reports.insert(reports.end(), part.begin(), part.end());
  }

  for (const VerificationReport& r : reports) print_report(r);

  std::size_t pass = 0, fail = 0, skip = 0;
  for (const VerificationReport& r : reports) {
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Fail) ++fail;
    else ++skip;
  }
  std::cout << reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << skip
            << " skipped (seed " << cfg.seed << ")\n";

  if (!json_path.empty()) {
    if (json_path == "-") {
      for (const VerificationReport& r : reports) std::cout << report_json_line(r) << "\n";
    } else {
      std::ofstream out(json_path);
      if (!out) raise(Err::BadInput, "cannot open JSON output path: " + json_path);
      for (const VerificationReport& r : reports) out << report_json_line(r) << "\n";
      std::cout << "wrote " << reports.size() << " JSON lines to " << json_path << "\n";
    }
  }
  return fail == 0 ? 0 : 1;
}

int run_coeffs(const std::string& id, const std::string& assign, long long order) {
  const Assignment asg = parse_assignment(assign);
  const ExactPair p = evaluate_identity(id, asg, order);
  std::cout << id << " at " << asg.str() << ", coefficients through q^" << order << "\n";
  const long long lo = std::min(p.lhs.min_order(), p.rhs.min_order());
  std::cout << std::left << std::setw(6) << "n" << std::setw(28) << "lhs" << std::setw(28)
            << "rhs" << "difference\n";
  long long first_diff = order + 1;
  for (long long n = std::min(lo, order); n <= order; ++n) {
    const Rational l = p.lhs.coeff(n);
    const Rational r = p.rhs.coeff(n);
    if (l == 0 && r == 0) continue;
    std::cout << std::left << std::setw(6) << n << std::setw(28) << rat_str(l) << std::setw(28)
              << rat_str(r) << rat_str(l - r) << "\n";
    if (l != r && first_diff > order) first_diff = n;
  }
  if (first_diff > order) {
    std::cout << "sides agree through q^" << order << "\n";
    return 0;
  }
  std::cout << "sides first differ at q^" << first_diff << "\n";
  return 1;
}

std::string series_head(const LaurentSeries& s, long long order) {
  return s.truncated(std::min(order, s.trunc_order())).str();
}

int run_compare_rho(int arity, const std::string& assign, long long order) {
  Assignment asg;
  if (!assign.empty()) {
    asg = parse_assignment(assign);
  } else {
    asg.set(Slot::a, QMonomial(Rational(2), 0)).set(Slot::b, QMonomial(Rational(3), 0));
    if (arity >= 4) {
      asg.set(Slot::c, QMonomial(Rational(1), 1)).set(Slot::d, QMonomial(Rational(1), 1));
    }
    if (arity == 5) asg.set(Slot::e, QMonomial(Rational(1), 1));
  }

  const std::vector<RhoRep> reps = arity == 4
                                       ? std::vector<RhoRep>{RhoRep::RepA, RhoRep::RepB,
                                                             RhoRep::RepC}
                                       : std::vector<RhoRep>{RhoRep::Direct, RhoRep::Rho0};
  std::cout << "rho (" << arity << " parameters) at " << asg.str() << ", through q^" << order
            << "\n";
  std::vector<LaurentSeries> values;
  for (RhoRep rep : reps) {
    LaurentSeries v = rho_exact(arity, rep, asg, order);
    std::cout << std::left << std::setw(13) << rho_rep_name(rep) << series_head(v, 10) << "\n";
    values.push_back(std::move(v));
  }

  bool ok = true;
  if (arity == 4) {
    for (std::size_t i = 1; i < values.size(); ++i)
      ok = ok && is_zero_through(series_sub(values[0], values[i]), order);
    std::cout << (ok ? "all representations agree" : "representations disagree") << " through q^"
              << order << "\n";
  } else {
    // The direct five-parameter series equals (1 + 1/b) times its rho0 form.
    LaurentSeries pref = series_add(series_one(order),
                                    series_inv(LaurentSeries(asg.get(Slot::b), order)));
    ok = is_zero_through(series_sub(values[0], series_mul(pref, values[1])), order);
    std::cout << (ok ? "direct == (1 + 1/b) * rho0 holds" : "prefactor relation fails")
              << " through q^" << order << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for a family of q-series reciprocity identities"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "list the identity catalog");
  bool list_json = false;
  list->add_flag("--json", list_json, "emit one JSON object per identity");

  CLI::App* verify = app.add_subcommand("verify", "verify one identity or the whole catalog");
  std::string target;
  verify->add_option("id", target, "identity id, or 'all'")->required();
  std::string backend_s = "both";
  verify->add_option("--backend", backend_s, "exact, numeric, or both (default)")
      ->check(CLI::IsMember({"exact", "numeric", "both"}));
  SampleConfig cfg;
  verify->add_option("--order", cfg.exact_order, "exact truncation order (default 40)");
  verify->add_option("--tol", cfg.numeric.tol, "numeric pass tolerance (default 1e-9)");
  verify->add_option("--samples", cfg.count, "random assignments per identity (default 3)");
  verify->add_option("--seed", cfg.seed, "sampling seed (default 1)");
  std::string nome = "0.3";
  verify->add_option("--nome", nome, "numeric evaluation point: RE or RE,IM (default 0.3)");
  std::string json_path;
  verify->add_option("--json", json_path, "write JSON lines to PATH ('-' for stdout)");
  bool no_suggested = false;
  verify->add_flag("--no-suggested", no_suggested, "skip the curated sample assignments");

  CLI::App* coeffs = app.add_subcommand("coeffs", "print both sides' coefficients");
  std::string coeffs_id, coeffs_assign;
  long long coeffs_order = 12;
  coeffs->add_option("id", coeffs_id, "identity id")->required();
  coeffs->add_option("--assign", coeffs_assign, "parameter assignment, e.g. \"a=2, b=3*q^2\"")
      ->required();
  coeffs->add_option("--order", coeffs_order, "truncation order (default 12)");

  CLI::App* cmp = app.add_subcommand("compare-rho", "compare rho-series representations");
  int cmp_arity = 4;
  std::string cmp_assign;
  long long cmp_order = 20;
  cmp->add_option("--arity", cmp_arity, "4 or 5")->required()->check(CLI::IsMember({4, 5}));
  cmp->add_option("--assign", cmp_assign, "parameter assignment (default sample point)");
  cmp->add_option("--order", cmp_order, "truncation order (default 20)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return run_list(list_json);
    if (verify->parsed()) {
      set_precision_bits(cfg.numeric.precision_bits);
      cfg.numeric_q = parse_nome(nome);
      cfg.include_suggested = !no_suggested;
      return run_verify(target, backend_s, cfg, json_path);
    }
    if (coeffs->parsed()) return run_coeffs(coeffs_id, coeffs_assign, coeffs_order);
    if (cmp->parsed()) return run_compare_rho(cmp_arity, cmp_assign, cmp_order);
  } catch (const qiv::EngineError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
