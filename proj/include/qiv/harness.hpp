#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qiv/catalog.hpp"

namespace qiv {

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);  // "pass" / "fail" / "skipped"

const char* backend_name(Backend b);  // "exact" / "numeric"

// Controls randomized sampling and the verification thresholds.
struct SampleConfig {
  std::uint64_t seed = 1;
  int count = 3;               // randomized assignments per identity
  long long exact_order = 40;  // truncation order for exact verification
  NumericConfig numeric;       // precision and pass tolerance for numeric runs
  Complex numeric_q = Complex(0.3);
  bool include_suggested = true;  // curated samples run before random ones
  int max_tries = 500;            // rejection-sampling budget per draw
  // Exact evaluations run under a deterministic coefficient-work budget of
  // work_budget_scale * (order + 8)^3; overruns become Skipped reports
  // instead of unbounded computations.  0 disables the guard.
  unsigned long long work_budget_scale = 400;
};

// Outcome of checking one identity at one assignment with one backend.
// Exact runs pass when the residual series vanishes through exact_order;
// numeric runs pass when the relative residual is below the tolerance.
struct VerificationReport {
  std::string id;
  std::string anchor;
  Backend backend = Backend::Exact;
  std::string assignment;
  Verdict verdict = Verdict::Skipped;
  std::string residual;      // exact: leading residual term or "0"; numeric: relative residual
  std::string order_or_tol;  // exact: verified order; numeric: pass tolerance
  std::uint64_t seed = 0;
  int sample_index = 0;
  double wall_ms = 0.0;
  std::string note;  // skip reason or extra failure context
};

// Draws `cfg.count` randomized admissible assignments for an identity by
// rejection sampling: candidate parameters come from small coefficient/exponent
// pools, must satisfy the entry's declared checks, and must survive a
// low-order evaluability probe.  Identities whose admissible region is too
// thin to hit at random (e.g. ones that require a terminating series) fall
// back to the curated samples.  With include_suggested the curated samples
// are prepended.  Deterministic for a fixed seed and identity.
std::vector<Assignment> sample_exact_assignments(const IdentityEntry& e, const SampleConfig& cfg);
std::vector<Assignment> sample_numeric_assignments(const IdentityEntry& e,
                                                   const SampleConfig& cfg);

// Verifies one identity (by catalog id) with the given backend.  Engine
// rejections become Skipped reports; nothing is thrown for individual
// assignments.  BadInput for unknown ids.
std::vector<VerificationReport> verify_identity(const std::string& id, Backend backend,
                                                const SampleConfig& cfg);

// Verifies every catalog identity that supports the backend, in catalog order.
std::vector<VerificationReport> verify_all(Backend backend, const SampleConfig& cfg);

// True when no report carries a Fail verdict (Skipped does not fail a run).
bool all_passed(const std::vector<VerificationReport>& reports);

// One JSON object per report, suitable for JSON Lines output.  Keys appear in
// a fixed order: id, anchor, backend, assignment, verdict, residual,
// order_or_tol, seed, sample_index, wall_ms, note.
std::string report_json_line(const VerificationReport& r);

// Parses "a=2, b=-1/3*q^2, r=4" into an assignment.  Monomial values accept
// the forms "r", "r*q^m", "q", "q^m", "-q", "-q^m"; integer slots take plain
// integers.  Raises BadInput on syntax errors or unknown slot names.
Assignment parse_assignment(const std::string& text);

}  // namespace qiv
