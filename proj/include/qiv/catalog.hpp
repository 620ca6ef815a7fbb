#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qiv/engine.hpp"
#include "qiv/numeric.hpp"

namespace qiv {

enum class Backend { Exact, Numeric };

// ---------------------------------------------------------------------------
// Named series families
// ---------------------------------------------------------------------------

// Representations of the reciprocal sums rho(arity).
//   arity 2: Direct only.
//   arity 4: RepA / RepB / RepC, three equivalent shapes of the same sum.
//   arity 5: Direct; Rho0 (Direct = (1 + 1/b) * Rho0 holds term by term);
//            Terminating, valid when one of c, -aq/d, -aq/e equals q^{-m}.
enum class RhoRep { Direct, Rho0, RepA, RepB, RepC, Terminating };
const char* rho_rep_name(RhoRep rep);

// The summation part of the representation with slots still symbolic.
// Rational prefactors are separate; see rho_prefactor.
SeriesSpec rho_series_spec(int arity, RhoRep rep);

// Prefactor as a series through order N: (1 + 1/b) for arity 2, RepA, RepC
// and for arity-5 Direct; 1 for RepB and Rho0;
// (1 + b) / ((b + c)(1 - de/(abq))) for Terminating.
LaurentSeries rho_prefactor(int arity, RhoRep rep, const Assignment& asg, long long N);

// Full value prefactor * sum, exact through order N.  Raises PoleInTerm /
// InadmissibleSeries from the summation engine, and TerminationRequired for
// the Terminating representation when no parameter has the q^{-m} form.
LaurentSeries rho_exact(int arity, RhoRep rep, const Assignment& asg, long long N);

// Numeric counterpart at asg.q.  The Terminating representation reads the
// cutoff from the integer slot m and sums k = 0..m explicitly.
Complex rho_num(int arity, RhoRep rep, const NumAssignment& asg, const NumericConfig& cfg);

// xi(a, x): SumForm is sum_k (a;q)_k x^k, BinomForm the equivalent
// sum_k q^{k(k-1)/2} (-ax)^k / (x;q)_{k+1}.
enum class XiForm { SumForm, BinomForm };
const char* xi_form_name(XiForm form);
SeriesSpec xi_series_spec(XiForm form);
LaurentSeries xi_exact(XiForm form, const Assignment& asg, long long N);
Complex xi_num(XiForm form, const NumAssignment& asg, const NumericConfig& cfg);

// k-th term of the scaled-limit collapses of the five-parameter sum: one
// parameter sent to zero against its Pochhammer factor (four slots a,b,c,d
// survive) or three sent to zero (slots a,b survive).  Exact series through
// order N, built with poch_scaled_limit rather than small numeric values.
LaurentSeries degen54_term(const Assignment& asg, long long k, long long N);
LaurentSeries degen52_term(const Assignment& asg, long long k, long long N);

// Swap the contents of slots a and b (the transposition every reciprocal
// difference is built from).
Assignment swapped_ab(const Assignment& asg);
NumAssignment swapped_ab(const NumAssignment& asg);

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

enum class SlotSort { MonomialParam, IntegerParam };

struct ParamSlotDecl {
  std::string name;        // one of a..w for monomial slots, r,s,m,n for integers
  SlotSort sort = SlotSort::MonomialParam;
  std::string constraint;  // human-readable admissibility notes for this slot
};

struct IdentityEntry {
  std::string id;
  std::string anchor;      // where the source text states the identity
  std::string summary;     // one-line statement of the claim
  std::vector<ParamSlotDecl> slots;
  bool exact = true;
  bool numeric = true;

  // Assignments known to satisfy the constraints (exact ones are admissible
  // for series evaluation; numeric ones are monomials in q, instantiated at
  // the run's base point).
  std::vector<Assignment> suggested_exact;
  std::vector<Assignment> suggested_numeric;

  // Structural constraint check; nullopt means satisfied, otherwise a
  // message naming the violated condition.  May assume all slots are set.
  std::function<std::optional<std::string>(const Assignment&)> check;
  // Numeric-region predicate (convergence conditions at a concrete q).
  std::function<std::optional<std::string>(const NumAssignment&)> check_num;

  // Independent evaluators for the two sides.  Exact results are truncated
  // to exactly the requested order.
  std::function<LaurentSeries(const Assignment&, long long)> lhs_exact;
  std::function<LaurentSeries(const Assignment&, long long)> rhs_exact;
  std::function<Complex(const NumAssignment&, const NumericConfig&)> lhs_num;
  std::function<Complex(const NumAssignment&, const NumericConfig&)> rhs_num;
};

// The full immutable catalog, in a fixed order.
const std::vector<IdentityEntry>& catalog();
// Lookup by id; nullptr when unknown.
const IdentityEntry* find_identity(const std::string& id);
// Lookup by id; raises BadInput when unknown.
const IdentityEntry& catalog_entry(const std::string& id);

struct ExactPair {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

// Evaluate both sides independently, exact through order N.  Raises BadInput
// for an unknown id or an entry without an exact backend,
// ConstraintViolation when a slot is missing or check() rejects, plus
// whatever the evaluators raise.
ExactPair evaluate_identity(const std::string& id, const Assignment& asg, long long N);
// lhs - rhs through exactly order N; is_zero_through(N) is the verdict.
LaurentSeries residual(const std::string& id, const Assignment& asg, long long N);

struct NumericPair {
  Complex lhs;
  Complex rhs;
};

NumericPair evaluate_identity_num(const std::string& id, const NumAssignment& asg,
                                  const NumericConfig& cfg);
// |lhs - rhs| / max(|lhs|, |rhs|, 1).
Real residual_num(const std::string& id, const NumAssignment& asg, const NumericConfig& cfg);

}  // namespace qiv
