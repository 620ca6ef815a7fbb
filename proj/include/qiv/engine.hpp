#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qiv/param.hpp"
#include "qiv/qfunc.hpp"

namespace qiv {

// One term-level Pochhammer factor (base; q)_{k + shift}, shift in {0, 1}.
struct PochFactor {
  ParamExpr base;
  int shift = 0;
};

// Per-term exponent a*k(k-1)/2 + b*k.  Covers q^{binom(k,2)} (a=1,b=0),
// q^{binom(k+1,2)} (a=1,b=1), q^{k(3k-1)/2} (a=3,b=1), q^{k(3k+1)/2} (a=3,b=2)
// and the triple-binomial shape (a=3,b=0) from simultaneous degenerations.
struct QuadExp {
  int a = 0;
  long long b = 0;
  long long at(long long k) const { return a * (k * (k - 1) / 2) + b * k; }
};

enum class SumKind { Unilateral, Bilateral };

/*
 * A unilateral phi-type or bilateral psi-type sum
 *
 *   sum_k  q^{quad(k)} (1 - u q^{2k}) prod_i (B_i;q)_{k+s_i} / prod_j (C_j;q)_{k+t_j} * z^k
 *
 * optionally divided by (1 - v) (the very-well-poised normalizer).  Sign
 * factors (-1)^k are folded into z's coefficient.  Nothing is implicit:
 * when a definition carries (q;q)_k it is listed among the denominators.
 */
struct SeriesSpec {
  SumKind kind = SumKind::Unilateral;
  QuadExp quad{};
  std::vector<PochFactor> num, den;
  ParamExpr arg = ParamExpr::constant(1);
  std::optional<ParamExpr> kernel;       // (1 - u q^{2k}) factor
  std::optional<ParamExpr> kernel_norm;  // divide the sum by (1 - v)
};

// Exact admissibility analysis of one summation direction.  The q-order of
// the k-th term is eventually an exact quadratic; twoA/twoB are its doubled
// leading coefficients (order ~ (twoA/2) k^2 + (twoB/2) k).
struct DirectionReport {
  bool admissible = false;
  bool terminating = false;
  long long last_index = -1;  // largest contributing k (positive) / j (negative, k = -1-j)
  bool pole = false;          // a used denominator factor vanishes / numerator factor blows up
  long long pole_index = 0;
  long long twoA = 0;
  long long twoB = 0;
};

struct GrowthVerdict {
  DirectionReport pos;
  DirectionReport neg;  // meaningful for Bilateral only
  bool admissible = false;
  std::string detail;  // reason when not admissible or a pole was detected
};

// Classification of a single term without building its series.
struct TermClass {
  enum class Kind { Finite, Zero, Pole } kind;
  long long order = 0;  // q-order, valid for Finite
};

// The formal-series stand-in for analytic convergence conditions: a spec is
// admissible iff every direction terminates or has term q-order -> +inf.
GrowthVerdict growth_check(const SeriesSpec& spec, const Assignment& asg);

TermClass classify_term(const SeriesSpec& spec, const Assignment& asg, long long k);

// Exact value of the k-th term through order N (zero series for a vanishing
// term; PoleInTerm when the term divides by zero or multiplies by an
// identically-infinite negative-index Pochhammer).
LaurentSeries term_value(const SeriesSpec& spec, const Assignment& asg, long long k, long long N);

// Exact truncated sums.  Negative bilateral indices are evaluated through the
// negative-index Pochhammer rewrite (the k -> -k-1 reindexing).
// Errors: PoleInTerm, InadmissibleSeries.
LaurentSeries sum_unilateral(const SeriesSpec& spec, const Assignment& asg, long long N);
LaurentSeries sum_bilateral(const SeriesSpec& spec, const Assignment& asg, long long N);
LaurentSeries sum_spec(const SeriesSpec& spec, const Assignment& asg, long long N);

/*
 * Very-well-poised builder.  head plays the classical "a": the pair of
 * +-q*sqrt(a) numerator and +-sqrt(a) denominator parameters is never
 * materialized; their joint contribution is exactly the kernel
 * (1 - a q^{2k})/(1 - a), so the output spec carries kernel = kernel_norm =
 * head.  Unilateral kind lists head among the numerators and q among the
 * denominators (phi convention); bilateral lists neither (psi convention).
 * The head must evaluate to a perfect-square monomial (square coefficient,
 * even exponent) or NotAPerfectSquare is raised.
 */
struct VWPSpec {
  ParamExpr head;
  std::vector<ParamExpr> tail;
  ParamExpr arg = ParamExpr::constant(1);
  SumKind kind = SumKind::Unilateral;
};

SeriesSpec build_vwp(const VWPSpec& spec, const Assignment& asg);

}  // namespace qiv
