#pragma once

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "qiv/engine.hpp"

namespace qiv {

// Arbitrary-precision real; working precision is set per call from NumericConfig.
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Minimal complex arithmetic over Real: just what the evaluators need.
struct Complex {
  Real re{0}, im{0};

  Complex() = default;
  Complex(const Real& r) : re(r) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r) : re(r) {}
  Complex(double r, double i) : re(r), im(i) {}

  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const;
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  bool is_zero() const { return re == 0 && im == 0; }
  std::string str(unsigned digits = 20) const;
};

Real abs(const Complex& z);
bool is_finite(const Complex& z);
Complex cpow(const Complex& base, long long e);  // integer powers; e < 0 inverts

struct NumericConfig {
  unsigned precision_bits = 160;
  double tol = 1e-9;                // relative tolerance for verdicts
  long long max_terms = 5000;       // hard summation cap
  double tail_ratio_cutoff = 0.99;  // persistent term ratios above this fail
};

// Sets the working precision of newly constructed Reals; returns the previous
// value in bits.  Evaluators call this themselves from cfg.
unsigned set_precision_bits(unsigned bits);

// Complex values for the parameter slots together with the evaluation point q.
struct NumAssignment {
  Complex q;
  std::array<std::optional<Complex>, kSlotCount> val;
  std::array<std::optional<long long>, kIntSlotCount> ints;

  NumAssignment& set(Slot s, const Complex& v) {
    val[static_cast<int>(s)] = v;
    return *this;
  }
  NumAssignment& set(IntSlot s, long long v) {
    ints[static_cast<int>(s)] = v;
    return *this;
  }
  const Complex& get(Slot s) const;  // BadInput when unset
  long long get(IntSlot s) const;

  // Evaluate every monomial of an exact assignment at the point q0.
  static NumAssignment from_exact(const Assignment& asg, const Complex& q0);
};

// (a;q^step)_idx as a complex number.  Finite negative indices use the
// reciprocal rewrite; the infinite product stops once |a q^{step k}| drops
// below 2^{1-precision_bits}.  Errors: BadInput (|q| >= 1, step), NonFinite.
Complex eval_poch_num(const Complex& a, PochIndex idx, const Complex& q, long long step,
                      const NumericConfig& cfg);

Complex eval_param_num(const ParamExpr& p, const NumAssignment& asg);

// Numeric sum of a SeriesSpec.  Positive direction stops after three
// consecutive terms below tol*2^-10 relative to the partial sum; bilateral
// sums evaluate the negative direction independently through the k -> -k-1
// rewrite.  Errors: NoConvergence, PoleInTerm, NonFinite.
Complex eval_sum_num(const SeriesSpec& spec, const NumAssignment& asg,
                     const NumericConfig& cfg);

// Value of a truncated exact series at a point (plain polynomial evaluation).
Complex eval_series_at(const LaurentSeries& s, const Complex& q0);

// |lhs - rhs| / max(|lhs|, |rhs|, 1)
Real residual_relative(const Complex& lhs, const Complex& rhs);

}  // namespace qiv
