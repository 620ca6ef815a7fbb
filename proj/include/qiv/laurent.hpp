#pragma once

#include <map>
#include <optional>
#include <string>

#include "qiv/errors.hpp"
#include "qiv/rational.hpp"

namespace qiv {

// Monomial r*q^m over the rationals.  Zero is canonically {0, q^0}.
struct QMonomial {
  Rational coeff;
  long long exp = 0;

  QMonomial() : coeff(0) {}
  QMonomial(Rational c, long long e) : coeff(std::move(c)), exp(e) {
    if (coeff == 0) exp = 0;
  }

  bool is_zero() const { return coeff == 0; }
  bool is_one() const { return coeff == 1 && exp == 0; }
  // True iff the monomial is exactly q^e (unit coefficient).
  bool is_q_power(long long e) const { return coeff == 1 && exp == e; }

  QMonomial operator-() const { return QMonomial(-coeff, exp); }
  QMonomial operator*(const QMonomial& o) const {
    if (is_zero() || o.is_zero()) return QMonomial();
    return QMonomial(coeff * o.coeff, exp + o.exp);
  }
  QMonomial operator/(const QMonomial& o) const {
    if (o.is_zero()) raise(Err::DivisionByZeroSeries, "monomial division by zero");
    if (is_zero()) return QMonomial();
    return QMonomial(coeff / o.coeff, exp - o.exp);
  }
  bool operator==(const QMonomial& o) const { return coeff == o.coeff && exp == o.exp; }

  QMonomial pow(long long e) const;

  std::string str() const;  // "r*q^m"
};

std::optional<QMonomial> monomial_parse(const std::string& s);

// Truncated Laurent series over Q.  Stored coefficients are exact for every
// exponent <= trunc_order() and unspecified above it; zero coefficients are
// never stored.  min_order() is the smallest exponent that can carry a nonzero
// coefficient: the leading stored exponent, or trunc_order()+1 for the series
// that is zero through its truncation.  Every operation computes the tightest
// truncation order its output is guaranteed through; consumers must check it.
class LaurentSeries {
 public:
  LaurentSeries() : trunc_(-1) {}
  explicit LaurentSeries(long long trunc) : trunc_(trunc) {}
  LaurentSeries(const QMonomial& m, long long trunc);

  long long trunc_order() const { return trunc_; }
  long long min_order() const { return c_.empty() ? trunc_ + 1 : c_.begin()->first; }
  bool is_zero() const { return c_.empty(); }
  const std::map<long long, Rational>& coeffs() const { return c_; }

  // Coefficient of q^e; zero if absent, OrderExceeded above the truncation.
  const Rational& coeff(long long e) const;

  // True iff the series is exactly the single monomial m (within truncation).
  bool is_monomial(const QMonomial& m) const;
  // The leading term, if any.
  std::optional<QMonomial> leading() const;

  // Caller asserts the series has no nonzero coefficients above the current
  // truncation (exact polynomials only); extends the guarantee to n.
  LaurentSeries assume_exact_through(long long n) const;

  // Drops knowledge above n (n <= trunc is a plain restriction).
  LaurentSeries truncated(long long n) const;

  // Multiply by q^m / by a rational constant; exact, truncation shifts with m.
  LaurentSeries shifted(long long m) const;
  LaurentSeries scaled(const Rational& r) const;

  void set(long long e, const Rational& v);  // respects truncation, drops zeros

  std::string str() const;

 private:
  std::map<long long, Rational> c_;
  long long trunc_;
};

// r*q^m known exactly through order N.
LaurentSeries make_monomial(const Rational& r, long long m, long long N);
LaurentSeries series_one(long long N);
LaurentSeries series_zero(long long N);

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_neg(const LaurentSeries& a);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

// a / b.  b must have a detectable leading term (DivisionByZeroSeries
// otherwise).  Factors b = lead * (1 + h) and expands the geometric inverse;
// the result is guaranteed through min(N_a + m_b, N_b - 2 m_b + m_a) where
// m_* are leading orders.
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_inv(const LaurentSeries& b);

// x^e for integer e (negative uses series_inv).
LaurentSeries series_pow(const LaurentSeries& a, long long e);

Rational coeff_through(const LaurentSeries& s, long long n);
// True iff every coefficient with exponent <= n vanishes; OrderExceeded if
// n exceeds the guaranteed truncation.
bool is_zero_through(const LaurentSeries& s, long long n);

// Deterministic cost meter: series_mul and series_inv count the coefficient
// multiplications they perform.  While a budget is armed, crossing the limit
// raises NoConvergence ("exact work budget exceeded"), so callers can bound
// the cost of pathological parameter points without wall-clock dependence.
// Budgets nest; work done under an inner budget also counts toward the outer.
unsigned long long series_work_used();

class SeriesWorkBudget {
 public:
  explicit SeriesWorkBudget(unsigned long long limit);  // 0 = unlimited
  ~SeriesWorkBudget();
  SeriesWorkBudget(const SeriesWorkBudget&) = delete;
  SeriesWorkBudget& operator=(const SeriesWorkBudget&) = delete;

 private:
  unsigned long long prev_limit_;
  unsigned long long prev_used_;
};

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return series_add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return series_sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return series_neg(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return series_mul(a, b); }
inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return series_div(a, b); }

}  // namespace qiv
