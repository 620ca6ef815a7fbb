#include "qiv/laurent.hpp"

#include <sstream>

namespace qiv {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case Err::OrderExceeded: return "OrderExceeded";
    case Err::PochInfiniteZero: return "PochInfiniteZero";
    case Err::InadmissibleSeries: return "InadmissibleSeries";
    case Err::PoleInTerm: return "PoleInTerm";
    case Err::NotAPerfectSquare: return "NotAPerfectSquare";
    case Err::TerminationRequired: return "TerminationRequired";
    case Err::NoConvergence: return "NoConvergence";
    case Err::NonFinite: return "NonFinite";
    case Err::ConstraintViolation: return "ConstraintViolation";
    case Err::NoAdmissibleSample: return "NoAdmissibleSample";
    case Err::BadInput: return "BadInput";
  }
  return "UnknownError";
}

Rational rat_pow(const Rational& r, long long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) raise(Err::DivisionByZeroSeries, "0 raised to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? Rational(1) / r : r;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::optional<Rational> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // validate: [-]digits[/digits]; GMP aborts on a zero denominator, so that
  // must be rejected here rather than delegated.
  std::string t = s;
  if (t[0] == '+') t = t.substr(1);
  size_t i = 0;
  if (i < t.size() && t[i] == '-') ++i;
  if (i >= t.size() || !isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
  size_t slash = std::string::npos;
  for (; i < t.size(); ++i) {
    if (t[i] == '/' && slash == std::string::npos && i + 1 < t.size()) { slash = i; continue; }
    if (!isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
  }
  if (slash != std::string::npos &&
      t.find_first_not_of('0', slash + 1) == std::string::npos)
    return std::nullopt;
  try {
    Rational r(t);
    return r;
  } catch (...) {
    return std::nullopt;
  }
}

bool rat_is_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  if (r == 0) {
    if (root) *root = 0;
    return true;
  }
  Int n = numerator(r), d = denominator(r);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

QMonomial QMonomial::pow(long long e) const {
  if (e == 0) return QMonomial(1, 0);
  if (is_zero()) {
    if (e < 0) raise(Err::DivisionByZeroSeries, "zero monomial to a negative power");
    return QMonomial();
  }
  return QMonomial(rat_pow(coeff, e), exp * e);
}

std::string QMonomial::str() const {
  return rat_str(coeff) + "*q^" + std::to_string(exp);
}

std::optional<QMonomial> monomial_parse(const std::string& s) {
  // forms: "r", "r*q^m", "q", "q^m", "-q", "-q^m"
  std::string t = s;
  Rational c(1);
  long long e = 0;
  auto star = t.find('*');
  std::string head = (star == std::string::npos) ? t : t.substr(0, star);
  std::string tail = (star == std::string::npos) ? "" : t.substr(star + 1);
  auto parse_qpart = [&](const std::string& p) -> bool {
    if (p.empty() || p[0] != 'q') return false;
    if (p.size() == 1) { e = 1; return true; }
    if (p[1] != '^') return false;
    try {
      size_t used = 0;
      e = std::stoll(p.substr(2), &used);
      return used == p.size() - 2;
    } catch (...) {
      return false;
    }
  };
  if (star == std::string::npos) {
    if (!head.empty() && (head[0] == 'q' || head == "-q" || head.rfind("-q^", 0) == 0 || head.rfind("q^", 0) == 0)) {
      std::string p = head;
      if (p[0] == '-') { c = -1; p = p.substr(1); }
      if (!parse_qpart(p)) return std::nullopt;
      return QMonomial(c, e);
    }
    auto r = rat_parse(head);
    if (!r) return std::nullopt;
    return QMonomial(*r, 0);
  }
  auto r = rat_parse(head);
  if (!r) return std::nullopt;
  if (!parse_qpart(tail)) return std::nullopt;
  return QMonomial(*r, e);
}

LaurentSeries::LaurentSeries(const QMonomial& m, long long trunc) : trunc_(trunc) {
  if (!m.is_zero() && m.exp <= trunc_) c_[m.exp] = m.coeff;
}

const Rational& LaurentSeries::coeff(long long e) const {
  static const Rational kZero(0);
  if (e > trunc_) raise(Err::OrderExceeded, "coefficient above truncation order");
  auto it = c_.find(e);
  return it == c_.end() ? kZero : it->second;
}

bool LaurentSeries::is_monomial(const QMonomial& m) const {
  if (m.is_zero()) return c_.empty();
  return c_.size() == 1 && c_.begin()->first == m.exp && c_.begin()->second == m.coeff;
}

std::optional<QMonomial> LaurentSeries::leading() const {
  if (c_.empty()) return std::nullopt;
  return QMonomial(c_.begin()->second, c_.begin()->first);
}

LaurentSeries LaurentSeries::assume_exact_through(long long n) const {
  LaurentSeries out = *this;
  if (n > out.trunc_) out.trunc_ = n;
  return out;
}

LaurentSeries LaurentSeries::truncated(long long n) const {
  LaurentSeries out(std::min(n, trunc_));
  for (const auto& [e, v] : c_) {
    if (e > out.trunc_) break;
    out.c_[e] = v;
  }
  return out;
}

LaurentSeries LaurentSeries::shifted(long long m) const {
  LaurentSeries out(trunc_ + m);
  for (const auto& [e, v] : c_) out.c_[e + m] = v;
  return out;
}

LaurentSeries LaurentSeries::scaled(const Rational& r) const {
  LaurentSeries out(trunc_);
  if (r == 0) return out;
  for (const auto& [e, v] : c_) out.c_[e] = v * r;
  return out;
}

void LaurentSeries::set(long long e, const Rational& v) {
  if (e > trunc_) return;
  if (v == 0)
    c_.erase(e);
  else
    c_[e] = v;
}

std::string LaurentSeries::str() const {
  if (c_.empty()) return "0 + O(q^" + std::to_string(trunc_ + 1) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    os << "(" << v << ")*q^" << e;
    first = false;
  }
  os << " + O(q^" << trunc_ + 1 << ")";
  return os.str();
}

LaurentSeries make_monomial(const Rational& r, long long m, long long N) {
  return LaurentSeries(QMonomial(r, m), N);
}

LaurentSeries series_one(long long N) { return make_monomial(1, 0, N); }
LaurentSeries series_zero(long long N) { return LaurentSeries(N); }

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries out(std::min(a.trunc_order(), b.trunc_order()));
  for (const auto& [e, v] : a.coeffs()) {
    if (e > out.trunc_order()) break;
    out.set(e, v);
  }
  for (const auto& [e, v] : b.coeffs()) {
    if (e > out.trunc_order()) break;
    out.set(e, out.coeff(e) + v);
  }
  return out;
}

LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return series_add(a, series_neg(b));
}

LaurentSeries series_neg(const LaurentSeries& a) { return a.scaled(-1); }

namespace {

thread_local unsigned long long g_work_used = 0;
thread_local unsigned long long g_work_limit = 0;

void charge_work(unsigned long long n) {
  g_work_used += n;
  if (g_work_limit != 0 && g_work_used > g_work_limit)
    raise(Err::NoConvergence, "exact work budget exceeded");
}

}  // namespace

unsigned long long series_work_used() { return g_work_used; }

SeriesWorkBudget::SeriesWorkBudget(unsigned long long limit)
    : prev_limit_(g_work_limit), prev_used_(g_work_used) {
  g_work_used = 0;
  g_work_limit = limit;
}

SeriesWorkBudget::~SeriesWorkBudget() {
  // No overrun check here (destructors must not throw); an exceeded outer
  // budget trips on its next charge.
  g_work_used += prev_used_;
  g_work_limit = prev_limit_;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  // Tightest guaranteed order: a coefficient at e needs every split e = i + j
  // with i >= min_a, j >= min_b known, i.e. e <= min(N_a + min_b, N_b + min_a).
  long long nt = std::min(a.trunc_order() + b.min_order(), b.trunc_order() + a.min_order());
  LaurentSeries out(nt);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, va] : a.coeffs()) {
    unsigned long long row_ops = 0;
    for (const auto& [eb, vb] : b.coeffs()) {
      long long e = ea + eb;
      if (e > nt) break;  // b is ordered: later eb only grow
      out.set(e, out.coeff(e) + va * vb);
      ++row_ops;
    }
    charge_work(row_ops);
  }
  return out;
}

LaurentSeries series_inv(const LaurentSeries& b) {
  auto lead = b.leading();
  if (!lead) raise(Err::DivisionByZeroSeries, "inverse of a series with no detectable leading term");
  const long long m = lead->exp;
  const long long M = b.trunc_order() - m;  // unit part known through M
  // u = b * q^{-m} / lead_coeff = 1 + h with h of order >= 1.
  LaurentSeries u = b.shifted(-m).scaled(Rational(1) / lead->coeff);
  // Geometric inversion by coefficient recurrence: w * u = 1.
  LaurentSeries w(M);
  w.set(0, 1);
  for (long long n = 1; n <= M; ++n) {
    Rational s(0);
    unsigned long long row_ops = 0;
    for (const auto& [e, v] : u.coeffs()) {
      if (e <= 0) continue;
      if (e > n) break;
      s += v * w.coeff(n - e);
      ++row_ops;
    }
    charge_work(row_ops);
    w.set(n, -s);
  }
  return w.shifted(-m).scaled(Rational(1) / lead->coeff);
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) {
  return series_mul(a, series_inv(b));
}

LaurentSeries series_pow(const LaurentSeries& a, long long e) {
  if (e == 0) {
    // Preserve the operand's truncation budget relative to its order.
    return series_one(a.trunc_order() - a.min_order());
  }
  const LaurentSeries base = e < 0 ? series_inv(a) : a;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  LaurentSeries acc = base;
  --n;
  LaurentSeries sq = base;
  while (n) {
    if (n & 1) acc = series_mul(acc, sq);
    n >>= 1;
    if (n) sq = series_mul(sq, sq);
  }
  return acc;
}

Rational coeff_through(const LaurentSeries& s, long long n) {
  return s.coeff(n);
}

bool is_zero_through(const LaurentSeries& s, long long n) {
  if (n > s.trunc_order()) raise(Err::OrderExceeded, "zero test above truncation order");
  return s.coeffs().empty() || s.coeffs().begin()->first > n;
}

}  // namespace qiv
