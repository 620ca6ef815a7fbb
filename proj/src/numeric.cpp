#include "qiv/numeric.hpp"

#include <sstream>
#include <vector>

namespace qiv {

namespace mp = boost::multiprecision;

Complex Complex::operator/(const Complex& o) const {
  Real n = o.re * o.re + o.im * o.im;
  if (n == 0) raise(Err::DivisionByZeroSeries, "complex division by zero");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string Complex::str(unsigned digits) const {
  std::ostringstream os;
  os << re.str(digits);
  if (im != 0) os << (im > 0 ? "+" : "") << im.str(digits) << "i";
  return os.str();
}

Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

bool is_finite(const Complex& z) {
  return !(mp::isnan)(z.re) && !(mp::isinf)(z.re) && !(mp::isnan)(z.im) && !(mp::isinf)(z.im);
}

Complex cpow(const Complex& base, long long e) {
  if (e == 0) return Complex(1.0);
  if (e < 0) {
    if (base.is_zero()) raise(Err::DivisionByZeroSeries, "zero to a negative power");
    return cpow(Complex(1.0) / base, -e);
  }
  Complex acc(1.0), sq = base;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc *= sq;
    n >>= 1;
    if (n) sq *= sq;
  }
  return acc;
}

unsigned set_precision_bits(unsigned bits) {
  static unsigned current = 64;
  unsigned prev = current;
  current = bits;
  Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 4);
  return prev;
}

const Complex& NumAssignment::get(Slot s) const {
  const auto& v = val[static_cast<int>(s)];
  if (!v) raise(Err::BadInput, std::string("parameter slot '") + slot_name(s) + "' is unset");
  return *v;
}

long long NumAssignment::get(IntSlot s) const {
  const auto& v = ints[static_cast<int>(s)];
  if (!v) raise(Err::BadInput, std::string("integer slot '") + int_slot_name(s) + "' is unset");
  return *v;
}

NumAssignment NumAssignment::from_exact(const Assignment& asg, const Complex& q0) {
  NumAssignment n;
  n.q = q0;
  for (int i = 0; i < kSlotCount; ++i)
    if (asg.mono[i]) {
      const QMonomial& m = *asg.mono[i];
      n.val[i] = m.is_zero() ? Complex(0.0) : Complex(Real(m.coeff)) * cpow(q0, m.exp);
    }
  n.ints = asg.ints;
  return n;
}

Complex eval_poch_num(const Complex& a, PochIndex idx, const Complex& q, long long step,
                      const NumericConfig& cfg) {
  set_precision_bits(cfg.precision_bits);
  if (idx.infinite) {
    if (step < 1) raise(Err::BadInput, "infinite product requires step >= 1");
    if (abs(q) >= 1) raise(Err::BadInput, "infinite product requires |q| < 1");
    const Complex qs = cpow(q, step);
    const Real eps = ldexp(Real(1), 1 - static_cast<int>(cfg.precision_bits));
    Complex acc(1.0), aq = a;
    for (long long k = 0; abs(aq) >= eps; ++k) {
      if (k > 64LL * cfg.precision_bits + (1 << 20))
        raise(Err::NoConvergence, "infinite product failed to settle");
      acc *= Complex(1.0) - aq;
      aq *= qs;
    }
    if (!is_finite(acc)) raise(Err::NonFinite, "infinite product overflowed");
    return acc;
  }
  const Complex qs = cpow(q, step);
  Complex acc(1.0);
  if (idx.n >= 0) {
    Complex aq = a;
    for (long long i = 0; i < idx.n; ++i) {
      acc *= Complex(1.0) - aq;
      aq *= qs;
    }
  } else {
    Complex aq = a;
    for (long long i = 1; i <= -idx.n; ++i) {
      aq /= qs;
      acc *= Complex(1.0) - aq;
    }
    if (acc.is_zero())
      raise(Err::NonFinite, "negative-index product hits an exactly vanishing factor");
    acc = Complex(1.0) / acc;
  }
  if (!is_finite(acc)) raise(Err::NonFinite, "product overflowed");
  return acc;
}

Complex eval_param_num(const ParamExpr& p, const NumAssignment& asg) {
  if (p.is_zero()) return Complex(0.0);
  Complex acc = Complex(Real(p.coeff)) * cpow(asg.q, p.qexp);
  for (int i = 0; i < kSlotCount; ++i) {
    if (p.pw[i] == 0) continue;
    const Complex& v = asg.get(static_cast<Slot>(i));
    if (v.is_zero()) {
      if (p.pw[i] < 0)
        raise(Err::DivisionByZeroSeries,
              std::string("parameter expression divides by zero slot '") +
                  slot_name(static_cast<Slot>(i)) + "'");
      return Complex(0.0);
    }
    acc *= cpow(v, p.pw[i]);
  }
  return acc;
}

namespace {

struct NumFactor {
  Complex base;
  int shift = 0;
};

/*
 * One summation direction.  Every Pochhammer factor is kept in fraction form
 * (value = top/bot) so that exactly vanishing pieces surface as zeros rather
 * than infinities:
 *
 *   positive, index k:      (B;q)_{k+s}    = top (multiplicative), bot = 1
 *   negative, index -1-j:   (B;q)_{s-1-j}  = 1/bot, bot = (1-B/q)^{[s=0]} *
 *                                            prod_{i<j} (1 - B q^{s-2-i})
 *
 * A numerator factor with bot = 0 is a genuine pole; a denominator factor
 * with top = 0 (positive) is too.  The opposite combinations make the term
 * exactly zero, which the stopping rule treats like any other small term.
 */
Complex sum_direction_num(const std::vector<NumFactor>& num, const std::vector<NumFactor>& den,
                          const Complex& z, const std::optional<Complex>& u,
                          const QuadExp& quad, const Complex& q, bool negative,
                          const NumericConfig& cfg) {
  const Real stop_eps = Real(cfg.tol) * ldexp(Real(1), -10);
  const Real floor_eps = ldexp(Real(1), -static_cast<int>(cfg.precision_bits));
  const Real cutoff = Real(cfg.tail_ratio_cutoff);

  for (const auto& f : num)
    if (f.shift != 0 && f.shift != 1) raise(Err::BadInput, "factor shift must be 0 or 1");
  for (const auto& f : den)
    if (f.shift != 0 && f.shift != 1) raise(Err::BadInput, "factor shift must be 0 or 1");

  // fraction parts per factor, plus the running increment power B*q^{...}
  std::vector<Complex> fnum, fden, pnum, pden;
  for (const auto& f : num) {
    if (!negative) {
      fnum.push_back(f.shift == 1 ? Complex(1.0) - f.base : Complex(1.0));  // (B;q)_s
      pnum.push_back(f.base * cpow(q, f.shift));
    } else {
      fnum.push_back(f.shift == 0 ? Complex(1.0) - f.base / q : Complex(1.0));
      pnum.push_back(f.base * cpow(q, f.shift - 2));
    }
  }
  for (const auto& f : den) {
    if (!negative) {
      fden.push_back(f.shift == 1 ? Complex(1.0) - f.base : Complex(1.0));
      pden.push_back(f.base * cpow(q, f.shift));
    } else {
      fden.push_back(f.shift == 0 ? Complex(1.0) - f.base / q : Complex(1.0));
      pden.push_back(f.base * cpow(q, f.shift - 2));
    }
  }

  // z^k, q^{quad(k)} and u*q^{2k} at the starting index, with step updates
  Complex zpow(1.0), qqpow(1.0), qstep, uq;
  const Complex qa = cpow(q, quad.a);
  const Complex q2 = q * q;
  if (!negative) {
    qstep = cpow(q, quad.b);  // quad(k+1) - quad(k) = a*k + b from k = 0
    if (u) uq = *u;
  } else {
    zpow = Complex(1.0) / z;
    qqpow = cpow(q, quad.at(-1));
    qstep = cpow(q, 2LL * quad.a - quad.b);  // quad(-2-j) - quad(-1-j) from j = 0
    if (u) uq = *u / q2;
  }

  Complex total(0.0);
  int consec_small = 0, persist_high = 0;
  Real prev_mag(-1);
  for (long long i = 0;; ++i) {
    if (i > cfg.max_terms) raise(Err::NoConvergence, "summation cap reached");

    Complex t = zpow * qqpow;
    if (u) t *= Complex(1.0) - uq;
    if (!negative) {
      for (const auto& f : fnum) t *= f;
      for (const auto& f : fden) {
        if (f.is_zero()) raise(Err::PoleInTerm, "denominator product vanished");
        t /= f;
      }
    } else {
      for (const auto& f : fden) t *= f;
      for (const auto& f : fnum) {
        if (f.is_zero()) raise(Err::PoleInTerm, "reciprocal numerator product vanished");
        t /= f;
      }
    }
    if (!is_finite(t)) raise(Err::NonFinite, "term overflowed");
    total += t;

    if (z.is_zero()) break;  // zero argument: exactly the first term

    const Real mag = abs(t);
    if (mag <= stop_eps * (abs(total) + floor_eps)) {
      if (++consec_small >= 3) break;
    } else {
      consec_small = 0;
      if (prev_mag >= 0 && mag >= cutoff * prev_mag) {
        if (++persist_high >= 64) raise(Err::NoConvergence, "term magnitudes not decreasing");
      } else {
        persist_high = 0;
      }
    }
    prev_mag = mag;

    // advance one index
    qqpow *= qstep;
    qstep *= qa;
    if (!negative) {
      zpow *= z;
      if (u) uq *= q2;
      for (size_t f = 0; f < fnum.size(); ++f) {
        fnum[f] *= Complex(1.0) - pnum[f];
        pnum[f] *= q;
      }
      for (size_t f = 0; f < fden.size(); ++f) {
        fden[f] *= Complex(1.0) - pden[f];
        pden[f] *= q;
      }
    } else {
      zpow /= z;
      if (u) uq /= q2;
      for (size_t f = 0; f < fnum.size(); ++f) {
        fnum[f] *= Complex(1.0) - pnum[f];
        pnum[f] /= q;
      }
      for (size_t f = 0; f < fden.size(); ++f) {
        fden[f] *= Complex(1.0) - pden[f];
        pden[f] /= q;
      }
    }
  }
  return total;
}

}  // namespace

Complex eval_sum_num(const SeriesSpec& spec, const NumAssignment& asg,
                     const NumericConfig& cfg) {
  set_precision_bits(cfg.precision_bits);
  if (abs(asg.q) >= 1) raise(Err::BadInput, "evaluation requires |q| < 1");

  std::vector<NumFactor> num, den;
  for (const auto& f : spec.num) num.push_back({eval_param_num(f.base, asg), f.shift});
  for (const auto& f : spec.den) den.push_back({eval_param_num(f.base, asg), f.shift});
  const Complex z = eval_param_num(spec.arg, asg);
  std::optional<Complex> u;
  if (spec.kernel) u = eval_param_num(*spec.kernel, asg);

  Complex total = sum_direction_num(num, den, z, u, spec.quad, asg.q, false, cfg);
  if (spec.kind == SumKind::Bilateral && !z.is_zero())
    total += sum_direction_num(num, den, z, u, spec.quad, asg.q, true, cfg);

  if (spec.kernel_norm) {
    Complex d = Complex(1.0) - eval_param_num(*spec.kernel_norm, asg);
    if (d.is_zero()) raise(Err::PoleInTerm, "normalizing factor vanishes");
    total /= d;
  }
  if (!is_finite(total)) raise(Err::NonFinite, "sum overflowed");
  return total;
}

Complex eval_series_at(const LaurentSeries& s, const Complex& q0) {
  Complex acc(0.0);
  const auto& cs = s.coeffs();
  for (const auto& [e, v] : cs) acc += Complex(Real(v)) * cpow(q0, e);
  return acc;
}

Real residual_relative(const Complex& lhs, const Complex& rhs) {
  Real d = abs(lhs - rhs);
  Real m = abs(lhs);
  Real r = abs(rhs);
  if (r > m) m = r;
  if (m < 1) m = Real(1);
  return d / m;
}

}  // namespace qiv
