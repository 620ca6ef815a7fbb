#include "qiv/engine.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace qiv {

namespace {

struct BoundFactor {
  QMonomial base;
  int shift = 0;
};

// A SeriesSpec with every parameter expression evaluated at a concrete assignment.
struct Bound {
  SumKind kind = SumKind::Unilateral;
  QuadExp quad;
  std::vector<BoundFactor> num, den;
  QMonomial z;
  std::optional<QMonomial> u;      // extra linear factor (1 - u*q^{2k})
  std::optional<QMonomial> vnorm;  // overall normalizer 1/(1 - vnorm)
};

Bound bind_spec(const SeriesSpec& spec, const Assignment& asg) {
  Bound b;
  b.kind = spec.kind;
  b.quad = spec.quad;
  for (const auto& f : spec.num) b.num.push_back({f.base.eval(asg), f.shift});
  for (const auto& f : spec.den) b.den.push_back({f.base.eval(asg), f.shift});
  b.z = spec.arg.eval(asg);
  if (spec.kernel) b.u = spec.kernel->eval(asg);
  if (spec.kernel_norm) b.vnorm = spec.kernel_norm->eval(asg);
  return b;
}

TermClass classify_bound(const Bound& b, long long k) {
  bool num_zero = false, num_inf = false, den_zero = false, den_inf = false;
  long long ord = b.quad.at(k);
  if (b.z.is_zero()) {
    if (k != 0) num_zero = true;  // z^k kills every term except k = 0
  } else {
    ord += k * b.z.exp;
  }
  if (b.u && !b.u->is_zero()) {
    long long e = b.u->exp + 2 * k;
    if (b.u->coeff == 1 && e == 0)
      num_zero = true;  // the factor (1 - u*q^{2k}) vanishes at this k
    else
      ord += std::min(0LL, e);
  }
  for (const auto& f : b.num) {
    auto o = poch_order(f.base, k + f.shift);
    if (!o) {
      (k + f.shift >= 0 ? num_zero : num_inf) = true;
    } else {
      ord += *o;
    }
  }
  for (const auto& f : b.den) {
    auto o = poch_order(f.base, k + f.shift);
    if (!o) {
      (k + f.shift >= 0 ? den_zero : den_inf) = true;
    } else {
      ord -= *o;
    }
  }
  if (den_zero || num_inf) return {TermClass::Kind::Pole, 0};
  if (num_zero || den_inf) return {TermClass::Kind::Zero, 0};
  return {TermClass::Kind::Finite, ord};
}

bool is_unit_power(const QMonomial& m) { return !m.is_zero() && m.coeff == 1; }

// Direction k = 0, 1, 2, ...
DirectionReport analyze_pos(const Bound& b) {
  DirectionReport r;
  r.twoA = b.quad.a;
  r.twoB = 2 * b.quad.b - b.quad.a + (b.z.is_zero() ? 0 : 2 * b.z.exp);

  long long last = std::numeric_limits<long long>::max();
  bool term = false;
  if (b.z.is_zero()) {
    term = true;
    last = 0;
  }
  for (const auto& f : b.num) {
    // (q^{-j}; q)_{k+s} vanishes once k + s > j, so the last surviving index is j - s.
    if (is_unit_power(f.base) && f.base.exp <= 0) {
      term = true;
      last = std::min(last, -f.base.exp - f.shift);
    }
  }
  r.terminating = term;
  r.last_index = term ? std::max(last, -1LL) : -1;

  for (const auto& f : b.den) {
    // (q^{-j}; q)_{k+t} vanishes once k + t >= j + 1; the first such k is a pole.
    if (is_unit_power(f.base) && f.base.exp <= 0) {
      long long k0 = std::max(0LL, -f.base.exp + 1 - f.shift);
      if (!term || k0 <= r.last_index) {
        if (!r.pole || k0 < r.pole_index) {
          r.pole = true;
          r.pole_index = k0;
        }
      }
    }
  }
  r.admissible = !r.pole && (r.terminating || r.twoA > 0 || (r.twoA == 0 && r.twoB > 0));
  return r;
}

// Direction k = -1, -2, ...; indexed by j >= 0 with k = -1 - j.
DirectionReport analyze_neg(const Bound& b) {
  DirectionReport r;
  r.twoA = b.quad.a;
  r.twoB = 3LL * b.quad.a - 2 * b.quad.b;
  if (b.z.is_zero()) {
    r.terminating = true;
    r.last_index = -1;  // z^k is infinite for k < 0, so no negative terms exist
    r.admissible = true;
    return r;
  }
  r.twoB -= 2 * b.z.exp;
  if (b.u && !b.u->is_zero()) r.twoB -= 4;
  for (const auto& f : b.num) {
    if (f.base.is_zero()) continue;  // (0; q)_n = 1 contributes nothing
    r.twoA += 1;
    r.twoB += 3 - 2 * f.shift - 2 * f.base.exp;
  }
  for (const auto& f : b.den) {
    if (f.base.is_zero()) continue;
    r.twoA -= 1;
    r.twoB -= 3 - 2 * f.shift - 2 * f.base.exp;
  }

  long long last = std::numeric_limits<long long>::max();
  bool term = false;
  for (const auto& f : b.den) {
    // (q^p; q)_{t-1-j} is infinite once j >= p + t - 1, killing all later terms.
    if (is_unit_power(f.base) && f.base.exp >= 1) {
      term = true;
      last = std::min(last, f.base.exp + f.shift - 2);
    }
  }
  r.terminating = term;
  r.last_index = term ? std::max(last, -1LL) : -1;

  for (const auto& f : b.num) {
    // (q^p; q)_{s-1-j} in the numerator blows up once j >= p + s - 1.
    if (is_unit_power(f.base) && f.base.exp >= 1) {
      long long j0 = std::max(0LL, f.base.exp + f.shift - 1);
      if (!term || j0 <= r.last_index) {
        if (!r.pole || j0 < r.pole_index) {
          r.pole = true;
          r.pole_index = j0;
        }
      }
    }
  }
  r.admissible = !r.pole && (r.terminating || r.twoA > 0 || (r.twoA == 0 && r.twoB > 0));
  return r;
}

LaurentSeries term_value_bound(const Bound& b, long long k, long long N) {
  TermClass tc = classify_bound(b, k);
  if (tc.kind == TermClass::Kind::Zero) return series_zero(N);
  if (tc.kind == TermClass::Kind::Pole)
    raise(Err::PoleInTerm, "term at index " + std::to_string(k) + " divides by zero");
  if (tc.order > N) return series_zero(N);

  QMonomial pref(Rational(1), b.quad.at(k));
  if (k != 0) pref = pref * b.z.pow(k);

  // Exact orders of every factor, plus the total negative-order mass per side;
  // padding each build by that mass absorbs the truncation decay of the products.
  long long m_num = 0, m_den = 0, pad_num = 0, pad_den = 0;
  std::optional<long long> kernel_exp;
  if (b.u && !b.u->is_zero()) {
    kernel_exp = b.u->exp + 2 * k;
    long long o = std::min(0LL, *kernel_exp);
    m_num += o;
    pad_num -= o;
  }
  for (const auto& f : b.num) {
    long long o = *poch_order(f.base, k + f.shift);
    m_num += o;
    pad_num -= std::min(0LL, o);
  }
  for (const auto& f : b.den) {
    long long o = *poch_order(f.base, k + f.shift);
    m_den += o;
    pad_den -= std::min(0LL, o);
  }

  const long long Wn = N - pref.exp + m_den + pad_num;
  LaurentSeries numprod = series_one(Wn);
  if (kernel_exp) {
    LaurentSeries kf = series_one(Wn);
    if (*kernel_exp <= Wn) kf.set(*kernel_exp, kf.coeff(*kernel_exp) - b.u->coeff);
    numprod = series_mul(numprod, kf);
  }
  for (const auto& f : b.num)
    numprod = series_mul(numprod, poch(f.base, PochIndex::finite(k + f.shift), Wn));

  LaurentSeries result = numprod;
  if (!b.den.empty()) {
    const long long Wd = N - pref.exp - m_num + 2 * m_den + pad_den;
    LaurentSeries denprod = series_one(Wd);
    for (const auto& f : b.den)
      denprod = series_mul(denprod, poch(f.base, PochIndex::finite(k + f.shift), Wd));
    result = series_mul(numprod, series_inv(denprod));
  }
  return result.scaled(pref.coeff).shifted(pref.exp).truncated(N);
}

// Smallest index past which every factor's q-order grows by an exact affine rule,
// so the total term order follows the quadratic law and the stop test is sound.
long long stabilization_index(const Bound& b, bool negative) {
  long long ks = 1;
  auto visit = [&](const BoundFactor& f) {
    if (f.base.is_zero()) return;
    if (!negative)
      ks = std::max(ks, 2 - f.shift - f.base.exp);
    else
      ks = std::max(ks, f.shift + f.base.exp + 1);
  };
  for (const auto& f : b.num) visit(f);
  for (const auto& f : b.den) visit(f);
  if (b.u && !b.u->is_zero()) {
    if (!negative)
      ks = std::max(ks, -b.u->exp / 2 + 2);
    else
      ks = std::max(ks, b.u->exp / 2 + 2);
  }
  return ks;
}

LaurentSeries sum_direction(const Bound& b, const DirectionReport& rep, bool negative,
                            long long N) {
  LaurentSeries acc = series_zero(N);
  const long long kstab = stabilization_index(b, negative);
  const long long hard_cap = kstab + 8 * std::max(N, 1LL) + 64;
  std::optional<long long> prev_ord;
  for (long long i = 0;; ++i) {
    if (rep.terminating && i > rep.last_index) break;
    if (i > hard_cap) raise(Err::BadInput, "summation failed to stabilize");
    const long long k = negative ? -1 - i : i;
    TermClass tc = classify_bound(b, k);
    if (tc.kind == TermClass::Kind::Pole)
      raise(Err::PoleInTerm, "term at index " + std::to_string(k) + " divides by zero");
    if (tc.kind == TermClass::Kind::Zero) continue;
    if (!rep.terminating && i >= kstab && tc.order > N && prev_ord && tc.order > *prev_ord)
      break;
    if (tc.order <= N) acc = series_add(acc, term_value_bound(b, k, N));
    prev_ord = tc.order;
  }
  return acc;
}

LaurentSeries apply_normalizer(LaurentSeries s, const Bound& b, long long N) {
  if (!b.vnorm) return s.truncated(N);
  const QMonomial& v = *b.vnorm;
  if (v.coeff == 1 && v.exp == 0)
    raise(Err::PoleInTerm, "normalizing factor 1 - " + v.str() + " vanishes");
  const long long m = std::min(0LL, v.is_zero() ? 0 : v.exp);
  const long long ms = std::min(0LL, s.min_order());
  LaurentSeries dv = series_one(s.trunc_order() - 2 * m - ms + 2);
  if (!v.is_zero() && v.exp <= dv.trunc_order()) dv.set(v.exp, dv.coeff(v.exp) - v.coeff);
  return series_div(s, dv).truncated(N);
}

// Extra working order needed so that dividing by the normalizer still lands on N.
long long normalizer_padding(const Bound& b) {
  if (!b.vnorm || b.vnorm->is_zero()) return 0;
  return std::max(0LL, -b.vnorm->exp);
}

std::string direction_detail(const DirectionReport& r, const char* dir) {
  std::ostringstream os;
  if (r.pole) {
    os << dir << " direction hits a vanishing denominator at index " << r.pole_index;
  } else if (!r.admissible) {
    os << dir << " direction does not terminate and its term orders grow too slowly"
       << " (2A=" << r.twoA << ", 2B=" << r.twoB << ")";
  } else if (r.terminating) {
    os << dir << " direction terminates at index " << r.last_index;
  } else {
    os << dir << " direction admissible (2A=" << r.twoA << ", 2B=" << r.twoB << ")";
  }
  return os.str();
}

}  // namespace

GrowthVerdict growth_check(const SeriesSpec& spec, const Assignment& asg) {
  Bound b = bind_spec(spec, asg);
  GrowthVerdict v;
  v.pos = analyze_pos(b);
  if (spec.kind == SumKind::Bilateral) {
    v.neg = analyze_neg(b);
  } else {
    v.neg.admissible = true;
    v.neg.terminating = true;
    v.neg.last_index = -1;
  }
  v.admissible = v.pos.admissible && v.neg.admissible;
  std::string d = direction_detail(v.pos, "positive");
  if (spec.kind == SumKind::Bilateral) d += "; " + direction_detail(v.neg, "negative");
  v.detail = d;
  return v;
}

TermClass classify_term(const SeriesSpec& spec, const Assignment& asg, long long k) {
  return classify_bound(bind_spec(spec, asg), k);
}

LaurentSeries term_value(const SeriesSpec& spec, const Assignment& asg, long long k,
                         long long N) {
  return term_value_bound(bind_spec(spec, asg), k, N);
}

LaurentSeries sum_unilateral(const SeriesSpec& spec, const Assignment& asg, long long N) {
  Bound b = bind_spec(spec, asg);
  DirectionReport pos = analyze_pos(b);
  if (pos.pole)
    raise(Err::PoleInTerm, "denominator factor vanishes at index " +
                               std::to_string(pos.pole_index));
  if (!pos.admissible) raise(Err::InadmissibleSeries, direction_detail(pos, "positive"));
  const long long Nw = N + normalizer_padding(b);
  return apply_normalizer(sum_direction(b, pos, false, Nw), b, N);
}

LaurentSeries sum_bilateral(const SeriesSpec& spec, const Assignment& asg, long long N) {
  Bound b = bind_spec(spec, asg);
  DirectionReport pos = analyze_pos(b);
  DirectionReport neg = analyze_neg(b);
  if (pos.pole || neg.pole)
    raise(Err::PoleInTerm,
          "denominator factor vanishes at index " +
              std::to_string(pos.pole ? pos.pole_index : -1 - neg.pole_index));
  if (!pos.admissible) raise(Err::InadmissibleSeries, direction_detail(pos, "positive"));
  if (!neg.admissible) raise(Err::InadmissibleSeries, direction_detail(neg, "negative"));
  const long long Nw = N + normalizer_padding(b);
  LaurentSeries s =
      series_add(sum_direction(b, pos, false, Nw), sum_direction(b, neg, true, Nw));
  return apply_normalizer(std::move(s), b, N);
}

LaurentSeries sum_spec(const SeriesSpec& spec, const Assignment& asg, long long N) {
  return spec.kind == SumKind::Bilateral ? sum_bilateral(spec, asg, N)
                                         : sum_unilateral(spec, asg, N);
}

SeriesSpec build_vwp(const VWPSpec& w, const Assignment& asg) {
  QMonomial head = w.head.eval(asg);
  if (head.is_zero() || !rat_is_square(head.coeff) || head.exp % 2 != 0)
    raise(Err::NotAPerfectSquare,
          "head parameter " + head.str() + " must be a perfect square monomial");
  SeriesSpec s;
  s.kind = w.kind;
  s.arg = w.arg;
  s.kernel = w.head;
  s.kernel_norm = w.head;
  if (w.kind == SumKind::Unilateral) {
    // (q*sqrt(h), -q*sqrt(h); q)_k / (sqrt(h), -sqrt(h); q)_k = (1 - h*q^{2k}) / (1 - h),
    // with the base hypergeometric factors (h; q)_k / (q; q)_k alongside.
    s.num.push_back({w.head, 0});
    s.den.push_back({ParamExpr::q(), 0});
  }
  for (const auto& t : w.tail) {
    s.num.push_back({t, 0});
    s.den.push_back({(w.head * ParamExpr::q()) / t, 0});
  }
  return s;
}

}  // namespace qiv
