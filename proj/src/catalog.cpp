#include "qiv/catalog.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qiv {

namespace {

using PE = ParamExpr;

// Symbolic slot shorthands for building specs.
struct Sym {
  PE a = PE::slot(Slot::a);
  PE b = PE::slot(Slot::b);
  PE c = PE::slot(Slot::c);
  PE d = PE::slot(Slot::d);
  PE e = PE::slot(Slot::e);
  PE x = PE::slot(Slot::x);
  PE y = PE::slot(Slot::y);
  PE z = PE::slot(Slot::z);
  PE w = PE::slot(Slot::w);
  PE q = PE::q(1);
  PE one = PE::constant(1);
};

const Sym& sy() {
  static const Sym s;
  return s;
}

constexpr Slot sA = Slot::a, sB = Slot::b, sC = Slot::c, sD = Slot::d, sE = Slot::e,
               sX = Slot::x, sY = Slot::y, sZ = Slot::z;
constexpr IntSlot iR = IntSlot::r, iS = IntSlot::s, iM = IntSlot::m, iN = IntSlot::n;

QMonomial mo(long long num, long long den = 1, long long e = 0) {
  return QMonomial(Rational(num, den), e);
}
QMonomial qmono(long long e) { return QMonomial(Rational(1), e); }

Assignment mk(std::initializer_list<std::pair<Slot, QMonomial>> vs,
              std::initializer_list<std::pair<IntSlot, long long>> is = {}) {
  Assignment a;
  for (const auto& kv : vs) a.set(kv.first, kv.second);
  for (const auto& kv : is) a.set(kv.first, kv.second);
  return a;
}

// ---------------------------------------------------------------------------
// Series plumbing
// ---------------------------------------------------------------------------

// Evaluates f at increasing working orders until the result is guaranteed
// through N, then truncates to exactly N.  Division and negative-order
// factors can tighten truncation below the working order; the retry makes
// every evaluator deliver precisely the requested guarantee.
template <typename F>
LaurentSeries exact_through(F&& f, long long N) {
  long long w = N;
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentSeries s = f(w);
    if (s.trunc_order() >= N) return s.truncated(N);
    w += (N - s.trunc_order()) + 8;
  }
  raise(Err::OrderExceeded, "series evaluation repeatedly fell short of the requested order");
}

LaurentSeries mono_poly(std::initializer_list<QMonomial> ms, long long N) {
  LaurentSeries s = series_zero(N);
  for (const auto& m : ms) s = series_add(s, LaurentSeries(m, N));
  return s;
}

LaurentSeries one_plus(const QMonomial& m, long long N) { return mono_poly({mo(1), m}, N); }

// Total weight of the negative-order factors of (m; q^step)_inf; used to pad
// working orders before dividing by such products.
long long neg_mass(const QMonomial& m, long long step = 1) {
  if (m.is_zero() || m.exp >= 0) return 0;
  long long s = 0;
  for (long long e = m.exp; e < 0; e += step) s -= e;
  return s;
}

// prod (n_i;q)_inf / prod (d_j;q)_inf through order N.
LaurentSeries poch_quot_exact(const std::vector<PE>& nums, const std::vector<PE>& dens,
                              const Assignment& asg, long long N) {
  std::vector<QMonomial> nb, db;
  nb.reserve(nums.size());
  db.reserve(dens.size());
  long long mn = 0, md = 0;
  for (const auto& p : nums) {
    nb.push_back(p.eval(asg));
    mn += neg_mass(nb.back());
  }
  for (const auto& p : dens) {
    db.push_back(p.eval(asg));
    md += neg_mass(db.back());
  }
  const long long W = N + 2 * md + mn + 4;
  return series_div(poch_multi(nb, PochIndex::inf(), W), poch_multi(db, PochIndex::inf(), W));
}

Complex poch_quot_num(const std::vector<PE>& nums, const std::vector<PE>& dens,
                      const NumAssignment& asg, const NumericConfig& cfg) {
  Complex top(1.0), bot(1.0);
  for (const auto& p : nums)
    top *= eval_poch_num(eval_param_num(p, asg), PochIndex::inf(), asg.q, 1, cfg);
  for (const auto& p : dens)
    bot *= eval_poch_num(eval_param_num(p, asg), PochIndex::inf(), asg.q, 1, cfg);
  return top / bot;
}

Complex poch_num_fin(const Complex& base, long long k, const NumAssignment& asg,
                     const NumericConfig& cfg) {
  return eval_poch_num(base, PochIndex::finite(k), asg.q, 1, cfg);
}

// ---------------------------------------------------------------------------
// Constraint helpers
// ---------------------------------------------------------------------------

bool unit_nonpos(const QMonomial& m) { return !m.is_zero() && m.coeff == 1 && m.exp <= 0; }
bool unit_any(const QMonomial& m) { return !m.is_zero() && m.coeff == 1; }

std::optional<std::string> check_nonzero(const Assignment& asg, std::initializer_list<Slot> ss) {
  for (Slot s : ss)
    if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
  return std::nullopt;
}

std::optional<std::string> check_nonzero_num(const NumAssignment& asg,
                                             std::initializer_list<Slot> ss) {
  for (Slot s : ss)
    if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
  return std::nullopt;
}

// Bases that sit under a Pochhammer in a denominator, or inside an infinite
// product that must stay nonzero: the values q^{-j}, j >= 0, are excluded.
std::optional<std::string> check_no_unit_nonpos(const Assignment& asg,
                                                const std::vector<PE>& bases) {
  for (const auto& p : bases) {
    const QMonomial v = p.eval(asg);
    if (unit_nonpos(v))
      return p.str() + " = " + v.str() + " makes a product factor vanish identically";
  }
  return std::nullopt;
}

// Bases that may not be ANY power of q (one of a reciprocal pair of infinite
// products would vanish identically).
std::optional<std::string> check_no_unit(const Assignment& asg, const std::vector<PE>& bases) {
  for (const auto& p : bases) {
    const QMonomial v = p.eval(asg);
    if (unit_any(v))
      return p.str() + " = " + v.str() + " is a power of q, which degenerates the products";
  }
  return std::nullopt;
}

ParamSlotDecl msd(const char* name, const char* constraint = "") {
  return ParamSlotDecl{name, SlotSort::MonomialParam, constraint};
}
ParamSlotDecl isd(const char* name, const char* constraint = "integer >= 0") {
  return ParamSlotDecl{name, SlotSort::IntegerParam, constraint};
}

// ---------------------------------------------------------------------------
// Rho family internals
// ---------------------------------------------------------------------------

SeriesSpec rho2_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.quad = {1, 1};
  sp.den = {{-(S.a * S.q), 0}};
  sp.arg = -(S.a / S.b);
  return sp;
}

SeriesSpec rho4_repA_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.num = {{S.c, 0}, {-(S.a * S.q / S.d), 0}};
  sp.den = {{-(S.a * S.q), 0}, {-(S.c / S.b), 1}};
  sp.arg = -(S.d / S.b);
  return sp;
}

SeriesSpec rho4_repB_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.quad = {1, 0};
  sp.kernel = S.a * S.q / S.b;
  sp.num = {{-(S.one / S.b), 1}, {-(S.a * S.q / S.c), 0}, {-(S.a * S.q / S.d), 0}};
  sp.den = {{-(S.a * S.q), 0}, {-(S.c / S.b), 1}, {-(S.d / S.b), 1}};
  sp.arg = S.c * S.d / S.b;
  return sp;
}

SeriesSpec rho4_repC_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.quad = {1, 1};
  sp.kernel = -(S.c * S.d / S.b);
  sp.num = {{S.c, 0}, {S.d, 0}, {S.c * S.d / (S.a * S.b), 0}};
  sp.den = {{-(S.a * S.q), 0}, {-(S.c / S.b), 1}, {-(S.d / S.b), 1}};
  sp.arg = -(S.a / S.b);
  return sp;
}

SeriesSpec rho5_spec(bool rho0) {
  const auto& S = sy();
  SeriesSpec sp;
  sp.kernel = S.a * S.q / S.b;
  sp.num = {rho0 ? PochFactor{-(S.q / S.b), 0} : PochFactor{-(S.one / S.b), 1},
            {-(S.a * S.q / S.c), 0},
            {-(S.a * S.q / S.d), 0},
            {-(S.a * S.q / S.e), 0}};
  sp.den = {{-(S.a * S.q), 0}, {-(S.c / S.b), 1}, {-(S.d / S.b), 1}, {-(S.e / S.b), 1}};
  sp.arg = S.c * S.d * S.e / (S.a * S.b * S.q);
  return sp;
}

SeriesSpec rho5_term_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.num = {{S.c, 0}, {-(S.a * S.q / S.d), 0}, {-(S.a * S.q / S.e), 0}};
  sp.den = {{-(S.a * S.q), 0}, {-(S.c * S.q / S.b), 0}, {S.a * S.b * S.q * S.q / (S.d * S.e), 0}};
  sp.arg = S.q;
  return sp;
}

// Terminating cutoff of the five-parameter sum: the m with c = q^{-m},
// -aq/d = q^{-m} or -aq/e = q^{-m}, if any.
std::optional<long long> rho5_cutoff(const Assignment& asg) {
  const auto& S = sy();
  auto unit_m = [](const QMonomial& v) -> std::optional<long long> {
    if (!v.is_zero() && v.coeff == 1 && v.exp <= 0) return -v.exp;
    return std::nullopt;
  };
  if (auto m = unit_m(S.c.eval(asg))) return m;
  if (auto m = unit_m((-(S.a * S.q / S.d)).eval(asg))) return m;
  if (auto m = unit_m((-(S.a * S.q / S.e)).eval(asg))) return m;
  return std::nullopt;
}

LaurentSeries one_plus_inv_b(const Assignment& asg, long long N) {
  return one_plus((sy().one / sy().b).eval(asg), N);
}

// ---------------------------------------------------------------------------
// Reciprocal product sides
// ---------------------------------------------------------------------------

std::vector<PE> recip_prod_nums(int arity) {
  const auto& S = sy();
  std::vector<PE> v = {S.q, S.a * S.q / S.b, S.b * S.q / S.a};
  if (arity >= 4) {
    v.push_back(S.c);
    v.push_back(S.d);
    v.push_back(S.c * S.d / (S.a * S.b));
  }
  if (arity >= 5) {
    v.push_back(S.e);
    v.push_back(S.c * S.e / (S.a * S.b));
    v.push_back(S.d * S.e / (S.a * S.b));
  }
  return v;
}

std::vector<PE> recip_prod_dens(int arity) {
  const auto& S = sy();
  std::vector<PE> v = {-(S.a * S.q), -(S.b * S.q)};
  if (arity >= 4) {
    v.push_back(-(S.c / S.a));
    v.push_back(-(S.c / S.b));
    v.push_back(-(S.d / S.a));
    v.push_back(-(S.d / S.b));
  }
  if (arity >= 5) {
    v.push_back(-(S.e / S.a));
    v.push_back(-(S.e / S.b));
    v.push_back(S.c * S.d * S.e / (S.a * S.b * S.q));
  }
  return v;
}

LaurentSeries recip_rhs_exact(int arity, const Assignment& asg, long long N) {
  const auto& S = sy();
  const std::vector<PE> nums = recip_prod_nums(arity);
  const std::vector<PE> dens = recip_prod_dens(arity);
  const QMonomial ia = (S.one / S.a).eval(asg);
  const QMonomial ib = (S.one / S.b).eval(asg);
  return exact_through(
      [&](long long W) { return mono_poly({ib, -ia}, W) * poch_quot_exact(nums, dens, asg, W); },
      N);
}

Complex recip_rhs_num(int arity, const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex one(1.0);
  const Complex pref = one / asg.get(sB) - one / asg.get(sA);
  return pref * poch_quot_num(recip_prod_nums(arity), recip_prod_dens(arity), asg, cfg);
}

// ---------------------------------------------------------------------------
// Finite-sum identities (hand loops; the cutoffs come from integer slots)
// ---------------------------------------------------------------------------

Rational binom_rat(long long n, long long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long long i = 1; i <= k; ++i) r *= Rational(n - k + i) / Rational(i);
  return r;
}

// One part of the two-cutoff finite sum: prefactor (1+v)/(c+v) times
// sum_{k<=ru} [ru+su-k, ru-k]_q (c;q)_k (u q^{-su}/v;q)_k
//            / ((-uq;q)_k (-cq/v;q)_k) q^{(su+1)k},
// with (u,v,ru,su) = (a,b,r,s), swapped for the mirror part.
LaurentSeries finrs_part(const Assignment& asg, bool swapped, long long W) {
  const auto& S = sy();
  const QMonomial a = S.a.eval(asg), b = S.b.eval(asg), c = S.c.eval(asg);
  const QMonomial u = swapped ? b : a, v = swapped ? a : b;
  const long long ru = swapped ? asg.get(iS) : asg.get(iR);
  const long long su = swapped ? asg.get(iR) : asg.get(iS);
  const QMonomial uv = u * qmono(-su) / v;
  const QMonomial muq = -(u * qmono(1));
  const QMonomial mcv = -(c * qmono(1) / v);
  LaurentSeries sum = series_zero(W);
  for (long long k = 0; k <= ru; ++k) {
    LaurentSeries t = qbinom(ru + su - k, ru - k, W);
    t = t * poch(c, PochIndex::finite(k), W);
    t = t * poch(uv, PochIndex::finite(k), W);
    t = series_div(t, poch(muq, PochIndex::finite(k), W) * poch(mcv, PochIndex::finite(k), W));
    sum = sum + t.shifted((su + 1) * k);
  }
  return series_div(one_plus(v, W), mono_poly({c, v}, W)) * sum;
}

Complex finrs_part_num(const NumAssignment& asg, bool swapped, const NumericConfig& cfg) {
  const Complex a = asg.get(sA), b = asg.get(sB), c = asg.get(sC), q = asg.q;
  const Complex u = swapped ? b : a, v = swapped ? a : b;
  const long long ru = swapped ? asg.get(iS) : asg.get(iR);
  const long long su = swapped ? asg.get(iR) : asg.get(iS);
  const Complex uv = u * cpow(q, -su) / v;
  const Complex muq = -(u * q), mcv = -(c * q / v);
  Complex sum(0.0);
  for (long long k = 0; k <= ru; ++k) {
    Complex t = eval_series_at(qbinom(ru + su - k, ru - k, 1), q);
    t *= poch_num_fin(c, k, asg, cfg) * poch_num_fin(uv, k, asg, cfg);
    t /= poch_num_fin(muq, k, asg, cfg) * poch_num_fin(mcv, k, asg, cfg);
    t *= cpow(q, (su + 1) * k);
    sum += t;
  }
  return (Complex(1.0) + v) / (c + v) * sum;
}

LaurentSeries fina_lhs(const Assignment& asg, long long W) {
  const auto& S = sy();
  const QMonomial a = S.a.eval(asg), c = S.c.eval(asg);
  const long long r = asg.get(iR), s = asg.get(iS);
  const QMonomial maq = (-(S.a * S.q)).eval(asg);
  const QMonomial mca = (-(S.c * S.q / S.a)).eval(asg);
  const QMonomial mia = (-(S.one / S.a)).eval(asg);
  LaurentSeries l1 = series_zero(W);
  for (long long k = 0; k <= r; ++k) {
    LaurentSeries t = qbinom(r + s - k, r - k, W) * poch(c, PochIndex::finite(k), W);
    t = series_div(t, poch(maq, PochIndex::finite(k), W));
    l1 = l1 + t.shifted((s + 1) * k);
  }
  LaurentSeries l2 = series_zero(W);
  for (long long k = 0; k <= s; ++k) {
    LaurentSeries t = qbinom(r + s - k, s - k, W) * poch(c, PochIndex::finite(k), W);
    t = series_div(t, poch(mca, PochIndex::finite(k), W));
    l2 = l2 + t * LaurentSeries(mia.pow(k), W);
  }
  l2 = series_div(one_plus(a, W), mono_poly({c, a}, W)) * l2;
  return l1 - l2;
}

LaurentSeries fina_rhs(const Assignment& asg, long long W) {
  const auto& S = sy();
  const QMonomial c = S.c.eval(asg);
  const long long r = asg.get(iR), s = asg.get(iS);
  const QMonomial maq = (-(S.a * S.q)).eval(asg);
  const QMonomial mca = (-(S.c / S.a)).eval(asg);
  const QMonomial mia = (-(S.one / S.a)).eval(asg);
  LaurentSeries t = LaurentSeries(mia.pow(s + 1), W) * poch(c, PochIndex::finite(1 + r + s), W);
  return series_div(
      t, poch(maq, PochIndex::finite(r), W) * poch(mca, PochIndex::finite(s + 1), W));
}

Complex fina_lhs_num(const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex a = asg.get(sA), c = asg.get(sC), q = asg.q;
  const long long r = asg.get(iR), s = asg.get(iS);
  const Complex maq = -(a * q), mca = -(c * q / a), mia = -(Complex(1.0) / a);
  Complex l1(0.0), l2(0.0);
  for (long long k = 0; k <= r; ++k) {
    Complex t = eval_series_at(qbinom(r + s - k, r - k, 1), q) * poch_num_fin(c, k, asg, cfg);
    t /= poch_num_fin(maq, k, asg, cfg);
    l1 += t * cpow(q, (s + 1) * k);
  }
  for (long long k = 0; k <= s; ++k) {
    Complex t = eval_series_at(qbinom(r + s - k, s - k, 1), q) * poch_num_fin(c, k, asg, cfg);
    t /= poch_num_fin(mca, k, asg, cfg);
    l2 += t * cpow(mia, k);
  }
  return l1 - (Complex(1.0) + a) / (c + a) * l2;
}

Complex fina_rhs_num(const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex a = asg.get(sA), c = asg.get(sC), q = asg.q;
  const long long r = asg.get(iR), s = asg.get(iS);
  Complex t = cpow(-(Complex(1.0) / a), s + 1) * poch_num_fin(c, 1 + r + s, asg, cfg);
  return t / (poch_num_fin(-(a * q), r, asg, cfg) * poch_num_fin(-(c / a), s + 1, asg, cfg));
}

LaurentSeries finc_lhs(const Assignment& asg, long long W) {
  const QMonomial c = sy().c.eval(asg);
  const long long r = asg.get(iR), s = asg.get(iS);
  LaurentSeries l = series_zero(W);
  for (long long k = 0; k <= r; ++k) {
    LaurentSeries t = qbinom(r + s - k, r - k, W) * poch(c, PochIndex::finite(k), W);
    l = l + t.shifted((s + 1) * k);
  }
  return l;
}

LaurentSeries finc_rhs(const Assignment& asg, long long W) {
  const QMonomial c = sy().c.eval(asg);
  const QMonomial ic = mo(1) / c;
  const long long r = asg.get(iR), s = asg.get(iS);
  LaurentSeries r1 = poch(ic, PochIndex::finite(1 + s), W, -1) *
                     poch(c * qmono(1 + s), PochIndex::finite(r), W);
  LaurentSeries r2 = series_zero(W);
  for (long long k = 0; k <= s; ++k) {
    LaurentSeries t = qbinom(r + s - k, s - k, W) * poch(ic, PochIndex::finite(k), W, -1);
    r2 = r2 + t.shifted(-k);
  }
  return r1 + r2 * LaurentSeries(ic, W);
}

Complex finc_lhs_num(const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex c = asg.get(sC), q = asg.q;
  const long long r = asg.get(iR), s = asg.get(iS);
  Complex l(0.0);
  for (long long k = 0; k <= r; ++k)
    l += eval_series_at(qbinom(r + s - k, r - k, 1), q) * poch_num_fin(c, k, asg, cfg) *
         cpow(q, (s + 1) * k);
  return l;
}

Complex finc_rhs_num(const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex c = asg.get(sC), q = asg.q;
  const Complex ic = Complex(1.0) / c;
  const long long r = asg.get(iR), s = asg.get(iS);
  Complex r1 = eval_poch_num(ic, PochIndex::finite(1 + s), q, -1, cfg) *
               poch_num_fin(c * cpow(q, 1 + s), r, asg, cfg);
  Complex r2(0.0);
  for (long long k = 0; k <= s; ++k)
    r2 += eval_series_at(qbinom(r + s - k, s - k, 1), q) *
          eval_poch_num(ic, PochIndex::finite(k), q, -1, cfg) * cpow(q, -k);
  return r1 + r2 * ic;
}

// One side of the terminating (a,b)-symmetric sum:
// (1+b)/(1+bq^m) sum_{k<=m} (q^{-m};q)_k (-aq/d;q)_k (-aq/e;q)_k
//        / ((-aq;q)_k (-q^{1-m}/b;q)_k (abq^2/(de);q)_k) q^k.
LaurentSeries symqm_side(const Assignment& asg, long long N) {
  return exact_through(
      [&](long long W) {
        const auto& S = sy();
        const QMonomial b = S.b.eval(asg);
        const long long m = asg.get(iM);
        const QMonomial n1 = qmono(-m);
        const QMonomial n2 = (-(S.a * S.q / S.d)).eval(asg);
        const QMonomial n3 = (-(S.a * S.q / S.e)).eval(asg);
        const QMonomial d1 = (-(S.a * S.q)).eval(asg);
        const QMonomial d2 = (-(S.one / S.b)).eval(asg) * qmono(1 - m);
        const QMonomial d3 = (S.a * S.b * S.q * S.q / (S.d * S.e)).eval(asg);
        LaurentSeries sum = series_zero(W);
        for (long long k = 0; k <= m; ++k) {
          LaurentSeries t = poch(n1, PochIndex::finite(k), W) *
                            poch(n2, PochIndex::finite(k), W) * poch(n3, PochIndex::finite(k), W);
          t = series_div(t, poch(d1, PochIndex::finite(k), W) *
                                poch(d2, PochIndex::finite(k), W) *
                                poch(d3, PochIndex::finite(k), W));
          sum = sum + t.shifted(k);
        }
        return series_div(one_plus(b, W), one_plus(b * qmono(m), W)) * sum;
      },
      N);
}

Complex symqm_side_num(const NumAssignment& asg, const NumericConfig& cfg) {
  const Complex a = asg.get(sA), b = asg.get(sB), d = asg.get(sD), e = asg.get(sE), q = asg.q;
  const long long m = asg.get(iM);
  const Complex n1 = cpow(q, -m);
  const Complex n2 = -(a * q / d), n3 = -(a * q / e);
  const Complex d1 = -(a * q), d2 = -(cpow(q, 1 - m) / b), d3 = a * b * q * q / (d * e);
  Complex sum(0.0);
  for (long long k = 0; k <= m; ++k) {
    Complex t = poch_num_fin(n1, k, asg, cfg) * poch_num_fin(n2, k, asg, cfg) *
                poch_num_fin(n3, k, asg, cfg);
    t /= poch_num_fin(d1, k, asg, cfg) * poch_num_fin(d2, k, asg, cfg) *
         poch_num_fin(d3, k, asg, cfg);
    sum += t * cpow(q, k);
  }
  return (Complex(1.0) + b) / (Complex(1.0) + b * cpow(q, m)) * sum;
}

// ---------------------------------------------------------------------------
// Terminating 8-parameter transformation helpers (w = q^{-n} is derived)
// ---------------------------------------------------------------------------

Assignment with_w(const Assignment& asg) {
  Assignment r = asg;
  r.set(Slot::w, qmono(-asg.get(iN)));
  return r;
}

NumAssignment with_w_num(const NumAssignment& asg) {
  NumAssignment r = asg;
  r.set(Slot::w, cpow(asg.q, -asg.get(iN)));
  return r;
}

SeriesSpec w87_lhs_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.kernel = S.a;
  sp.kernel_norm = S.a;
  sp.num = {{S.a, 0}, {S.b, 0}, {S.c, 0}, {S.y, 0}, {S.z, 0}, {S.w, 0}};
  sp.den = {{S.q, 0},           {S.a * S.q / S.b, 0}, {S.a * S.q / S.c, 0},
            {S.a * S.q / S.y, 0}, {S.a * S.q / S.z, 0}, {S.a * S.q / S.w, 0}};
  sp.arg = S.a * S.a * S.q * S.q / (S.b * S.c * S.y * S.z * S.w);
  return sp;
}

SeriesSpec w87_rhs_sum_spec() {
  const auto& S = sy();
  SeriesSpec sp;
  sp.num = {{S.a * S.q / (S.b * S.c), 0}, {S.y, 0}, {S.z, 0}, {S.w, 0}};
  sp.den = {{S.q, 0}, {S.a * S.q / S.b, 0}, {S.a * S.q / S.c, 0}, {S.y * S.z * S.w / S.a, 0}};
  sp.arg = S.q;
  return sp;
}

// ---------------------------------------------------------------------------
// Degenerate-series summation (scaled limits realized exactly)
// ---------------------------------------------------------------------------

LaurentSeries degen_series(LaurentSeries (*term)(const Assignment&, long long, long long),
                           const Assignment& asg, long long N) {
  LaurentSeries acc = series_zero(N);
  int quiet = 0;
  const long long cap = 8 * std::max<long long>(N, 4) + 64;
  for (long long k = 0; k <= cap; ++k) {
    LaurentSeries t = term(asg, k, N);
    acc = series_add(acc, t);
    if (t.min_order() > N) {
      if (++quiet >= 4) return acc;
    } else {
      quiet = 0;
    }
  }
  raise(Err::NoConvergence, "degenerate series did not stabilize below the truncation order");
}

}  // namespace

// ---------------------------------------------------------------------------
// Named families: public surface
// ---------------------------------------------------------------------------

const char* rho_rep_name(RhoRep rep) {
  switch (rep) {
    case RhoRep::Direct: return "Direct";
    case RhoRep::Rho0: return "Rho0";
    case RhoRep::RepA: return "RepA";
    case RhoRep::RepB: return "RepB";
    case RhoRep::RepC: return "RepC";
    case RhoRep::Terminating: return "Terminating";
  }
  return "?";
}

const char* xi_form_name(XiForm form) {
  return form == XiForm::SumForm ? "SumForm" : "BinomForm";
}

SeriesSpec rho_series_spec(int arity, RhoRep rep) {
  if (arity == 2 && rep == RhoRep::Direct) return rho2_spec();
  if (arity == 4) {
    if (rep == RhoRep::RepA) return rho4_repA_spec();
    if (rep == RhoRep::RepB) return rho4_repB_spec();
    if (rep == RhoRep::RepC) return rho4_repC_spec();
  }
  if (arity == 5) {
    if (rep == RhoRep::Direct) return rho5_spec(false);
    if (rep == RhoRep::Rho0) return rho5_spec(true);
    if (rep == RhoRep::Terminating) return rho5_term_spec();
  }
  raise(Err::BadInput, std::string("no rho representation ") + rho_rep_name(rep) + " at arity " +
                           std::to_string(arity));
}

LaurentSeries rho_prefactor(int arity, RhoRep rep, const Assignment& asg, long long N) {
  rho_series_spec(arity, rep);  // validates the (arity, rep) pair
  // The five-parameter direct series carries its (1 + 1/b) factor inside the
  // (-1/b;q)_{k+1} numerator, so no external prefactor.
  if (rep == RhoRep::RepB || rep == RhoRep::Rho0 || (arity == 5 && rep == RhoRep::Direct))
    return series_one(N);
  if (rep == RhoRep::Terminating) {
    const auto& S = sy();
    const QMonomial b = S.b.eval(asg), c = S.c.eval(asg);
    const QMonomial r = (S.d * S.e / (S.a * S.b * S.q)).eval(asg);
    return exact_through(
        [&](long long W) {
          return series_div(one_plus(b, W), mono_poly({b, c}, W) * one_plus(-r, W));
        },
        N);
  }
  return one_plus_inv_b(asg, N);
}

LaurentSeries rho_exact(int arity, RhoRep rep, const Assignment& asg, long long N) {
  const SeriesSpec sp = rho_series_spec(arity, rep);
  if (rep == RhoRep::Terminating && !rho5_cutoff(asg))
    raise(Err::TerminationRequired,
          "terminating representation requires one of c, -aq/d, -aq/e to equal q^{-m}");
  return exact_through(
      [&](long long W) { return rho_prefactor(arity, rep, asg, W) * sum_spec(sp, asg, W); }, N);
}

Complex rho_num(int arity, RhoRep rep, const NumAssignment& asg, const NumericConfig& cfg) {
  set_precision_bits(cfg.precision_bits);
  const SeriesSpec sp = rho_series_spec(arity, rep);
  if (rep == RhoRep::Terminating) {
    if (!asg.ints[static_cast<int>(IntSlot::m)])
      raise(Err::TerminationRequired, "numeric terminating evaluation reads the cutoff from slot m");
    const long long m = asg.get(iM);
    const Complex a = asg.get(sA), b = asg.get(sB), c = asg.get(sC), d = asg.get(sD),
                  e = asg.get(sE), q = asg.q;
    const Complex n2 = -(a * q / d), n3 = -(a * q / e);
    const Complex d1 = -(a * q), d2 = -(c * q / b), d3 = a * b * q * q / (d * e);
    Complex sum(0.0);
    for (long long k = 0; k <= m; ++k) {
      Complex t = poch_num_fin(c, k, asg, cfg) * poch_num_fin(n2, k, asg, cfg) *
                  poch_num_fin(n3, k, asg, cfg);
      t /= poch_num_fin(d1, k, asg, cfg) * poch_num_fin(d2, k, asg, cfg) *
           poch_num_fin(d3, k, asg, cfg);
      sum += t * cpow(q, k);
    }
    const Complex pref = (Complex(1.0) + b) / ((b + c) * (Complex(1.0) - d * e / (a * b * q)));
    return pref * sum;
  }
  Complex pref(1.0);
  if (rep == RhoRep::RepA || rep == RhoRep::RepC || (arity == 2 && rep == RhoRep::Direct))
    pref = Complex(1.0) + Complex(1.0) / asg.get(sB);
  return pref * eval_sum_num(sp, asg, cfg);
}

SeriesSpec xi_series_spec(XiForm form) {
  const auto& S = sy();
  SeriesSpec sp;
  if (form == XiForm::SumForm) {
    sp.num = {{S.a, 0}};
    sp.arg = S.x;
  } else {
    sp.quad = {1, 0};
    sp.den = {{S.x, 1}};
    sp.arg = -(S.a * S.x);
  }
  return sp;
}

LaurentSeries xi_exact(XiForm form, const Assignment& asg, long long N) {
  const SeriesSpec sp = xi_series_spec(form);
  return exact_through([&](long long W) { return sum_spec(sp, asg, W); }, N);
}

Complex xi_num(XiForm form, const NumAssignment& asg, const NumericConfig& cfg) {
  set_precision_bits(cfg.precision_bits);
  return eval_sum_num(xi_series_spec(form), asg, cfg);
}

LaurentSeries degen54_term(const Assignment& asg, long long k, long long N) {
  if (k < 0) raise(Err::BadInput, "term index must be nonnegative");
  const auto& S = sy();
  const QMonomial ker = (S.a * S.q / S.b).eval(asg);
  const QMonomial ib = (-(S.one / S.b)).eval(asg);
  const QMonomial mac = (-(S.a * S.q / S.c)).eval(asg);
  const QMonomial mad = (-(S.a * S.q / S.d)).eval(asg);
  const QMonomial maq = (-(S.a * S.q)).eval(asg);
  const QMonomial mcb = (-(S.c / S.b)).eval(asg);
  const QMonomial mdb = (-(S.d / S.b)).eval(asg);
  const QMonomial zk = (S.c * S.d / (S.a * S.b * S.q)).eval(asg).pow(k);
  return exact_through(
      [&](long long W) {
        LaurentSeries t = one_plus(-(ker * qmono(2 * k)), W);
        t = t * poch(ib, PochIndex::finite(k + 1), W);
        t = t * poch(mac, PochIndex::finite(k), W);
        t = t * poch(mad, PochIndex::finite(k), W);
        t = t * poch_scaled_limit(LaurentSeries(maq, W), k);
        t = series_div(t, poch(maq, PochIndex::finite(k), W) *
                              poch(mcb, PochIndex::finite(k + 1), W) *
                              poch(mdb, PochIndex::finite(k + 1), W));
        return t * LaurentSeries(zk, W);
      },
      N);
}

LaurentSeries degen52_term(const Assignment& asg, long long k, long long N) {
  if (k < 0) raise(Err::BadInput, "term index must be nonnegative");
  const auto& S = sy();
  const QMonomial ker = (S.a * S.q / S.b).eval(asg);
  const QMonomial ib = (-(S.one / S.b)).eval(asg);
  const QMonomial maq = (-(S.a * S.q)).eval(asg);
  const QMonomial zk = (S.one / (S.a * S.b * S.q)).eval(asg).pow(k);
  return exact_through(
      [&](long long W) {
        LaurentSeries t = one_plus(-(ker * qmono(2 * k)), W);
        t = t * poch(ib, PochIndex::finite(k + 1), W);
        t = t * series_pow(poch_scaled_limit(LaurentSeries(maq, W), k), 3);
        t = series_div(t, poch(maq, PochIndex::finite(k), W));
        return t * LaurentSeries(zk, W);
      },
      N);
}

Assignment swapped_ab(const Assignment& asg) {
  Assignment r = asg;
  std::swap(r.mono[static_cast<int>(Slot::a)], r.mono[static_cast<int>(Slot::b)]);
  return r;
}

NumAssignment swapped_ab(const NumAssignment& asg) {
  NumAssignment r = asg;
  std::swap(r.val[static_cast<int>(Slot::a)], r.val[static_cast<int>(Slot::b)]);
  return r;
}

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

namespace {

IdentityEntry make_recip(int arity) {
  const auto& S = sy();
  IdentityEntry e;
  e.id = arity == 2 ? "RECIP2" : (arity == 4 ? "RECIP4" : "RECIP5");
  e.anchor = arity == 2 ? "Theorem 1.1" : (arity == 4 ? "Theorem 1.2" : "Theorem 1.3");
  e.summary = "rho(a,b,...) - rho(b,a,...) equals a closed infinite-product form (" +
              std::to_string(arity) + " parameters).";
  e.slots = {msd("a", "nonzero; not -q^{-j-1}"), msd("b", "nonzero; not -q^{-j-1}")};
  if (arity >= 4) {
    e.slots.push_back(msd("c", "nonzero; -c/a, -c/b not q^{-j}"));
    e.slots.push_back(msd("d", "nonzero; -d/a, -d/b not q^{-j}"));
  }
  if (arity >= 5) e.slots.push_back(msd("e", "nonzero; -e/a, -e/b not q^{-j}"));

  const RhoRep rep = arity == 4 ? RhoRep::RepA : RhoRep::Direct;
  std::vector<Slot> req = {sA, sB};
  if (arity >= 4) {
    req.push_back(sC);
    req.push_back(sD);
  }
  if (arity >= 5) req.push_back(sE);
  const std::vector<PE> dens = recip_prod_dens(arity);
  e.check = [req, dens](const Assignment& asg) -> std::optional<std::string> {
    for (Slot s : req)
      if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
    return check_no_unit_nonpos(asg, dens);
  };
  e.lhs_exact = [arity, rep](const Assignment& asg, long long N) {
    return rho_exact(arity, rep, asg, N) - rho_exact(arity, rep, swapped_ab(asg), N);
  };
  e.rhs_exact = [arity](const Assignment& asg, long long N) {
    return recip_rhs_exact(arity, asg, N);
  };
  e.lhs_num = [arity, rep](const NumAssignment& asg, const NumericConfig& cfg) {
    return rho_num(arity, rep, asg, cfg) - rho_num(arity, rep, swapped_ab(asg), cfg);
  };
  e.rhs_num = [arity](const NumAssignment& asg, const NumericConfig& cfg) {
    return recip_rhs_num(arity, asg, cfg);
  };

  if (arity == 2) {
    e.check_num = [](const NumAssignment& asg) { return check_nonzero_num(asg, {sA, sB}); };
    e.suggested_exact = {mk({{sA, mo(2)}, {sB, mo(3)}}), mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}}),
                         mk({{sA, mo(3, 1, 1)}, {sB, mo(2)}}), mk({{sA, mo(-3)}, {sB, mo(5, 7)}}),
                         mk({{sA, mo(2, 1, 2)}, {sB, mo(3, 1, 1)}})};
    e.suggested_numeric = {mk({{sA, mo(7, 10)}, {sB, mo(2, 5)}}),
                           mk({{sA, mo(1, 2)}, {sB, mo(3, 10)}}),
                           mk({{sA, mo(2)}, {sB, mo(3)}}),
                           mk({{sA, mo(-3, 5)}, {sB, mo(4, 5)}}),
                           mk({{sA, mo(9, 10)}, {sB, mo(-1, 2)}})};
  } else if (arity == 4) {
    e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
      if (auto v = check_nonzero_num(asg, {sA, sB, sC, sD})) return v;
      const Real dd = abs(asg.get(sD));
      if (!(dd < abs(asg.get(sA)) && dd < abs(asg.get(sB))))
        return "need |d| < min(|a|, |b|) so both sum orderings converge";
      return std::nullopt;
    };
    e.suggested_exact = {
        mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, qmono(1)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}}),
        mk({{sA, mo(3)}, {sB, mo(5, 7)}, {sC, qmono(1)}, {sD, mo(2, 1, 2)}}),
        mk({{sA, mo(-2)}, {sB, mo(3)}, {sC, mo(-1, 1, 1)}, {sD, mo(1, 2, 1)}}),
        mk({{sA, mo(5, 7)}, {sB, mo(-3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}})};
    e.suggested_numeric = {
        mk({{sA, mo(3, 5)}, {sB, mo(7, 20)}, {sC, mo(1, 5)}, {sD, mo(3, 20)}}),
        mk({{sA, mo(7, 10)}, {sB, mo(1, 2)}, {sC, mo(3, 10)}, {sD, mo(1, 5)}}),
        mk({{sA, mo(4, 5)}, {sB, mo(9, 20)}, {sC, mo(-1, 5)}, {sD, mo(3, 10)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(9, 10)}, {sC, mo(1, 4)}, {sD, mo(2, 5)}}),
        mk({{sA, mo(-3, 5)}, {sB, mo(1, 2)}, {sC, mo(1, 5)}, {sD, mo(1, 10)}})};
  } else {
    const PE zz = S.c * S.d * S.e / (S.a * S.b * S.q);
    e.check_num = [zz](const NumAssignment& asg) -> std::optional<std::string> {
      if (auto v = check_nonzero_num(asg, {sA, sB, sC, sD, sE})) return v;
      if (!(abs(eval_param_num(zz, asg)) < 1)) return "need |cde/(abq)| < 1";
      return std::nullopt;
    };
    e.suggested_exact = {
        mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, qmono(1)}, {sE, qmono(1)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, qmono(1)}, {sD, mo(2, 1, 1)}, {sE, qmono(1)}}),
        mk({{sA, mo(3)}, {sB, mo(2)}, {sC, qmono(2)}, {sD, qmono(1)}, {sE, mo(-1, 1, 1)}}),
        mk({{sA, mo(5, 7)}, {sB, mo(-3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}, {sE, qmono(1)}}),
        mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, qmono(1)}, {sE, mo(2, 1, 2)}})};
    e.suggested_numeric = {
        mk({{sA, mo(3, 5)}, {sB, mo(7, 20)}, {sC, mo(1, 5)}, {sD, mo(3, 20)}, {sE, mo(1, 10)}}),
        mk({{sA, mo(7, 10)}, {sB, mo(2, 5)}, {sC, mo(3, 10)}, {sD, mo(1, 5)}, {sE, mo(1, 10)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(9, 10)}, {sC, mo(1, 4)}, {sD, mo(1, 5)}, {sE, mo(3, 20)}}),
        mk({{sA, mo(-3, 5)}, {sB, mo(1, 2)}, {sC, mo(1, 5)}, {sD, mo(1, 10)}, {sE, mo(3, 10)}}),
        mk({{sA, mo(4, 5)}, {sB, mo(9, 20)}, {sC, mo(-1, 5)}, {sD, mo(3, 10)}, {sE, mo(1, 4)}})};
  }
  return e;
}

IdentityEntry make_bailey() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "BAILEY_6PSI6";
  e.anchor = "Lemma 2.1";
  e.summary = "Very-well-poised bilateral 6-parameter summation with argument a^2 q/(bcde).";
  e.slots = {msd("a", "nonzero; not a power of q"), msd("b", "nonzero"), msd("c", "nonzero"),
             msd("d", "nonzero"), msd("e", "nonzero")};

  SeriesSpec sp;
  sp.kind = SumKind::Bilateral;
  sp.kernel = S.a;
  sp.kernel_norm = S.a;
  sp.num = {{S.b, 0}, {S.c, 0}, {S.d, 0}, {S.e, 0}};
  sp.den = {{S.a * S.q / S.b, 0}, {S.a * S.q / S.c, 0}, {S.a * S.q / S.d, 0}, {S.a * S.q / S.e, 0}};
  sp.arg = S.a * S.a * S.q / (S.b * S.c * S.d * S.e);

  const std::vector<PE> pn = {S.q,
                              S.a * S.q,
                              S.q / S.a,
                              S.a * S.q / (S.b * S.c),
                              S.a * S.q / (S.b * S.d),
                              S.a * S.q / (S.b * S.e),
                              S.a * S.q / (S.c * S.d),
                              S.a * S.q / (S.c * S.e),
                              S.a * S.q / (S.d * S.e)};
  const std::vector<PE> pd = {S.a * S.q / S.b,
                              S.a * S.q / S.c,
                              S.a * S.q / S.d,
                              S.a * S.q / S.e,
                              S.q / S.b,
                              S.q / S.c,
                              S.q / S.d,
                              S.q / S.e,
                              S.a * S.a * S.q / (S.b * S.c * S.d * S.e)};
  const PE zz = sp.arg;

  e.check = [pd](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sB, sC, sD, sE})) return v;
    if (auto v = check_no_unit(asg, {sy().a})) return v;
    return check_no_unit_nonpos(asg, pd);
  };
  e.check_num = [zz](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sD, sE})) return v;
    if ((asg.get(sA) - Complex(1.0)).is_zero()) return "a = 1 makes the normalizer vanish";
    if (!(abs(eval_param_num(zz, asg)) < 1)) return "need |a^2 q/(bcde)| < 1";
    return std::nullopt;
  };
  e.lhs_exact = [sp](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(sp, asg, W); }, N);
  };
  e.rhs_exact = [pn, pd](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return poch_quot_exact(pn, pd, asg, W); }, N);
  };
  e.lhs_num = [sp](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(sp, asg, cfg);
  };
  e.rhs_num = [pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2, 3, 1)}, {sB, mo(-1, 3, 1)}, {sC, mo(-2)}, {sD, mo(-2)}, {sE, mo(-2)}}),
      mk({{sA, mo(-3, 4, 1)}, {sB, mo(3, 2, 1)}, {sC, mo(-1, 2)}, {sD, mo(-1, 4)}, {sE, mo(-1, 2)}}),
      mk({{sA, mo(3, 2, 1)}, {sB, mo(-1, 2, 1)}, {sC, mo(-3, 2)}, {sD, mo(-3)}, {sE, mo(-3)}}),
      mk({{sA, mo(2, 3, 1)}, {sB, mo(-1, 3, 1)}, {sC, mo(-2)}, {sD, mo(-1)}, {sE, mo(-2)}}),
      mk({{sA, mo(-5, 21, 1)}, {sB, mo(1, 3, 1)}, {sC, mo(-5, 7)}, {sD, mo(-5, 7)}, {sE, mo(-5, 7)}})};
  e.suggested_numeric = {
      mk({{sA, mo(1, 2)}, {sB, mo(3, 5)}, {sC, mo(7, 10)}, {sD, mo(4, 5)}, {sE, mo(9, 10)}}),
      mk({{sA, mo(2, 5)}, {sB, mo(1, 2)}, {sC, mo(3, 5)}, {sD, mo(7, 10)}, {sE, mo(4, 5)}}),
      mk({{sA, mo(3, 10)}, {sB, mo(-1, 2)}, {sC, mo(3, 5)}, {sD, mo(4, 5)}, {sE, mo(7, 10)}}),
      mk({{sA, mo(1, 4)}, {sB, mo(1, 2)}, {sC, mo(-3, 5)}, {sD, mo(9, 10)}, {sE, mo(4, 5)}}),
      mk({{sA, mo(1, 2)}, {sB, mo(2)}, {sC, mo(7, 10)}, {sD, mo(4, 5)}, {sE, mo(9, 10)}}),
      mk({{sA, mo(-2, 5)}, {sB, mo(3, 5)}, {sC, mo(-7, 10)}, {sD, mo(4, 5)}, {sE, mo(-9, 10)}})};
  return e;
}

IdentityEntry make_w87() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "WATSON_8W7";
  e.anchor = "Lemma 3.1";
  e.summary = "Terminating very-well-poised transformation: the 8-parameter sum equals a "
              "4-parameter sum with a product prefactor (w = q^{-n}).";
  e.slots = {msd("a", "nonzero; not 1"), msd("b", "nonzero"), msd("c", "nonzero"),
             msd("y", "nonzero"), msd("z", "nonzero"), isd("n")};

  const SeriesSpec lhs = w87_lhs_spec();
  const SeriesSpec rhs = w87_rhs_sum_spec();
  const std::vector<PE> pn = {S.a * S.q, S.a * S.q / (S.y * S.z), S.a * S.q / (S.y * S.w),
                              S.a * S.q / (S.z * S.w)};
  const std::vector<PE> pd = {S.a * S.q / S.y, S.a * S.q / S.z, S.a * S.q / S.w,
                              S.a * S.q / (S.y * S.z * S.w)};
  const std::vector<PE> units = {S.a * S.q / S.b,  S.a * S.q / S.c,
                                 S.a * S.q / S.y,  S.a * S.q / S.z,
                                 S.a * S.q / S.w,  S.y * S.z * S.w / S.a,
                                 S.a * S.q / (S.y * S.z * S.w)};

  e.check = [units](const Assignment& asg0) -> std::optional<std::string> {
    if (asg0.get(iN) < 0) return "n must be >= 0";
    if (auto v = check_nonzero(asg0, {sA, sB, sC, sY, sZ})) return v;
    const Assignment asg = with_w(asg0);
    if (sy().a.eval(asg).is_one()) return "a = 1 makes the normalizer vanish";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(iN) < 0) return "n must be >= 0";
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sY, sZ})) return v;
    if ((asg.get(sA) - Complex(1.0)).is_zero()) return "a = 1 makes the normalizer vanish";
    return std::nullopt;
  };
  e.lhs_exact = [lhs](const Assignment& asg0, long long N) {
    const Assignment asg = with_w(asg0);
    return exact_through([&](long long W) { return sum_spec(lhs, asg, W); }, N);
  };
  e.rhs_exact = [rhs, pn, pd](const Assignment& asg0, long long N) {
    const Assignment asg = with_w(asg0);
    return exact_through(
        [&](long long W) { return poch_quot_exact(pn, pd, asg, W) * sum_spec(rhs, asg, W); }, N);
  };
  e.lhs_num = [lhs](const NumAssignment& asg0, const NumericConfig& cfg) {
    return eval_sum_num(lhs, with_w_num(asg0), cfg);
  };
  e.rhs_num = [rhs, pn, pd](const NumAssignment& asg0, const NumericConfig& cfg) {
    const NumAssignment asg = with_w_num(asg0);
    return poch_quot_num(pn, pd, asg, cfg) * eval_sum_num(rhs, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(4, 1, 2)}, {sB, mo(2)}, {sC, mo(3)}, {sY, mo(-2)}, {sZ, mo(5, 7)}}, {{iN, 3}}),
      mk({{sA, qmono(2)}, {sB, mo(3)}, {sC, mo(1, 2)}, {sY, mo(2)}, {sZ, mo(-3)}}, {{iN, 2}}),
      mk({{sA, mo(2, 1, 1)}, {sB, mo(-2)}, {sC, mo(3)}, {sY, mo(1, 2)}, {sZ, mo(2)}}, {{iN, 4}}),
      mk({{sA, mo(3, 1, 2)}, {sB, mo(2)}, {sC, mo(-3)}, {sY, mo(2)}, {sZ, mo(3)}}, {{iN, 0}}),
      mk({{sA, mo(9, 1, 4)}, {sB, mo(3)}, {sC, mo(-2)}, {sY, mo(3)}, {sZ, mo(1, 2)}}, {{iN, 3}})};
  e.suggested_numeric = {
      mk({{sA, mo(1, 2)}, {sB, mo(3, 5)}, {sC, mo(7, 10)}, {sY, mo(4, 5)}, {sZ, mo(9, 10)}},
         {{iN, 4}}),
      mk({{sA, mo(2, 5)}, {sB, mo(1, 2)}, {sC, mo(3, 5)}, {sY, mo(7, 10)}, {sZ, mo(4, 5)}},
         {{iN, 3}}),
      mk({{sA, mo(3, 5)}, {sB, mo(-1, 2)}, {sC, mo(2, 5)}, {sY, mo(7, 10)}, {sZ, mo(-4, 5)}},
         {{iN, 5}}),
      mk({{sA, mo(1, 4)}, {sB, mo(2)}, {sC, mo(3)}, {sY, mo(1, 2)}, {sZ, mo(3, 5)}}, {{iN, 2}}),
      mk({{sA, mo(9, 10)}, {sB, mo(1, 2)}, {sC, mo(2, 5)}, {sY, mo(3, 5)}, {sZ, mo(7, 10)}},
         {{iN, 6}})};
  return e;
}

IdentityEntry make_watson_limit() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "WATSON_LIMIT";
  e.anchor = "Section 3";
  e.summary = "Nonterminating limit of the very-well-poised transformation with argument aq/(yz).";
  e.slots = {msd("a", "nonzero; not 1"), msd("b", "nonzero"), msd("c", "nonzero; not q^{-j}"),
             msd("y", "nonzero"), msd("z", "nonzero")};

  SeriesSpec lhs;
  lhs.num = {{S.b, 0}, {S.y, 0}, {S.z, 0}};
  lhs.den = {{S.q, 0}, {S.c, 0}, {S.a * S.b * S.q / S.c, 0}};
  lhs.arg = S.a * S.q / (S.y * S.z);

  SeriesSpec rhs;
  rhs.quad = {1, 0};
  rhs.kernel = S.a;
  rhs.kernel_norm = S.a;
  rhs.num = {{S.a, 0}, {S.c / S.b, 0}, {S.a * S.q / S.c, 0}, {S.y, 0}, {S.z, 0}};
  rhs.den = {{S.q, 0}, {S.a * S.b * S.q / S.c, 0}, {S.c, 0}, {S.a * S.q / S.y, 0},
             {S.a * S.q / S.z, 0}};
  rhs.arg = -(S.a * S.b * S.q / (S.y * S.z));

  const std::vector<PE> pn = {S.a * S.q / S.y, S.a * S.q / S.z};
  const std::vector<PE> pd = {S.a * S.q, S.a * S.q / (S.y * S.z)};
  const std::vector<PE> units = {S.c, S.a * S.b * S.q / S.c, S.a * S.q / S.y, S.a * S.q / S.z,
                                 S.a * S.q, S.a * S.q / (S.y * S.z)};
  const PE zlhs = lhs.arg;

  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sB, sC, sY, sZ})) return v;
    if (sy().a.eval(asg).is_one()) return "a = 1 makes the normalizer vanish";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [zlhs](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sY, sZ})) return v;
    if ((asg.get(sA) - Complex(1.0)).is_zero()) return "a = 1 makes the normalizer vanish";
    if (!(abs(eval_param_num(zlhs, asg)) < 1)) return "need |aq/(yz)| < 1";
    return std::nullopt;
  };
  e.lhs_exact = [lhs](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(lhs, asg, W); }, N);
  };
  e.rhs_exact = [rhs, pn, pd](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) { return poch_quot_exact(pn, pd, asg, W) * sum_spec(rhs, asg, W); }, N);
  };
  e.lhs_num = [lhs](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(lhs, asg, cfg);
  };
  e.rhs_num = [rhs, pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg) * eval_sum_num(rhs, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sY, mo(2)}, {sZ, mo(5, 7)}}),
      mk({{sA, mo(3)}, {sB, mo(1, 2)}, {sC, mo(2, 1, 1)}, {sY, mo(-2)}, {sZ, mo(3)}}),
      mk({{sA, qmono(1)}, {sB, mo(2)}, {sC, mo(3, 1, 1)}, {sY, mo(1, 2)}, {sZ, mo(2)}}),
      mk({{sA, mo(2)}, {sB, mo(-3)}, {sC, qmono(1)}, {sY, mo(3)}, {sZ, mo(5, 7)}}),
      mk({{sA, mo(5, 7)}, {sB, mo(2)}, {sC, qmono(2)}, {sY, mo(-1, 2)}, {sZ, mo(-2)}})};
  e.suggested_numeric = {
      mk({{sA, mo(3, 10)}, {sB, mo(1, 2)}, {sC, mo(1, 4)}, {sY, mo(4, 5)}, {sZ, mo(7, 10)}}),
      mk({{sA, mo(2, 5)}, {sB, mo(3, 5)}, {sC, mo(3, 10)}, {sY, mo(7, 10)}, {sZ, mo(9, 10)}}),
      mk({{sA, mo(1, 5)}, {sB, mo(1, 2)}, {sC, mo(7, 20)}, {sY, mo(3, 5)}, {sZ, mo(4, 5)}}),
      mk({{sA, mo(1, 2)}, {sB, mo(3, 10)}, {sC, mo(1, 5)}, {sY, mo(9, 10)}, {sZ, mo(4, 5)}}),
      mk({{sA, mo(3, 10)}, {sB, mo(-2, 5)}, {sC, mo(1, 4)}, {sY, mo(7, 10)}, {sZ, mo(3, 5)}})};
  return e;
}

IdentityEntry make_watson_zq() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "WATSON_ZQ";
  e.anchor = "Lemma 3.3";
  e.summary = "Specialized transformation with argument a/y; no (q;q)_k factor on either side.";
  e.slots = {msd("a", "nonzero; a != y"), msd("b", "nonzero"), msd("c", "nonzero; not q^{-j}"),
             msd("y", "nonzero")};

  SeriesSpec lhs;
  lhs.num = {{S.b, 0}, {S.y, 0}};
  lhs.den = {{S.c, 0}, {S.a * S.b * S.q / S.c, 0}};
  lhs.arg = S.a / S.y;

  SeriesSpec rhs;
  rhs.quad = {1, 0};
  rhs.kernel = S.a;
  rhs.kernel_norm = S.a / S.y;
  rhs.num = {{S.c / S.b, 0}, {S.a * S.q / S.c, 0}, {S.y, 0}};
  rhs.den = {{S.a * S.b * S.q / S.c, 0}, {S.c, 0}, {S.a * S.q / S.y, 0}};
  rhs.arg = -(S.a * S.b / S.y);

  const std::vector<PE> units = {S.c, S.a * S.b * S.q / S.c, S.a * S.q / S.y};
  const PE z1 = lhs.arg, z2 = S.a * S.b / S.y;

  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sB, sC, sY})) return v;
    if ((sy().a / sy().y).eval(asg).is_one()) return "a = y makes the normalizer vanish";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [z1, z2](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sY})) return v;
    if ((asg.get(sA) - asg.get(sY)).is_zero()) return "a = y makes the normalizer vanish";
    if (!(abs(eval_param_num(z1, asg)) < 1 && abs(eval_param_num(z2, asg)) < 1))
      return "need max(|a/y|, |ab/y|) < 1";
    return std::nullopt;
  };
  e.lhs_exact = [lhs](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(lhs, asg, W); }, N);
  };
  e.rhs_exact = [rhs](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(rhs, asg, W); }, N);
  };
  e.lhs_num = [lhs](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(lhs, asg, cfg);
  };
  e.rhs_num = [rhs](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(rhs, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2, 1, 1)}, {sB, mo(3)}, {sC, qmono(1)}, {sY, mo(2)}}),
      mk({{sA, mo(3, 1, 2)}, {sB, mo(1, 2)}, {sC, mo(2, 1, 1)}, {sY, mo(-3)}}),
      mk({{sA, mo(-2, 1, 1)}, {sB, mo(-3)}, {sC, mo(3, 1, 2)}, {sY, mo(1, 2)}}),
      mk({{sA, mo(1, 2, 1)}, {sB, mo(2)}, {sC, qmono(1)}, {sY, mo(5, 7)}}),
      mk({{sA, mo(2, 1, 2)}, {sB, mo(-1, 2)}, {sC, qmono(2)}, {sY, mo(3)}})};
  e.suggested_numeric = {
      mk({{sA, mo(3, 10)}, {sB, mo(3, 5)}, {sC, mo(1, 4)}, {sY, mo(4, 5)}}),
      mk({{sA, mo(2, 5)}, {sB, mo(1, 2)}, {sC, mo(3, 10)}, {sY, mo(9, 10)}}),
      mk({{sA, mo(1, 5)}, {sB, mo(7, 10)}, {sC, mo(7, 20)}, {sY, mo(3, 5)}}),
      mk({{sA, mo(1, 2)}, {sB, mo(2, 5)}, {sC, mo(1, 5)}, {sY, mo(4, 5)}}),
      mk({{sA, mo(7, 20)}, {sB, mo(-1, 2)}, {sC, mo(3, 10)}, {sY, mo(7, 10)}})};
  return e;
}

IdentityEntry make_rho4_reps() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "RHO4_REPS";
  e.anchor = "Theorem 3.1";
  e.summary = "The three series representations of the four-parameter rho agree.";
  e.slots = {msd("a", "nonzero; not -q^{-j-1}"), msd("b", "nonzero"),
             msd("c", "nonzero; -c/b not q^{-j}"), msd("d", "nonzero; -d/b not q^{-j}")};

  const std::vector<PE> units = {-(S.a * S.q), -(S.c / S.b), -(S.d / S.b)};
  const PE zA = -(S.d / S.b);
  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sB, sC, sD})) return v;
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [zA](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sD})) return v;
    if (!(abs(eval_param_num(zA, asg)) < 1)) return "need |d/b| < 1";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return rho_exact(4, RhoRep::RepA, asg, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return rho_exact(4, RhoRep::RepB, asg, N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return rho_num(4, RhoRep::RepA, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return rho_num(4, RhoRep::RepB, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, qmono(1)}}),
      mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}}),
      mk({{sA, mo(3)}, {sB, mo(5, 7)}, {sC, qmono(2)}, {sD, qmono(1)}}),
      mk({{sA, mo(-2)}, {sB, mo(3)}, {sC, mo(-1, 1, 1)}, {sD, mo(1, 2, 1)}}),
      mk({{sA, mo(2)}, {sB, mo(-3)}, {sC, qmono(1)}, {sD, mo(3, 1, 1)}}),
      mk({{sA, mo(-1, 2)}, {sB, mo(2, 3)}, {sC, qmono(1)}, {sD, qmono(1)}}),
      mk({{sA, mo(3)}, {sB, mo(2)}, {sC, mo(2, 1, 2)}, {sD, qmono(1)}}),
      mk({{sA, mo(2, 3)}, {sB, mo(1, 2)}, {sC, qmono(1)}, {sD, mo(-2, 1, 1)}}),
      mk({{sA, mo(7, 5)}, {sB, mo(3)}, {sC, mo(-1, 1, 2)}, {sD, qmono(1)}}),
      mk({{sA, mo(5, 7)}, {sB, mo(-3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}})};
  e.suggested_numeric = {
      mk({{sA, mo(3, 5)}, {sB, mo(7, 20)}, {sC, mo(1, 5)}, {sD, mo(3, 20)}}),
      mk({{sA, mo(7, 10)}, {sB, mo(1, 2)}, {sC, mo(3, 10)}, {sD, mo(1, 5)}}),
      mk({{sA, mo(1, 2)}, {sB, mo(4, 5)}, {sC, mo(3, 10)}, {sD, mo(2, 5)}}),
      mk({{sA, mo(-3, 5)}, {sB, mo(1, 2)}, {sC, mo(1, 5)}, {sD, mo(1, 10)}}),
      mk({{sA, mo(2, 5)}, {sB, mo(9, 10)}, {sC, mo(1, 5)}, {sD, mo(1, 2)}}),
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, mo(3, 10)}, {sD, mo(1, 2)}})};
  return e;
}

IdentityEntry make_rho5_term() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "RHO5_TERM";
  e.anchor = "Theorem 3.2";
  e.summary = "When one of c, -aq/d, -aq/e equals q^{-m}, the five-parameter rho collapses to a "
              "terminating sum with a rational prefactor.";
  e.slots = {msd("a", "nonzero"), msd("b", "nonzero; b != -c"),
             msd("c", "nonzero"), msd("d", "nonzero"), msd("e", "nonzero"),
             isd("m", "termination degree; must match the q^{-m} parameter")};

  const std::vector<PE> units = {-(S.a * S.q), -(S.c / S.b), -(S.d / S.b), -(S.e / S.b),
                                 -(S.c * S.q / S.b), S.a * S.b * S.q * S.q / (S.d * S.e)};
  const PE ratio = S.d * S.e / (S.a * S.b * S.q);
  const PE zz = S.c * S.d * S.e / (S.a * S.b * S.q);

  e.check = [units, ratio](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sB, sC, sD, sE})) return v;
    const auto cut = rho5_cutoff(asg);
    if (!cut) return "one of c, -aq/d, -aq/e must equal q^{-m}";
    if (asg.get(iM) != *cut)
      return "slot m must equal the terminating exponent (detected m = " + std::to_string(*cut) +
             ")";
    const auto& S2 = sy();
    const QMonomial b = S2.b.eval(asg), c = S2.c.eval(asg);
    if (b.exp == c.exp && b.coeff + c.coeff == 0) return "b + c must not vanish";
    if (ratio.eval(asg).is_one()) return "de/(abq) = 1 makes the prefactor singular";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [zz](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sB, sC, sD, sE})) return v;
    const long long m = asg.get(iM);
    if (m < 0) return "m must be >= 0";
    const Complex qm = cpow(asg.q, m);
    const Complex aq1 = asg.get(sA) * asg.q * qm;
    bool terminates = false;
    for (const Complex& u : {asg.get(sC) * qm, -(aq1 / asg.get(sD)), -(aq1 / asg.get(sE))})
      if (abs(u - Complex(1)) < Real("1e-10")) {
        terminates = true;
        break;
      }
    if (!terminates) return "one of c, -aq/d, -aq/e must equal q^{-m}";
    if ((asg.get(sB) + asg.get(sC)).is_zero()) return "b + c must not vanish";
    if (!(abs(eval_param_num(zz, asg)) < 1)) return "need |cde/(abq)| < 1 for the direct side";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return rho_exact(5, RhoRep::Direct, asg, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return rho_exact(5, RhoRep::Terminating, asg, N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return rho_num(5, RhoRep::Direct, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return rho_num(5, RhoRep::Terminating, asg, cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, mo(-2, 1, 3)}, {sE, qmono(1)}},
         {{iM, 2}}),
      mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, qmono(1)}, {sD, qmono(1)}, {sE, mo(-1, 2, 4)}},
         {{iM, 3}}),
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(-1)}, {sD, mo(2, 1, 2)}, {sE, qmono(2)}},
         {{iM, 1}}),
      mk({{sA, mo(-3)}, {sB, mo(5, 7)}, {sC, qmono(1)}, {sD, mo(3, 1, 2)}, {sE, qmono(1)}},
         {{iM, 1}}),
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, mo(-2, 1, 1)}, {sE, mo(2, 1, 2)}},
         {{iM, 0}})};
  e.suggested_numeric = {
      mk({{sA, mo(3, 5)}, {sB, mo(7, 20)}, {sC, mo(1, 5)}, {sD, mo(-3, 5, 4)}, {sE, mo(1, 10)}},
         {{iM, 3}}),
      mk({{sA, mo(3, 5)}, {sB, mo(7, 20)}, {sC, qmono(-2)}, {sD, mo(1, 20)}, {sE, mo(3, 100)}},
         {{iM, 2}}),
      mk({{sA, mo(1, 2)}, {sB, mo(2, 5)}, {sC, mo(3, 10)}, {sD, mo(-1, 2, 3)}, {sE, mo(1, 5)}},
         {{iM, 2}}),
      mk({{sA, mo(7, 10)}, {sB, mo(1, 2)}, {sC, mo(2, 5)}, {sD, mo(3, 10)}, {sE, mo(-7, 10, 2)}},
         {{iM, 1}}),
      mk({{sA, mo(2, 5)}, {sB, mo(3, 5)}, {sC, mo(1, 4)}, {sD, mo(-2, 5, 2)}, {sE, mo(7, 10)}},
         {{iM, 1}})};
  return e;
}

IdentityEntry make_fin_rs() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "FIN_RS";
  e.anchor = "Corollary 3.3";
  e.summary = "Finite reciprocal sum with independent cutoffs r and s.";
  e.slots = {msd("a", "nonzero; c != -a"), msd("b", "nonzero; c != -b"), msd("c", "nonzero"),
             isd("r"), isd("s")};

  const std::vector<PE> units = {-(S.a * S.q), -(S.b * S.q), -(S.c * S.q / S.a),
                                 -(S.c * S.q / S.b), -(S.c / S.a), -(S.c / S.b)};
  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    if (auto v = check_nonzero(asg, {sA, sB, sC})) return v;
    const auto& S2 = sy();
    const QMonomial a = S2.a.eval(asg), b = S2.b.eval(asg), c = S2.c.eval(asg);
    if (a.exp == c.exp && a.coeff + c.coeff == 0) return "c = -a makes a prefactor singular";
    if (b.exp == c.exp && b.coeff + c.coeff == 0) return "c = -b makes a prefactor singular";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    if (auto v = check_nonzero_num(asg, {sA, sB, sC})) return v;
    if ((asg.get(sC) + asg.get(sA)).is_zero() || (asg.get(sC) + asg.get(sB)).is_zero())
      return "c = -a or c = -b makes a prefactor singular";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) { return finrs_part(asg, false, W) - finrs_part(asg, true, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          const auto& S2 = sy();
          const long long r = asg.get(iR), s = asg.get(iS);
          LaurentSeries t = mono_poly({(S2.one / S2.b).eval(asg), -(S2.one / S2.a).eval(asg)}, W);
          t = t * poch((S2.a * S2.q / S2.b).eval(asg), PochIndex::finite(r), W);
          t = t * poch((S2.b * S2.q / S2.a).eval(asg), PochIndex::finite(s), W);
          t = t * poch(S2.c.eval(asg), PochIndex::finite(1 + r + s), W);
          return series_div(
              t, poch((-(S2.a * S2.q)).eval(asg), PochIndex::finite(r), W) *
                     poch((-(S2.b * S2.q)).eval(asg), PochIndex::finite(s), W) *
                     poch((-(S2.c / S2.b)).eval(asg), PochIndex::finite(r + 1), W) *
                     poch((-(S2.c / S2.a)).eval(asg), PochIndex::finite(s + 1), W));
        },
        N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return finrs_part_num(asg, false, cfg) - finrs_part_num(asg, true, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    const Complex a = asg.get(sA), b = asg.get(sB), c = asg.get(sC), q = asg.q;
    const long long r = asg.get(iR), s = asg.get(iS);
    Complex t = Complex(1.0) / b - Complex(1.0) / a;
    t *= poch_num_fin(a * q / b, r, asg, cfg) * poch_num_fin(b * q / a, s, asg, cfg) *
         poch_num_fin(c, 1 + r + s, asg, cfg);
    return t / (poch_num_fin(-(a * q), r, asg, cfg) * poch_num_fin(-(b * q), s, asg, cfg) *
                poch_num_fin(-(c / b), r + 1, asg, cfg) * poch_num_fin(-(c / a), s + 1, asg, cfg));
  };
  e.suggested_exact = {
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}}, {{iR, 3}, {iS, 5}}),
      mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, mo(2, 1, 1)}}, {{iR, 2}, {iS, 4}}),
      mk({{sA, mo(-3)}, {sB, mo(5, 7)}, {sC, qmono(2)}}, {{iR, 4}, {iS, 1}}),
      mk({{sA, mo(2, 1, 1)}, {sB, mo(3)}, {sC, qmono(1)}}, {{iR, 1}, {iS, 2}}),
      mk({{sA, mo(2)}, {sB, mo(3)}, {sC, mo(2)}}, {{iR, 2}, {iS, 2}}),
      mk({{sA, mo(5, 7)}, {sB, mo(2)}, {sC, mo(-3)}}, {{iR, 3}, {iS, 0}})};
  e.suggested_numeric = {
      mk({{sA, mo(7, 10)}, {sB, mo(1, 2)}, {sC, mo(2, 5)}}, {{iR, 3}, {iS, 5}}),
      mk({{sA, mo(3, 5)}, {sB, mo(2, 5)}, {sC, mo(3, 10)}}, {{iR, 2}, {iS, 4}}),
      mk({{sA, mo(-1, 2)}, {sB, mo(3, 5)}, {sC, mo(1, 5)}}, {{iR, 4}, {iS, 2}}),
      mk({{sA, mo(4, 5)}, {sB, mo(7, 10)}, {sC, mo(-2, 5)}}, {{iR, 1}, {iS, 3}}),
      mk({{sA, mo(1, 2)}, {sB, mo(1, 2)}, {sC, mo(1, 2)}}, {{iR, 5}, {iS, 5}})};
  return e;
}

IdentityEntry make_fin_a() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "FIN_A";
  e.anchor = "Corollary 3.4";
  e.summary = "Finite two-part sum in (a, c) with closed Pochhammer quotient value.";
  e.slots = {msd("a", "nonzero; c != -a"), msd("c", "nonzero"), isd("r"), isd("s")};

  const std::vector<PE> units = {-(S.a * S.q), -(S.c * S.q / S.a), -(S.c / S.a)};
  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    if (auto v = check_nonzero(asg, {sA, sC})) return v;
    const auto& S2 = sy();
    const QMonomial a = S2.a.eval(asg), c = S2.c.eval(asg);
    if (a.exp == c.exp && a.coeff + c.coeff == 0) return "c = -a makes a prefactor singular";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    if (auto v = check_nonzero_num(asg, {sA, sC})) return v;
    if ((asg.get(sC) + asg.get(sA)).is_zero()) return "c = -a makes a prefactor singular";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return fina_lhs(asg, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return fina_rhs(asg, W); }, N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return fina_lhs_num(asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return fina_rhs_num(asg, cfg);
  };
  e.suggested_exact = {mk({{sA, mo(2)}, {sC, qmono(1)}}, {{iR, 4}, {iS, 3}}),
                       mk({{sA, mo(-1, 2)}, {sC, mo(2, 1, 1)}}, {{iR, 2}, {iS, 2}}),
                       mk({{sA, mo(5, 7)}, {sC, qmono(1)}}, {{iR, 0}, {iS, 6}}),
                       mk({{sA, mo(3)}, {sC, mo(-1, 1, 2)}}, {{iR, 5}, {iS, 5}}),
                       mk({{sA, mo(2, 1, 1)}, {sC, qmono(1)}}, {{iR, 3}, {iS, 2}})};
  e.suggested_numeric = {mk({{sA, mo(7, 10)}, {sC, mo(2, 5)}}, {{iR, 4}, {iS, 3}}),
                         mk({{sA, mo(1, 2)}, {sC, mo(3, 10)}}, {{iR, 2}, {iS, 5}}),
                         mk({{sA, mo(-3, 5)}, {sC, mo(1, 5)}}, {{iR, 3}, {iS, 3}}),
                         mk({{sA, mo(9, 10)}, {sC, mo(-2, 5)}}, {{iR, 1}, {iS, 4}}),
                         mk({{sA, mo(2)}, {sC, mo(1, 2)}}, {{iR, 4}, {iS, 2}})};
  return e;
}

IdentityEntry make_fin_c() {
  IdentityEntry e;
  e.id = "FIN_C";
  e.anchor = "Corollary 3.5";
  e.summary = "Finite sum in c alone; the right side uses base q^{-1} Pochhammers.";
  e.slots = {msd("c", "nonzero"), isd("r"), isd("s")};

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    return check_nonzero(asg, {sC});
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    return check_nonzero_num(asg, {sC});
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return finc_lhs(asg, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return finc_rhs(asg, W); }, N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return finc_lhs_num(asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return finc_rhs_num(asg, cfg);
  };
  e.suggested_exact = {mk({{sC, mo(2)}}, {{iR, 3}, {iS, 4}}),
                       mk({{sC, mo(-1, 2)}}, {{iR, 2}, {iS, 2}}),
                       mk({{sC, mo(3, 1, 1)}}, {{iR, 4}, {iS, 1}}),
                       mk({{sC, mo(5, 7)}}, {{iR, 6}, {iS, 0}}),
                       mk({{sC, mo(2, 1, 1)}}, {{iR, 1}, {iS, 5}})};
  e.suggested_numeric = {mk({{sC, mo(9, 20)}}, {{iR, 3}, {iS, 4}}),
                         mk({{sC, mo(2, 5)}}, {{iR, 2}, {iS, 2}}),
                         mk({{sC, mo(-7, 10)}}, {{iR, 4}, {iS, 3}}),
                         mk({{sC, mo(3, 2)}}, {{iR, 1}, {iS, 6}}),
                         mk({{sC, mo(1, 2)}}, {{iR, 5}, {iS, 0}})};
  return e;
}

IdentityEntry make_pfaff() {
  IdentityEntry e;
  e.id = "PFAFF_FIN";
  e.anchor = "Corollary 3.6";
  e.summary = "Binomial reciprocal identity in a free rational variable x (the q -> 1 shadow of "
              "the finite c-sum).";
  e.slots = {msd("x", "q-free rational; x != 1"), isd("r"), isd("s")};
  e.numeric = false;

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(iR) < 0 || asg.get(iS) < 0) return "r and s must be >= 0";
    const QMonomial x = asg.get(sX);
    if (x.exp != 0) return "x must be a q-free rational";
    if (x.coeff == 1) return "x = 1 divides by zero";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    const Rational x = asg.get(sX).coeff;
    const long long r = asg.get(iR), s = asg.get(iS);
    const Rational ratio = x / (x - 1);
    Rational tot(0);
    for (long long k = 0; k <= r; ++k) tot += binom_rat(r + s - k, s) * rat_pow(ratio, k);
    return make_monomial(tot, 0, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    const Rational x = asg.get(sX).coeff;
    const long long r = asg.get(iR), s = asg.get(iS);
    Rational tot = rat_pow(x, r + s + 1) / rat_pow(x - 1, r);
    Rational tail(0);
    for (long long k = 0; k <= s; ++k) tail += binom_rat(r + s - k, r) * rat_pow(x, k);
    tot += (Rational(1) - x) * tail;
    return make_monomial(tot, 0, N);
  };
  e.suggested_exact = {mk({{sX, mo(2)}}, {{iR, 4}, {iS, 6}}),
                       mk({{sX, mo(-3, 2)}}, {{iR, 5}, {iS, 2}}),
                       mk({{sX, mo(5, 3)}}, {{iR, 0}, {iS, 0}}),
                       mk({{sX, mo(-1, 2)}}, {{iR, 3}, {iS, 3}}),
                       mk({{sX, mo(7)}}, {{iR, 6}, {iS, 1}}),
                       mk({{sX, mo(-3)}}, {{iR, 12}, {iS, 7}}),
                       mk({{sX, mo(2)}}, {{iR, 12}, {iS, 12}})};
  return e;
}

IdentityEntry make_gould() {
  IdentityEntry e;
  e.id = "GOULD_181";
  e.anchor = "Section 3 remark";
  e.summary = "sum_{k<=n} C(2n-k, n) 2^k = 4^n.";
  e.slots = {isd("n")};
  e.numeric = false;

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(iN) < 0) return "n must be >= 0";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    const long long n = asg.get(iN);
    Rational tot(0);
    for (long long k = 0; k <= n; ++k) tot += binom_rat(2 * n - k, n) * rat_pow(Rational(2), k);
    return make_monomial(tot, 0, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return make_monomial(rat_pow(Rational(4), asg.get(iN)), 0, N);
  };
  e.suggested_exact = {mk({}, {{iN, 0}}), mk({}, {{iN, 1}}), mk({}, {{iN, 3}}),
                       mk({}, {{iN, 5}}), mk({}, {{iN, 8}}), mk({}, {{iN, 12}})};
  return e;
}

IdentityEntry make_sym_qm() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "SYM_QM";
  e.anchor = "Corollary 3.7";
  e.summary = "A terminating sum symmetric under swapping a and b.";
  e.slots = {msd("a", "nonzero; not -q^{-1}..-q^{-m}"), msd("b", "nonzero; not -q^{1-m}..-q^0"),
             msd("d", "nonzero"), msd("e", "nonzero"), isd("m")};

  const std::vector<PE> units = {S.a * S.b * S.q * S.q / (S.d * S.e)};
  e.check = [units](const Assignment& asg) -> std::optional<std::string> {
    const long long m = asg.get(iM);
    if (m < 0) return "m must be >= 0";
    if (auto v = check_nonzero(asg, {sA, sB, sD, sE})) return v;
    // Both orderings place a and b in the denominators, so check both slots.
    for (Slot s : {sA, sB}) {
      const QMonomial v = asg.get(s);
      if (v.coeff == -1) {
        if (v.exp >= 1 - m && v.exp <= 0)
          return std::string(slot_name(s)) +
                 " in {-q^{1-m},...,-1} makes a denominator factor vanish";
        if (v.exp >= -m && v.exp <= -1)
          return std::string(slot_name(s)) +
                 " in {-q^{-m},...,-q^{-1}} makes a denominator factor vanish";
        if (v.exp == -m) return std::string(slot_name(s)) + " = -q^{-m} makes a prefactor singular";
      }
    }
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(iM) < 0) return "m must be >= 0";
    return check_nonzero_num(asg, {sA, sB, sD, sE});
  };
  e.lhs_exact = [](const Assignment& asg, long long N) { return symqm_side(asg, N); };
  e.rhs_exact = [](const Assignment& asg, long long N) { return symqm_side(swapped_ab(asg), N); };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return symqm_side_num(asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return symqm_side_num(swapped_ab(asg), cfg);
  };
  e.suggested_exact = {
      mk({{sA, mo(2)}, {sB, mo(3)}, {sD, qmono(1)}, {sE, qmono(1)}}, {{iM, 4}}),
      mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sD, mo(2, 1, 1)}, {sE, qmono(1)}}, {{iM, 3}}),
      mk({{sA, mo(-3)}, {sB, mo(5, 7)}, {sD, qmono(1)}, {sE, qmono(2)}}, {{iM, 5}}),
      mk({{sA, mo(2, 1, 1)}, {sB, mo(3)}, {sD, qmono(1)}, {sE, mo(-1, 1, 1)}}, {{iM, 2}}),
      mk({{sA, mo(3)}, {sB, mo(2)}, {sD, mo(-1, 1, 1)}, {sE, qmono(1)}}, {{iM, 0}})};
  e.suggested_numeric = {
      mk({{sA, mo(7, 10)}, {sB, mo(1, 2)}, {sD, mo(3, 5)}, {sE, mo(4, 5)}}, {{iM, 4}}),
      mk({{sA, mo(2, 5)}, {sB, mo(3, 5)}, {sD, mo(7, 10)}, {sE, mo(9, 10)}}, {{iM, 3}}),
      mk({{sA, mo(-1, 2)}, {sB, mo(2, 5)}, {sD, mo(3, 5)}, {sE, mo(7, 10)}}, {{iM, 2}}),
      mk({{sA, mo(4, 5)}, {sB, mo(-3, 5)}, {sD, mo(1, 2)}, {sE, mo(3, 5)}}, {{iM, 5}}),
      mk({{sA, mo(1, 2)}, {sB, mo(1, 2)}, {sD, mo(9, 10)}, {sE, mo(-7, 10)}}, {{iM, 1}})};
  return e;
}

IdentityEntry make_rf(bool general) {
  const auto& S = sy();
  IdentityEntry e;
  e.id = general ? "RF_GEN" : "RF_SYM";
  e.anchor = general ? "Corollary 3.8" : "Section 3, after Corollary 3.8";
  e.summary = general
                  ? "Two-variable Rogers-Fine-type sum symmetric under swapping a and b."
                  : "Rogers-Fine symmetric special case in (a, b) with companion parameter d.";
  if (general) {
    e.slots = {msd("a", "nonzero; exact needs q-order >= 1"),
               msd("b", "nonzero; exact needs q-order >= 1"), msd("d", "nonzero"),
               msd("e", "nonzero")};
  } else {
    e.slots = {msd("a", "nonzero; exact needs q-order >= 1"),
               msd("b", "nonzero; exact needs q-order >= 1"), msd("d", "nonzero")};
  }

  SeriesSpec sp;
  if (general) {
    sp.num = {{-(S.a * S.q / S.d), 0}, {-(S.a * S.q / S.e), 0}};
    sp.den = {{-(S.a * S.q), 0}, {S.a * S.b * S.q * S.q / (S.d * S.e), 0}};
    sp.arg = -S.b;
  } else {
    sp.num = {{S.a * S.q / S.d, 0}};
    sp.den = {{S.a * S.q, 0}};
    sp.arg = S.b;
  }

  std::vector<PE> units;
  if (general) {
    units = {-(S.a * S.q), -(S.b * S.q), S.a * S.b * S.q * S.q / (S.d * S.e)};
  } else {
    units = {S.a * S.q, S.b * S.q};
  }
  std::vector<Slot> req = general ? std::vector<Slot>{sA, sB, sD, sE}
                                  : std::vector<Slot>{sA, sB, sD};
  e.check = [units, req](const Assignment& asg) -> std::optional<std::string> {
    for (Slot s : req)
      if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
    return check_no_unit_nonpos(asg, units);
  };
  e.check_num = [req](const NumAssignment& asg) -> std::optional<std::string> {
    for (Slot s : req)
      if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
    if (!(abs(asg.get(sA)) < 1 && abs(asg.get(sB)) < 1)) return "need |a| < 1 and |b| < 1";
    return std::nullopt;
  };
  const bool plus = general;  // prefactor (1+b) for the general form, (1-b) for the special
  auto side = [sp, plus](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          const QMonomial b = sy().b.eval(asg);
          return one_plus(plus ? b : -b, W) * sum_spec(sp, asg, W);
        },
        N);
  };
  auto side_num = [sp, plus](const NumAssignment& asg, const NumericConfig& cfg) {
    const Complex b = asg.get(sB);
    const Complex pref = plus ? Complex(1.0) + b : Complex(1.0) - b;
    return pref * eval_sum_num(sp, asg, cfg);
  };
  e.lhs_exact = [side](const Assignment& asg, long long N) { return side(asg, N); };
  e.rhs_exact = [side](const Assignment& asg, long long N) { return side(swapped_ab(asg), N); };
  e.lhs_num = [side_num](const NumAssignment& asg, const NumericConfig& cfg) {
    return side_num(asg, cfg);
  };
  e.rhs_num = [side_num](const NumAssignment& asg, const NumericConfig& cfg) {
    return side_num(swapped_ab(asg), cfg);
  };
  if (general) {
    e.suggested_exact = {
        mk({{sA, mo(2, 1, 1)}, {sB, mo(3, 1, 1)}, {sD, qmono(1)}, {sE, qmono(1)}}),
        mk({{sA, mo(-1, 1, 1)}, {sB, mo(1, 2, 2)}, {sD, mo(2, 1, 1)}, {sE, qmono(1)}}),
        mk({{sA, mo(3, 1, 2)}, {sB, mo(2, 1, 1)}, {sD, qmono(2)}, {sE, mo(-1, 1, 1)}}),
        mk({{sA, mo(5, 7, 1)}, {sB, mo(-2, 1, 1)}, {sD, mo(3)}, {sE, qmono(1)}}),
        mk({{sA, mo(2, 1, 1)}, {sB, mo(3, 1, 1)}, {sD, mo(-2)}, {sE, mo(5, 7)}})};
    e.suggested_numeric = {
        mk({{sA, mo(2, 5)}, {sB, mo(3, 10)}, {sD, mo(7, 10)}, {sE, mo(9, 10)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(2, 5)}, {sD, mo(3, 5)}, {sE, mo(4, 5)}}),
        mk({{sA, mo(-3, 10)}, {sB, mo(1, 5)}, {sD, mo(1, 2)}, {sE, mo(7, 10)}}),
        mk({{sA, mo(3, 5)}, {sB, mo(-2, 5)}, {sD, mo(9, 10)}, {sE, mo(1, 2)}}),
        mk({{sA, mo(1, 4)}, {sB, mo(1, 2)}, {sD, mo(-3, 5)}, {sE, mo(4, 5)}})};
  } else {
    e.suggested_exact = {mk({{sA, mo(2, 1, 1)}, {sB, mo(3, 1, 1)}, {sD, mo(2)}}),
                         mk({{sA, mo(-1, 1, 1)}, {sB, mo(1, 2, 1)}, {sD, qmono(1)}}),
                         mk({{sA, mo(2, 3, 2)}, {sB, mo(2, 1, 1)}, {sD, mo(-3)}}),
                         mk({{sA, mo(3, 1, 1)}, {sB, mo(-2, 1, 2)}, {sD, qmono(2)}}),
                         mk({{sA, mo(1, 2, 1)}, {sB, mo(5, 7, 1)}, {sD, mo(-1, 1, 1)}})};
    e.suggested_numeric = {mk({{sA, mo(2, 5)}, {sB, mo(3, 10)}, {sD, mo(4, 5)}}),
                           mk({{sA, mo(1, 2)}, {sB, mo(2, 5)}, {sD, mo(3, 5)}}),
                           mk({{sA, mo(-2, 5)}, {sB, mo(3, 5)}, {sD, mo(7, 10)}}),
                           mk({{sA, mo(3, 10)}, {sB, mo(-1, 2)}, {sD, mo(9, 10)}}),
                           mk({{sA, mo(7, 10)}, {sB, mo(1, 5)}, {sD, mo(-4, 5)}})};
  }
  return e;
}

IdentityEntry make_partial_d() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "PARTIAL_D";
  e.anchor = "Corollary 3.9";
  e.summary = "Partial-fraction-type sum whose value q/(q-d) is independent of a.";
  e.slots = {msd("a", "not -q^{-j}"),
             msd("d", "nonzero; d != q; exact needs q-order >= 2, numeric |d| < |q|")};

  SeriesSpec sp;
  sp.num = {{-(S.a * S.q / S.d), 0}};
  sp.den = {{-S.a, 1}};
  sp.arg = S.d / S.q;

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(sD).is_zero()) return "d must be nonzero";
    if (unit_nonpos((-sy().a).eval(asg))) return "a = -q^{-j} makes a denominator factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(sD).is_zero()) return "d must be nonzero";
    if (!(abs(asg.get(sD)) < abs(asg.q))) return "need |d| < |q|";
    return std::nullopt;
  };
  e.lhs_exact = [sp](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(sp, asg, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    const QMonomial d = asg.get(sD);
    return exact_through(
        [&](long long W) {
          return series_div(LaurentSeries(qmono(1), W), mono_poly({qmono(1), -d}, W));
        },
        N);
  };
  e.lhs_num = [sp](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(sp, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    (void)cfg;
    return asg.q / (asg.q - asg.get(sD));
  };
  e.suggested_exact = {mk({{sA, mo(2)}, {sD, mo(2, 1, 2)}}),
                       mk({{sA, qmono(1)}, {sD, mo(-1, 1, 3)}}),
                       mk({{sA, mo(3, 1, 2)}, {sD, mo(1, 2, 2)}}),
                       mk({{sA, mo(-1, 2)}, {sD, mo(2, 1, 2)}}),
                       mk({{sA, mo(5, 7)}, {sD, mo(-3, 1, 4)}})};
  e.suggested_numeric = {mk({{sA, mo(1, 2)}, {sD, mo(3, 25)}}),
                         mk({{sA, mo(9, 10)}, {sD, mo(3, 25)}}),
                         mk({{sA, mo(-3, 10)}, {sD, mo(1, 5)}}),
                         mk({{sA, mo(2)}, {sD, mo(-3, 20)}}),
                         mk({{sA, mo(7, 10)}, {sD, mo(1, 4)}})};
  return e;
}

IdentityEntry make_partial_1() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "PARTIAL_1";
  e.anchor = "Section 3, d = 0 case of Corollary 3.9";
  e.summary = "sum_k q^{k(k-1)/2} a^k / (-a;q)_{k+1} = 1.";
  e.slots = {msd("a", "not -q^{-j}")};

  SeriesSpec sp;
  sp.quad = {1, 0};
  sp.den = {{-S.a, 1}};
  sp.arg = S.a;

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (unit_nonpos((-sy().a).eval(asg))) return "a = -q^{-j} makes a denominator factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    (void)asg;
    return std::nullopt;
  };
  e.lhs_exact = [sp](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(sp, asg, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    (void)asg;
    return series_one(N);
  };
  e.lhs_num = [sp](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(sp, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    (void)asg;
    (void)cfg;
    return Complex(1.0);
  };
  e.suggested_exact = {mk({{sA, mo(2)}}), mk({{sA, qmono(1)}}), mk({{sA, mo(3, 1, 2)}}),
                       mk({{sA, mo(-1, 2)}}), mk({{sA, mo(5, 7)}})};
  e.suggested_numeric = {mk({{sA, mo(2, 5)}}), mk({{sA, mo(2)}}), mk({{sA, mo(-3, 5)}}),
                         mk({{sA, mo(9, 10)}}), mk({{sA, mo(1, 3)}})};
  return e;
}

IdentityEntry make_xi_recip() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "XI_RECIP";
  e.anchor = "Theorem 4.1";
  e.summary = "xi(a,x) - (q/(ax)) xi(q/x, q/a) equals (q, ax, q/(ax);q)inf / (x, q/a;q)inf.";
  e.slots = {msd("a", "nonzero; not q^{j+1}; ax not a power of q"),
             msd("x", "nonzero; not q^{-j}")};

  const std::vector<PE> pn = {S.q, S.a * S.x, S.q / (S.a * S.x)};
  const std::vector<PE> pd = {S.x, S.q / S.a};
  const PE coef = S.q / (S.a * S.x);

  e.check = [pd](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sX})) return v;
    if (auto v = check_no_unit(asg, {sy().a * sy().x})) return v;
    return check_no_unit_nonpos(asg, pd);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sX})) return v;
    if (!(abs(asg.get(sX)) < 1 && abs(asg.q) < abs(asg.get(sA))))
      return "need |x| < 1 and |q| < |a| so both xi series converge";
    return std::nullopt;
  };
  auto second = [](const Assignment& asg) {
    const auto& S2 = sy();
    Assignment r;
    r.set(Slot::a, (S2.q / S2.x).eval(asg));
    r.set(Slot::x, (S2.q / S2.a).eval(asg));
    return r;
  };
  e.lhs_exact = [coef, second](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          return xi_exact(XiForm::SumForm, asg, W) -
                 LaurentSeries(coef.eval(asg), W) * xi_exact(XiForm::SumForm, second(asg), W);
        },
        N);
  };
  e.rhs_exact = [pn, pd](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return poch_quot_exact(pn, pd, asg, W); }, N);
  };
  e.lhs_num = [coef](const NumAssignment& asg, const NumericConfig& cfg) {
    NumAssignment second = asg;
    second.set(Slot::a, asg.q / asg.get(sX));
    second.set(Slot::x, asg.q / asg.get(sA));
    return xi_num(XiForm::SumForm, asg, cfg) -
           eval_param_num(coef, asg) * xi_num(XiForm::SumForm, second, cfg);
  };
  e.rhs_num = [pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg);
  };
  e.suggested_exact = {mk({{sA, mo(3)}, {sX, mo(2, 1, 1)}}), mk({{sA, mo(2)}, {sX, qmono(1)}}),
                       mk({{sA, mo(-2)}, {sX, mo(-1, 1, 1)}}),
                       mk({{sA, mo(5, 7)}, {sX, mo(1, 2, 1)}}),
                       mk({{sA, mo(7)}, {sX, mo(3, 1, 1)}})};
  e.suggested_numeric = {mk({{sA, mo(2)}, {sX, mo(1, 4)}}), mk({{sA, mo(3)}, {sX, mo(1, 2)}}),
                         mk({{sA, mo(-2)}, {sX, mo(3, 10)}}),
                         mk({{sA, mo(3, 2)}, {sX, mo(-2, 5)}}),
                         mk({{sA, mo(5)}, {sX, mo(7, 10)}})};
  return e;
}

IdentityEntry make_xi_reps() {
  IdentityEntry e;
  e.id = "XI_REPS";
  e.anchor = "Section 4";
  e.summary = "The two series representations of xi(a,x) agree.";
  e.slots = {msd("a", "free"), msd("x", "not q^{-j}; exact needs q-order >= 1 or terminating a")};

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (unit_nonpos(asg.get(sX))) return "x = q^{-j} makes a denominator factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (!(abs(asg.get(sX)) < 1)) return "need |x| < 1";
    return std::nullopt;
  };
  e.lhs_exact = [](const Assignment& asg, long long N) {
    return xi_exact(XiForm::SumForm, asg, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    return xi_exact(XiForm::BinomForm, asg, N);
  };
  e.lhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return xi_num(XiForm::SumForm, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    return xi_num(XiForm::BinomForm, asg, cfg);
  };
  e.suggested_exact = {mk({{sA, mo(3)}, {sX, qmono(1)}}), mk({{sA, mo(2)}, {sX, mo(2, 1, 1)}}),
                       mk({{sA, mo(-1, 2)}, {sX, mo(-1, 1, 2)}}),
                       mk({{sA, mo(2, 1, 1)}, {sX, qmono(1)}}),
                       mk({{sA, mo(5, 7)}, {sX, mo(3, 1, 1)}})};
  e.suggested_numeric = {mk({{sA, mo(2)}, {sX, mo(1, 4)}}), mk({{sA, mo(3)}, {sX, mo(1, 2)}}),
                         mk({{sA, mo(-2)}, {sX, mo(3, 10)}}),
                         mk({{sA, mo(7, 10)}, {sX, mo(-3, 5)}}),
                         mk({{sA, mo(3, 2)}, {sX, mo(4, 5)}})};
  return e;
}

IdentityEntry make_xi_bilateral() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "XI_BILATERAL";
  e.anchor = "Section 4";
  e.summary = "Bilateral form of the xi kernel sums to the same triple-product quotient.";
  e.slots = {msd("a", "nonzero; exact needs q-order <= 0; ax not a power of q"),
             msd("x", "nonzero; not q^{-j}")};

  SeriesSpec sp;
  sp.kind = SumKind::Bilateral;
  sp.quad = {1, 0};
  sp.den = {{S.x, 1}};
  sp.arg = -(S.a * S.x);

  const std::vector<PE> pn = {S.q, S.a * S.x, S.q / (S.a * S.x)};
  const std::vector<PE> pd = {S.x, S.q / S.a};

  e.check = [pd](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sA, sX})) return v;
    if (auto v = check_no_unit(asg, {sy().a * sy().x})) return v;
    return check_no_unit_nonpos(asg, pd);
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero_num(asg, {sA, sX})) return v;
    if (!(abs(asg.q) < abs(asg.get(sA)))) return "need |q| < |a| for the negative direction";
    return std::nullopt;
  };
  e.lhs_exact = [sp](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(sp, asg, W); }, N);
  };
  e.rhs_exact = [pn, pd](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return poch_quot_exact(pn, pd, asg, W); }, N);
  };
  e.lhs_num = [sp](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(sp, asg, cfg);
  };
  e.rhs_num = [pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg);
  };
  e.suggested_exact = {mk({{sA, mo(2)}, {sX, qmono(1)}}), mk({{sA, mo(2)}, {sX, mo(2, 1, 2)}}),
                       mk({{sA, mo(-1, 2)}, {sX, mo(3, 1, 1)}}),
                       mk({{sA, mo(5, 7)}, {sX, mo(-1, 1, 1)}}),
                       mk({{sA, mo(3)}, {sX, mo(1, 2, 2)}})};
  e.suggested_numeric = {mk({{sA, mo(2)}, {sX, mo(1, 4)}}), mk({{sA, mo(3)}, {sX, mo(1, 2)}}),
                         mk({{sA, mo(-2)}, {sX, mo(3, 10)}}),
                         mk({{sA, mo(3, 2)}, {sX, mo(-2, 5)}}),
                         mk({{sA, mo(4, 5)}, {sX, mo(9, 20)}})};
  return e;
}

IdentityEntry make_jackson() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "JACKSON";
  e.anchor = "Section 4";
  e.summary = "Transformation of sum_k (a;q)_k (y;q)_k x^k / (q;q)_k into a product times a "
              "xi-type sum.";
  e.slots = {msd("a", "free"), msd("y", "free"),
             msd("x", "nonzero; not q^{-j}; xy not q^{-j}; exact needs q-order >= 1")};

  SeriesSpec lhs;
  lhs.num = {{S.a, 0}, {S.y, 0}};
  lhs.den = {{S.q, 0}};
  lhs.arg = S.x;

  SeriesSpec rhs;
  rhs.quad = {1, 0};
  rhs.num = {{S.y, 0}};
  rhs.den = {{S.q, 0}, {S.x * S.y, 0}};
  rhs.arg = -(S.a * S.x);

  const std::vector<PE> pn = {S.x * S.y};
  const std::vector<PE> pd = {S.x};

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(sX).is_zero()) return "x must be nonzero";
    if (unit_nonpos(asg.get(sX))) return "x = q^{-j} makes a product factor vanish";
    if (unit_nonpos((sy().x * sy().y).eval(asg)))
      return "xy = q^{-j} makes a product factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    if (asg.get(sX).is_zero()) return "x must be nonzero";
    if (!(abs(asg.get(sX)) < 1)) return "need |x| < 1";
    return std::nullopt;
  };
  e.lhs_exact = [lhs](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return sum_spec(lhs, asg, W); }, N);
  };
  e.rhs_exact = [rhs, pn, pd](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) { return poch_quot_exact(pn, pd, asg, W) * sum_spec(rhs, asg, W); }, N);
  };
  e.lhs_num = [lhs](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(lhs, asg, cfg);
  };
  e.rhs_num = [rhs, pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg) * eval_sum_num(rhs, asg, cfg);
  };
  e.suggested_exact = {mk({{sA, mo(2)}, {sY, mo(3)}, {sX, qmono(1)}}),
                       mk({{sA, mo(-3)}, {sY, mo(1, 2)}, {sX, mo(2, 1, 1)}}),
                       mk({{sA, mo(2, 1, 1)}, {sY, mo(-2)}, {sX, qmono(1)}}),
                       mk({{sA, mo(5, 7)}, {sY, mo(2, 1, 1)}, {sX, mo(-1, 1, 1)}}),
                       mk({{sA, mo(3)}, {sY, mo(-1)}, {sX, mo(1, 2, 2)}})};
  e.suggested_numeric = {mk({{sA, mo(2)}, {sY, mo(3, 5)}, {sX, mo(1, 4)}}),
                         mk({{sA, mo(3)}, {sY, mo(2, 5)}, {sX, mo(1, 2)}}),
                         mk({{sA, mo(-2)}, {sY, mo(7, 10)}, {sX, mo(3, 10)}}),
                         mk({{sA, mo(3, 2)}, {sY, mo(-1, 2)}, {sX, mo(2, 5)}}),
                         mk({{sA, mo(4, 5)}, {sY, mo(9, 10)}, {sX, mo(-7, 20)}})};
  return e;
}

IdentityEntry make_three_term() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "THREE_TERM";
  e.anchor = "Section 4";
  e.summary = "Three-term relation combining two xi-type sums into a single product quotient.";
  e.slots = {msd("x", "nonzero; not q^{-j}; xy not a power of q"),
             msd("y", "nonzero; not q^{j+1}")};

  SeriesSpec s1;
  s1.quad = {1, 0};
  s1.num = {{S.y, 0}};
  s1.den = {{S.q, 0}, {S.x * S.y, 0}};
  s1.arg = -(S.x * S.q);

  SeriesSpec s2;
  s2.quad = {1, 0};
  s2.num = {{S.q / S.x, 0}};
  s2.den = {{S.q, 0}, {S.q * S.q / (S.x * S.y), 0}};
  s2.arg = -(S.q * S.q / S.y);

  const std::vector<PE> mn = {S.x, S.q * S.q / (S.x * S.y)};
  const std::vector<PE> md = {S.q / S.y, S.x * S.y};
  const std::vector<PE> pn = {S.q, S.q / (S.x * S.y)};
  const std::vector<PE> pd = {S.q / S.y};
  const PE coef = S.q / (S.x * S.y);

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sX, sY})) return v;
    if (unit_nonpos(asg.get(sX))) return "x = q^{-j} makes a product factor vanish";
    if (auto v = check_no_unit(asg, {sy().x * sy().y})) return v;
    if (unit_nonpos((sy().q / sy().y).eval(asg)))
      return "y = q^{j+1} makes a product factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    return check_nonzero_num(asg, {sX, sY});
  };
  e.lhs_exact = [s1, s2, mn, md, coef](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          LaurentSeries t = sum_spec(s1, asg, W);
          LaurentSeries u = poch_quot_exact(mn, md, asg, W) * sum_spec(s2, asg, W);
          return t - LaurentSeries(coef.eval(asg), W) * u;
        },
        N);
  };
  e.rhs_exact = [pn, pd](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return poch_quot_exact(pn, pd, asg, W); }, N);
  };
  e.lhs_num = [s1, s2, mn, md, coef](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(s1, asg, cfg) - eval_param_num(coef, asg) *
                                            poch_quot_num(mn, md, asg, cfg) *
                                            eval_sum_num(s2, asg, cfg);
  };
  e.rhs_num = [pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg);
  };
  e.suggested_exact = {mk({{sX, mo(2, 1, 1)}, {sY, mo(3)}}), mk({{sX, qmono(1)}, {sY, mo(2)}}),
                       mk({{sX, mo(-1, 1, 1)}, {sY, mo(-3)}}),
                       mk({{sX, mo(2)}, {sY, mo(3, 1, 1)}}),
                       mk({{sX, mo(3, 1, 2)}, {sY, mo(1, 2)}})};
  e.suggested_numeric = {mk({{sX, mo(3, 10)}, {sY, mo(2)}}), mk({{sX, mo(1, 2)}, {sY, mo(7, 10)}}),
                         mk({{sX, mo(-2, 5)}, {sY, mo(3, 2)}}),
                         mk({{sX, mo(2)}, {sY, mo(3, 5)}}), mk({{sX, mo(1, 4)}, {sY, mo(-3)}})};
  return e;
}

IdentityEntry make_quint_2var() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "QUINT_2VAR";
  e.anchor = "Corollary 4.2";
  e.summary = "Two-variable quintuple-type identity: a combination of two kernel sums equals "
              "(q, zx, q/(zx);q)inf / (x, q/z;q)inf.";
  e.slots = {msd("x", "nonzero; not q^{-j}; zx not a power of q"),
             msd("z", "nonzero; not q^{j+1}")};

  SeriesSpec s1;
  s1.quad = {3, 1};
  s1.kernel = S.x * S.z;
  s1.num = {{S.z, 0}};
  s1.den = {{S.x, 1}};
  s1.arg = -(S.x * S.x * S.z);

  SeriesSpec s2;
  s2.quad = {3, 1};
  s2.kernel = S.q * S.q / (S.x * S.z);
  s2.num = {{S.q / S.x, 0}};
  s2.den = {{S.q / S.z, 1}};
  s2.arg = -(S.q * S.q * S.q / (S.x * S.z * S.z));

  const std::vector<PE> pn = {S.q, S.z * S.x, S.q / (S.z * S.x)};
  const std::vector<PE> pd = {S.x, S.q / S.z};
  const PE coef = S.q / (S.z * S.x);

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (auto v = check_nonzero(asg, {sX, sZ})) return v;
    if (unit_nonpos(asg.get(sX))) return "x = q^{-j} makes a denominator factor vanish";
    if (auto v = check_no_unit(asg, {sy().x * sy().z})) return v;
    if (unit_nonpos((sy().q / sy().z).eval(asg)))
      return "z = q^{j+1} makes a product factor vanish";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    return check_nonzero_num(asg, {sX, sZ});
  };
  e.lhs_exact = [s1, s2, coef](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          return sum_spec(s1, asg, W) -
                 LaurentSeries(coef.eval(asg), W) * sum_spec(s2, asg, W);
        },
        N);
  };
  e.rhs_exact = [pn, pd](const Assignment& asg, long long N) {
    return exact_through([&](long long W) { return poch_quot_exact(pn, pd, asg, W); }, N);
  };
  e.lhs_num = [s1, s2, coef](const NumAssignment& asg, const NumericConfig& cfg) {
    return eval_sum_num(s1, asg, cfg) -
           eval_param_num(coef, asg) * eval_sum_num(s2, asg, cfg);
  };
  e.rhs_num = [pn, pd](const NumAssignment& asg, const NumericConfig& cfg) {
    return poch_quot_num(pn, pd, asg, cfg);
  };
  e.suggested_exact = {mk({{sX, mo(2, 1, 1)}, {sZ, mo(3, 1, 1)}}),
                       mk({{sX, mo(-1, 1, 1)}, {sZ, mo(1, 2, 1)}}),
                       mk({{sX, mo(3, 1, 2)}, {sZ, mo(-2, 1, 1)}}),
                       mk({{sX, mo(1, 2, 1)}, {sZ, mo(1, 2, 1)}}),
                       mk({{sX, mo(2)}, {sZ, mo(3)}})};
  e.suggested_numeric = {mk({{sX, mo(1, 2)}, {sZ, mo(3, 5)}}),
                         mk({{sX, mo(3, 10)}, {sZ, mo(4, 5)}}),
                         mk({{sX, mo(-1, 2)}, {sZ, mo(7, 10)}}),
                         mk({{sX, mo(2)}, {sZ, mo(2, 5)}}),
                         mk({{sX, mo(3, 5)}, {sZ, mo(-9, 10)}})};
  return e;
}

IdentityEntry make_quint() {
  const auto& S = sy();
  IdentityEntry e;
  e.id = "QUINT";
  e.anchor = "Introduction";
  e.summary = "Quintuple product identity: a bilateral theta-type sum equals "
              "(q, a, q/a;q)inf (qa^2, q/a^2;q^2)inf.";
  e.slots = {msd("a", "nonzero; not a power of q")};

  SeriesSpec sp;
  sp.kind = SumKind::Bilateral;
  sp.quad = {3, 2};
  sp.kernel = S.a * S.a * S.q;
  sp.arg = S.a * S.a * S.a;

  e.check = [](const Assignment& asg) -> std::optional<std::string> {
    if (asg.get(sA).is_zero()) return "a must be nonzero";
    if (unit_any(asg.get(sA))) return "a is a power of q, which degenerates the products";
    return std::nullopt;
  };
  e.check_num = [](const NumAssignment& asg) -> std::optional<std::string> {
    return check_nonzero_num(asg, {sA});
  };
  e.lhs_exact = [sp](const Assignment& asg, long long N) {
    const QMonomial a = asg.get(sA);
    return exact_through(
        [&](long long W) { return LaurentSeries(-a, W) * sum_spec(sp, asg, W); }, N);
  };
  e.rhs_exact = [](const Assignment& asg, long long N) {
    const QMonomial a = asg.get(sA);
    const QMonomial ia = mo(1) / a;
    const QMonomial qa2 = a * a * qmono(1);
    const QMonomial qia2 = ia * ia * qmono(1);
    return exact_through(
        [&](long long W) {
          const long long W2 =
              W + neg_mass(a) + neg_mass(ia * qmono(1)) + neg_mass(qa2, 2) + neg_mass(qia2, 2) + 4;
          LaurentSeries t = poch_multi({qmono(1), a, ia * qmono(1)}, PochIndex::inf(), W2);
          t = t * poch(qa2, PochIndex::inf(), W2, 2);
          t = t * poch(qia2, PochIndex::inf(), W2, 2);
          return t;
        },
        N);
  };
  e.lhs_num = [sp](const NumAssignment& asg, const NumericConfig& cfg) {
    return -asg.get(sA) * eval_sum_num(sp, asg, cfg);
  };
  e.rhs_num = [](const NumAssignment& asg, const NumericConfig& cfg) {
    const Complex a = asg.get(sA), q = asg.q;
    Complex t = eval_poch_num(q, PochIndex::inf(), q, 1, cfg) *
                eval_poch_num(a, PochIndex::inf(), q, 1, cfg) *
                eval_poch_num(q / a, PochIndex::inf(), q, 1, cfg);
    t *= eval_poch_num(q * a * a, PochIndex::inf(), q, 2, cfg);
    t *= eval_poch_num(q / (a * a), PochIndex::inf(), q, 2, cfg);
    return t;
  };
  e.suggested_exact = {mk({{sA, mo(2, 1, 1)}}), mk({{sA, mo(-3, 1, 1)}}), mk({{sA, mo(1, 2, 1)}}),
                       mk({{sA, mo(2, 1, 2)}}), mk({{sA, mo(-2)}})};
  e.suggested_numeric = {mk({{sA, mo(11, 20)}}), mk({{sA, mo(4, 5)}}), mk({{sA, mo(-7, 10)}}),
                         mk({{sA, mo(2)}}), mk({{sA, mo(3, 10)}}), mk({{sA, mo(-1, 3)}})};
  return e;
}

IdentityEntry make_degen(bool to4) {
  IdentityEntry e;
  e.id = to4 ? "DEGEN_5TO4" : "DEGEN_5TO2";
  e.anchor = "Section 1, remark after Theorem 1.3";
  e.summary = to4 ? "The e -> 0 scaled limit of the five-parameter difference reproduces the "
                    "four-parameter product identity."
                  : "The c,d,e -> 0 scaled limit of the five-parameter difference reproduces the "
                    "two-parameter product identity.";
  e.numeric = false;
  const int arity = to4 ? 4 : 2;
  e.slots = {msd("a", "nonzero; not -q^{-j-1}"), msd("b", "nonzero; not -q^{-j-1}")};
  if (to4) {
    e.slots.push_back(msd("c", "nonzero; -c/a, -c/b not q^{-j}"));
    e.slots.push_back(msd("d", "nonzero; -d/a, -d/b not q^{-j}"));
  }

  std::vector<Slot> req = {sA, sB};
  if (to4) {
    req.push_back(sC);
    req.push_back(sD);
  }
  const std::vector<PE> dens = recip_prod_dens(arity);
  e.check = [req, dens](const Assignment& asg) -> std::optional<std::string> {
    for (Slot s : req)
      if (asg.get(s).is_zero()) return std::string(slot_name(s)) + " must be nonzero";
    return check_no_unit_nonpos(asg, dens);
  };
  LaurentSeries (*term)(const Assignment&, long long, long long) =
      to4 ? &degen54_term : &degen52_term;
  e.lhs_exact = [term](const Assignment& asg, long long N) {
    return exact_through(
        [&](long long W) {
          return degen_series(term, asg, W) - degen_series(term, swapped_ab(asg), W);
        },
        N);
  };
  e.rhs_exact = [arity](const Assignment& asg, long long N) {
    return recip_rhs_exact(arity, asg, N);
  };
  if (to4) {
    e.suggested_exact = {
        mk({{sA, mo(2)}, {sB, mo(3)}, {sC, qmono(1)}, {sD, qmono(1)}}),
        mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}, {sC, mo(2, 1, 1)}, {sD, qmono(1)}}),
        mk({{sA, mo(3)}, {sB, mo(5, 7)}, {sC, qmono(2)}, {sD, qmono(1)}}),
        mk({{sA, mo(-2)}, {sB, mo(3)}, {sC, mo(-1, 1, 1)}, {sD, mo(1, 2, 1)}}),
        mk({{sA, mo(2)}, {sB, mo(-3)}, {sC, qmono(1)}, {sD, mo(3, 1, 1)}})};
  } else {
    e.suggested_exact = {mk({{sA, mo(2)}, {sB, mo(3)}}), mk({{sA, mo(1, 2)}, {sB, mo(-2, 3)}}),
                         mk({{sA, mo(-3)}, {sB, mo(5, 7)}}), mk({{sA, mo(3, 1, 1)}, {sB, mo(2)}}),
                         mk({{sA, mo(2, 1, 2)}, {sB, mo(3, 1, 1)}})};
  }
  return e;
}

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> v;
  v.push_back(make_recip(2));
  v.push_back(make_recip(4));
  v.push_back(make_recip(5));
  v.push_back(make_bailey());
  v.push_back(make_w87());
  v.push_back(make_watson_limit());
  v.push_back(make_watson_zq());
  v.push_back(make_rho4_reps());
  v.push_back(make_rho5_term());
  v.push_back(make_fin_rs());
  v.push_back(make_fin_a());
  v.push_back(make_fin_c());
  v.push_back(make_pfaff());
  v.push_back(make_gould());
  v.push_back(make_sym_qm());
  v.push_back(make_rf(true));
  v.push_back(make_rf(false));
  v.push_back(make_partial_d());
  v.push_back(make_partial_1());
  v.push_back(make_xi_recip());
  v.push_back(make_xi_reps());
  v.push_back(make_xi_bilateral());
  v.push_back(make_jackson());
  v.push_back(make_three_term());
  v.push_back(make_quint_2var());
  v.push_back(make_quint());
  v.push_back(make_degen(true));
  v.push_back(make_degen(false));
  return v;
}

void ensure_slots(const IdentityEntry& e, const Assignment& asg) {
  for (const auto& d : e.slots) {
    if (d.sort == SlotSort::MonomialParam) {
      const auto s = slot_from_name(d.name);
      if (!s || !asg.has(*s))
        raise(Err::ConstraintViolation, e.id + ": slot " + d.name + " is not set");
    } else {
      const auto s = int_slot_from_name(d.name);
      if (!s || !asg.has(*s))
        raise(Err::ConstraintViolation, e.id + ": integer slot " + d.name + " is not set");
    }
  }
}

void ensure_slots_num(const IdentityEntry& e, const NumAssignment& asg) {
  for (const auto& d : e.slots) {
    if (d.sort == SlotSort::MonomialParam) {
      const auto s = slot_from_name(d.name);
      if (!s || !asg.val[static_cast<int>(*s)])
        raise(Err::ConstraintViolation, e.id + ": slot " + d.name + " is not set");
    } else {
      const auto s = int_slot_from_name(d.name);
      if (!s || !asg.ints[static_cast<int>(*s)])
        raise(Err::ConstraintViolation, e.id + ": integer slot " + d.name + " is not set");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog access and evaluation
// ---------------------------------------------------------------------------

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> c = build_catalog();
  return c;
}

const IdentityEntry* find_identity(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

const IdentityEntry& catalog_entry(const std::string& id) {
  const IdentityEntry* e = find_identity(id);
  if (!e) raise(Err::BadInput, "unknown identity id: " + id);
  return *e;
}

ExactPair evaluate_identity(const std::string& id, const Assignment& asg, long long N) {
  const IdentityEntry& e = catalog_entry(id);
  if (!e.exact) raise(Err::BadInput, id + " has no exact backend");
  ensure_slots(e, asg);
  if (e.check)
    if (auto v = e.check(asg)) raise(Err::ConstraintViolation, id + ": " + *v);
  ExactPair p;
  p.lhs = e.lhs_exact(asg, N);
  p.rhs = e.rhs_exact(asg, N);
  return p;
}

LaurentSeries residual(const std::string& id, const Assignment& asg, long long N) {
  const ExactPair p = evaluate_identity(id, asg, N);
  return series_sub(p.lhs, p.rhs);
}

NumericPair evaluate_identity_num(const std::string& id, const NumAssignment& asg,
                                  const NumericConfig& cfg) {
  const IdentityEntry& e = catalog_entry(id);
  if (!e.numeric) raise(Err::BadInput, id + " has no numeric backend");
  set_precision_bits(cfg.precision_bits);
  if (!(abs(asg.q) < 1)) raise(Err::BadInput, "numeric evaluation requires |q| < 1");
  ensure_slots_num(e, asg);
  if (e.check_num)
    if (auto v = e.check_num(asg)) raise(Err::ConstraintViolation, id + ": " + *v);
  NumericPair p;
  p.lhs = e.lhs_num(asg, cfg);
  p.rhs = e.rhs_num(asg, cfg);
  return p;
}

Real residual_num(const std::string& id, const NumAssignment& asg, const NumericConfig& cfg) {
  const NumericPair p = evaluate_identity_num(id, asg, cfg);
  return residual_relative(p.lhs, p.rhs);
}

}  // namespace qiv
