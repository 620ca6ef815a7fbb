#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qiv/engine.hpp"

using namespace qiv;

namespace {

bool equal_through(const LaurentSeries& x, const LaurentSeries& y, long long n) {
  long long lo = std::min(x.min_order(), y.min_order());
  for (long long e = lo; e <= n; ++e)
    if (x.coeff(e) != y.coeff(e)) return false;
  return true;
}

template <typename F>
Err thrown_kind(F&& f) {
  try {
    f();
  } catch (const EngineError& e) {
    return e.kind();
  }
  REQUIRE(false);
  return Err::BadInput;
}

ParamExpr S(Slot s) { return ParamExpr::slot(s); }
ParamExpr C(const Rational& r) { return ParamExpr::constant(r); }
ParamExpr Q(long long e = 1) { return ParamExpr::q(e); }

// sum_k (1 - (aq/b) q^{2k}) (-1/b;q)_{k+1} (-aq/c, -aq/d, -aq/e;q)_k
//       / ((-aq;q)_k (-c/b, -d/b, -e/b;q)_{k+1}) * (cde/(abq))^k
SeriesSpec five_param_spec() {
  ParamExpr a = S(Slot::a), b = S(Slot::b), c = S(Slot::c), d = S(Slot::d), e = S(Slot::e);
  SeriesSpec s;
  s.num = {{-(C(1) / b), 1}, {-(a * Q() / c), 0}, {-(a * Q() / d), 0}, {-(a * Q() / e), 0}};
  s.den = {{-(a * Q()), 0}, {-(c / b), 1}, {-(d / b), 1}, {-(e / b), 1}};
  s.kernel = a * Q() / b;
  s.arg = c * d * e / (a * b * Q());
  return s;
}

// sum_k q^{binom(k+1,2)} (1 + (cd/b) q^{2k}) (c, d, cd/(ab);q)_k
//       / ((-aq;q)_k (-c/b, -d/b;q)_{k+1}) * (-a/b)^k
SeriesSpec four_param_spec() {
  ParamExpr a = S(Slot::a), b = S(Slot::b), c = S(Slot::c), d = S(Slot::d);
  SeriesSpec s;
  s.quad = {1, 1};
  s.num = {{c, 0}, {d, 0}, {c * d / (a * b), 0}};
  s.den = {{-(a * Q()), 0}, {-(c / b), 1}, {-(d / b), 1}};
  s.kernel = -(c * d / b);
  s.arg = -(a / b);
  return s;
}

Assignment base_assignment() {
  Assignment asg;
  asg.set(Slot::a, QMonomial(2, 0))
      .set(Slot::b, QMonomial(3, 0))
      .set(Slot::c, QMonomial(1, 1))
      .set(Slot::d, QMonomial(1, 1))
      .set(Slot::e, QMonomial(1, 1));
  return asg;
}

}  // namespace

TEST_CASE("parameter expressions evaluate to monomials") {
  ParamExpr p = -(S(Slot::a) * Q() / S(Slot::c));
  Assignment asg;
  asg.set(Slot::a, QMonomial(2, 0)).set(Slot::c, QMonomial(1, 1));
  CHECK(p.eval(asg) == QMonomial(-2, 0));

  ParamExpr r = (C(Rational(3, 2)) * Q(2) * S(Slot::b).pow(2)) / S(Slot::a);
  asg.set(Slot::b, QMonomial(-1, 3));
  CHECK(r.eval(asg) == QMonomial(Rational(3, 4), 8));

  // zero slot: positive powers collapse the value, negative powers divide by zero
  asg.set(Slot::a, QMonomial());
  CHECK(S(Slot::a).pow(3).eval(asg).is_zero());
  CHECK(thrown_kind([&] { (C(1) / S(Slot::a)).eval(asg); }) == Err::DivisionByZeroSeries);
  CHECK(S(Slot::a).pow(-2).pw[0] == -2);  // negative powers of a nonzero expression are fine
  CHECK(thrown_kind([] { C(0).pow(-1); }) == Err::DivisionByZeroSeries);

  // unset slot
  Assignment empty;
  CHECK(thrown_kind([&] { S(Slot::d).eval(empty); }) == Err::BadInput);

  // slot name round trips
  const char* names[] = {"a", "b", "c", "d", "e", "x", "y", "z", "w"};
  for (int i = 0; i < kSlotCount; ++i) {
    auto s = slot_from_name(names[i]);
    REQUIRE(s.has_value());
    CHECK(std::string(slot_name(*s)) == names[i]);
  }
  CHECK(!slot_from_name("t").has_value());
  CHECK(int_slot_from_name("r").has_value());
  CHECK(!int_slot_from_name("k").has_value());

  Assignment described;
  described.set(Slot::a, QMonomial(2, 1)).set(IntSlot::r, 4);
  CHECK(described.str().find("a=") != std::string::npos);
  CHECK(described.str().find("r=4") != std::string::npos);
  CHECK(ParamExpr::constant(0).str() == "0");
  CHECK(C(1).str() == "1");
}

TEST_CASE("growth analysis measures term order rates") {
  SeriesSpec s = five_param_spec();

  // monomial parameters of order 1 give linear order growth: rate 2 per index
  Assignment A = base_assignment();
  GrowthVerdict v = growth_check(s, A);
  CHECK(v.admissible);
  CHECK(!v.pos.terminating);
  CHECK(!v.pos.pole);
  CHECK(v.pos.twoA == 0);
  CHECK(v.pos.twoB == 4);

  // constant parameters push the argument to order -1: orders never grow
  Assignment B = base_assignment();
  B.set(Slot::c, QMonomial(3, 0)).set(Slot::d, QMonomial(3, 0)).set(Slot::e, QMonomial(3, 0));
  GrowthVerdict vb = growth_check(s, B);
  CHECK(!vb.admissible);
  CHECK(!vb.pos.terminating);
  CHECK(vb.pos.twoB == -2);
  CHECK(thrown_kind([&] { sum_unilateral(s, B, 10); }) == Err::InadmissibleSeries);

  // a quadratic exponent dominates any monomial argument
  SeriesSpec r2;
  r2.quad = {1, 1};
  r2.den = {{-(S(Slot::a) * Q()), 0}};
  r2.arg = -(S(Slot::a) / S(Slot::b));
  Assignment ra;
  ra.set(Slot::a, QMonomial(2, -1)).set(Slot::b, QMonomial(Rational(1, 3), 0));
  GrowthVerdict vr = growth_check(r2, ra);
  CHECK(vr.admissible);
  CHECK(vr.pos.twoA == 1);
}

TEST_CASE("unit-power numerator bases terminate the sum") {
  SeriesSpec s = five_param_spec();
  Assignment C4 = base_assignment();
  C4.set(Slot::d, QMonomial(-2, 5));  // -aq/d becomes q^{-4}

  GrowthVerdict v = growth_check(s, C4);
  CHECK(v.admissible);
  CHECK(v.pos.terminating);
  CHECK(v.pos.last_index == 4);

  // the sum equals the explicit five-term sum
  const long long N = 30;
  LaurentSeries total = sum_unilateral(s, C4, N);
  LaurentSeries manual = series_zero(N);
  for (long long k = 0; k <= 4; ++k) manual = series_add(manual, term_value(s, C4, k, N));
  CHECK(equal_through(total, manual, N));
  // and the next term really is zero
  CHECK(classify_term(s, C4, 5).kind == TermClass::Kind::Zero);
}

TEST_CASE("vanishing denominators are detected before summing") {
  SeriesSpec s = five_param_spec();
  Assignment D = base_assignment();
  D.set(Slot::c, QMonomial(-3, -2));  // -c/b becomes q^{-2}: (q^{-2};q)_{k+1} dies at k=2

  GrowthVerdict v = growth_check(s, D);
  CHECK(!v.admissible);
  CHECK(v.pos.pole);
  CHECK(v.pos.pole_index == 2);
  CHECK(thrown_kind([&] { sum_unilateral(s, D, 10); }) == Err::PoleInTerm);

  // termination strictly before the collision masks the pole
  Assignment E = D;
  E.set(Slot::d, QMonomial(-2, 1));  // -aq/d = 1: only k = 0 survives
  GrowthVerdict ve = growth_check(s, E);
  CHECK(ve.admissible);
  CHECK(ve.pos.terminating);
  CHECK(ve.pos.last_index == 0);
  LaurentSeries total = sum_unilateral(s, E, 20);
  CHECK(equal_through(total, term_value(s, E, 0, 20), 20));
}

TEST_CASE("term classification distinguishes finite, zero and pole") {
  SeriesSpec t;
  t.num = {{Q(-3), 0}};
  t.den = {{Q(-5), 0}};
  t.arg = Q();
  Assignment none;

  TermClass f = classify_term(t, none, 2);
  CHECK(f.kind == TermClass::Kind::Finite);
  CHECK(f.order == 6);  // 2 - (-3 - 2) + (-5 - 4)

  CHECK(classify_term(t, none, 4).kind == TermClass::Kind::Zero);   // numerator hits q^0 = 1
  CHECK(classify_term(t, none, 6).kind == TermClass::Kind::Pole);   // denominator vanishes

  // negative indices flip the roles: infinite numerator = pole, infinite denominator = zero
  SeriesSpec n1;
  n1.kind = SumKind::Bilateral;
  n1.num = {{Q(), 0}};
  n1.arg = Q();
  CHECK(classify_term(n1, none, -1).kind == TermClass::Kind::Pole);
  SeriesSpec n2;
  n2.kind = SumKind::Bilateral;
  n2.den = {{Q(), 0}};
  n2.arg = Q();
  CHECK(classify_term(n2, none, -1).kind == TermClass::Kind::Zero);

  // the extra linear factor vanishes exactly where u q^{2k} = 1
  SeriesSpec w;
  w.kernel = Q(-4);
  w.arg = Q();
  CHECK(classify_term(w, none, 2).kind == TermClass::Kind::Zero);
  TermClass w1 = classify_term(w, none, 1);
  CHECK(w1.kind == TermClass::Kind::Finite);
  CHECK(w1.order == -1);  // z-power 1 plus kernel order -2

  // zero argument keeps only the k = 0 term
  SeriesSpec z0;
  z0.kind = SumKind::Bilateral;
  z0.arg = S(Slot::x);
  Assignment xz;
  xz.set(Slot::x, QMonomial());
  CHECK(classify_term(z0, xz, 0).kind == TermClass::Kind::Finite);
  CHECK(classify_term(z0, xz, 1).kind == TermClass::Kind::Zero);
  CHECK(classify_term(z0, xz, -1).kind == TermClass::Kind::Zero);
  GrowthVerdict vz = growth_check(z0, xz);
  CHECK(vz.admissible);
  CHECK(vz.pos.terminating);
  CHECK(vz.pos.last_index == 0);
}

TEST_CASE("term values match directly built Pochhammer quotients") {
  SeriesSpec rc = four_param_spec();
  Assignment asg = base_assignment();
  const long long N = 25, W = 60;
  for (long long k = 0; k <= 8; ++k) {
    LaurentSeries tv = term_value(rc, asg, k, N);

    LaurentSeries num = series_one(W);
    LaurentSeries kf = series_one(W);  // 1 + (1/3) q^{2 + 2k}
    kf.set(2 + 2 * k, Rational(1, 3));
    num = series_mul(num, kf);
    num = series_mul(num, poch(QMonomial(1, 1), PochIndex::finite(k), W));
    num = series_mul(num, poch(QMonomial(1, 1), PochIndex::finite(k), W));
    num = series_mul(num, poch(QMonomial(Rational(1, 6), 2), PochIndex::finite(k), W));

    LaurentSeries den = poch(QMonomial(-2, 1), PochIndex::finite(k), W);
    den = series_mul(den, poch(QMonomial(Rational(-1, 3), 1), PochIndex::finite(k + 1), W));
    den = series_mul(den, poch(QMonomial(Rational(-1, 3), 1), PochIndex::finite(k + 1), W));

    LaurentSeries brute = series_div(num, den);
    QMonomial pref(rat_pow(Rational(-2, 3), k), k * (k + 1) / 2);
    brute = brute.scaled(pref.coeff).shifted(pref.exp);
    CHECK(equal_through(tv, brute.truncated(N), N));
  }
}

TEST_CASE("negative-index terms use the reciprocal Pochhammer rewrite") {
  SeriesSpec xb;
  xb.kind = SumKind::Bilateral;
  xb.quad = {1, 0};
  xb.den = {{S(Slot::x), 1}};
  xb.arg = -(S(Slot::a) * S(Slot::x));
  Assignment asg;
  asg.set(Slot::a, QMonomial(2, 0)).set(Slot::x, QMonomial(2, 2));

  const long long N = 20, W = 50;
  for (long long k = -1; k >= -4; --k) {
    LaurentSeries tv = term_value(xb, asg, k, N);
    LaurentSeries den = poch(QMonomial(2, 2), PochIndex::finite(k + 1), W);
    LaurentSeries brute = series_inv(den)
                              .scaled(rat_pow(Rational(-4), k))
                              .shifted(2 * k + k * (k - 1) / 2)
                              .truncated(N);
    CHECK(equal_through(tv, brute, N));
  }
}

TEST_CASE("building-block sums reproduce closed products") {
  const long long N = 25;
  Assignment none;

  // geometric: sum (3q^2)^k = 1/(1 - 3q^2)
  SeriesSpec g;
  g.arg = C(3) * Q(2);
  LaurentSeries gd = series_one(N);
  gd.set(2, Rational(-3));
  CHECK(equal_through(sum_unilateral(g, none, N), series_inv(gd), N));

  // q-exponential: sum z^k/(q;q)_k = 1/(z;q)_inf at z = 2q
  SeriesSpec e1;
  e1.den = {{Q(), 0}};
  e1.arg = C(2) * Q();
  CHECK(equal_through(sum_unilateral(e1, none, N),
                      series_inv(poch(QMonomial(2, 1), PochIndex::inf(), N)), N));

  // the alternating variant: sum q^{binom(k,2)} (-z)^k/(q;q)_k = (z;q)_inf
  SeriesSpec e2;
  e2.quad = {1, 0};
  e2.den = {{Q(), 0}};
  e2.arg = C(-2) * Q();
  CHECK(equal_through(sum_unilateral(e2, none, N),
                      poch(QMonomial(2, 1), PochIndex::inf(), N), N));

  // the extra linear factor splits the q-exponential into two pieces:
  // sum (1 - 3q^{2k+1}) z^k/(q;q)_k = 1/(z;q)_inf - 3q/(zq^2;q)_inf at z = 2q
  SeriesSpec ek = e1;
  ek.kernel = C(3) * Q();
  LaurentSeries want =
      series_sub(series_inv(poch(QMonomial(2, 1), PochIndex::inf(), N)),
                 series_inv(poch(QMonomial(2, 3), PochIndex::inf(), N)).scaled(3).shifted(1));
  CHECK(equal_through(sum_unilateral(ek, none, N), want, N));
}

TEST_CASE("telescoping sum collapses to the constant one") {
  // sum_k q^{binom(k,2)} a^k / (-a;q)_{k+1} = 1
  SeriesSpec p1;
  p1.quad = {1, 0};
  p1.den = {{-S(Slot::a), 1}};
  p1.arg = S(Slot::a);
  const long long N = 60;
  for (const QMonomial& av : {QMonomial(2, 0), QMonomial(3, 2), QMonomial(1, 1)}) {
    Assignment asg;
    asg.set(Slot::a, av);
    CHECK(equal_through(sum_unilateral(p1, asg, N), series_one(N), N));
  }
}

TEST_CASE("bilateral sums assemble both directions") {
  Assignment none;

  // triple product: sum_{k in Z} q^{k(k-1)/2} z^k = (q, -z, -q/z; q)_inf at z = 2q
  SeriesSpec j;
  j.kind = SumKind::Bilateral;
  j.quad = {1, 0};
  j.arg = C(2) * Q();
  const long long N = 30;
  LaurentSeries rhs = poch_multi(
      {QMonomial(1, 1), QMonomial(-2, 1), QMonomial(Rational(-1, 2), 0)}, PochIndex::inf(), N);
  CHECK(equal_through(sum_bilateral(j, none, N), rhs, N));

  // sum_{k in Z} q^{binom(k,2)} (-ax)^k/(x;q)_{k+1} = (q, ax, q/(ax);q)_inf/((x, q/a;q)_inf)
  SeriesSpec xb;
  xb.kind = SumKind::Bilateral;
  xb.quad = {1, 0};
  xb.den = {{S(Slot::x), 1}};
  xb.arg = -(S(Slot::a) * S(Slot::x));

  // x = q: all indices below -1 vanish
  Assignment a1;
  a1.set(Slot::a, QMonomial(2, 0)).set(Slot::x, QMonomial(1, 1));
  CHECK(classify_term(xb, a1, -2).kind == TermClass::Kind::Zero);
  CHECK(classify_term(xb, a1, -3).kind == TermClass::Kind::Zero);
  LaurentSeries n1 = poch_multi(
      {QMonomial(1, 1), QMonomial(2, 1), QMonomial(Rational(1, 2), 0)}, PochIndex::inf(), N + 4);
  LaurentSeries d1 = poch_multi({QMonomial(1, 1), QMonomial(Rational(1, 2), 1)},
                                PochIndex::inf(), N + 4);
  CHECK(equal_through(sum_bilateral(xb, a1, N), series_div(n1, d1).truncated(N), N));

  // x = 2q^2: the negative direction contributes orders down to q^{-1}
  Assignment a2;
  a2.set(Slot::a, QMonomial(2, 0)).set(Slot::x, QMonomial(2, 2));
  const long long M = 25;
  LaurentSeries lhs2 = sum_bilateral(xb, a2, M);
  CHECK(lhs2.min_order() == -1);
  LaurentSeries n2 =
      poch_multi({QMonomial(1, 1), QMonomial(4, 2), QMonomial(Rational(1, 4), -1)},
                 PochIndex::inf(), M + 5);
  LaurentSeries d2 = poch_multi({QMonomial(2, 2), QMonomial(Rational(1, 2), 1)},
                                PochIndex::inf(), M + 5);
  CHECK(equal_through(lhs2, series_div(n2, d2).truncated(M), M));
}

TEST_CASE("bilateral equals unilateral when the negative side is empty") {
  SeriesSpec be;
  be.kind = SumKind::Bilateral;
  be.num = {{S(Slot::a), 0}};
  be.den = {{Q(), 0}};
  be.arg = S(Slot::x);
  Assignment asg;
  asg.set(Slot::a, QMonomial(2, 0)).set(Slot::x, QMonomial(1, 1));

  SeriesSpec ue = be;
  ue.kind = SumKind::Unilateral;
  const long long N = 25;
  CHECK(equal_through(sum_bilateral(be, asg, N), sum_unilateral(ue, asg, N), N));
}

TEST_CASE("refining the order only appends coefficients") {
  SeriesSpec s = five_param_spec();
  Assignment A = base_assignment();
  LaurentSeries s20 = sum_unilateral(s, A, 20);
  LaurentSeries s40 = sum_unilateral(s, A, 40);
  CHECK(equal_through(s20, s40.truncated(20), 20));

  SeriesSpec j;
  j.kind = SumKind::Bilateral;
  j.quad = {1, 0};
  j.arg = C(2) * Q();
  Assignment none;
  CHECK(equal_through(sum_bilateral(j, none, 18), sum_bilateral(j, none, 36).truncated(18), 18));
}

TEST_CASE("the normalizing factor divides the whole sum") {
  SeriesSpec j;
  j.kind = SumKind::Bilateral;
  j.quad = {1, 0};
  j.arg = C(2) * Q();
  j.kernel_norm = S(Slot::a);

  Assignment a2;
  a2.set(Slot::a, QMonomial(2, 0));
  SeriesSpec raw = j;
  raw.kernel_norm.reset();
  Assignment none;
  const long long N = 25;
  // dividing by (1 - 2) = -1 flips the sign
  CHECK(equal_through(sum_bilateral(j, a2, N), sum_bilateral(raw, none, N).scaled(-1), N));

  // v = 1 is a genuine pole of the normalizer
  Assignment a1;
  a1.set(Slot::a, QMonomial(1, 0));
  CHECK(thrown_kind([&] { sum_bilateral(j, a1, 10); }) == Err::PoleInTerm);

  // negative-order normalizer still lands on the requested order
  Assignment am;
  am.set(Slot::a, QMonomial(Rational(1, 2), -1));
  LaurentSeries got = sum_bilateral(j, am, 20);
  LaurentSeries dv = series_one(40);
  dv.set(-1, Rational(-1, 2));
  LaurentSeries manual = series_div(sum_bilateral(raw, none, 24), dv).truncated(20);
  CHECK(equal_through(got, manual, 20));
}

TEST_CASE("very-well-poised builder expands the head pair") {
  VWPSpec w;
  w.head = C(4) * Q(2);
  w.tail = {S(Slot::b)};
  w.arg = Q();
  w.kind = SumKind::Unilateral;
  Assignment asg;
  asg.set(Slot::b, QMonomial(2, 0));

  SeriesSpec s = build_vwp(w, asg);
  REQUIRE(s.num.size() == 2);
  REQUIRE(s.den.size() == 2);
  CHECK(s.num[0].base.eval(asg) == QMonomial(4, 2));
  CHECK(s.num[1].base.eval(asg) == QMonomial(2, 0));
  CHECK(s.den[0].base.eval(asg) == QMonomial(1, 1));
  CHECK(s.den[1].base.eval(asg) == QMonomial(2, 3));  // head*q/b
  REQUIRE(s.kernel.has_value());
  REQUIRE(s.kernel_norm.has_value());
  CHECK(s.kernel->eval(asg) == QMonomial(4, 2));
  CHECK(s.kernel_norm->eval(asg) == QMonomial(4, 2));

  VWPSpec wb = w;
  wb.kind = SumKind::Bilateral;
  SeriesSpec sb = build_vwp(wb, asg);
  CHECK(sb.num.size() == 1);  // tail only: no head factor, no (q;q)_k
  CHECK(sb.den.size() == 1);

  // heads that are not perfect squares are rejected
  VWPSpec bad1 = w;
  bad1.head = C(2) * Q(2);
  CHECK(thrown_kind([&] { build_vwp(bad1, asg); }) == Err::NotAPerfectSquare);
  VWPSpec bad2 = w;
  bad2.head = C(4) * Q(1);
  CHECK(thrown_kind([&] { build_vwp(bad2, asg); }) == Err::NotAPerfectSquare);
  VWPSpec bad3 = w;
  bad3.head = C(0);
  CHECK(thrown_kind([&] { build_vwp(bad3, asg); }) == Err::NotAPerfectSquare);
  VWPSpec ok = w;
  ok.head = C(Rational(9, 4)) * Q(4);
  CHECK(build_vwp(ok, asg).num.size() == 2);
}

TEST_CASE("terminating very-well-poised sum matches its closed product") {
  // head a = q^2, tail {b, c, q^{-n}} with n = 2 via the w slot:
  // the sum telescopes to (aq;q)_n (aq/(bc);q)_n / ((aq/b;q)_n (aq/c;q)_n).
  VWPSpec w;
  w.head = S(Slot::a);
  w.tail = {S(Slot::b), S(Slot::c), S(Slot::w)};
  w.arg = (S(Slot::a) * Q()) / (S(Slot::b) * S(Slot::c) * S(Slot::w));
  Assignment asg;
  asg.set(Slot::a, QMonomial(1, 2))
      .set(Slot::b, QMonomial(2, 0))
      .set(Slot::c, QMonomial(3, 0))
      .set(Slot::w, QMonomial(1, -2));

  SeriesSpec s = build_vwp(w, asg);
  GrowthVerdict v = growth_check(s, asg);
  CHECK(v.admissible);
  CHECK(v.pos.terminating);
  CHECK(v.pos.last_index == 2);

  const long long N = 30, W = 40;
  LaurentSeries lhs = sum_unilateral(s, asg, N);
  LaurentSeries num = series_mul(poch(QMonomial(1, 3), PochIndex::finite(2), W),
                                 poch(QMonomial(Rational(1, 6), 3), PochIndex::finite(2), W));
  LaurentSeries den = series_mul(poch(QMonomial(Rational(1, 2), 3), PochIndex::finite(2), W),
                                 poch(QMonomial(Rational(1, 3), 3), PochIndex::finite(2), W));
  CHECK(equal_through(lhs, series_div(num, den).truncated(N), N));
}
