#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qiv/catalog.hpp"

using namespace qiv;

namespace {

QMonomial mono(long long num, long long den = 1, long long e = 0) {
  return QMonomial(Rational(num, den), e);
}

Assignment recip2_sample() {
  Assignment a;
  a.set(Slot::a, mono(2)).set(Slot::b, mono(3));
  return a;
}

Assignment recip5_sample() {
  Assignment a;
  a.set(Slot::a, mono(2)).set(Slot::b, mono(3));
  a.set(Slot::c, mono(1, 1, 1)).set(Slot::d, mono(1, 1, 1)).set(Slot::e, mono(1, 1, 1));
  return a;
}

bool equal_through(const LaurentSeries& x, const LaurentSeries& y, long long n) {
  return is_zero_through(series_sub(x, y), n);
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

Rational coeff_sum(const LaurentSeries& s) {
  Rational tot(0);
  const auto& cs = s.coeffs();
  for (const auto& kv : cs) tot += kv.second;
  return tot;
}

}  // namespace

TEST_CASE("catalog lists every identity with consistent metadata") {
  const auto& cat = catalog();
  CHECK(cat.size() == 28);

  std::set<std::string> ids;
  for (const auto& e : cat) {
    CAPTURE(e.id);
    CHECK(!e.id.empty());
    CHECK(ids.insert(e.id).second);  // unique
    CHECK(!e.anchor.empty());
    CHECK(!e.summary.empty());
    CHECK(!e.slots.empty());
    CHECK(e.check != nullptr);
    if (e.exact) {
      CHECK(e.lhs_exact != nullptr);
      CHECK(e.rhs_exact != nullptr);
      CHECK(!e.suggested_exact.empty());
    }
    if (e.numeric) {
      CHECK(e.lhs_num != nullptr);
      CHECK(e.rhs_num != nullptr);
      CHECK(e.check_num != nullptr);
      CHECK(!e.suggested_numeric.empty());
    }
    // Every suggested assignment must populate every declared slot.
    auto covers = [&](const Assignment& asg) {
      for (const auto& d : e.slots) {
        if (d.sort == SlotSort::MonomialParam) {
          auto s = slot_from_name(d.name);
          if (!s || !asg.has(*s)) return false;
        } else {
          auto s = int_slot_from_name(d.name);
          if (!s || !asg.has(*s)) return false;
        }
      }
      return true;
    };
    for (const auto& asg : e.suggested_exact) CHECK(covers(asg));
    for (const auto& asg : e.suggested_numeric) CHECK(covers(asg));
  }

  CHECK(find_identity("RECIP2") != nullptr);
  CHECK(find_identity("NOT_AN_ID") == nullptr);
  CHECK(catalog_entry("RECIP5").anchor == "Theorem 1.3");
  CHECK(thrown_kind([] { catalog_entry("NOT_AN_ID"); }) == Err::BadInput);
}

TEST_CASE("five-parameter representations differ by the (1+1/b) prefactor") {
  const long long N = 25;
  std::vector<Assignment> samples = {recip5_sample()};
  {
    Assignment a;
    a.set(Slot::a, mono(1, 2)).set(Slot::b, mono(-2, 3));
    a.set(Slot::c, mono(1, 1, 1)).set(Slot::d, mono(2, 1, 1)).set(Slot::e, mono(1, 1, 1));
    samples.push_back(a);
  }
  for (const auto& asg : samples) {
    const LaurentSeries direct = rho_exact(5, RhoRep::Direct, asg, N);
    const LaurentSeries rho0 = rho_exact(5, RhoRep::Rho0, asg, N);
    const QMonomial ib = mono(1) / asg.get(Slot::b);
    const LaurentSeries pref = series_add(series_one(N), LaurentSeries(ib, N));
    CHECK(equal_through(direct, series_mul(pref, rho0), N));
  }
}

TEST_CASE("four-parameter representations agree with each other") {
  const long long N = 30;
  std::vector<Assignment> samples;
  {
    Assignment a;
    a.set(Slot::a, mono(2)).set(Slot::b, mono(3));
    a.set(Slot::c, mono(1, 1, 1)).set(Slot::d, mono(1, 1, 1));
    samples.push_back(a);
  }
  {
    Assignment a;
    a.set(Slot::a, mono(-2)).set(Slot::b, mono(3));
    a.set(Slot::c, mono(-1, 1, 1)).set(Slot::d, mono(1, 2, 1));
    samples.push_back(a);
  }
  for (const auto& asg : samples) {
    const LaurentSeries ra = rho_exact(4, RhoRep::RepA, asg, N);
    const LaurentSeries rb = rho_exact(4, RhoRep::RepB, asg, N);
    const LaurentSeries rc = rho_exact(4, RhoRep::RepC, asg, N);
    CHECK(equal_through(ra, rb, N));
    CHECK(equal_through(ra, rc, N));
  }
}

TEST_CASE("reciprocity identities hold to high order") {
  CHECK(is_zero_through(residual("RECIP2", recip2_sample(), 40), 40));

  Assignment r4;
  r4.set(Slot::a, mono(2)).set(Slot::b, mono(3));
  r4.set(Slot::c, mono(1, 1, 1)).set(Slot::d, mono(1, 1, 1));
  CHECK(is_zero_through(residual("RECIP4", r4, 35), 35));

  CHECK(is_zero_through(residual("RECIP5", recip5_sample(), 35), 35));

  // Equal parameters collapse both sides to zero.
  Assignment eq = r4;
  eq.set(Slot::b, mono(2));
  const ExactPair p = evaluate_identity("RECIP4", eq, 30);
  CHECK(is_zero_through(p.lhs, 30));
  CHECK(is_zero_through(p.rhs, 30));
}

TEST_CASE("the reciprocal difference is antisymmetric in a and b") {
  const long long N = 30;
  const Assignment asg = recip2_sample();
  const Assignment sw = swapped_ab(asg);
  CHECK(is_zero_through(residual("RECIP2", sw, N), N));
  const auto& e = catalog_entry("RECIP2");
  const LaurentSeries l = e.lhs_exact(asg, N);
  const LaurentSeries ls = e.lhs_exact(sw, N);
  CHECK(equal_through(ls, series_neg(l), N));
}

TEST_CASE("finite-cutoff identities hold exactly") {
  const auto& fin_rs = catalog_entry("FIN_RS");
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(is_zero_through(residual("FIN_RS", fin_rs.suggested_exact[i], 30), 30));

  const auto& fin_a = catalog_entry("FIN_A");
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(is_zero_through(residual("FIN_A", fin_a.suggested_exact[i], 30), 30));

  const auto& fin_c = catalog_entry("FIN_C");
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(is_zero_through(residual("FIN_C", fin_c.suggested_exact[i], 30), 30));

  // The power-of-four sum, spelled out for one n and swept for the rest.
  Assignment g;
  g.set(IntSlot::n, 4);
  CHECK(evaluate_identity("GOULD_181", g, 4).lhs.coeff(0) == Rational(256));
  for (long long n = 0; n <= 6; ++n) {
    g.set(IntSlot::n, n);
    CHECK(is_zero_through(residual("GOULD_181", g, 4), 4));
  }

  Assignment pf;
  pf.set(Slot::x, mono(5)).set(IntSlot::r, 0).set(IntSlot::s, 0);
  const ExactPair ppf = evaluate_identity("PFAFF_FIN", pf, 4);
  CHECK(ppf.lhs.coeff(0) == Rational(1));
  CHECK(ppf.rhs.coeff(0) == Rational(1));
  pf.set(Slot::x, mono(-3)).set(IntSlot::r, 12).set(IntSlot::s, 7);
  CHECK(is_zero_through(residual("PFAFF_FIN", pf, 4), 4));
}

TEST_CASE("terminating q-symmetric sum is symmetric in a and b") {
  const auto& e = catalog_entry("SYM_QM");
  CHECK(is_zero_through(residual("SYM_QM", e.suggested_exact[0], 30), 30));
  CHECK(is_zero_through(residual("SYM_QM", e.suggested_exact[3], 30), 30));
  CHECK(is_zero_through(residual("SYM_QM", e.suggested_exact[4], 30), 30));  // m = 0 edge
}

TEST_CASE("quintuple product identities hold") {
  Assignment q1;
  q1.set(Slot::a, mono(2, 1, 1));
  CHECK(is_zero_through(residual("QUINT", q1, 50), 50));

  Assignment q2;
  q2.set(Slot::x, mono(2, 1, 1)).set(Slot::z, mono(3, 1, 1));
  CHECK(is_zero_through(residual("QUINT_2VAR", q2, 40), 40));
  q2.set(Slot::x, mono(-1, 1, 1)).set(Slot::z, mono(1, 2, 1));
  CHECK(is_zero_through(residual("QUINT_2VAR", q2, 40), 40));
}

TEST_CASE("the finite c-sum specializes to the binomial identity at q = 1") {
  // With c = 1/(1-x) the q -> 1 limit of each side equals the corresponding
  // binomial side; summing all coefficients of the exact polynomial evaluates
  // the series at q = 1.
  const long long N = 60;
  struct Pair {
    QMonomial c;
    QMonomial x;
  };
  const std::vector<Pair> pairs = {{mono(-1), mono(2)}, {mono(1, 4), mono(-3)}};
  for (const auto& pr : pairs) {
    for (long long r = 0; r <= 3; ++r) {
      for (long long s = 0; s <= 3; ++s) {
        CAPTURE(pr.x.str());
        CAPTURE(r);
        CAPTURE(s);
        Assignment fc;
        fc.set(Slot::c, pr.c).set(IntSlot::r, r).set(IntSlot::s, s);
        const ExactPair side = evaluate_identity("FIN_C", fc, N);
        Assignment bx;
        bx.set(Slot::x, pr.x).set(IntSlot::r, r).set(IntSlot::s, s);
        const ExactPair bin = evaluate_identity("PFAFF_FIN", bx, 4);
        CHECK(coeff_sum(side.lhs) == bin.lhs.coeff(0));
        CHECK(coeff_sum(side.rhs) == bin.rhs.coeff(0));
      }
    }
  }
}

TEST_CASE("xi family: representations, special values, reciprocity") {
  const long long N = 25;
  Assignment asg;
  asg.set(Slot::a, mono(3)).set(Slot::x, mono(1, 1, 1));
  CHECK(equal_through(xi_exact(XiForm::SumForm, asg, N), xi_exact(XiForm::BinomForm, asg, N), N));

  // xi(a, 0) = 1: only the k = 0 term survives.
  Assignment zero_arg;
  zero_arg.set(Slot::a, mono(3)).set(Slot::x, QMonomial(Rational(0), 0));
  CHECK(equal_through(xi_exact(XiForm::SumForm, zero_arg, 10), series_one(10), 10));
  CHECK(is_zero_through(residual("XI_REPS", zero_arg, 10), 10));

  // xi(q, q) begins 1 + q - q^4 - q^6 + ...
  Assignment qq;
  qq.set(Slot::a, mono(1, 1, 1)).set(Slot::x, mono(1, 1, 1));
  const LaurentSeries s = xi_exact(XiForm::SumForm, qq, 8);
  const std::vector<long long> expect = {1, 1, 0, 0, -1, 0, -1, 0, 0};
  for (long long e = 0; e <= 8; ++e) CHECK(s.coeff(e) == Rational(expect[e]));

  Assignment xr;
  xr.set(Slot::a, mono(3)).set(Slot::x, mono(2, 1, 1));
  CHECK(is_zero_through(residual("XI_RECIP", xr, 30), 30));

  Assignment xb;
  xb.set(Slot::a, mono(2)).set(Slot::x, mono(1, 1, 1));
  CHECK(is_zero_through(residual("XI_BILATERAL", xb, 40), 40));
}

TEST_CASE("xi-type transformations hold") {
  Assignment j;
  j.set(Slot::a, mono(2)).set(Slot::y, mono(3)).set(Slot::x, mono(1, 1, 1));
  CHECK(is_zero_through(residual("JACKSON", j, 30), 30));

  Assignment t;
  t.set(Slot::x, mono(2, 1, 1)).set(Slot::y, mono(3));
  CHECK(is_zero_through(residual("THREE_TERM", t, 30), 30));
}

TEST_CASE("every curated exact sample verifies at order 24") {
  const long long N = 24;
  for (const auto& e : catalog()) {
    if (!e.exact) continue;
    for (std::size_t i = 0; i < e.suggested_exact.size(); ++i) {
      CAPTURE(e.id);
      CAPTURE(i);
      const LaurentSeries r = residual(e.id, e.suggested_exact[i], N);
      CHECK(is_zero_through(r, N));
    }
  }
}

TEST_CASE("every curated numeric sample verifies") {
  const NumericConfig cfg;
  const Real bound = Real("1e-9");
  for (const auto& e : catalog()) {
    if (!e.numeric) continue;
    for (std::size_t i = 0; i < e.suggested_numeric.size(); ++i) {
      CAPTURE(e.id);
      CAPTURE(i);
      const NumAssignment asg = NumAssignment::from_exact(e.suggested_numeric[i], Complex(0.3));
      CHECK(residual_num(e.id, asg, cfg) < bound);
    }
    // Complex nome spot checks on the first two samples.
    for (std::size_t i = 0; i < e.suggested_numeric.size() && i < 2; ++i) {
      CAPTURE(e.id);
      CAPTURE(i);
      const NumAssignment asg =
          NumAssignment::from_exact(e.suggested_numeric[i], Complex(Real(0.35), Real(0.1)));
      CHECK(residual_num(e.id, asg, cfg) < bound);
    }
  }
}

TEST_CASE("diagnostics reject bad inputs with the right error kinds") {
  // Divergent series parameter is rejected before the product side divides by zero.
  Assignment pd;
  pd.set(Slot::a, mono(2)).set(Slot::d, mono(1, 1, 1));
  CHECK(thrown_kind([&] { evaluate_identity("PARTIAL_D", pd, 20); }) == Err::InadmissibleSeries);

  // Numeric evaluation of an exact-only identity.
  Assignment pf;
  pf.set(Slot::x, mono(2)).set(IntSlot::r, 1).set(IntSlot::s, 1);
  const NumAssignment npf = NumAssignment::from_exact(pf, Complex(0.3));
  const NumericConfig cfg;
  CHECK(thrown_kind([&] { evaluate_identity_num("PFAFF_FIN", npf, cfg); }) == Err::BadInput);

  // Terminating representation without a terminating parameter.
  CHECK(thrown_kind([&] { rho_exact(5, RhoRep::Terminating, recip5_sample(), 10); }) ==
        Err::TerminationRequired);

  // Declared cutoff must match the detected one.
  Assignment rt = catalog_entry("RHO5_TERM").suggested_exact[0];
  rt.set(IntSlot::m, rt.get(IntSlot::m) + 1);
  CHECK(thrown_kind([&] { evaluate_identity("RHO5_TERM", rt, 10); }) == Err::ConstraintViolation);

  // Missing slot.
  Assignment half;
  half.set(Slot::a, mono(2));
  CHECK(thrown_kind([&] { evaluate_identity("RECIP2", half, 10); }) == Err::ConstraintViolation);

  // Unit-power denominator base.
  Assignment unit;
  unit.set(Slot::a, mono(2)).set(Slot::b, mono(-1, 1, -1));
  CHECK(thrown_kind([&] { evaluate_identity("RECIP2", unit, 10); }) == Err::ConstraintViolation);

  // Invalid (arity, representation) pairs.
  CHECK(thrown_kind([&] { rho_series_spec(3, RhoRep::Direct); }) == Err::BadInput);
  CHECK(thrown_kind([&] { rho_series_spec(2, RhoRep::RepB); }) == Err::BadInput);

  // Numeric nome outside the unit disk.
  const NumAssignment bad = NumAssignment::from_exact(recip2_sample(), Complex(1.5));
  CHECK(thrown_kind([&] { evaluate_identity_num("RECIP2", bad, cfg); }) == Err::BadInput);

  // Zero where a nonzero parameter is required.
  Assignment jz;
  jz.set(Slot::a, mono(2)).set(Slot::y, mono(3)).set(Slot::x, QMonomial(Rational(0), 0));
  CHECK(thrown_kind([&] { evaluate_identity("JACKSON", jz, 10); }) == Err::ConstraintViolation);

  // Numeric terminating evaluation needs the cutoff slot.
  NumAssignment nt = NumAssignment::from_exact(recip5_sample(), Complex(0.3));
  CHECK(thrown_kind([&] { rho_num(5, RhoRep::Terminating, nt, cfg); }) ==
        Err::TerminationRequired);
}
