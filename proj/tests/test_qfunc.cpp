#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qiv/qfunc.hpp"

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

}  // namespace

TEST_CASE("finite ascending products") {
  // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
  LaurentSeries p = poch(QMonomial(1, 1), PochIndex::finite(3), 12);
  const Rational want[] = {1, -1, -1, 0, 1, 1, -1, 0, 0};
  for (long long e = 0; e < 9; ++e) CHECK(p.coeff(e) == want[e]);

  CHECK(poch(QMonomial(2, 1), PochIndex::finite(0), 8).is_monomial(QMonomial(1, 0)));

  // a vanishing factor makes the whole product zero: (q^{-2};q)_4 hits k=2
  CHECK(poch(QMonomial(1, -2), PochIndex::finite(4), 8).is_zero());
  CHECK(!poch_order(QMonomial(1, -2), 4));
}

TEST_CASE("finite product splitting") {
  // (a;q)_{m+n} = (a;q)_m (a q^m;q)_n
  QMonomial a(2, 1);
  LaurentSeries whole = poch(a, PochIndex::finite(7), 25);
  LaurentSeries split =
      poch(a, PochIndex::finite(3), 25) * poch(QMonomial(2, 4), PochIndex::finite(4), 25);
  CHECK(equal_through(whole, split, std::min(whole.trunc_order(), split.trunc_order())));
}

TEST_CASE("ascending recurrence") {
  // (a;q)_{n+1} = (a;q)_n (1 - a q^n)
  const QMonomial bases[] = {QMonomial(2, 1), QMonomial(Rational(-1, 2), 0),
                             QMonomial(Rational(3, 4), -1)};
  for (const auto& a : bases)
    for (long long n = 0; n <= 12; ++n) {
      LaurentSeries lhs = poch(a, PochIndex::finite(n + 1), 20);
      LaurentSeries step = series_one(20 + std::max(0LL, -(a.exp + n)) + 1);
      step.set(a.exp + n, step.coeff(a.exp + n) - a.coeff);
      LaurentSeries rhs = poch(a, PochIndex::finite(n), 20 - std::min(0LL, a.exp + n)) * step;
      CHECK(equal_through(lhs, rhs, std::min(lhs.trunc_order(), rhs.trunc_order())));
    }
}

TEST_CASE("infinite quotient gives finite product") {
  // (a;q)_inf / (a q^n;q)_inf = (a;q)_n
  for (long long n : {1, 4, 9}) {
    QMonomial a(Rational(2, 3), 1);
    LaurentSeries quot = poch(a, PochIndex::inf(), 25) /
                         poch(QMonomial(Rational(2, 3), 1 + n), PochIndex::inf(), 25);
    LaurentSeries fin = poch(a, PochIndex::finite(n), 25);
    CHECK(equal_through(quot, fin, std::min(quot.trunc_order(), fin.trunc_order())));
  }
}

TEST_CASE("negative index") {
  // (2;q)_{-1} = (-q/2) / (1 - q/2) = -q/2 - q^2/4 - q^3/8 - ...
  LaurentSeries s = poch(QMonomial(2, 0), PochIndex::finite(-1), 12);
  CHECK(s.min_order() == 1);
  for (long long k = 1; k <= 12; ++k) CHECK(s.coeff(k) == -rat_pow(Rational(1, 2), k));

  // involution: (a;q)_{-n} (a q^{-n};q)_n = 1
  for (long long n : {1, 2, 3}) {
    QMonomial a(3, 2);
    LaurentSeries left = poch(a, PochIndex::finite(-n), 20);
    LaurentSeries right = poch(QMonomial(3, 2 - n), PochIndex::finite(n), 20);
    LaurentSeries prod = left * right;
    CHECK(equal_through(prod, series_one(prod.trunc_order()), prod.trunc_order()));
    CHECK(prod.trunc_order() >= 15);
  }

  // the rewrite denominator can vanish: (q^2;q)_{-2} needs (q^{-1};q)_2 = 0
  CHECK(thrown_kind([] { poch(QMonomial(1, 2), PochIndex::finite(-2), 10); }) ==
        Err::DivisionByZeroSeries);
  CHECK(!poch_order(QMonomial(1, 2), -2));
}

TEST_CASE("infinite products") {
  // Euler: (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2} over all integers k
  LaurentSeries e = poch(QMonomial(1, 1), PochIndex::inf(), 30);
  LaurentSeries want = series_zero(30);
  for (long long k = -5; k <= 5; ++k) {
    long long d = k * (3 * k - 1) / 2;
    if (d <= 30) want.set(d, want.coeff(d) + (k % 2 ? -1 : 1));
  }
  CHECK(equal_through(e, want, 30));

  // q-exponential check: (a;q)_inf = sum_k (-a)^k q^{k(k-1)/2} / (q;q)_k
  QMonomial a(2, 1);
  LaurentSeries lhs = poch(a, PochIndex::inf(), 20);
  LaurentSeries rhs = series_zero(20);
  for (long long k = 0; k * (k - 1) / 2 + k <= 20; ++k) {
    LaurentSeries term = series_inv(poch(QMonomial(1, 1), PochIndex::finite(k), 26));
    term = term.scaled(rat_pow(Rational(-2), k)).shifted(k * (k - 1) / 2 + k);
    rhs = rhs + term.truncated(20);
  }
  CHECK(equal_through(lhs, rhs, 20));

  // base above the truncation: empty product
  CHECK(poch(QMonomial(5, 31), PochIndex::inf(), 30).is_monomial(QMonomial(1, 0)));
  // zero base: empty product
  CHECK(poch(QMonomial(), PochIndex::inf(), 10).is_monomial(QMonomial(1, 0)));
}

TEST_CASE("infinite product with negative-order base") {
  // (q^{-1}/2; q)_inf has exactly one negative-order factor
  LaurentSeries s = poch(QMonomial(Rational(1, 2), -1), PochIndex::inf(), 15);
  CHECK(s.trunc_order() >= 15);
  CHECK(s.min_order() == -1);
  // against (1 - q^{-1}/2) * (q/2 shifted tail)
  LaurentSeries head = series_one(16);
  head.set(-1, Rational(-1, 2));
  LaurentSeries tail = poch(QMonomial(Rational(1, 2), 0), PochIndex::inf(), 16);
  CHECK(equal_through(s, head * tail, 15));
}

TEST_CASE("identically zero infinite products are rejected") {
  CHECK(thrown_kind([] { poch(QMonomial(1, -2), PochIndex::inf(), 10); }) ==
        Err::PochInfiniteZero);
  CHECK(thrown_kind([] { poch(QMonomial(1, 0), PochIndex::inf(), 10); }) ==
        Err::PochInfiniteZero);
  CHECK(thrown_kind([] { poch(QMonomial(1, -2), PochIndex::inf(), 10, 2); }) ==
        Err::PochInfiniteZero);
  // (q^{-1}; q^2)_inf misses the vanishing factor
  LaurentSeries ok = poch(QMonomial(1, -1), PochIndex::inf(), 10, 2);
  CHECK(ok.min_order() == -1);
  CHECK(thrown_kind([] { poch(QMonomial(2, 1), PochIndex::inf(), 10, 0); }) == Err::BadInput);
}

TEST_CASE("step parameter") {
  // (3q; q^2)_2 = (1 - 3q)(1 - 3q^3) = 1 - 3q - 3q^3 + 9q^4
  LaurentSeries s = poch(QMonomial(3, 1), PochIndex::finite(2), 10, 2);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == -3);
  CHECK(s.coeff(2) == 0);
  CHECK(s.coeff(3) == -3);
  CHECK(s.coeff(4) == 9);
  CHECK(s.coeff(5) == 0);

  // descending base: (2q^2; q^{-1})_3 = (1-2q^2)(1-2q)(1-2) = -1 + 2q + 2q^2 - 4q^3
  LaurentSeries d = poch(QMonomial(2, 2), PochIndex::finite(3), 10, -1);
  CHECK(d.coeff(0) == -1);
  CHECK(d.coeff(1) == 2);
  CHECK(d.coeff(2) == 2);
  CHECK(d.coeff(3) == -4);
  CHECK(d.coeff(4) == 0);
  CHECK(d.trunc_order() >= 10);

  // base-q^2 infinite product against the odd/even split (a;q)_inf = (a;q^2)_inf (aq;q^2)_inf
  QMonomial a(Rational(2, 3), 0);
  LaurentSeries all = poch(a, PochIndex::inf(), 18);
  LaurentSeries split = poch(a, PochIndex::inf(), 18, 2) *
                        poch(QMonomial(Rational(2, 3), 1), PochIndex::inf(), 18, 2);
  CHECK(equal_through(all, split, std::min(all.trunc_order(), split.trunc_order())));
}

TEST_CASE("gaussian binomials") {
  LaurentSeries b31 = qbinom(3, 1, 10);
  CHECK(b31.coeff(0) == 1);
  CHECK(b31.coeff(1) == 1);
  CHECK(b31.coeff(2) == 1);
  CHECK(b31.coeff(3) == 0);

  LaurentSeries b42 = qbinom(4, 2, 10);
  const Rational want[] = {1, 1, 2, 1, 1, 0};
  for (long long e = 0; e < 6; ++e) CHECK(b42.coeff(e) == want[e]);

  CHECK(qbinom(3, 5, 10).is_zero());
  CHECK(qbinom(3, -1, 10).is_zero());
  CHECK(qbinom(5, 0, 10).is_monomial(QMonomial(1, 0)));

  // symmetry [7 3] = [7 4]
  CHECK(equal_through(qbinom(7, 3, 10), qbinom(7, 4, 10), 12));

  // Pascal: [n k] = [n-1 k] + q^{n-k} [n-1 k-1]
  for (long long n = 1; n <= 8; ++n)
    for (long long k = 0; k <= n; ++k) {
      LaurentSeries lhs = qbinom(n, k, 10);
      LaurentSeries rhs = qbinom(n - 1, k, 10) + qbinom(n - 1, k - 1, 10).shifted(n - k);
      CHECK(equal_through(lhs, rhs, std::min(lhs.trunc_order(), rhs.trunc_order())));
    }

  // q -> 1 collapse: coefficient sum equals the ordinary binomial
  LaurentSeries b62 = qbinom(6, 2, 10);
  Rational sum(0);
  for (const auto& [e, v] : b62.coeffs()) sum += v;
  CHECK(sum == 15);
}

TEST_CASE("scaled limit of a diverging-argument product") {
  // lim_{t->0} (u/t;q)_k t^k = (-u)^k q^{k(k-1)/2}
  LaurentSeries u = make_monomial(-3, 1, 20);  // u = -3q
  LaurentSeries lim = poch_scaled_limit(u, 2);
  CHECK(lim.is_monomial(QMonomial(9, 3)));
  CHECK(poch_scaled_limit(u, 0).is_monomial(QMonomial(1, 0)));

  // realize t = q^30 exactly and compare through the window
  for (long long k : {1, 2, 3}) {
    LaurentSeries realized =
        poch(QMonomial(-3, 1 - 30), PochIndex::finite(k), 20).shifted(30 * k);
    CHECK(equal_through(poch_scaled_limit(u, k), realized, 20));
  }
  CHECK(thrown_kind([&] { poch_scaled_limit(u, -1); }) == Err::BadInput);
}

TEST_CASE("order prediction matches built series") {
  const QMonomial bases[] = {QMonomial(2, -2), QMonomial(Rational(1, 2), 1), QMonomial(-3, 0),
                             QMonomial(1, 2), QMonomial(Rational(-2, 3), -1)};
  for (const auto& a : bases)
    for (long long n = -3; n <= 4; ++n) {
      auto ord = poch_order(a, n);
      if (!ord) {
        if (n >= 0)
          CHECK(poch(a, PochIndex::finite(n), 15).is_zero());
        else
          CHECK(thrown_kind([&] { poch(a, PochIndex::finite(n), 15); }) ==
                Err::DivisionByZeroSeries);
        continue;
      }
      CHECK(poch(a, PochIndex::finite(n), 15).min_order() == *ord);
    }
  CHECK(poch_order(QMonomial(2, -3), 5) == -6);
  CHECK(!poch_order(QMonomial(1, -3), 5));
}

TEST_CASE("multi-base product") {
  std::vector<QMonomial> bases = {QMonomial(2, 1), QMonomial(-1, 2)};
  LaurentSeries m = poch_multi(bases, PochIndex::inf(), 15);
  LaurentSeries direct =
      poch(bases[0], PochIndex::inf(), 15) * poch(bases[1], PochIndex::inf(), 15);
  CHECK(equal_through(m, direct, 15));
}

TEST_CASE("series-valued base") {
  // a = q + q^2: (a;q)_2 = (1-q-q^2)(1-q^2-q^3) = 1 - q - 2q^2 + 2q^4 + q^5
  LaurentSeries a(12);
  a.set(1, Rational(1));
  a.set(2, Rational(1));
  LaurentSeries p = poch(a, PochIndex::finite(2), 12);
  const Rational want[] = {1, -1, -2, 0, 2, 1, 0};
  for (long long e = 0; e < 7; ++e) CHECK(p.coeff(e) == want[e]);

  // infinite product with a genuine series base, against incremental peeling:
  // (a;q)_inf = (1-a)(aq;q)_inf
  LaurentSeries whole = poch(a, PochIndex::inf(), 10);
  LaurentSeries peeled = (series_one(12) - a) * poch(a.shifted(1), PochIndex::inf(), 10);
  CHECK(equal_through(whole, peeled, std::min(whole.trunc_order(), peeled.trunc_order())));

  // monomial-shaped series delegate to the exact path
  LaurentSeries mono = make_monomial(2, 1, 40);
  CHECK(equal_through(poch(mono, PochIndex::inf(), 20), poch(QMonomial(2, 1), PochIndex::inf(), 20),
                      20));
}
