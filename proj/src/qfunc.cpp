#include "qiv/qfunc.hpp"

#include <algorithm>
#include <cstdlib>

namespace qiv {

namespace {

// 1 - c*q^e, exact through N.
LaurentSeries binomial_factor(const Rational& c, long long e, long long N) {
  LaurentSeries f = series_one(N);
  if (c != 0 && e <= N) f.set(e, f.coeff(e) - c);
  return f;
}

/*
 * prod_{k=0}^{count-1} (1 - c q^{e + step k}), guaranteed through N.
 *
 * Factors with a negative exponent drag the truncation of a product down by
 * that exponent, so the working order pads by the total negative mass of the
 * factor list up front and the final truncation lands back on N.
 */
LaurentSeries mono_product(const QMonomial& a, long long count, long long N, long long step) {
  long long pad = 0;
  for (long long k = 0; k < count; ++k) {
    const long long e = a.exp + step * k;
    if (e < 0)
      pad -= e;
    else if (step > 0)
      break;
  }
  const long long W = N + pad;
  LaurentSeries acc = series_one(W);
  for (long long k = 0; k < count; ++k)
    acc = series_mul(acc, binomial_factor(a.coeff, a.exp + step * k, W));
  return acc.truncated(std::min(N, acc.trunc_order()));
}

}  // namespace

LaurentSeries poch(const QMonomial& a, PochIndex idx, long long N, long long step) {
  if (!idx.infinite && idx.n >= 0) return mono_product(a, idx.n, N, step);

  if (!idx.infinite) {
    // (a;Q)_{-m} = (-Q/a)^m Q^{m(m-1)/2} / (Q/a;Q)_m  with Q = q^step.
    const long long m = -idx.n;
    if (a.is_zero()) raise(Err::DivisionByZeroSeries, "negative Pochhammer index with zero base");
    const QMonomial qa(Rational(1) / a.coeff, step - a.exp);
    const auto dord = poch_order(qa, m, step);
    if (!dord)
      raise(Err::DivisionByZeroSeries,
            "negative-index Pochhammer rewrite " + a.str() + " has a vanishing denominator");
    const QMonomial scale =
        QMonomial(-qa.coeff, qa.exp).pow(m) * QMonomial(1, step * (m * (m - 1) / 2));
    // inv() costs twice the denominator's leading order; budget so the final
    // product still reaches N.
    const long long Nden = std::max(N, N + 2 * -*dord + std::max(0LL, -scale.exp));
    const LaurentSeries inv_den = series_inv(mono_product(qa, m, Nden, step));
    return series_mul(LaurentSeries(scale, inv_den.trunc_order() + std::llabs(scale.exp)), inv_den)
        .truncated(std::min(N, inv_den.trunc_order() + scale.exp));
  }

  if (step < 1) raise(Err::BadInput, "infinite Pochhammer requires step >= 1");
  if (a.is_zero()) return series_one(N);
  if (a.coeff == 1 && a.exp <= 0 && (-a.exp) % step == 0)
    raise(Err::PochInfiniteZero,
          "infinite product (" + a.str() + "; q^" + std::to_string(step) + ") is identically zero");
  // The product's own order is -pad, so factors up to exponent N + pad still
  // touch coefficients <= N; everything beyond is 1 + O(q^{N+1}) against a
  // series of order >= -pad.
  long long pad = 0;
  for (long long k = 0; a.exp + step * k < 0; ++k) pad -= a.exp + step * k;
  long long count = 0;
  while (a.exp + step * count <= N + pad) ++count;
  return mono_product(a, count, N, step);
}

LaurentSeries poch(const LaurentSeries& a, PochIndex idx, long long N, long long step) {
  if (const auto lead = a.leading(); lead && a.is_monomial(*lead))
    return poch(*lead, idx, N, step).truncated(std::min(N, a.trunc_order()));

  if (!idx.infinite && idx.n >= 0) {
    LaurentSeries acc = series_one(a.trunc_order());
    for (long long k = 0; k < idx.n; ++k)
      acc = series_mul(acc,
                       series_sub(series_one(a.trunc_order() + step * k), a.shifted(step * k)));
    return acc;
  }

  if (!idx.infinite) {
    const long long m = -idx.n;
    const LaurentSeries qa = series_inv(a).shifted(step);  // Q/a
    LaurentSeries den = series_one(qa.trunc_order());
    for (long long k = 0; k < m; ++k)
      den = series_mul(den,
                       series_sub(series_one(qa.trunc_order() + step * k), qa.shifted(step * k)));
    if (den.is_zero())
      raise(Err::DivisionByZeroSeries, "negative-index Pochhammer hit a vanishing factor");
    const LaurentSeries num = series_pow(series_neg(qa), m).shifted(step * (m * (m - 1) / 2));
    return series_div(num, den);
  }

  if (step < 1) raise(Err::BadInput, "infinite Pochhammer requires step >= 1");
  if (a.is_zero()) return series_one(a.trunc_order());
  long long pad = 0;
  for (long long k = 0; a.min_order() + step * k < 0; ++k) pad -= a.min_order() + step * k;
  LaurentSeries acc = series_one(std::max(N + pad, a.trunc_order()));
  for (long long k = 0; a.min_order() + step * k <= N + pad; ++k) {
    const LaurentSeries f =
        series_sub(series_one(a.trunc_order() + step * k), a.shifted(step * k));
    if (f.is_zero()) raise(Err::PochInfiniteZero, "infinite product is identically zero");
    acc = series_mul(acc, f);
  }
  return acc;
}

LaurentSeries poch_multi(const std::vector<QMonomial>& bases, PochIndex idx, long long N,
                         long long step) {
  LaurentSeries acc = series_one(N);
  for (const auto& b : bases) acc = series_mul(acc, poch(b, idx, N, step)).truncated(N);
  return acc;
}

LaurentSeries qbinom(long long n, long long k, long long N) {
  if (k < 0 || k > n) return series_zero(N);
  // Work at the numerator's natural degree; the quotient is a polynomial of
  // degree k(n-k), so everything above it is known to vanish.
  const long long D = std::max(N, n * (n + 1) / 2);
  const QMonomial qm(1, 1);
  const LaurentSeries num = poch(qm, PochIndex::finite(n), D);
  const LaurentSeries den =
      series_mul(poch(qm, PochIndex::finite(k), D), poch(qm, PochIndex::finite(n - k), D));
  return series_div(num, den);
}

LaurentSeries poch_scaled_limit(const LaurentSeries& u, long long k) {
  if (k < 0) raise(Err::BadInput, "poch_scaled_limit needs k >= 0");
  return series_pow(series_neg(u), k).shifted(k * (k - 1) / 2);
}

std::optional<long long> poch_order(const QMonomial& a, long long n, long long step) {
  if (n >= 0) {
    if (a.is_zero()) return 0;
    long long ord = 0;
    for (long long k = 0; k < n; ++k) {
      const long long e = a.exp + step * k;
      if (e < 0) {
        ord += e;
      } else if (e == 0) {
        if (a.coeff == 1) return std::nullopt;  // a factor vanishes: zero product
      } else if (step > 0) {
        break;  // all later factors start at a positive exponent
      }
    }
    return ord;
  }
  const long long m = -n;
  if (a.is_zero()) return std::nullopt;
  const QMonomial qa(Rational(1) / a.coeff, step - a.exp);
  const auto d = poch_order(qa, m, step);
  if (!d) return std::nullopt;  // rewrite denominator vanishes: the value is infinite
  return m * qa.exp + step * (m * (m - 1) / 2) - *d;
}

}  // namespace qiv
