#pragma once

#include <vector>

#include "qiv/laurent.hpp"

namespace qiv {

// Index of a q-Pochhammer product: a finite integer (either sign) or infinity.
struct PochIndex {
  bool infinite = false;
  long long n = 0;

  static PochIndex finite(long long k) { return PochIndex{false, k}; }
  static PochIndex inf() { return PochIndex{true, 0}; }
};

// (a; q^step)_idx truncated at order N.
//
//   idx = n >= 0:  prod_{k=0}^{n-1} (1 - a q^{step k})
//   idx = -n < 0:  (-Q/a)^n Q^{n(n-1)/2} / (Q/a; Q)_n  with Q = q^step
//   idx = inf:     the product truncated at the first K with every further
//                  factor equal to 1 + O(q^{N+1}); requires step >= 1.
//
// A base of negative q-order only contributes finitely many negative-order
// factors, so the infinite product stays representable.  PochInfiniteZero is
// raised when some factor of an infinite product vanishes identically
// (a = q^{-step*k}); DivisionByZeroSeries when a negative index divides by a
// vanishing product.
LaurentSeries poch(const LaurentSeries& a, PochIndex idx, long long N, long long step = 1);

// Convenience for monomial bases.
LaurentSeries poch(const QMonomial& a, PochIndex idx, long long N, long long step = 1);

// prod_i (a_i; q^step)_idx, shared index.
LaurentSeries poch_multi(const std::vector<QMonomial>& bases, PochIndex idx, long long N,
                         long long step = 1);

// Gaussian binomial [n over k]_q as an exact polynomial, guaranteed through
// at least max(N, k(n-k)); zero when k < 0 or k > n.
LaurentSeries qbinom(long long n, long long k, long long N);

// lim_{t->0} (u/t; q)_k * t^k = (-u)^k q^{k(k-1)/2}, k >= 0.
LaurentSeries poch_scaled_limit(const LaurentSeries& u, long long k);

// q-order of (a;q^step)_n for a monomial base, computed without building the
// series; nullopt when the product vanishes identically (a = q^{-step j} hit).
// For n < 0 the Eq-(2.2)-style rewrite order is returned; infinite products
// never have negative index here.
std::optional<long long> poch_order(const QMonomial& a, long long n, long long step = 1);

}  // namespace qiv
