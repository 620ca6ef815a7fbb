#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qiv/laurent.hpp"

namespace qiv {

// Monomial-valued parameter slots.
enum class Slot : int { a, b, c, d, e, x, y, z, w };
inline constexpr int kSlotCount = 9;

// Integer-valued slots (finite-sum bounds, termination degrees).
enum class IntSlot : int { r, s, m, n };
inline constexpr int kIntSlotCount = 4;

const char* slot_name(Slot s);
const char* int_slot_name(IntSlot s);
std::optional<Slot> slot_from_name(std::string_view name);
std::optional<IntSlot> int_slot_from_name(std::string_view name);

// A binding of values to slots.  Only the slots an identity declares are set.
struct Assignment {
  std::array<std::optional<QMonomial>, kSlotCount> mono;
  std::array<std::optional<long long>, kIntSlotCount> ints;

  Assignment& set(Slot s, const QMonomial& v) {
    mono[static_cast<int>(s)] = v;
    return *this;
  }
  Assignment& set(IntSlot s, long long v) {
    ints[static_cast<int>(s)] = v;
    return *this;
  }
  bool has(Slot s) const { return mono[static_cast<int>(s)].has_value(); }
  bool has(IntSlot s) const { return ints[static_cast<int>(s)].has_value(); }
  const QMonomial& get(Slot s) const;  // BadInput when unset
  long long get(IntSlot s) const;

  std::string str() const;  // "a=2*q^1, b=-1/3*q^0, r=4"
};

/*
 * Laurent monomial in q and the parameter slots:
 *
 *     coeff * q^qexp * prod_s slot_s^{pw[s]}
 *
 * Closed under multiplication, division and integer powers, which is all the
 * catalog needs; evaluation under an Assignment of monomials yields a
 * QMonomial again.
 */
struct ParamExpr {
  Rational coeff{1};
  long long qexp = 0;
  std::array<int, kSlotCount> pw{};

  static ParamExpr constant(const Rational& r) {
    ParamExpr p;
    p.coeff = r;
    return p;
  }
  static ParamExpr q(long long e = 1) {
    ParamExpr p;
    p.qexp = e;
    return p;
  }
  static ParamExpr slot(Slot s, int power = 1) {
    ParamExpr p;
    p.pw[static_cast<int>(s)] = power;
    return p;
  }

  bool is_zero() const { return coeff == 0; }

  ParamExpr operator*(const ParamExpr& o) const;
  ParamExpr operator/(const ParamExpr& o) const;
  ParamExpr operator-() const {
    ParamExpr p = *this;
    p.coeff = -p.coeff;
    return p;
  }
  ParamExpr pow(int e) const;

  QMonomial eval(const Assignment& asg) const;

  std::string str() const;
};

ParamExpr operator*(const Rational& r, const ParamExpr& p);

}  // namespace qiv
