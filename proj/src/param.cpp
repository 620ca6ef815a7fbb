#include "qiv/param.hpp"

#include <sstream>

namespace qiv {

namespace {
const char* kSlotNames[kSlotCount] = {"a", "b", "c", "d", "e", "x", "y", "z", "w"};
const char* kIntSlotNames[kIntSlotCount] = {"r", "s", "m", "n"};
}  // namespace

const char* slot_name(Slot s) { return kSlotNames[static_cast<int>(s)]; }
const char* int_slot_name(IntSlot s) { return kIntSlotNames[static_cast<int>(s)]; }

std::optional<Slot> slot_from_name(std::string_view name) {
  for (int i = 0; i < kSlotCount; ++i)
    if (name == kSlotNames[i]) return static_cast<Slot>(i);
  return std::nullopt;
}

std::optional<IntSlot> int_slot_from_name(std::string_view name) {
  for (int i = 0; i < kIntSlotCount; ++i)
    if (name == kIntSlotNames[i]) return static_cast<IntSlot>(i);
  return std::nullopt;
}

const QMonomial& Assignment::get(Slot s) const {
  const auto& v = mono[static_cast<int>(s)];
  if (!v) raise(Err::BadInput, std::string("parameter slot '") + slot_name(s) + "' is unset");
  return *v;
}

long long Assignment::get(IntSlot s) const {
  const auto& v = ints[static_cast<int>(s)];
  if (!v) raise(Err::BadInput, std::string("integer slot '") + int_slot_name(s) + "' is unset");
  return *v;
}

std::string Assignment::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kSlotCount; ++i)
    if (mono[i]) {
      os << (first ? "" : ", ") << kSlotNames[i] << "=" << mono[i]->str();
      first = false;
    }
  for (int i = 0; i < kIntSlotCount; ++i)
    if (ints[i]) {
      os << (first ? "" : ", ") << kIntSlotNames[i] << "=" << *ints[i];
      first = false;
    }
  return os.str();
}

ParamExpr ParamExpr::operator*(const ParamExpr& o) const {
  if (is_zero() || o.is_zero()) return constant(0);
  ParamExpr r;
  r.coeff = coeff * o.coeff;
  r.qexp = qexp + o.qexp;
  for (int i = 0; i < kSlotCount; ++i) r.pw[i] = pw[i] + o.pw[i];
  return r;
}

ParamExpr ParamExpr::operator/(const ParamExpr& o) const {
  if (o.is_zero()) raise(Err::DivisionByZeroSeries, "parameter expression divided by zero");
  if (is_zero()) return constant(0);
  ParamExpr r;
  r.coeff = coeff / o.coeff;
  r.qexp = qexp - o.qexp;
  for (int i = 0; i < kSlotCount; ++i) r.pw[i] = pw[i] - o.pw[i];
  return r;
}

ParamExpr ParamExpr::pow(int e) const {
  if (e == 0) return constant(1);
  if (is_zero()) {
    if (e < 0) raise(Err::DivisionByZeroSeries, "zero parameter expression to a negative power");
    return constant(0);
  }
  ParamExpr r;
  r.coeff = rat_pow(coeff, e);
  r.qexp = qexp * e;
  for (int i = 0; i < kSlotCount; ++i) r.pw[i] = pw[i] * e;
  return r;
}

QMonomial ParamExpr::eval(const Assignment& asg) const {
  if (is_zero()) return QMonomial();
  Rational c = coeff;
  long long e = qexp;
  for (int i = 0; i < kSlotCount; ++i) {
    if (pw[i] == 0) continue;
    const QMonomial& v = asg.get(static_cast<Slot>(i));
    if (v.is_zero()) {
      if (pw[i] < 0)
        raise(Err::DivisionByZeroSeries,
              std::string("parameter expression divides by zero slot '") + kSlotNames[i] + "'");
      return QMonomial();
    }
    c *= rat_pow(v.coeff, pw[i]);
    e += v.exp * pw[i];
  }
  return QMonomial(c, e);
}

std::string ParamExpr::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool printed = false;
  if (coeff != 1) {
    os << rat_str(coeff);
    printed = true;
  }
  if (qexp != 0) {
    os << (printed ? "*" : "") << "q" << (qexp == 1 ? "" : "^" + std::to_string(qexp));
    printed = true;
  }
  for (int i = 0; i < kSlotCount; ++i) {
    if (pw[i] == 0) continue;
    os << (printed ? "*" : "") << kSlotNames[i];
    if (pw[i] != 1) os << "^" << pw[i];
    printed = true;
  }
  if (!printed) os << "1";
  return os.str();
}

ParamExpr operator*(const Rational& r, const ParamExpr& p) { return ParamExpr::constant(r) * p; }

}  // namespace qiv
