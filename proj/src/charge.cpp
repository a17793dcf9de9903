#include "cohstab/charge.hpp"

#include <stdexcept>

namespace cohstab {

ChargeValue central_charge(const ClassVector& v, const ChargeParams& p) {
  return {Rational(-v.n) + p.w * v.r, Rational(v.d) - p.b * v.r};
}

HeartSlope classify_charge(const ChargeValue& z) {
  using Kind = HeartSlope::Kind;
  if (z.im > 0) return {Kind::finite, -z.re / z.im};
  if (z.im < 0) return {Kind::invalid, Rational(0)};
  if (z.re < 0) return {Kind::infinite, Rational(0)};
  if (z.re == 0) return {Kind::kernel, Rational(0)};
  return {Kind::invalid, Rational(0)};
}

HeartSlope heart_slope(const ClassVector& v, const ChargeParams& p) {
  return classify_charge(central_charge(v, p));
}

std::string to_string(const HeartSlope& s) {
  switch (s.kind) {
    case HeartSlope::Kind::finite:
      return "finite:" + to_string(s.value);
    case HeartSlope::Kind::infinite:
      return "inf";
    case HeartSlope::Kind::kernel:
      return "kernel";
    case HeartSlope::Kind::invalid:
      break;
  }
  return "invalid";
}

std::string to_string(SlopeOrder o) {
  switch (o) {
    case SlopeOrder::less:
      return "less";
    case SlopeOrder::equal:
      return "equal";
    case SlopeOrder::greater:
      return "greater";
    case SlopeOrder::incomparable:
      break;
  }
  return "incomparable";
}

SlopeOrder compare_slopes(const ClassVector& v1, const ClassVector& v2, const ChargeParams& p) {
  const ChargeValue z1 = central_charge(v1, p);
  const ChargeValue z2 = central_charge(v2, p);
  const HeartSlope s1 = classify_charge(z1);
  const HeartSlope s2 = classify_charge(z2);
  if (!s1.comparable() || !s2.comparable()) return SlopeOrder::incomparable;

  using Kind = HeartSlope::Kind;
  if (s1.kind == Kind::infinite || s2.kind == Kind::infinite) {
    if (s1.kind == s2.kind) return SlopeOrder::equal;
    return s1.kind == Kind::infinite ? SlopeOrder::greater : SlopeOrder::less;
  }
  // -re1/im1 vs -re2/im2 with im1, im2 > 0
  const Rational lhs = -z1.re * z2.im;
  const Rational rhs = -z2.re * z1.im;
  if (lhs < rhs) return SlopeOrder::less;
  if (lhs > rhs) return SlopeOrder::greater;
  return SlopeOrder::equal;
}

std::optional<Rational> mu_slope(std::int64_t r, std::int64_t d) {
  if (r < 0) throw std::invalid_argument("mu slope is undefined for negative rank");
  if (r == 0) return std::nullopt;
  return Rational(d, r);
}

bool is_admissible(const ChargeParams& p, const PiecewiseBound& bound) {
  return p.w > bound.evaluate(p.b);
}

}  // namespace cohstab
