#pragma once

// Central charges Z_{b,w}(r, d, n) = (-n + w r) + i (d - b r) on the tilted
// heart, with exact slope classification and comparison. No angles and no
// floating point: slopes are nu = -Re/Im, and Im = 0 classes are tagged.

#include <optional>
#include <string>

#include "cohstab/brillnoether.hpp"
#include "cohstab/klattice.hpp"
#include "cohstab/rational.hpp"

namespace cohstab {

/// A point (b, w) of the parameter plane. Admissibility is a separate
/// predicate: the boundary point (3, 2) is used deliberately.
struct ChargeParams {
  Rational b;
  Rational w;
};

struct ChargeValue {
  Rational re;
  Rational im;

  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

ChargeValue central_charge(const ClassVector& v, const ChargeParams& p);

/// Slope of a class in the tilted heart.
///  - finite:   Im > 0, value = -Re/Im
///  - infinite: Im = 0, Re < 0 (phase one)
///  - kernel:   Z = 0; only occurs at weak parameters, never merged with
///              infinite
///  - invalid:  Im < 0, or Im = 0 and Re > 0; no object of the heart has it
struct HeartSlope {
  enum class Kind { finite, infinite, kernel, invalid };
  Kind kind = Kind::invalid;
  Rational value;  // meaningful only for finite

  bool comparable() const { return kind == Kind::finite || kind == Kind::infinite; }
  friend bool operator==(const HeartSlope&, const HeartSlope&) = default;
};

HeartSlope heart_slope(const ClassVector& v, const ChargeParams& p);
HeartSlope classify_charge(const ChargeValue& z);

/// "finite:p/q" | "inf" | "kernel" | "invalid"
std::string to_string(const HeartSlope& s);

enum class SlopeOrder { less, equal, greater, incomparable };

std::string to_string(SlopeOrder o);

/// Orders v1 against v2 by heart slope, +inf maximal. Finite slopes are
/// compared by cross-multiplication against the positive imaginary parts.
/// Either side kernel or invalid gives `incomparable`.
SlopeOrder compare_slopes(const ClassVector& v1, const ClassVector& v2, const ChargeParams& p);

/// Classical slope deg/rk of a coherent system; nullopt stands for +inf
/// (rank zero). Negative rank throws std::invalid_argument.
std::optional<Rational> mu_slope(std::int64_t r, std::int64_t d);

/// w > bound(b). Sufficient for the stability region because the bound
/// dominates the Brill-Noether function.
bool is_admissible(const ChargeParams& p, const PiecewiseBound& bound);

}  // namespace cohstab
