#pragma once

// Exact piecewise-affine upper bounds for the Brill-Noether function of a
// curve, and exact comparison of such bounds against upward parabolas.
//
// Only bounds are represented. The true function needs higher-rank
// Brill-Noether data that no finite computation here has access to, so every
// consumer treats "w > bound(b)" as a sufficient condition.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cohstab/klattice.hpp"
#include "cohstab/rational.hpp"

namespace cohstab {

/// Interval of the real line with rational or infinite endpoints. An absent
/// endpoint means -inf (lo) or +inf (hi); infinite endpoints are always open.
struct Interval {
  std::optional<Rational> lo;
  bool lo_closed = false;
  std::optional<Rational> hi;
  bool hi_closed = false;

  bool contains(const Rational& x) const;
  /// True iff x lies in the topological closure.
  bool closure_contains(const Rational& x) const;
  /// Interval notation, e.g. "[2, 5/2)" or "(-inf, 0)".
  std::string str() const;
};

/// x -> slope * x + intercept on `domain`.
struct AffinePiece {
  Interval domain;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
};

/// Upper-semicontinuous piecewise-affine function on R with isolated point
/// overrides. Immutable once constructed; construction rejects gaps, overlaps
/// and breakpoints whose stored value lies below a one-sided limit.
class PiecewiseBound {
 public:
  PiecewiseBound(std::vector<AffinePiece> pieces, std::map<Rational, Rational> overrides = {});

  /// Exact value; override points take precedence over the surrounding piece.
  Rational evaluate(const Rational& x) const;
  Rational left_limit(const Rational& x) const;
  Rational right_limit(const Rational& x) const;

  /// Pieces sorted left to right.
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::map<Rational, Rational>& overrides() const { return overrides_; }
  /// Finite piece endpoints and override points, ascending, without repeats.
  std::vector<Rational> breakpoints() const;

 private:
  const AffinePiece& piece_at(const Rational& x) const;

  std::vector<AffinePiece> pieces_;
  std::map<Rational, Rational> overrides_;
};

/// Clifford-type bound valid on every curve of genus g:
/// 0 on (-inf, 0), x/2 + 1 on [0, 2g-2], x + 1 - g on (2g-2, inf).
PiecewiseBound general_bound(Genus g);

/// The refined bound for a general genus-4 curve. On [0, 3] it is
///
///   1                at x = 0
///   x/4 + 3/4        on (0, 2)
///   x/3 + 2/3        on [2, 5/2)
///   x/2 + 1/4        on [5/2, 3)
///   2                at x = 3
///
/// and (3, 6] is filled in by the Serre-duality reflection
/// B(x) = B(6 - x) + x - 3, which gives x/2 + 1/4 on (3, 7/2], 2x/3 - 1/3 on
/// (7/2, 4], 3x/4 - 3/4 on (4, 6) and the override 4 at x = 6. Outside [0, 6]
/// it is 0 on the left and x - 3 on the right.
///
/// The values at x = 2 and x = 5/2 follow the closed-open interval notation of
/// the source table literally; the table itself states nothing finer there.
PiecewiseBound genus4_bound();

/// The reflection p(x) -> p(2g-2-x) + x + 1 - g of a piece, with its domain
/// mirrored about g - 1 and endpoint closedness carried across.
AffinePiece reflect_by_duality(const AffinePiece& piece, Genus g);

/// y = s (x - b0)^2 + k, s > 0.
struct Parabola {
  Rational s;
  Rational b0;
  Rational k;

  Rational operator()(const Rational& x) const {
    const Rational dx = x - b0;
    return s * dx * dx + k;
  }
};

/// Infimum of parabola - bound over one region (a piece or an override point).
struct RegionGap {
  Interval region;  // degenerate [x, x] for an override point
  bool is_override = false;
  bool excluded = false;  // override point listed in the excluded set
  Rational infimum;
  Rational argmin;  // vertex or nearest endpoint where the infimum is reached
  bool attained = false;  // argmin lies in the region itself
};

struct DominanceResult {
  bool dominates = false;
  /// First violating point, left to right. Present iff !dominates.
  std::optional<Rational> witness;
  /// One entry per piece and per override, left to right; the audit trail.
  std::vector<RegionGap> gaps;
};

/// Decides exactly whether parabola(x) > bound(x) for every real x outside
/// `excluded`. Each piece is handled by locating the minimum of the quadratic
/// difference (vertex or endpoint); a rational witness is produced on failure.
/// Throws std::invalid_argument unless parabola.s > 0.
DominanceResult quadratic_dominates(const PiecewiseBound& bound, const Parabola& parabola,
                                    const std::set<Rational>& excluded = {});

struct PlotRow {
  Rational x;
  Rational bound;
  std::optional<Rational> overlay;
};

/// Samples x_min, x_min + step, ... up to x_max, plus every override point in
/// [x_min, x_max], ascending. Throws std::invalid_argument when step <= 0 or
/// x_min > x_max.
std::vector<PlotRow> emit_plot_data(const PiecewiseBound& bound, const Rational& x_min,
                                    const Rational& x_max, const Rational& step,
                                    const std::optional<Parabola>& overlay = std::nullopt);

}  // namespace cohstab
