#pragma once

// Numerical walls along a vertical ray b = const. Slope equality between a
// class and a candidate subclass is linear in w, so every wall is a single
// rational w. Everything here is a numerical candidate: whether a wall is
// realized by actual objects is outside what class-level data can decide.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohstab/charge.hpp"
#include "cohstab/klattice.hpp"
#include "cohstab/rational.hpp"
#include "cohstab/support.hpp"

namespace cohstab {

/// Search window for candidate destabilizers. Walls are reported on the
/// closed range [w_min, w_max]; a wall sitting exactly on an end is flagged
/// as a boundary wall.
struct SearchBounds {
  std::int64_t r_max = 3;     // |r'| <= r_max
  std::int64_t n_window = 3;  // slack on |n'| beyond the support-form range
  Rational w_min = Rational(2);
  Rational w_max = Rational(10);

  /// Throws std::invalid_argument unless w_min < w_max and both caps >= 0.
  void validate() const;
};

/// All v' = (r', d', n') with
///   |r'| <= r_max,  0 <= Im(v') <= Im(v)  (Im = d - b r),  v' not in {0, v},
///   Q(v') >= 0 when Im(v') > 0,  Q(v - v') >= 0 when Im(v - v') > 0,
/// and n' inside the support-form range widened by n_window (see below).
/// The form is only imposed on parts of positive imaginary part, as only
/// those are constrained by the support inequality.
///
/// Each form inequality is linear in n'. Let K be the largest of |e| and
/// |n - e| over the finite ends e of the resulting range (0 if there are
/// none); n' must then satisfy |n'| <= K + n_window or |n - n'| <= K + n_window.
/// The window is symmetric under v' -> v - v', so the output is closed under
/// passing to the quotient whenever the quotient's rank is within r_max.
///
/// Output is lexicographic in (r', d', n'). Throws PreconditionError when
/// Im(v) <= 0 at b.
std::vector<ClassVector> enumerate_candidates(const ClassVector& v, const Rational& b,
                                              const QuadFormParams& q, const SearchBounds& sb);

/// The w at which v and v2 have equal Z_{b,w}-slope:
///   (-n2 + w r2) Im(v) = (-n + w r) Im(v2).
/// nullopt when the slopes never meet. Throws PreconditionError unless
/// Im(v) > 0, Im(v2) >= 0 and the classes are not proportional.
std::optional<Rational> wall_locus(const ClassVector& v, const ClassVector& v2, const Rational& b);

struct WallReport {
  enum class Kind { finite_wall, phase1_family, kernel_boundary };
  /// Which part of 0 -> v' -> v -> v - v' -> 0 has zero imaginary part.
  enum class FlatSide { none, sub, quotient };

  ClassVector destabilizer;
  std::optional<Rational> wall_w;  // set iff kind == finite_wall
  Kind kind = Kind::finite_wall;
  FlatSide flat_side = FlatSide::none;
  /// finite_wall only: w_min or w_max.
  bool on_boundary = false;
  /// finite_wall only: the wall is not admissible (w <= bound(b)), i.e. the
  /// charge is merely weak there and may vanish on heart classes.
  bool weak_point = false;
  /// kernel_boundary only: where the destabilizer's charge vanishes.
  std::optional<Rational> vanishes_at;
};

std::string to_string(WallReport::Kind k);
std::string to_string(WallReport::FlatSide s);

/// Discrete analogue of slope-gap persistence: at w = w_min, the smallest
/// positive slope gap nu(v) - nu(v') over finite-slope candidates below v,
/// and delta0 = gap / (r_max + 1). This only covers enumerated candidates,
/// not every subobject.
struct GapReport {
  Rational at_w;
  std::optional<Rational> min_gap;
  std::optional<Rational> delta0;
};

struct ChamberScan {
  ClassVector v;
  Rational b;
  SearchBounds bounds;
  /// Finite walls by ascending w, then kernel boundaries, then phase-one
  /// families; ties broken by destabilizer.
  std::vector<WallReport> reports;
  GapReport gap;
  std::size_t candidates_examined = 0;

  std::vector<WallReport> of_kind(WallReport::Kind k) const;
  /// Finite walls with w_min < w < w_max.
  std::vector<WallReport> interior_walls() const;
};

/// Walks the ray {b} x [w_min, w_max]. For each candidate v' with quotient
/// u = v - v':
///  - Im(v'), Im(u) > 0: a finite wall where the slopes agree, if in range.
///  - Im(v') = 0: a phase-one family when Re Z(v') < 0 somewhere in range (it
///    outranks every finite slope there); a kernel boundary when Re Z(v') >= 0
///    on the range but vanishes at an end; dropped otherwise.
///  - Im(u) = 0: slopes agree only where Z(u) = 0. That is a finite wall when
///    it happens in range at a weak (non-admissible) point and u is of phase
///    one elsewhere in range; otherwise the candidate is a phase-one family.
/// Results are deduplicated by wall and primitive destabilizer direction.
ChamberScan chamber_scan(const ClassVector& v, const Rational& b, const QuadFormParams& q,
                         const SearchBounds& sb);

/// Caps on the parts of a numerical Harder-Narasimhan decomposition.
struct HnBounds {
  std::int64_t rank_cap = 1;
  std::int64_t n_cap = 3;
};

/// rank_cap = |r| + ceil(Im(v)), n_cap = |n| + 3.
HnBounds default_hn_bounds(const ClassVector& v, const ChargeParams& p);

using Decomposition = std::vector<ClassVector>;

/// Ordered tuples (v1, ..., vk), 2 <= k <= max_parts, summing to v, each part
/// nonzero with finite or infinite heart slope, slopes strictly decreasing,
/// Q(vi) >= 0, |ri| <= rank_cap, |ni| <= n_cap. Empty means v has no
/// numerical splitting within the caps. Throws std::invalid_argument when
/// max_parts < 2 or v = 0.
std::vector<Decomposition> hn_candidates(const ClassVector& v, const ChargeParams& p,
                                         const QuadFormParams& q, int max_parts,
                                         std::optional<HnBounds> caps = std::nullopt);

/// Destabilizer arithmetic for the rank-two class (-1, -2, -1): for a
/// quotient sheaf of rank r+1 and degree d+2 sitting below slope 3 while the
/// rank-r, degree-d piece sits above it.
struct ModuliRow {
  std::int64_t r = 0;
  std::vector<std::int64_t> solutions;  // d with (d+2)/(r+1) <= 3 < d/r
  /// The quotient sheaf has slope exactly 3 for every solution, so the
  /// quotient has zero imaginary part at b = 3 (phase one) and the sequence
  /// does not destabilize.
  bool quotient_flat = false;
  bool ok = false;  // solutions == {3r + 1} and quotient_flat
};

struct ModuliReport {
  std::vector<ModuliRow> rows;
  std::vector<std::int64_t> counterexamples;  // ranks r with !ok

  bool passed() const { return counterexamples.empty(); }
};

/// Checks 1 <= r <= r_max by exact rational comparison over a window that
/// contains every integer solution of each inequality's neighbourhood.
/// Throws std::invalid_argument when r_max < 1.
ModuliReport verify_moduli_arithmetic(std::int64_t r_max);

}  // namespace cohstab
