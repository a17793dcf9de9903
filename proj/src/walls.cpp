#include "cohstab/walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cohstab {

void SearchBounds::validate() const {
  if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  if (n_window < 0) throw std::invalid_argument("n_window must be nonnegative");
  if (!(w_min < w_max)) throw std::invalid_argument("need w_min < w_max");
}

namespace {

Rational imaginary(const ClassVector& v, const Rational& b) { return Rational(v.d) - b * v.r; }

Rational real_at(const ClassVector& v, const Rational& w) { return Rational(-v.n) + w * v.r; }

/// s (d - b0 r)^2 + r^2 (w0 - t): the n-free part of Q.
Rational form_constant(std::int64_t r, std::int64_t d, const QuadFormParams& q) {
  const Rational shift = Rational(d) - q.b0() * r;
  const Rational rr(r);
  return q.s() * shift * shift + rr * rr * (q.w0() - q.t());
}

struct NRange {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  void at_least(const Rational& x) {
    if (!lo || x > *lo) lo = x;
  }
  void at_most(const Rational& x) {
    if (!hi || x < *hi) hi = x;
  }
};

std::vector<ClassVector> rank_slice(const ClassVector& v, const Rational& b, const QuadFormParams& q,
                                    const SearchBounds& sb, const Rational& im_v, std::int64_t rp) {
  std::vector<ClassVector> out;
  const std::int64_t d_lo = to_int64(ceil(b * rp));
  const std::int64_t d_hi = to_int64(floor(b * rp + im_v));
  for (std::int64_t dp = d_lo; dp <= d_hi; ++dp) {
    const Rational im_sub = Rational(dp) - b * rp;
    const Rational im_quot = im_v - im_sub;

    // Q(v') = A - n' r' >= 0 and Q(u) = Au - (n - n') ru >= 0, both linear in n'.
    NRange range;
    if (im_sub > 0) {
      const Rational a = form_constant(rp, dp, q);
      if (rp > 0) range.at_most(a / rp);
      if (rp < 0) range.at_least(a / rp);
    }
    const std::int64_t ru = v.r - rp;
    if (im_quot > 0) {
      const Rational au = form_constant(ru, v.d - dp, q);
      if (ru > 0) range.at_least(Rational(v.n) - au / ru);
      if (ru < 0) range.at_most(Rational(v.n) - au / ru);
    }

    std::optional<std::int64_t> lo, hi;
    if (range.lo) lo = to_int64(ceil(*range.lo));
    if (range.hi) hi = to_int64(floor(*range.hi));
    if (lo && hi && *lo > *hi) continue;

    std::int64_t k = 0;
    for (const auto& end : {lo, hi}) {
      if (end) k = std::max<std::int64_t>({k, std::llabs(*end), std::llabs(v.n - *end)});
    }
    const std::int64_t m = k + sb.n_window;
    std::int64_t n_first = std::min(-m, v.n - m);
    std::int64_t n_last = std::max(m, v.n + m);
    if (lo) n_first = std::max(n_first, *lo);
    if (hi) n_last = std::min(n_last, *hi);

    for (std::int64_t np = n_first; np <= n_last; ++np) {
      if (std::llabs(np) > m && std::llabs(v.n - np) > m) continue;
      const ClassVector cand{rp, dp, np};
      if (cand.is_zero() || cand == v) continue;
      out.push_back(cand);
    }
  }
  return out;
}

}  // namespace

std::vector<ClassVector> enumerate_candidates(const ClassVector& v, const Rational& b,
                                              const QuadFormParams& q, const SearchBounds& sb) {
  sb.validate();
  const Rational im_v = imaginary(v, b);
  if (im_v <= 0) {
    throw PreconditionError("nonpositive imaginary part: candidate enumeration needs Im Z(v) > 0 at b = " + to_string(b) +
                            ", got " + to_string(im_v));
  }

  std::vector<std::future<std::vector<ClassVector>>> slices;
  for (std::int64_t rp = -sb.r_max; rp <= sb.r_max; ++rp) {
    slices.push_back(std::async(std::launch::async, rank_slice, std::cref(v), std::cref(b),
                                std::cref(q), std::cref(sb), std::cref(im_v), rp));
  }
  std::vector<ClassVector> out;
  for (auto& f : slices) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<Rational> wall_locus(const ClassVector& v, const ClassVector& v2, const Rational& b) {
  const Rational im1 = imaginary(v, b);
  const Rational im2 = imaginary(v2, b);
  if (im1 <= 0) throw PreconditionError("wall_locus needs Im Z(v) > 0");
  if (im2 < 0) throw PreconditionError("wall_locus needs Im Z(v2) >= 0");
  if (proportional(v, v2)) throw PreconditionError("wall_locus needs non-proportional classes");

  // w (r2 im1 - r im2) = n2 im1 - n im2
  const Rational coeff = Rational(v2.r) * im1 - Rational(v.r) * im2;
  const Rational rhs = Rational(v2.n) * im1 - Rational(v.n) * im2;
  if (coeff == 0) return std::nullopt;
  return rhs / coeff;
}

std::string to_string(WallReport::Kind k) {
  switch (k) {
    case WallReport::Kind::finite_wall:
      return "finite_wall";
    case WallReport::Kind::phase1_family:
      return "phase1_family";
    case WallReport::Kind::kernel_boundary:
      break;
  }
  return "kernel_boundary";
}

std::string to_string(WallReport::FlatSide s) {
  switch (s) {
    case WallReport::FlatSide::sub:
      return "sub";
    case WallReport::FlatSide::quotient:
      return "quotient";
    case WallReport::FlatSide::none:
      break;
  }
  return "none";
}

std::vector<WallReport> ChamberScan::of_kind(WallReport::Kind k) const {
  std::vector<WallReport> out;
  std::copy_if(reports.begin(), reports.end(), std::back_inserter(out),
               [k](const WallReport& r) { return r.kind == k; });
  return out;
}

std::vector<WallReport> ChamberScan::interior_walls() const {
  std::vector<WallReport> out;
  for (const auto& r : of_kind(WallReport::Kind::finite_wall)) {
    if (*r.wall_w > bounds.w_min && *r.wall_w < bounds.w_max) out.push_back(r);
  }
  return out;
}

namespace {

bool in_range(const Rational& w, const SearchBounds& sb) { return w >= sb.w_min && w <= sb.w_max; }

int kind_rank(WallReport::Kind k) {
  switch (k) {
    case WallReport::Kind::finite_wall:
      return 0;
    case WallReport::Kind::kernel_boundary:
      return 1;
    case WallReport::Kind::phase1_family:
      break;
  }
  return 2;
}

}  // namespace

ChamberScan chamber_scan(const ClassVector& v, const Rational& b, const QuadFormParams& q,
                         const SearchBounds& sb) {
  const std::vector<ClassVector> candidates = enumerate_candidates(v, b, q, sb);
  const Rational im_v = imaginary(v, b);
  const Rational bound_at_b = q.bound().evaluate(b);

  ChamberScan scan{v, b, sb, {}, {sb.w_min, std::nullopt, std::nullopt}, candidates.size()};
  using Kind = WallReport::Kind;
  using Side = WallReport::FlatSide;

  std::set<std::tuple<int, std::optional<Rational>, int, ClassVector>> seen;
  auto add = [&](WallReport rep) {
    const auto key = std::make_tuple(kind_rank(rep.kind), rep.wall_w, static_cast<int>(rep.flat_side),
                                     primitive(rep.destabilizer));
    if (seen.insert(key).second) scan.reports.push_back(std::move(rep));
  };

  const ChargeParams at_min{b, sb.w_min};
  for (const ClassVector& sub : candidates) {
    const ClassVector quot = v - sub;
    const Rational im_sub = imaginary(sub, b);
    const Rational im_quot = im_v - im_sub;

    if (im_sub > 0 && compare_slopes(sub, v, at_min) == SlopeOrder::less) {
      const ChargeValue z = central_charge(v, at_min);
      const ChargeValue zs = central_charge(sub, at_min);
      const Rational gap = -z.re / z.im + zs.re / zs.im;
      if (!scan.gap.min_gap || gap < *scan.gap.min_gap) scan.gap.min_gap = gap;
    }

    if (proportional(sub, v)) continue;  // same slope for every w: never a wall

    if (im_sub > 0 && im_quot > 0) {
      const auto w = wall_locus(v, sub, b);
      if (w && in_range(*w, sb)) {
        WallReport rep;
        rep.destabilizer = sub;
        rep.wall_w = w;
        rep.on_boundary = *w == sb.w_min || *w == sb.w_max;
        rep.weak_point = *w <= bound_at_b;
        add(std::move(rep));
      }
      continue;
    }

    if (im_sub == 0) {
      const Rational re_lo = std::min(real_at(sub, sb.w_min), real_at(sub, sb.w_max));
      WallReport rep;
      rep.destabilizer = sub;
      rep.flat_side = Side::sub;
      if (re_lo < 0) {
        rep.kind = Kind::phase1_family;
      } else if (re_lo == 0) {
        rep.kind = Kind::kernel_boundary;
        rep.vanishes_at = real_at(sub, sb.w_min) == 0 ? sb.w_min : sb.w_max;
      } else {
        continue;  // never a heart class on this range
      }
      add(std::move(rep));
      continue;
    }

    // im_quot == 0: slopes agree exactly where Z(quot) vanishes.
    const auto w = wall_locus(v, sub, b);
    const bool quot_phase_one_somewhere =
        real_at(quot, sb.w_min) < 0 || real_at(quot, sb.w_max) < 0;
    WallReport rep;
    rep.destabilizer = sub;
    rep.flat_side = Side::quotient;
    if (w && in_range(*w, sb) && *w <= bound_at_b && quot_phase_one_somewhere) {
      rep.wall_w = w;
      rep.on_boundary = *w == sb.w_min || *w == sb.w_max;
      rep.weak_point = true;
    } else {
      rep.kind = Kind::phase1_family;
    }
    add(std::move(rep));
  }

  if (scan.gap.min_gap) scan.gap.delta0 = *scan.gap.min_gap / Rational(sb.r_max + 1);

  std::stable_sort(scan.reports.begin(), scan.reports.end(), [](const WallReport& a, const WallReport& b2) {
    const int ka = kind_rank(a.kind), kb = kind_rank(b2.kind);
    if (ka != kb) return ka < kb;
    if (a.wall_w != b2.wall_w) return a.wall_w < b2.wall_w;
    return a.destabilizer < b2.destabilizer;
  });
  return scan;
}

HnBounds default_hn_bounds(const ClassVector& v, const ChargeParams& p) {
  const Rational im = imaginary(v, p.b);
  const std::int64_t im_cap = im > 0 ? to_int64(ceil(im)) : 0;
  return {std::llabs(v.r) + im_cap, std::llabs(v.n) + 3};
}

namespace {

struct HnSearch {
  const ChargeParams& p;
  const QuadFormParams& q;
  HnBounds caps;
  int max_parts;
  std::vector<Decomposition> out;
  Decomposition parts;

  bool admissible_part(const ClassVector& x) const {
    if (x.is_zero()) return false;
    if (std::llabs(x.r) > caps.rank_cap || std::llabs(x.n) > caps.n_cap) return false;
    if (!heart_slope(x, p).comparable()) return false;
    if (qform(x, q) < 0) return false;
    return parts.empty() || compare_slopes(parts.back(), x, p) == SlopeOrder::greater;
  }

  void run(const ClassVector& rest) {
    const Rational im_rest = imaginary(rest, p.b);
    // Close the decomposition with `rest` as its last part.
    if (!parts.empty() && admissible_part(rest)) {
      parts.push_back(rest);
      out.push_back(parts);
      parts.pop_back();
    }
    if (static_cast<int>(parts.size()) + 2 > max_parts) return;

    for (std::int64_t r = -caps.rank_cap; r <= caps.rank_cap; ++r) {
      const std::int64_t d_lo = to_int64(ceil(p.b * r));
      const std::int64_t d_hi = to_int64(floor(p.b * r + im_rest));
      for (std::int64_t d = d_lo; d <= d_hi; ++d) {
        for (std::int64_t n = -caps.n_cap; n <= caps.n_cap; ++n) {
          const ClassVector x{r, d, n};
          if (x == rest || !admissible_part(x)) continue;
          parts.push_back(x);
          run(rest - x);
          parts.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<Decomposition> hn_candidates(const ClassVector& v, const ChargeParams& p,
                                         const QuadFormParams& q, int max_parts,
                                         std::optional<HnBounds> caps) {
  if (max_parts < 2) throw std::invalid_argument("hn_candidates needs max_parts >= 2");
  if (v.is_zero()) throw std::invalid_argument("hn_candidates needs a nonzero class");
  HnSearch search{p, q, caps.value_or(default_hn_bounds(v, p)), max_parts, {}, {}};
  search.run(v);
  return std::move(search.out);
}

ModuliReport verify_moduli_arithmetic(std::int64_t r_max) {
  if (r_max < 1) throw std::invalid_argument("verify_moduli_arithmetic needs r_max >= 1");
  ModuliReport report;
  report.rows.reserve(static_cast<std::size_t>(r_max));
  const Rational three(3);
  for (std::int64_t r = 1; r <= r_max; ++r) {
    ModuliRow row;
    row.r = r;
    // 3 < d/r forces d > 3r; (d+2)/(r+1) <= 3 forces d <= 3r + 1. Scan a
    // margin on both sides and let exact comparison decide.
    for (std::int64_t d = 3 * r - 3; d <= 3 * r + 4; ++d) {
      const bool below = Rational(d + 2, r + 1) <= three;
      const bool above = three < Rational(d, r);
      if (below && above) row.solutions.push_back(d);
    }
    row.quotient_flat = !row.solutions.empty();
    for (std::int64_t d : row.solutions) {
      if (mu_slope(r + 1, d + 2) != three) row.quotient_flat = false;
    }
    row.ok = row.solutions == std::vector<std::int64_t>{3 * r + 1} && row.quotient_flat;
    if (!row.ok) report.counterexamples.push_back(r);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cohstab
