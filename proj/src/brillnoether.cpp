#include "cohstab/brillnoether.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohstab {

namespace {

/// Sort key placing -inf before every rational.
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

Rational half(const Rational& x) { return x / 2; }

}  // namespace

bool Interval::contains(const Rational& x) const {
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

bool Interval::closure_contains(const Rational& x) const {
  if (lo && x < *lo) return false;
  if (hi && x > *hi) return false;
  return true;
}

std::string Interval::str() const {
  std::string s = lo ? (lo_closed ? "[" : "(") + to_string(*lo) : std::string("(-inf");
  s += ", ";
  s += hi ? to_string(*hi) + (hi_closed ? "]" : ")") : std::string("inf)");
  return s;
}

PiecewiseBound::PiecewiseBound(std::vector<AffinePiece> pieces, std::map<Rational, Rational> overrides)
    : pieces_(std::move(pieces)), overrides_(std::move(overrides)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise bound needs at least one piece");
  for (auto& p : pieces_) {
    if (!p.domain.lo) p.domain.lo_closed = false;
    if (!p.domain.hi) p.domain.hi_closed = false;
    if (p.domain.lo && p.domain.hi && *p.domain.lo >= *p.domain.hi) {
      throw std::invalid_argument("piece " + p.domain.str() + " has empty interior");
    }
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const AffinePiece& a, const AffinePiece& b) { return lo_less(a.domain.lo, b.domain.lo); });

  if (pieces_.front().domain.lo) throw std::invalid_argument("coverage gap at -inf");
  if (pieces_.back().domain.hi) throw std::invalid_argument("coverage gap at +inf");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Interval& left = pieces_[i].domain;
    const Interval& right = pieces_[i + 1].domain;
    if (!left.hi || !right.lo || *left.hi != *right.lo) {
      throw std::invalid_argument("pieces " + left.str() + " and " + right.str() + " do not abut");
    }
    const Rational& x = *left.hi;
    if (left.hi_closed && right.lo_closed) {
      throw std::invalid_argument("pieces overlap at x = " + to_string(x));
    }
    if (!left.hi_closed && !right.lo_closed && !overrides_.contains(x)) {
      throw std::invalid_argument("coverage gap at x = " + to_string(x));
    }
  }

  for (const Rational& x : breakpoints()) {
    const Rational value = evaluate(x);
    if (value < left_limit(x) || value < right_limit(x)) {
      throw std::invalid_argument("bound is not upper-semicontinuous at x = " + to_string(x));
    }
  }
}

const AffinePiece& PiecewiseBound::piece_at(const Rational& x) const {
  for (const auto& p : pieces_) {
    if (p.domain.contains(x)) return p;
  }
  // Only reachable for an override point sitting between two open ends.
  throw std::logic_error("no piece contains x = " + to_string(x));
}

Rational PiecewiseBound::evaluate(const Rational& x) const {
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  return piece_at(x).at(x);
}

Rational PiecewiseBound::left_limit(const Rational& x) const {
  for (const auto& p : pieces_) {
    const bool starts_before = !p.domain.lo || *p.domain.lo < x;
    const bool reaches = !p.domain.hi || *p.domain.hi >= x;
    if (starts_before && reaches) return p.at(x);
  }
  throw std::logic_error("no left neighbourhood of x = " + to_string(x));
}

Rational PiecewiseBound::right_limit(const Rational& x) const {
  for (const auto& p : pieces_) {
    const bool starts = !p.domain.lo || *p.domain.lo <= x;
    const bool ends_after = !p.domain.hi || *p.domain.hi > x;
    if (starts && ends_after) return p.at(x);
  }
  throw std::logic_error("no right neighbourhood of x = " + to_string(x));
}

std::vector<Rational> PiecewiseBound::breakpoints() const {
  std::set<Rational> xs;
  for (const auto& p : pieces_) {
    if (p.domain.lo) xs.insert(*p.domain.lo);
    if (p.domain.hi) xs.insert(*p.domain.hi);
  }
  for (const auto& [x, v] : overrides_) xs.insert(x);
  return {xs.begin(), xs.end()};
}

PiecewiseBound general_bound(Genus genus) {
  const Rational top(2 * genus.value() - 2);
  const Rational g(genus.value());
  if (genus.value() == 1) {
    // [0, 2g-2] collapses to the point 0, where h0(O) = 1.
    return PiecewiseBound({{{std::nullopt, false, Rational(0), false}, Rational(0), Rational(0)},
                           {{Rational(0), false, std::nullopt, false}, Rational(1), Rational(0)}},
                          {{Rational(0), Rational(1)}});
  }
  std::vector<AffinePiece> pieces{
      {{std::nullopt, false, Rational(0), false}, Rational(0), Rational(0)},
      {{Rational(0), true, top, true}, Rational(1, 2), Rational(1)},
      {{top, false, std::nullopt, false}, Rational(1), Rational(1) - g},
  };
  return PiecewiseBound(std::move(pieces));
}

AffinePiece reflect_by_duality(const AffinePiece& piece, Genus genus) {
  const Rational k(2 * genus.value() - 2);
  const Rational shift = Rational(1 - genus.value());
  AffinePiece out;
  // p(k - x) + x + 1 - g = (1 - a) x + (a k + c + 1 - g)
  out.slope = Rational(1) - piece.slope;
  out.intercept = piece.slope * k + piece.intercept + shift;
  const Interval& in = piece.domain;
  if (in.hi) out.domain.lo = k - *in.hi;
  out.domain.lo_closed = in.hi_closed;
  if (in.lo) out.domain.hi = k - *in.lo;
  out.domain.hi_closed = in.lo_closed;
  return out;
}

PiecewiseBound genus4_bound() {
  const Genus g4(4);
  const std::vector<AffinePiece> left{
      {{Rational(0), false, Rational(2), false}, Rational(1, 4), Rational(3, 4)},
      {{Rational(2), true, Rational(5, 2), false}, Rational(1, 3), Rational(2, 3)},
      {{Rational(5, 2), true, Rational(3), false}, Rational(1, 2), Rational(1, 4)},
  };
  std::vector<AffinePiece> pieces{
      {{std::nullopt, false, Rational(0), false}, Rational(0), Rational(0)},
  };
  for (const auto& p : left) {
    pieces.push_back(p);
    pieces.push_back(reflect_by_duality(p, g4));
  }
  pieces.push_back({{Rational(6), false, std::nullopt, false}, Rational(1), Rational(-3)});

  // The override at 6 mirrors the one at 0: B(6) = B(0) + 6 - 3.
  std::map<Rational, Rational> overrides{
      {Rational(0), Rational(1)},
      {Rational(3), Rational(2)},
      {Rational(6), Rational(4)},
  };
  return PiecewiseBound(std::move(pieces), std::move(overrides));
}

namespace {

struct Quadratic {
  // c2 x^2 + c1 x + c0 with c2 > 0
  Rational c2, c1, c0;
  Rational operator()(const Rational& x) const { return (c2 * x + c1) * x + c0; }
  Rational vertex() const { return -c1 / (2 * c2); }
};

Quadratic difference(const Parabola& q, const AffinePiece& p) {
  // s (x - b0)^2 + k - (a x + c)
  return {q.s, -2 * q.s * q.b0 - p.slope, q.s * q.b0 * q.b0 + q.k - p.intercept};
}

Rational interior_point(const Interval& in) {
  if (in.lo && in.hi) return half(*in.lo + *in.hi);
  if (in.lo) return *in.lo + 1;
  if (in.hi) return *in.hi - 1;
  return Rational(0);
}

RegionGap piece_gap(const Quadratic& f, const Interval& in) {
  RegionGap gap;
  gap.region = in;
  const Rational v = f.vertex();
  if (in.closure_contains(v)) {
    gap.argmin = v;
  } else if (in.lo && v < *in.lo) {
    gap.argmin = *in.lo;
  } else {
    gap.argmin = *in.hi;
  }
  gap.infimum = f(gap.argmin);
  gap.attained = in.contains(gap.argmin);
  return gap;
}

/// Rational point of `in`, outside `removed`, where f < 0. Requires f(start) < 0
/// with start in the closure of `in`.
Rational negative_point(const Quadratic& f, const Interval& in, const Rational& start,
                        const std::set<Rational>& removed) {
  if (in.contains(start) && !removed.contains(start)) return start;
  const Rational target = interior_point(in);
  Rational step = target - start;
  if (step == 0) step = in.hi ? half(*in.hi - start) : Rational(1);
  for (int k = 0; k < 4096; ++k) {
    const Rational y = start + step;
    if (in.contains(y) && !removed.contains(y) && f(y) < 0) return y;
    step /= 2;
  }
  throw std::logic_error("failed to locate a violating point near x = " + to_string(start));
}

}  // namespace

DominanceResult quadratic_dominates(const PiecewiseBound& bound, const Parabola& parabola,
                                    const std::set<Rational>& excluded) {
  if (parabola.s <= 0) throw std::invalid_argument("parabola needs s > 0");

  std::set<Rational> removed = excluded;
  for (const auto& [x, v] : bound.overrides()) removed.insert(x);

  struct Item {
    std::optional<Rational> key;
    bool is_override;
    std::size_t index;
    Rational x;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < bound.pieces().size(); ++i) {
    items.push_back({bound.pieces()[i].domain.lo, false, i, Rational(0)});
  }
  for (const auto& [x, v] : bound.overrides()) items.push_back({x, true, 0, x});
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (lo_less(a.key, b.key)) return true;
    if (lo_less(b.key, a.key)) return false;
    return a.is_override && !b.is_override;
  });

  DominanceResult result;
  result.dominates = true;
  auto fail = [&](const Rational& x) {
    if (result.dominates) {
      result.dominates = false;
      result.witness = x;
    }
  };

  for (const Item& item : items) {
    if (item.is_override) {
      RegionGap gap;
      gap.region = {item.x, true, item.x, true};
      gap.is_override = true;
      gap.excluded = excluded.contains(item.x);
      gap.argmin = item.x;
      gap.infimum = parabola(item.x) - bound.overrides().at(item.x);
      gap.attained = true;
      if (!gap.excluded && gap.infimum <= 0) fail(item.x);
      result.gaps.push_back(std::move(gap));
      continue;
    }
    const AffinePiece& piece = bound.pieces()[item.index];
    const Quadratic f = difference(parabola, piece);
    RegionGap gap = piece_gap(f, piece.domain);
    if (gap.infimum == 0) {
      // Strict convexity: argmin is the only zero in the closure.
      if (gap.attained && !removed.contains(gap.argmin)) fail(gap.argmin);
    } else if (gap.infimum < 0) {
      fail(negative_point(f, piece.domain, gap.argmin, removed));
    }
    result.gaps.push_back(std::move(gap));
  }
  return result;
}

std::vector<PlotRow> emit_plot_data(const PiecewiseBound& bound, const Rational& x_min,
                                    const Rational& x_max, const Rational& step,
                                    const std::optional<Parabola>& overlay) {
  if (step <= 0) throw std::invalid_argument("plot step must be positive");
  if (x_min > x_max) throw std::invalid_argument("plot range is empty (x_min > x_max)");

  std::set<Rational> xs;
  for (Rational x = x_min; x <= x_max; x += step) xs.insert(x);
  for (const auto& [x, v] : bound.overrides()) {
    if (x >= x_min && x <= x_max) xs.insert(x);
  }

  std::vector<PlotRow> rows;
  rows.reserve(xs.size());
  for (const Rational& x : xs) {
    PlotRow row{x, bound.evaluate(x), std::nullopt};
    if (overlay) row.overlay = (*overlay)(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cohstab
