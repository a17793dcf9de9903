#include "cohstab/support.hpp"

#include <stdexcept>
#include <vector>

namespace cohstab {

QuadFormParams::QuadFormParams(Rational b0, Rational w0, Rational s, Rational t, DominanceResult cert,
                               PiecewiseBound bound)
    : b0_(std::move(b0)), w0_(std::move(w0)), s_(std::move(s)), t_(std::move(t)),
      certificate_(std::move(cert)), bound_(std::move(bound)) {}

QuadFormParams QuadFormParams::make(Rational b0, Rational w0, Rational s, Rational t,
                                    const PiecewiseBound& bound) {
  if (s <= 0) throw std::invalid_argument("support form needs s > 0");
  if (t <= 0) throw std::invalid_argument("support form needs t > 0");
  DominanceResult cert = quadratic_dominates(bound, Parabola{s, b0, w0 - t}, {b0});
  if (!cert.dominates) {
    throw std::invalid_argument("parabola does not dominate the bound; violation at x = " +
                                to_string(*cert.witness));
  }
  return QuadFormParams(std::move(b0), std::move(w0), std::move(s), std::move(t), std::move(cert),
                        bound);
}

const QuadFormParams& QuadFormParams::genus4() {
  static const QuadFormParams params =
      make(Rational(3), Rational(2), Rational(1), Rational(1, 10), genus4_bound());
  return params;
}

Rational qform(const ClassVector& v, const QuadFormParams& q) {
  const Rational shift = Rational(v.d) - q.b0() * v.r;
  const Rational r(v.r);
  return q.s() * shift * shift + r * r * (q.w0() - q.t()) - Rational(v.n) * r;
}

Rational genus4_qform(const ClassVector& v) { return qform(v, QuadFormParams::genus4()); }

KernelNegativity kernel_negative(const QuadFormParams& q, const ChargeParams& p) {
  if (p.b != q.b0()) {
    throw PreconditionError("kernel negativity is only asserted at b = b0 = " + to_string(q.b0()));
  }
  if (p.w < q.w0()) {
    throw PreconditionError("kernel negativity needs w >= w0 = " + to_string(q.w0()));
  }
  // Q(1, b, w) = s (b - b0)^2 + (w0 - t) - w
  const Rational db = p.b - q.b0();
  const Rational value = q.s() * db * db + (q.w0() - q.t()) - p.w;
  return {value < 0, value};
}

std::optional<QuadFormParams> find_params(const Rational& b0, const Rational& w0,
                                          const PiecewiseBound& bound, bool require_strong) {
  const std::vector<Rational> s_grid{Rational(1), Rational(2), Rational(4), Rational(1, 2),
                                     Rational(1, 4)};
  std::vector<Rational> t_grid;
  for (int k = 1; k <= 12; ++k) t_grid.push_back(w0 * pow2(-k));
  for (Rational j = 1; j <= 10 * w0; j += 1) t_grid.push_back(j / 10);

  const Rational bound_at_b0 = bound.evaluate(b0);
  for (const Rational& s : s_grid) {
    for (const Rational& t : t_grid) {
      if (t <= 0) continue;
      if (require_strong && !(w0 - t > bound_at_b0)) continue;
      DominanceResult cert = quadratic_dominates(bound, Parabola{s, b0, w0 - t}, {b0});
      if (cert.dominates) return QuadFormParams::make(b0, w0, s, t, bound);
    }
  }
  return std::nullopt;
}

std::string to_string(Phase1Check::Verdict v) {
  switch (v) {
    case Phase1Check::Verdict::supported:
      return "supported";
    case Phase1Check::Verdict::kernel_class:
      return "kernel_class";
    case Phase1Check::Verdict::violates:
      break;
  }
  return "violates";
}

Phase1Check phase1_support_check(std::int64_t r, std::int64_t n) {
  if (r < 1) throw std::invalid_argument("phase-one check needs rank r >= 1");
  if (n < 0) throw std::invalid_argument("phase-one check needs n >= 0");

  Phase1Check out;
  out.q = genus4_qform({r, 3 * r, n});
  if (n == 2 * r) {
    out.verdict = Phase1Check::Verdict::kernel_class;
    return out;
  }
  out.verdict = out.q >= 0 ? Phase1Check::Verdict::supported : Phase1Check::Verdict::violates;
  out.certified = r == 1 ? n <= 2 : 2 * n <= 3 * r;
  return out;
}

}  // namespace cohstab
