#pragma once

// Support quadratic form Q(r, d, n) = s (d - b0 r)^2 + r^2 (w0 - t) - n r and
// the numeric inequalities the support property reduces to.

#include <optional>
#include <string>

#include "cohstab/brillnoether.hpp"
#include "cohstab/charge.hpp"
#include "cohstab/klattice.hpp"
#include "cohstab/rational.hpp"

namespace cohstab {

/// Parameters (b0, w0, s, t) of the support form. Constructed only through
/// make()/genus4(), which require s, t > 0 and the domination certificate
/// s (x - b0)^2 + w0 - t > bound(x) for all x != b0.
class QuadFormParams {
 public:
  /// Throws std::invalid_argument if s <= 0, t <= 0 or the parabola fails to
  /// dominate the bound away from b0.
  static QuadFormParams make(Rational b0, Rational w0, Rational s, Rational t,
                             const PiecewiseBound& bound);

  /// (b0, w0, s, t) = (3, 2, 1, 1/10): the form (d - 3r)^2 + (19/10) r^2 - n r,
  /// certified against genus4_bound().
  static const QuadFormParams& genus4();

  const Rational& b0() const { return b0_; }
  const Rational& w0() const { return w0_; }
  const Rational& s() const { return s_; }
  const Rational& t() const { return t_; }
  /// The dominating parabola s (x - b0)^2 + (w0 - t).
  Parabola parabola() const { return {s_, b0_, w0_ - t_}; }
  /// Per-region gaps recorded when the certificate was checked.
  const DominanceResult& certificate() const { return certificate_; }
  /// The Brill-Noether bound the certificate was checked against.
  const PiecewiseBound& bound() const { return bound_; }

 private:
  QuadFormParams(Rational b0, Rational w0, Rational s, Rational t, DominanceResult cert,
                 PiecewiseBound bound);

  Rational b0_, w0_, s_, t_;
  DominanceResult certificate_;
  PiecewiseBound bound_;
};

Rational qform(const ClassVector& v, const QuadFormParams& q);

/// qform with the genus-4 parameters.
Rational genus4_qform(const ClassVector& v);

struct KernelNegativity {
  bool negative = false;
  /// Q on the kernel direction (1, b, w) of Z_{b,w}.
  Rational value;
};

/// Q restricted to ker Z_{b,w} = R(1, b, w). The regime is b = b0, w >= w0;
/// anything else throws PreconditionError (never reported as `false`).
KernelNegativity kernel_negative(const QuadFormParams& q, const ChargeParams& p);

/// Grid search for (s, t) making the parabola dominate `bound` off b0.
/// s runs over {1, 2, 4, 1/2, 1/4}; for each s, t runs over w0 / 2^k for
/// k = 1..12 and then j/10 for j = 1..10 w0. With `require_strong`, also
/// demands w0 - t > bound(b0). Returns the first hit, or nullopt.
std::optional<QuadFormParams> find_params(const Rational& b0, const Rational& w0,
                                          const PiecewiseBound& bound, bool require_strong);

/// Outcome for a phase-one class (r, 3r, n) at (b, w) = (3, 2).
struct Phase1Check {
  enum class Verdict { supported, kernel_class, violates };
  Verdict verdict = Verdict::violates;
  Rational q;  // genus4_qform((r, 3r, n))
  /// n <= 2 (and n != 2) for r = 1, or n/r <= 3/2 for r >= 2: the
  /// Brill-Noether input that guarantees a supported verdict.
  bool certified = false;
};

std::string to_string(Phase1Check::Verdict v);

/// kernel_class iff n = 2r; otherwise supported iff Q >= 0. The
/// Brill-Noether facts (h0 <= 2 for a trigonal bundle, h0/r <= 3/2 for stable
/// bundles of slope 3 and rank >= 2) are inputs here, not something the
/// engine proves. Throws std::invalid_argument for r < 1 or n < 0.
Phase1Check phase1_support_check(std::int64_t r, std::int64_t n);

}  // namespace cohstab
