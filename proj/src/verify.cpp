#include "cohstab/verify.hpp"

#include <random>
#include <sstream>

#include "cohstab/brillnoether.hpp"
#include "cohstab/charge.hpp"
#include "cohstab/degeneration.hpp"
#include "cohstab/klattice.hpp"
#include "cohstab/support.hpp"

namespace cohstab {

namespace {

template <typename T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string show(const Rational& q) { return to_string(q); }

class Checker {
 public:
  Checker(std::string id, std::string title) { result_.id = std::move(id), result_.title = std::move(title); }

  template <typename A, typename B>
  void expect_eq(const std::string& what, const A& got, const B& want) {
    const bool ok = got == want;
    result_.details.push_back(what + " = " + show(got) + (ok ? "" : " (expected " + show(want) + ")"));
    all_ok_ = all_ok_ && ok;
  }

  void expect(const std::string& what, bool ok) {
    result_.details.push_back(what + (ok ? ": yes" : ": NO"));
    all_ok_ = all_ok_ && ok;
  }

  void note(std::string line) { result_.details.push_back(std::move(line)); }

  CheckResult finish() {
    result_.passed = all_ok_;
    return std::move(result_);
  }

 private:
  CheckResult result_;
  bool all_ok_ = true;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  ClassVector vec(std::int64_t m) { return {integer(-m, m), integer(-m, m), integer(-m, m)}; }
  Rational rational(std::int64_t num_cap, std::int64_t den_cap) {
    return Rational(integer(-num_cap, num_cap), integer(1, den_cap));
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult check_euler() {
  Checker c("1", "Euler matrix and exceptionality of (1,3,2)");
  const EulerMatrix m = euler_matrix(Genus(4));
  const EulerMatrix want{{{-3, 1, 0}, {-1, 0, 0}, {3, -1, 1}}};
  c.expect("M(g=4) = ((-3,1,0),(-1,0,0),(3,-1,1))", m == want);
  c.expect_eq("chi((1,3,2),(1,3,2))", euler_pairing(kTrigonalClass, kTrigonalClass, Genus(4)),
              std::int64_t{1});
  return c.finish();
}

CheckResult check_genus4_table() {
  Checker c("2", "genus-4 bound table");
  const PiecewiseBound bound = genus4_bound();
  const std::vector<std::pair<Rational, Rational>> table{
      {Rational(0), Rational(1)},          {Rational(1), Rational(1)},
      {Rational(2), Rational(4, 3)},       {Rational(9, 4), Rational(17, 12)},
      {Rational(5, 2), Rational(3, 2)},    {Rational(11, 4), Rational(13, 8)},
      {Rational(3), Rational(2)},
  };
  for (const auto& [x, want] : table) c.expect_eq("bound(" + to_string(x) + ")", bound.evaluate(x), want);
  return c.finish();
}

CheckResult check_dominance() {
  Checker c("3", "parabola (x-3)^2 + 19/10 dominates the genus-4 bound off x = 3");
  const PiecewiseBound bound = genus4_bound();
  const Parabola p{Rational(1), Rational(3), Rational(19, 10)};
  const auto with_exclusion = quadratic_dominates(bound, p, {Rational(3)});
  c.expect("dominates with x = 3 excluded", with_exclusion.dominates);
  const auto without = quadratic_dominates(bound, p);
  c.expect("fails without exclusion", !without.dominates);
  if (without.witness) c.expect_eq("witness", *without.witness, Rational(3));
  c.expect_eq("parabola(3)", p(Rational(3)), Rational(19, 10));
  c.expect_eq("bound(3)", bound.evaluate(Rational(3)), Rational(2));
  return c.finish();
}

CheckResult check_kernel() {
  Checker c("4", "kernel class (1,3,2) at (3,2)");
  c.expect("Z_{3,2}(1,3,2) = 0", central_charge(kTrigonalClass, kWeakPoint) == ChargeValue{});
  const Rational q = genus4_qform(kTrigonalClass);
  c.expect_eq("Q(1,3,2)", q, Rational(-1, 10));
  c.expect("Q(1,3,2) < 0", q < 0);
  for (int w : {2, 3, 10}) {
    const auto k = kernel_negative(QuadFormParams::genus4(), {Rational(3), Rational(w)});
    c.expect("kernel negative at w = " + std::to_string(w) + " (Q = " + to_string(k.value) + ")",
             k.negative);
  }
  return c.finish();
}

CheckResult check_phase1() {
  Checker c("5", "phase-one support at slope 3");
  const auto a = phase1_support_check(1, 1);
  c.expect_eq("(1,1) verdict", to_string(a.verdict), std::string("supported"));
  c.expect_eq("(1,1) Q", a.q, Rational(9, 10));
  c.expect_eq("(1,2) verdict", to_string(phase1_support_check(1, 2).verdict), std::string("kernel_class"));
  std::size_t checked = 0, bad = 0;
  for (std::int64_t r = 1; r <= 50; ++r) {
    for (std::int64_t n = 0; 2 * n <= 3 * r; ++n) {
      if (n == 2 * r) continue;
      ++checked;
      if (phase1_support_check(r, n).q < 0) ++bad;
    }
  }
  c.expect_eq("negative Q among " + std::to_string(checked) + " classes with r <= 50, n <= 3r/2", bad,
              std::size_t{0});
  return c.finish();
}

CheckResult check_scan(const SearchBounds& sb) {
  Checker c("6", "walls for (-1,-2,-1) along b = 3");
  const ClassVector v{-1, -2, -1};
  const ChamberScan scan = chamber_scan(v, Rational(3), QuadFormParams::genus4(), sb);
  c.note("range [" + to_string(sb.w_min) + ", " + to_string(sb.w_max) + "], r_max = " +
         std::to_string(sb.r_max) + ", n_window = " + std::to_string(sb.n_window) + ", " +
         std::to_string(scan.candidates_examined) + " candidates");
  c.expect_eq("finite walls strictly inside", scan.interior_walls().size(), std::size_t{0});
  bool boundary = false;
  for (const auto& w : scan.of_kind(WallReport::Kind::finite_wall)) {
    if (w.wall_w == sb.w_min && primitive(w.destabilizer) == ClassVector{0, 1, 1}) boundary = true;
  }
  c.expect("boundary wall at w = 2 against (0,1,1)", boundary);
  std::size_t family = 0;
  for (const auto& f : scan.of_kind(WallReport::Kind::phase1_family)) {
    if (f.destabilizer.d == 3 * f.destabilizer.r + 1) ++family;
  }
  c.expect("phase-one family (r, 3r+1, n) reported separately (" + std::to_string(family) + " members)",
           family > 0);
  return c.finish();
}

CheckResult check_moduli(std::int64_t r_max) {
  Checker c("7", "destabilizer arithmetic (d+2)/(r+1) <= 3 < d/r");
  const ModuliReport report = verify_moduli_arithmetic(r_max);
  c.note("ranks 1.." + std::to_string(r_max) + ": unique solution d = 3r + 1 expected");
  c.expect_eq("counterexamples", report.counterexamples.size(), std::size_t{0});
  return c.finish();
}

CheckResult check_degeneration() {
  Checker c("8", "descended charge and S-equivalence");
  std::size_t mismatches = 0, total = 0;
  for (std::int64_t r = -12; r <= 12; ++r) {
    for (std::int64_t d = -12; d <= 12; ++d) {
      for (std::int64_t n = -12; n <= 12; ++n) {
        const ClassVector v{r, d, n};
        ++total;
        if (descended_charge(project_mod_kernel(v)) != central_charge(v, kWeakPoint)) ++mismatches;
      }
    }
  }
  c.expect_eq("mismatches over " + std::to_string(total) + " classes", mismatches, std::size_t{0});
  c.expect("(-1,-2,-1) ~ (0,1,1)", s_equivalent({-1, -2, -1}, {0, 1, 1}));
  c.expect_eq("projection of (-1,-2,-1)", project_mod_kernel({-1, -2, -1}), QuotientClass{1, 1});
  c.expect_eq("projection of (0,1,1)", project_mod_kernel({0, 1, 1}), QuotientClass{1, 1});
  return c.finish();
}

CheckResult check_properties(std::size_t cases, std::uint64_t seed) {
  Checker c("9", "randomized properties");
  Sampler rnd(seed);
  const PiecewiseBound bound = genus4_bound();
  const QuadFormParams& q = QuadFormParams::genus4();

  std::size_t fails = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const Genus g(static_cast<int>(rnd.integer(1, 12)));
    const ClassVector a = rnd.vec(30), a2 = rnd.vec(30), b = rnd.vec(30);
    if (euler_pairing(a + a2, b, g) != euler_pairing(a, b, g) + euler_pairing(a2, b, g) ||
        euler_pairing(b, a + a2, g) != euler_pairing(b, a, g) + euler_pairing(b, a2, g)) {
      ++fails;
    }
  }
  c.expect_eq("pairing bilinearity failures / " + std::to_string(cases), fails, std::size_t{0});

  fails = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const ChargeParams p{rnd.rational(20, 6), rnd.rational(20, 6)};
    const ClassVector v = rnd.vec(20), u = rnd.vec(20);
    const std::int64_t k = rnd.integer(1, 9);
    if (heart_slope(k * v, p) != heart_slope(v, p) || compare_slopes(k * v, u, p) != compare_slopes(v, u, p)) {
      ++fails;
    }
  }
  c.expect_eq("slope scaling failures / " + std::to_string(cases), fails, std::size_t{0});

  fails = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const ChargeParams p{rnd.rational(10, 3), rnd.rational(10, 3)};
    const ClassVector x = rnd.vec(6), y = rnd.vec(6), z = rnd.vec(6);
    const SlopeOrder xy = compare_slopes(x, y, p), yz = compare_slopes(y, z, p), xz = compare_slopes(x, z, p);
    const SlopeOrder yx = compare_slopes(y, x, p);
    const bool anti = (xy == SlopeOrder::less) == (yx == SlopeOrder::greater) &&
                      (xy == SlopeOrder::equal) == (yx == SlopeOrder::equal);
    const bool le_xy = xy == SlopeOrder::less || xy == SlopeOrder::equal;
    const bool le_yz = yz == SlopeOrder::less || yz == SlopeOrder::equal;
    const bool trans = !(le_xy && le_yz) || xz == SlopeOrder::less || xz == SlopeOrder::equal;
    if (!anti || !trans) ++fails;
  }
  c.expect_eq("slope preorder failures / " + std::to_string(cases), fails, std::size_t{0});

  fails = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const ClassVector v = rnd.vec(40);
    const std::int64_t k = rnd.integer(-9, 9);
    if (qform(-v, q) != qform(v, q) || qform(k * v, q) != Rational(k * k) * qform(v, q)) ++fails;
  }
  c.expect_eq("qform symmetry/scaling failures / " + std::to_string(cases), fails, std::size_t{0});

  fails = 0;
  const std::vector<Rational> breaks = bound.breakpoints();
  for (std::size_t i = 0; i < cases; ++i) {
    const Rational x = i % 4 == 0 ? breaks[i / 4 % breaks.size()] : rnd.rational(80, 24);
    const Rational y = Rational(rnd.integer(0, 72), 24);  // grid in [0, 3]
    const Rational vx = bound.evaluate(x);
    if (vx < bound.left_limit(x) || vx < bound.right_limit(x)) ++fails;
    if (bound.evaluate(Rational(6) - y) - bound.evaluate(y) != Rational(3) - y) ++fails;
  }
  c.expect_eq("semicontinuity/duality failures / " + std::to_string(cases), fails, std::size_t{0});
  return c.finish();
}

CheckResult check_find_params() {
  Checker c("10", "support-form parameter search at (b0, w0) = (3, 2)");
  const PiecewiseBound bound = genus4_bound();
  const auto strong = find_params(Rational(3), Rational(2), bound, true);
  c.expect("strong search finds nothing", !strong.has_value());
  const auto weak = find_params(Rational(3), Rational(2), bound, false);
  c.expect("weak search finds parameters", weak.has_value());
  if (weak) {
    c.note("found s = " + to_string(weak->s()) + ", t = " + to_string(weak->t()));
    const auto recheck = quadratic_dominates(bound, weak->parabola(), {weak->b0()});
    c.expect("certificate re-checks", recheck.dominates && weak->certificate().dominates);
  }
  return c.finish();
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check_euler());
  out.push_back(check_genus4_table());
  out.push_back(check_dominance());
  out.push_back(check_kernel());
  out.push_back(check_phase1());
  out.push_back(check_scan(opts.scan));
  out.push_back(check_moduli(opts.moduli_r_max));
  out.push_back(check_degeneration());
  out.push_back(check_properties(opts.property_cases, opts.seed));
  out.push_back(check_find_params());
  return out;
}

}  // namespace cohstab
