#include "cli.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "cohstab/brillnoether.hpp"
#include "cohstab/charge.hpp"
#include "cohstab/serialize.hpp"
#include "cohstab/support.hpp"
#include "cohstab/verify.hpp"
#include "cohstab/walls.hpp"

namespace cohstab::cli {

namespace {

std::pair<Rational, Rational> parse_range(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument(std::string(what) + " expects 'lo,hi', got '" + text + "'");
  }
  return {parse_rational(std::string_view(text).substr(0, comma)),
          parse_rational(std::string_view(text).substr(comma + 1))};
}

void print_scan_text(std::ostream& out, const ChamberScan& scan) {
  out << "class " << scan.v << " at b = " << to_string(scan.b) << ", w in [" << to_string(scan.bounds.w_min)
      << ", " << to_string(scan.bounds.w_max) << "]\n";
  for (const auto& rep : scan.reports) {
    out << to_string(rep.kind);
    if (rep.wall_w) out << " w=" << to_string(*rep.wall_w);
    out << " against " << rep.destabilizer;
    if (rep.flat_side != WallReport::FlatSide::none) out << " (" << to_string(rep.flat_side) << ")";
    if (rep.on_boundary) out << " [boundary]";
    if (rep.weak_point) out << " [weak point]";
    out << '\n';
  }
  out << "candidates examined: " << scan.candidates_examined << '\n';
  if (scan.gap.min_gap) {
    out << "min slope gap at w=" << to_string(scan.gap.at_w) << ": " << to_string(*scan.gap.min_gap)
        << ", delta0 = " << to_string(*scan.gap.delta0) << '\n';
  }
  out << "status: numerical candidates; realization by objects unverified\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic stability conditions on coherent systems of curves"};
  app.require_subcommand(1);

  std::string v1_text, v2_text;
  int genus = 4;
  auto* pairing = app.add_subcommand("pairing", "Euler pairing of two classes (r,d,n)");
  pairing->add_option("v1", v1_text, "first class, e.g. 1,3,2")->required();
  pairing->add_option("v2", v2_text, "second class")->required();
  pairing->add_option("--genus", genus, "curve genus")->capture_default_str();

  std::string x_text;
  bool refined = false;
  auto* bn = app.add_subcommand("bn", "Brill-Noether bound at x = deg/rk");
  bn->add_option("x", x_text, "slope, p/q or decimal")->required();
  bn->add_option("--genus", genus, "curve genus")->capture_default_str();
  bn->add_flag("--refined", refined, "genus-4 refined bound");

  std::string b_text = "3", w_text = "2";
  auto* charge = app.add_subcommand("charge", "central charge, slope and class of a vector");
  charge->add_option("v", v1_text, "class r,d,n")->required();
  charge->add_option("--b", b_text, "charge parameter b")->capture_default_str();
  charge->add_option("--w", w_text, "charge parameter w")->capture_default_str();

  bool certificate = false;
  auto* qform_cmd = app.add_subcommand("qform", "genus-4 support quadratic form");
  qform_cmd->add_option("v", v1_text, "class r,d,n")->required();
  qform_cmd->add_flag("--certificate", certificate, "also print the parameters and dominance certificate");

  std::string w_range_text = "2,10", output = "json";
  SearchBounds bounds;
  auto* scan = app.add_subcommand("scan", "numerical walls along a vertical line");
  scan->add_option("v", v1_text, "class r,d,n")->required();
  scan->add_option("--b", b_text, "vertical line b")->capture_default_str();
  scan->add_option("--w-range", w_range_text, "w_min,w_max")->capture_default_str();
  scan->add_option("--r-max", bounds.r_max, "|r'| bound")->capture_default_str();
  scan->add_option("--n-window", bounds.n_window, "slack on |n'|")->capture_default_str();
  scan->add_option("--output", output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run the genus-4 verification suite");
  verify->add_option("--r-max", vopts.moduli_r_max, "rank bound for the destabilizer arithmetic")
      ->capture_default_str();
  verify->add_option("--scan-r-max", vopts.scan.r_max, "rank bound for the chamber scan")->capture_default_str();
  verify->add_option("--genus", genus, "curve genus (only 4 is supported)")->capture_default_str();

  std::string range_text = "-1,7", step_text = "1/4", out_path, plot_output = "csv";
  bool overlay = false, with_float = false;
  auto* plot = app.add_subcommand("plot", "genus-4 bound samples, exact");
  plot->add_option("--range", range_text, "x_min,x_max")->capture_default_str();
  plot->add_option("--step", step_text, "sampling step")->capture_default_str();
  plot->add_flag("--overlay", overlay, "add the parabola (x-3)^2 + 19/10");
  plot->add_flag("--float", with_float, "append lossy decimal columns");
  plot->add_option("--output", plot_output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  plot->add_option("--out", out_path, "write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*pairing) {
      out << euler_pairing(parse_class_vector(v1_text), parse_class_vector(v2_text), Genus(genus)) << '\n';
    } else if (*bn) {
      const Rational x = parse_rational(x_text);
      if (refined && genus != 4) throw std::invalid_argument("--refined is only available for genus 4");
      const PiecewiseBound bound = refined ? genus4_bound() : general_bound(Genus(genus));
      out << to_string(bound.evaluate(x)) << '\n';
    } else if (*charge) {
      const ClassVector v = parse_class_vector(v1_text);
      const ChargeParams p{parse_rational(b_text), parse_rational(w_text)};
      Json j;
      j["class"] = to_json(v);
      j["charge"] = to_json(central_charge(v, p));
      j["slope"] = to_string(heart_slope(v, p));
      j["admissible"] = is_admissible(p, genus4_bound());
      out << j.dump(2) << '\n';
    } else if (*qform_cmd) {
      const ClassVector v = parse_class_vector(v1_text);
      if (certificate) {
        Json j;
        j["class"] = to_json(v);
        j["q"] = to_string(genus4_qform(v));
        j["params"] = to_json(QuadFormParams::genus4());
        out << j.dump(2) << '\n';
      } else {
        out << to_string(genus4_qform(v)) << '\n';
      }
    } else if (*scan) {
      const ClassVector v = parse_class_vector(v1_text);
      std::tie(bounds.w_min, bounds.w_max) = parse_range(w_range_text, "--w-range");
      const ChamberScan result = chamber_scan(v, parse_rational(b_text), QuadFormParams::genus4(), bounds);
      if (output == "json") {
        out << to_json(result).dump(2) << '\n';
      } else {
        print_scan_text(out, result);
      }
    } else if (*verify) {
      if (genus != 4) throw std::invalid_argument("the refined verification suite is genus-4 only");
      if (vopts.moduli_r_max < 1) throw std::invalid_argument("--r-max must be positive");
      bool all = true;
      for (const CheckResult& r : run_verification_suite(vopts)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title << '\n';
        for (const auto& line : r.details) out << "    " << line << '\n';
        all = all && r.passed;
      }
      out << (all ? "all checks passed" : "verification FAILED") << '\n';
      return all ? kOk : kVerificationFailed;
    } else if (*plot) {
      const auto [lo, hi] = parse_range(range_text, "--range");
      std::optional<Parabola> parabola;
      if (overlay) parabola = Parabola{Rational(1), Rational(3), Rational(19, 10)};
      const auto rows = emit_plot_data(genus4_bound(), lo, hi, parse_rational(step_text), parabola);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (plot_output == "csv") {
        write_plot_csv(sink, rows, with_float);
      } else {
        sink << plot_to_json(rows, with_float).dump(2) << '\n';
      }
    }
  } catch (const std::logic_error& e) {  // malformed input and precondition failures
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace cohstab::cli
