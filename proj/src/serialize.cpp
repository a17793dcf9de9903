#include "cohstab/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <string>

namespace cohstab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_entry(std::string_view field, std::string_view whole) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("malformed class vector '" + std::string(whole) +
                                "': expected three comma-separated integers");
  }
  return value;
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", to_double(q));
  return buf;
}

}  // namespace

ClassVector parse_class_vector(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    fields.push_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 3) {
    throw std::invalid_argument("malformed class vector '" + std::string(text) +
                                "': expected three comma-separated integers");
  }
  return {parse_entry(fields[0], text), parse_entry(fields[1], text), parse_entry(fields[2], text)};
}

Json to_json(const ClassVector& v) { return Json::array({v.r, v.d, v.n}); }

Json to_json(const QuotientClass& q) { return Json::array({q.a, q.c}); }

Json to_json(const ChargeValue& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const Interval& in) {
  Json j;
  j["lo"] = in.lo ? Json(to_string(*in.lo)) : Json("-inf");
  j["lo_closed"] = in.lo_closed;
  j["hi"] = in.hi ? Json(to_string(*in.hi)) : Json("inf");
  j["hi_closed"] = in.hi_closed;
  j["notation"] = in.str();
  return j;
}

Json to_json(const DominanceResult& d) {
  Json j;
  j["dominates"] = d.dominates;
  j["witness"] = d.witness ? Json(to_string(*d.witness)) : Json(nullptr);
  Json gaps = Json::array();
  for (const auto& g : d.gaps) {
    Json e;
    e["region"] = g.is_override ? Json("x=" + to_string(*g.region.lo)) : Json(g.region.str());
    e["override"] = g.is_override;
    e["excluded"] = g.excluded;
    e["min_gap"] = to_string(g.infimum);
    e["argmin"] = to_string(g.argmin);
    e["attained"] = g.attained;
    gaps.push_back(std::move(e));
  }
  j["gaps"] = std::move(gaps);
  return j;
}

Json to_json(const QuadFormParams& q) {
  Json j;
  j["b0"] = to_string(q.b0());
  j["w0"] = to_string(q.w0());
  j["s"] = to_string(q.s());
  j["t"] = to_string(q.t());
  j["w0_minus_t"] = to_string(q.w0() - q.t());
  j["certificate"] = to_json(q.certificate());
  return j;
}

Json to_json(const SearchBounds& sb) {
  return {{"r_max", sb.r_max},
          {"n_window", sb.n_window},
          {"w_min", to_string(sb.w_min)},
          {"w_max", to_string(sb.w_max)}};
}

Json to_json(const WallReport& w) {
  Json j;
  j["w"] = w.wall_w ? Json(to_string(*w.wall_w)) : Json(nullptr);
  j["destabilizer"] = to_json(w.destabilizer);
  j["kind"] = to_string(w.kind);
  if (w.kind == WallReport::Kind::finite_wall) {
    j["boundary"] = w.on_boundary;
    j["weak_point"] = w.weak_point;
  }
  if (w.flat_side != WallReport::FlatSide::none) j["flat_side"] = to_string(w.flat_side);
  if (w.vanishes_at) j["vanishes_at"] = to_string(*w.vanishes_at);
  return j;
}

Json to_json(const ChamberScan& scan) {
  Json j;
  j["class"] = to_json(scan.v);
  j["b"] = to_string(scan.b);
  Json walls = Json::array();
  Json families = Json::array();
  for (const auto& rep : scan.reports) {
    if (rep.kind == WallReport::Kind::phase1_family) {
      families.push_back(to_json(rep));
    } else {
      walls.push_back(to_json(rep));
    }
  }
  j["walls"] = std::move(walls);
  j["phase1_families"] = std::move(families);
  j["bounds"] = to_json(scan.bounds);
  Json gap;
  gap["at_w"] = to_string(scan.gap.at_w);
  gap["min_slope_gap"] = scan.gap.min_gap ? Json(to_string(*scan.gap.min_gap)) : Json(nullptr);
  gap["delta0"] = scan.gap.delta0 ? Json(to_string(*scan.gap.delta0)) : Json(nullptr);
  j["gap"] = std::move(gap);
  j["candidates_examined"] = scan.candidates_examined;
  j["status"] = "numerical candidates; realization by objects unverified";
  return j;
}

Json to_json(const Decomposition& parts) {
  Json j = Json::array();
  for (const auto& v : parts) j.push_back(to_json(v));
  return j;
}

Json partition_to_json(const std::vector<std::vector<ClassVector>>& classes) {
  Json j = Json::array();
  for (const auto& members : classes) j.push_back(to_json(members));
  return j;
}

Json plot_to_json(const std::vector<PlotRow>& rows, bool with_float) {
  Json j = Json::array();
  for (const auto& row : rows) {
    Json rec;
    rec["x"] = to_string(row.x);
    rec["bound"] = to_string(row.bound);
    rec["overlay"] = row.overlay ? Json(to_string(*row.overlay)) : Json(nullptr);
    if (with_float) {
      Json lossy;
      lossy["x"] = to_double(row.x);
      lossy["bound"] = to_double(row.bound);
      lossy["overlay"] = row.overlay ? Json(to_double(*row.overlay)) : Json(nullptr);
      rec["lossy"] = std::move(lossy);
    }
    j.push_back(std::move(rec));
  }
  return j;
}

void write_plot_csv(std::ostream& os, const std::vector<PlotRow>& rows, bool with_float) {
  os << "x,bound,overlay";
  if (with_float) os << ",x_lossy,bound_lossy,overlay_lossy";
  os << '\n';
  for (const auto& row : rows) {
    os << to_string(row.x) << ',' << to_string(row.bound) << ',';
    if (row.overlay) os << to_string(*row.overlay);
    if (with_float) {
      os << ',' << decimal(row.x) << ',' << decimal(row.bound) << ',';
      if (row.overlay) os << decimal(*row.overlay);
    }
    os << '\n';
  }
}

}  // namespace cohstab
