#pragma once

// Wire formats. Rationals are strings "p/q" (or "p"); class vectors are JSON
// arrays of three integers; quotient classes arrays of two. Key order is
// insertion order, so output is byte-stable.

#include <ostream>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohstab/brillnoether.hpp"
#include "cohstab/charge.hpp"
#include "cohstab/klattice.hpp"
#include "cohstab/support.hpp"
#include "cohstab/walls.hpp"

namespace cohstab {

using Json = nlohmann::ordered_json;

/// "r,d,n" with optional surrounding brackets/parentheses and spaces.
/// Throws std::invalid_argument on anything else.
ClassVector parse_class_vector(std::string_view text);

Json to_json(const ClassVector& v);
Json to_json(const QuotientClass& q);
Json to_json(const ChargeValue& z);
Json to_json(const Interval& in);
Json to_json(const DominanceResult& d);
/// Parameters plus the per-region dominance certificate.
Json to_json(const QuadFormParams& q);
Json to_json(const SearchBounds& sb);
Json to_json(const WallReport& w);
/// {"class", "b", "walls", "phase1_families", "bounds", "gap", ...}
Json to_json(const ChamberScan& scan);
Json to_json(const Decomposition& parts);
/// Array of arrays, canonical representative first.
Json partition_to_json(const std::vector<std::vector<ClassVector>>& classes);

/// Rows as JSON records. With `with_float`, each record gains a "lossy"
/// object holding decimal approximations.
Json plot_to_json(const std::vector<PlotRow>& rows, bool with_float);

/// Header `x,bound,overlay`, UNIX newlines, exact rationals; an absent
/// overlay is an empty field. With `with_float`, three extra columns
/// x_lossy,bound_lossy,overlay_lossy carry decimal approximations.
void write_plot_csv(std::ostream& os, const std::vector<PlotRow>& rows, bool with_float);

}  // namespace cohstab
