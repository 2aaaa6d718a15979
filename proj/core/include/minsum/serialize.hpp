#pragma once

#include <iosfwd>
#include <string>

#include "minsum/functionals.hpp"
#include "minsum/open_problem.hpp"
#include "minsum/optimizer.hpp"
#include "minsum/sharpness.hpp"
#include "minsum/theorem.hpp"

namespace minsum {

// Machine formats carry 17 significant digits so doubles round-trip
// exactly; JSON documents follow the schemas under docs/schemas/.

std::string histogram_to_json(const HistogramDensity& d);
HistogramDensity histogram_from_json(const std::string& text);
HistogramDensity histogram_from_json_file(const std::string& path);

/// {"weights": [...], "components": [histogram objects...]} merged into a
/// single exact histogram on the union of the component edges.
HistogramDensity mixture_from_json_file(const std::string& path);

void profile_to_csv(const DeltaProfile& p, std::ostream& out);  // header z,delta
std::string profile_to_json(const DeltaProfile& p);

std::string report_to_json(const TheoremReport& r);

void sharpness_to_csv(std::span<const SharpnessRow> rows, std::ostream& out);
std::string sharpness_to_json(std::span<const SharpnessRow> rows);

void ratio_profile_to_csv(const RatioProfile& p, std::ostream& out);
std::string ratio_profile_to_json(const RatioProfile& p);

void history_to_csv(const SearchState& s, std::ostream& out);  // header eval,objective
std::string search_state_to_json(const SearchState& s);

/// Parses a SearchConfig from a JSON object mirroring the field names.
SearchConfig search_config_from_json(const std::string& text);

std::string format_17g(double v);

}  // namespace minsum
