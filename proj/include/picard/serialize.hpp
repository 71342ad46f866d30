// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_SERIALIZE_HPP
#define PICARD_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "picard/analysis.hpp"
#include "picard/blocks.hpp"
#include "picard/picard_set.hpp"
#include "picard/reach_table.hpp"

namespace picard {

/// {"g":G,"members":[...]}
std::string set_to_json(const PicardSet& s);
/// "rho" header, then one member per line.
std::string set_to_csv(const PicardSet& s);
/// "{1, ..., 6, 9}": runs of three or more collapse to an ellipsis.
std::string set_to_text(const PicardSet& s);

/// "lo-hi" per line.
std::string gaps_to_text(const std::vector<GapInterval>& gaps);

/// {"g":G,"rho":R,"blocks":[{"m":..,"k":..,"kind":"I|II|III|IV","param":..,"rho":..}]}
std::string decomposition_to_json(const Decomposition& d);
/// Same object plus "shapes" and "truncated".
std::string certificate_with_shapes_to_json(const Decomposition& d, const ShapeEnumeration& shapes);
/// Parses and re-validates: every block realizable, its rho equal to the
/// recomputed value, dimensions summing to g and rho matching the total.
/// Throws std::invalid_argument on any violation.
Decomposition decomposition_from_json(std::string_view text);

inline constexpr std::string_view kDensityCsvHeader = "g,count,g_squared,density_num,density_den";

struct DensityRow {
  int g;
  std::size_t count;
  Value g_squared;
  Rational density;
};

std::string density_to_csv(const std::vector<DensityRow>& rows);
/// Fixed-width table with the density rounded to 6 places.
std::string density_to_text(const std::vector<DensityRow>& rows);

std::string report_to_text(const VerificationReport& report);
std::string distribution_to_text(const DistributionCheck& check);

}  // namespace picard

#endif  // PICARD_SERIALIZE_HPP
