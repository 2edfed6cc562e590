// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "chlat/point.hpp"

namespace chlat {

/// Parses {"dim": d, "points": [[x, y, ...], ...]} where each coordinate is
/// a string ("3", "-3/7") or a JSON integer. Throws ParseError on malformed
/// input, ragged rows and repeated points.
Configuration parse_point_file(const std::string& text);

/// Serializes X in the same format with string coordinates, one point per
/// line.
std::string write_point_file(const Configuration& X);

}  // namespace chlat
