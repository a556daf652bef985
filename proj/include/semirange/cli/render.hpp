#pragma once

#include <span>
#include <string>

#include "semirange/range_types.hpp"

namespace semirange::cli {

/// theta,support,boundary_re,boundary_im with one row per grid angle.
std::string render_csv(const RangeEstimate& range);

/// 800x800 figure: hull polygon, support-envelope polyline and markers.
std::string render_svg(const RangeEstimate& range, std::span<const Complex> markers);

/// Writes to `path` through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace semirange::cli
