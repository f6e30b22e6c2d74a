#pragma once
// CSV and SVG output of root sets.

#include "qkernel/roots.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qkernel {

enum class PointFormat { csv, svg };

/// Header `re,im,n,family,plane`, one row per distinct root, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<RootSet>& sets);

/// Scatter plot with the unit circle (q-plane) or |t| = 1/2 (t-plane).
void write_svg(std::ostream& os, const std::vector<RootSet>& sets);

/// Writes to path; throws std::runtime_error if the file cannot be written.
void export_points(const std::vector<RootSet>& sets, PointFormat format, const std::string& path);

}  // namespace qkernel
