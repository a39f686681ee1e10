#pragma once

#include <filesystem>
#include <string>

#include "aec/dataset.hpp"

namespace aec {

/// Correlation heatmap as a standalone SVG document: one colored cell per
/// entry on a diverging scale (-1 blue, 0 white, +1 red), feature names on
/// both axes, and in-cell value labels when the matrix is 20x20 or smaller.
/// Output bytes are a pure function of the input.
std::string heatmap_svg(const CorrelationMatrix& c);

void render_heatmap(const CorrelationMatrix& c, const std::filesystem::path& path);

}  // namespace aec
