#ifndef ELNITSKY_RENDER_HPP
#define ELNITSKY_RENDER_HPP

#include <string>
#include <vector>

#include "elnitsky/tiling.hpp"

namespace elnitsky::cli {

struct RenderOptions {
    /// Unit-length sides, as in the usual pictures of X(w). When false the
    /// exact integer embedding is drawn instead.
    bool equilateral = true;
    /// Fill tiles that are forced for some perimeter type with 20% black.
    bool shade_forced = false;
    /// Pixels per unit edge length.
    double scale = 40.0;
};

/// SVG document with one polygon element per tile and the top and bottom
/// vertices marked with dots.
std::string render_tiling(const Tiling& t, const RenderOptions& options);

/// Several tilings of one permutation, laid out left to right.
std::string render_tilings(const std::vector<Tiling>& ts, const RenderOptions& options);

} // namespace elnitsky::cli

#endif
