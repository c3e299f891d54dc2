#pragma once

// Deterministic SVG rendering of regions, focus-focus markers, cuts, and
// half-strips; families render as side-by-side panels.

#include <optional>
#include <string>
#include <vector>

#include "cartopoly/cartography.hpp"
#include "cartopoly/strips.hpp"

namespace carto {

struct RenderOptions {
    double panel_px = 360;           // width of one panel
    std::optional<SignChoice> cuts;  // draw the cuts of this sign choice
    std::optional<AdmissibleTriple> strips;
};

std::string render_svg(const Presentation& pres, const RenderOptions& opt = {});

std::string render_family_svg(const Presentation& pres,
                              const std::vector<FamilyEntry>& family,
                              double panel_px = 360);

}  // namespace carto
