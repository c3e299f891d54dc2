#pragma once

// Half-strips around vertical cuts and admissibility of (signs, widths,
// bounding curves) triples: the combinatorial scaffolding for smoothing.

#include <optional>
#include <string>
#include <vector>

#include "cartopoly/cuts.hpp"
#include "cartopoly/region.hpp"

namespace carto {

// Closed vertical strip of width eta around the center line through
// (x0, y0), unbounded in the sign direction, bounded by the curve gamma on
// the other side: { |x - x0| <= eta/2, sign*y >= sign*gamma(x) }.
struct HalfStrip {
    RatPt center;
    int sign = 1;
    Rat eta;
    PLBoundaryFn gamma;  // over [x0 - eta/2, x0 + eta/2]

    Rat wall_lo() const { return center.x - eta / 2; }
    Rat wall_hi() const { return center.x + eta / 2; }
    bool contains(const RatPt& p) const;
    // base = strip cut off at sign*y < sign*y0 + eta/2
    bool base_contains(const RatPt& p) const;
};

HalfStrip make_half_strip(const RatPt& center, int sign, const Rat& eta,
                          std::optional<PLBoundaryFn> gamma = std::nullopt);

// One strip per stored focus slot, sharing the focus signs.
struct AdmissibleTriple {
    std::vector<HalfStrip> strips;
};

struct AdmissibilityViolation {
    int bullet;  // 1..4, or 5 for the corner rule
    std::string message;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// The four defining conditions plus the corner rule: bases inside Int(B),
// foreign focus values only on the same center line, equal widths per
// center line, pairwise intersections trivial, and any corner of B inside a
// strip is unique and sits on the center line.
AdmissibilityReport check_admissible(const AdmissibleTriple& triple,
                                     const Region& region, const FocusSet& focus);

// Deterministic construction: per line, half the distance to the nearest
// other focus line / region end / boundary breakpoint, then halved until
// the base rectangles clear the boundary; constant bounding curves
// gamma = y_i - sign*eta/2. Refuses when the cut complement is
// disconnected (necessary condition).
AdmissibleTriple construct_admissible(const Region& region, const FocusSet& focus,
                                      const SignChoice& eps);

// Scales every width by num/den < 1, restricting the bounding curves to the
// narrowed walls; admissibility is preserved.
AdmissibleTriple shrink_widths(const AdmissibleTriple& triple, const Rat& factor);

// Transport along a vertical twist: signs scale by d, curves map through h.
// A shearing twist slants the pulled-back base caps, so widths shrink by
// 1/(1+|k|) to keep the bases inside the twisted interior; pure flips and
// translations keep their widths.
AdmissibleTriple twist_triple(const AdmissibleTriple& triple, const VertElement& h);

struct StripsConnectivity {
    bool connected = true;
    std::optional<Rat> witness_line;  // center line where the slice dies
};

// Maximal-strip slab analysis of B minus the strips: per center line, at
// most one maximal strip per direction, disjoint, with room left in every
// vertical slice they meet.
StripsConnectivity strips_complement_connected(const Region& region,
                                               const AdmissibleTriple& triple);

// Indices of strips that are maximal (not properly contained in another).
std::vector<size_t> maximal_strips(const AdmissibleTriple& triple);

}  // namespace carto
