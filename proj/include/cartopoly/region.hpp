#pragma once

// Rational piecewise-linear model of a moment-map image B. The region is
// stored as lower/upper PL graphs over an x-interval, so every vertical
// slice is an interval by construction; vertical boundary segments can only
// occur at the two ends of the interval.

#include <optional>
#include <string>
#include <vector>

#include "cartopoly/rat.hpp"
#include "cartopoly/zaffine.hpp"

namespace carto {

// PL function given by breakpoints. xs must be nondecreasing; a repeated
// x-value encodes a jump, which validate() reports as a violation when it
// sits at an interior x.
struct PLBoundaryFn {
    std::vector<Rat> xs;
    std::vector<Rat> ys;

    // Value at x; for a jump the segment reached first from the left wins.
    Rat eval(const Rat& x) const;
    bool has_jump_at(const Rat& x) const;
};

struct ClosureFlags {
    bool left = true;
    bool right = true;
    bool lower = true;
    bool upper = true;
};

struct Region {
    Rat x_min;
    Rat x_max;
    PLBoundaryFn lower;
    PLBoundaryFn upper;
    ClosureFlags closure;

    bool operator==(const Region& o) const;
};

struct Violation {
    std::string code;     // e.g. "empty_slice", "interior_vertical"
    std::string message;
    RatPt where{Rat(0), Rat(0)};
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks structural validity. Throws std::invalid_argument on malformed
// boundary data (decreasing breakpoints, length mismatches, empty lists).
ValidationReport validate(const Region& r);

struct Slice {
    bool empty = true;
    Rat lo, hi;
    bool lo_closed = true, hi_closed = true;
};

Slice slice(const Region& r, const Rat& x0);

// Point membership. contains() honours the closure flags; int_contains()
// tests the open interior.
bool contains(const Region& r, const RatPt& p);
bool int_contains(const Region& r, const RatPt& p);

// Corner of the boundary with the two incident edge directions, both
// pointing away from the corner, as primitive integer vectors.
struct CornerData {
    RatPt position;
    std::pair<long long, long long> dir_prev;
    std::pair<long long, long long> dir_next;
};

// Region boundary as a counterclockwise vertex cycle with collinear
// vertices merged. Requires a valid region with nonempty interior.
std::vector<RatPt> polygon(const Region& r);

std::vector<CornerData> corners(const Region& r);

// Rebuilds a Region from a ccw vertex cycle. Fails (nullopt) when the
// polygon is not vertically convex, i.e. some vertical slice disconnects.
std::optional<Region> region_from_polygon(const std::vector<RatPt>& cycle,
                                          const ClosureFlags& closure = {});

// Image of a region under h. Fails when the image is not representable as
// a lower/upper graph pair (vertical convexity lost).
std::optional<Region> apply_affine(const Region& r, const ZAffine2& h);

// Canonical form: merges collinear breakpoints so that equal regions
// compare equal field-wise.
Region canonical(const Region& r);

struct CornerCheck {
    RatPt position;
    bool unimodular = true;
    bool convex = true;
    bool skipped = false;  // on an open side or an excluded line
};

struct DelzantReport {
    bool ok = true;
    std::vector<CornerCheck> corners;
};

// Primitive edge directions + unimodular corner pairs + local convexity.
// Corners lying on one of exclude_lines (vertical lines x = const) are
// reported but not counted against the verdict.
DelzantReport check_delzant(const Region& r,
                            const std::vector<Rat>& exclude_lines = {});

// Searches for h in AGL(2;Z) with h(P) = Q by matching corner frames.
std::optional<ZAffine2> agl_equivalence(const Region& P, const Region& Q);

// Exact area (shoelace over the canonical polygon).
Rat area(const Region& r);

}  // namespace carto
