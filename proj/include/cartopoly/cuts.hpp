#pragma once

// Focus-focus bookkeeping: the ordered focus set with its index window, sign
// choices, vertical cuts, the jump function (direct sum and closed form),
// connectivity of the cut complement, and the unique sign reduction.

#include <optional>
#include <vector>

#include "cartopoly/region.hpp"

namespace carto {

struct FocusPoint {
    RatPt pos;
    int multiplicity = 1;  // r_c; only monodromy_at may see r_c > 1
};

// Points sorted by (x, y); stored slot s (1-based) corresponds to index
// s + offset, so windows with non-positive indices are expressible.
struct FocusSet {
    std::vector<FocusPoint> points;
    long long offset = 0;

    size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    long long index_of_slot(size_t slot0) const {
        return static_cast<long long>(slot0) + 1 + offset;
    }
    bool simple() const {
        for (const FocusPoint& f : points)
            if (f.multiplicity != 1) return false;
        return true;
    }
};

using SignChoice = std::vector<int>;  // entries +1 / -1, one per stored slot

// Sorts and validates: pairwise distinct, inside Int(B), at most
// max_per_line points on one vertical line. Throws std::invalid_argument.
FocusSet order_focus(const Region& region, std::vector<FocusPoint> points,
                     long long offset, size_t max_per_line = 8);

void check_signs(const FocusSet& focus, const SignChoice& eps);

// Vertical cut of slot s clipped to B, as a segment on {x = x_s}.
struct CutRay {
    RatPt base;   // the focus value
    int sign;     // +1 up, -1 down
    Rat y_end;    // boundary value of B on the line
};

std::vector<CutRay> cut_rays(const Region& region, const FocusSet& focus,
                             const SignChoice& eps);

// Is p on the cut of stored slot s (cuts are subsets of B)?
bool on_cut(const Region& region, const FocusSet& focus, const SignChoice& eps,
            size_t slot0, const RatPt& p);

// Jump function as the literal signed sum over cuts through p.
// Throws std::domain_error when p is a focus-focus value.
long long j_direct(const Region& region, const FocusSet& focus,
                   const SignChoice& eps, const RatPt& p);

// Jump function through the N_x^{+-} counts of the closed form.
long long j_closed_form(const Region& region, const FocusSet& focus,
                        const SignChoice& eps, const RatPt& p);

// S_eps is path-connected iff on every vertical line the signs are
// nondecreasing with y.
bool complement_connected(const FocusSet& focus, const SignChoice& eps);

// The unique reduction: same jump function, larger complement, connected.
SignChoice reduce_signs(const FocusSet& focus, const SignChoice& eps);

// Connected components of B minus the cuts, split along fully-cut vertical
// lines; components adjacent to a removed line are open on that side.
std::vector<Region> complement_components(const Region& region,
                                          const FocusSet& focus,
                                          const SignChoice& eps);

// x-coordinates of lines whose B-slice is entirely covered by cuts.
std::vector<Rat> disconnecting_lines(const FocusSet& focus, const SignChoice& eps);

}  // namespace carto
