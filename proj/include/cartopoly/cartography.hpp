#pragma once

// Sign-change calculus on presentations: the k-coefficients, the one-line
// piecewise shears acting right (positive indices) or left (non-positive
// indices) of a focus line, their compositions into transition maps, chamber
// atlases with the derivative-jump condition, monodromy verification, the
// Vert(2;Z) freedom, and enumeration of the image family.

#include <optional>
#include <vector>

#include "cartopoly/cuts.hpp"
#include "cartopoly/region.hpp"
#include "cartopoly/zaffine.hpp"

namespace carto {

// A presentation models a system through its reference cartographic image:
// the stored region is the image for the reference sign choice, so the
// identity map is the reference chart away from the reference cuts.
struct Presentation {
    Region region;
    FocusSet focus;
    SignChoice ref_signs;
    int global_sign = 1;
};

Presentation make_presentation(Region region, FocusSet focus, SignChoice ref_signs,
                               int global_sign = 1);

ValidationReport validate_presentation(const Presentation& p);

// Chamber-indexed family of Vert(2;Z) elements: one piece per vertical slab
// between consecutive focus lines. Pieces of a valid map agree pointwise on
// the walls, so evaluation on a wall is unambiguous.
struct PiecewiseVertMap {
    std::vector<Rat> walls;        // distinct focus x-coordinates, increasing
    std::vector<ZAffine2> pieces;  // walls.size() + 1, left to right

    static PiecewiseVertMap identity_map() { return {{}, {ZAffine2::identity()}}; }

    size_t slab_of(const Rat& x) const;  // on a wall: the right slab
    const ZAffine2& piece_for_x(const Rat& x) const { return pieces[slab_of(x)]; }
    RatPt apply(const RatPt& p) const { return piece_for_x(p.x).apply(p); }

    // (*this) o other; both preserve x, so slabs compose slab-wise.
    PiecewiseVertMap compose(const PiecewiseVertMap& other) const;
    bool is_identity() const;
};

// sgn(f_eps_hat) * (eps_i - eps_hat_i) / 2, in {-1, 0, +1}.
long long k_coeff(int eps_i, int eps_hat_i, int global_sign);

// One-line maps by paper index i (window given by the focus set):
// l acts as the shear T^{k_i} centered on the line for x >= x_i when i > 0
// and is the identity otherwise; r acts as T^{-k_i} for x <= x_i when
// i <= 0 and is the identity otherwise.
PiecewiseVertMap l_map(long long paper_index, const FocusSet& focus,
                       const SignChoice& eps, const SignChoice& eps_hat,
                       int global_sign);
PiecewiseVertMap r_map(long long paper_index, const FocusSet& focus,
                       const SignChoice& eps, const SignChoice& eps_hat,
                       int global_sign);

struct TransitionResult {
    PiecewiseVertMap map;
    Presentation image;
};

// The normalized transition r o l from the stored reference signs to
// eps_hat; it is the identity on the basepoint chamber.
TransitionResult transition(const Presentation& pres, const SignChoice& eps_hat);

// Develops the atlas of the cartographic map for eps by propagating from
// the basepoint chamber across each focus line using the derivative-jump
// relation and continuity along the shared wall. Requires the complement of
// the eps-cuts to be connected.
PiecewiseVertMap develop_atlas(const Presentation& pres, const SignChoice& eps);

struct JumpViolation {
    Rat line_x;
    long long segment = -1;  // -1: linear relation on the whole line
    std::string kind;        // "linear" | "continuity"
    std::string message;
};

struct JumpReport {
    std::vector<JumpViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks, per focus line, that the linear parts of the two adjacent pieces
// differ by the centered shear prescribed by the jump function and that the
// pieces agree pointwise on every sub-segment of the line.
JumpReport verify_jump(const PiecewiseVertMap& map, const Presentation& pres,
                       const SignChoice& eps);

// Affine holonomy of a small loop around the focus value with paper index i,
// developed with the atlas for eps; equals ((1,0),(sgn*r_c,1)).
// If window is supplied it must isolate the focus value on its line.
IntMat2 monodromy_at(const Presentation& pres, const SignChoice& eps,
                     long long paper_index,
                     const std::optional<std::pair<Rat, Rat>>& window = std::nullopt);

// Composes a Vert(2;Z) element with the presentation: region and focus
// values move by h; a flip (d = -1) reverses cut directions and the global
// sign.
Presentation vert_twist(const Presentation& pres, const VertElement& h);

struct FamilyEntry {
    SignChoice eps;
    Region image;
};

// Images over all sign choices with connected cut complement, deduplicated
// by exact region equality.
std::vector<FamilyEntry> cartographic_family(const Presentation& pres,
                                             size_t max_focus = 12);

// Image of a region under a piecewise vertical map (exact).
Region apply_piecewise(const PiecewiseVertMap& map, const Region& r);

}  // namespace carto
