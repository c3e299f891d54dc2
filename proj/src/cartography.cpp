#include "cartopoly/cartography.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace carto {

namespace {

std::vector<Rat> distinct_lines(const FocusSet& focus) {
    std::vector<Rat> xs;
    for (const FocusPoint& f : focus.points)
        if (xs.empty() || xs.back() != f.pos.x) xs.push_back(f.pos.x);
    return xs;
}

// Aggregate centered-shear exponent picked up when crossing the line from
// left to right: sgn * sum over foci on the line of (eps0_i - eps_i)/2.
long long crossing_exponent(const Presentation& pres, const SignChoice& eps,
                            const Rat& line_x) {
    long long k = 0;
    for (size_t s = 0; s < pres.focus.size(); ++s)
        if (pres.focus.points[s].pos.x == line_x)
            k += k_coeff(pres.ref_signs[s], eps[s], pres.global_sign);
    return k;
}

// Slot (0-based) of the first positive paper index, or focus.size() if the
// window has none.
size_t first_positive_slot(const FocusSet& focus) {
    for (size_t s = 0; s < focus.size(); ++s)
        if (focus.index_of_slot(s) >= 1) return s;
    return focus.size();
}

}  // namespace

Presentation make_presentation(Region region, FocusSet focus, SignChoice ref_signs,
                               int global_sign) {
    Presentation p{std::move(region), std::move(focus), std::move(ref_signs),
                   global_sign};
    ValidationReport rep = validate_presentation(p);
    if (!rep.ok())
        throw std::invalid_argument("make_presentation: " +
                                    rep.violations.front().message);
    return p;
}

ValidationReport validate_presentation(const Presentation& p) {
    ValidationReport rep = validate(p.region);
    for (const FocusPoint& f : p.focus.points)
        if (!int_contains(p.region, f.pos))
            rep.violations.push_back({"focus_outside",
                                      "focus-focus value not in the region interior",
                                      f.pos});
    if (p.ref_signs.size() != p.focus.size())
        rep.violations.push_back(
            {"sign_length", "reference sign count " +
                                std::to_string(p.ref_signs.size()) +
                                " != focus count " + std::to_string(p.focus.size()),
             {Rat(0), Rat(0)}});
    else
        for (int e : p.ref_signs)
            if (e != 1 && e != -1)
                rep.violations.push_back({"sign_value",
                                          "reference signs must be +1 or -1",
                                          {Rat(0), Rat(0)}});
    if (p.global_sign != 1 && p.global_sign != -1)
        rep.violations.push_back(
            {"global_sign", "global sign must be +1 or -1", {Rat(0), Rat(0)}});
    return rep;
}

size_t PiecewiseVertMap::slab_of(const Rat& x) const {
    size_t lo = 0, hi = walls.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (walls[mid] <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

PiecewiseVertMap PiecewiseVertMap::compose(const PiecewiseVertMap& other) const {
    std::vector<Rat> merged = walls;
    merged.insert(merged.end(), other.walls.begin(), other.walls.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    PiecewiseVertMap out;
    out.walls = merged;
    for (size_t i = 0; i <= merged.size(); ++i) {
        // representative x in slab i: left wall (pieces are right-continuous
        // at their own wall) or anything below the first wall
        Rat x = merged.empty() ? Rat(0)
                               : (i == 0 ? merged.front() - 1 : merged[i - 1]);
        out.pieces.push_back(piece_for_x(x).compose(other.piece_for_x(x)));
    }
    return out;
}

bool PiecewiseVertMap::is_identity() const {
    for (const ZAffine2& p : pieces)
        if (p != ZAffine2::identity()) return false;
    return true;
}

long long k_coeff(int eps_i, int eps_hat_i, int global_sign) {
    return static_cast<long long>(global_sign) * (eps_i - eps_hat_i) / 2;
}

namespace {

PiecewiseVertMap one_line_map(const Rat& line_x, long long shear_power,
                              bool act_right) {
    if (shear_power == 0) return PiecewiseVertMap::identity_map();
    PiecewiseVertMap m;
    m.walls = {line_x};
    ZAffine2 sh = centered_shear(line_x, shear_power);
    if (act_right)
        m.pieces = {ZAffine2::identity(), sh};
    else
        m.pieces = {sh, ZAffine2::identity()};
    return m;
}

}  // namespace

PiecewiseVertMap l_map(long long paper_index, const FocusSet& focus,
                       const SignChoice& eps, const SignChoice& eps_hat,
                       int global_sign) {
    check_signs(focus, eps);
    check_signs(focus, eps_hat);
    if (paper_index <= 0) return PiecewiseVertMap::identity_map();
    long long slot = paper_index - focus.offset;  // 1-based
    if (slot < 1 || slot > static_cast<long long>(focus.size()))
        throw std::out_of_range("l_map: index outside the focus window");
    size_t s = static_cast<size_t>(slot - 1);
    long long k = k_coeff(eps[s], eps_hat[s], global_sign);
    return one_line_map(focus.points[s].pos.x, k, /*act_right=*/true);
}

PiecewiseVertMap r_map(long long paper_index, const FocusSet& focus,
                       const SignChoice& eps, const SignChoice& eps_hat,
                       int global_sign) {
    check_signs(focus, eps);
    check_signs(focus, eps_hat);
    if (paper_index > 0) return PiecewiseVertMap::identity_map();
    long long slot = paper_index - focus.offset;
    if (slot < 1 || slot > static_cast<long long>(focus.size()))
        throw std::out_of_range("r_map: index outside the focus window");
    size_t s = static_cast<size_t>(slot - 1);
    long long k = k_coeff(eps[s], eps_hat[s], global_sign);
    return one_line_map(focus.points[s].pos.x, -k, /*act_right=*/false);
}

Region apply_piecewise(const PiecewiseVertMap& map, const Region& r) {
    for (const ZAffine2& p : map.pieces) {
        auto v = is_vert(p);
        if (!v || v->d != 1)
            throw std::invalid_argument(
                "apply_piecewise: pieces must be orientation-preserving "
                "vertical maps");
    }
    std::vector<Rat> part;
    auto add_xs = [&](const std::vector<Rat>& xs) {
        for (const Rat& x : xs)
            if (x >= r.x_min && x <= r.x_max) part.push_back(x);
    };
    add_xs(r.lower.xs);
    add_xs(r.upper.xs);
    add_xs(map.walls);
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());

    Region out;
    out.x_min = r.x_min;
    out.x_max = r.x_max;
    out.closure = r.closure;
    for (const Rat& x : part) {
        // on a wall both pieces agree, so piece_for_x is fine
        const ZAffine2& g = map.piece_for_x(x);
        out.lower.xs.push_back(x);
        out.lower.ys.push_back(g.apply({x, r.lower.eval(x)}).y);
        out.upper.xs.push_back(x);
        out.upper.ys.push_back(g.apply({x, r.upper.eval(x)}).y);
    }
    return canonical(out);
}

TransitionResult transition(const Presentation& pres, const SignChoice& eps_hat) {
    check_signs(pres.focus, eps_hat);
    if (!pres.focus.simple())
        throw std::invalid_argument("transition: requires a simple focus set");

    PiecewiseVertMap t = PiecewiseVertMap::identity_map();
    // descending positive indices, then ascending non-positive ones; the
    // factors commute, the order follows the defining composition
    for (size_t s = pres.focus.size(); s-- > 0;) {
        long long i = pres.focus.index_of_slot(s);
        if (i >= 1)
            t = t.compose(l_map(i, pres.focus, pres.ref_signs, eps_hat,
                                pres.global_sign));
    }
    for (size_t s = 0; s < pres.focus.size(); ++s) {
        long long i = pres.focus.index_of_slot(s);
        if (i <= 0)
            t = r_map(i, pres.focus, pres.ref_signs, eps_hat, pres.global_sign)
                    .compose(t);
    }

    Presentation img;
    img.region = apply_piecewise(t, pres.region);
    img.focus = pres.focus;
    for (FocusPoint& f : img.focus.points) f.pos = t.apply(f.pos);
    img.ref_signs = eps_hat;
    img.global_sign = pres.global_sign;
    return {t, img};
}

PiecewiseVertMap develop_atlas(const Presentation& pres, const SignChoice& eps) {
    check_signs(pres.focus, eps);
    if (!pres.focus.simple())
        throw std::invalid_argument("develop_atlas: requires a simple focus set");
    if (!complement_connected(pres.focus, eps))
        throw std::invalid_argument(
            "develop_atlas: cut complement disconnected; reduce the signs first");

    PiecewiseVertMap m;
    m.walls = distinct_lines(pres.focus);
    m.pieces.assign(m.walls.size() + 1, ZAffine2::identity());
    if (m.walls.empty()) return m;

    // basepoint slab: between the last non-positive-index line and the
    // first positive-index line
    size_t fp = first_positive_slot(pres.focus);
    size_t base;
    if (fp == pres.focus.size()) {
        base = m.walls.size();  // rightmost
    } else {
        const Rat& x_first_pos = pres.focus.points[fp].pos.x;
        base = 0;
        while (base < m.walls.size() && m.walls[base] < x_first_pos) ++base;
    }

    for (size_t j = base; j < m.walls.size(); ++j) {
        long long k = crossing_exponent(pres, eps, m.walls[j]);
        m.pieces[j + 1] = m.pieces[j].compose(centered_shear(m.walls[j], k));
    }
    for (size_t j = base; j-- > 0;) {
        long long k = crossing_exponent(pres, eps, m.walls[j]);
        m.pieces[j] = m.pieces[j + 1].compose(centered_shear(m.walls[j], -k));
    }
    return m;
}

JumpReport verify_jump(const PiecewiseVertMap& map, const Presentation& pres,
                       const SignChoice& eps) {
    check_signs(pres.focus, eps);
    JumpReport rep;
    for (size_t w = 0; w < map.walls.size(); ++w) {
        const Rat& x = map.walls[w];
        const ZAffine2& L = map.pieces[w];
        const ZAffine2& R = map.pieces[w + 1];

        long long k = crossing_exponent(pres, eps, x);
        IntMat2 want = L.linear() * IntMat2{1, 0, k, 1};
        if (!(want == R.linear()))
            rep.violations.push_back(
                {x, -1, "linear",
                 "pieces across x = " + rat_str(x) +
                     " do not differ by the prescribed centered shear T^" +
                     std::to_string(k)});

        // pointwise agreement on every sub-segment of the line
        std::vector<Rat> ys{pres.region.lower.eval(x)};
        for (const FocusPoint& f : pres.focus.points)
            if (f.pos.x == x) ys.push_back(f.pos.y);
        ys.push_back(pres.region.upper.eval(x));
        for (size_t seg = 0; seg + 1 < ys.size(); ++seg) {
            RatPt p{x, (ys[seg] + ys[seg + 1]) / 2};
            if (L.apply(p) != R.apply(p))
                rep.violations.push_back(
                    {x, static_cast<long long>(seg), "continuity",
                     "pieces disagree at (" + rat_str(p.x) + ", " + rat_str(p.y) +
                         ")"});
        }
    }
    return rep;
}

IntMat2 monodromy_at(const Presentation& pres, const SignChoice& eps,
                     long long paper_index,
                     const std::optional<std::pair<Rat, Rat>>& window) {
    long long slot = paper_index - pres.focus.offset;
    if (slot < 1 || slot > static_cast<long long>(pres.focus.size()))
        throw std::out_of_range("monodromy_at: index outside the focus window");
    size_t s = static_cast<size_t>(slot - 1);
    const RatPt& c = pres.focus.points[s].pos;

    // crossing heights adjacent to c on its line
    Rat y_below = pres.region.lower.eval(c.x);
    Rat y_above = pres.region.upper.eval(c.x);
    for (size_t m = 0; m < pres.focus.size(); ++m) {
        if (m == s || pres.focus.points[m].pos.x != c.x) continue;
        const Rat& ym = pres.focus.points[m].pos.y;
        if (ym < c.y) y_below = rat_max(y_below, ym);
        if (ym > c.y) y_above = rat_min(y_above, ym);
    }
    Rat yb = (y_below + c.y) / 2;
    Rat ya = (y_above + c.y) / 2;
    if (window) {
        yb = (window->first + c.y) / 2;
        ya = (window->second + c.y) / 2;
        for (size_t m = 0; m < pres.focus.size(); ++m) {
            if (m == s || pres.focus.points[m].pos.x != c.x) continue;
            const Rat& ym = pres.focus.points[m].pos.y;
            if (ym >= window->first && ym <= window->second)
                throw std::invalid_argument(
                    "monodromy_at: window contains another focus value");
        }
    }

    // the sign-change atlas is blind to multiplicities; only the chart
    // twists below weight them
    Presentation simple = pres;
    for (FocusPoint& f : simple.focus.points) f.multiplicity = 1;
    PiecewiseVertMap atlas = develop_atlas(simple, eps);

    // reference-structure chart twist when crossing the line at height y,
    // weighted by multiplicity
    auto twist = [&](const Rat& y) -> long long {
        long long wsum = 0;
        for (size_t m = 0; m < pres.focus.size(); ++m) {
            const FocusPoint& f = pres.focus.points[m];
            if (f.pos.x != c.x) continue;
            bool member = pres.ref_signs[m] > 0 ? y >= f.pos.y : y <= f.pos.y;
            if (member) wsum += pres.ref_signs[m] * f.multiplicity;
        }
        return -static_cast<long long>(pres.global_sign) * wsum;
    };

    const ZAffine2& right_piece = atlas.pieces[atlas.slab_of(c.x)];
    IntMat2 R = right_piece.linear();
    long long det = R.det();
    IntMat2 Rinv{det * R.d, -det * R.b, -det * R.c, det * R.a};
    IntMat2 Jb{1, 0, twist(yb), 1};
    IntMat2 Ja{1, 0, twist(ya), 1};
    long long detJa = Ja.det();
    IntMat2 Ja_inv{detJa * Ja.d, -detJa * Ja.b, -detJa * Ja.c, detJa * Ja.a};
    // carry the chart once around the loop: below first, back above
    return Rinv * (Ja_inv * Jb) * R;
}

Presentation vert_twist(const Presentation& pres, const VertElement& h) {
    ZAffine2 g = h.affine();
    auto img = apply_affine(pres.region, g);
    if (!img)
        throw std::logic_error("vert_twist: vertical map must preserve regions");
    Presentation out;
    out.region = *img;
    if (h.d == -1) {
        std::swap(out.region.closure.lower, out.region.closure.upper);
    }

    std::vector<std::pair<FocusPoint, int>> moved;
    for (size_t s = 0; s < pres.focus.size(); ++s) {
        FocusPoint f = pres.focus.points[s];
        f.pos = g.apply(f.pos);
        moved.push_back({f, h.d * pres.ref_signs[s]});
    }
    std::sort(moved.begin(), moved.end(), [](const auto& a, const auto& b) {
        if (a.first.pos.x != b.first.pos.x) return a.first.pos.x < b.first.pos.x;
        return a.first.pos.y < b.first.pos.y;
    });
    out.focus.offset = pres.focus.offset;
    for (auto& [f, e] : moved) {
        out.focus.points.push_back(f);
        out.ref_signs.push_back(e);
    }
    out.global_sign = pres.global_sign * h.d;
    return out;
}

std::vector<FamilyEntry> cartographic_family(const Presentation& pres,
                                             size_t max_focus) {
    size_t n = pres.focus.size();
    if (n > max_focus)
        throw std::invalid_argument("cartographic_family: focus count " +
                                    std::to_string(n) + " exceeds bound " +
                                    std::to_string(max_focus));
    std::vector<FamilyEntry> out;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        SignChoice eps(n);
        for (size_t s = 0; s < n; ++s) eps[s] = (mask >> s) & 1 ? -1 : 1;
        if (!complement_connected(pres.focus, eps)) continue;
        Region img = transition(pres, eps).image.region;
        bool dup = false;
        for (const FamilyEntry& e : out)
            if (e.image == img) {
                dup = true;
                break;
            }
        if (!dup) out.push_back({eps, img});
    }
    return out;
}

}  // namespace carto
