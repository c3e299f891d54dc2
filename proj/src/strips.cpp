#include "cartopoly/strips.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace carto {

namespace {

// Breakpoint xs of f restricted to [lo, hi], including both ends.
std::vector<Rat> partition_in(const std::vector<const PLBoundaryFn*>& fs,
                              const Rat& lo, const Rat& hi) {
    std::vector<Rat> xs{lo, hi};
    for (const PLBoundaryFn* f : fs)
        for (const Rat& x : f->xs)
            if (x > lo && x < hi) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

PLBoundaryFn restrict_fn(const PLBoundaryFn& f, const Rat& lo, const Rat& hi) {
    PLBoundaryFn out;
    out.xs.push_back(lo);
    out.ys.push_back(f.eval(lo));
    for (size_t i = 0; i < f.xs.size(); ++i)
        if (f.xs[i] > lo && f.xs[i] < hi) {
            out.xs.push_back(f.xs[i]);
            out.ys.push_back(f.ys[i]);
        }
    out.xs.push_back(hi);
    out.ys.push_back(f.eval(hi));
    return out;
}

// sigma_inner properly contained in sigma_outer?
bool strip_contained(const HalfStrip& inner, const HalfStrip& outer) {
    if (inner.sign != outer.sign) return false;
    if (inner.wall_lo() < outer.wall_lo() || inner.wall_hi() > outer.wall_hi())
        return false;
    for (const Rat& x :
         partition_in({&inner.gamma, &outer.gamma}, inner.wall_lo(), inner.wall_hi())) {
        Rat gi = inner.gamma.eval(x);
        Rat go = outer.gamma.eval(x);
        if (inner.sign > 0 ? go > gi : go < gi) return false;
    }
    return true;
}

}  // namespace

bool HalfStrip::contains(const RatPt& p) const {
    if (p.x < wall_lo() || p.x > wall_hi()) return false;
    Rat g = gamma.eval(p.x);
    return sign > 0 ? p.y >= g : p.y <= g;
}

bool HalfStrip::base_contains(const RatPt& p) const {
    if (!contains(p)) return false;
    return sign > 0 ? p.y < center.y + eta / 2 : p.y > center.y - eta / 2;
}

HalfStrip make_half_strip(const RatPt& center, int sign, const Rat& eta,
                          std::optional<PLBoundaryFn> gamma) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("half-strip: sign must be +1 or -1");
    if (!(eta > 0)) throw std::invalid_argument("half-strip: width must be positive");
    HalfStrip s;
    s.center = center;
    s.sign = sign;
    s.eta = eta;
    if (gamma) {
        s.gamma = std::move(*gamma);
        if (s.gamma.xs.size() < 2 || s.gamma.xs.front() != s.wall_lo() ||
            s.gamma.xs.back() != s.wall_hi())
            throw std::invalid_argument(
                "half-strip: bounding curve domain must be the width interval");
        for (size_t i = 0; i < s.gamma.xs.size(); ++i)
            if (sign > 0 ? s.gamma.ys[i] >= center.y : s.gamma.ys[i] <= center.y)
                throw std::invalid_argument(
                    "half-strip: bounding curve must be strictly on the open side "
                    "of the center point");
    } else {
        Rat g = center.y - Rat(sign) * eta / 2;
        s.gamma.xs = {s.wall_lo(), s.wall_hi()};
        s.gamma.ys = {g, g};
    }
    return s;
}

AdmissibilityReport check_admissible(const AdmissibleTriple& triple,
                                     const Region& region, const FocusSet& focus) {
    AdmissibilityReport rep;
    auto bad = [&](int bullet, const std::string& msg) {
        rep.violations.push_back({bullet, msg});
    };
    const auto& strips = triple.strips;
    if (strips.size() != focus.size()) {
        bad(0, "strip count != focus count");
        return rep;
    }
    for (size_t i = 0; i < strips.size(); ++i)
        if (strips[i].center != focus.points[i].pos) {
            bad(0, "strip " + std::to_string(i) +
                       " is not centered at its focus value");
            return rep;
        }

    // bullet 1: bases inside Int(B)
    for (size_t i = 0; i < strips.size(); ++i) {
        const HalfStrip& s = strips[i];
        if (!(s.wall_lo() > region.x_min) || !(s.wall_hi() < region.x_max)) {
            bad(1, "base of strip " + std::to_string(i) +
                       " leaves the interior in x");
            continue;
        }
        bool ok = true;
        for (const Rat& x : partition_in({&s.gamma, &region.lower, &region.upper},
                                         s.wall_lo(), s.wall_hi())) {
            Rat g = s.gamma.eval(x);
            Rat top = s.center.y + Rat(s.sign) * s.eta / 2;
            if (s.sign > 0)
                ok = ok && region.lower.eval(x) < g && top <= region.upper.eval(x);
            else
                ok = ok && region.upper.eval(x) > g && top >= region.lower.eval(x);
        }
        if (!ok)
            bad(1, "base of strip " + std::to_string(i) + " not inside Int(B)");
    }

    // bullet 2: foreign focus values only on the same center line
    for (size_t i = 0; i < focus.size(); ++i)
        for (size_t j = 0; j < strips.size(); ++j) {
            if (i == j) continue;
            if (strips[j].contains(focus.points[i].pos) &&
                focus.points[i].pos.x != strips[j].center.x)
                bad(2, "focus value " + std::to_string(i) +
                           " lies in the strip of slot " + std::to_string(j) +
                           " on a different center line");
        }

    // bullet 3: equal widths on shared center lines
    for (size_t i = 0; i < strips.size(); ++i)
        for (size_t j = i + 1; j < strips.size(); ++j)
            if (strips[i].center.x == strips[j].center.x &&
                strips[i].eta != strips[j].eta)
                bad(3, "strips " + std::to_string(i) + " and " + std::to_string(j) +
                           " share a center line with different widths");

    // bullet 4: pairwise intersections empty or nested
    for (size_t i = 0; i < strips.size(); ++i)
        for (size_t j = i + 1; j < strips.size(); ++j) {
            const HalfStrip& a = strips[i];
            const HalfStrip& b = strips[j];
            Rat lo = rat_max(a.wall_lo(), b.wall_lo());
            Rat hi = rat_min(a.wall_hi(), b.wall_hi());
            if (lo > hi) continue;  // disjoint in x
            if (a.sign == b.sign) {
                if (!strip_contained(a, b) && !strip_contained(b, a) &&
                    !(a.wall_lo() == b.wall_lo() && a.wall_hi() == b.wall_hi() &&
                      a.gamma.xs == b.gamma.xs && a.gamma.ys == b.gamma.ys))
                    bad(4, "strips " + std::to_string(i) + " and " +
                               std::to_string(j) + " overlap without nesting");
            } else {
                const HalfStrip& up = a.sign > 0 ? a : b;
                const HalfStrip& down = a.sign > 0 ? b : a;
                bool disjoint = true;
                for (const Rat& x : partition_in({&up.gamma, &down.gamma}, lo, hi))
                    disjoint = disjoint && up.gamma.eval(x) > down.gamma.eval(x);
                if (!disjoint)
                    bad(4, "strips " + std::to_string(i) + " and " +
                               std::to_string(j) +
                               " of opposite sign intersect");
            }
        }

    // corner rule: a strip containing a corner contains exactly one, on its
    // center line
    std::vector<CornerData> cs = corners(region);
    for (size_t j = 0; j < strips.size(); ++j) {
        std::vector<RatPt> inside;
        for (const CornerData& c : cs)
            if (strips[j].contains(c.position)) inside.push_back(c.position);
        if (inside.empty()) continue;
        if (inside.size() > 1)
            bad(5, "strip " + std::to_string(j) + " contains " +
                       std::to_string(inside.size()) + " corners of B");
        else if (inside[0].x != strips[j].center.x)
            bad(5, "strip " + std::to_string(j) +
                       " contains a corner off its center line");
    }
    return rep;
}

AdmissibleTriple construct_admissible(const Region& region, const FocusSet& focus,
                                      const SignChoice& eps) {
    check_signs(focus, eps);
    if (!complement_connected(focus, eps))
        throw std::invalid_argument(
            "construct_admissible: cut complement disconnected (no admissible "
            "triple exists)");

    // group slots per line
    std::vector<std::vector<size_t>> lines;
    for (size_t s = 0; s < focus.size(); ++s) {
        if (!lines.empty() &&
            focus.points[lines.back().front()].pos.x == focus.points[s].pos.x)
            lines.back().push_back(s);
        else
            lines.push_back({s});
    }

    std::vector<Rat> boundary_xs;
    for (const PLBoundaryFn* f : {&region.lower, &region.upper})
        for (const Rat& x : f->xs) boundary_xs.push_back(x);

    AdmissibleTriple triple;
    triple.strips.resize(focus.size());

    for (size_t li = 0; li < lines.size(); ++li) {
        const Rat& x0 = focus.points[lines[li].front()].pos.x;

        Rat gap = rat_min(x0 - region.x_min, region.x_max - x0);
        if (li > 0) gap = rat_min(gap, x0 - focus.points[lines[li - 1].front()].pos.x);
        if (li + 1 < lines.size())
            gap = rat_min(gap, focus.points[lines[li + 1].front()].pos.x - x0);
        for (const Rat& bx : boundary_xs) {
            if (bx == x0) continue;
            Rat d = bx > x0 ? bx - x0 : x0 - bx;
            gap = rat_min(gap, d);
        }
        // vertical gaps between consecutive foci on the line keep
        // opposite-direction strips disjoint
        for (size_t k = 1; k < lines[li].size(); ++k)
            gap = rat_min(gap, focus.points[lines[li][k]].pos.y -
                                   focus.points[lines[li][k - 1]].pos.y);

        Rat eta = gap / 2;
        for (int tries = 0; tries < 64; ++tries) {
            bool fits = true;
            for (size_t s : lines[li]) {
                const RatPt& c = focus.points[s].pos;
                PLBoundaryFn low = restrict_fn(region.lower, x0 - eta / 2, x0 + eta / 2);
                PLBoundaryFn up = restrict_fn(region.upper, x0 - eta / 2, x0 + eta / 2);
                for (size_t k = 0; k < low.xs.size() && fits; ++k)
                    fits = low.ys[k] < c.y - eta / 2;
                for (size_t k = 0; k < up.xs.size() && fits; ++k)
                    fits = up.ys[k] > c.y + eta / 2;
                if (!fits) break;
            }
            if (fits) break;
            eta /= 2;
            if (tries == 63)
                throw std::logic_error("construct_admissible: width search failed");
        }
        for (size_t s : lines[li])
            triple.strips[s] =
                make_half_strip(focus.points[s].pos, eps[s], eta, std::nullopt);
    }
    return triple;
}

AdmissibleTriple shrink_widths(const AdmissibleTriple& triple, const Rat& factor) {
    if (!(factor > 0 && factor < 1))
        throw std::invalid_argument("shrink_widths: factor must be in (0, 1)");
    AdmissibleTriple out;
    for (const HalfStrip& s : triple.strips) {
        HalfStrip t = s;
        t.eta = s.eta * factor;
        t.gamma = restrict_fn(s.gamma, t.wall_lo(), t.wall_hi());
        out.strips.push_back(t);
    }
    return out;
}

AdmissibleTriple twist_triple(const AdmissibleTriple& triple, const VertElement& h) {
    ZAffine2 g = h.affine();
    long long kk = h.k < 0 ? -h.k : h.k;
    Rat factor = Rat(1) / rat_ll(1 + kk);
    AdmissibleTriple out;
    for (const HalfStrip& s : triple.strips) {
        HalfStrip t;
        t.center = g.apply(s.center);
        t.sign = h.d * s.sign;
        t.eta = s.eta;
        for (size_t i = 0; i < s.gamma.xs.size(); ++i) {
            RatPt q = g.apply({s.gamma.xs[i], s.gamma.ys[i]});
            t.gamma.xs.push_back(q.x);
            t.gamma.ys.push_back(q.y);
        }
        out.strips.push_back(t);
    }
    if (factor != 1) out = shrink_widths(out, factor);
    return out;
}

std::vector<size_t> maximal_strips(const AdmissibleTriple& triple) {
    std::vector<size_t> out;
    for (size_t i = 0; i < triple.strips.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < triple.strips.size() && !dominated; ++j) {
            if (i == j) continue;
            if (strip_contained(triple.strips[i], triple.strips[j]) &&
                !strip_contained(triple.strips[j], triple.strips[i]))
                dominated = true;
            // among identical strips keep the first
            if (j < i && strip_contained(triple.strips[i], triple.strips[j]) &&
                strip_contained(triple.strips[j], triple.strips[i]))
                dominated = true;
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

StripsConnectivity strips_complement_connected(const Region& region,
                                               const AdmissibleTriple& triple) {
    std::vector<size_t> maxi = maximal_strips(triple);

    // refine [x_min, x_max] by strip walls, gamma breakpoints and boundary
    // breakpoints; on each cell every strip is fully active or absent
    std::vector<Rat> cuts{region.x_min, region.x_max};
    for (size_t i : maxi) {
        const HalfStrip& s = triple.strips[i];
        for (const Rat& x : {s.wall_lo(), s.wall_hi()})
            if (x > region.x_min && x < region.x_max) cuts.push_back(x);
        for (const Rat& x : s.gamma.xs)
            if (x > region.x_min && x < region.x_max) cuts.push_back(x);
    }
    for (const PLBoundaryFn* f : {&region.lower, &region.upper})
        for (const Rat& x : f->xs)
            if (x > region.x_min && x < region.x_max) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
        const Rat& a = cuts[ci];
        const Rat& b = cuts[ci + 1];
        std::vector<const HalfStrip*> ups, downs;
        for (size_t i : maxi) {
            const HalfStrip& s = triple.strips[i];
            if (s.wall_lo() <= a && b <= s.wall_hi())
                (s.sign > 0 ? ups : downs).push_back(&s);
        }
        if (ups.empty() && downs.empty()) continue;
        // check both cell ends; linear in between
        for (const Rat& x : {a, b}) {
            Rat lo = region.lower.eval(x);
            Rat hi = region.upper.eval(x);
            for (const HalfStrip* s : downs) lo = rat_max(lo, s->gamma.eval(x));
            for (const HalfStrip* s : ups) hi = rat_min(hi, s->gamma.eval(x));
            if (!(lo < hi)) {
                StripsConnectivity out;
                out.connected = false;
                out.witness_line = x;
                return out;
            }
        }
    }
    return {};
}

}  // namespace carto
