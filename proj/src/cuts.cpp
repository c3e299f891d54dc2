#include "cartopoly/cuts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace carto {

FocusSet order_focus(const Region& region, std::vector<FocusPoint> points,
                     long long offset, size_t max_per_line) {
    for (const FocusPoint& f : points) {
        if (!int_contains(region, f.pos))
            throw std::invalid_argument(
                "order_focus: focus-focus value not in the region interior: (" +
                rat_str(f.pos.x) + ", " + rat_str(f.pos.y) + ")");
        if (f.multiplicity < 1)
            throw std::invalid_argument("order_focus: multiplicity must be >= 1");
    }
    std::sort(points.begin(), points.end(),
              [](const FocusPoint& a, const FocusPoint& b) {
                  if (a.pos.x != b.pos.x) return a.pos.x < b.pos.x;
                  return a.pos.y < b.pos.y;
              });
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i].pos == points[i - 1].pos)
            throw std::invalid_argument("order_focus: duplicate focus-focus value");

    std::map<Rat, size_t> per_line;
    for (const FocusPoint& f : points) {
        if (++per_line[f.pos.x] > max_per_line)
            throw std::invalid_argument(
                "order_focus: too many focus-focus values on one vertical line");
    }
    // when indices 0 and 1 both lie in the window, x_0 < x_1 is required
    long long slot0 = -offset;      // 1-based slot of paper index 0
    long long slot1 = 1 - offset;   // 1-based slot of paper index 1
    if (slot0 >= 1 && slot1 <= static_cast<long long>(points.size())) {
        if (points[slot0 - 1].pos.x == points[slot1 - 1].pos.x)
            throw std::invalid_argument(
                "order_focus: indices 0 and 1 must lie on distinct vertical lines");
    }
    FocusSet fs;
    fs.points = std::move(points);
    fs.offset = offset;
    return fs;
}

void check_signs(const FocusSet& focus, const SignChoice& eps) {
    if (eps.size() != focus.size())
        throw std::invalid_argument("sign choice length " +
                                    std::to_string(eps.size()) +
                                    " != focus count " +
                                    std::to_string(focus.size()));
    for (int e : eps)
        if (e != 1 && e != -1)
            throw std::invalid_argument("sign choice entries must be +1 or -1");
}

std::vector<CutRay> cut_rays(const Region& region, const FocusSet& focus,
                             const SignChoice& eps) {
    check_signs(focus, eps);
    std::vector<CutRay> rays;
    for (size_t s = 0; s < focus.size(); ++s) {
        const RatPt& c = focus.points[s].pos;
        CutRay r;
        r.base = c;
        r.sign = eps[s];
        r.y_end = eps[s] > 0 ? region.upper.eval(c.x) : region.lower.eval(c.x);
        rays.push_back(r);
    }
    return rays;
}

bool on_cut(const Region& region, const FocusSet& focus, const SignChoice& eps,
            size_t slot0, const RatPt& p) {
    const RatPt& c = focus.points[slot0].pos;
    if (p.x != c.x) return false;
    if (eps[slot0] > 0 ? p.y < c.y : p.y > c.y) return false;
    return contains(region, p);
}

long long j_direct(const Region& region, const FocusSet& focus,
                   const SignChoice& eps, const RatPt& p) {
    check_signs(focus, eps);
    for (const FocusPoint& f : focus.points)
        if (f.pos == p)
            throw std::domain_error("j: point is a focus-focus value");
    long long j = 0;
    for (size_t s = 0; s < focus.size(); ++s)
        if (on_cut(region, focus, eps, s, p)) j += eps[s];
    return j;
}

long long j_closed_form(const Region& region, const FocusSet& focus,
                        const SignChoice& eps, const RatPt& p) {
    check_signs(focus, eps);
    if (!contains(region, p)) return 0;

    // slots on the line x = p.x, already sorted by y
    std::vector<size_t> line;
    for (size_t s = 0; s < focus.size(); ++s) {
        if (focus.points[s].pos.x == p.x) {
            if (focus.points[s].pos.y == p.y)
                throw std::domain_error("j: point is a focus-focus value");
            line.push_back(s);
        }
    }
    if (line.empty()) return 0;

    long long n_plus = 0, n_minus = 0;
    for (size_t s : line) (eps[s] > 0 ? n_plus : n_minus) += 1;

    // k = number of focus values on the line strictly below p
    long long k = 0;
    for (size_t s : line)
        if (focus.points[s].pos.y < p.y) ++k;

    long long n = static_cast<long long>(line.size());
    if (k == 0) return -n_minus;          // below y_{i_1}
    if (k == n) return n_plus;            // above y_{i_N}
    return -n_minus + k;                  // between the k-th and (k+1)-th
}

namespace {

// Groups slots by vertical line, in stored (x, y) order.
std::vector<std::vector<size_t>> lines_of(const FocusSet& focus) {
    std::vector<std::vector<size_t>> lines;
    for (size_t s = 0; s < focus.size(); ++s) {
        if (!lines.empty() &&
            focus.points[lines.back().front()].pos.x == focus.points[s].pos.x)
            lines.back().push_back(s);
        else
            lines.push_back({s});
    }
    return lines;
}

bool line_disconnects(const FocusSet& focus, const SignChoice& eps,
                      const std::vector<size_t>& line) {
    // the slice survives iff all -1 signs sit below all +1 signs
    bool seen_plus = false;
    for (size_t s : line) {  // increasing y
        if (eps[s] > 0)
            seen_plus = true;
        else if (seen_plus)
            return true;
    }
    return false;
}

}  // namespace

bool complement_connected(const FocusSet& focus, const SignChoice& eps) {
    check_signs(focus, eps);
    for (const auto& line : lines_of(focus))
        if (line_disconnects(focus, eps, line)) return false;
    return true;
}

std::vector<Rat> disconnecting_lines(const FocusSet& focus, const SignChoice& eps) {
    check_signs(focus, eps);
    std::vector<Rat> xs;
    for (const auto& line : lines_of(focus))
        if (line_disconnects(focus, eps, line))
            xs.push_back(focus.points[line.front()].pos.x);
    return xs;
}

SignChoice reduce_signs(const FocusSet& focus, const SignChoice& eps) {
    check_signs(focus, eps);
    if (!focus.simple())
        throw std::invalid_argument("reduce_signs: requires a simple focus set");
    SignChoice out = eps;
    for (const auto& line : lines_of(focus)) {
        if (!line_disconnects(focus, eps, line)) continue;
        size_t n_minus = 0;
        for (size_t s : line)
            if (eps[s] < 0) ++n_minus;
        // lowest |N^-| slots get -1, the rest +1
        for (size_t i = 0; i < line.size(); ++i)
            out[line[i]] = i < n_minus ? -1 : 1;
    }
    return out;
}

std::vector<Region> complement_components(const Region& region,
                                          const FocusSet& focus,
                                          const SignChoice& eps) {
    check_signs(focus, eps);
    if (!focus.simple())
        throw std::invalid_argument(
            "complement_components: requires a simple focus set");
    std::vector<Rat> split = disconnecting_lines(focus, eps);

    std::vector<Region> comps;
    Rat left = region.x_min;
    bool left_open = !region.closure.left;
    for (size_t i = 0; i <= split.size(); ++i) {
        Rat right = i < split.size() ? split[i] : region.x_max;
        bool right_open = i < split.size() ? true : !region.closure.right;

        Region sub;
        sub.x_min = left;
        sub.x_max = right;
        sub.closure = region.closure;
        sub.closure.left = !left_open;
        sub.closure.right = !right_open;
        for (const PLBoundaryFn* src :
             {&region.lower, &region.upper}) {
            PLBoundaryFn dst;
            dst.xs.push_back(left);
            dst.ys.push_back(src->eval(left));
            for (size_t k = 0; k < src->xs.size(); ++k) {
                if (src->xs[k] > left && src->xs[k] < right) {
                    dst.xs.push_back(src->xs[k]);
                    dst.ys.push_back(src->ys[k]);
                }
            }
            dst.xs.push_back(right);
            dst.ys.push_back(src->eval(right));
            if (src == &region.lower)
                sub.lower = dst;
            else
                sub.upper = dst;
        }
        comps.push_back(canonical(sub));
        left = right;
        left_open = true;
    }
    return comps;
}

}  // namespace carto
