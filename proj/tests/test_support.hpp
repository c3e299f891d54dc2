#pragma once

// Shared test machinery: seeded random generators for regions, focus sets
// and affine maps, and the rasterized flood-fill connectivity oracle used to
// cross-check the sign-monotonicity criterion.

#include <random>
#include <vector>

#include "cartopoly/cartography.hpp"
#include "cartopoly/cuts.hpp"
#include "cartopoly/region.hpp"

namespace carto::testsupport {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, long lo, long hi, long max_den = 4) {
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return rat(num(rng), d);
}

inline int random_sign(Rng& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
}

inline SignChoice random_signs(Rng& rng, size_t n) {
    SignChoice eps(n);
    for (int& e : eps) e = random_sign(rng);
    return eps;
}

// Bounded valid region with a few breakpoints on each boundary; slices are
// at least 4 units tall so focus points and raster oracles have room.
inline Region random_region(Rng& rng) {
    std::uniform_int_distribution<int> nbp(0, 3);
    std::uniform_int_distribution<long> span(6, 12);
    Region r;
    r.x_min = rat(0);
    r.x_max = rat(span(rng));

    auto chain = [&](long base, int dir) {
        PLBoundaryFn f;
        int n = nbp(rng);
        std::vector<Rat> xs{r.x_min, r.x_max};
        for (int i = 0; i < n; ++i) xs.push_back(random_rat(rng, 1, span(rng) - 1, 2));
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (const Rat& x : xs) {
            if (x > r.x_min && x >= r.x_max) continue;
            f.xs.push_back(x);
            f.ys.push_back(rat(base) + rat_ll(dir) * random_rat(rng, 0, 2, 2));
        }
        if (f.xs.back() != r.x_max) {
            f.xs.push_back(r.x_max);
            f.ys.push_back(rat(base) + rat_ll(dir) * random_rat(rng, 0, 2, 2));
        }
        return f;
    };
    r.lower = chain(0, -1);
    r.upper = chain(6, +1);
    return r;
}

// Focus points inside the region with generous separation: distinct lines
// at least 1 apart, same-line points at least 1 apart vertically, 1/2 from
// the boundary. Keeps the 400x400 flood-fill oracle reliable.
inline FocusSet random_focus(Rng& rng, const Region& region, size_t max_points,
                             long long offset = 0) {
    std::uniform_int_distribution<size_t> count(0, max_points);
    size_t want = count(rng);
    std::vector<FocusPoint> pts;
    int attempts = 0;
    while (pts.size() < want && attempts++ < 200) {
        Rat x = random_rat(rng, 1, 100, 2);
        // rescale into (x_min + 1/2, x_max - 1/2)
        Rat width = region.x_max - region.x_min - 1;
        x = region.x_min + Rat(1, 2) + (x / 100) * width;
        x.canonicalize();
        bool same_line = false, too_close = false;
        for (const FocusPoint& f : pts) {
            Rat d = f.pos.x - x;
            if (d < 0) d = -d;
            if (d == 0) same_line = true;
            else if (d < 1) too_close = true;
        }
        if (too_close) continue;
        // 50%: reuse an existing line to exercise same-line stacks
        if (!same_line && !pts.empty() &&
            std::uniform_int_distribution<int>(0, 1)(rng)) {
            x = pts[std::uniform_int_distribution<size_t>(0, pts.size() - 1)(rng)]
                    .pos.x;
        }
        Rat lo = region.lower.eval(x) + Rat(1, 2);
        Rat hi = region.upper.eval(x) - Rat(1, 2);
        if (!(lo < hi)) continue;
        Rat t = random_rat(rng, 0, 16, 1) / 16;
        Rat y = lo + t * (hi - lo);
        y.canonicalize();
        bool ok = true;
        for (const FocusPoint& f : pts)
            if (f.pos.x == x) {
                Rat d = f.pos.y - y;
                if (d < 0) d = -d;
                if (d < 1) ok = false;
            }
        if (!ok) continue;
        pts.push_back({{x, y}, 1});
    }
    return order_focus(region, pts, offset);
}

inline ZAffine2 random_agl(Rng& rng, long max_entry = 5) {
    std::uniform_int_distribution<long> e(-max_entry, max_entry);
    while (true) {
        IntMat2 A{e(rng), e(rng), e(rng), e(rng)};
        if (A.det() != 1 && A.det() != -1) continue;
        return {A, {random_rat(rng, -3, 3, 2), random_rat(rng, -3, 3, 2)}};
    }
}

inline RatPt random_point_in(Rng& rng, const Region& r) {
    while (true) {
        Rat t = random_rat(rng, 0, 64, 1) / 64;
        Rat x = r.x_min + t * (r.x_max - r.x_min);
        x.canonicalize();
        Rat lo = r.lower.eval(x), hi = r.upper.eval(x);
        if (!(lo < hi)) continue;
        Rat u = random_rat(rng, 0, 64, 1) / 64;
        Rat y = lo + u * (hi - lo);
        y.canonicalize();
        return {x, y};
    }
}

// Rasterized flood fill of Int(B) minus the cuts: cells connect 4-ways
// unless the connecting segment crosses a cut ray.
inline bool floodfill_connected(const Region& region, const FocusSet& focus,
                                const SignChoice& eps, int n = 400) {
    double x_min = rat_d(region.x_min), x_max = rat_d(region.x_max);
    double y_min = 1e300, y_max = -1e300;
    for (const Rat& y : region.lower.ys) y_min = std::min(y_min, rat_d(y));
    for (const Rat& y : region.upper.ys) y_max = std::max(y_max, rat_d(y));
    double dx = (x_max - x_min) / n, dy = (y_max - y_min) / n;

    std::vector<double> lo(n), hi(n), cx(n);
    for (int i = 0; i < n; ++i) {
        cx[i] = x_min + (i + 0.5) * dx;
        Rat xr(cx[i]);
        lo[i] = rat_d(region.lower.eval(xr));
        hi[i] = rat_d(region.upper.eval(xr));
    }

    struct Cut {
        double x, y;
        int sign;
    };
    std::vector<Cut> cuts;
    for (size_t s = 0; s < focus.size(); ++s)
        cuts.push_back({rat_d(focus.points[s].pos.x), rat_d(focus.points[s].pos.y),
                        eps[s]});

    auto free_cell = [&](int i, int j) {
        double y = y_min + (j + 0.5) * dy;
        if (y <= lo[i] || y >= hi[i]) return false;
        for (const Cut& c : cuts)
            if (cx[i] == c.x && (c.sign > 0 ? y >= c.y : y <= c.y)) return false;
        return true;
    };
    // a horizontal step blocks when it crosses a cut at the step's height
    auto blocked = [&](int i1, int j, int i2) {
        double y = y_min + (j + 0.5) * dy;
        for (const Cut& c : cuts) {
            if ((cx[i1] - c.x) * (cx[i2] - c.x) <= 0 &&
                (c.sign > 0 ? y >= c.y : y <= c.y))
                return true;
        }
        return false;
    };

    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    auto idx = [&](int i, int j) { return static_cast<size_t>(i) * n + j; };
    int components = 0;
    for (int i0 = 0; i0 < n && components < 2; ++i0)
        for (int j0 = 0; j0 < n && components < 2; ++j0) {
            if (seen[idx(i0, j0)] || !free_cell(i0, j0)) continue;
            ++components;
            std::vector<std::pair<int, int>> stack{{i0, j0}};
            seen[idx(i0, j0)] = 1;
            while (!stack.empty()) {
                auto [i, j] = stack.back();
                stack.pop_back();
                auto push = [&](int i2, int j2) {
                    if (i2 < 0 || i2 >= n || j2 < 0 || j2 >= n) return;
                    if (seen[idx(i2, j2)] || !free_cell(i2, j2)) return;
                    if (i2 != i && blocked(i, j, i2)) return;
                    seen[idx(i2, j2)] = 1;
                    stack.push_back({i2, j2});
                };
                push(i - 1, j);
                push(i + 1, j);
                push(i, j - 1);
                push(i, j + 1);
            }
        }
    return components <= 1;
}

inline Region unit_square() {
    Region r;
    r.x_min = rat(0);
    r.x_max = rat(1);
    r.lower.xs = {rat(0), rat(1)};
    r.lower.ys = {rat(0), rat(0)};
    r.upper.xs = {rat(0), rat(1)};
    r.upper.ys = {rat(1), rat(1)};
    return r;
}

inline Region square4() {
    Region r;
    r.x_min = rat(0);
    r.x_max = rat(4);
    r.lower.xs = {rat(0), rat(4)};
    r.lower.ys = {rat(0), rat(0)};
    r.upper.xs = {rat(0), rat(4)};
    r.upper.ys = {rat(4), rat(4)};
    return r;
}

}  // namespace carto::testsupport
