#include "cartopoly/region.hpp"

#include <algorithm>
#include <numeric>

namespace carto {

namespace {

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("region: integer out of machine range");
    return z.get_si();
}

// Primitive integer vector in the direction of (dx, dy).
std::pair<long long, long long> primitive_dir(const Rat& dx, const Rat& dy) {
    mpz_class m = dx.get_den() * dy.get_den();
    mpz_class a = dx.get_num() * dy.get_den();
    mpz_class b = dy.get_num() * dx.get_den();
    (void)m;
    if (a == 0 && b == 0) return {0, 0};
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    return {to_ll(a), to_ll(b)};
}

Rat cross(const RatPt& u, const RatPt& v) { return u.x * v.y - u.y * v.x; }

long long icross(const std::pair<long long, long long>& u,
                 const std::pair<long long, long long>& v) {
    return u.first * v.second - u.second * v.first;
}

void check_boundary_wellformed(const PLBoundaryFn& f, const char* name) {
    if (f.xs.size() != f.ys.size())
        throw std::invalid_argument(std::string("region: ") + name +
                                    " xs/ys length mismatch");
    if (f.xs.size() < 2)
        throw std::invalid_argument(std::string("region: ") + name +
                                    " needs at least 2 breakpoints");
    for (size_t i = 1; i < f.xs.size(); ++i)
        if (f.xs[i] < f.xs[i - 1])
            throw std::invalid_argument(std::string("region: ") + name +
                                        " breakpoints not nondecreasing");
}

// Merges consecutive collinear / duplicate points of an open chain.
std::vector<RatPt> merge_collinear(const std::vector<RatPt>& pts) {
    std::vector<RatPt> out;
    for (const RatPt& p : pts) {
        if (!out.empty() && out.back() == p) continue;
        while (out.size() >= 2) {
            RatPt u{out.back().x - out[out.size() - 2].x,
                    out.back().y - out[out.size() - 2].y};
            RatPt v{p.x - out.back().x, p.y - out.back().y};
            if (cross(u, v) == 0 && (u.x * v.x + u.y * v.y) > 0)
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

Rat PLBoundaryFn::eval(const Rat& x) const {
    if (xs.empty()) throw std::invalid_argument("PLBoundaryFn: empty");
    if (x < xs.front() || x > xs.back())
        throw std::domain_error("PLBoundaryFn: x outside domain");
    // first index with xs[j] >= x
    size_t lo = 0, hi = xs.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (xs[mid] < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (xs[lo] == x) return ys[lo];
    const Rat& x0 = xs[lo - 1];
    const Rat& x1 = xs[lo];
    return ys[lo - 1] + (ys[lo] - ys[lo - 1]) * (x - x0) / (x1 - x0);
}

bool PLBoundaryFn::has_jump_at(const Rat& x) const {
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i] == xs[i - 1] && xs[i] == x && ys[i] != ys[i - 1]) return true;
    return false;
}

bool Region::operator==(const Region& o) const {
    Region a = canonical(*this);
    Region b = canonical(o);
    return a.x_min == b.x_min && a.x_max == b.x_max &&
           a.lower.xs == b.lower.xs && a.lower.ys == b.lower.ys &&
           a.upper.xs == b.upper.xs && a.upper.ys == b.upper.ys &&
           a.closure.left == b.closure.left && a.closure.right == b.closure.right &&
           a.closure.lower == b.closure.lower && a.closure.upper == b.closure.upper;
}

ValidationReport validate(const Region& r) {
    check_boundary_wellformed(r.lower, "lower");
    check_boundary_wellformed(r.upper, "upper");
    if (!(r.x_min < r.x_max))
        throw std::invalid_argument("region: x_min must be < x_max");

    ValidationReport rep;
    auto bad = [&](const char* code, const std::string& msg, const RatPt& w) {
        rep.violations.push_back({code, msg, w});
    };

    if (r.lower.xs.front() != r.x_min || r.lower.xs.back() != r.x_max)
        bad("domain_mismatch", "lower boundary domain != [x_min, x_max]",
            {r.x_min, Rat(0)});
    if (r.upper.xs.front() != r.x_min || r.upper.xs.back() != r.x_max)
        bad("domain_mismatch", "upper boundary domain != [x_min, x_max]",
            {r.x_min, Rat(0)});
    if (!rep.ok()) return rep;

    // Interior vertical jumps disconnect vertical slices of the complement
    // of a boundary line; only the two ends may carry vertical segments.
    for (const PLBoundaryFn* f : {&r.lower, &r.upper}) {
        for (size_t i = 1; i < f->xs.size(); ++i) {
            if (f->xs[i] == f->xs[i - 1] && f->ys[i] != f->ys[i - 1] &&
                f->xs[i] > r.x_min && f->xs[i] < r.x_max)
                bad("interior_vertical", "vertical boundary segment at interior x",
                    {f->xs[i], f->ys[i]});
        }
    }

    // lower <= upper across the merged breakpoint partition; equality only
    // at closed ends.
    std::vector<Rat> part;
    part.insert(part.end(), r.lower.xs.begin(), r.lower.xs.end());
    part.insert(part.end(), r.upper.xs.begin(), r.upper.xs.end());
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    for (const Rat& x : part) {
        Rat lo = r.lower.eval(x);
        Rat hi = r.upper.eval(x);
        if (lo > hi)
            bad("empty_slice", "lower > upper at x = " + rat_str(x), {x, lo});
        else if (lo == hi) {
            bool at_end = (x == r.x_min && r.closure.left) ||
                          (x == r.x_max && r.closure.right);
            if (!at_end)
                bad("degenerate_slice",
                    "lower == upper away from a closed end, x = " + rat_str(x),
                    {x, lo});
        }
    }
    return rep;
}

Slice slice(const Region& r, const Rat& x0) {
    Slice s;
    if (x0 < r.x_min || x0 > r.x_max) return s;
    if (x0 == r.x_min && !r.closure.left) return s;
    if (x0 == r.x_max && !r.closure.right) return s;
    s.empty = false;
    s.lo = r.lower.eval(x0);
    s.hi = r.upper.eval(x0);
    bool at_end = (x0 == r.x_min) || (x0 == r.x_max);
    s.lo_closed = at_end ? true : r.closure.lower;
    s.hi_closed = at_end ? true : r.closure.upper;
    return s;
}

bool contains(const Region& r, const RatPt& p) {
    Slice s = slice(r, p.x);
    if (s.empty) return false;
    if (p.y < s.lo || p.y > s.hi) return false;
    if (p.y == s.lo && !s.lo_closed) return false;
    if (p.y == s.hi && !s.hi_closed) return false;
    return true;
}

bool int_contains(const Region& r, const RatPt& p) {
    if (!(r.x_min < p.x && p.x < r.x_max)) return false;
    return r.lower.eval(p.x) < p.y && p.y < r.upper.eval(p.x);
}

Region canonical(const Region& r) {
    Region out = r;
    for (PLBoundaryFn* f : {&out.lower, &out.upper}) {
        std::vector<RatPt> pts;
        for (size_t i = 0; i < f->xs.size(); ++i) pts.push_back({f->xs[i], f->ys[i]});
        pts = merge_collinear(pts);
        f->xs.clear();
        f->ys.clear();
        for (const RatPt& p : pts) {
            f->xs.push_back(p.x);
            f->ys.push_back(p.y);
        }
    }
    return out;
}

std::vector<RatPt> polygon(const Region& r) {
    Region c = canonical(r);
    std::vector<RatPt> cycle;
    for (size_t i = 0; i < c.lower.xs.size(); ++i)
        cycle.push_back({c.lower.xs[i], c.lower.ys[i]});
    // right vertical edge
    if (c.upper.ys.back() != c.lower.ys.back())
        cycle.push_back({c.x_max, c.upper.ys.back()});
    for (size_t i = c.upper.xs.size(); i-- > 1;) {
        RatPt p{c.upper.xs[i - 1], c.upper.ys[i - 1]};
        if (i - 1 == 0 && p == cycle.front()) break;  // degenerate left end
        cycle.push_back(p);
    }
    return merge_collinear(cycle);
}

std::vector<CornerData> corners(const Region& r) {
    std::vector<RatPt> cyc = polygon(r);
    std::vector<CornerData> out;
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        const RatPt& prev = cyc[(i + n - 1) % n];
        const RatPt& cur = cyc[i];
        const RatPt& next = cyc[(i + 1) % n];
        CornerData cd;
        cd.position = cur;
        cd.dir_prev = primitive_dir(prev.x - cur.x, prev.y - cur.y);
        cd.dir_next = primitive_dir(next.x - cur.x, next.y - cur.y);
        out.push_back(cd);
    }
    return out;
}

std::optional<Region> region_from_polygon(const std::vector<RatPt>& cycle_in,
                                          const ClosureFlags& closure) {
    if (cycle_in.size() < 3) return std::nullopt;
    std::vector<RatPt> cyc = merge_collinear(cycle_in);
    if (cyc.size() >= 2 && cyc.front() == cyc.back()) cyc.pop_back();
    if (cyc.size() < 3) return std::nullopt;

    // enforce ccw orientation
    Rat two_area(0);
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        const RatPt& a = cyc[i];
        const RatPt& b = cyc[(i + 1) % n];
        two_area += a.x * b.y - b.x * a.y;
    }
    if (two_area == 0) return std::nullopt;
    if (two_area < 0) std::reverse(cyc.begin(), cyc.end());

    Rat x_min = cyc[0].x, x_max = cyc[0].x;
    for (const RatPt& p : cyc) {
        x_min = rat_min(x_min, p.x);
        x_max = rat_max(x_max, p.x);
    }

    // bottom-left vertex: min x then min y
    size_t start = 0;
    for (size_t i = 0; i < n; ++i) {
        if (cyc[i].x < cyc[start].x ||
            (cyc[i].x == cyc[start].x && cyc[i].y < cyc[start].y))
            start = i;
    }

    auto at = [&](size_t i) -> const RatPt& { return cyc[(start + i) % n]; };

    std::vector<RatPt> lower_pts{at(0)};
    size_t i = 1;
    while (i < n && at(i).x > at(i - 1).x) {
        lower_pts.push_back(at(i));
        ++i;
    }
    if (lower_pts.back().x != x_max) return std::nullopt;

    // optional right vertical edge (one step up)
    if (i < n && at(i).x == x_max) {
        if (!(at(i).y > at(i - 1).y)) return std::nullopt;
        ++i;
    }

    std::vector<RatPt> upper_pts{at(i - 1)};
    while (i < n && at(i).x < at(i - 1).x) {
        upper_pts.push_back(at(i));
        ++i;
    }
    if (upper_pts.back().x != x_min) return std::nullopt;

    // optional left vertical edge closes the cycle back to start
    if (i == n - 1) {
        if (at(i).x != x_min || !(at(i).y < at(i - 1).y)) return std::nullopt;
        ++i;
    }
    if (i != n) return std::nullopt;

    Region r;
    r.x_min = x_min;
    r.x_max = x_max;
    r.closure = closure;
    for (const RatPt& p : lower_pts) {
        r.lower.xs.push_back(p.x);
        r.lower.ys.push_back(p.y);
    }
    std::reverse(upper_pts.begin(), upper_pts.end());
    for (const RatPt& p : upper_pts) {
        r.upper.xs.push_back(p.x);
        r.upper.ys.push_back(p.y);
    }
    // Degenerate ends: chains collapse to one point there.
    if (r.lower.xs.front() != x_min)
        return std::nullopt;
    if (r.upper.xs.front() != x_min) {
        r.upper.xs.insert(r.upper.xs.begin(), x_min);
        r.upper.ys.insert(r.upper.ys.begin(), r.lower.ys.front());
    }
    if (r.lower.xs.back() != x_max) return std::nullopt;
    if (r.upper.xs.back() != x_max) {
        r.upper.xs.push_back(x_max);
        r.upper.ys.push_back(r.lower.ys.back());
    }
    if (!validate(r).ok()) return std::nullopt;
    return r;
}

std::optional<Region> apply_affine(const Region& r, const ZAffine2& h) {
    std::vector<RatPt> cyc = polygon(r);
    for (RatPt& p : cyc) p = h.apply(p);
    return region_from_polygon(cyc, r.closure);
}

Rat area(const Region& r) {
    std::vector<RatPt> cyc = polygon(r);
    Rat two_area(0);
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        const RatPt& a = cyc[i];
        const RatPt& b = cyc[(i + 1) % n];
        two_area += a.x * b.y - b.x * a.y;
    }
    if (two_area < 0) two_area = -two_area;
    return two_area / 2;
}

DelzantReport check_delzant(const Region& r, const std::vector<Rat>& exclude_lines) {
    DelzantReport rep;
    std::vector<RatPt> cyc = polygon(r);
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        const RatPt& prev = cyc[(i + n - 1) % n];
        const RatPt& cur = cyc[i];
        const RatPt& next = cyc[(i + 1) % n];
        CornerCheck cc;
        cc.position = cur;

        auto w_in = primitive_dir(cur.x - prev.x, cur.y - prev.y);
        auto w_out = primitive_dir(next.x - cur.x, next.y - cur.y);
        long long det = icross(w_in, w_out);
        cc.unimodular = (det == 1 || det == -1);
        cc.convex = det > 0;  // ccw traversal: left turn

        bool on_lower = (cur.y == r.lower.eval(cur.x));
        bool on_upper = (cur.y == r.upper.eval(cur.x));
        if ((cur.x == r.x_min && !r.closure.left) ||
            (cur.x == r.x_max && !r.closure.right) ||
            (on_lower && !r.closure.lower && cur.x != r.x_min && cur.x != r.x_max) ||
            (on_upper && !r.closure.upper && cur.x != r.x_min && cur.x != r.x_max))
            cc.skipped = true;
        for (const Rat& xl : exclude_lines)
            if (cur.x == xl) cc.skipped = true;

        if (!cc.skipped && !(cc.unimodular && cc.convex)) rep.ok = false;
        rep.corners.push_back(cc);
    }
    return rep;
}

namespace {

bool cycles_equal(const std::vector<RatPt>& a, const std::vector<RatPt>& b) {
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    for (size_t off = 0; off < n; ++off) {
        bool match = true;
        for (size_t i = 0; i < n; ++i) {
            if (a[(i + off) % n] != b[i]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

std::optional<ZAffine2> agl_equivalence(const Region& P, const Region& Q) {
    std::vector<RatPt> cp = polygon(P);
    std::vector<RatPt> cq = polygon(Q);
    if (cp.size() != cq.size()) return std::nullopt;

    std::vector<CornerData> kp = corners(P);
    std::vector<CornerData> kq = corners(Q);
    const CornerData& p0 = kp[0];

    // Columns of U are the two primitive edge directions at p0.
    long long u11 = p0.dir_prev.first, u21 = p0.dir_prev.second;
    long long u12 = p0.dir_next.first, u22 = p0.dir_next.second;
    long long detU = u11 * u22 - u12 * u21;
    if (detU == 0) return std::nullopt;

    for (const CornerData& q : kq) {
        std::pair<long long, long long> cand[2][2] = {
            {q.dir_prev, q.dir_next}, {q.dir_next, q.dir_prev}};
        for (auto& vs : cand) {
            long long v11 = vs[0].first, v21 = vs[0].second;
            long long v12 = vs[1].first, v22 = vs[1].second;
            // A = V U^{-1}, integral with det +-1 or no candidate.
            long long num_a = v11 * u22 - v12 * u21;
            long long num_b = -v11 * u12 + v12 * u11;
            long long num_c = v21 * u22 - v22 * u21;
            long long num_d = -v21 * u12 + v22 * u11;
            if (num_a % detU || num_b % detU || num_c % detU || num_d % detU)
                continue;
            IntMat2 A{num_a / detU, num_b / detU, num_c / detU, num_d / detU};
            if (A.det() != 1 && A.det() != -1) continue;
            RatPt Ap = mat_apply(A, p0.position);
            ZAffine2 h(A, {q.position.x - Ap.x, q.position.y - Ap.y});

            std::vector<RatPt> img = cp;
            for (RatPt& pt : img) pt = h.apply(pt);
            if (A.det() < 0) std::reverse(img.begin(), img.end());
            if (cycles_equal(img, cq)) return h;
        }
    }
    return std::nullopt;
}

}  // namespace carto
