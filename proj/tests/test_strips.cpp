#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartopoly/strips.hpp"
#include "test_support.hpp"

using namespace carto;
using namespace carto::testsupport;

namespace {

FocusSet focus_on_square(const std::vector<std::pair<long, long>>& pts) {
    std::vector<FocusPoint> fps;
    for (auto [x, y] : pts) fps.push_back({{rat(x), rat(y)}, 1});
    return order_focus(square4(), fps, 0);
}

}  // namespace

TEST_CASE("strip membership") {
    // width 1 around (2,2), upward, bounding curve at 3/2
    PLBoundaryFn g;
    g.xs = {rat(3, 2), rat(5, 2)};
    g.ys = {rat(3, 2), rat(3, 2)};
    HalfStrip s = make_half_strip({rat(2), rat(2)}, 1, rat(1), g);
    CHECK(s.contains({rat(2), rat(3)}));
    CHECK(!s.contains({rat(2), rat(1)}));
    CHECK(!s.contains({rat(3), rat(3)}));

    // base stops at y0 + eta/2
    CHECK(s.base_contains({rat(2), rat(2)}));
    CHECK(!s.base_contains({rat(2), rat(3)}));
}

TEST_CASE("default bounding curve and validation") {
    HalfStrip s = make_half_strip({rat(2), rat(2)}, 1, rat(1), std::nullopt);
    CHECK(s.gamma.eval(rat(2)) == rat(3, 2));
    CHECK_THROWS_AS(make_half_strip({rat(2), rat(2)}, 1, rat(0), std::nullopt),
                    std::invalid_argument);

    // curve must stay strictly on the open side of the center point
    PLBoundaryFn bad;
    bad.xs = {rat(3, 2), rat(5, 2)};
    bad.ys = {rat(2), rat(2)};
    CHECK_THROWS_AS(make_half_strip({rat(2), rat(2)}, 1, rat(1), bad),
                    std::invalid_argument);
}

TEST_CASE("construct_admissible: one-ff square gives width 1") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 2}});
    AdmissibleTriple t = construct_admissible(sq, fs, {1});
    REQUIRE(t.strips.size() == 1);
    CHECK(t.strips[0].eta == 1);
    CHECK(t.strips[0].gamma.eval(rat(2)) == rat(3, 2));
    CHECK(check_admissible(t, sq, fs).ok());
}

TEST_CASE("construct_admissible: shared line, opposite directions") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 1}, {2, 3}});
    AdmissibleTriple t = construct_admissible(sq, fs, {-1, 1});
    REQUIRE(t.strips.size() == 2);
    CHECK(t.strips[0].eta == t.strips[1].eta);
    CHECK(t.strips[0].sign == -1);
    CHECK(t.strips[1].sign == 1);
    CHECK(check_admissible(t, sq, fs).ok());

    CHECK_THROWS_AS(construct_admissible(sq, fs, {1, -1}), std::invalid_argument);
}

TEST_CASE("construct_admissible: same-line same-sign strips nest") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 1}, {2, 3}});
    AdmissibleTriple t = construct_admissible(sq, fs, {1, 1});
    CHECK(check_admissible(t, sq, fs).ok());
    auto maxi = maximal_strips(t);
    REQUIRE(maxi.size() == 1);
    CHECK(t.strips[maxi[0]].center.y == 1);  // the lower up-strip swallows the upper
}

TEST_CASE("check_admissible flags the defining violations") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{1, 2}, {3, 2}});

    // overlapping strips on distinct center lines, neither nested
    AdmissibleTriple overlap;
    overlap.strips.push_back(make_half_strip({rat(1), rat(2)}, 1, rat(3), std::nullopt));
    overlap.strips.push_back(make_half_strip({rat(3), rat(2)}, 1, rat(3), std::nullopt));
    AdmissibilityReport rep = check_admissible(overlap, sq, fs);
    REQUIRE(!rep.ok());
    bool bullet4 = false;
    for (const auto& v : rep.violations) bullet4 = bullet4 || v.bullet == 4;
    CHECK(bullet4);

    // base escaping the interior: widen until the rectangle leaves Int(B)
    FocusSet one = focus_on_square({{2, 2}});
    AdmissibleTriple wide;
    wide.strips.push_back(make_half_strip({rat(2), rat(2)}, 1, rat(21, 5),
                                          std::nullopt));
    AdmissibilityReport rep2 = check_admissible(wide, sq, one);
    REQUIRE(!rep2.ok());
    CHECK(rep2.violations[0].bullet == 1);

    // a base cap touching the top edge is still fine (half-open cap)
    FocusSet high =
        order_focus(sq, {{{rat(2), rat(41, 20)}, 1}}, 0);
    AdmissibleTriple tall;
    tall.strips.push_back(
        make_half_strip({rat(2), rat(41, 20)}, 1, rat(39, 10), std::nullopt));
    bool base_ok = true;
    for (const auto& v : check_admissible(tall, sq, high).violations)
        base_ok = base_ok && v.bullet != 1;
    CHECK(base_ok);
}

TEST_CASE("foreign focus value in a strip violates bullet 2") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 2}, {3, 3}});
    AdmissibleTriple t;
    // strip around x=2 wide enough to reach x=3
    t.strips.push_back(make_half_strip({rat(2), rat(2)}, 1, rat(5, 2), std::nullopt));
    t.strips.push_back(make_half_strip({rat(3), rat(3)}, 1, rat(1, 4), std::nullopt));
    AdmissibilityReport rep = check_admissible(t, sq, fs);
    REQUIRE(!rep.ok());
    bool bullet2 = false;
    for (const auto& v : rep.violations) bullet2 = bullet2 || (v.bullet == 2);
    CHECK(bullet2);
}

TEST_CASE("unequal widths on a shared line violate bullet 3") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 1}, {2, 3}});
    AdmissibleTriple t;
    t.strips.push_back(make_half_strip({rat(2), rat(1)}, -1, rat(1), std::nullopt));
    t.strips.push_back(make_half_strip({rat(2), rat(3)}, 1, rat(1, 2), std::nullopt));
    AdmissibilityReport rep = check_admissible(t, sq, fs);
    REQUIRE(!rep.ok());
    bool bullet3 = false;
    for (const auto& v : rep.violations) bullet3 = bullet3 || (v.bullet == 3);
    CHECK(bullet3);
}

TEST_CASE("corner rule: strips reaching two corners are rejected") {
    // region whose top edge bends at x=2 right next to the focus line
    Region r = square4();
    r.upper.xs = {rat(0), rat(17, 8), rat(4)};
    r.upper.ys = {rat(4), rat(4), rat(5)};
    FocusSet fs = order_focus(r, {{{rat(2), rat(2)}, 1}}, 0);
    AdmissibleTriple t = construct_admissible(r, fs, {1});
    CHECK(check_admissible(t, r, fs).ok());
    // the constructed width keeps the off-line corner out of the strip
    CHECK(t.strips[0].eta < rat(1, 4));

    AdmissibleTriple manual;
    manual.strips.push_back(make_half_strip({rat(2), rat(2)}, 1, rat(1), std::nullopt));
    AdmissibilityReport rep = check_admissible(manual, r, fs);
    bool bullet5 = false;
    for (const auto& v : rep.violations) bullet5 = bullet5 || (v.bullet == 5);
    CHECK(bullet5);
}

TEST_CASE("construct_admissible passes check_admissible on random configurations") {
    Rng rng(701);
    int configs = 0;
    while (configs < 60) {
        Region r = random_region(rng);
        FocusSet fs = random_focus(rng, r, 5);
        if (fs.empty()) continue;
        ++configs;
        SignChoice eps = reduce_signs(fs, random_signs(rng, fs.size()));
        AdmissibleTriple t = construct_admissible(r, fs, eps);
        AdmissibilityReport rep = check_admissible(t, r, fs);
        if (!rep.ok()) {
            CAPTURE(rep.violations.front().message);
        }
        CHECK(rep.ok());
        CHECK(strips_complement_connected(r, t).connected);
    }
}

TEST_CASE("admissibility implies the sign-monotonicity criterion") {
    Rng rng(733);
    int tested = 0;
    while (tested < 40) {
        Region r = random_region(rng);
        FocusSet fs = random_focus(rng, r, 5);
        if (fs.size() < 2) continue;
        SignChoice eps = random_signs(rng, fs.size());
        AdmissibleTriple t;
        for (size_t s = 0; s < fs.size(); ++s)
            t.strips.push_back(
                make_half_strip(fs.points[s].pos, eps[s], rat(1, 4), std::nullopt));
        if (check_admissible(t, r, fs).ok()) {
            CHECK(complement_connected(fs, eps));
        }
        ++tested;
    }
}

TEST_CASE("width shrinking preserves admissibility") {
    Rng rng(757);
    int configs = 0;
    while (configs < 30) {
        Region r = random_region(rng);
        FocusSet fs = random_focus(rng, r, 4);
        if (fs.empty()) continue;
        ++configs;
        SignChoice eps = reduce_signs(fs, random_signs(rng, fs.size()));
        AdmissibleTriple t = construct_admissible(r, fs, eps);
        for (const Rat& f : {rat(1, 2), rat(3, 4), rat(1, 8)}) {
            AdmissibleTriple shrunk = shrink_widths(t, f);
            CHECK(check_admissible(shrunk, r, fs).ok());
        }
    }
}

TEST_CASE("vertical twist transports admissible triples") {
    Rng rng(761);
    int configs = 0;
    while (configs < 20) {
        Region r = random_region(rng);
        FocusSet fs = random_focus(rng, r, 4);
        if (fs.empty()) continue;
        ++configs;
        SignChoice eps = reduce_signs(fs, random_signs(rng, fs.size()));
        AdmissibleTriple t = construct_admissible(r, fs, eps);

        VertElement h{std::uniform_int_distribution<long long>(-2, 2)(rng),
                      random_sign(rng), random_rat(rng, -2, 2)};
        ZAffine2 g = h.affine();
        auto img = apply_affine(r, g);
        REQUIRE(img.has_value());
        if (h.d == -1) std::swap(img->closure.lower, img->closure.upper);

        AdmissibleTriple moved_t = twist_triple(t, h);
        std::vector<std::pair<FocusPoint, HalfStrip>> moved;
        for (size_t s = 0; s < fs.size(); ++s)
            moved.push_back({FocusPoint{moved_t.strips[s].center, 1},
                             moved_t.strips[s]});
        std::sort(moved.begin(), moved.end(), [](const auto& a, const auto& b) {
            if (a.first.pos.x != b.first.pos.x) return a.first.pos.x < b.first.pos.x;
            return a.first.pos.y < b.first.pos.y;
        });
        std::vector<FocusPoint> pts;
        moved_t.strips.clear();
        for (auto& [fp, hs] : moved) {
            pts.push_back(fp);
            moved_t.strips.push_back(hs);
        }
        FocusSet fs2 = order_focus(*img, pts, fs.offset);
        CHECK(check_admissible(moved_t, *img, fs2).ok());

        // a pure flip keeps its widths
        AdmissibleTriple flipped = twist_triple(t, VertElement{0, -1, rat(0)});
        for (size_t s = 0; s < fs.size(); ++s)
            CHECK(flipped.strips[s].eta == t.strips[s].eta);
    }
}

TEST_CASE("strips complement connectivity flags a bad handcrafted triple") {
    Region sq = square4();
    FocusSet fs = focus_on_square({{2, 2}});
    // a strip whose bounding curve sits below the region: covers full slices
    PLBoundaryFn g;
    g.xs = {rat(3, 2), rat(5, 2)};
    g.ys = {rat(-1), rat(-1)};
    AdmissibleTriple t;
    t.strips.push_back(make_half_strip({rat(2), rat(2)}, 1, rat(1), g));
    StripsConnectivity conn = strips_complement_connected(sq, t);
    CHECK(!conn.connected);
    REQUIRE(conn.witness_line.has_value());

    // empty focus set: trivially connected
    AdmissibleTriple none;
    CHECK(strips_complement_connected(sq, none).connected);
}
