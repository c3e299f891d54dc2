#include "cartopoly/json_io.hpp"

namespace carto {

namespace {

const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

long long need_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<long long>();
}

int need_sign(const Json& j, const std::string& path) {
    long long v = need_int(j, path);
    if (v != 1 && v != -1) throw ParseError(path, "expected +1 or -1");
    return static_cast<int>(v);
}

PLBoundaryFn boundary_from_json(const Json& j, const std::string& path) {
    PLBoundaryFn f;
    const Json& xs = need(j, "xs", path);
    const Json& ys = need(j, "ys", path);
    if (!xs.is_array() || !ys.is_array())
        throw ParseError(path, "xs/ys must be arrays");
    if (xs.size() != ys.size())
        throw ParseError(path, "xs and ys have different lengths (" +
                                   std::to_string(xs.size()) + " vs " +
                                   std::to_string(ys.size()) + ")");
    for (size_t i = 0; i < xs.size(); ++i) {
        f.xs.push_back(rat_from_json(xs[i], path + ".xs[" + std::to_string(i) + "]"));
        f.ys.push_back(rat_from_json(ys[i], path + ".ys[" + std::to_string(i) + "]"));
    }
    return f;
}

Json boundary_to_json(const PLBoundaryFn& f) {
    Json xs = Json::array(), ys = Json::array();
    for (const Rat& x : f.xs) xs.push_back(rat_to_json(x));
    for (const Rat& y : f.ys) ys.push_back(rat_to_json(y));
    return Json{{"xs", xs}, {"ys", ys}};
}

}  // namespace

Json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer())
        return rat_ll(j.get<long long>());
    if (!j.is_string())
        throw ParseError(path, "expected a rational \"p/q\" string");
    auto q = parse_rat(j.get<std::string>());
    if (!q)
        throw ParseError(path, "malformed rational \"" + j.get<std::string>() + "\"");
    return *q;
}

Json region_to_json(const Region& r) {
    return Json{{"x_min", rat_to_json(r.x_min)},
                {"x_max", rat_to_json(r.x_max)},
                {"lower", boundary_to_json(r.lower)},
                {"upper", boundary_to_json(r.upper)},
                {"closure", Json{{"left", r.closure.left},
                                 {"right", r.closure.right},
                                 {"lower", r.closure.lower},
                                 {"upper", r.closure.upper}}}};
}

Region region_from_json(const Json& j, const std::string& path) {
    Region r;
    r.x_min = rat_from_json(need(j, "x_min", path), path + ".x_min");
    r.x_max = rat_from_json(need(j, "x_max", path), path + ".x_max");
    r.lower = boundary_from_json(need(j, "lower", path), path + ".lower");
    r.upper = boundary_from_json(need(j, "upper", path), path + ".upper");
    if (j.contains("closure")) {
        const Json& c = j["closure"];
        auto flag = [&](const char* k, bool dflt) {
            if (!c.contains(k)) return dflt;
            if (!c[k].is_boolean())
                throw ParseError(path + ".closure." + k, "expected a boolean");
            return c[k].get<bool>();
        };
        r.closure.left = flag("left", true);
        r.closure.right = flag("right", true);
        r.closure.lower = flag("lower", true);
        r.closure.upper = flag("upper", true);
    }
    return r;
}

Json affine_to_json(const ZAffine2& g) {
    const IntMat2& A = g.linear();
    return Json{{"A", Json::array({Json::array({A.a, A.b}), Json::array({A.c, A.d})})},
                {"b", Json::array({rat_to_json(g.translation().x),
                                   rat_to_json(g.translation().y)})}};
}

ZAffine2 affine_from_json(const Json& j, const std::string& path) {
    const Json& A = need(j, "A", path);
    const Json& b = need(j, "b", path);
    if (!A.is_array() || A.size() != 2 || !A[0].is_array() || A[0].size() != 2 ||
        !A[1].is_array() || A[1].size() != 2)
        throw ParseError(path + ".A", "expected a 2x2 integer matrix");
    if (!b.is_array() || b.size() != 2)
        throw ParseError(path + ".b", "expected a pair of rationals");
    IntMat2 m{need_int(A[0][0], path + ".A[0][0]"), need_int(A[0][1], path + ".A[0][1]"),
              need_int(A[1][0], path + ".A[1][0]"), need_int(A[1][1], path + ".A[1][1]")};
    RatPt t{rat_from_json(b[0], path + ".b[0]"), rat_from_json(b[1], path + ".b[1]")};
    try {
        return {m, t};
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

Json map_to_json(const PiecewiseVertMap& m) {
    Json walls = Json::array(), pieces = Json::array();
    for (const Rat& w : m.walls) walls.push_back(rat_to_json(w));
    for (const ZAffine2& p : m.pieces) pieces.push_back(affine_to_json(p));
    return Json{{"walls", walls}, {"pieces", pieces}};
}

Json signs_to_json(const SignChoice& eps) {
    Json a = Json::array();
    for (int e : eps) a.push_back(e);
    return a;
}

SignChoice signs_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of +1/-1");
    SignChoice eps;
    for (size_t i = 0; i < j.size(); ++i)
        eps.push_back(need_sign(j[i], path + "[" + std::to_string(i) + "]"));
    return eps;
}

Json triple_to_json(const AdmissibleTriple& t) {
    Json strips = Json::array();
    for (const HalfStrip& s : t.strips) {
        strips.push_back(Json{{"center", Json{{"x", rat_to_json(s.center.x)},
                                              {"y", rat_to_json(s.center.y)}}},
                              {"sign", s.sign},
                              {"eta", rat_to_json(s.eta)},
                              {"gamma", boundary_to_json(s.gamma)}});
    }
    return Json{{"strips", strips}};
}

AdmissibleTriple triple_from_json(const Json& j, const std::string& path) {
    AdmissibleTriple t;
    const Json& strips = need(j, "strips", path);
    if (!strips.is_array()) throw ParseError(path + ".strips", "expected an array");
    for (size_t i = 0; i < strips.size(); ++i) {
        std::string p = path + ".strips[" + std::to_string(i) + "]";
        const Json& s = strips[i];
        const Json& c = need(s, "center", p);
        RatPt center{rat_from_json(need(c, "x", p + ".center"), p + ".center.x"),
                     rat_from_json(need(c, "y", p + ".center"), p + ".center.y")};
        int sign = need_sign(need(s, "sign", p), p + ".sign");
        Rat eta = rat_from_json(need(s, "eta", p), p + ".eta");
        std::optional<PLBoundaryFn> gamma;
        if (s.contains("gamma"))
            gamma = boundary_from_json(s["gamma"], p + ".gamma");
        try {
            t.strips.push_back(make_half_strip(center, sign, eta, gamma));
        } catch (const std::invalid_argument& e) {
            throw ParseError(p, e.what());
        }
    }
    return t;
}

Json presentation_to_json(const Presentation& p) {
    Json focus = Json::array();
    for (const FocusPoint& f : p.focus.points)
        focus.push_back(Json{{"x", rat_to_json(f.pos.x)},
                             {"y", rat_to_json(f.pos.y)},
                             {"r", f.multiplicity}});
    return Json{{"region", region_to_json(p.region)},
                {"focus", focus},
                {"offset", p.focus.offset},
                {"eps0", signs_to_json(p.ref_signs)},
                {"sgn", p.global_sign}};
}

Presentation presentation_from_json(const Json& j, const std::string& path) {
    Presentation p;
    p.region = region_from_json(need(j, "region", path), path + ".region");
    try {
        ValidationReport rep = validate(p.region);
        if (!rep.ok())
            throw ParseError(path + ".region", rep.violations.front().message);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ".region", e.what());
    }

    const Json& focus = need(j, "focus", path);
    if (!focus.is_array()) throw ParseError(path + ".focus", "expected an array");
    std::vector<FocusPoint> pts;
    for (size_t i = 0; i < focus.size(); ++i) {
        std::string fp = path + ".focus[" + std::to_string(i) + "]";
        const Json& f = focus[i];
        FocusPoint pt;
        pt.pos.x = rat_from_json(need(f, "x", fp), fp + ".x");
        pt.pos.y = rat_from_json(need(f, "y", fp), fp + ".y");
        if (f.contains("r")) {
            long long r = need_int(f["r"], fp + ".r");
            if (r < 1) throw ParseError(fp + ".r", "multiplicity must be >= 1");
            pt.multiplicity = static_cast<int>(r);
        }
        pts.push_back(pt);
    }
    long long offset = 0;
    if (j.contains("offset")) offset = need_int(j["offset"], path + ".offset");
    try {
        p.focus = order_focus(p.region, pts, offset);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ".focus", e.what());
    }

    p.ref_signs = signs_from_json(need(j, "eps0", path), path + ".eps0");
    if (p.ref_signs.size() != p.focus.size())
        throw ParseError(path + ".eps0",
                         "sign count " + std::to_string(p.ref_signs.size()) +
                             " != focus count " + std::to_string(p.focus.size()));
    if (j.contains("sgn")) p.global_sign = need_sign(j["sgn"], path + ".sgn");
    return p;
}

Json document_to_json(const Document& d) {
    Json j{{"version", d.version},
           {"presentation", presentation_to_json(d.presentation)}};
    if (d.eps) j["eps"] = signs_to_json(*d.eps);
    if (d.strips) j["strips"] = triple_to_json(*d.strips)["strips"];
    return j;
}

Document document_from_json(const Json& j) {
    Document d;
    if (j.contains("version")) {
        if (!j["version"].is_string())
            throw ParseError("version", "expected a string");
        d.version = j["version"].get<std::string>();
    }
    d.presentation =
        presentation_from_json(need(j, "presentation", ""), "presentation");
    if (j.contains("eps")) {
        d.eps = signs_from_json(j["eps"], "eps");
        if (d.eps->size() != d.presentation.focus.size())
            throw ParseError("eps", "sign count " + std::to_string(d.eps->size()) +
                                        " != focus count " +
                                        std::to_string(d.presentation.focus.size()));
    }
    if (j.contains("strips"))
        d.strips = triple_from_json(Json{{"strips", j["strips"]}}, "");
    return d;
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

std::string emit_document(const Document& d) {
    return document_to_json(d).dump(2) + "\n";
}

Json family_to_json(const std::vector<FamilyEntry>& fam) {
    Json a = Json::array();
    for (const FamilyEntry& e : fam)
        a.push_back(Json{{"eps", signs_to_json(e.eps)},
                         {"region", region_to_json(e.image)}});
    return a;
}

Json embedding_report_to_json(const EmbeddingCheckReport& r) {
    return Json{{"max_seam_discontinuity", r.max_seam_discontinuity},
                {"max_c1_defect", r.max_c1_defect},
                {"injectivity_violations", r.injectivity_violations},
                {"agreement_violations", r.agreement_violations},
                {"samples", r.samples}};
}

}  // namespace carto
