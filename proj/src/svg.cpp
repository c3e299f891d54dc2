#include "cartopoly/svg.hpp"

#include <cstdio>
#include <sstream>

namespace carto {

namespace {

std::string num(double v) {
    char buf[48];
    // normalize negative zero for byte-stable output
    if (v == 0) v = 0;
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// unit five-point star (outer radius 1, inner 0.4), precomputed so output
// does not depend on the platform's trig rounding
constexpr double kStar[10][2] = {
    {0.0000, 1.0000},  {0.2351, 0.3236},  {0.9511, 0.3090},
    {0.3804, -0.1236}, {0.5878, -0.8090}, {0.0000, -0.4000},
    {-0.5878, -0.8090}, {-0.3804, -0.1236}, {-0.9511, 0.3090},
    {-0.2351, 0.3236}};

struct Panel {
    double off_x;     // panel origin in svg coordinates
    double scale;
    double min_x, max_y;

    double X(double x) const { return off_x + (x - min_x) * scale; }
    double Y(double y) const { return (max_y - y) * scale; }  // y grows upward
};

void render_region(std::ostringstream& out, const Panel& pn, const Region& r) {
    std::vector<RatPt> cyc = polygon(r);
    out << "  <path class=\"region\" fill=\"#d9d9d9\" stroke=\"#333333\" "
           "stroke-width=\"1\" d=\"";
    for (size_t i = 0; i < cyc.size(); ++i)
        out << (i == 0 ? "M" : "L") << num(pn.X(rat_d(cyc[i].x))) << " "
            << num(pn.Y(rat_d(cyc[i].y)));
    out << "Z\"/>\n";
}

void render_strip(std::ostringstream& out, const Panel& pn, const Region& reg,
                  const HalfStrip& s) {
    // clip the strip to the region and draw it as a filled path
    std::vector<std::pair<double, double>> side;  // bounding curve samples
    for (size_t i = 0; i < s.gamma.xs.size(); ++i)
        side.push_back({rat_d(s.gamma.xs[i]), rat_d(s.gamma.ys[i])});
    out << "  <path class=\"strip\" fill=\"#7fa8d9\" fill-opacity=\"0.45\" "
           "stroke=\"none\" d=\"";
    // far side of the strip follows the region boundary in the cut direction
    const PLBoundaryFn& far = s.sign > 0 ? reg.upper : reg.lower;
    out << "M" << num(pn.X(side.front().first))
        << " " << num(pn.Y(side.front().second));
    for (size_t i = 1; i < side.size(); ++i)
        out << "L" << num(pn.X(side[i].first)) << " " << num(pn.Y(side[i].second));
    // walk the far boundary from wall_hi back to wall_lo
    std::vector<std::pair<double, double>> back;
    back.push_back({rat_d(s.wall_hi()), rat_d(far.eval(s.wall_hi()))});
    for (size_t i = far.xs.size(); i-- > 0;) {
        if (far.xs[i] > s.wall_lo() && far.xs[i] < s.wall_hi())
            back.push_back({rat_d(far.xs[i]), rat_d(far.ys[i])});
    }
    back.push_back({rat_d(s.wall_lo()), rat_d(far.eval(s.wall_lo()))});
    for (const auto& [x, y] : back)
        out << "L" << num(pn.X(x)) << " " << num(pn.Y(y));
    out << "Z\"/>\n";
}

void render_cut(std::ostringstream& out, const Panel& pn, const CutRay& ray) {
    out << "  <line class=\"cut\" stroke=\"#b03030\" stroke-width=\"1.2\" "
           "stroke-dasharray=\"5,3\" x1=\""
        << num(pn.X(rat_d(ray.base.x))) << "\" y1=\"" << num(pn.Y(rat_d(ray.base.y)))
        << "\" x2=\"" << num(pn.X(rat_d(ray.base.x))) << "\" y2=\""
        << num(pn.Y(rat_d(ray.y_end))) << "\"/>\n";
}

void render_focus(std::ostringstream& out, const Panel& pn, const RatPt& c,
                  double r_px) {
    out << "  <path class=\"focus\" fill=\"#222222\" d=\"";
    double cx = pn.X(rat_d(c.x));
    double cy = pn.Y(rat_d(c.y));
    for (int i = 0; i < 10; ++i)
        out << (i == 0 ? "M" : "L") << num(cx + kStar[i][0] * r_px) << " "
            << num(cy - kStar[i][1] * r_px);
    out << "Z\"/>\n";
}

Panel make_panel(const Region& r, double off_x, double panel_px, double pad) {
    double min_x = rat_d(r.x_min), max_x = rat_d(r.x_max);
    double min_y = rat_d(r.lower.ys.front()), max_y = rat_d(r.upper.ys.front());
    for (const Rat& y : r.lower.ys) min_y = std::min(min_y, rat_d(y));
    for (const Rat& y : r.upper.ys) max_y = std::max(max_y, rat_d(y));
    double w = max_x - min_x, h = max_y - min_y;
    double scale = (panel_px - 2 * pad) / std::max(w, h);
    Panel pn;
    pn.off_x = off_x + pad;
    pn.scale = scale;
    pn.min_x = min_x;
    pn.max_y = max_y;
    return pn;
}

double panel_height(const Region& r, const Panel& pn, double pad) {
    double min_y = rat_d(r.lower.ys.front());
    for (const Rat& y : r.lower.ys) min_y = std::min(min_y, rat_d(y));
    return (pn.max_y - min_y) * pn.scale + 2 * pad;
}

}  // namespace

std::string render_svg(const Presentation& pres, const RenderOptions& opt) {
    const double pad = 16;
    Panel pn = make_panel(pres.region, 0, opt.panel_px, pad);
    double height = panel_height(pres.region, pn, pad);

    std::ostringstream body;
    body << "<g transform=\"translate(0," << num(pad) << ")\">\n";
    render_region(body, pn, pres.region);
    if (opt.strips)
        for (const HalfStrip& s : opt.strips->strips) render_strip(body, pn, pres.region, s);
    if (opt.cuts) {
        for (const CutRay& ray : cut_rays(pres.region, pres.focus, *opt.cuts))
            render_cut(body, pn, ray);
    }
    for (const FocusPoint& f : pres.focus.points) render_focus(body, pn, f.pos, 6);
    body << "</g>\n";

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << num(opt.panel_px) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
        << num(opt.panel_px) << " " << num(height) << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

std::string render_family_svg(const Presentation& pres,
                              const std::vector<FamilyEntry>& family,
                              double panel_px) {
    const double pad = 16;
    std::ostringstream body;
    double height = 0;
    for (size_t i = 0; i < family.size(); ++i) {
        Panel pn = make_panel(family[i].image, i * panel_px, panel_px, pad);
        height = std::max(height, panel_height(family[i].image, pn, pad));
        body << "<g transform=\"translate(0," << num(pad) << ")\">\n";
        render_region(body, pn, family[i].image);
        // focus values move with the transition of this sign choice
        TransitionResult tr = transition(pres, family[i].eps);
        for (const FocusPoint& f : tr.image.focus.points)
            render_focus(body, pn, f.pos, 6);
        body << "</g>\n";
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << num(panel_px * family.size()) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(panel_px * family.size()) << " "
        << num(height) << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

}  // namespace carto
