#include "cartopoly/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carto {

namespace {

// quintic smooth-step, C^2 at both ends
double smoothstep5(double z) {
    if (z <= 0) return 0;
    if (z >= 1) return 1;
    return z * z * z * (10 + z * (-15 + 6 * z));
}

double lerp_eval(const std::vector<double>& xs, const std::vector<double>& ys,
                 double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    size_t lo = 0, hi = xs.size() - 1;
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (xs[mid] <= x)
            lo = mid;
        else
            hi = mid;
    }
    double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace

double SeamStrip::gamma_at(double x) const { return lerp_eval(gamma_xs, gamma_ys, x); }

bool SeamStrip::contains(double x, double y) const {
    if (x < wall_lo || x > wall_hi) return false;
    double g = gamma_at(x);
    return sign > 0 ? y >= g : y <= g;
}

EtaEmbedding::EtaEmbedding(const Presentation& pres, const SignChoice& eps,
                           const AdmissibleTriple& triple) {
    AdmissibilityReport rep = check_admissible(triple, pres.region, pres.focus);
    if (!rep.ok())
        throw std::invalid_argument("build_embedding: triple not admissible: " +
                                    rep.violations.front().message);
    domain_ = pres.region;
    atlas_ = develop_atlas(pres, eps);

    for (const Rat& w : atlas_.walls) walls_.push_back(rat_d(w));
    for (const ZAffine2& p : atlas_.pieces) {
        auto v = is_vert(p);
        if (!v || v->d != 1)
            throw std::logic_error("build_embedding: unexpected non-shear piece");
        piece_kc_.push_back({static_cast<double>(v->k), rat_d(v->a)});
    }

    for (size_t idx : maximal_strips(triple)) {
        const HalfStrip& hs = triple.strips[idx];
        SeamStrip s;
        s.x0 = rat_d(hs.center.x);
        s.sign = hs.sign;
        s.eta = rat_d(hs.eta);
        s.wall_lo = rat_d(hs.wall_lo());
        s.wall_hi = rat_d(hs.wall_hi());
        for (const Rat& x : hs.gamma.xs) s.gamma_xs.push_back(rat_d(x));
        for (const Rat& y : hs.gamma.ys) s.gamma_ys.push_back(rat_d(y));
        s.focus_y = rat_d(hs.center.y);
        s.seam_y = s.focus_y - s.sign * s.eta / 4;
        s.delta = s.eta / 10;

        size_t slab = atlas_.slab_of(hs.center.x);
        // slab_of returns the slab right of the wall at the center line
        s.kR = piece_kc_[slab].first;
        s.cR = piece_kc_[slab].second;
        s.kL = piece_kc_[slab - 1].first;
        s.cL = piece_kc_[slab - 1].second;
        double m = std::abs(s.kR - s.kL);
        s.rho = s.eta / (4 * std::max(1.0, m));
        seams_.push_back(s);
    }
}

double EtaEmbedding::piece_second(double x, double y) const {
    size_t lo = 0, hi = walls_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (walls_[mid] <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return y + piece_kc_[lo].first * x + piece_kc_[lo].second;
}

double EtaEmbedding::exact_second(double x, double y) const {
    return piece_second(x, y);
}

bool EtaEmbedding::in_any_strip(double x, double y) const {
    for (const SeamStrip& s : seams_)
        if (s.contains(x, y)) return true;
    return false;
}

double EtaEmbedding::blended_second(const SeamStrip& s, double x, double y) const {
    double into_cut = s.sign * (y - s.seam_y);
    if (into_cut < 0) return piece_second(x, y);  // collar between gamma and seam

    double u = smoothstep5((x - (s.x0 - s.rho)) / (2 * s.rho));
    double left = y + s.kL * x + s.cL;
    double right = y + s.kR * x + s.cR;
    double ramp = (1 - u) * left + u * right;

    double v = smoothstep5(into_cut / s.delta);
    return (1 - v) * piece_second(x, y) + v * ramp;
}

double EtaEmbedding::second(double x, double y) const {
    for (const SeamStrip& s : seams_)
        if (s.contains(x, y)) return blended_second(s, x, y);
    return piece_second(x, y);
}

double EtaEmbedding::branch_at_seam(const SeamStrip& s, bool cut_side,
                                    double x) const {
    if (!cut_side) return piece_second(x, s.seam_y);
    double u = smoothstep5((x - (s.x0 - s.rho)) / (2 * s.rho));
    double ramp = (1 - u) * (s.seam_y + s.kL * x + s.cL) +
                  u * (s.seam_y + s.kR * x + s.cR);
    double v = smoothstep5(0.0);
    return (1 - v) * piece_second(x, s.seam_y) + v * ramp;
}

EmbeddingCheckReport check_embedding(const EtaEmbedding& emb, int grid_n,
                                     double fd_step) {
    EmbeddingCheckReport rep;
    const Region& B = emb.domain();
    double x_min = rat_d(B.x_min), x_max = rat_d(B.x_max);

    auto in_region = [&](double x, double y) {
        if (x < x_min || x > x_max) return false;
        Rat xr(x);
        double lo = rat_d(B.lower.eval(xr));
        double hi = rat_d(B.upper.eval(xr));
        return lo <= y && y <= hi;
    };

    // grid sweep: agreement outside strips, injectivity along columns
    for (int i = 0; i <= grid_n; ++i) {
        double x = x_min + (x_max - x_min) * i / grid_n;
        Rat xr(x);
        double lo = rat_d(B.lower.eval(xr));
        double hi = rat_d(B.upper.eval(xr));
        if (hi <= lo) continue;
        double prev = 0;
        bool have_prev = false;
        for (int j = 0; j <= grid_n; ++j) {
            double y = lo + (hi - lo) * j / grid_n;
            double F = emb.second(x, y);
            ++rep.samples;
            if (!emb.in_any_strip(x, y)) {
                double T = emb.exact_second(x, y);
                if (std::abs(F - T) > 1e-12) ++rep.agreement_violations;
            }
            if (have_prev && !(F > prev)) ++rep.injectivity_violations;
            prev = F;
            have_prev = true;
        }
    }

    // seam continuity and C1 across the seam
    for (const SeamStrip& s : emb.seams()) {
        for (int i = 0; i <= grid_n; ++i) {
            double x = s.wall_lo + (s.wall_hi - s.wall_lo) * i / grid_n;
            if (!in_region(x, s.seam_y)) continue;
            double below = emb.branch_at_seam(s, false, x);
            double above = emb.branch_at_seam(s, true, x);
            rep.max_seam_discontinuity =
                std::max(rep.max_seam_discontinuity, std::abs(above - below));

            double y1 = s.seam_y - s.sign * fd_step;  // collar side
            double y2 = s.seam_y + s.sign * fd_step;  // cut side
            if (in_region(x, y1) && in_region(x, y2)) {
                double F0 = emb.second(x, s.seam_y);
                double d_collar = (F0 - emb.second(x, y1)) / (s.sign * fd_step);
                double d_cut = (emb.second(x, y2) - F0) / (s.sign * fd_step);
                rep.max_c1_defect =
                    std::max(rep.max_c1_defect, std::abs(d_cut - d_collar));
            }

            // x-derivative jump across the seam at the center line and nearby
            if (std::abs(x - s.x0) <= 2 * s.rho) {
                double xl = x - fd_step, xr2 = x + fd_step;
                if (in_region(xl, y1) && in_region(xr2, y1) && in_region(xl, y2) &&
                    in_region(xr2, y2)) {
                    double dx_collar =
                        (emb.second(xr2, y1) - emb.second(xl, y1)) / (2 * fd_step);
                    double dx_cut =
                        (emb.second(xr2, y2) - emb.second(xl, y2)) / (2 * fd_step);
                    rep.max_c1_defect =
                        std::max(rep.max_c1_defect, std::abs(dx_cut - dx_collar));
                }
            }
        }

        // C1 across the former cut inside the strip
        Rat x0r(s.x0);
        double y_end = s.sign > 0 ? rat_d(B.upper.eval(x0r)) : rat_d(B.lower.eval(x0r));
        for (int j = 1; j < grid_n; ++j) {
            double y = s.focus_y + (y_end - s.focus_y) * j / grid_n;
            if (!s.contains(s.x0, y)) continue;
            if (!in_region(s.x0 - fd_step, y) || !in_region(s.x0 + fd_step, y))
                continue;
            double F0 = emb.second(s.x0, y);
            double d_left = (F0 - emb.second(s.x0 - fd_step, y)) / fd_step;
            double d_right = (emb.second(s.x0 + fd_step, y) - F0) / fd_step;
            rep.max_c1_defect =
                std::max(rep.max_c1_defect, std::abs(d_right - d_left));
        }
    }
    return rep;
}

std::vector<LimitStep> limit_sequence(const Presentation& pres,
                                      const SignChoice& eps, int n_steps,
                                      int raster_n) {
    AdmissibleTriple base = construct_admissible(pres.region, pres.focus, eps);
    TransitionResult tr = transition(pres, eps);
    const Region& img = tr.image.region;

    double x_min = rat_d(img.x_min), x_max = rat_d(img.x_max);
    double y_min = rat_d(img.lower.ys.front()), y_max = rat_d(img.upper.ys.front());
    for (const Rat& y : img.lower.ys) y_min = std::min(y_min, rat_d(y));
    for (const Rat& y : img.upper.ys) y_max = std::max(y_max, rat_d(y));

    // strips rebuilt at each scale with the default bounding curves
    auto scaled = [&](int k) {
        AdmissibleTriple t;
        Rat f(1);
        for (int i = 0; i < k; ++i) f /= 2;
        for (const HalfStrip& s : base.strips)
            t.strips.push_back(
                make_half_strip(s.center, s.sign, s.eta * f, std::nullopt));
        return t;
    };

    std::vector<LimitStep> out;
    AdmissibleTriple prev;
    for (int k = 0; k <= n_steps; ++k) {
        AdmissibleTriple cur = scaled(k);

        bool nested = true;
        if (k > 0) {
            for (size_t i = 0; i < cur.strips.size(); ++i) {
                const HalfStrip& a = cur.strips[i];
                const HalfStrip& b = prev.strips[i];
                bool inc = a.wall_lo() >= b.wall_lo() && a.wall_hi() <= b.wall_hi();
                for (const Rat& x : {a.wall_lo(), a.wall_hi()})
                    if (inc) {
                        Rat ga = a.gamma.eval(x), gb = b.gamma.eval(x);
                        inc = a.sign > 0 ? gb <= ga : gb >= ga;
                    }
                nested = nested && inc;
            }
        }

        // area of f(B) not covered by F(B - strips) = area of f(strips in B)
        long long count = 0;
        double cell_w = (x_max - x_min) / raster_n;
        double cell_h = (y_max - y_min) / raster_n;
        for (int i = 0; i < raster_n; ++i) {
            double x = x_min + (i + 0.5) * cell_w;
            Rat xr(x);
            if (xr < img.x_min || xr > img.x_max) continue;
            // invert the slab piece: the map preserves x
            auto v = is_vert(tr.map.piece_for_x(xr));
            double ky = rat_d(v->a) + static_cast<double>(v->k) * x;
            double lo = rat_d(pres.region.lower.eval(xr));
            double hi = rat_d(pres.region.upper.eval(xr));
            for (int j = 0; j < raster_n; ++j) {
                double y = y_min + (j + 0.5) * cell_h;
                double y_src = y - ky;  // preimage height in B
                if (y_src < lo || y_src > hi) continue;
                bool in_strip = false;
                for (const HalfStrip& s : cur.strips) {
                    if (xr < s.wall_lo() || xr > s.wall_hi()) continue;
                    double g = rat_d(s.gamma.eval(xr));
                    if (s.sign > 0 ? y_src >= g : y_src <= g) {
                        in_strip = true;
                        break;
                    }
                }
                if (in_strip) ++count;
            }
        }
        out.push_back({std::pow(0.5, k), nested, count * cell_w * cell_h});
        prev = cur;
    }
    return out;
}

}  // namespace carto
