#pragma once

// Numerical construction of the smoothed cartographic embeddings: the exact
// transition map is kept outside the admissible half-strips and its corner
// along each smoothed cut is replaced, inside the strip, by a ramped blend
// of the two adjacent affine pieces, glued to the exact map across a seam
// margin. This module alone computes in 64-bit floats; all inputs are cast
// once from the exact types.

#include <vector>

#include "cartopoly/cartography.hpp"
#include "cartopoly/strips.hpp"

namespace carto {

struct SeamStrip {
    double x0;            // center line
    int sign;             // cut direction
    double eta;
    double wall_lo, wall_hi;
    std::vector<double> gamma_xs, gamma_ys;  // bounding curve
    double seam_y;        // h_j = y0 - sign*eta/4
    double delta;         // blend margin, eta/10
    double rho;           // ramp half-width around the center line
    double kL, cL;        // exact piece left of the line:  y + kL*x + cL
    double kR, cR;        // exact piece right of the line
    double focus_y;

    double gamma_at(double x) const;
    bool contains(double x, double y) const;
};

class EtaEmbedding {
  public:
    EtaEmbedding(const Presentation& pres, const SignChoice& eps,
                 const AdmissibleTriple& triple);

    // F(x, y) = (x, second(x, y))
    double second(double x, double y) const;
    // the exact transition map, cast to double
    double exact_second(double x, double y) const;
    bool in_any_strip(double x, double y) const;

    const std::vector<SeamStrip>& seams() const { return seams_; }
    const PiecewiseVertMap& atlas() const { return atlas_; }
    const Region& domain() const { return domain_; }

    // branch values at the seam (side: false = collar, true = cut side)
    double branch_at_seam(const SeamStrip& s, bool cut_side, double x) const;

  private:
    Region domain_;
    PiecewiseVertMap atlas_;
    std::vector<double> walls_;
    std::vector<std::pair<double, double>> piece_kc_;
    std::vector<SeamStrip> seams_;

    double piece_second(double x, double y) const;
    double blended_second(const SeamStrip& s, double x, double y) const;
};

struct EmbeddingCheckReport {
    double max_seam_discontinuity = 0;
    double max_c1_defect = 0;           // across seam and former cut
    long long injectivity_violations = 0;
    long long agreement_violations = 0;  // outside strips, tolerance 1e-12
    long long samples = 0;
};

EmbeddingCheckReport check_embedding(const EtaEmbedding& emb, int grid_n,
                                     double fd_step = 1e-5);

struct LimitStep {
    double eta_scale;     // 2^{-k}
    bool nested;          // strips included in the previous step's strips
    double discrepancy;   // rasterized area of f(B) not covered by F(B - strips)
};

// Width-halving sequence; discrepancy areas are rasterized on a 512x512
// grid over the image bounding box and must shrink toward zero.
std::vector<LimitStep> limit_sequence(const Presentation& pres,
                                      const SignChoice& eps, int n_steps,
                                      int raster_n = 512);

}  // namespace carto
