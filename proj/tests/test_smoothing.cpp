#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cartopoly/smoothing.hpp"
#include "test_support.hpp"

using namespace carto;
using namespace carto::testsupport;

namespace {

Presentation one_ff_square() {
    Region sq = square4();
    FocusSet fs = order_focus(sq, {{{rat(2), rat(2)}, 1}}, 0);
    return make_presentation(sq, fs, {1});
}

}  // namespace

TEST_CASE("identity embedding when eps equals the reference signs") {
    Presentation pres = one_ff_square();
    AdmissibleTriple t = construct_admissible(pres.region, pres.focus, {1});
    EtaEmbedding emb(pres, {1}, t);
    Rng rng(811);
    for (int k = 0; k < 200; ++k) {
        double x = std::uniform_real_distribution<double>(0, 4)(rng);
        double y = std::uniform_real_distribution<double>(0, 4)(rng);
        CHECK(emb.second(x, y) == y);
    }
    EmbeddingCheckReport rep = check_embedding(emb, 64);
    CHECK(rep.max_seam_discontinuity == 0);
    CHECK(rep.max_c1_defect < 1e-12);
    CHECK(rep.injectivity_violations == 0);
    CHECK(rep.agreement_violations == 0);
}

TEST_CASE("one-ff square embedding: seam values and deep strip values") {
    Presentation pres = one_ff_square();
    AdmissibleTriple t = construct_admissible(pres.region, pres.focus, {-1});
    REQUIRE(t.strips.size() == 1);
    CHECK(t.strips[0].eta == 1);
    CHECK(t.strips[0].sign == -1);
    CHECK(t.strips[0].gamma.eval(rat(2)) == rat(5, 2));

    EtaEmbedding emb(pres, {-1}, t);
    REQUIRE(emb.seams().size() == 1);
    const SeamStrip& s = emb.seams()[0];
    CHECK(s.seam_y == doctest::Approx(2.25));
    CHECK(s.delta == doctest::Approx(0.1));

    // outside the strip F equals the exact transition map: the worked value
    CHECK(emb.second(2.2, 3.9) == doctest::Approx(4.1).epsilon(1e-12));
    CHECK(!emb.in_any_strip(2.2, 3.9));

    // deep inside the cut side, away from the center line, F matches the
    // adjacent exact piece (the seam-transport recipe)
    double F = emb.second(2.4, 0.5);
    double expect = 0.5 + (emb.exact_second(2.4, s.seam_y) - s.seam_y);
    CHECK(F == doctest::Approx(expect).epsilon(1e-12));
    // left of the line, deep: the identity piece
    CHECK(emb.second(1.6, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("one-ff square embedding passes the acceptance-grade checks") {
    Presentation pres = one_ff_square();
    AdmissibleTriple t = construct_admissible(pres.region, pres.focus, {-1});
    EtaEmbedding emb(pres, {-1}, t);
    EmbeddingCheckReport rep = check_embedding(emb, 512);
    CHECK(rep.max_seam_discontinuity < 1e-9);
    CHECK(rep.max_c1_defect < 1e-4);
    CHECK(rep.injectivity_violations == 0);
    CHECK(rep.agreement_violations == 0);
}

TEST_CASE("zero blend margin leaves a detectable corner at the seam") {
    Presentation pres = one_ff_square();
    AdmissibleTriple t = construct_admissible(pres.region, pres.focus, {-1});
    EtaEmbedding emb(pres, {-1}, t);
    // force the margin to zero: the raw ramp/exact corner shows up as an
    // x-slope jump of about 1/2 where the seam crosses the center line
    EtaEmbedding broken = emb;
    const_cast<SeamStrip&>(broken.seams()[0]).delta = 0;
    EmbeddingCheckReport rep = check_embedding(broken, 256);
    CHECK(rep.max_c1_defect >= 0.5 - 1e-6);
}

TEST_CASE("embedding for a two-line presentation") {
    Region sq = square4();
    FocusSet fs =
        order_focus(sq, {{{rat(1), rat(2)}, 1}, {{rat(3), rat(2)}, 1}}, 0);
    Presentation pres = make_presentation(sq, fs, {1, 1});
    AdmissibleTriple t = construct_admissible(sq, fs, {-1, 1});
    EtaEmbedding emb(pres, {-1, 1}, t);
    EmbeddingCheckReport rep = check_embedding(emb, 256);
    CHECK(rep.max_seam_discontinuity < 1e-9);
    CHECK(rep.max_c1_defect < 1e-4);
    CHECK(rep.injectivity_violations == 0);
    CHECK(rep.agreement_violations == 0);
}

TEST_CASE("non-admissible triples are rejected") {
    Presentation pres = one_ff_square();
    AdmissibleTriple bad;
    bad.strips.push_back(
        make_half_strip({rat(2), rat(2)}, -1, rat(21, 5), std::nullopt));
    CHECK_THROWS_AS(EtaEmbedding(pres, {-1}, bad), std::invalid_argument);
}

TEST_CASE("limit sequence: nested strips, shrinking discrepancy") {
    Presentation pres = one_ff_square();
    auto steps = limit_sequence(pres, {-1}, 4);
    REQUIRE(steps.size() == 5);
    CHECK(steps[0].eta_scale == 1.0);
    for (size_t k = 1; k < steps.size(); ++k) {
        CHECK(steps[k].nested);
        CHECK(steps[k].discrepancy < steps[k - 1].discrepancy);
    }
    CHECK(steps.back().discrepancy < steps.front().discrepancy / 8);

    // single entry case
    auto one = limit_sequence(pres, {-1}, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].nested);

    // no focus values: zero discrepancy throughout
    Region sq = square4();
    Presentation trivial = make_presentation(sq, order_focus(sq, {}, 0), {});
    for (const LimitStep& st : limit_sequence(trivial, {}, 3))
        CHECK(st.discrepancy == 0);
}

TEST_CASE("x is preserved and columns stay monotone on random presentations") {
    Rng rng(823);
    int configs = 0;
    while (configs < 6) {
        Region r = random_region(rng);
        FocusSet fs = random_focus(rng, r, 3);
        if (fs.empty()) continue;
        ++configs;
        SignChoice eps0(fs.size(), 1);
        Presentation pres = make_presentation(r, fs, eps0);
        SignChoice eps = reduce_signs(fs, random_signs(rng, fs.size()));
        AdmissibleTriple t = construct_admissible(r, fs, eps);
        EtaEmbedding emb(pres, eps, t);
        EmbeddingCheckReport rep = check_embedding(emb, 128);
        CHECK(rep.injectivity_violations == 0);
        CHECK(rep.agreement_violations == 0);
        CHECK(rep.max_seam_discontinuity < 1e-9);
    }
}
