// Command-line surface over the polygon calculus: validation, cut analysis,
// sign-change transitions, image families, admissible strips, smoothing
// checks, Delzant equivalence, and SVG rendering.
//
// Exit codes: 0 success, 1 validation failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cartopoly/json_io.hpp"
#include "cartopoly/svg.hpp"

using namespace carto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

// "+,-,+" or "1,-1,1"
SignChoice parse_eps_flag(const std::string& s) {
    SignChoice eps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+" || tok == "+1" || tok == "1")
            eps.push_back(1);
        else if (tok == "-" || tok == "-1")
            eps.push_back(-1);
        else
            throw InputError("bad sign token '" + tok + "' in --eps");
    }
    return eps;
}

struct Loaded {
    Document doc;
};

Loaded load(const std::string& input, const std::string& eps_flag,
            std::optional<long long> offset_flag) {
    if (input.empty()) throw InputError("--input FILE is required");
    Loaded L;
    try {
        L.doc = parse_document(read_file(input));
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
    if (offset_flag) {
        // relabel the index window
        FocusSet f = L.doc.presentation.focus;
        f.offset = *offset_flag;
        L.doc.presentation.focus =
            order_focus(L.doc.presentation.region, f.points, *offset_flag);
    }
    if (!eps_flag.empty()) L.doc.eps = parse_eps_flag(eps_flag);
    if (L.doc.eps && L.doc.eps->size() != L.doc.presentation.focus.size())
        throw InputError("--eps length " + std::to_string(L.doc.eps->size()) +
                         " != focus count " +
                         std::to_string(L.doc.presentation.focus.size()));
    return L;
}

SignChoice eps_or_ref(const Loaded& L) {
    return L.doc.eps ? *L.doc.eps : L.doc.presentation.ref_signs;
}

std::string region_text(const Region& r) {
    std::ostringstream out;
    out << "vertices:";
    for (const RatPt& p : polygon(r))
        out << " (" << rat_str(p.x) << "," << rat_str(p.y) << ")";
    out << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-and-shear polygon calculus for vertical almost-toric images"};
    app.require_subcommand(1);

    std::string input, other, out_path, eps_flag, eta_scale = "1";
    long long offset_val = 0;
    bool have_offset = false, as_json = false;
    int grid = 512;

    app.add_option("--input", input, "input document (JSON)");
    app.add_flag("--json", as_json, "machine-readable JSON on stdout");
    app.add_option("--eps", eps_flag, "sign choice, e.g. \"+,-,+\"");
    app.add_option("--offset", offset_val, "relabel the focus index window")
        ->each([&](const std::string&) { have_offset = true; });
    app.add_option("--eta-scale", eta_scale, "strip width scale p/q");
    app.add_option("--grid", grid, "sampling resolution");
    app.add_option("--out", out_path, "write output to FILE");

    auto* c_validate = app.add_subcommand("validate", "check a document");
    auto* c_cuts = app.add_subcommand("cuts", "cut rays, connectivity, reduction");
    auto* c_family = app.add_subcommand("family", "all cartographic images");
    auto* c_transform = app.add_subcommand("transform", "transition to --eps");
    auto* c_strips = app.add_subcommand("strips", "construct admissible strips");
    auto* c_smooth = app.add_subcommand("smooth", "smoothed embedding checks");
    auto* c_equiv = app.add_subcommand("equiv", "AGL(2;Z) equivalence of two images");
    auto* c_render = app.add_subcommand("render", "SVG picture");

    std::string other_help = "second document for comparison";
    c_equiv->add_option("--other", other, other_help);

    CLI11_PARSE(app, argc, argv);

    try {
        auto offset_opt =
            have_offset ? std::optional<long long>(offset_val) : std::nullopt;

        if (c_validate->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            ValidationReport rep = validate_presentation(L.doc.presentation);
            if (as_json) {
                Json out{{"ok", rep.ok()}, {"violations", Json::array()}};
                for (const Violation& v : rep.violations)
                    out["violations"].push_back(
                        {{"code", v.code}, {"message", v.message}});
                write_output(out_path, out.dump(2) + "\n");
            } else {
                std::ostringstream text;
                if (rep.ok())
                    text << "ok\n";
                else
                    for (const Violation& v : rep.violations)
                        text << v.code << ": " << v.message << "\n";
                write_output(out_path, text.str());
            }
            return rep.ok() ? kExitOk : kExitInvalid;
        }

        if (c_cuts->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            const Presentation& P = L.doc.presentation;
            SignChoice eps = eps_or_ref(L);
            bool connected = complement_connected(P.focus, eps);
            SignChoice eps_hat = reduce_signs(P.focus, eps);
            auto comps = complement_components(P.region, P.focus, eps);
            Json rays = Json::array();
            for (const CutRay& r : cut_rays(P.region, P.focus, eps))
                rays.push_back({{"x", rat_to_json(r.base.x)},
                                {"y", rat_to_json(r.base.y)},
                                {"sign", r.sign},
                                {"y_end", rat_to_json(r.y_end)}});
            Json out{{"connected", connected},
                     {"eps", signs_to_json(eps)},
                     {"eps_hat", signs_to_json(eps_hat)},
                     {"components", comps.size()},
                     {"rays", rays}};
            if (as_json) {
                write_output(out_path, out.dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "cuts: " << rays.size() << "\n"
                     << "connected: " << (connected ? "yes" : "no") << "\n"
                     << "components: " << comps.size() << "\n";
                write_output(out_path, text.str());
            }
            return kExitOk;
        }

        if (c_family->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            auto fam = cartographic_family(L.doc.presentation);
            if (as_json) {
                write_output(out_path, family_to_json(fam).dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "images: " << fam.size() << "\n";
                for (const FamilyEntry& e : fam) {
                    text << "eps";
                    for (int s : e.eps) text << (s > 0 ? " +1" : " -1");
                    text << " | " << region_text(e.image);
                }
                write_output(out_path, text.str());
            }
            return kExitOk;
        }

        if (c_transform->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            if (!L.doc.eps) throw InputError("transform needs --eps (or doc eps)");
            TransitionResult tr = transition(L.doc.presentation, *L.doc.eps);
            if (as_json) {
                Json out{{"eps", signs_to_json(*L.doc.eps)},
                         {"map", map_to_json(tr.map)},
                         {"region", region_to_json(tr.image.region)},
                         {"presentation", presentation_to_json(tr.image)}};
                write_output(out_path, out.dump(2) + "\n");
            } else {
                write_output(out_path, region_text(tr.image.region));
            }
            return kExitOk;
        }

        if (c_strips->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            const Presentation& P = L.doc.presentation;
            SignChoice eps = eps_or_ref(L);
            AdmissibleTriple triple =
                construct_admissible(P.region, P.focus, eps);
            auto scale = parse_rat(eta_scale);
            if (!scale || !(*scale > 0) || *scale > 1)
                throw InputError("--eta-scale must be a rational in (0, 1]");
            if (*scale != 1) triple = shrink_widths(triple, *scale);
            AdmissibilityReport rep = check_admissible(triple, P.region, P.focus);
            StripsConnectivity conn = strips_complement_connected(P.region, triple);
            Json out = triple_to_json(triple);
            out["admissible"] = rep.ok();
            out["complement_connected"] = conn.connected;
            if (as_json) {
                write_output(out_path, out.dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "strips: " << triple.strips.size() << "\n"
                     << "admissible: " << (rep.ok() ? "yes" : "no") << "\n";
                write_output(out_path, text.str());
            }
            return rep.ok() ? kExitOk : kExitInvalid;
        }

        if (c_smooth->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            const Presentation& P = L.doc.presentation;
            SignChoice eps = eps_or_ref(L);
            AdmissibleTriple triple =
                L.doc.strips ? *L.doc.strips
                             : construct_admissible(P.region, P.focus, eps);
            auto scale = parse_rat(eta_scale);
            if (!scale || !(*scale > 0) || *scale > 1)
                throw InputError("--eta-scale must be a rational in (0, 1]");
            if (*scale != 1) triple = shrink_widths(triple, *scale);
            EtaEmbedding emb(P, eps, triple);
            EmbeddingCheckReport rep = check_embedding(emb, grid);
            Json out = embedding_report_to_json(rep);
            if (as_json) {
                write_output(out_path, out.dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "seam discontinuity: " << rep.max_seam_discontinuity << "\n"
                     << "c1 defect: " << rep.max_c1_defect << "\n"
                     << "injectivity violations: " << rep.injectivity_violations
                     << "\n"
                     << "agreement violations: " << rep.agreement_violations << "\n";
                write_output(out_path, text.str());
            }
            bool ok = rep.injectivity_violations == 0 &&
                      rep.agreement_violations == 0;
            return ok ? kExitOk : kExitInvalid;
        }

        if (c_equiv->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            if (other.empty()) throw InputError("equiv needs --other FILE");
            Document docB;
            try {
                docB = parse_document(read_file(other));
            } catch (const ParseError& e) {
                throw InputError(std::string("parse error: ") + e.what());
            }
            auto h = agl_equivalence(L.doc.presentation.region,
                                     docB.presentation.region);
            Json out{{"equivalent", h.has_value()}};
            if (h) out["h"] = affine_to_json(*h);
            if (as_json) {
                write_output(out_path, out.dump(2) + "\n");
            } else {
                write_output(out_path,
                             h ? "equivalent\n" : "not equivalent\n");
            }
            return kExitOk;
        }

        if (c_render->parsed()) {
            Loaded L = load(input, eps_flag, offset_opt);
            RenderOptions opt;
            if (L.doc.eps) opt.cuts = *L.doc.eps;
            if (L.doc.strips) opt.strips = *L.doc.strips;
            write_output(out_path, render_svg(L.doc.presentation, opt));
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
