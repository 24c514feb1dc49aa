// Command-line front end: validate, order, areas, areapoly, monsky, sample,
// color, corpus, diagonal.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "monsky/monsky.hpp"

using namespace monsky;
using json = io::json;

namespace {

io::Document load(const std::string &arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::string name = arg.substr(1);
        if (corpus::has(name) || name.rfind("diagonal-", 0) == 0) return io::document(corpus::get(name));
        for (const auto &d : corpus::dissection_names())
            if (d == name)
                return io::document(corpus::get_dissection(name), name.find("classical") != std::string::npos ||
                                                                          name == "bottom-midpoint"
                                                                      ? io::DocumentKind::Dissection
                                                                      : io::DocumentKind::GeneralizedDissection);
        throw SchemaError("no corpus entry named " + name);
    }
    return io::load_document(arg);
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

json points_json(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts) {
    json j = json::object();
    for (const auto &v : ct.vertices) j[v] = json::array({to_string(pts.at(v).x), to_string(pts.at(v).y)});
    return j;
}

json flags_json(const DrawingFlags &f) {
    return {{"isDrawing", f.is_drawing},
            {"isLifePreserving", f.is_life_preserving},
            {"isGeneric", f.is_generic},
            {"conditions", f.condition}};
}

void print(const json &j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Area polynomials and Monsky polynomials of constrained triangulations"};
    app.require_subcommand(1);
    std::string file, fan;
    auto add_file = [&](CLI::App *sub) {
        sub->add_option("file", file, "triangulation or dissection document (JSON), or @name for a corpus entry")
            ->required();
        sub->add_option("--fan", fan, "comma-separated fan roots for the poofagons of a dissection");
    };

    auto *validate = app.add_subcommand("validate", "check the triangulation invariants");
    add_file(validate);

    auto *order_cmd = app.add_subcommand("order", "drawing order, alpha values and dimension");
    add_file(order_cmd);
    std::string sequence;
    order_cmd->add_option("--sequence", sequence, "explicit comma-separated vertex order to check");

    auto *areas = app.add_subcommand("areas", "living-triangle areas as rational functions of the parameters");
    add_file(areas);
    bool free_corners = false;
    areas->add_flag("--free-corners", free_corners, "leave p, q, s free instead of pinning the unit square");

    auto *areapoly = app.add_subcommand("areapoly", "area polynomial p");
    add_file(areapoly);
    std::string term_order = "grevlex";
    areapoly->add_option("--order", term_order, "order inside the elimination blocks")
        ->check(CLI::IsMember({"lex", "grevlex"}));

    auto *monsky_cmd = app.add_subcommand("monsky", "p, canonical Monsky pair and their checks");
    add_file(monsky_cmd);

    auto *sample = app.add_subcommand("sample", "a generic rational drawing");
    add_file(sample);
    std::uint64_t seed = 0;
    std::string svg_out;
    sample->add_option("--seed", seed, "sampler seed");
    sample->add_option("--svg", svg_out, "write an SVG rendering here");

    auto *color_cmd = app.add_subcommand("color", "2-adic colouring of a sampled drawing and a rainbow triangle");
    add_file(color_cmd);
    color_cmd->add_option("--seed", seed, "sampler seed");

    auto *corpus_cmd = app.add_subcommand("corpus", "built-in examples");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_subcommand("list", "list the built-in examples");
    auto *emit = corpus_cmd->add_subcommand("emit", "print a built-in example as a document");
    std::string corpus_name;
    emit->add_option("name", corpus_name, "example name")->required();

    auto *diagonal = app.add_subcommand("diagonal", "emit the diagonal-case triangulation with N interior vertices");
    int diag_n = 1;
    diagonal->add_option("n", diag_n, "number of interior vertices")->required()->check(CLI::Range(1, 30));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (corpus_cmd->parsed()) {
            if (corpus_cmd->got_subcommand("list")) {
                for (const auto &n : corpus::names()) std::cout << n << "\n";
                for (const auto &n : corpus::dissection_names()) std::cout << n << "\n";
                std::cout << "diagonal-N\n";
            } else {
                std::cout << io::serialize(load("@" + corpus_name));
            }
            return 0;
        }
        if (diagonal->parsed()) {
            std::cout << io::serialize(diagonal_case(diag_n));
            return 0;
        }

        io::Document doc = load(file);
        ConstrainedTriangulation ct = doc.triangulation(split_list(fan));

        if (validate->parsed()) {
            auto rep = validate_ct(ct);
            json j{{"name", ct.name}, {"ok", rep.ok}, {"violations", json::array()}};
            for (const auto &v : rep.violations) j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
            if (rep.ok) {
                j["living"] = living_triangles(ct);
                j["combinatoriallyIrreducible"] = is_combinatorially_irreducible(ct);
                j["eulerCharacteristic"] = euler_characteristic(ct);
            }
            print(j);
            return rep.ok ? 0 : 1;
        }
        require_valid(ct);

        if (order_cmd->parsed()) {
            DrawingOrder o = sequence.empty() ? find_drawing_order(ct) : compute_alpha(ct, split_list(sequence));
            json alpha = json::object();
            for (std::size_t i = 0; i < o.sequence.size(); ++i) alpha[o.sequence[i]] = o.alpha[i];
            json j{{"name", ct.name},
                   {"sequence", o.sequence},
                   {"alpha", alpha},
                   {"dimension", o.dimension()},
                   {"heuristicDimension", heuristic_dimension(ct)}};
            if (sequence.empty()) j["layers"] = peeling_layers(ct);
            print(j);
            return 0;
        }
        if (areas->parsed()) {
            Parameterization par = build_parameterization(ct, find_drawing_order(ct), !free_corners);
            AreaSystem sys = area_system(ct, par);
            json coords = json::object();
            for (const auto &v : par.order.sequence)
                coords[v] = json::array({par.coords.at(v).x.to_string(), par.coords.at(v).y.to_string()});
            json w = json::object();
            for (std::size_t j = 0; j < sys.living.size(); ++j) w[sys.living[j]] = sys.W[j].to_string();
            print({{"name", ct.name},
                   {"fixedCorners", !free_corners},
                   {"parameters", *par.params},
                   {"coordinates", coords},
                   {"areas", w},
                   {"sigma", sys.sigma.to_string()}});
            return 0;
        }
        if (areapoly->parsed()) {
            AreaPolyOptions opt;
            opt.inner_lex = term_order == "lex";
            AreaPolynomial ap = area_polynomial(ct, opt);
            print({{"name", ct.name},
                   {"variables", *ap.vars()},
                   {"p", ap.p.to_string()},
                   {"degree", ap.d},
                   {"terms", ap.p.size()},
                   {"signWitness", ap.sign_witness},
                   {"seconds", ap.seconds}});
            return 0;
        }
        if (monsky_cmd->parsed()) {
            AreaPolynomial ap = area_polynomial(ct);
            MonskyPair mp = canonical_monsky(ap);
            auto sp = split_pm(ap.p);
            auto pf = is_positive(mp.f), pft = is_positive(mp.f_tilde);
            auto eq = equidissection_obstruction(ap.p);
            Parameterization par = drawable_parameterization(ct, {.require_sample = false});
            AreaSystem sys = area_system(ct, par);
            print({{"name", ct.name},
                   {"p", ap.p.to_string()},
                   {"degree", ap.d},
                   {"f", mp.f.to_string()},
                   {"fTilde", mp.f_tilde.to_string()},
                   {"pCongruentSigmaMod2", congruent_sigma_mod2(ap.p, ap.d)},
                   {"identity2fEquals1", verify_monsky_identity(mp.f, sys)},
                   {"identity2fTildeEquals1", verify_monsky_identity(mp.f_tilde, sys)},
                   {"small", {{"ok", sp.small}, {"witness", sp.small_witness}}},
                   {"split", {{"pPlus", sp.p_plus.to_string()}, {"pMinus", sp.p_minus.to_string()}, {"t", sp.t.to_string()}}},
                   {"positiveF", {{"ok", pf.ok}, {"violations", pf.violations}}},
                   {"positiveFTilde", {{"ok", pft.ok}, {"violations", pft.violations}}},
                   {"equidissection",
                    {{"pAtOnes", to_string(eq.p_at_ones)}, {"deformableToEqualAreas", eq.deformable_to_equal_areas}}}});
            return 0;
        }
        if (sample->parsed() || color_cmd->parsed()) {
            Parameterization par = build_parameterization(ct, find_drawing_order(ct), true);
            std::vector<BigRational> vals;
            Drawing d = sample_generic_drawing(ct, par, seed, {}, &vals);
            if (sample->parsed()) {
                json params = json::array();
                for (const auto &v : vals) params.push_back(to_string(v));
                json a = json::object();
                auto living = living_triangles(ct);
                auto areas_v = living_areas(ct, d.points);
                for (std::size_t i = 0; i < living.size(); ++i) a[living[i]] = to_string(areas_v[i]);
                print({{"name", ct.name},
                       {"seed", seed},
                       {"parameters", params},
                       {"points", points_json(ct, d.points)},
                       {"areas", a},
                       {"flags", flags_json(d.flags)}});
                if (!svg_out.empty()) {
                    std::ofstream out(svg_out);
                    if (!out) throw SchemaError(svg_out + ": cannot write");
                    out << render_svg(ct, d.points);
                }
                return 0;
            }
            RainbowResult rr = find_rainbow_triangle(ct, d.points);
            json colors = json::object();
            for (const auto &v : ct.vertices) colors[v] = std::string(1, to_char(rr.colors.at(v)));
            auto val = two_adic_valuation(rr.area);
            print({{"name", ct.name},
                   {"seed", seed},
                   {"points", points_json(ct, d.points)},
                   {"normalized", points_json(ct, rr.normalized)},
                   {"colors", colors},
                   {"rainbow", rr.triangle},
                   {"rainbowCount", rr.count},
                   {"rainbowArea", to_string(rr.area)},
                   {"rainbowAreaValuation", val ? json(*val) : json(nullptr)}});
            return 0;
        }
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
