// Command-line front end: analyze cones, posets, or secant-of-Segre
// parameters and emit deterministic JSON (or a plain-text rendering).

#include "toric/hibi.hpp"
#include "toric/segre.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace toric;
using json = nlohmann::ordered_json;

namespace {

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_ll(x));
    return a;
}

json vecs_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(vec_json(v));
    return a;
}

Vec vec_from_json(const json& a) {
    if (!a.is_array()) throw input_error("expected an array of integers");
    Vec v;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw input_error("expected an integer entry");
        v.push_back(Int(x.get<long long>()));
    }
    return v;
}

std::vector<Vec> vecs_from_json(const json& a) {
    if (!a.is_array()) throw input_error("expected an array of integer vectors");
    std::vector<Vec> vs;
    for (const auto& x : a) vs.push_back(vec_from_json(x));
    return vs;
}

json locus_json(const LocusReport& rep, int dim_offset) {
    json out;
    out["gorenstein"] = rep.gorenstein;
    if (rep.locus_dimension)
        out["locus_dimension"] = *rep.locus_dimension + dim_offset;
    else
        out["locus_dimension"] = nullptr;
    out["punctured_spectrum_gorenstein"] = rep.gorenstein_on_punctured_spectrum;
    json faces = json::array();
    for (const Face& f : rep.maximal_contributing_faces) {
        json fj;
        fj["active_normals"] = f.active_normals;
        fj["dimension"] = f.dimension + dim_offset;
        faces.push_back(fj);
    }
    out["maximal_faces"] = faces;
    return out;
}

void render_locus_text(std::ostream& os, const json& rep) {
    os << "gorenstein: " << (rep["gorenstein"].get<bool>() ? "yes" : "no") << "\n";
    if (rep["locus_dimension"].is_null())
        os << "locus dimension: empty\n";
    else
        os << "locus dimension: " << rep["locus_dimension"].get<long long>() << "\n";
    os << "gorenstein on punctured spectrum: "
       << (rep["punctured_spectrum_gorenstein"].get<bool>() ? "yes" : "no") << "\n";
    os << "maximal contributing faces: " << rep["maximal_faces"].size() << "\n";
    for (const auto& f : rep["maximal_faces"]) {
        os << "  dimension " << f["dimension"].get<long long>() << ", active normals [";
        bool first = true;
        for (const auto& j : f["active_normals"]) {
            if (!first) os << " ";
            first = false;
            os << j.get<long long>();
        }
        os << "]\n";
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

Cone load_cone(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_object() || !j.contains("ambient_rank") || !j["ambient_rank"].is_number_integer())
        throw input_error("cone file needs an integer \"ambient_rank\"");
    long long rank_ll = j["ambient_rank"].get<long long>();
    if (rank_ll < 1) throw input_error("ambient_rank must be >= 1");
    std::size_t rank = static_cast<std::size_t>(rank_ll);
    bool has_rays = j.contains("rays"), has_ineqs = j.contains("inequalities");
    if (!has_rays && !has_ineqs) throw input_error("cone file needs \"rays\" or \"inequalities\"");
    Cone c;
    if (has_rays) c = cone_from_generators(vecs_from_json(j["rays"]), rank);
    if (has_ineqs) {
        Cone ci = cone_from_inequalities(vecs_from_json(j["inequalities"]), rank);
        if (has_rays) {
            if (!same_cone(c, ci))
                throw input_error("rays and inequalities describe different cones");
        } else {
            c = ci;
        }
    }
    return c;
}

Poset load_poset(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw input_error("poset file needs an \"elements\" array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw input_error("poset elements must be strings");
        std::string label = e.get<std::string>();
        if (label == "-inf" || label == "inf")
            throw input_error("labels '-inf' and 'inf' are reserved for the sentinels");
        elements.push_back(std::move(label));
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw input_error("\"relations\" must be an array of pairs");
        for (const auto& r : j["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw input_error("each relation must be a pair [a, b] of element labels");
            relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return Poset::from_relations(std::move(elements), relations);
}

std::string bounded_label(const HibiCone& hc, std::size_t i) {
    if (i == hc.bounded.bottom()) return "-inf";
    if (i == hc.bounded.top()) return "inf";
    return hc.poset.labels()[i];
}

json canonical_cone_json(const Cone& c) {
    json out;
    out["ambient_rank"] = c.ambient_rank;
    out["rays"] = vecs_json(c.generators);
    out["lineality"] = vecs_json(c.lineality);
    out["inequalities"] = vecs_json(c.normals);
    out["equations"] = vecs_json(c.equations);
    return out;
}

void emit(const json& out, const std::string& format,
          const std::function<void(std::ostream&, const json&)>& text_renderer) {
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    else
        text_renderer(std::cout, out);
}

int run_cone(const std::string& path, long long trace_bound, const std::string& format) {
    Cone input = load_cone(path);
    PreparedDual prep = prepare_dual_cone(input);
    LocusReport rep = non_gorenstein_locus(prep.cone);

    json out = locus_json(rep, prep.dim_offset);
    out["torus_factor_rank"] = prep.dim_offset;
    out["canonical_cone"] = canonical_cone_json(prep.cone);
    if (trace_bound > 0) {
        json gens = json::array();
        for (const Monomial& m : trace_generators_bounded(prep.cone, Int(trace_bound)))
            gens.push_back(vec_json(m.exponent));
        out["trace_bound"] = trace_bound;
        out["trace_generators"] = gens;
    }
    emit(out, format, [](std::ostream& os, const json& o) {
        render_locus_text(os, o);
        os << "torus factor rank: " << o["torus_factor_rank"].get<long long>() << "\n";
        os << "canonical cone: " << o["canonical_cone"]["rays"].size() << " rays, "
           << o["canonical_cone"]["inequalities"].size() << " facets in rank "
           << o["canonical_cone"]["ambient_rank"].get<long long>() << "\n";
        if (o.contains("trace_generators"))
            os << "trace generators up to height " << o["trace_bound"].get<long long>() << ": "
               << o["trace_generators"].size() << "\n";
    });
    return 0;
}

int run_poset(const std::string& path, long long cap, const std::string& format) {
    Poset p = load_poset(path);
    HibiCone hc = build_cone(p);
    LocusReport rep = hibi_formula_report(hc, static_cast<std::size_t>(cap));

    json out = locus_json(rep, 0);
    out["elements"] = p.labels();
    out["pure"] = is_pure(p);
    // faces of order-polytope dimension one, with their fibre partitions
    json table = json::array();
    for (const Face& f : faces(hc.cone)) {
        if (f.dimension != 2) continue;
        QuotientPoset q = quotient_from_face(hc, f);
        json blocks = json::array();
        for (const auto& b : q.blocks) {
            json block = json::array();
            for (std::size_t i : b) block.push_back(bounded_label(hc, i));
            blocks.push_back(block);
        }
        table.push_back(json{{"blocks", blocks}});
    }
    out["edge_faces"] = table;
    out["canonical_cone"] = canonical_cone_json(hc.cone);
    emit(out, format, [](std::ostream& os, const json& o) {
        render_locus_text(os, o);
        os << "pure: " << (o["pure"].get<bool>() ? "yes" : "no") << "\n";
        os << "edge faces (order-polytope dimension one): " << o["edge_faces"].size() << "\n";
        for (const auto& row : o["edge_faces"]) {
            os << " ";
            for (const auto& b : row["blocks"]) {
                os << " {";
                bool first = true;
                for (const auto& lab : b) {
                    if (!first) os << ",";
                    first = false;
                    os << lab.get<std::string>();
                }
                os << "}";
            }
            os << "\n";
        }
    });
    return 0;
}

std::vector<int> parse_k(const std::string& spec) {
    std::vector<int> k;
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            k.push_back(v);
        } catch (const std::exception&) {
            throw input_error("cannot parse '" + piece + "' in --k");
        }
    }
    if (k.empty()) throw input_error("--k must list at least two integers");
    std::sort(k.begin(), k.end());
    return k;
}

int run_segre(const std::string& kspec, const std::string& format) {
    SegreParams params = SegreParams::make(parse_k(kspec));
    SecantVerification v = verify_secant_full(params);

    json out = locus_json(v.report, v.prepared.dim_offset);
    out["k"] = params.k;
    if (v.closed_form)
        out["closed_form"] = *v.closed_form;
    else
        out["closed_form"] = nullptr;
    out["match"] = v.match;
    emit(out, format, [](std::ostream& os, const json& o) {
        render_locus_text(os, o);
        if (o["closed_form"].is_null())
            os << "closed form: empty\n";
        else
            os << "closed form: " << o["closed_form"].get<long long>() << "\n";
        os << "match: " << (o["match"].get<bool>() ? "yes" : "no") << "\n";
    });
    return 0;
}

int run_crosscheck(const std::string& path, long long cap, const std::string& format) {
    Poset p = load_poset(path);
    HibiCone hc = build_cone(p);
    LocusReport formula = hibi_formula_report(hc, static_cast<std::size_t>(cap));
    LocusReport pipeline = non_gorenstein_locus(hc.cone);

    bool dims_agree = formula.locus_dimension == pipeline.locus_dimension &&
                      formula.gorenstein == pipeline.gorenstein;
    bool radical_agree = true;
    std::size_t vertices = 0;
    for (const Vec& psi : order_polytope_vertices(p)) {
        ++vertices;
        if (radical_member_mp(hc, psi) != in_radical(hc.cone, pipeline, Monomial{psi}))
            radical_agree = false;
    }

    json out;
    out["agree"] = dims_agree && radical_agree;
    out["formula"] = locus_json(formula, 0);
    out["pipeline"] = locus_json(pipeline, 0);
    out["vertices_checked"] = vertices;
    out["radical_agreement"] = radical_agree;
    emit(out, format, [](std::ostream& os, const json& o) {
        os << "agree: " << (o["agree"].get<bool>() ? "yes" : "no") << "\n";
        os << "vertices checked: " << o["vertices_checked"].get<long long>() << "\n";
        os << "radical agreement: " << (o["radical_agreement"].get<bool>() ? "yes" : "no") << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-Gorenstein locus computations for affine normal toric varieties"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "analyze an input and report its locus");
    analyze->require_subcommand(1);

    std::string cone_path;
    long long trace_bound = 0;
    auto* cone_cmd = analyze->add_subcommand("cone", "dual cone from a JSON file");
    cone_cmd->add_option("file", cone_path, "cone JSON file")->required();
    cone_cmd->add_option("--trace-bound", trace_bound, "also enumerate trace generators up to this height")
        ->check(CLI::PositiveNumber);

    std::string poset_path;
    long long cap = 20;
    auto* poset_cmd = analyze->add_subcommand("poset", "Hibi ring of a poset from a JSON file");
    poset_cmd->add_option("file", poset_path, "poset JSON file")->required();
    poset_cmd->add_option("--cap", cap, "enumeration cap on the bounded poset size")
        ->check(CLI::PositiveNumber);

    std::string kspec;
    auto* segre_cmd = analyze->add_subcommand("segre", "secant of a Segre variety");
    segre_cmd->add_option("--k", kspec, "comma-separated k1,...,kn")->required();

    std::string cross_path;
    long long cross_cap = 20;
    auto* crosscheck = app.add_subcommand("crosscheck", "compare independent computation paths");
    auto* cross_poset = crosscheck->add_subcommand("poset", "formula vs cone pipeline vs radical test");
    cross_poset->add_option("file", cross_path, "poset JSON file")->required();
    cross_poset->add_option("--cap", cross_cap, "enumeration cap on the bounded poset size")
        ->check(CLI::PositiveNumber);
    crosscheck->require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (cone_cmd->parsed()) return run_cone(cone_path, trace_bound, format);
        if (poset_cmd->parsed()) return run_poset(poset_path, cap, format);
        if (segre_cmd->parsed()) return run_segre(kspec, format);
        if (cross_poset->parsed()) return run_crosscheck(cross_path, cross_cap, format);
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
