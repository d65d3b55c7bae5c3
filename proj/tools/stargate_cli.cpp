#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "stargate/error.hpp"
#include "stargate/filtration.hpp"
#include "stargate/json_io.hpp"
#include "stargate/symplectic.hpp"

using namespace stargate;

namespace {

// exit 2: bad input or schema violation; exit 3: internal invariant breach
constexpr int exit_ok = 0;
constexpr int exit_schema = 2;
constexpr int exit_internal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // text is a flat rendering; the JSON document is the source of truth
    for (const auto& [key, value] : doc.items())
        std::cout << key << ": " << value.dump() << "\n";
}

PointDescriptor showcase_descriptor() {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    PointDescriptor pt;
    pt.mu = 16;
    pt.n = 3;
    pt.profile = {3, {4, 0, 4, 0, 4, 0, 4}};
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 16;
    s.albert.albert_type = AlbertType::IV;
    s.albert.center = r.f;
    s.albert.degree_d = 2;
    s.albert.cm_conjugation = r.sigma;
    for (const auto& w : r.designated_places)
        s.albert.invariants.push_back({w.prime, w.place, rat(1, 2)});
    pt.algebra.summands = {s};
    return pt;
}

int run_star_check(const std::string& input, long prime_bound, const std::string& format) {
    PointDescriptor point = point_from_json(parse_document(read_file(input)));
    StarReport report = sigma_membership(point, prime_bound);
    emit(report_to_json(report), format);
    return exit_ok;
}

int run_filtration(const std::string& input, const std::string& format) {
    Json doc = parse_document(read_file(input));
    RatMatrix m = matrix_from_json(doc.at("matrix"), "document.matrix");
    unsigned center = doc.at("center").get<unsigned>();
    NilpotentOperator op(m);
    WeightFiltration wf = weight_filtration(op, center);
    Json out;
    out["schema"] = schema_version;
    out["profile"] = to_json(wf.profile);
    out["dim_im"] = dim_im_from_profile(wf.profile);
    out["nilpotency_degree"] = op.nilpotency_degree();
    emit(out, format);
    return exit_ok;
}

int run_symplectic(const std::string& input, const std::string& format) {
    Json doc = parse_document(read_file(input));
    unsigned mu = doc.at("dimension").get<unsigned>();
    SymplecticSpace space(mu);
    std::vector<RatVector> vectors;
    if (doc.contains("vectors"))
        for (std::size_t i = 0; i < doc["vectors"].size(); ++i) {
            RatVector v;
            for (std::size_t k = 0; k < doc["vectors"][i].size(); ++k)
                v.push_back(rational_from_json(
                    doc["vectors"][i][k],
                    "document.vectors[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
            vectors.push_back(std::move(v));
        }
    SymplecticBasis basis = extend_isotropic(vectors, space);
    auto cols = basis.flat();
    RatMatrix p = RatMatrix::from_columns(cols);
    bool gram_ok = p.transpose() * space.gram() * p == space.gram();
    Json out;
    out["schema"] = schema_version;
    Json e = Json::array(), f = Json::array();
    for (const auto& v : basis.e) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        e.push_back(std::move(row));
    }
    for (const auto& v : basis.f) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        f.push_back(std::move(row));
    }
    out["e"] = std::move(e);
    out["f"] = std::move(f);
    out["gram_ok"] = gram_ok;
    emit(out, format);
    return exit_ok;
}

int run_gseries(const std::string& input, const std::string& cap, long order, bool strong,
                const std::string& format) {
    Json doc = parse_document(read_file(input));
    TruncatedSeries y = series_from_json(doc);
    if (order > 0 && static_cast<std::size_t>(order) + 1 < y.coeffs.size())
        y.coeffs.resize(static_cast<std::size_t>(order) + 1);
    GSeriesVerdict verdict = g_series_candidate(y, parse_rational(cap));
    Json out;
    out["schema"] = schema_version;
    out["accept"] = verdict.accept;
    out["order"] = y.order();
    Json dseq = Json::array();
    for (const auto& d : verdict.diagnostics.d_seq) dseq.push_back(to_json(d));
    out["denominators"] = std::move(dseq);
    out["c_lo"] = verdict.diagnostics.c_estimate.lo.get_str();
    out["c_hi"] = verdict.diagnostics.c_estimate.hi.get_str();
    if (doc.contains("height")) {
        const Json& h = doc["height"];
        HeightBoundInput in;
        in.c1 = rational_from_json(h.at("c1"), "document.height.c1");
        in.c2 = rational_from_json(h.at("c2"), "document.height.c2");
        in.delta = h.at("delta").get<unsigned>();
        in.m = h.at("m").get<unsigned>();
        in.mu = h.at("mu").get<unsigned>();
        RationalInterval bound = hasse_height_bound(in, strong);
        out["height_bound_lo"] = bound.lo.get_str();
        out["height_bound_hi"] = bound.hi.get_str();
        out["degree_inflation"] = to_json(degree_inflation_bound(in.mu).value);
    }
    emit(out, format);
    return exit_ok;
}

int run_forge(unsigned beta, long l1, long l2, long q_bound, const std::string& format) {
    ForgeRecipe r = forge_recipe(beta, l1, l2, q_bound);
    emit(recipe_to_json(r), format);
    return exit_ok;
}

int run_example(const std::string& format) {
    PointDescriptor pt = showcase_descriptor();
    StarReport report = sigma_membership(pt, 1000);
    Json out;
    out["schema"] = schema_version;
    out["descriptor"] = to_json(pt);
    out["report"] = report_to_json(report);
    emit(out, format);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic toolkit for degeneration descriptors"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "json";
    long prime_bound = 1000;
    long order = 0;
    std::string cap = "2";
    bool strong = false;
    unsigned beta = 1;
    long l1 = 3, l2 = 5, q_bound = 200;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* star = app.add_subcommand("star-check", "evaluate the exclusion conditions");
    star->add_option("input", input, "point descriptor JSON")->required();
    star->add_option("--prime-bound", prime_bound, "scan bound for prime searches")
        ->check(CLI::Range(2l, 1000000l));
    add_format(star);

    CLI::App* filt = app.add_subcommand("filtration", "weight filtration of a nilpotent matrix");
    filt->add_option("input", input, "matrix + center JSON")->required();
    add_format(filt);

    CLI::App* sympl = app.add_subcommand("symplectic", "extend an isotropic family to a basis");
    sympl->add_option("input", input, "dimension + vectors JSON")->required();
    add_format(sympl);

    CLI::App* gs = app.add_subcommand("gseries-check", "denominator growth diagnostics");
    gs->add_option("input", input, "series JSON")->required();
    gs->add_option("--cap", cap, "geometric cap c for d_n <= c^n");
    gs->add_option("--order", order, "truncate the series to this order");
    gs->add_flag("--strong", strong, "use the strong height bound variant");
    add_format(gs);

    CLI::App* forge = app.add_subcommand("forge", "build a CM field with designated split places");
    forge->add_option("beta", beta, "degree of the totally real subfield")->required();
    forge->add_option("l1", l1, "first designated prime")->required();
    forge->add_option("l2", l2, "second designated prime")->required();
    forge->add_option("--q-bound", q_bound, "search bound for the auxiliary prime q");
    add_format(forge);

    CLI::App* example = app.add_subcommand("example", "regenerate the showcase descriptor");
    add_format(example);

    CLI11_PARSE(app, argc, argv);

    try {
        if (star->parsed()) return run_star_check(input, prime_bound, format);
        if (filt->parsed()) return run_filtration(input, format);
        if (sympl->parsed()) return run_symplectic(input, format);
        if (gs->parsed()) return run_gseries(input, cap, order, strong, format);
        if (forge->parsed()) return run_forge(beta, l1, l2, q_bound, format);
        if (example->parsed()) return run_example(format);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_schema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_schema;
    }
    return exit_schema;
}
