#include "stargate/json_io.hpp"

#include <set>

#include "stargate/error.hpp"

namespace stargate {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw argument_error(path + ": " + why);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

Integer integer_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rational q = rational_from_json(j, path);
        if (!is_integer(q)) fail(path, "expected an integer");
        return q.get_num();
    }
    fail(path, "expected an integer");
}

unsigned unsigned_from_json(const Json& j, const std::string& path) {
    Integer n = integer_from_json(j, path);
    if (n < 0 || !n.fits_uint_p()) fail(path, "out of range");
    return static_cast<unsigned>(n.get_ui());
}

std::vector<unsigned> dims_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(unsigned_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

QPoly qpoly_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a coefficient array");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return QPoly(std::move(c));
}

Json witnesses_to_json(const StarCheck& check) {
    Json out = Json::array();
    for (const auto& per_summand : check.witnesses) {
        Json w = Json::array();
        for (const auto& l : per_summand) w.push_back(to_json(l));
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

Json parse_document(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw argument_error("document: malformed JSON");
    if (integer_from_json(field(doc, "schema", "document"), "document.schema") !=
        schema_version)
        fail("document.schema", "unsupported version");
    return doc;
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const argument_error& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

NumberField field_from_json(const Json& j, const std::string& path) {
    const Json& coeffs = field(j, "min_poly", path);
    if (!coeffs.is_array()) fail(path + ".min_poly", "expected a coefficient array");
    std::vector<Integer> c;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c.push_back(integer_from_json(coeffs[i], path + ".min_poly[" + std::to_string(i) + "]"));
    try {
        return NumberField(IntPoly(std::move(c)));
    } catch (const argument_error& e) {
        fail(path + ".min_poly", e.what());
    }
}

RatMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Json& row = j[r];
        std::string rp = path + "[" + std::to_string(r) + "]";
        if (!row.is_array()) fail(rp, "expected a row array");
        if (r == 0)
            cols = row.size();
        else if (row.size() != cols)
            fail(rp, "ragged rows");
    }
    RatMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rational_from_json(
                j[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    return m;
}

AlbertDescriptor albert_from_json(const Json& j, const std::string& path) {
    AlbertDescriptor d;
    const Json& type = field(j, "albert_type", path);
    if (!type.is_string()) fail(path + ".albert_type", "expected a string");
    try {
        d.albert_type = albert_type_from_string(type.get<std::string>());
    } catch (const argument_error& e) {
        fail(path + ".albert_type", e.what());
    }
    d.center = field_from_json(field(j, "center", path), path + ".center");
    d.degree_d = unsigned_from_json(field(j, "degree_d", path), path + ".degree_d");
    if (j.contains("cm_conjugation") && !j["cm_conjugation"].is_null())
        d.cm_conjugation = qpoly_from_json(j["cm_conjugation"], path + ".cm_conjugation");
    if (j.contains("invariants")) {
        const Json& invs = j["invariants"];
        if (!invs.is_array()) fail(path + ".invariants", "expected an array");
        for (std::size_t i = 0; i < invs.size(); ++i) {
            std::string ip = path + ".invariants[" + std::to_string(i) + "]";
            HasseInvariant h;
            h.prime = integer_from_json(field(invs[i], "prime", ip), ip + ".prime");
            h.place = unsigned_from_json(field(invs[i], "place", ip), ip + ".place");
            Integer num = integer_from_json(field(invs[i], "num", ip), ip + ".num");
            Integer den = integer_from_json(field(invs[i], "den", ip), ip + ".den");
            if (den == 0) fail(ip + ".den", "zero denominator");
            h.value = Rational(num) / Rational(den);
            d.invariants.push_back(std::move(h));
        }
    }
    if (j.contains("real_places_split")) {
        if (!j["real_places_split"].is_boolean())
            fail(path + ".real_places_split", "expected a boolean");
        d.real_places_split = j["real_places_split"].get<bool>();
    }
    if (j.contains("center_cyclic")) {
        if (!j["center_cyclic"].is_boolean()) fail(path + ".center_cyclic", "expected a boolean");
        d.center_cyclic = j["center_cyclic"].get<bool>();
    }
    return d;
}

PointDescriptor point_from_json(const Json& j) {
    PointDescriptor p;
    p.mu = unsigned_from_json(field(j, "mu", "point"), "point.mu");
    p.n = unsigned_from_json(field(j, "n", "point"), "point.n");
    const Json& prof = field(j, "profile", "point");
    p.profile.center = unsigned_from_json(field(prof, "center", "point.profile"),
                                          "point.profile.center");
    p.profile.dims = dims_from_json(field(prof, "dims", "point.profile"), "point.profile.dims");
    const Json& alg = field(j, "algebra", "point");
    const Json& summands = field(alg, "summands", "point.algebra");
    if (!summands.is_array()) fail("point.algebra.summands", "expected an array");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        std::string sp = "point.algebra.summands[" + std::to_string(i) + "]";
        HodgeSummand s;
        s.multiplicity =
            unsigned_from_json(field(summands[i], "multiplicity", sp), sp + ".multiplicity");
        s.dim_v = unsigned_from_json(field(summands[i], "dim_v", sp), sp + ".dim_v");
        s.albert = albert_from_json(field(summands[i], "albert", sp), sp + ".albert");
        p.algebra.summands.push_back(std::move(s));
    }
    if (j.contains("nilpotent") && !j["nilpotent"].is_null())
        p.nilpotent = matrix_from_json(j["nilpotent"], "point.nilpotent");
    return p;
}

TruncatedSeries series_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs", "series");
    if (!coeffs.is_array() || coeffs.size() < 2)
        fail("series.coeffs", "expected at least two coefficients");
    TruncatedSeries y;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        y.coeffs.push_back(rational_from_json(coeffs[i], "series.coeffs[" + std::to_string(i) + "]"));
    return y;
}

Json to_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return q.get_str();
}

Json to_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Json to_json(const NumberField& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.min_poly().coeffs()) coeffs.push_back(to_json(c));
    return Json{{"min_poly", std::move(coeffs)}};
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const AlbertDescriptor& d) {
    Json out;
    out["albert_type"] = to_string(d.albert_type);
    out["center"] = to_json(d.center);
    out["degree_d"] = d.degree_d;
    if (d.cm_conjugation) {
        Json sigma = Json::array();
        for (const auto& c : d.cm_conjugation->coeffs()) sigma.push_back(c.get_str());
        out["cm_conjugation"] = std::move(sigma);
    }
    Json invs = Json::array();
    for (const auto& h : d.invariants)
        invs.push_back(Json{{"prime", to_json(h.prime)},
                            {"place", h.place},
                            {"num", to_json(h.value.get_num())},
                            {"den", to_json(h.value.get_den())}});
    out["invariants"] = std::move(invs);
    out["real_places_split"] = d.real_places_split;
    out["center_cyclic"] = d.center_cyclic;
    return out;
}

Json to_json(const FiltrationProfile& p) {
    return Json{{"center", p.center}, {"dims", p.dims}};
}

Json to_json(const PointDescriptor& p) {
    Json out;
    out["schema"] = schema_version;
    out["mu"] = p.mu;
    out["n"] = p.n;
    out["profile"] = to_json(p.profile);
    Json summands = Json::array();
    for (const auto& s : p.algebra.summands)
        summands.push_back(Json{{"multiplicity", s.multiplicity},
                                {"dim_v", s.dim_v},
                                {"albert", to_json(s.albert)}});
    out["algebra"] = Json{{"summands", std::move(summands)}};
    if (p.nilpotent) out["nilpotent"] = to_json(*p.nilpotent);
    return out;
}

Json report_to_json(const StarReport& report) {
    Json out;
    out["schema"] = schema_version;
    out["bound"] = to_json(report.scan_bound);
    Json star;
    star["1"] = report.star1;
    for (unsigned k = 0; k < 6; ++k)
        star[std::to_string(k + 2)] = report.star[k].established();
    out["star"] = std::move(star);
    Json verdicts;
    Json witnesses;
    for (unsigned k = 0; k < 6; ++k) {
        verdicts[std::to_string(k + 2)] = to_string(report.star[k].verdict);
        witnesses[std::to_string(k + 2)] = witnesses_to_json(report.star[k]);
    }
    out["verdicts"] = std::move(verdicts);
    out["witnesses"] = std::move(witnesses);
    std::set<Integer> skipped;
    for (const auto& c : report.star)
        skipped.insert(c.skipped_primes.begin(), c.skipped_primes.end());
    Json sk = Json::array();
    for (const auto& l : skipped) sk.push_back(to_json(l));
    out["skipped_primes"] = std::move(sk);
    if (report.star[3].cyclic_shortcut)
        out["cyclic_shortcut"] = *report.star[3].cyclic_shortcut;
    else
        out["cyclic_shortcut"] = nullptr;
    out["star7_sharp"] = Json{{"verdict", to_string(report.star7_sharp.verdict)},
                              {"witnesses", witnesses_to_json(report.star7_sharp)}};
    out["remedy"] = Json{{"cond2", report.remedy.cond2}, {"cond3", report.remedy.cond3}};
    out["sigma_member"] = report.sigma_member;
    out["height_template"] = Json{{"c1", report.height_template.c1.get_str()},
                                  {"c2", report.height_template.c2.get_str()},
                                  {"delta", report.height_template.delta},
                                  {"m", report.height_template.m},
                                  {"mu", report.height_template.mu}};
    return out;
}

Json recipe_to_json(const ForgeRecipe& recipe) {
    Json out;
    out["schema"] = schema_version;
    out["beta"] = recipe.beta;
    out["p"] = to_json(recipe.p);
    out["l1"] = to_json(recipe.l1);
    out["l2"] = to_json(recipe.l2);
    out["q"] = to_json(recipe.q);
    out["f0"] = to_json(recipe.f0);
    out["f"] = to_json(recipe.f);
    Json sigma = Json::array();
    for (const auto& c : recipe.sigma.coeffs()) sigma.push_back(c.get_str());
    out["sigma"] = std::move(sigma);
    Json places = Json::array();
    for (const auto& w : recipe.designated_places)
        places.push_back(Json{{"prime", to_json(w.prime)}, {"place", w.place}});
    out["designated_places"] = std::move(places);
    return out;
}

} // namespace stargate
