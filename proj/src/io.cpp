#include "largeness/io.hpp"

#include <fstream>
#include <sstream>

namespace largeness {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

json element_to_json(const FieldElement& x) {
    json arr = json::array();
    for (const auto& c : x.coords()) arr.push_back(rational_string(c));
    return arr;
}

FieldElement element_from_json(const json& j, int d) {
    if (!j.is_array()) throw std::invalid_argument("element: JSON array expected");
    std::vector<Rat> coords;
    coords.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string())
            coords.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            coords.push_back(Rat(e.get<long long>()));
        else
            throw std::invalid_argument("element: entries must be strings or integers");
    }
    if (static_cast<int>(coords.size()) > d)
        throw std::invalid_argument("element: more coordinates than the field degree");
    coords.resize(d, Rat(0));
    return FieldElement(std::move(coords));
}

FieldElement element_from_string(const std::string& s, int d) {
    std::string t = s;
    // Allow a JSON array literal as well as a bare comma list.
    if (!t.empty() && t.front() == '[') return element_from_json(json::parse(t), d);
    std::vector<Rat> coords;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("element: empty coordinate");
        coords.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    if (static_cast<int>(coords.size()) > d)
        throw std::invalid_argument("element: more coordinates than the field degree");
    coords.resize(d, Rat(0));
    return FieldElement(std::move(coords));
}

json field_to_json(const NumberField& K) {
    json j;
    json poly = json::array();
    for (const auto& c : K.poly) poly.push_back(c.str());
    j["poly"] = poly;
    j["cm"] = K.cm_or_totally_real;
    j["precision_bits"] = K.prec_bits;
    return j;
}

NumberField field_from_json(const json& j, long default_precision_bits, long precision_override) {
    if (!j.contains("poly")) throw std::invalid_argument("field: missing 'poly'");
    std::vector<Int> coeffs;
    for (const auto& c : j["poly"]) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long long>());
        else
            throw std::invalid_argument("field: poly entries must be integers");
    }
    bool cm = j.value("cm", false);
    long prec = j.value("precision_bits", default_precision_bits);
    if (precision_override > 0) prec = precision_override;
    return make_field(coeffs, prec, cm);
}

NumberField load_field(const std::string& path, long default_precision_bits,
                       long precision_override) {
    return field_from_json(load_json_file(path), default_precision_bits, precision_override);
}

json units_to_json(const UnitGroup& U) {
    json j;
    j["torsion"] = {{"gen", element_to_json(U.torsion_gen)}, {"order", U.torsion_order}};
    json free = json::array();
    for (const auto& g : U.free_gens) free.push_back(element_to_json(g));
    j["free"] = free;
    return j;
}

UnitGroup units_from_json(const json& j, const NumberField& K, const RunConfig& cfg) {
    if (!j.contains("torsion")) throw std::invalid_argument("units: missing 'torsion'");
    FieldElement tg = element_from_json(j["torsion"]["gen"], K.d);
    int order = j["torsion"]["order"].get<int>();
    std::vector<FieldElement> free;
    for (const auto& e : j.value("free", json::array())) free.push_back(element_from_json(e, K.d));
    return build_unit_group(tg, order, free, K, cfg);
}

UnitGroup load_units(const std::string& path, const NumberField& K, const RunConfig& cfg) {
    return units_from_json(load_json_file(path), K, cfg);
}

SpecialType type_from_json(const json& j, const NumberField& K, const RunConfig& cfg) {
    FieldElement pi = element_from_json(j.at("pi"), K.d);
    std::vector<FieldElement> digits;
    for (const auto& e : j.at("digits")) digits.push_back(element_from_json(e, K.d));
    Int g;
    if (j.at("g").is_string())
        g = Int(j["g"].get<std::string>());
    else
        g = Int(j["g"].get<long long>());
    return make_special_type(K, pi, digits, g, cfg);
}

SpecialType load_type(const std::string& path, const NumberField& K, const RunConfig& cfg) {
    return type_from_json(load_json_file(path), K, cfg);
}

namespace {

json bf_to_json(const BigFloat& x) {
    return json{{"value", x.str()}, {"prec", x.precision()}};
}

BigFloat bf_from_json(const json& j) {
    return BigFloat::parse(j.at("value").get<std::string>(), j.at("prec").get<long>());
}

}  // namespace

json report_to_json(const LargenessReport& r) {
    json j;
    j["status"] = to_string(r.status);
    j["stage"] = r.stage;
    j["precision_bits"] = r.precision_bits;
    j["candidates_tested"] = r.candidates_tested;
    j["bound_estimate"] = bf_to_json(r.bound_estimate);
    json sols = json::array();
    for (const auto& s : r.solutions) {
        json js;
        js["exponents"] = s.exponents;
        js["torsion_k"] = s.torsion_k;
        js["witness"] = element_to_json(s.witness);
        js["margin"] = bf_to_json(s.margin);
        js["exact_boundary"] = s.exact_boundary;
        sols.push_back(std::move(js));
    }
    j["solutions"] = sols;
    json nm = json::array();
    for (const auto& n : r.near_misses) {
        json jn;
        jn["exponents"] = n.exponents;
        json row = json::array();
        for (const auto& v : n.row) row.push_back(bf_to_json(v));
        jn["row"] = row;
        jn["min_entry"] = bf_to_json(n.min_entry);
        nm.push_back(std::move(jn));
    }
    j["near_misses"] = nm;
    j["unresolved"] = r.unresolved;
    return j;
}

LargenessReport report_from_json(const json& j) {
    LargenessReport r;
    r.status = search_status_from_string(j.at("status").get<std::string>());
    r.stage = j.at("stage").get<std::string>();
    r.precision_bits = j.at("precision_bits").get<long>();
    r.candidates_tested = j.at("candidates_tested").get<long long>();
    r.bound_estimate = bf_from_json(j.at("bound_estimate"));
    for (const auto& js : j.at("solutions")) {
        SolutionWitness s;
        s.exponents = js.at("exponents").get<std::vector<long>>();
        s.torsion_k = js.at("torsion_k").get<long>();
        std::vector<Rat> coords;
        for (const auto& c : js.at("witness")) coords.push_back(parse_rational(c.get<std::string>()));
        s.witness = FieldElement(std::move(coords));
        s.margin = bf_from_json(js.at("margin"));
        s.exact_boundary = js.at("exact_boundary").get<bool>();
        r.solutions.push_back(std::move(s));
    }
    for (const auto& jn : j.at("near_misses")) {
        NearMiss n;
        n.exponents = jn.at("exponents").get<std::vector<long>>();
        for (const auto& v : jn.at("row")) n.row.push_back(bf_from_json(v));
        n.min_entry = bf_from_json(jn.at("min_entry"));
        r.near_misses.push_back(std::move(n));
    }
    r.unresolved = j.at("unresolved").get<std::vector<std::vector<long>>>();
    return r;
}

}  // namespace largeness
