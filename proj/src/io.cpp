#include "knotoid/io.hpp"

#include "knotoid/errors.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace knotoid::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
}

template <class T>
T get_as(const json& j, const std::string& what)
{
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ValidationError("field '" + what + "' has the wrong type");
    }
}

std::vector<int> int_list(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw ValidationError("field '" + what + "' must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ValidationError("field '" + what + "' must contain integers");
        out.push_back(x.get<int>());
    }
    return out;
}

geometry::Point point_of(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("vertex must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

KnotoidPD parse_pd(std::string_view text)
{
    json j = parse_json(text);
    if (!j.is_object())
        throw ValidationError("PD document must be a JSON object");
    for (const auto& [key, val] : j.items())
        if (key != "crossings" && key != "open" && key != "closed" && key != "signs" && key != "name" && key != "comment")
            throw ValidationError("unknown PD field '" + key + "'");
    if (!j.contains("crossings"))
        throw ValidationError("PD document lacks 'crossings'");
    std::vector<CrossingRecord> crossings;
    if (!j["crossings"].is_array())
        throw ValidationError("field 'crossings' must be an array");
    for (std::size_t c = 0; c < j["crossings"].size(); ++c) {
        std::vector<int> v = int_list(j["crossings"][c], "crossings[" + std::to_string(c) + "]");
        if (v.size() != 4)
            throw ValidationError("crossing " + std::to_string(c) + " must list four edge labels");
        crossings.push_back(CrossingRecord{{v[0], v[1], v[2], v[3]}});
    }
    std::vector<int> open;
    if (j.contains("open"))
        open = int_list(j["open"], "open");
    std::vector<std::vector<int>> closed;
    if (j.contains("closed")) {
        if (!j["closed"].is_array())
            throw ValidationError("field 'closed' must be an array of arrays");
        for (const auto& c : j["closed"])
            closed.push_back(int_list(c, "closed"));
    }
    std::vector<int> signs;
    if (j.contains("signs"))
        signs = int_list(j["signs"], "signs");
    if (open.empty() && closed.empty())
        throw ValidationError("PD document has neither 'open' nor 'closed' components");
    return KnotoidPD::create(std::move(crossings), std::move(open), std::move(closed), std::move(signs));
}

std::string serialize_pd(const KnotoidPD& pd)
{
    json j;
    j["crossings"] = json::array();
    for (const auto& c : pd.crossings())
        j["crossings"].push_back({c.e[0], c.e[1], c.e[2], c.e[3]});
    if (!pd.is_closed())
        j["open"] = pd.open_component();
    if (pd.has_closed_components())
        j["closed"] = pd.closed_components();
    if (!pd.explicit_signs().empty())
        j["signs"] = pd.explicit_signs();
    return j.dump();
}

bool is_geometric(std::string_view text)
{
    json j = parse_json(text);
    return j.is_object() && j.contains("components");
}

geometry::GeometricDiagram parse_geometric(std::string_view text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw ValidationError("geometric document needs a 'components' array");
    geometry::GeometricDiagram g;
    for (const auto& c : j["components"]) {
        geometry::GeoComponent comp;
        if (!c.contains("open") || !c["open"].is_boolean())
            throw ValidationError("component needs a boolean 'open'");
        comp.open = c["open"].get<bool>();
        if (!c.contains("vertices") || !c["vertices"].is_array())
            throw ValidationError("component needs a 'vertices' array");
        for (const auto& v : c["vertices"])
            comp.vertices.push_back(point_of(v));
        g.components.push_back(std::move(comp));
    }
    if (j.contains("over")) {
        if (!j["over"].is_array())
            throw ValidationError("field 'over' must be an array");
        for (const auto& o : j["over"]) {
            geometry::OverSpec s;
            std::vector<int> hint = int_list(o.at("crossing_hint"), "crossing_hint");
            if (hint.size() != 2)
                throw ValidationError("crossing_hint must name two segments");
            s.seg_a = hint[0];
            s.seg_b = hint[1];
            s.over_component = get_as<int>(o.at("over_component"), "over_component");
            s.over_segment = get_as<int>(o.at("over_segment"), "over_segment");
            g.over.push_back(s);
        }
    }
    if (j.contains("tolerance"))
        g.tolerance = get_as<double>(j["tolerance"], "tolerance");
    return g;
}

std::string serialize_geometric(const geometry::GeometricDiagram& g)
{
    json j;
    j["components"] = json::array();
    for (const auto& c : g.components) {
        json jc;
        jc["open"] = c.open;
        jc["vertices"] = json::array();
        for (const auto& v : c.vertices)
            jc["vertices"].push_back({v.x, v.y});
        j["components"].push_back(jc);
    }
    j["over"] = json::array();
    for (const auto& o : g.over)
        j["over"].push_back(
            {{"crossing_hint", {o.seg_a, o.seg_b}}, {"over_component", o.over_component}, {"over_segment", o.over_segment}});
    j["tolerance"] = g.tolerance;
    return j.dump();
}

ShortcutTrace parse_trace(std::string_view text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("trace") || !j["trace"].is_array())
        throw ValidationError("trace document needs a 'trace' array");
    ShortcutTrace t;
    for (const auto& h : j["trace"]) {
        std::vector<int> v = int_list(h, "trace");
        if (v.size() != 2 || (v[1] != 1 && v[1] != -1))
            throw ValidationError("trace entries must be [edge, +1|-1]");
        t.hits.push_back({v[0], v[1]});
    }
    return t;
}

std::string serialize_trace(const ShortcutTrace& t)
{
    json j;
    j["trace"] = json::array();
    for (const auto& h : t.hits)
        j["trace"].push_back({h.edge, h.sign});
    return j.dump();
}

std::string serialize_poly(const algebra::LaurentPoly& p)
{
    json j;
    j["vars"] = json::array();
    for (auto v : p.variables())
        j["vars"].push_back(std::string(algebra::var_name(v)));
    j["terms"] = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::array();
        for (std::size_t i = 0; i < e.size(); ++i) {
            int scale = algebra::exponent_scale(p.variables()[i]);
            if (e[i] % scale == 0)
                exp.push_back(e[i] / scale);
            else
                exp.push_back(static_cast<double>(e[i]) / scale);
        }
        j["terms"].push_back({{"exp", exp}, {"coef", c}});
    }
    return j.dump();
}

algebra::LaurentPoly parse_poly_json(std::string_view text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ValidationError("polynomial document needs 'vars' and 'terms'");
    std::vector<algebra::Var> vars;
    for (const auto& v : j["vars"])
        vars.push_back(algebra::var_from_name(get_as<std::string>(v, "vars")));
    algebra::LaurentPoly p(vars);
    for (const auto& t : j["terms"]) {
        const json& exp = t.at("exp");
        if (!exp.is_array() || exp.size() != vars.size())
            throw ValidationError("term exponent length does not match 'vars'");
        algebra::LaurentPoly::Exponents stored;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            double x = get_as<double>(exp[i], "exp") * algebra::exponent_scale(vars[i]);
            if (std::abs(x - std::round(x)) > 1e-9)
                throw ValidationError("exponent not representable");
            stored.push_back(static_cast<int>(std::lround(x)));
        }
        p.add_term(stored, get_as<std::int64_t>(t.at("coef"), "coef"));
    }
    return p;
}

std::string serialize_ranks(const HomologyTable& t)
{
    json j;
    j["ranks"] = json::array();
    for (const auto& [ijk, r] : t.ranks)
        j["ranks"].push_back({ijk[0], ijk[1], ijk[2], r});
    return j.dump();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write file '" + path + "'");
    out << content;
}

} // namespace knotoid::io
