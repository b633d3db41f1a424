#include "knotoid/fixtures.hpp"

#include "knotoid/errors.hpp"
#include "knotoid/io.hpp"

#include <cstdlib>
#include <json.hpp>

#ifndef KNOTOID_DEFAULT_FIXTURE_DIR
#define KNOTOID_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace knotoid::fixtures {

using json = nlohmann::json;

namespace {

json load_manifest(const std::string& rel, const std::string& dir)
{
    const std::string path = resolve(rel, dir);
    try {
        return json::parse(io::read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

CutMode mode_of(const std::string& s, const std::string& where)
{
    if (s == "over")
        return CutMode::over;
    if (s == "under")
        return CutMode::under;
    if (s == "any")
        return CutMode::any;
    throw ValidationError(where + ": unknown cut mode '" + s + "'");
}

} // namespace

std::string fixture_dir()
{
    if (const char* env = std::getenv("KNOTOID_FIXTURES"); env && *env)
        return env;
    return KNOTOID_DEFAULT_FIXTURE_DIR;
}

std::string resolve(const std::string& rel, const std::string& dir)
{
    if (!rel.empty() && rel.front() == '/')
        return rel;
    return (dir.empty() ? fixture_dir() : dir) + "/" + rel;
}

std::vector<CutRecipe> golden_knotoids(const std::string& dir)
{
    json m = load_manifest("golden/knotoids.json", dir);
    std::vector<CutRecipe> out;
    try {
        for (const auto& k : m.at("knotoids")) {
            CutRecipe r;
            r.name = k.at("name").get<std::string>();
            r.knot = k.at("knot").get<std::string>();
            r.mirror = k.value("mirror", false);
            r.reverse = k.value("reverse", false);
            r.rotate = k.value("rotate", 0);
            for (const auto& md : k.at("modes"))
                r.modes.push_back(mode_of(md.get<std::string>(), r.name));
            r.w_text = k.at("W").get<std::string>();
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("golden/knotoids.json: ") + e.what());
    }
    return out;
}

KnotoidPD apply_recipe(const CutRecipe& r, const std::string& dir)
{
    KnotoidPD k = load_pd(r.knot, dir);
    if (r.mirror)
        k = mirror(k);
    if (r.reverse)
        k = reverse(k);
    if (r.rotate != 0)
        k = rotate_knot_labels(k, r.rotate);
    return cut_knot_to_knotoid(k, r.modes);
}

algebra::LaurentPoly expected_w(const CutRecipe& r)
{
    using algebra::Var;
    return algebra::LaurentPoly::parse({Var::t, Var::q, Var::u}, r.w_text);
}

std::vector<RefinedGolden> golden_refined(const std::string& dir)
{
    json m = load_manifest("golden/refined.json", dir);
    std::vector<RefinedGolden> out;
    try {
        for (const auto& b : m.at("bifoils"))
            out.push_back({b.at("name").get<std::string>(), b.at("geometric").get<std::string>(),
                           b.at("refined").get<std::string>(), b.at("T").get<std::string>()});
    } catch (const json::exception& e) {
        throw ValidationError(std::string("golden/refined.json: ") + e.what());
    }
    return out;
}

KnotoidPD load_pd(const std::string& rel, const std::string& dir)
{
    const std::string path = resolve(rel, dir);
    try {
        return io::parse_pd(io::read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const AmbiguityError& e) {
        throw AmbiguityError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

geometry::GeometricDiagram load_geometric(const std::string& rel, const std::string& dir)
{
    const std::string path = resolve(rel, dir);
    try {
        return io::parse_geometric(io::read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

} // namespace knotoid::fixtures
