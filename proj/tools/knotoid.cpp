// knotoid: command-line front end for the winding homology library.
#include "knotoid/errors.hpp"
#include "knotoid/fixtures.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/io.hpp"
#include "knotoid/statesum.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace knotoid;
using algebra::LaurentPoly;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

struct ComputeOptions {
    std::string input;
    std::string invariant = "winding";
    std::string format = "json";
    std::string trace;
    int jobs = 0;
    bool reduce = false;
};

struct TransformOptions {
    std::string op;
    std::vector<std::string> inputs;
    std::string output;
    int moves = 1;
    std::vector<std::string> modes{"over"};
    int rotate = 0;
    int edge = 0;
    int edge2 = 0;
    int chirality = 1;
};

int effective_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const std::string& text, const std::string& path = {})
{
    if (path.empty() || path == "-")
        std::cout << text << "\n";
    else
        io::write_file(path, text + "\n");
}

std::string poly_out(const LaurentPoly& p, const std::string& format)
{
    return format == "text" ? p.to_string() : io::serialize_poly(p);
}

struct LoadedInput {
    KnotoidPD pd;
    std::optional<geometry::GeometricDiagram> geom;
    std::optional<ShortcutTrace> trace;
};

// Runs f, prefixing input errors with the file they came from.
template <class F>
auto from_file(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const DegeneracyError& e) {
        throw DegeneracyError(path + ": " + e.what());
    } catch (const AmbiguityError& e) {
        throw AmbiguityError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

LoadedInput load_input(const std::string& path, const std::string& trace_path)
{
    const std::string text = io::read_file(path);
    LoadedInput in = from_file(path, [&] {
        LoadedInput in;
        if (io::is_geometric(text)) {
            in.geom = io::parse_geometric(text);
            geometry::EmbeddedPD e = geometry::embed(*in.geom);
            in.pd = e.pd;
            // Multi-knotoids have no combinatorial shortcut; read it off the plane curve.
            if (in.pd.has_closed_components() && !in.pd.is_closed())
                in.trace = geometry::trace_from_geometry(e, geometry::default_shortcut(e));
        } else {
            in.pd = io::parse_pd(text);
        }
        return in;
    });
    if (!trace_path.empty())
        in.trace = from_file(trace_path, [&] { return io::parse_trace(io::read_file(trace_path)); });
    return in;
}

HomologyTable winding_table(const LoadedInput& in, const ComputeOptions& o)
{
    TriGradedComplex cx = in.trace ? build_complex(in.pd, MuSource::trace, &*in.trace) : build_complex(in.pd);
    if (o.reduce)
        cx = reduce_complex(cx);
    return homology_ranks(cx, effective_jobs(o.jobs));
}

int cmd_compute(const ComputeOptions& o)
{
    LoadedInput in = load_input(o.input, o.trace);
    const ShortcutTrace* trace = in.trace ? &*in.trace : nullptr;
    const std::string& inv = o.invariant;
    if (inv == "winding") {
        HomologyTable t = winding_table(in, o);
        emit(o.format == "text" ? poincare(t).to_string() : io::serialize_ranks(t));
    } else if (inv == "kh") {
        emit(poly_out(specialize(poincare(winding_table(in, o))).kh, o.format));
    } else if (inv == "turaev") {
        emit(poly_out(turaev_qu(in.pd, trace), o.format));
    } else if (inv == "jones") {
        emit(poly_out(jones_A(in.pd), o.format));
    } else if (inv == "bracket") {
        emit(poly_out(kauffman_bracket(in.pd), o.format));
    } else if (inv == "refined" || inv == "bullet") {
        if (!in.geom)
            throw ValidationError(o.input + ": invariant '" + inv + "' needs geometric input");
        emit(poly_out(inv == "refined" ? refined_turaev(*in.geom) : refined_bullet(*in.geom), o.format));
    } else {
        throw ValidationError("unknown invariant '" + inv + "'");
    }
    return 0;
}

CutMode parse_mode(const std::string& s)
{
    if (s == "over")
        return CutMode::over;
    if (s == "under")
        return CutMode::under;
    if (s == "any")
        return CutMode::any;
    throw ValidationError("unknown cut mode '" + s + "'");
}

KnotoidPD load_pd_any(const std::string& path)
{
    const std::string text = io::read_file(path);
    return from_file(path, [&] {
        if (io::is_geometric(text))
            return geometry::pd_from_geometric(io::parse_geometric(text));
        return io::parse_pd(text);
    });
}

int cmd_transform(const TransformOptions& o)
{
    const std::size_t want = o.op == "product" ? 2 : 1;
    if (o.inputs.size() != want)
        throw ValidationError("transform '" + o.op + "' takes " + std::to_string(want) + " input file(s)");
    KnotoidPD pd = load_pd_any(o.inputs[0]);
    KnotoidPD out;
    if (o.op == "mirror") {
        out = mirror(pd);
    } else if (o.op == "reverse") {
        out = reverse(pd);
    } else if (o.op == "sym") {
        out = sym(pd);
    } else if (o.op == "product") {
        out = product(pd, load_pd_any(o.inputs[1]));
    } else if (o.op == "cut") {
        if (o.rotate != 0)
            pd = rotate_knot_labels(pd, o.rotate);
        std::vector<CutMode> modes;
        for (int k = 0; k < o.moves; ++k)
            modes.push_back(parse_mode(o.modes[std::min<std::size_t>(k, o.modes.size() - 1)]));
        out = cut_knot_to_knotoid(pd, modes);
    } else if (o.op == "r1") {
        out = insert_r1(pd, o.edge, o.chirality);
    } else if (o.op == "r2") {
        out = insert_r2(pd, o.edge, o.edge2);
    } else {
        throw ValidationError("unknown transform '" + o.op + "'");
    }
    const std::string text = io::serialize_pd(out);
    io::parse_pd(text); // round-trip guard
    emit(text, o.output);
    return 0;
}

// ---------------------------------------------------------------------------
// selftest

struct Check {
    std::string name;
    std::function<std::string()> run; // empty string = pass, otherwise the reason
};

std::string compare(const LaurentPoly& got, const LaurentPoly& want)
{
    if (got == want)
        return {};
    return "got " + got.to_string() + ", expected " + want.to_string();
}

LaurentPoly one_tqu()
{
    using algebra::Var;
    return LaurentPoly::constant({Var::t, Var::q, Var::u}, 1);
}

std::vector<Check> selftest_checks(const std::string& dir, int jobs)
{
    std::vector<Check> checks;
    auto w_of = [jobs](const KnotoidPD& pd) { return poincare(homology_ranks(build_complex(pd), jobs)); };

    for (const char* f : {"pd/trivial.json", "pd/kink_a.json", "pd/kink_b.json"})
        checks.push_back({f, [=] { return compare(w_of(fixtures::load_pd(f, dir)), one_tqu()); }});
    for (const char* f : {"geometric/trivial.json", "geometric/kink_a.json", "geometric/kink_b.json"})
        checks.push_back({f, [=] {
                              return compare(w_of(geometry::pd_from_geometric(fixtures::load_geometric(f, dir))), one_tqu());
                          }});
    for (const char* f : {"pd/trefoil_knotoid.json", "pd/figure8_knotoid.json"})
        checks.push_back({f, [=]() -> std::string {
                              auto w = w_of(fixtures::load_pd(f, dir));
                              for (const auto& [e, c] : w.terms())
                                  if (e[2] != 0)
                                      return "nonzero u-degree in " + w.to_string();
                              return {};
                          }});

    std::vector<fixtures::CutRecipe> golden;
    try {
        golden = fixtures::golden_knotoids(dir);
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        checks.push_back({"golden/knotoids.json", [msg] { return msg; }});
    }
    for (const auto& r : golden) {
        const std::string file = "knotoids/" + r.name + ".json";
        checks.push_back({file, [=] { return compare(w_of(fixtures::load_pd(file, dir)), fixtures::expected_w(r)); }});
    }

    std::vector<fixtures::RefinedGolden> refined;
    try {
        refined = fixtures::golden_refined(dir);
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        checks.push_back({"golden/refined.json", [msg] { return msg; }});
    }
    for (const auto& b : refined)
        checks.push_back({b.geometric, [=] {
                              using algebra::Var;
                              auto g = fixtures::load_geometric(b.geometric, dir);
                              auto ts = refined_turaev(g);
                              std::string r = compare(ts, LaurentPoly::parse({Var::A, Var::l, Var::h}, b.refined_text));
                              if (!r.empty())
                                  return r;
                              return compare(algebra::substitute(ts, algebra::Substitution::WindingToU),
                                             LaurentPoly::parse({Var::A, Var::u}, b.turaev_text));
                          }});
    return checks;
}

int crossing_count_of(const std::string& file, const std::string& dir)
{
    const std::string text = io::read_file(fixtures::resolve(file, dir));
    if (io::is_geometric(text))
        return geometry::pd_from_geometric(io::parse_geometric(text)).crossing_count();
    return io::parse_pd(text).crossing_count();
}

int cmd_selftest(bool quick, int jobs)
{
    const std::string dir = fixtures::fixture_dir();
    std::vector<Check> checks = selftest_checks(dir, effective_jobs(jobs));
    int failed = 0, skipped = 0;
    std::printf("%-34s %4s  %-6s %9s  %s\n", "fixture", "n", "result", "seconds", "detail");
    for (const Check& c : checks) {
        int n = -1;
        std::string detail;
        try {
            n = crossing_count_of(c.name, dir);
        } catch (const std::exception&) {
            // reported by the check itself
        }
        if (quick && n > 6) {
            ++skipped;
            std::printf("%-34s %4d  %-6s %9s\n", c.name.c_str(), n, "SKIP", "-");
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!detail.empty())
            ++failed;
        std::printf("%-34s %4d  %-6s %9.3f  %s\n", c.name.c_str(), n, detail.empty() ? "PASS" : "FAIL", secs,
                    detail.c_str());
    }
    std::printf("%zu checks, %d failed, %d skipped\n", checks.size(), failed, skipped);
    return failed ? 1 : 0;
}

template <class F>
int guarded(F&& f)
{
    try {
        return f();
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"winding homology of knotoids"};
    app.require_subcommand(1);

    ComputeOptions co;
    CLI::App* compute = app.add_subcommand("compute", "compute an invariant of a diagram");
    compute->add_option("--input", co.input, "PD or geometric diagram (JSON)")->required();
    compute->add_option("--invariant", co.invariant, "winding|kh|turaev|jones|bracket|refined|bullet")
        ->check(CLI::IsMember({"winding", "kh", "turaev", "jones", "bracket", "refined", "bullet"}));
    compute->add_option("--format", co.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    compute->add_option("--trace", co.trace, "shortcut trace (JSON) for multi-knotoids");
    compute->add_option("--jobs", co.jobs, "worker threads (0 = all cores)");
    compute->add_flag("--reduce", co.reduce, "cancel unit entries before computing ranks");

    TransformOptions to;
    CLI::App* transform = app.add_subcommand("transform", "write a transformed diagram");
    transform->add_option("--op", to.op, "mirror|reverse|sym|product|cut|r1|r2")
        ->required()
        ->check(CLI::IsMember({"mirror", "reverse", "sym", "product", "cut", "r1", "r2"}));
    transform->add_option("--input", to.inputs, "input diagram(s)")->required();
    transform->add_option("--output", to.output, "output file (default stdout)");
    transform->add_option("--moves", to.moves, "cut: crossings to retract")->check(CLI::NonNegativeNumber);
    transform->add_option("--mode", to.modes, "cut: over|under|any, one per move (last repeats)")->delimiter(',');
    transform->add_option("--rotate", to.rotate, "cut: shift knot labels before opening");
    transform->add_option("--edge", to.edge, "r1/r2: edge label");
    transform->add_option("--edge2", to.edge2, "r2: second edge label");
    transform->add_option("--chirality", to.chirality, "r1: +1 or -1")->check(CLI::IsMember({1, -1}));

    bool quick = false;
    int st_jobs = 0;
    CLI::App* selftest = app.add_subcommand("selftest", "run the bundled fixtures");
    selftest->add_flag("--quick", quick, "only fixtures with at most 6 crossings");
    selftest->add_option("--jobs", st_jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    if (*compute)
        return guarded([&] { return cmd_compute(co); });
    if (*transform)
        return guarded([&] { return cmd_transform(to); });
    return guarded([&] { return cmd_selftest(quick, st_jobs); });
}
