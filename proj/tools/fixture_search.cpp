// Searches relabelings of a closed knot diagram for the cut whose winding
// homology matches a target Poincare polynomial.
#include "knotoid/errors.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/io.hpp"

#include <CLI11.hpp>
#include <iostream>

using namespace knotoid;

int main(int argc, char** argv)
{
    CLI::App app{"fixture labeling search"};
    std::string input, target_text;
    int moves = 1;
    bool first_only = false;
    int only_rotate = -1;
    app.add_option("--input", input, "closed knot PD JSON")->required();
    app.add_option("--target", target_text, "target W in variables t,q,u")->required();
    app.add_option("--moves", moves, "number of retraction moves");
    app.add_flag("--first", first_only, "stop at the first match");
    app.add_option("--rotate", only_rotate, "try a single label rotation");
    CLI11_PARSE(app, argc, argv);

    const std::vector<algebra::Var> vars{algebra::Var::t, algebra::Var::q, algebra::Var::u};
    const auto target = algebra::LaurentPoly::parse(vars, target_text);
    const KnotoidPD base = io::parse_pd(io::read_file(input));
    const int m = static_cast<int>(base.closed_components().front().size());
    int found = 0;
    for (int mir = 0; mir < 2; ++mir)
        for (int rev = 0; rev < 2; ++rev) {
            KnotoidPD k = base;
            if (mir)
                k = mirror(k);
            if (rev)
                k = reverse(k);
            for (int r = 0; r < m; ++r) {
                if (only_rotate >= 0 && r != only_rotate)
                    continue;
                KnotoidPD kr = r == 0 ? k : rotate_knot_labels(k, r);
                for (int mask = 0; mask < (1 << moves); ++mask) {
                    std::vector<CutMode> modes;
                    for (int b = 0; b < moves; ++b)
                        modes.push_back(((mask >> b) & 1) ? CutMode::under : CutMode::over);
                    try {
                        KnotoidPD cut = cut_knot_to_knotoid(kr, modes);
                        auto w = poincare(homology_ranks(build_complex(cut)));
                        if (w == target) {
                            ++found;
                            std::cout << "match: mirror=" << mir << " reverse=" << rev << " rotate=" << r << " modes=";
                            for (auto md : modes)
                                std::cout << (md == CutMode::over ? "over " : "under ");
                            std::cout << "\n";
                            if (first_only)
                                return 0;
                        }
                    } catch (const ValidationError&) {
                    }
                }
            }
        }
    std::cout << found << " matches\n";
    return found ? 0 : 1;
}
