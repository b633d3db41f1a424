#include "knotoid/statesum.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace knotoid {

using algebra::LaurentPoly;
using algebra::Var;

int state_component_count(const KnotoidPD& pd, State s)
{
    std::vector<int> labels = pd.edges();
    std::sort(labels.begin(), labels.end());
    auto idx = [&](int label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    // Node 2e = start of edge e, 2e+1 = end of edge e.
    std::vector<int> parent(2 * labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (std::size_t e = 0; e < labels.size(); ++e)
        unite(2 * e, 2 * e + 1);
    for (int c = 0; c < pd.crossing_count(); ++c) {
        const CrossingRecord& r = pd.crossings()[c];
        auto node = [&](int k) {
            int e = idx(r.e[k]);
            SlotRef in = pd.in_slot(r.e[k]);
            return (in.crossing == c && in.slot == k) ? 2 * e + 1 : 2 * e;
        };
        int bit = state_bit(s, c);
        unite(node(0), node(smoothing_partner(0, bit)));
        unite(node(2), node(smoothing_partner(2, bit)));
    }
    int count = 0;
    for (std::size_t x = 0; x < parent.size(); ++x)
        if (find(static_cast<int>(x)) == static_cast<int>(x))
            ++count;
    return count;
}

namespace {

LaurentPoly delta_A(const std::vector<Var>& vars)
{
    return -LaurentPoly::power(vars, Var::A, 2) - LaurentPoly::power(vars, Var::A, -2);
}

// (-A^3)^(-wr)
LaurentPoly writhe_factor(const std::vector<Var>& vars, int wr)
{
    return LaurentPoly::power(vars, Var::A, -3 * wr, (wr % 2 == 0) ? 1 : -1);
}

void check_size(const KnotoidPD& pd)
{
    if (pd.crossing_count() > 30)
        throw ComputationError("state sum over too many crossings");
}

int state_mu(const KnotoidPD& pd, State s, const ShortcutTrace* trace)
{
    if (trace)
        return mu_from_shortcut(pd, *trace, s, resolve(pd, s));
    return mu_combinatorial(pd, s);
}

} // namespace

LaurentPoly kauffman_bracket(const KnotoidPD& pd)
{
    check_size(pd);
    const std::vector<Var> vars{Var::A};
    const int n = pd.crossing_count();
    std::map<std::pair<int, int>, long long> groups; // (sigma, |s|-1) -> count
    for (State s = 0; s < (State(1) << n); ++s)
        ++groups[{n - 2 * state_norm(s), state_component_count(pd, s) - 1}];
    LaurentPoly out(vars);
    LaurentPoly delta = delta_A(vars);
    for (const auto& [key, count] : groups)
        out += LaurentPoly::power(vars, Var::A, key.first, count) * delta.pow(key.second);
    return out;
}

LaurentPoly jones_A(const KnotoidPD& pd)
{
    return writhe_factor({Var::A}, pd.writhe()) * kauffman_bracket(pd);
}

LaurentPoly turaev_Au(const KnotoidPD& pd, const ShortcutTrace* trace)
{
    check_size(pd);
    const std::vector<Var> vars{Var::A, Var::u};
    const int n = pd.crossing_count();
    std::map<std::tuple<int, int, int>, long long> groups; // (sigma, mu, |s|-1)
    for (State s = 0; s < (State(1) << n); ++s)
        ++groups[{n - 2 * state_norm(s), state_mu(pd, s, trace), state_component_count(pd, s) - 1}];
    LaurentPoly sum(vars);
    LaurentPoly delta = delta_A(vars);
    for (const auto& [key, count] : groups) {
        auto [sigma, mu, k] = key;
        sum += LaurentPoly::monomial(vars, {sigma, mu}, count) * delta.pow(k);
    }
    return writhe_factor(vars, pd.writhe()) * sum;
}

LaurentPoly turaev_qu(const KnotoidPD& pd, const ShortcutTrace* trace)
{
    check_size(pd);
    const std::vector<Var> vars{Var::q, Var::u};
    const int n = pd.crossing_count();
    std::map<std::tuple<int, int, int>, long long> groups; // (||s||, mu, |s|-1)
    for (State s = 0; s < (State(1) << n); ++s)
        ++groups[{state_norm(s), state_mu(pd, s, trace), state_component_count(pd, s) - 1}];
    LaurentPoly sum(vars);
    LaurentPoly qq = LaurentPoly::power(vars, Var::q, 1) + LaurentPoly::power(vars, Var::q, -1);
    for (const auto& [key, count] : groups) {
        auto [norm, mu, k] = key;
        long long c = (norm % 2 == 0) ? count : -count;
        sum += LaurentPoly::monomial(vars, {norm, mu}, c) * qq.pow(k);
    }
    const int np = pd.n_plus(), nm = pd.n_minus();
    return LaurentPoly::monomial(vars, {np - 2 * nm, 0}, (nm % 2 == 0) ? 1 : -1) * sum;
}

namespace {

LaurentPoly refined_sum(const geometry::GeometricDiagram& geom, const std::optional<geometry::Polyline>& shortcut,
                        bool bullet)
{
    const geometry::EmbeddedPD e = geometry::embed(geom);
    const KnotoidPD& pd = e.pd;
    if (pd.is_closed())
        throw ValidationError("refined polynomials need an open component");
    check_size(pd);
    geometry::Polyline sc = shortcut ? *shortcut : geometry::default_shortcut(e);
    geometry::check_shortcut(e, sc);
    const double radius = geometry::smoothing_radius(e, sc);

    std::vector<Var> vars = bullet ? std::vector<Var>{Var::A, Var::B, Var::l, Var::h}
                                   : std::vector<Var>{Var::A, Var::l, Var::h};
    const int n = pd.crossing_count();
    const geometry::Point leg = e.open_polyline.front();
    // (sigma, wl, wh, e_s, f_s) -> count
    std::map<std::tuple<int, int, int, int, int>, long long> groups;
    for (State s = 0; s < (State(1) << n); ++s) {
        Resolution res = resolve(pd, s);
        auto [wl, wh] = geometry::state_winding_pair(e, sc, s, res, radius);
        int k = state_component_count(pd, s) - 1;
        int f = 0;
        if (bullet) {
            geometry::ResolvedCurves rc = geometry::resolve_geometric(e, s, res, radius);
            for (const auto& c : rc.circles)
                if (geometry::surrounds(c, leg, e.tolerance))
                    ++f;
        }
        ++groups[{n - 2 * state_norm(s), wl, wh, k - f, f}];
    }
    LaurentPoly sum(vars);
    LaurentPoly delta = delta_A(vars);
    for (const auto& [key, count] : groups) {
        auto [sigma, wl, wh, es, fs] = key;
        LaurentPoly term = bullet ? LaurentPoly::monomial(vars, {sigma, fs, wl, wh}, count)
                                  : LaurentPoly::monomial(vars, {sigma, wl, wh}, count);
        sum += term * delta.pow(es);
    }
    return writhe_factor(vars, pd.writhe()) * sum;
}

} // namespace

LaurentPoly refined_turaev(const geometry::GeometricDiagram& geom, const std::optional<geometry::Polyline>& shortcut)
{
    return refined_sum(geom, shortcut, false);
}

LaurentPoly refined_bullet(const geometry::GeometricDiagram& geom, const std::optional<geometry::Polyline>& shortcut)
{
    return refined_sum(geom, shortcut, true);
}

} // namespace knotoid
