#include "knotoid/resolution.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>

namespace knotoid {

int Resolution::component_of_edge(int label) const
{
    auto it = std::lower_bound(edge_labels.begin(), edge_labels.end(), label);
    if (it == edge_labels.end() || *it != label)
        throw ValidationError("unknown edge " + std::to_string(label));
    return edge_component[it - edge_labels.begin()];
}

bool Resolution::edge_forward_on_segment(int label) const
{
    for (const Arc& a : segment)
        if (a.edge == label)
            return a.forward;
    throw ValidationError("edge " + std::to_string(label) + " is not on the segment");
}

namespace {

int label_index(const std::vector<int>& labels, int label)
{
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
}

} // namespace

Resolution resolve(const KnotoidPD& pd, State s)
{
    const int n = pd.crossing_count();
    if (n > 63)
        throw ComputationError("too many crossings");
    if (n < 64 && (s >> n) != 0)
        throw ValidationError("state has bits beyond the crossing count");

    Resolution res;
    res.edge_labels = pd.edges();
    std::sort(res.edge_labels.begin(), res.edge_labels.end());
    const int ne = static_cast<int>(res.edge_labels.size());
    res.edge_component.assign(ne, -1);
    std::vector<char> used(ne, 0);

    // Walk starting on `edge` in direction `forward` until returning or hitting an endpoint.
    auto walk = [&](int edge, bool forward, std::vector<Arc>& arcs, std::vector<SegmentVisit>* visits) {
        int e = edge;
        bool fwd = forward;
        while (true) {
            int idx = label_index(res.edge_labels, e);
            if (used[idx])
                return;
            used[idx] = 1;
            arcs.push_back(Arc{e, fwd});
            SlotRef end = fwd ? pd.in_slot(e) : pd.out_slot(e);
            if (end.crossing < 0)
                return; // endpoint, or a free loop closing on itself
            if (visits)
                visits->push_back(SegmentVisit{end.crossing, end.slot});
            int partner = smoothing_partner(end.slot, state_bit(s, end.crossing));
            e = pd.crossings()[end.crossing].e[partner];
            fwd = !pd.slot_is_incoming(end.crossing, partner);
        }
    };

    if (!pd.is_closed()) {
        walk(pd.leg_edge(), true, res.segment, &res.visits);
        if (res.segment.back().edge != pd.head_edge() || !res.segment.back().forward)
            throw ComputationError("segment tracing did not reach the head");
    }
    for (int idx = 0; idx < ne; ++idx) {
        if (used[idx])
            continue;
        std::vector<Arc> circle;
        walk(res.edge_labels[idx], true, circle, nullptr);
        res.circles.push_back(std::move(circle));
    }
    // Labels are visited in ascending order, so circles are already sorted by minimum label.
    for (const Arc& a : res.segment)
        res.edge_component[label_index(res.edge_labels, a.edge)] = 0;
    for (std::size_t k = 0; k < res.circles.size(); ++k)
        for (const Arc& a : res.circles[k])
            res.edge_component[label_index(res.edge_labels, a.edge)] = static_cast<int>(k) + 1;

    res.site_components.resize(n);
    for (int c = 0; c < n; ++c) {
        const CrossingRecord& r = pd.crossings()[c];
        res.site_components[c] = {res.edge_component[label_index(res.edge_labels, r.e[0])],
                                  res.edge_component[label_index(res.edge_labels, r.e[2])]};
    }
    return res;
}

int mu_combinatorial(const KnotoidPD& pd, State s)
{
    return mu_combinatorial(pd, s, resolve(pd, s));
}

int mu_combinatorial(const KnotoidPD& pd, State s, const Resolution& res)
{
    if (pd.is_closed())
        return 0;
    if (pd.has_closed_components())
        throw ComputationError("the canonical shortcut formula needs a diagram without closed components; supply a shortcut trace");
    int mu = 0;
    for (const SegmentVisit& v : res.visits) {
        int bit = state_bit(s, v.crossing);
        int sign = pd.sign(v.crossing);
        int phi = pd.slot_is_incoming(v.crossing, v.approach_slot) ? 1 : -1;
        int lambda = (v.approach_slot % 2 == 1) ? 1 : -1;
        if (sign == 1 && bit == 1)
            mu -= phi * lambda;
        else if (sign == -1 && bit == 0)
            mu += phi * lambda;
    }
    return mu;
}

int mu_from_shortcut(const KnotoidPD& pd, const ShortcutTrace& trace, State, const Resolution& res)
{
    int k_dot = 0;
    int K_dot = 0;
    for (const auto& hit : trace.hits) {
        if (!pd.has_edge(hit.edge))
            throw ValidationError("shortcut trace references unknown edge " + std::to_string(hit.edge));
        if (hit.sign != 1 && hit.sign != -1)
            throw ValidationError("shortcut trace signs must be +1 or -1");
        K_dot += hit.sign;
        if (res.component_of_edge(hit.edge) == 0)
            k_dot += res.edge_forward_on_segment(hit.edge) ? hit.sign : -hit.sign;
    }
    return k_dot - K_dot;
}

} // namespace knotoid
