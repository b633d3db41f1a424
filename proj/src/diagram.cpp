#include "knotoid/diagram.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knotoid {

namespace {

std::string edge_str(int e)
{
    return "edge " + std::to_string(e);
}

std::string crossing_str(int c)
{
    return "crossing " + std::to_string(c);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

KnotoidPD::KnotoidPD()
{
    open_ = {1};
    validate();
}

KnotoidPD KnotoidPD::create(std::vector<CrossingRecord> crossings, std::vector<int> open,
                            std::vector<std::vector<int>> closed, std::vector<int> signs)
{
    KnotoidPD pd;
    pd.crossings_ = std::move(crossings);
    pd.open_ = std::move(open);
    pd.closed_ = std::move(closed);
    if (std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; }))
        signs.clear();
    pd.explicit_signs_ = std::move(signs);
    pd.validate();
    return pd;
}

int KnotoidPD::edge_index(int label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return -1;
    return static_cast<int>(it - labels_.begin());
}

bool KnotoidPD::has_edge(int label) const
{
    return edge_index(label) >= 0;
}

int KnotoidPD::leg_edge() const
{
    if (open_.empty())
        throw ValidationError("closed diagram has no leg");
    return open_.front();
}

int KnotoidPD::head_edge() const
{
    if (open_.empty())
        throw ValidationError("closed diagram has no head");
    return open_.back();
}

int KnotoidPD::sign(int c) const
{
    if (c < 0 || c >= crossing_count())
        throw ValidationError(crossing_str(c) + " out of range");
    return signs_[c];
}

int KnotoidPD::n_plus() const
{
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1));
}

int KnotoidPD::n_minus() const
{
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

std::vector<int> KnotoidPD::edges() const
{
    std::vector<int> out(open_);
    for (const auto& c : closed_)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::optional<int> KnotoidPD::successor(int label) const
{
    int i = edge_index(label);
    if (i < 0)
        throw ValidationError("unknown " + edge_str(label));
    if (succ_[i] < 0)
        return std::nullopt;
    return succ_[i];
}

int KnotoidPD::component_of(int label) const
{
    int i = edge_index(label);
    if (i < 0)
        throw ValidationError("unknown " + edge_str(label));
    return comp_[i];
}

SlotRef KnotoidPD::in_slot(int label) const
{
    int i = edge_index(label);
    if (i < 0)
        throw ValidationError("unknown " + edge_str(label));
    return in_slot_[i];
}

SlotRef KnotoidPD::out_slot(int label) const
{
    int i = edge_index(label);
    if (i < 0)
        throw ValidationError("unknown " + edge_str(label));
    return out_slot_[i];
}

bool KnotoidPD::slot_is_incoming(int c, int k) const
{
    const SlotRef s = in_slot(crossings_[c].e[k]);
    return s.crossing == c && s.slot == k;
}

void KnotoidPD::validate()
{
    const int n = crossing_count();
    if (!explicit_signs_.empty() && static_cast<int>(explicit_signs_.size()) != n)
        throw ValidationError("sign list length " + std::to_string(explicit_signs_.size()) +
                              " does not match crossing count " + std::to_string(n));
    for (int s : explicit_signs_)
        if (s != 1 && s != -1 && s != 0)
            throw ValidationError("explicit signs must be +1 or -1");

    // Components, uniqueness and orientation order.
    std::vector<std::vector<int>> comps;
    if (!open_.empty())
        comps.push_back(open_);
    for (const auto& c : closed_) {
        if (c.empty())
            throw ValidationError("empty closed component");
        comps.push_back(c);
    }
    if (comps.empty())
        throw ValidationError("diagram has no components");

    for (std::size_t i = 1; i < open_.size(); ++i)
        if (open_[i] <= open_[i - 1])
            throw ValidationError("open component labels must increase along orientation (at " +
                                  edge_str(open_[i]) + ")");
    for (const auto& c : closed_) {
        int descents = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[(i + 1) % c.size()] <= c[i])
                ++descents;
        if (c.size() >= 2 && descents != 1)
            throw ValidationError("closed component labels must increase cyclically along orientation (component starting at " +
                                  edge_str(c.front()) + ")");
    }

    labels_.clear();
    for (const auto& c : comps)
        labels_.insert(labels_.end(), c.begin(), c.end());
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i] == labels_[i - 1])
            throw ValidationError(edge_str(labels_[i]) + " appears in more than one position");

    const std::size_t ne = labels_.size();
    succ_.assign(ne, -1);
    comp_.assign(ne, -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        bool is_open = !open_.empty() && ci == 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int idx = edge_index(c[i]);
            comp_[idx] = static_cast<int>(ci);
            if (i + 1 < c.size())
                succ_[idx] = c[i + 1];
            else if (!is_open)
                succ_[idx] = c.front();
        }
    }

    // Slot counts.
    std::vector<int> count(ne, 0);
    for (int ci = 0; ci < n; ++ci)
        for (int l : crossings_[ci].e) {
            int idx = edge_index(l);
            if (idx < 0)
                throw ValidationError(crossing_str(ci) + " references unknown " + edge_str(l));
            ++count[idx];
        }
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        bool is_open = !open_.empty() && ci == 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int k = count[edge_index(c[i])];
            int expected;
            if (c.size() == 1)
                expected = is_open ? 0 : (k == 0 ? 0 : 2);
            else if (is_open && (i == 0 || i + 1 == c.size()))
                expected = 1;
            else
                expected = 2;
            if (k != expected)
                throw ValidationError(edge_str(c[i]) + " appears in " + std::to_string(k) +
                                      " crossing slots, expected " + std::to_string(expected));
        }
    }

    // Orientation of slots and sign inference.
    in_slot_.assign(ne, SlotRef{});
    out_slot_.assign(ne, SlotRef{});
    signs_.assign(n, 0);
    auto set_slot = [&](std::vector<SlotRef>& table, int label, int ci, int k, const char* what) {
        SlotRef& s = table[edge_index(label)];
        if (s.crossing >= 0)
            throw ValidationError(edge_str(label) + " " + what + " two crossing slots (" + crossing_str(s.crossing) +
                                  " and " + crossing_str(ci) + ")");
        s = SlotRef{ci, k};
    };
    auto succ_is = [&](int from, int to) { return succ_[edge_index(from)] == to; };

    auto place_over = [&](int ci, int s) {
        const CrossingRecord& r = crossings_[ci];
        signs_[ci] = s;
        if (s == 1) {
            set_slot(in_slot_, r.d(), ci, 3, "enters");
            set_slot(out_slot_, r.b(), ci, 1, "leaves");
        } else {
            set_slot(in_slot_, r.b(), ci, 1, "enters");
            set_slot(out_slot_, r.d(), ci, 3, "leaves");
        }
    };
    std::vector<int> undecided;
    for (int ci = 0; ci < n; ++ci) {
        const CrossingRecord& r = crossings_[ci];
        if (!succ_is(r.a(), r.c()))
            throw ValidationError(crossing_str(ci) + ": under-strand " + edge_str(r.a()) + " is not followed by " +
                                  edge_str(r.c()));
        bool plus = succ_is(r.d(), r.b());
        bool minus = succ_is(r.b(), r.d());
        int s = explicit_signs_.empty() ? 0 : explicit_signs_[ci];
        if (s == 1 && !plus)
            throw ValidationError(crossing_str(ci) + ": explicit sign +1 contradicts the over-strand orientation");
        if (s == -1 && !minus)
            throw ValidationError(crossing_str(ci) + ": explicit sign -1 contradicts the over-strand orientation");
        if (s == 0) {
            if (!plus && !minus)
                throw ValidationError(crossing_str(ci) + ": over-strand " + edge_str(r.b()) + ", " + edge_str(r.d()) +
                                      " is not consecutive along its component");
            if (!(plus && minus))
                s = plus ? 1 : -1;
        }
        set_slot(in_slot_, r.a(), ci, 0, "enters");
        set_slot(out_slot_, r.c(), ci, 2, "leaves");
        if (s != 0)
            place_over(ci, s);
        else
            undecided.push_back(ci);
    }
    // Two-edge closed components: one orientation may be forced because the
    // other would make an edge enter or leave twice.
    auto is_free = [&](const std::vector<SlotRef>& t, int label) { return t[edge_index(label)].crossing < 0; };
    while (!undecided.empty()) {
        std::vector<int> rest;
        for (int ci : undecided) {
            const CrossingRecord& r = crossings_[ci];
            bool plus_ok = is_free(in_slot_, r.d()) && is_free(out_slot_, r.b());
            bool minus_ok = is_free(in_slot_, r.b()) && is_free(out_slot_, r.d());
            if (plus_ok != minus_ok)
                place_over(ci, plus_ok ? 1 : -1);
            else
                rest.push_back(ci);
        }
        if (rest.size() == undecided.size())
            throw AmbiguityError(crossing_str(rest.front()) +
                                 ": sign is ambiguous (short closed component); give an explicit sign");
        undecided = std::move(rest);
    }
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        bool is_open = !open_.empty() && ci == 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int idx = edge_index(c[i]);
            if (count[idx] == 0)
                continue;
            bool need_in = !(is_open && i + 1 == c.size());
            bool need_out = !(is_open && i == 0);
            if ((in_slot_[idx].crossing >= 0) != need_in || (out_slot_[idx].crossing >= 0) != need_out)
                throw ValidationError(edge_str(c[i]) + " has inconsistent crossing incidences");
        }
    }

    // Planarity: Euler characteristic per connected piece.
    std::vector<Face> fs = faces();
    // Vertices: crossings 0..n-1, then leg (n) and head (n+1).
    UnionFind uf(n + 2);
    std::vector<char> vertex_used(n + 2, 0);
    for (int i = 0; i < n; ++i)
        vertex_used[i] = 1;
    auto tail_vertex = [&](int idx) {
        return out_slot_[idx].crossing >= 0 ? out_slot_[idx].crossing : n;
    };
    auto head_vertex = [&](int idx) {
        return in_slot_[idx].crossing >= 0 ? in_slot_[idx].crossing : n + 1;
    };
    std::vector<char> free_loop(ne, 0);
    for (std::size_t idx = 0; idx < ne; ++idx) {
        bool is_open = !open_.empty() && comp_[idx] == 0;
        if (!is_open && count[idx] == 0) {
            free_loop[idx] = 1;
            continue;
        }
        int t = tail_vertex(idx), h = head_vertex(idx);
        vertex_used[t] = vertex_used[h] = 1;
        uf.unite(t, h);
    }
    std::map<int, std::array<long, 3>> euler; // root -> V, E, F
    for (int v = 0; v < n + 2; ++v)
        if (vertex_used[v])
            euler[uf.find(v)][0] += 1;
    for (std::size_t idx = 0; idx < ne; ++idx)
        if (!free_loop[idx])
            euler[uf.find(tail_vertex(idx))][1] += 1;
    for (const Face& f : fs) {
        int idx = edge_index(f.front().edge);
        if (free_loop[idx])
            continue;
        euler[uf.find(tail_vertex(idx))][2] += 1;
    }
    for (const auto& [root, vef] : euler)
        if (vef[0] - vef[1] + vef[2] != 2) {
            std::string where = root < n ? crossing_str(root) : std::string("the open component");
            throw ValidationError("diagram is not planar (piece containing " + where + ")");
        }
}

std::vector<Face> KnotoidPD::faces() const
{
    const int ne = static_cast<int>(labels_.size());
    // Dart 2*idx = forward along edge idx, 2*idx+1 = backward.
    std::vector<char> seen(2 * ne, 0);
    std::vector<Face> out;
    auto dart_leaving = [&](int c, int k) {
        int idx = edge_index(crossings_[c].e[k]);
        const SlotRef& o = out_slot_[idx];
        if (o.crossing == c && o.slot == k)
            return 2 * idx;
        return 2 * idx + 1;
    };
    auto next_dart = [&](int dart) {
        int idx = dart / 2;
        bool fwd = dart % 2 == 0;
        const SlotRef end = fwd ? in_slot_[idx] : out_slot_[idx];
        if (end.crossing < 0) {
            if (succ_[idx] >= 0 && !(comp_[idx] == 0 && !open_.empty()))
                return dart; // free loop
            return dart ^ 1; // endpoint: bounce back
        }
        return dart_leaving(end.crossing, (end.slot + 1) % 4);
    };
    for (int start = 0; start < 2 * ne; ++start) {
        if (seen[start])
            continue;
        Face f;
        int d = start;
        do {
            seen[d] = 1;
            f.push_back(FaceSide{labels_[d / 2], d % 2 == 0});
            d = next_dart(d);
        } while (d != start);
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pass representation

PassDiagram to_passes(const KnotoidPD& pd)
{
    PassDiagram out;
    out.signs = pd.signs();
    auto build = [&](const std::vector<int>& comp, bool open) {
        PassComponent pc;
        pc.open = open;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            SlotRef s = pd.in_slot(comp[i]);
            if (s.crossing < 0)
                continue;
            pc.passes.push_back(Pass{s.crossing, s.slot % 2 == 1});
        }
        out.components.push_back(std::move(pc));
    };
    if (!pd.is_closed())
        build(pd.open_component(), true);
    for (const auto& c : pd.closed_components())
        build(c, false);
    return out;
}

KnotoidPD from_passes(const PassDiagram& pd)
{
    const int n = static_cast<int>(pd.signs.size());
    struct Strands {
        int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
        int unders = 0, overs = 0;
    };
    std::vector<Strands> st(n);
    std::vector<int> open;
    std::vector<std::vector<int>> closed;
    int label = 1;
    bool saw_open = false;
    for (const PassComponent& comp : pd.components) {
        const int m = static_cast<int>(comp.passes.size());
        std::vector<int> labels;
        if (comp.open) {
            if (saw_open)
                throw ValidationError("more than one open component");
            saw_open = true;
            for (int j = 0; j <= m; ++j)
                labels.push_back(label + j);
        } else {
            for (int j = 0; j < std::max(m, 1); ++j)
                labels.push_back(label + j);
        }
        for (int j = 0; j < m; ++j) {
            const Pass& p = comp.passes[j];
            if (p.crossing < 0 || p.crossing >= n)
                throw ValidationError("pass references " + crossing_str(p.crossing) + " out of range");
            int before = labels[j];
            int after = comp.open ? labels[j + 1] : labels[(j + 1) % m];
            Strands& s = st[p.crossing];
            if (p.over) {
                s.over_in = before;
                s.over_out = after;
                ++s.overs;
            } else {
                s.under_in = before;
                s.under_out = after;
                ++s.unders;
            }
        }
        label += static_cast<int>(labels.size());
        if (comp.open)
            open = std::move(labels);
        else
            closed.push_back(std::move(labels));
    }
    std::vector<CrossingRecord> records(n);
    for (int c = 0; c < n; ++c) {
        const Strands& s = st[c];
        if (s.overs != 1 || s.unders != 1)
            throw ValidationError(crossing_str(c) + " must be passed once over and once under");
        if (pd.signs[c] == 1)
            records[c].e = {s.under_in, s.over_out, s.under_out, s.over_in};
        else if (pd.signs[c] == -1)
            records[c].e = {s.under_in, s.over_in, s.under_out, s.over_out};
        else
            throw ValidationError(crossing_str(c) + " has no sign");
    }
    // Explicit signs only where the successor relation cannot decide.
    std::map<int, int> succ;
    if (!open.empty())
        for (std::size_t i = 0; i + 1 < open.size(); ++i)
            succ[open[i]] = open[i + 1];
    for (const auto& c : closed)
        for (std::size_t i = 0; i < c.size(); ++i)
            succ[c[i]] = c[(i + 1) % c.size()];
    std::vector<int> explicit_signs(n, 0);
    for (int c = 0; c < n; ++c) {
        const auto& r = records[c];
        auto sd = succ.find(r.d()), sb = succ.find(r.b());
        bool plus = sd != succ.end() && sd->second == r.b();
        bool minus = sb != succ.end() && sb->second == r.d();
        if (plus && minus)
            explicit_signs[c] = pd.signs[c];
    }
    return KnotoidPD::create(std::move(records), std::move(open), std::move(closed), std::move(explicit_signs));
}

KnotoidPD normalize(const KnotoidPD& pd)
{
    return from_passes(to_passes(pd));
}

KnotoidPD reverse(const KnotoidPD& pd)
{
    PassDiagram p = to_passes(pd);
    for (auto& comp : p.components)
        std::reverse(comp.passes.begin(), comp.passes.end());
    return from_passes(p);
}

KnotoidPD mirror(const KnotoidPD& pd)
{
    PassDiagram p = to_passes(pd);
    for (auto& comp : p.components)
        for (auto& pass : comp.passes)
            pass.over = !pass.over;
    for (int& s : p.signs)
        s = -s;
    return from_passes(p);
}

KnotoidPD sym(const KnotoidPD& pd)
{
    PassDiagram p = to_passes(pd);
    for (int& s : p.signs)
        s = -s;
    return from_passes(p);
}

namespace {

void shift_crossings(PassDiagram& p, int offset)
{
    for (auto& comp : p.components)
        for (auto& pass : comp.passes)
            pass.crossing += offset;
}

} // namespace

KnotoidPD product(const KnotoidPD& pd1, const KnotoidPD& pd2)
{
    if (pd1.is_closed() || pd2.is_closed())
        throw ValidationError("product needs two knotoid diagrams");
    PassDiagram a = to_passes(pd1);
    PassDiagram b = to_passes(pd2);
    shift_crossings(b, pd1.crossing_count());
    PassDiagram out;
    out.signs = a.signs;
    out.signs.insert(out.signs.end(), b.signs.begin(), b.signs.end());
    PassComponent open = a.components.front();
    open.passes.insert(open.passes.end(), b.components.front().passes.begin(), b.components.front().passes.end());
    out.components.push_back(std::move(open));
    out.components.insert(out.components.end(), a.components.begin() + 1, a.components.end());
    out.components.insert(out.components.end(), b.components.begin() + 1, b.components.end());
    return from_passes(out);
}

KnotoidPD disjoint_union(const KnotoidPD& pd, const KnotoidPD& closed_pd)
{
    if (!closed_pd.is_closed())
        throw ValidationError("disjoint union expects a closed diagram as second operand");
    PassDiagram a = to_passes(pd);
    PassDiagram b = to_passes(closed_pd);
    shift_crossings(b, pd.crossing_count());
    a.signs.insert(a.signs.end(), b.signs.begin(), b.signs.end());
    a.components.insert(a.components.end(), b.components.begin(), b.components.end());
    return from_passes(a);
}

KnotoidPD cut_knot_to_knotoid(const KnotoidPD& knot, int moves, CutMode mode)
{
    if (moves < 0)
        throw ValidationError("cut: negative move count");
    return cut_knot_to_knotoid(knot, std::vector<CutMode>(moves, mode));
}

KnotoidPD cut_knot_to_knotoid(const KnotoidPD& knot, const std::vector<CutMode>& modes)
{
    if (!knot.is_closed() || knot.closed_components().size() != 1)
        throw ValidationError("cut: input must be a one-component closed diagram");
    const auto& comp = knot.closed_components().front();
    std::size_t start = std::min_element(comp.begin(), comp.end()) - comp.begin();
    PassComponent open;
    open.open = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
        SlotRef s = knot.in_slot(comp[(start + k) % comp.size()]);
        if (s.crossing >= 0)
            open.passes.push_back(Pass{s.crossing, s.slot % 2 == 1});
    }
    std::vector<char> removed(knot.crossing_count(), 0);
    for (std::size_t m = 0; m < modes.size(); ++m) {
        if (open.passes.empty())
            throw ValidationError("cut: requested " + std::to_string(modes.size()) + " moves but only " +
                                  std::to_string(m) + " crossings are available");
        Pass last = open.passes.back();
        if (modes[m] == CutMode::over && last.over)
            throw ValidationError("cut: move " + std::to_string(m + 1) + " expects the end to pass under " +
                                  crossing_str(last.crossing));
        if (modes[m] == CutMode::under && !last.over)
            throw ValidationError("cut: move " + std::to_string(m + 1) + " expects the end to pass over " +
                                  crossing_str(last.crossing));
        removed[last.crossing] = 1;
        std::erase_if(open.passes, [&](const Pass& p) { return p.crossing == last.crossing; });
    }
    std::vector<int> new_id(knot.crossing_count(), -1);
    PassDiagram out;
    for (int c = 0; c < knot.crossing_count(); ++c)
        if (!removed[c]) {
            new_id[c] = static_cast<int>(out.signs.size());
            out.signs.push_back(knot.sign(c));
        }
    for (auto& p : open.passes)
        p.crossing = new_id[p.crossing];
    out.components.push_back(std::move(open));
    return from_passes(out);
}

namespace {

// Component index and pass position of the point in the middle of `edge`.
std::pair<int, int> locate_edge(const KnotoidPD& pd, int edge)
{
    if (!pd.has_edge(edge))
        throw ValidationError("unknown " + edge_str(edge));
    int ci = pd.component_of(edge);
    const auto& comp = (!pd.is_closed() && ci == 0) ? pd.open_component()
                                                     : pd.closed_components()[ci - (pd.is_closed() ? 0 : 1)];
    int pos = static_cast<int>(std::find(comp.begin(), comp.end(), edge) - comp.begin());
    return {ci, pos};
}

} // namespace

KnotoidPD insert_r1(const KnotoidPD& pd, int edge, int chirality, bool first_pass_over)
{
    if (chirality != 1 && chirality != -1)
        throw ValidationError("kink chirality must be +1 or -1");
    auto [ci, pos] = locate_edge(pd, edge);
    PassDiagram p = to_passes(pd);
    int x = pd.crossing_count();
    auto& passes = p.components[ci].passes;
    passes.insert(passes.begin() + pos, {Pass{x, first_pass_over}, Pass{x, !first_pass_over}});
    p.signs.push_back(chirality);
    return from_passes(p);
}

KnotoidPD insert_r2(const KnotoidPD& pd, int edge_a, int edge_b)
{
    if (edge_a == edge_b)
        throw ValidationError("R2 insertion needs two distinct edges");
    auto [ca, pa] = locate_edge(pd, edge_a);
    auto [cb, pb] = locate_edge(pd, edge_b);
    const PassDiagram base = to_passes(pd);
    const int x = pd.crossing_count(), y = x + 1;
    for (int order = 0; order < 2; ++order)
        for (int s : {1, -1}) {
            PassDiagram p = base;
            std::vector<Pass> along_a = {Pass{x, true}, Pass{y, true}};
            std::vector<Pass> along_b = order == 0 ? std::vector<Pass>{Pass{x, false}, Pass{y, false}}
                                                   : std::vector<Pass>{Pass{y, false}, Pass{x, false}};
            // Insert at the later position first so the earlier one stays valid.
            bool a_first = ca != cb || pa > pb;
            auto ins = [&](int c, int pos, const std::vector<Pass>& v) {
                auto& passes = p.components[c].passes;
                passes.insert(passes.begin() + pos, v.begin(), v.end());
            };
            if (a_first) {
                ins(ca, pa, along_a);
                ins(cb, pb, along_b);
            } else {
                ins(cb, pb, along_b);
                ins(ca, pa, along_a);
            }
            p.signs.push_back(s);
            p.signs.push_back(-s);
            try {
                return from_passes(p);
            } catch (const ValidationError&) {
            }
        }
    throw ValidationError("R2 insertion: " + edge_str(edge_a) + " and " + edge_str(edge_b) + " do not co-bound a face");
}

KnotoidPD reorder(const KnotoidPD& pd, const std::vector<int>& perm)
{
    const int n = pd.crossing_count();
    if (static_cast<int>(perm.size()) != n)
        throw ValidationError("permutation length does not match crossing count");
    std::vector<char> seen(n, 0);
    for (int k : perm) {
        if (k < 0 || k >= n || seen[k])
            throw ValidationError("not a permutation of the crossings");
        seen[k] = 1;
    }
    std::vector<CrossingRecord> cr(n);
    std::vector<int> signs;
    for (int k = 0; k < n; ++k)
        cr[k] = pd.crossings()[perm[k]];
    if (!pd.explicit_signs().empty())
        for (int k = 0; k < n; ++k)
            signs.push_back(pd.explicit_signs()[perm[k]]);
    return KnotoidPD::create(std::move(cr), pd.open_component(), pd.closed_components(), std::move(signs));
}

KnotoidPD rotate_knot_labels(const KnotoidPD& knot, int r)
{
    if (!knot.is_closed() || knot.closed_components().size() != 1)
        throw ValidationError("label rotation needs a one-component knot");
    const std::vector<int>& comp = knot.closed_components().front();
    const int m = static_cast<int>(comp.size());
    for (int i = 0; i < m; ++i)
        if (comp[i] != i + 1)
            throw ValidationError("label rotation needs labels 1..m in order");
    auto shift = [&](int l) { return ((l - 1 + r) % m + m) % m + 1; };
    std::vector<CrossingRecord> cr = knot.crossings();
    for (auto& c : cr)
        for (int& l : c.e)
            l = shift(l);
    return KnotoidPD::create(std::move(cr), {}, {comp}, knot.explicit_signs());
}

} // namespace knotoid
