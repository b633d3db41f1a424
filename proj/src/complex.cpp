#include "knotoid/complex.hpp"

#include "knotoid/errors.hpp"

#include <stdexcept>

namespace knotoid {

int ClassComplex::dim(int i) const
{
    auto it = generators.find(i);
    return it == generators.end() ? 0 : static_cast<int>(it->second.size());
}

std::size_t TriGradedComplex::generator_count() const
{
    std::size_t total = 0;
    for (const auto& [key, cc] : classes)
        for (const auto& [i, g] : cc.generators)
            total += g.size();
    return total;
}

namespace {

struct Image {
    std::uint32_t labels;
    int coef;
};

// Edge map between adjacent states. Component indices: 0 = segment, k = circle k-1.
class EdgeMap {
public:
    EdgeMap(const Resolution& from, const Resolution& to, int c) : to_(to)
    {
        p_ = from.site_components[c][0];
        q_ = from.site_components[c][1];
        p2_ = to.site_components[c][0];
        q2_ = to.site_components[c][1];
        const int k = static_cast<int>(from.circles.size());
        target_.assign(k, -1);
        for (int j = 0; j < k; ++j) {
            if (j + 1 == p_ || j + 1 == q_)
                continue;
            int t = to.component_of_edge(from.circles[j].front().edge);
            if (t <= 0)
                throw std::logic_error("untouched circle lost between adjacent states");
            target_[j] = t - 1;
        }
        if (p_ != q_ && p2_ != q2_)
            throw std::logic_error("two components stayed two across a single smoothing change");
    }

    // Appends images of `labels` to out.
    void apply(std::uint32_t labels, std::vector<Image>& out) const
    {
        std::uint32_t base = 0;
        for (std::size_t j = 0; j < target_.size(); ++j)
            if (target_[j] >= 0 && ((labels >> j) & 1u))
                base |= 1u << target_[j];
        auto bit = [&](int comp) { return comp == 0 ? 1u : (labels >> (comp - 1)) & 1u; };
        auto with = [](std::uint32_t b, int comp, std::uint32_t x) {
            return comp == 0 ? b : (b | (x << (comp - 1)));
        };

        if (p_ != q_) {
            // Merge into p2_ (== q2_).
            std::uint32_t lp = bit(p_), lq = bit(q_);
            if (p_ == 0 || q_ == 0) {
                std::uint32_t lc = p_ == 0 ? lq : lp;
                if (lc == 0)
                    out.push_back({base, 1}); // m2: 1 -> segment, X -> 0
                return;
            }
            if (lp && lq)
                return; // m1: X.X = 0
            out.push_back({with(base, p2_, lp | lq), 1});
            return;
        }
        if (p2_ == q2_)
            return; // anticurl: zero map
        if (p_ == 0) {
            // Δ2: new circle carries X.
            int fresh = p2_ == 0 ? q2_ : p2_;
            out.push_back({with(base, fresh, 1u), 1});
            return;
        }
        if (bit(p_)) {
            out.push_back({with(with(base, p2_, 1u), q2_, 1u), 1});
        } else {
            out.push_back({with(with(base, p2_, 0u), q2_, 1u), 1});
            out.push_back({with(with(base, p2_, 1u), q2_, 0u), 1});
        }
    }

private:
    const Resolution& to_;
    int p_, q_, p2_, q2_;
    std::vector<int> target_;
};

TriGradedComplex build_cube(const KnotoidPD& pd, bool reduced, MuSource source, const ShortcutTrace* trace)
{
    const int n = pd.crossing_count();
    if (n > 24)
        throw ComputationError("cube of resolutions too large (" + std::to_string(n) + " crossings)");
    if (reduced && pd.is_closed())
        throw ComputationError("the winding complex needs an open component");
    if (!reduced && !pd.is_closed())
        throw ComputationError("the unreduced complex needs a closed diagram");
    if (reduced && source == MuSource::trace && trace == nullptr)
        throw ComputationError("shortcut trace requested but not supplied");
    if (reduced && source == MuSource::combinatorial && pd.has_closed_components())
        throw ComputationError("u-grading of a multi-knotoid needs a shortcut trace");

    const State states = State(1) << n;
    const int np = pd.n_plus(), nm = pd.n_minus();

    TriGradedComplex cx;
    cx.n_plus = np;
    cx.n_minus = nm;
    cx.reduced_khovanov = reduced;

    std::vector<Resolution> res(states);
    std::vector<int> mu(states, 0);
    std::vector<std::size_t> offset(states + 1, 0);
    for (State s = 0; s < states; ++s) {
        res[s] = resolve(pd, s);
        if (reduced)
            mu[s] = source == MuSource::trace ? mu_from_shortcut(pd, *trace, s, res[s]) : mu_combinatorial(pd, s, res[s]);
        std::size_t k = res[s].circles.size();
        if (k > 30)
            throw ComputationError("too many circles in a resolution");
        offset[s + 1] = offset[s] + (std::size_t(1) << k);
    }
    if (offset[states] > std::size_t(1) << 31)
        throw ComputationError("chain complex too large");

    // Generators and their positions inside their (class, degree) block.
    cx.generators.resize(offset[states]);
    std::vector<int> local(offset[states]);
    std::vector<ClassComplex*> owner(offset[states]);
    for (State s = 0; s < states; ++s) {
        const int k = static_cast<int>(res[s].circles.size());
        const int i = state_norm(s) - nm;
        for (std::uint32_t lab = 0; lab < (1u << k); ++lab) {
            int nx = __builtin_popcount(lab);
            int deg = (k - nx) - nx - (reduced ? 1 : 0);
            int q = deg + i + np - nm + (reduced ? 1 : 0);
            std::size_t gid = offset[s] + lab;
            cx.generators[gid] = Generator{s, lab, i, q, mu[s]};
            ClassComplex& cc = cx.classes[GradingKey{q, mu[s]}];
            auto& block = cc.generators[i];
            local[gid] = static_cast<int>(block.size());
            block.push_back(static_cast<int>(gid));
            owner[gid] = &cc;
        }
    }
    for (auto& [key, cc] : cx.classes)
        for (const auto& [i, g] : cc.generators) {
            int rows = cc.dim(i + 1);
            if (rows > 0)
                cc.d.emplace(i, algebra::SparseMatrix(rows, static_cast<int>(g.size())));
        }

    std::vector<Image> images;
    for (State s = 0; s < states; ++s) {
        const int k = static_cast<int>(res[s].circles.size());
        for (int c = 0; c < n; ++c) {
            if (state_bit(s, c))
                continue;
            const State t = s | (State(1) << c);
            const int sign = (state_norm(s & ((State(1) << c) - 1)) % 2) ? -1 : 1;
            EdgeMap em(res[s], res[t], c);
            for (std::uint32_t lab = 0; lab < (1u << k); ++lab) {
                images.clear();
                em.apply(lab, images);
                const std::size_t src = offset[s] + lab;
                for (const Image& im : images) {
                    const std::size_t dst = offset[t] + im.labels;
                    const Generator& gs = cx.generators[src];
                    const Generator& gt = cx.generators[dst];
                    if (gt.q != gs.q || gt.u != gs.u || gt.i != gs.i + 1)
                        throw std::logic_error("edge map is not homogeneous of degree (1,0,0)");
                    owner[src]->d.at(gs.i).add(local[dst], local[src], sign * im.coef);
                }
            }
        }
    }
    for (auto& [key, cc] : cx.classes)
        for (auto& [i, m] : cc.d)
            m.finalize();
    return cx;
}

} // namespace

TriGradedComplex build_complex(const KnotoidPD& pd, MuSource source, const ShortcutTrace* trace)
{
    return build_cube(pd, true, source, trace);
}

TriGradedComplex build_unreduced_complex(const KnotoidPD& closed_pd)
{
    return build_cube(closed_pd, false, MuSource::combinatorial, nullptr);
}

std::string DSquaredFailure::describe(const TriGradedComplex& cx) const
{
    std::string out = "d^2 != 0 in class (q=" + std::to_string(key.q) + ", u=" + std::to_string(key.u) +
                      ") at degree " + std::to_string(i);
    if (source >= 0 && target >= 0 && static_cast<std::size_t>(std::max(source, target)) < cx.generators.size())
        out += ": state " + std::to_string(cx.generators[source].state) + " -> state " +
               std::to_string(cx.generators[target].state) + " (coefficient " + std::to_string(value) + ")";
    return out;
}

std::optional<DSquaredFailure> verify_d_squared(const TriGradedComplex& cx)
{
    for (const auto& [key, cc] : cx.classes)
        for (const auto& [i, di] : cc.d) {
            auto next = cc.d.find(i + 1);
            if (next == cc.d.end())
                continue;
            algebra::SparseMatrix prod = next->second.multiply(di);
            if (!prod.entries().empty()) {
                const auto& e = prod.entries().front();
                DSquaredFailure f;
                f.key = key;
                f.i = i;
                f.source = cc.generators.at(i)[e.col];
                f.target = cc.generators.at(i + 2)[e.row];
                f.value = e.value;
                return f;
            }
        }
    return std::nullopt;
}

} // namespace knotoid
