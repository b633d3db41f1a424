#include "knotoid/homology.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <thread>
#include <unordered_map>

namespace knotoid {

using algebra::LaurentPoly;
using algebra::Var;

HomologyTable homology_ranks(const TriGradedComplex& cx, int jobs)
{
    std::vector<std::pair<GradingKey, const ClassComplex*>> work;
    for (const auto& [key, cc] : cx.classes)
        work.emplace_back(key, &cc);

    // Per class: degree -> rank of d_i.
    std::vector<std::map<int, int>> rank_of(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t w = next++; w < work.size(); w = next++)
            for (const auto& [i, m] : work[w].second->d)
                rank_of[w][i] = algebra::rank(m);
    };
    if (jobs <= 0)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, work.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    HomologyTable table;
    table.n_plus = cx.n_plus;
    table.n_minus = cx.n_minus;
    for (std::size_t w = 0; w < work.size(); ++w) {
        const auto& [key, cc] = work[w];
        for (const auto& [i, gens] : cc->generators) {
            int r_out = rank_of[w].count(i) ? rank_of[w][i] : 0;
            int r_in = rank_of[w].count(i - 1) ? rank_of[w][i - 1] : 0;
            int h = static_cast<int>(gens.size()) - r_out - r_in;
            if (h < 0)
                throw std::logic_error("negative homology rank");
            if (h > 0)
                table.ranks[{i, key.q, key.u}] = h;
        }
    }
    return table;
}

LaurentPoly poincare(const HomologyTable& table)
{
    LaurentPoly p({Var::t, Var::q, Var::u});
    for (const auto& [ijk, r] : table.ranks)
        p += LaurentPoly::monomial(p.variables(), {ijk[0], ijk[1], ijk[2]}, r);
    return p;
}

LaurentPoly euler_characteristic(const TriGradedComplex& cx)
{
    LaurentPoly p({Var::q, Var::u});
    for (const auto& [key, cc] : cx.classes)
        for (const auto& [i, gens] : cc.generators) {
            long long c = static_cast<long long>(gens.size()) * ((i % 2 == 0) ? 1 : -1);
            p += LaurentPoly::monomial(p.variables(), {key.q, key.u}, c);
        }
    return p;
}

Specializations specialize(const LaurentPoly& w)
{
    using algebra::Substitution;
    Specializations s;
    s.kh = algebra::substitute(w, Substitution::UOne);
    s.turaev = algebra::substitute(w, Substitution::TMinusOne);
    s.jones = algebra::substitute(s.kh, Substitution::TMinusOne);
    s.jones_minus = algebra::substitute(s.turaev, Substitution::USquaredMinusQInvCubed);
    s.jones_plus = algebra::substitute(s.turaev, Substitution::USquaredMinusQCubed);
    return s;
}

// ---------------------------------------------------------------------------
// Cancellation

namespace {

struct Overflow {};

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

std::int64_t sub_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

class ClassReducer {
public:
    explicit ClassReducer(const ClassComplex& cc)
    {
        for (const auto& [i, gens] : cc.generators)
            for (int g : gens)
                degree_[g] = i;
        for (const auto& [i, m] : cc.d) {
            const auto& src = cc.generators.at(i);
            const auto& dst = cc.generators.at(i + 1);
            for (const auto& e : m.entries()) {
                out_[src[e.col]][dst[e.row]] = e.value;
                in_[dst[e.row]].insert(src[e.col]);
            }
        }
    }

    void run()
    {
        std::deque<int> frontier;
        for (const auto& [g, col] : out_)
            frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                if (!degree_.count(x))
                    continue;
                auto it = out_.find(x);
                if (it == out_.end())
                    continue;
                int y = -1;
                for (const auto& [t, v] : it->second)
                    if (v == 1 || v == -1) {
                        y = t;
                        break;
                    }
                if (y < 0)
                    continue;
                cancel(x, y, next);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            frontier.assign(next.begin(), next.end());
        }
    }

    ClassComplex result() const
    {
        ClassComplex cc;
        for (const auto& [g, i] : degree_)
            cc.generators[i].push_back(g);
        for (auto& [i, gens] : cc.generators)
            std::sort(gens.begin(), gens.end());
        for (const auto& [i, gens] : cc.generators) {
            auto up = cc.generators.find(i + 1);
            if (up == cc.generators.end())
                continue;
            std::unordered_map<int, int> row_of;
            for (std::size_t r = 0; r < up->second.size(); ++r)
                row_of[up->second[r]] = static_cast<int>(r);
            algebra::SparseMatrix m(static_cast<int>(up->second.size()), static_cast<int>(gens.size()));
            for (std::size_t c = 0; c < gens.size(); ++c) {
                auto it = out_.find(gens[c]);
                if (it == out_.end())
                    continue;
                for (const auto& [t, v] : it->second)
                    m.add(row_of.at(t), static_cast<int>(c), v);
            }
            m.finalize();
            cc.d.emplace(i, std::move(m));
        }
        return cc;
    }

private:
    void cancel(int x, int y, std::vector<int>& touched)
    {
        const std::int64_t v = out_[x][y];
        // Compute every update before committing anything.
        std::vector<std::pair<int, std::map<int, std::int64_t>>> updates;
        for (int a : in_[y]) {
            if (a == x)
                continue;
            std::map<int, std::int64_t> col = out_[a];
            std::int64_t factor = mul_checked(col.at(y), v); // a_y / x_y with x_y = +-1
            col.erase(y);
            for (const auto& [t, xv] : out_[x]) {
                if (t == y)
                    continue;
                std::int64_t nv = sub_checked(col.count(t) ? col[t] : 0, mul_checked(factor, xv));
                if (nv == 0)
                    col.erase(t);
                else
                    col[t] = nv;
            }
            updates.emplace_back(a, std::move(col));
        }
        for (auto& [a, col] : updates) {
            for (const auto& [t, val] : out_[a])
                in_[t].erase(a);
            for (const auto& [t, val] : col)
                in_[t].insert(a);
            out_[a] = std::move(col);
            touched.push_back(a);
        }
        // Drop x: its incoming entries vanish, its outgoing ones disappear with it.
        for (int z : in_[x])
            out_[z].erase(x);
        in_.erase(x);
        for (const auto& [t, val] : out_[x])
            in_[t].erase(x);
        out_.erase(x);
        degree_.erase(x);
        // Drop y.
        for (const auto& [t, val] : out_[y])
            in_[t].erase(y);
        out_.erase(y);
        in_.erase(y);
        degree_.erase(y);
    }

    std::map<int, int> degree_;
    std::unordered_map<int, std::map<int, std::int64_t>> out_;
    std::unordered_map<int, std::set<int>> in_;
};

} // namespace

TriGradedComplex reduce_complex(const TriGradedComplex& cx)
{
    TriGradedComplex out;
    out.n_plus = cx.n_plus;
    out.n_minus = cx.n_minus;
    out.reduced_khovanov = cx.reduced_khovanov;
    out.generators = cx.generators;
    for (const auto& [key, cc] : cx.classes) {
        try {
            ClassReducer r(cc);
            r.run();
            ClassComplex reduced = r.result();
            if (!reduced.generators.empty())
                out.classes.emplace(key, std::move(reduced));
        } catch (const Overflow&) {
            out.classes.emplace(key, cc);
        }
    }
    return out;
}

} // namespace knotoid
