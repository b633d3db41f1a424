#include "knotoid/algebra.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace knotoid::algebra {

namespace {

using Coef = LaurentPoly::Coefficient;

Coef checked_add(Coef a, Coef b)
{
    Coef r;
    if (__builtin_add_overflow(a, b, &r))
        throw ComputationError("polynomial coefficient overflow");
    return r;
}

Coef checked_mul(Coef a, Coef b)
{
    Coef r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ComputationError("polynomial coefficient overflow");
    return r;
}

constexpr Var kAllVars[] = {Var::t, Var::q, Var::u, Var::A, Var::B, Var::l, Var::h};

} // namespace

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::t: return "t";
    case Var::q: return "q";
    case Var::u: return "u";
    case Var::A: return "A";
    case Var::B: return "B";
    case Var::l: return "l";
    case Var::h: return "h";
    }
    return "?";
}

Var var_from_name(std::string_view name)
{
    for (Var v : kAllVars)
        if (var_name(v) == name)
            return v;
    throw ParseError("unknown polynomial variable '" + std::string(name) + "'");
}

int exponent_scale(Var v)
{
    return (v == Var::A || v == Var::l || v == Var::h) ? 2 : 1;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::vector<Var> vars) : vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw ValidationError("duplicate polynomial variable '" + std::string(var_name(vars_[i])) + "'");
}

LaurentPoly LaurentPoly::constant(std::vector<Var> vars, Coef c)
{
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<Var> vars, const std::vector<int>& exps, Coef c)
{
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw ValidationError("exponent vector length does not match variable list");
    Exponents stored(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        stored[i] = exps[i] * exponent_scale(p.vars_[i]);
    p.add_term(stored, c);
    return p;
}

LaurentPoly LaurentPoly::monomial_stored(std::vector<Var> vars, Exponents stored, Coef c)
{
    LaurentPoly p(std::move(vars));
    if (stored.size() != p.vars_.size())
        throw ValidationError("exponent vector length does not match variable list");
    p.add_term(stored, c);
    return p;
}

LaurentPoly LaurentPoly::power(std::vector<Var> vars, Var v, int exponent, Coef c)
{
    LaurentPoly p(std::move(vars));
    int idx = p.index_of(v);
    if (idx < 0)
        throw ValidationError("variable '" + std::string(var_name(v)) + "' not declared");
    Exponents e(p.vars_.size(), 0);
    e[idx] = exponent * exponent_scale(v);
    p.add_term(e, c);
    return p;
}

int LaurentPoly::index_of(Var v) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v)
            return static_cast<int>(i);
    return -1;
}

Coef LaurentPoly::coefficient(const std::vector<int>& exps) const
{
    if (exps.size() != vars_.size())
        throw ValidationError("exponent vector length does not match variable list");
    Exponents stored(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        stored[i] = exps[i] * exponent_scale(vars_[i]);
    auto it = terms_.find(stored);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_stored_degree(Var v) const
{
    int idx = index_of(v);
    if (idx < 0 || terms_.empty())
        return 0;
    int m = terms_.begin()->first[idx];
    for (const auto& [e, c] : terms_)
        m = std::min(m, e[idx]);
    return m;
}

int LaurentPoly::max_stored_degree(Var v) const
{
    int idx = index_of(v);
    if (idx < 0 || terms_.empty())
        return 0;
    int m = terms_.begin()->first[idx];
    for (const auto& [e, c] : terms_)
        m = std::max(m, e[idx]);
    return m;
}

void LaurentPoly::add_term(const Exponents& stored, Coef c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(stored, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPoly::require_same_vars(const LaurentPoly& o) const
{
    if (vars_ != o.vars_)
        throw ValidationError("polynomial variable lists differ");
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, checked_mul(c, -1));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, checked_mul(c, -1));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    require_same_vars(o);
    LaurentPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, checked_mul(ca, cb));
        }
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::pow(int k) const
{
    if (k < 0)
        throw ComputationError("negative power of a polynomial");
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::with_variables(const std::vector<Var>& vars) const
{
    LaurentPoly r(vars);
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        where[i] = r.index_of(vars_[i]);
        if (where[i] < 0) {
            bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [i](const auto& kv) { return kv.first[i] != 0; });
            if (used)
                throw ValidationError("cannot drop variable '" + std::string(var_name(vars_[i])) + "' in use");
        }
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (where[i] >= 0)
                ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coef mag = c < 0 ? -c : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            int scale = exponent_scale(vars_[i]);
            std::string f(var_name(vars_[i]));
            if (e[i] % scale != 0)
                f += "^(" + std::to_string(e[i]) + "/" + std::to_string(scale) + ")";
            else if (e[i] / scale != 1)
                f += "^" + std::to_string(e[i] / scale);
            factors.push_back(std::move(f));
        }
        bool need_coef = mag != 1 || factors.empty();
        if (need_coef)
            out << mag;
        for (std::size_t i = 0; i < factors.size(); ++i)
            out << ((i == 0 && !need_coef) ? "" : "*") << factors[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    PolyParser(std::vector<Var> vars, std::string_view text) : vars_(std::move(vars)), s_(text) {}

    LaurentPoly run()
    {
        LaurentPoly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    long long integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    long long signed_integer()
    {
        skip();
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        long long v = integer();
        return neg ? -v : v;
    }

    LaurentPoly expr()
    {
        LaurentPoly acc(vars_);
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = -1;
            } else if (!first) {
                break;
            }
            LaurentPoly t = term();
            acc += sign < 0 ? -t : t;
            first = false;
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')')
                break;
        }
        return acc;
    }

    bool factor_starts()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '*';
    }

    LaurentPoly term()
    {
        LaurentPoly acc = factor();
        while (factor_starts()) {
            if (peek('*'))
                ++pos_;
            acc *= factor();
        }
        return acc;
    }

    LaurentPoly factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            if (peek('^')) {
                ++pos_;
                long long k = integer();
                inner = inner.pow(static_cast<int>(k));
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPoly::constant(vars_, integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            Var v = var_from_name(std::string_view(&c, 1));
            int idx = LaurentPoly(vars_).index_of(v);
            if (idx < 0)
                fail("variable '" + std::string(var_name(v)) + "' not declared");
            int stored = exponent_scale(v);
            if (peek('^')) {
                ++pos_;
                if (peek('(')) {
                    ++pos_;
                    long long num = signed_integer();
                    long long den = 1;
                    if (peek('/')) {
                        ++pos_;
                        den = integer();
                    }
                    if (!peek(')'))
                        fail("expected ')'");
                    ++pos_;
                    long long scaled = num * exponent_scale(v);
                    if (den == 0 || scaled % den != 0)
                        fail("exponent not representable for variable '" + std::string(var_name(v)) + "'");
                    stored = static_cast<int>(scaled / den);
                } else {
                    stored = static_cast<int>(signed_integer()) * exponent_scale(v);
                }
            }
            LaurentPoly::Exponents e(vars_.size(), 0);
            e[idx] = stored;
            return LaurentPoly::monomial_stored(vars_, e, 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::vector<Var> vars_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly LaurentPoly::parse(std::vector<Var> vars, std::string_view text)
{
    return PolyParser(std::move(vars), text).run();
}

// ---------------------------------------------------------------------------
// Substitutions

namespace {

int require_index(const LaurentPoly& p, Var v, const char* rule)
{
    int idx = p.index_of(v);
    if (idx < 0)
        throw ComputationError(std::string("substitution ") + rule + " needs variable '" +
                               std::string(var_name(v)) + "'");
    return idx;
}

Coef sign_power(long long e)
{
    return (e % 2 == 0) ? 1 : -1;
}

// Result variable list: drop `removed`, then make sure `target` is present
// (placed where the first removed variable was, if it has to be added).
std::vector<Var> replace_vars(const std::vector<Var>& vars, const std::vector<Var>& removed, Var target)
{
    bool target_present = std::find(vars.begin(), vars.end(), target) != vars.end();
    std::vector<Var> out;
    bool placed = target_present;
    for (Var v : vars) {
        if (std::find(removed.begin(), removed.end(), v) != removed.end()) {
            if (!placed) {
                out.push_back(target);
                placed = true;
            }
            continue;
        }
        out.push_back(v);
    }
    if (!placed)
        out.push_back(target);
    return out;
}

} // namespace

LaurentPoly substitute(const LaurentPoly& p, Substitution rule)
{
    const auto& vars = p.variables();
    switch (rule) {
    case Substitution::TMinusOne:
    case Substitution::UOne: {
        Var v = rule == Substitution::TMinusOne ? Var::t : Var::u;
        int idx = require_index(p, v, rule == Substitution::TMinusOne ? "t:=-1" : "u:=1");
        std::vector<Var> nv;
        for (Var w : vars)
            if (w != v)
                nv.push_back(w);
        LaurentPoly r(nv);
        for (const auto& [e, c] : p.terms()) {
            LaurentPoly::Exponents ne;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != idx)
                    ne.push_back(e[i]);
            r.add_term(ne, rule == Substitution::TMinusOne ? c * sign_power(e[idx]) : c);
        }
        return r;
    }
    case Substitution::USquaredMinusQInvCubed:
    case Substitution::USquaredMinusQCubed: {
        const char* name = rule == Substitution::USquaredMinusQCubed ? "u^2:=-q^3" : "u^2:=-q^-3";
        int uidx = require_index(p, Var::u, name);
        std::vector<Var> nv = replace_vars(vars, {Var::u}, Var::q);
        LaurentPoly r(nv);
        int qidx = r.index_of(Var::q);
        int qstep = rule == Substitution::USquaredMinusQCubed ? 3 : -3;
        for (const auto& [e, c] : p.terms()) {
            if (e[uidx] % 2 != 0)
                throw ComputationError(std::string("substitution ") + name + " applied to odd u-exponent " +
                                       std::to_string(e[uidx]));
            int j = e[uidx] / 2;
            LaurentPoly::Exponents ne(nv.size(), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (static_cast<int>(i) == uidx)
                    continue;
                ne[r.index_of(vars[i])] = e[i];
            }
            ne[qidx] += qstep * j;
            r.add_term(ne, c * sign_power(j));
        }
        return r;
    }
    case Substitution::WindingToU: {
        int lidx = p.index_of(Var::l);
        int hidx = p.index_of(Var::h);
        if (lidx < 0 && hidx < 0)
            throw ComputationError("substitution l^a h^b:=u^(a-b) needs variable 'l' or 'h'");
        std::vector<Var> nv = replace_vars(vars, {Var::l, Var::h}, Var::u);
        LaurentPoly r(nv);
        int uidx = r.index_of(Var::u);
        for (const auto& [e, c] : p.terms()) {
            int diff = (lidx >= 0 ? e[lidx] : 0) - (hidx >= 0 ? e[hidx] : 0);
            if (diff % 2 != 0)
                throw ComputationError("substitution l^a h^b:=u^(a-b) yields a fractional u-exponent");
            LaurentPoly::Exponents ne(nv.size(), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (static_cast<int>(i) == lidx || static_cast<int>(i) == hidx)
                    continue;
                ne[r.index_of(vars[i])] = e[i];
            }
            ne[uidx] += diff / 2;
            r.add_term(ne, c);
        }
        return r;
    }
    case Substitution::QToMinusAInvSquared: {
        int qidx = require_index(p, Var::q, "q:=-A^-2");
        std::vector<Var> nv = replace_vars(vars, {Var::q}, Var::A);
        LaurentPoly r(nv);
        int aidx = r.index_of(Var::A);
        for (const auto& [e, c] : p.terms()) {
            LaurentPoly::Exponents ne(nv.size(), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (static_cast<int>(i) == qidx)
                    continue;
                ne[r.index_of(vars[i])] = e[i];
            }
            ne[aidx] += -2 * e[qidx] * exponent_scale(Var::A);
            r.add_term(ne, c * sign_power(e[qidx]));
        }
        return r;
    }
    }
    throw ComputationError("unknown substitution");
}

LaurentPoly invert(const LaurentPoly& p, const std::vector<Var>& which)
{
    std::vector<int> idx;
    for (Var v : which) {
        int i = p.index_of(v);
        if (i < 0)
            throw ComputationError("cannot invert undeclared variable '" + std::string(var_name(v)) + "'");
        idx.push_back(i);
    }
    LaurentPoly r(p.variables());
    for (const auto& [e, c] : p.terms()) {
        auto ne = e;
        for (int i : idx)
            ne[i] = -ne[i];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly evaluate(const LaurentPoly& p, Var v, const LaurentPoly& value)
{
    int vidx = require_index(p, v, "evaluate");
    if (value.has_variable(v))
        throw ComputationError("evaluate: value may not contain the substituted variable");
    std::vector<Var> nv;
    for (Var w : p.variables())
        if (w != v)
            nv.push_back(w);
    for (Var w : value.variables())
        if (std::find(nv.begin(), nv.end(), w) == nv.end())
            nv.push_back(w);

    LaurentPoly val = value.with_variables(nv);
    LaurentPoly inverse(nv);
    bool have_inverse = false;
    if (val.size() == 1 && (val.terms().begin()->second == 1 || val.terms().begin()->second == -1)) {
        auto e = val.terms().begin()->first;
        for (int& x : e)
            x = -x;
        inverse.add_term(e, val.terms().begin()->second);
        have_inverse = true;
    }

    int scale = exponent_scale(v);
    std::map<int, LaurentPoly> cache;
    LaurentPoly r(nv);
    for (const auto& [e, c] : p.terms()) {
        if (e[vidx] % scale != 0)
            throw ComputationError("evaluate: fractional exponent of substituted variable");
        int k = e[vidx] / scale;
        auto it = cache.find(k);
        if (it == cache.end()) {
            if (k < 0 && !have_inverse)
                throw ComputationError("evaluate: negative power of a non-monomial value");
            it = cache.emplace(k, k >= 0 ? val.pow(k) : inverse.pow(-k)).first;
        }
        LaurentPoly::Exponents ne(nv.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != vidx)
                ne[r.index_of(p.variables()[i])] = e[i];
        LaurentPoly rest = LaurentPoly::monomial_stored(nv, ne, c);
        r += rest * it->second;
    }
    return r;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw ValidationError("negative matrix dimension");
}

void SparseMatrix::add(int row, int col, std::int64_t value)
{
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw ValidationError("matrix index out of range");
    if (value == 0)
        return;
    entries_.push_back({row, col, value});
    finalized_ = false;
}

void SparseMatrix::finalize()
{
    if (finalized_)
        return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> merged;
    for (const Entry& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
            merged.back().value = checked_add(merged.back().value, e.value);
        else
            merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
    finalized_ = true;
}

std::int64_t SparseMatrix::at(int row, int col) const
{
    if (!finalized_)
        throw std::logic_error("SparseMatrix::at on unfinalized matrix");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{row, col, 0}, [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    if (it != entries_.end() && it->row == row && it->col == col)
        return it->value;
    return 0;
}

void SparseMatrix::set(int row, int col, std::int64_t value)
{
    finalize();
    for (auto& e : entries_)
        if (e.row == row && e.col == col) {
            e.value = 0;
        }
    add(row, col, value);
    finalized_ = false;
    finalize();
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (const Entry& e : entries_)
        t.add(e.col, e.row, e.value);
    t.finalize();
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix dimension mismatch in multiply");
    SparseMatrix a = *this;
    a.finalize();
    SparseMatrix b = rhs;
    b.finalize();
    std::vector<std::vector<std::pair<int, std::int64_t>>> brows(b.rows_);
    for (const Entry& e : b.entries_)
        brows[e.row].emplace_back(e.col, e.value);
    SparseMatrix out(rows_, rhs.cols_);
    for (const Entry& e : a.entries_)
        for (auto [col, v] : brows[e.col])
            out.add(e.row, col, checked_mul(e.value, v));
    out.finalize();
    return out;
}

bool SparseMatrix::is_zero() const
{
    SparseMatrix c = *this;
    c.finalize();
    return c.entries_.empty();
}

// ---------------------------------------------------------------------------
// Rank

namespace {

struct Overflow {};

struct Int64Ring {
    using S = std::int64_t;
    static constexpr bool normalize_content = true;
    S from(std::int64_t v) const { return v; }
    bool is_unit(S v) const { return v == 1 || v == -1; }
    S unit_inverse(S v) const { return v; }
    S mul(S a, S b) const
    {
        S r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    S sub(S a, S b) const
    {
        S r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    S gcd(S a, S b) const { return std::gcd(a, b); }
    S div(S a, S b) const { return a / b; }
};

struct BigRing {
    using S = boost::multiprecision::cpp_int;
    static constexpr bool normalize_content = true;
    S from(std::int64_t v) const { return S(v); }
    bool is_unit(const S& v) const { return v == 1 || v == -1; }
    S unit_inverse(const S& v) const { return v; }
    S mul(const S& a, const S& b) const { return a * b; }
    S sub(const S& a, const S& b) const { return a - b; }
    S gcd(const S& a, const S& b) const { return boost::multiprecision::gcd(a, b); }
    S div(const S& a, const S& b) const { return a / b; }
};

struct ModPField {
    using S = std::uint64_t;
    static constexpr bool normalize_content = false;
    std::uint64_t p;
    S from(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<S>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    bool is_unit(S v) const { return v != 0; }
    S mul(S a, S b) const { return static_cast<S>((static_cast<unsigned __int128>(a) * b) % p); }
    S sub(S a, S b) const { return a >= b ? a - b : a + p - b; }
    S unit_inverse(S v) const
    {
        S result = 1, base = v, e = p - 2;
        while (e) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
    S gcd(S, S) const { return 1; }
    S div(S a, S) const { return a; }
};

template <class Ring>
class Eliminator {
public:
    using S = typename Ring::S;
    using Row = std::vector<std::pair<int, S>>;

    Eliminator(const SparseMatrix& m, Ring ring) : ring_(ring), rows_(m.rows()), col_rows_(m.cols())
    {
        for (const auto& e : m.entries()) {
            S v = ring_.from(e.value);
            if (v == S(0))
                continue;
            rows_[e.row].emplace_back(e.col, v);
        }
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            std::sort(rows_[r].begin(), rows_[r].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [c, v] : rows_[r])
                col_rows_[c].insert(r);
            classify(r);
        }
    }

    int run()
    {
        int rank = 0;
        while (true) {
            int r;
            std::size_t pos = 0;
            if (!unit_rows_.empty()) {
                r = *unit_rows_.begin();
                while (!ring_.is_unit(rows_[r][pos].second))
                    ++pos;
            } else if (!nonempty_rows_.empty()) {
                r = *nonempty_rows_.begin();
            } else {
                break;
            }
            pivot(r, pos);
            ++rank;
        }
        return rank;
    }

private:
    void classify(int r)
    {
        unit_rows_.erase(r);
        nonempty_rows_.erase(r);
        if (rows_[r].empty())
            return;
        nonempty_rows_.insert(r);
        for (const auto& [c, v] : rows_[r])
            if (ring_.is_unit(v)) {
                unit_rows_.insert(r);
                break;
            }
    }

    void pivot(int r, std::size_t pos)
    {
        Row prow = std::move(rows_[r]);
        rows_[r].clear();
        classify(r);
        for (const auto& [c, v] : prow)
            col_rows_[c].erase(r);
        const int pcol = prow[pos].first;
        const S pval = prow[pos].second;
        const bool unit = ring_.is_unit(pval);

        std::vector<int> targets(col_rows_[pcol].begin(), col_rows_[pcol].end());
        for (int t : targets) {
            Row& trow = rows_[t];
            auto it = std::lower_bound(trow.begin(), trow.end(), pcol,
                                       [](const auto& e, int c) { return e.first < c; });
            S tv = it->second;
            // trow := a * trow - b * prow, chosen so the pivot column cancels.
            S a = unit ? S(1) : pval;
            S b = unit ? ring_.mul(tv, ring_.unit_inverse(pval)) : tv;
            Row merged;
            merged.reserve(trow.size() + prow.size());
            std::size_t i = 0, j = 0;
            while (i < trow.size() || j < prow.size()) {
                if (j >= prow.size() || (i < trow.size() && trow[i].first < prow[j].first)) {
                    S v = unit ? trow[i].second : ring_.mul(a, trow[i].second);
                    merged.emplace_back(trow[i].first, v);
                    ++i;
                } else if (i >= trow.size() || prow[j].first < trow[i].first) {
                    S v = ring_.sub(S(0), ring_.mul(b, prow[j].second));
                    merged.emplace_back(prow[j].first, v);
                    col_rows_[prow[j].first].insert(t);
                    ++j;
                } else {
                    S lhs = unit ? trow[i].second : ring_.mul(a, trow[i].second);
                    S v = ring_.sub(lhs, ring_.mul(b, prow[j].second));
                    if (v == S(0))
                        col_rows_[trow[i].first].erase(t);
                    else
                        merged.emplace_back(trow[i].first, v);
                    ++i;
                    ++j;
                }
            }
            if constexpr (Ring::normalize_content) {
                if (!unit && !merged.empty()) {
                    S g(0);
                    for (const auto& [c, v] : merged) {
                        g = ring_.gcd(g, v);
                        if (g == S(1))
                            break;
                    }
                    if (g != S(1) && g != S(0))
                        for (auto& [c, v] : merged)
                            v = ring_.div(v, g);
                }
            }
            trow = std::move(merged);
            classify(t);
        }
    }

    Ring ring_;
    std::vector<Row> rows_;
    std::vector<std::set<int>> col_rows_;
    std::set<int> unit_rows_;
    std::set<int> nonempty_rows_;
};

} // namespace

int rank(const SparseMatrix& m)
{
    SparseMatrix f = m;
    f.finalize();
    try {
        return Eliminator<Int64Ring>(f, Int64Ring{}).run();
    } catch (const Overflow&) {
        return Eliminator<BigRing>(f, BigRing{}).run();
    }
}

int rank_modular(const SparseMatrix& m, std::uint64_t prime)
{
    SparseMatrix f = m;
    f.finalize();
    return Eliminator<ModPField>(f, ModPField{prime}).run();
}

} // namespace knotoid::algebra
