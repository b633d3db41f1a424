#ifndef KNOTOID_ALGEBRA_HPP
#define KNOTOID_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace knotoid::algebra {

/// Polynomial variables. `l` is the leg-winding variable (printed "l").
enum class Var { t, q, u, A, B, l, h };

std::string_view var_name(Var v);
Var var_from_name(std::string_view name);

/// Exponents of A, l and h are stored doubled so half-integers stay exact.
int exponent_scale(Var v);

/// Multivariate Laurent polynomial with integer coefficients.
///
/// Terms are keyed by exponent vectors in *stored units* (see exponent_scale)
/// and iterate in lexicographic order of the declared variable list. Zero
/// coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using Coefficient = std::int64_t;
    using TermMap = std::map<Exponents, Coefficient>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<Var> vars);

    static LaurentPoly constant(std::vector<Var> vars, Coefficient c);
    /// Monomial with integral exponents given in ordinary units.
    static LaurentPoly monomial(std::vector<Var> vars, const std::vector<int>& exps, Coefficient c = 1);
    /// Monomial with exponents given in stored units.
    static LaurentPoly monomial_stored(std::vector<Var> vars, Exponents stored, Coefficient c = 1);
    /// Single variable raised to an integral power.
    static LaurentPoly power(std::vector<Var> vars, Var v, int exponent, Coefficient c = 1);

    /// Parse text such as "7 + q^-4*t^-2 - 3 A^(3/2) u^2*(q + q^-1)".
    static LaurentPoly parse(std::vector<Var> vars, std::string_view text);

    const std::vector<Var>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int index_of(Var v) const; // -1 when absent
    bool has_variable(Var v) const { return index_of(v) >= 0; }

    /// Coefficient of the monomial with the given ordinary-unit exponents.
    Coefficient coefficient(const std::vector<int>& exps) const;

    /// Smallest / largest exponent of `v` in stored units. Zero polynomial -> 0.
    int min_stored_degree(Var v) const;
    int max_stored_degree(Var v) const;

    void add_term(const Exponents& stored, Coefficient c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly pow(int k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Same terms expressed over a superset (or reordering) of the variables.
    LaurentPoly with_variables(const std::vector<Var>& vars) const;

    /// Plain-text form, terms sorted lexicographically by exponent vector.
    std::string to_string() const;

private:
    void require_same_vars(const LaurentPoly& o) const;

    std::vector<Var> vars_;
    TermMap terms_;
};

/// Named substitutions used to pass between the invariants.
enum class Substitution {
    TMinusOne,            ///< t := -1
    UOne,                 ///< u := 1
    USquaredMinusQInvCubed, ///< u^2 := -q^-3   (u = -i q^{-3/2})
    USquaredMinusQCubed,  ///< u^2 := -q^3     (u = i q^{3/2})
    WindingToU,           ///< l^a h^b := u^(a-b)
    QToMinusAInvSquared,  ///< q := -A^-2
};

LaurentPoly substitute(const LaurentPoly& p, Substitution rule);

/// x := x^-1 for every listed variable.
LaurentPoly invert(const LaurentPoly& p, const std::vector<Var>& vars);

/// v := value. Negative powers of `v` require `value` to be a signed monomial.
/// The result lives over p's variables minus `v`, merged with value's variables.
LaurentPoly evaluate(const LaurentPoly& p, Var v, const LaurentPoly& value);

/// Sparse integer matrix used as a carrier for differentials.
class SparseMatrix {
public:
    struct Entry {
        int row;
        int col;
        std::int64_t value;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Adds `value` to cell (row, col); cells that cancel to zero are dropped on finalize().
    void add(int row, int col, std::int64_t value);
    /// Merge duplicate cells, drop zeros, sort by (row, col).
    void finalize();
    std::int64_t at(int row, int col) const;
    void set(int row, int col, std::int64_t value);

    SparseMatrix transpose() const;
    /// this * rhs (rows() x rhs.cols()).
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
    bool finalized_ = true;
};

/// Exact rank over Q. Unit pivots are taken first (lowest row, then lowest
/// column); the remainder uses fraction-free elimination with content
/// normalization. Falls back to arbitrary precision on int64 overflow.
int rank(const SparseMatrix& m);

/// Rank modulo a prime. Diagnostic only: may undercount the rational rank.
int rank_modular(const SparseMatrix& m, std::uint64_t prime);

} // namespace knotoid::algebra

#endif
