/**
 * Exact rational scalars, vectors and extended reals.
 *
 * Everything in the library is computed over GMP rationals; no floating
 * point is used anywhere on a decision path.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace aumann {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Dense exact vector in R^m.
using Vector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different dimensions (or index spaces).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value violates a documented invariant or precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

inline void require_same_dim(std::size_t a, std::size_t b, std::string_view what)
{
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

// ---------------------------------------------------------------------------
// Vector arithmetic

inline Rational dot(const Vector& a, const Vector& b)
{
    require_same_dim(a.size(), b.size(), "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vector operator+(const Vector& a, const Vector& b)
{
    require_same_dim(a.size(), b.size(), "vector sum");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b)
{
    require_same_dim(a.size(), b.size(), "vector difference");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector operator-(const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vector zero_vector(std::size_t m) { return Vector(m, Rational(0)); }

inline Vector unit_vector(std::size_t m, std::size_t i)
{
    Vector v = zero_vector(m);
    v[i] = 1;
    return v;
}

inline bool is_zero(const Vector& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

/// Positive multiple of `a` with coprime integer coordinates. Zero maps to zero.
inline Vector primitive(const Vector& a)
{
    if (is_zero(a)) return a;
    Integer l = 1;
    for (const auto& x : a) {
        const Integer d = boost::multiprecision::denominator(x);
        l = boost::multiprecision::lcm(l, d);
    }
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(a.size());
    for (const auto& x : a) {
        Integer v = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, v);
        ints.push_back(std::move(v));
    }
    if (g < 0) g = -g;
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(ints[i] / g);
    return r;
}

/// Canonical representative of the line spanned by `a`: primitive, first nonzero entry positive.
inline Vector primitive_line(const Vector& a)
{
    Vector r = primitive(a);
    for (const auto& x : r) {
        if (x == 0) continue;
        if (x < 0) r = -r;
        break;
    }
    return r;
}

inline bool lex_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Sort lexicographically and drop duplicates.
inline void sort_unique(std::vector<Vector>& vs)
{
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Rank of a set of row vectors (exact Gaussian elimination).
inline std::size_t rank(std::vector<Vector> rows)
{
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Reduced row echelon basis of span(rows), each row scaled to a primitive line.
inline std::vector<Vector> row_basis(std::vector<Vector> rows, std::size_t n)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Rational p = rows[r][col];
        for (auto& x : rows[r]) x /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    for (auto& row : rows) row = primitive_line(row);
    return rows;
}

/// Solve the square or overdetermined system sum_j x_j cols[j] = target exactly.
/// Returns false when there is no solution or the columns are dependent.
inline bool solve_combination(const std::vector<Vector>& cols, const Vector& target, Vector& x)
{
    const std::size_t n = target.size();
    const std::size_t k = cols.size();
    // augmented matrix n x (k+1)
    std::vector<Vector> a(n, Vector(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
        a[i][k] = target[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t col = 0; col < k && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return false;  // dependent columns
        std::swap(a[r], a[piv]);
        const Rational p = a[r][col];
        for (auto& v : a[r]) v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(col);
        ++r;
    }
    if (r < k) return false;
    for (std::size_t i = r; i < n; ++i) {
        if (a[i][k] != 0) return false;
    }
    x.assign(k, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a[i][k];
    return true;
}

// ---------------------------------------------------------------------------
// Extended reals R ∪ {-inf, +inf}

class Extended {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Extended() : kind_(Kind::Finite), value_(0) {}
    Extended(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
    Extended(int v) : kind_(Kind::Finite), value_(v) {}                 // NOLINT(implicit)

    static Extended neg_inf() { return Extended(Kind::NegInf); }
    static Extended pos_inf() { return Extended(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    const Rational& value() const
    {
        if (!is_finite()) throw ValidationError("value() of an infinite extended real");
        return value_;
    }

    friend bool operator==(const Extended& a, const Extended& b)
    {
        if (a.kind_ != b.kind_) return false;
        return !a.is_finite() || a.value_ == b.value_;
    }
    friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }

    friend bool operator<(const Extended& a, const Extended& b)
    {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.is_finite() && a.value_ < b.value_;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
    friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
    friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

    /// +inf dominates: it stands for the infimum over the empty set.
    friend Extended operator+(const Extended& a, const Extended& b)
    {
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Extended(a.value_ + b.value_);
    }

    /// Nonnegative weight times an extended real; a zero weight yields 0 whatever the value.
    friend Extended operator*(const Rational& w, const Extended& a)
    {
        if (w < 0) throw ValidationError("negative weight in extended product");
        if (w == 0) return Extended(0);
        if (!a.is_finite()) return a;
        return Extended(w * a.value_);
    }

private:
    explicit Extended(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

// ---------------------------------------------------------------------------
// Text

/// "p/q" or "p"; the exact decimal-free form used in all reports.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Extended& e)
{
    if (e.is_neg_inf()) return "-inf";
    if (e.is_pos_inf()) return "+inf";
    return to_string(e.value());
}

inline std::string to_string(const Vector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

/// Parse "p", "-p", "p/q" (integers of any size). Throws ValidationError.
inline Rational parse_rational(std::string_view text)
{
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
            t.end());
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    const auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(num), d);
}

inline Extended parse_extended(std::string_view text)
{
    if (text == "-inf") return Extended::neg_inf();
    if (text == "+inf" || text == "inf") return Extended::pos_inf();
    return Extended(parse_rational(text));
}

}  // namespace aumann
