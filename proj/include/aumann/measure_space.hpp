/**
 * Finite atomic measurable spaces (power-set sigma-algebra), measures,
 * simple set-valued functions and the pointwise operations on them.
 *
 * Functions and measures are indexed by atom position; AtomicSpace maps
 * positions to identifiers.
 */
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "aumann/cone.hpp"
#include "aumann/rational.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

/// Subset of atoms, by index.
using AtomSet = std::set<std::size_t>;

class AtomicSpace {
public:
    explicit AtomicSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms))
    {
        if (atoms_.empty()) throw ValidationError("atomic space needs at least one atom");
        std::unordered_set<std::string> seen;
        for (const auto& a : atoms_) {
            if (a.empty()) throw ValidationError("empty atom identifier");
            if (!seen.insert(a).second) throw ValidationError("duplicate atom '" + a + "'");
        }
    }

    /// Atoms named x1, ..., xn.
    static AtomicSpace numbered(std::size_t n)
    {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return AtomicSpace(std::move(names));
    }

    std::size_t size() const { return atoms_.size(); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& name(std::size_t i) const { return atoms_.at(i); }

    std::size_t index_of(const std::string& atom) const
    {
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (atoms_[i] == atom) return i;
        }
        throw ValidationError("unknown atom '" + atom + "'");
    }

    AtomSet all() const
    {
        AtomSet s;
        for (std::size_t i = 0; i < atoms_.size(); ++i) s.insert(i);
        return s;
    }

private:
    std::vector<std::string> atoms_;
};

inline void validate_atoms(const AtomSet& a, std::size_t n)
{
    for (auto i : a) {
        if (i >= n) throw ValidationError("atom index " + std::to_string(i) + " out of range");
    }
}

inline AtomSet complement(const AtomSet& a, std::size_t n)
{
    validate_atoms(a, n);
    AtomSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.count(i)) out.insert(i);
    }
    return out;
}

class AtomicMeasure {
public:
    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<Rational> weights) : weights_(std::move(weights))
    {
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i] < 0) {
                throw ValidationError("measure weight of atom #" + std::to_string(i) +
                                      " is negative (" + to_string(weights_[i]) + ")");
            }
        }
    }

    std::size_t size() const { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_.at(i); }
    const std::vector<Rational>& weights() const { return weights_; }

    Rational total() const
    {
        Rational s = 0;
        for (const auto& w : weights_) s += w;
        return s;
    }

    Rational of(const AtomSet& a) const
    {
        validate_atoms(a, size());
        Rational s = 0;
        for (auto i : a) s += weights_[i];
        return s;
    }

    friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b)
    {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<Rational> weights_;
};

/// F : X -> G \ {∅}.
class SimpleSetFunction {
public:
    SimpleSetFunction() = default;
    explicit SimpleSetFunction(std::vector<UpperSet> values) : values_(std::move(values))
    {
        if (values_.empty()) throw ValidationError("set-valued function on an empty space");
        const std::size_t m = values_.front().dim();
        for (std::size_t i = 0; i < values_.size(); ++i) {
            require_same_dim(values_[i].dim(), m, "set-valued function");
            if (values_[i].is_empty()) {
                throw ValidationError("set-valued function has an empty value at atom #" +
                                      std::to_string(i));
            }
        }
    }

    static SimpleSetFunction constant(std::size_t n, const UpperSet& d)
    {
        return SimpleSetFunction(std::vector<UpperSet>(n, d));
    }

    std::size_t size() const { return values_.size(); }
    std::size_t dim() const { return values_.empty() ? 0 : values_.front().dim(); }
    const UpperSet& operator[](std::size_t i) const { return values_.at(i); }
    const std::vector<UpperSet>& values() const { return values_; }

    friend bool operator==(const SimpleSetFunction& a, const SimpleSetFunction& b)
    {
        return a.values_ == b.values_;
    }

private:
    std::vector<UpperSet> values_;
};

struct VectorFunction {
    std::vector<Vector> values;

    std::size_t size() const { return values.size(); }
    const Vector& operator[](std::size_t i) const { return values.at(i); }
    friend bool operator==(const VectorFunction&, const VectorFunction&) = default;
};

struct ScalarFunction {
    std::vector<Extended> values;

    std::size_t size() const { return values.size(); }
    const Extended& operator[](std::size_t i) const { return values.at(i); }
    friend bool operator==(const ScalarFunction&, const ScalarFunction&) = default;

    /// Indicator 1_A.
    static ScalarFunction indicator(const AtomSet& a, std::size_t n)
    {
        validate_atoms(a, n);
        ScalarFunction xi;
        for (std::size_t i = 0; i < n; ++i) xi.values.emplace_back(a.count(i) ? 1 : 0);
        return xi;
    }

    static ScalarFunction constant(std::size_t n, const Rational& v)
    {
        return ScalarFunction{std::vector<Extended>(n, Extended(v))};
    }

    bool is_nonnegative_finite() const
    {
        for (const auto& v : values) {
            if (!v.is_finite() || v.value() < 0) return false;
        }
        return true;
    }

    bool is_strictly_positive() const
    {
        for (const auto& v : values) {
            if (!v.is_finite() || v.value() <= 0) return false;
        }
        return true;
    }
};

/// ∫ ξ dμ with the convention 0·(-inf) = 0.
inline Extended integrate(const ScalarFunction& xi, const AtomicMeasure& mu)
{
    require_same_dim(xi.size(), mu.size(), "scalar integral");
    Extended s = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) s = s + mu[i] * xi[i];
    return s;
}

/// ∫ f dμ
inline Vector integrate(const VectorFunction& f, const AtomicMeasure& mu)
{
    require_same_dim(f.size(), mu.size(), "vector integral");
    if (f.values.empty()) throw ValidationError("vector integral over an empty space");
    Vector s = zero_vector(f[0].size());
    for (std::size_t i = 0; i < f.size(); ++i) s = s + mu[i] * f[i];
    return s;
}

// ---------------------------------------------------------------------------
// Pointwise operations

/// 1_A F: F(x) on A and C elsewhere (never {0}).
inline SimpleSetFunction indicator_modify(const SimpleSetFunction& f, const AtomSet& a,
                                          const Cone& c)
{
    validate_atoms(a, f.size());
    const UpperSet cs = cone_set(c);
    std::vector<UpperSet> v;
    for (std::size_t i = 0; i < f.size(); ++i) v.push_back(a.count(i) ? f[i] : cs);
    return SimpleSetFunction(std::move(v));
}

inline SimpleSetFunction oplus(const SimpleSetFunction& f, const SimpleSetFunction& g)
{
    require_same_dim(f.size(), g.size(), "pointwise oplus");
    std::vector<UpperSet> v;
    for (std::size_t i = 0; i < f.size(); ++i) v.push_back(oplus(f[i], g[i]));
    return SimpleSetFunction(std::move(v));
}

inline SimpleSetFunction scale(const Rational& lambda, const SimpleSetFunction& f, const Cone& c)
{
    std::vector<UpperSet> v;
    for (const auto& d : f.values()) v.push_back(scale(lambda, d, c));
    return SimpleSetFunction(std::move(v));
}

/// F^w(x) = F(x) ⊕ H(w).
inline SimpleSetFunction supporting_halfspaces(const SimpleSetFunction& f, const Vector& w,
                                               const Cone& c)
{
    std::vector<UpperSet> v;
    for (const auto& d : f.values()) v.push_back(supporting_halfspace(d, w, c));
    return SimpleSetFunction(std::move(v));
}

/// f + C
inline SimpleSetFunction vector_plus_cone(const VectorFunction& f, const Cone& c)
{
    std::vector<UpperSet> v;
    for (const auto& p : f.values) v.push_back(point_plus_cone(p, c));
    return SimpleSetFunction(std::move(v));
}

/// ξc + C for finite ξ.
inline SimpleSetFunction scalar_times_c(const ScalarFunction& xi, const Cone& c)
{
    VectorFunction f;
    for (const auto& v : xi.values) f.values.push_back(v.value() * c.interior_point());
    return vector_plus_cone(f, c);
}

/// x -> {z : <z, w> >= ξ(x)}; ξ(x) = -inf gives R^m.
inline SimpleSetFunction halfspace_function(const Vector& w, const ScalarFunction& xi,
                                            const Cone& c)
{
    std::vector<UpperSet> v;
    for (const auto& b : xi.values) v.push_back(halfspace_set(w, b, c));
    return SimpleSetFunction(std::move(v));
}

/// f + F pointwise.
inline SimpleSetFunction translate(const SimpleSetFunction& f, const VectorFunction& shift,
                                   const Cone& c)
{
    require_same_dim(f.size(), shift.size(), "translate");
    std::vector<UpperSet> v;
    for (std::size_t i = 0; i < f.size(); ++i) {
        v.push_back(oplus(f[i], point_plus_cone(shift[i], c)));
    }
    return SimpleSetFunction(std::move(v));
}

// ---------------------------------------------------------------------------
// Measurability and selections

/// F^{-1}(D) = {x : F(x) ∩ D ≠ ∅}.
inline AtomSet preimage(const SimpleSetFunction& f, const Polyhedron& d)
{
    require_same_dim(f.dim(), d.dim, "preimage");
    AtomSet out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (intersects(f[i], d)) out.insert(i);
    }
    return out;
}

/// F^{-1}(y - C) == {x : y ∈ F(x)}, both sides computed independently.
inline bool preimage_identity_check(const SimpleSetFunction& f, const Vector& y, const Cone& c)
{
    const AtomSet lhs = preimage(f, point_minus_cone(y, c));
    AtomSet rhs;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (member(f[i], y)) rhs.insert(i);
    }
    return lhs == rhs;
}

/// Deterministic selection: the lexicographically smallest V-representation
/// point of each value (the origin for R^m).
inline VectorFunction pick_selection(const SimpleSetFunction& f)
{
    VectorFunction s;
    for (const auto& d : f.values()) {
        if (d.is_full()) {
            s.values.push_back(zero_vector(d.dim()));
            continue;
        }
        s.values.push_back(d.points().front());  // points are sorted
    }
    return s;
}

}  // namespace aumann
