/**
 * Seeded generators for rational data, cones, sets and set-valued functions.
 * Everything is driven by std::mt19937_64 so a seed fixes the whole stream.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "aumann/cone.hpp"
#include "aumann/measure_space.hpp"
#include "aumann/rational.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    bool coin() { return integer(0, 1) == 1; }

    /// p/q with p in [lo*q, hi*q], q in [1, max_den].
    Rational rational(long lo, long hi, long max_den = 4)
    {
        const long q = integer(1, max_den);
        return Rational(integer(lo * q, hi * q), q);
    }

    Rational nonneg_rational(long hi, long max_den = 4) { return rational(0, hi, max_den); }

    Vector integer_vector(std::size_t m, long lo, long hi)
    {
        Vector v(m);
        for (auto& x : v) x = integer(lo, hi);
        return v;
    }

    Vector rational_vector(std::size_t m, long lo, long hi, long max_den = 4)
    {
        Vector v(m);
        for (auto& x : v) x = rational(lo, hi, max_den);
        return v;
    }

    /// Nonnegative weights summing to one.
    std::vector<Rational> convex_weights(std::size_t n)
    {
        std::vector<Rational> w(n);
        Rational total = 0;
        for (auto& x : w) {
            x = integer(0, 6);
            total += x;
        }
        if (total == 0) {
            w[index(n)] = 1;
            return w;
        }
        for (auto& x : w) x /= total;
        return w;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Random element of C: nonnegative combination of the generators.
inline Vector random_cone_vector(Rng& rng, const Cone& c, long hi = 3)
{
    Vector v = zero_vector(c.dim());
    for (const auto& g : c.generators()) v = v + Rational(rng.integer(0, hi)) * g;
    return v;
}

/// Random nonzero element of C+.
inline Vector random_dual_vector(Rng& rng, const Cone& c, long hi = 3)
{
    for (;;) {
        Vector w = zero_vector(c.dim());
        for (const auto& d : c.dual_generators()) w = w + Rational(rng.integer(0, hi)) * d;
        if (!is_zero(w)) return primitive(w);
    }
}

/// Integer point strictly inside C.
inline Vector random_interior_point(Rng& rng, const Cone& c)
{
    for (;;) {
        Vector p = rng.integer_vector(c.dim(), -1, 1);
        for (const auto& r : c.rays()) p = p + Rational(rng.integer(1, 4)) * r;
        for (const auto& l : c.lineality()) p = p + Rational(rng.integer(-2, 2)) * l;
        bool inside = true;
        for (const auto& w : c.dual_generators()) inside = inside && dot(p, w) > 0;
        if (inside) return p;
    }
}

/// cl co({p_1, ..., p_k} + C) with integer p_i in int C (so pointed, integral
/// offsets, positive supports on C+ \ {0}).
inline UpperSet random_interior_set(Rng& rng, const Cone& c, std::size_t max_points = 3)
{
    VRep raw;
    const std::size_t k = 1 + rng.index(max_points);
    for (std::size_t i = 0; i < k; ++i) raw.points.push_back(random_interior_point(rng, c));
    return canonicalize(raw, c);
}

/// General polyhedral upper set: a few rational points plus C, and now and
/// then a halfspace with a normal from C+.
inline UpperSet random_upper_set(Rng& rng, const Cone& c)
{
    const std::size_t m = c.dim();
    if (rng.integer(0, 7) == 0) return halfspace_set(random_dual_vector(rng, c), Extended(rng.rational(-3, 3)), c);
    VRep raw;
    const std::size_t k = 1 + rng.index(3);
    for (std::size_t i = 0; i < k; ++i) raw.points.push_back(rng.rational_vector(m, -3, 3, 3));
    return canonicalize(raw, c);
}

/// Upper set containing the origin.
inline UpperSet random_negative_set(Rng& rng, const Cone& c)
{
    VRep raw;
    raw.points.push_back(-random_cone_vector(rng, c, 2));
    const std::size_t k = rng.index(3);
    for (std::size_t i = 0; i < k; ++i) raw.points.push_back(rng.rational_vector(c.dim(), -3, 3, 2));
    return canonicalize(raw, c);
}

inline SimpleSetFunction random_interior_function(Rng& rng, const Cone& c, std::size_t n)
{
    std::vector<UpperSet> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_interior_set(rng, c));
    return SimpleSetFunction(std::move(v));
}

inline SimpleSetFunction random_function(Rng& rng, const Cone& c, std::size_t n)
{
    std::vector<UpperSet> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_upper_set(rng, c));
    return SimpleSetFunction(std::move(v));
}

inline AtomicMeasure random_measure(Rng& rng, std::size_t n, bool allow_zero = true)
{
    for (;;) {
        std::vector<Rational> w(n);
        for (auto& x : w) {
            x = (allow_zero && rng.integer(0, 4) == 0) ? Rational(0) : rng.rational(1, 4, 3);
        }
        AtomicMeasure mu(std::move(w));
        if (mu.total() > 0) return mu;
    }
}

inline VectorFunction random_vector_function(Rng& rng, std::size_t m, std::size_t n)
{
    VectorFunction f;
    for (std::size_t i = 0; i < n; ++i) f.values.push_back(rng.rational_vector(m, -4, 4, 3));
    return f;
}

/// Random proper cone in R^m given by 2..m+2 generators around the orthant
/// (retried until valid); interior point is the sum of the generators.
inline Cone random_cone(Rng& rng, std::size_t m)
{
    for (;;) {
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < m; ++i) {
            Vector g = unit_vector(m, i);
            if (rng.coin()) g[rng.index(m)] += rng.integer(-1, 1);
            if (!is_zero(g)) gens.push_back(g);
        }
        if (rng.coin()) gens.push_back(rng.integer_vector(m, 0, 2));
        try {
            Vector sum = zero_vector(m);
            for (const auto& g : gens) sum = sum + g;
            return Cone(gens, sum);
        } catch (const Error&) {
            continue;
        }
    }
}

}  // namespace aumann
