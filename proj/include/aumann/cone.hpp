/**
 * The fixed ordering cone C, its positive dual C+ and the base polytope
 * D(c) = {w in C+ : <c, w> = 1}.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aumann/double_description.hpp"
#include "aumann/rational.hpp"

namespace aumann {

namespace detail {

inline std::size_t common_dim(const std::vector<Vector>& vs, std::string_view what)
{
    if (vs.empty()) throw ValidationError(std::string(what) + ": no vectors given");
    const std::size_t m = vs.front().size();
    if (m == 0) throw ValidationError(std::string(what) + ": zero-dimensional vectors");
    for (const auto& v : vs) require_same_dim(v.size(), m, what);
    return m;
}

}  // namespace detail

/// Extreme rays of the positive dual {w : <z, w> >= 0 for all z in cone(generators)}.
///
/// The cone must be proper in the sense used throughout: C != R^m and
/// int C nonempty, i.e. the dual is a nonzero pointed cone.
inline std::vector<Vector> dual_cone(const std::vector<Vector>& generators)
{
    const std::size_t m = detail::common_dim(generators, "dual_cone");
    const dd::Generators d = dd::generators_of(generators, m);
    if (!d.lineality.empty()) {
        throw ValidationError("dual_cone: cone has empty interior (its dual is not pointed)");
    }
    if (d.rays.empty()) throw ValidationError("dual_cone: generators span the whole space");
    return d.rays;
}

class Cone {
public:
    /// Validates every invariant; throws ValidationError/DimensionError.
    Cone(std::vector<Vector> generators, Vector interior_point)
        : interior_(std::move(interior_point))
    {
        dim_ = detail::common_dim(generators, "cone generators");
        require_same_dim(interior_.size(), dim_, "cone interior point");
        dual_ = dual_cone(generators);
        for (const auto& w : dual_) {
            if (dot(interior_, w) <= 0) {
                throw ValidationError("interior point " + to_string(interior_) +
                                      " is not in int C: <c, " + to_string(w) + "> <= 0");
            }
        }
        // Minimal generators of C: rays plus both orientations of lineality.
        const dd::Generators primal = dd::generators_of(dual_, dim_);
        lineality_ = primal.lineality;
        rays_ = primal.rays;
        generators_ = rays_;
        for (const auto& l : lineality_) {
            generators_.push_back(l);
            generators_.push_back(-l);
        }
        sort_unique(generators_);
    }

    std::size_t dim() const { return dim_; }
    const Vector& interior_point() const { return interior_; }

    /// Minimal generating set of C (lineality directions appear with both signs).
    const std::vector<Vector>& generators() const { return generators_; }
    const std::vector<Vector>& rays() const { return rays_; }
    const std::vector<Vector>& lineality() const { return lineality_; }

    /// Extreme rays of C+, equivalently inward facet normals of C; primitive, sorted.
    const std::vector<Vector>& dual_generators() const { return dual_; }

    bool contains(const Vector& z) const
    {
        require_same_dim(z.size(), dim_, "cone_contains");
        for (const auto& w : dual_) {
            if (dot(z, w) < 0) return false;
        }
        return true;
    }

    /// w in C+ (tested against the generators of C).
    bool dual_contains(const Vector& w) const
    {
        require_same_dim(w.size(), dim_, "dual membership");
        for (const auto& g : generators_) {
            if (dot(g, w) < 0) return false;
        }
        return true;
    }

    /// Vertices of D(c): since C+ is pointed and c in int C, these are the
    /// extreme rays of C+ normalised by <c, .>.
    std::vector<Vector> base_polytope() const
    {
        std::vector<Vector> out;
        out.reserve(dual_.size());
        for (const auto& w : dual_) out.push_back((Rational(1) / dot(interior_, w)) * w);
        sort_unique(out);
        return out;
    }

    friend bool operator==(const Cone& a, const Cone& b)
    {
        return a.dual_ == b.dual_ && a.interior_ == b.interior_;
    }

private:
    std::size_t dim_ = 0;
    Vector interior_;
    std::vector<Vector> dual_;
    std::vector<Vector> generators_;
    std::vector<Vector> rays_;
    std::vector<Vector> lineality_;
};

inline bool cone_contains(const Cone& c, const Vector& z) { return c.contains(z); }

/// The nonnegative orthant with interior point (1, ..., 1).
inline Cone orthant(std::size_t m)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(unit_vector(m, i));
    return Cone(gens, Vector(m, Rational(1)));
}

}  // namespace aumann
