/**
 * Closed convex upper sets D = cl co(D + C) with exact polyhedral
 * representations, and the conlinear / lattice operations on them.
 *
 * A canonical proper set carries both
 *   - an irredundant H-representation {z : <z, w> >= b}, normals primitive
 *     integer vectors in C+ \ {0}, sorted lexicographically; and
 *   - a V-representation: one point per minimal face (projected onto the
 *     orthogonal complement of the lineality space), the extreme rays of the
 *     recession cone modulo lineality, and an RREF lineality basis.
 * Structural equality of canonical forms coincides with set equality.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aumann/cone.hpp"
#include "aumann/double_description.hpp"
#include "aumann/rational.hpp"

namespace aumann {

/// {z : <z, normal> >= offset}; an offset of -inf imposes nothing.
struct Halfspace {
    Vector normal;
    Extended offset;

    friend bool operator==(const Halfspace& a, const Halfspace& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Raw constraint data, not necessarily an upper set.
struct HRep {
    std::vector<Halfspace> halfspaces;
};

/// Raw generator data: conv(points) + cone(rays).
struct VRep {
    std::vector<Vector> points;
    std::vector<Vector> rays;
};

/// General polyhedron given by constraints (used for preimages such as y - C).
struct Polyhedron {
    std::size_t dim = 0;
    std::vector<Halfspace> constraints;
};

class UpperSet {
public:
    enum class Kind { Empty, FullSpace, Proper };

    UpperSet() = default;

    static UpperSet empty(std::size_t m) { return UpperSet(Kind::Empty, m); }
    static UpperSet full(std::size_t m) { return UpperSet(Kind::FullSpace, m); }

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_full() const { return kind_ == Kind::FullSpace; }
    bool is_proper() const { return kind_ == Kind::Proper; }

    /// Irredundant facets; all offsets finite.
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<Vector>& points() const { return points_; }
    const std::vector<Vector>& rays() const { return rays_; }
    const std::vector<Vector>& lineality() const { return lineality_; }

    /// No lineality (every nonempty face contains a vertex).
    bool is_pointed() const { return lineality_.empty() && !is_full(); }

    friend bool operator==(const UpperSet& a, const UpperSet& b)
    {
        return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.halfspaces_ == b.halfspaces_;
    }
    friend bool operator!=(const UpperSet& a, const UpperSet& b) { return !(a == b); }

    /// Canonical form of cl co(conv(points) + cone(rays)). The generators must
    /// already contain the recession directions of C for the result to be an
    /// upper set; use canonicalize() otherwise.
    static UpperSet from_generators(std::size_t m, const std::vector<Vector>& points,
                                    const std::vector<Vector>& rays);

    /// Canonical form of the intersection of the halfspaces, which must
    /// describe an upper set (all normals in C+). Use canonicalize() otherwise.
    static UpperSet from_halfspaces(std::size_t m, const std::vector<Halfspace>& halfspaces);

private:
    UpperSet(Kind k, std::size_t m) : kind_(k), dim_(m)
    {
        if (k == Kind::FullSpace) {
            for (std::size_t i = 0; i < m; ++i) lineality_.push_back(unit_vector(m, i));
            points_.push_back(zero_vector(m));
        }
    }

    friend UpperSet scale(const Rational& lambda, const UpperSet& d, const Cone& c);

    Kind kind_ = Kind::Empty;
    std::size_t dim_ = 0;
    std::vector<Halfspace> halfspaces_;
    std::vector<Vector> points_;
    std::vector<Vector> rays_;
    std::vector<Vector> lineality_;
};

namespace detail {

struct PolyGenerators {
    bool empty = true;
    std::vector<Vector> points;
    std::vector<Vector> rays;       // includes both orientations of lineality
    std::vector<Vector> lineality;  // basis, for callers that need it separately
};

/// V-representation of {z : <z, w_i> >= b_i} (finite offsets only; -inf dropped).
inline PolyGenerators polyhedron_generators(std::size_t m, const std::vector<Halfspace>& hs)
{
    std::vector<Vector> cons;
    for (const auto& h : hs) {
        require_same_dim(h.normal.size(), m, "halfspace normal");
        if (h.offset.is_neg_inf()) continue;
        if (h.offset.is_pos_inf()) return {};
        Vector a = h.normal;
        a.push_back(-h.offset.value());
        cons.push_back(std::move(a));
    }
    Vector t = zero_vector(m + 1);
    t[m] = 1;
    cons.push_back(t);
    const dd::Generators g = dd::generators_of(cons, m + 1);

    PolyGenerators out;
    for (const auto& r : g.rays) {
        Vector z(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
        if (r[m] > 0) {
            out.points.push_back((Rational(1) / r[m]) * z);
        } else {
            out.rays.push_back(std::move(z));
        }
    }
    for (const auto& l : g.lineality) {
        Vector z(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(m));
        out.rays.push_back(z);
        out.rays.push_back(-z);
        out.lineality.push_back(std::move(z));
    }
    out.empty = out.points.empty();
    return out;
}

/// Orthogonal projection onto the complement of span(basis).
inline Vector project_out(const Vector& v, const std::vector<Vector>& basis)
{
    if (basis.empty()) return v;
    const std::size_t k = basis.size();
    std::vector<Vector> gram(k, Vector(k));
    Vector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    Vector alpha;
    if (!solve_combination(gram, rhs, alpha)) throw Error("project_out: singular lineality basis");
    Vector r = v;
    for (std::size_t i = 0; i < k; ++i) r = r - alpha[i] * basis[i];
    return r;
}

inline bool halfspace_less(const Halfspace& a, const Halfspace& b)
{
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

}  // namespace detail

inline UpperSet UpperSet::from_halfspaces(std::size_t m, const std::vector<Halfspace>& hs)
{
    const detail::PolyGenerators g = detail::polyhedron_generators(m, hs);
    if (g.empty) return empty(m);
    return from_generators(m, g.points, g.rays);
}

inline UpperSet UpperSet::from_generators(std::size_t m, const std::vector<Vector>& points,
                                          const std::vector<Vector>& rays)
{
    if (points.empty()) return empty(m);
    std::vector<Vector> gens;
    for (const auto& p : points) {
        require_same_dim(p.size(), m, "generator point");
        Vector h = p;
        h.push_back(1);
        gens.push_back(std::move(h));
    }
    for (const auto& r : rays) {
        require_same_dim(r.size(), m, "generator ray");
        if (is_zero(r)) continue;
        Vector h = r;
        h.push_back(0);
        gens.push_back(std::move(h));
    }
    // Facets of the homogenised cone are the extreme rays of its dual.
    const dd::Generators facets = dd::generators_of(gens, m + 1);
    if (!facets.lineality.empty()) {
        throw ValidationError("generated set is not full-dimensional; recession cone must contain C");
    }
    UpperSet out(Kind::Proper, m);
    for (const auto& y : facets.rays) {
        Vector w(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m));
        if (is_zero(w)) continue;  // t >= 0
        const Vector pw = primitive(w);
        std::size_t i = 0;
        while (pw[i] == 0) ++i;
        const Rational factor = w[i] / pw[i];
        out.halfspaces_.push_back(Halfspace{pw, Extended(-y[m] / factor)});
    }
    if (out.halfspaces_.empty()) return full(m);
    std::sort(out.halfspaces_.begin(), out.halfspaces_.end(), detail::halfspace_less);

    // Minimal V-representation from the irredundant facets.
    const detail::PolyGenerators v = detail::polyhedron_generators(m, out.halfspaces_);
    out.lineality_ = row_basis(v.lineality, m);
    for (const auto& p : v.points) out.points_.push_back(detail::project_out(p, out.lineality_));
    for (const auto& r : v.rays) {
        Vector pr = detail::project_out(r, out.lineality_);
        if (!is_zero(pr)) out.rays_.push_back(primitive(pr));
    }
    sort_unique(out.points_);
    sort_unique(out.rays_);
    return out;
}

// ---------------------------------------------------------------------------
// Construction

/// cl co(raw + C) in canonical form. Normals outside C+ are absorbed by the
/// closure under C rather than rejected.
inline UpperSet canonicalize(const VRep& raw, const Cone& c)
{
    std::vector<Vector> rays = raw.rays;
    rays.insert(rays.end(), c.generators().begin(), c.generators().end());
    return UpperSet::from_generators(c.dim(), raw.points, rays);
}

inline UpperSet canonicalize(const HRep& raw, const Cone& c)
{
    const detail::PolyGenerators g = detail::polyhedron_generators(c.dim(), raw.halfspaces);
    if (g.empty) return UpperSet::empty(c.dim());
    return canonicalize(VRep{g.points, g.rays}, c);
}

/// Re-canonicalise an existing set (idempotent).
inline UpperSet canonicalize(const UpperSet& d, const Cone& c)
{
    if (!d.is_proper()) return d;
    return canonicalize(HRep{d.halfspaces()}, c);
}

/// C itself as an element of the lattice.
inline UpperSet cone_set(const Cone& c)
{
    return canonicalize(VRep{{zero_vector(c.dim())}, {}}, c);
}

/// p + C
inline UpperSet point_plus_cone(const Vector& p, const Cone& c)
{
    return canonicalize(VRep{{p}, {}}, c);
}

/// {z : <z, w> >= b}; with b = 0 this is the homogeneous halfspace H(w).
inline UpperSet halfspace_set(const Vector& w, const Extended& b, const Cone& c)
{
    if (is_zero(w)) throw ValidationError("halfspace normal must be nonzero");
    if (!c.dual_contains(w)) {
        throw ValidationError("halfspace normal " + to_string(w) + " is not in C+");
    }
    return canonicalize(HRep{{Halfspace{w, b}}}, c);
}

inline UpperSet homogeneous_halfspace(const Vector& w, const Cone& c)
{
    return halfspace_set(w, Extended(0), c);
}

// ---------------------------------------------------------------------------
// Queries

/// inf_{y in D} <y, w>: +inf for the empty set, -inf when unbounded below.
inline Extended support(const UpperSet& d, const Vector& w)
{
    require_same_dim(w.size(), d.dim(), "support");
    if (is_zero(w)) throw ValidationError("support: direction must be nonzero");
    if (d.is_empty()) return Extended::pos_inf();
    if (d.is_full()) return Extended::neg_inf();
    for (const auto& l : d.lineality()) {
        if (dot(l, w) != 0) return Extended::neg_inf();
    }
    for (const auto& r : d.rays()) {
        if (dot(r, w) < 0) return Extended::neg_inf();
    }
    Rational best = dot(d.points().front(), w);
    for (const auto& p : d.points()) best = std::min(best, dot(p, w));
    return Extended(best);
}

inline bool member(const UpperSet& d, const Vector& y)
{
    require_same_dim(y.size(), d.dim(), "member");
    if (d.is_empty()) return false;
    if (d.is_full()) return true;
    for (const auto& h : d.halfspaces()) {
        if (dot(y, h.normal) < h.offset.value()) return false;
    }
    return true;
}

/// D ⊆ E
inline bool subset(const UpperSet& d, const UpperSet& e)
{
    require_same_dim(d.dim(), e.dim(), "subset");
    if (d.is_empty() || e.is_full()) return true;
    if (e.is_empty()) return false;
    if (d.is_full()) return false;
    for (const auto& h : e.halfspaces()) {
        for (const auto& p : d.points()) {
            if (dot(p, h.normal) < h.offset.value()) return false;
        }
        for (const auto& r : d.rays()) {
            if (dot(r, h.normal) < 0) return false;
        }
        for (const auto& l : d.lineality()) {
            if (dot(l, h.normal) != 0) return false;
        }
    }
    return true;
}

inline bool set_equal(const UpperSet& d, const UpperSet& e)
{
    return subset(d, e) && subset(e, d);
}

// ---------------------------------------------------------------------------
// Conlinear structure

/// cl(D + E), with D ⊕ ∅ = ∅.
inline UpperSet oplus(const UpperSet& d, const UpperSet& e)
{
    require_same_dim(d.dim(), e.dim(), "oplus");
    const std::size_t m = d.dim();
    if (d.is_empty() || e.is_empty()) return UpperSet::empty(m);
    if (d.is_full() || e.is_full()) return UpperSet::full(m);
    std::vector<Vector> points;
    points.reserve(d.points().size() * e.points().size());
    for (const auto& p : d.points()) {
        for (const auto& q : e.points()) points.push_back(p + q);
    }
    std::vector<Vector> rays = d.rays();
    rays.insert(rays.end(), e.rays().begin(), e.rays().end());
    for (const auto* s : {&d, &e}) {
        for (const auto& l : s->lineality()) {
            rays.push_back(l);
            rays.push_back(-l);
        }
    }
    return UpperSet::from_generators(m, points, rays);
}

/// λD with λ∅ = ∅ for λ > 0 and 0D = C (also for D = ∅).
inline UpperSet scale(const Rational& lambda, const UpperSet& d, const Cone& c)
{
    if (lambda < 0) throw ValidationError("scale: negative factor " + to_string(lambda));
    require_same_dim(d.dim(), c.dim(), "scale");
    if (lambda == 0) return cone_set(c);
    if (!d.is_proper() || lambda == 1) return d;
    UpperSet out = d;
    for (auto& h : out.halfspaces_) h.offset = Extended(lambda * h.offset.value());
    for (auto& p : out.points_) p = lambda * p;
    return out;
}

/// cl co of the union; inf of the empty family is ∅.
inline UpperSet inf_set(const std::vector<UpperSet>& family, std::size_t m)
{
    std::vector<Vector> points, rays;
    for (const auto& d : family) {
        require_same_dim(d.dim(), m, "inf_set");
        if (d.is_empty()) continue;
        if (d.is_full()) return UpperSet::full(m);
        points.insert(points.end(), d.points().begin(), d.points().end());
        rays.insert(rays.end(), d.rays().begin(), d.rays().end());
        for (const auto& l : d.lineality()) {
            rays.push_back(l);
            rays.push_back(-l);
        }
    }
    if (points.empty()) return UpperSet::empty(m);
    return UpperSet::from_generators(m, points, rays);
}

/// Intersection; sup of the empty family is R^m.
inline UpperSet sup_set(const std::vector<UpperSet>& family, std::size_t m)
{
    std::vector<Halfspace> hs;
    for (const auto& d : family) {
        require_same_dim(d.dim(), m, "sup_set");
        if (d.is_empty()) return UpperSet::empty(m);
        if (d.is_full()) continue;
        hs.insert(hs.end(), d.halfspaces().begin(), d.halfspaces().end());
    }
    if (hs.empty()) return UpperSet::full(m);
    return UpperSet::from_halfspaces(m, hs);
}

/// D ⊕ H(w) = {z : <z, w> >= support(D, w)}.
inline UpperSet supporting_halfspace(const UpperSet& d, const Vector& w, const Cone& c)
{
    require_same_dim(w.size(), d.dim(), "supporting_halfspace");
    if (is_zero(w)) throw ValidationError("supporting_halfspace: w must be nonzero");
    if (!c.dual_contains(w)) {
        throw ValidationError("supporting_halfspace: " + to_string(w) + " is not in C+");
    }
    if (d.is_empty()) throw ValidationError("supporting_halfspace of the empty set");
    const Extended s = support(d, w);
    if (s.is_neg_inf()) return UpperSet::full(d.dim());
    return halfspace_set(w, s, c);
}

/// Image {Tz : z in D} + C under a linear map given by its rows.
inline UpperSet linear_image(const std::vector<Vector>& rows, const UpperSet& d, const Cone& c)
{
    const std::size_t m = d.dim();
    require_same_dim(rows.size(), m, "linear_image");
    if (d.is_empty()) return d;
    auto apply = [&](const Vector& z) {
        Vector r(m);
        for (std::size_t i = 0; i < m; ++i) r[i] = dot(rows[i], z);
        return r;
    };
    VRep raw;
    for (const auto& p : d.points()) raw.points.push_back(apply(p));
    for (const auto& r : d.rays()) raw.rays.push_back(apply(r));
    for (const auto& l : d.lineality()) {
        raw.rays.push_back(apply(l));
        raw.rays.push_back(-apply(l));
    }
    return canonicalize(raw, c);
}

// ---------------------------------------------------------------------------
// Polyhedra that are not upper sets

/// y - C = {z : <z, w> <= <y, w> for all w in C+}.
inline Polyhedron point_minus_cone(const Vector& y, const Cone& c)
{
    require_same_dim(y.size(), c.dim(), "point_minus_cone");
    Polyhedron p{c.dim(), {}};
    for (const auto& w : c.dual_generators()) {
        p.constraints.push_back(Halfspace{-w, Extended(-dot(y, w))});
    }
    return p;
}

inline Polyhedron whole_space(std::size_t m) { return Polyhedron{m, {}}; }

/// D ∩ P ≠ ∅, decided exactly by feasibility of the joint constraint system.
inline bool intersects(const UpperSet& d, const Polyhedron& p)
{
    require_same_dim(d.dim(), p.dim, "intersects");
    if (d.is_empty()) return false;
    std::vector<Halfspace> hs = p.constraints;
    if (d.is_proper()) hs.insert(hs.end(), d.halfspaces().begin(), d.halfspaces().end());
    return !detail::polyhedron_generators(d.dim(), hs).empty;
}

}  // namespace aumann
