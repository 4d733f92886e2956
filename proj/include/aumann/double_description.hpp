/**
 * Double description conversion for polyhedral cones.
 *
 * A cone {x : <a_i, x> >= 0} is converted to its minimal generators
 * (a lineality basis plus extreme rays modulo lineality) by incremental
 * Motzkin elimination with the algebraic adjacency test. Since the
 * generators of a cone are the constraints of its dual, the same routine
 * converts in both directions.
 *
 * Intended for desk-scale inputs (dimension up to ~9, tens of constraints).
 */
#pragma once

#include <cstddef>
#include <vector>

#include "aumann/rational.hpp"

namespace aumann::dd {

struct Generators {
    std::vector<Vector> lineality;  ///< basis of the lineality space
    std::vector<Vector> rays;       ///< extreme rays, primitive, modulo lineality
};

namespace detail {

inline bool adjacent(const Vector& p, const Vector& n, const std::vector<Vector>& processed,
                     std::size_t dim, std::size_t lineality_dim)
{
    std::vector<Vector> tight;
    for (const auto& a : processed) {
        if (dot(a, p) == 0 && dot(a, n) == 0) tight.push_back(a);
    }
    if (dim < lineality_dim + 2) return false;
    const std::size_t need = dim - lineality_dim - 2;
    if (tight.size() < need) return false;
    return rank(tight) == need;
}

}  // namespace detail

/// Minimal generators of {x in R^dim : <a, x> >= 0 for all a in constraints}.
inline Generators generators_of(const std::vector<Vector>& constraints, std::size_t dim)
{
    Generators g;
    for (std::size_t i = 0; i < dim; ++i) g.lineality.push_back(unit_vector(dim, i));
    std::vector<Vector> processed;

    for (const auto& raw : constraints) {
        require_same_dim(raw.size(), dim, "double description constraint");
        if (is_zero(raw)) continue;
        const Vector a = primitive(raw);

        // Case 1: the constraint cuts the lineality space.
        std::size_t li = g.lineality.size();
        for (std::size_t i = 0; i < g.lineality.size(); ++i) {
            if (dot(a, g.lineality[i]) != 0) {
                li = i;
                break;
            }
        }
        if (li < g.lineality.size()) {
            Vector l0 = g.lineality[li];
            Rational s0 = dot(a, l0);
            if (s0 < 0) {
                l0 = -l0;
                s0 = -s0;
            }
            std::vector<Vector> lin;
            for (std::size_t i = 0; i < g.lineality.size(); ++i) {
                if (i == li) continue;
                Vector l = g.lineality[i];
                const Rational s = dot(a, l);
                if (s != 0) l = l - (s / s0) * l0;
                lin.push_back(primitive(l));
            }
            for (auto& r : g.rays) {
                const Rational s = dot(a, r);
                if (s != 0) r = primitive(r - (s / s0) * l0);
            }
            g.lineality = std::move(lin);
            g.rays.push_back(primitive(l0));
            processed.push_back(a);
            continue;
        }

        // Case 2: lineality lies in the hyperplane; Motzkin step on the rays.
        std::vector<Vector> pos, zero, neg;
        std::vector<Rational> spos, sneg;
        for (const auto& r : g.rays) {
            const Rational s = dot(a, r);
            if (s > 0) {
                pos.push_back(r);
                spos.push_back(s);
            } else if (s < 0) {
                neg.push_back(r);
                sneg.push_back(s);
            } else {
                zero.push_back(r);
            }
        }
        if (!neg.empty()) {
            std::vector<Vector> next = pos;
            next.insert(next.end(), zero.begin(), zero.end());
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    if (!detail::adjacent(pos[i], neg[j], processed, dim, g.lineality.size())) {
                        continue;
                    }
                    next.push_back(primitive(spos[i] * neg[j] - sneg[j] * pos[i]));
                }
            }
            g.rays = std::move(next);
        }
        processed.push_back(a);
    }

    sort_unique(g.rays);
    g.lineality = row_basis(std::move(g.lineality), dim);
    return g;
}

/// Constraints whose intersection is cone(lineality, rays): generators of the dual cone.
inline Generators dual_of(const Generators& g, std::size_t dim)
{
    std::vector<Vector> cons = g.rays;
    for (const auto& l : g.lineality) {
        cons.push_back(l);
        cons.push_back(-l);
    }
    return generators_of(cons, dim);
}

}  // namespace aumann::dd
