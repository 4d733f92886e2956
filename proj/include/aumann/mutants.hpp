// Single-axiom mutants of the integral functional.
//
// Each mutant agrees with F -> ∫F dμ except on inputs that carry a feature
// the targeted property exercises and the other properties (on the default
// sample set) never produce. The features are:
//   additivity-shift       always: ∫F dμ ∩ ∫F dν with ν moving the mass of one atom
//   homogeneity-translate  some offset of some value is not an integer: integrate against μ/2
//   continuity-jump        some offset has denominator > 8: integrate against 2μ
//   nullity-pad            a value equal to some H(w): replace it by H(w) ⊕ (c + C)
//   indicator-deform       always: T ∫F dμ + C, T = W^{-1} diag(2, 1, ...) W (simplicial C)
//   interchange-tighten    a value with lineality and a nonzero offset: intersect
//                          with {<z, u> >= 10^6}, u the sum of the dual generators
#pragma once

#include <string>
#include <vector>

#include "aumann/axioms.hpp"
#include "aumann/integral.hpp"

namespace aumann {

inline const std::vector<std::string>& mutant_names()
{
    static const std::vector<std::string> names{"additivity-shift",  "homogeneity-translate",
                                                "continuity-jump",   "nullity-pad",
                                                "indicator-deform",  "interchange-tighten"};
    return names;
}

/// Axiom code each mutant is built to violate.
inline std::string mutant_target(const std::string& name)
{
    if (name == "additivity-shift") return "A";
    if (name == "homogeneity-translate") return "P";
    if (name == "continuity-jump") return "C";
    if (name == "nullity-pad") return "N";
    if (name == "indicator-deform") return "I";
    if (name == "interchange-tighten") return "S";
    throw ValidationError("unknown mutant '" + name + "'");
}

namespace detail {

inline bool any_offset(const SimpleSetFunction& f, const std::function<bool(const Rational&)>& pred)
{
    for (const auto& d : f.values()) {
        for (const auto& h : d.halfspaces()) {
            if (pred(h.offset.value())) return true;
        }
    }
    return false;
}

inline AtomicMeasure scaled_measure(const AtomicMeasure& mu, const Rational& s)
{
    std::vector<Rational> w;
    for (const auto& x : mu.weights()) w.push_back(s * x);
    return AtomicMeasure(std::move(w));
}

/// Moves the mass of the first charged atom onto its cyclic successor.
inline AtomicMeasure shifted_measure(const AtomicMeasure& mu)
{
    std::vector<Rational> w = mu.weights();
    const std::size_t n = w.size();
    if (n < 2) return mu;
    std::size_t j = 0;
    while (w[j] == 0) ++j;
    const std::size_t i = (j + 1) % n;
    w[i] += w[j];
    w[j] = 0;
    return AtomicMeasure(std::move(w));
}

/// Rows of W^{-1} D W where W holds the dual generators as rows.
inline std::vector<Vector> deformation(const Cone& c)
{
    const std::size_t m = c.dim();
    const auto& w = c.dual_generators();
    if (w.size() != m) {
        throw ValidationError("indicator-deform needs a simplicial cone (exactly m dual generators)");
    }
    // Columns of W^{-1}: W x = e_j, i.e. x as a combination of the columns of W.
    std::vector<Vector> wcols(m, Vector(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) wcols[j][i] = w[i][j];
    }
    std::vector<Vector> winv_cols;
    for (std::size_t j = 0; j < m; ++j) {
        Vector x;
        if (!solve_combination(wcols, unit_vector(m, j), x)) throw Error("indicator-deform: singular W");
        winv_cols.push_back(x);
    }
    // T = W^{-1} D W: T[r][k] = Σ_j Winv[r][j] d_j W[j][k].
    std::vector<Vector> t(m, Vector(m, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                const Rational d = j == 0 ? 2 : 1;
                t[r][k] += winv_cols[j][r] * d * w[j][k];
            }
        }
    }
    return t;
}

}  // namespace detail

inline SetFunctional make_mutant(const std::string& name, const AtomicMeasure& mu, const Cone& c,
                                 const std::string& measure_name = "mu")
{
    mutant_target(name);
    auto integral = [c](const SimpleSetFunction& f, const AtomicMeasure& m) { return aumann_integral(f, m, c).value; };
    SetFunctional phi{"mutant:" + name, measure_name, {}, false};

    if (name == "additivity-shift") {
        const AtomicMeasure nu = detail::shifted_measure(mu);
        phi.evaluate = [=](const SimpleSetFunction& f) {
            return sup_set({integral(f, mu), integral(f, nu)}, c.dim());
        };
    } else if (name == "homogeneity-translate") {
        const AtomicMeasure half = detail::scaled_measure(mu, Rational(1, 2));
        phi.evaluate = [=](const SimpleSetFunction& f) {
            const bool fractional = detail::any_offset(f, [](const Rational& b) { return !is_integral(b); });
            return integral(f, fractional ? half : mu);
        };
    } else if (name == "continuity-jump") {
        const AtomicMeasure twice = detail::scaled_measure(mu, 2);
        phi.evaluate = [=](const SimpleSetFunction& f) {
            const bool fine = detail::any_offset(f, [](const Rational& b) { return denominator(b) > 8; });
            return integral(f, fine ? twice : mu);
        };
    } else if (name == "nullity-pad") {
        const UpperSet pad = point_plus_cone(c.interior_point(), c);
        phi.evaluate = [=](const SimpleSetFunction& f) {
            std::vector<UpperSet> v;
            for (const auto& d : f.values()) {
                const bool homogeneous = d.is_proper() && d.halfspaces().size() == 1 &&
                                         !d.lineality().empty() && d.halfspaces().front().offset == Extended(0);
                v.push_back(homogeneous ? oplus(d, pad) : d);
            }
            return integral(SimpleSetFunction(std::move(v)), mu);
        };
    } else if (name == "indicator-deform") {
        const std::vector<Vector> t = detail::deformation(c);
        phi.evaluate = [=](const SimpleSetFunction& f) { return linear_image(t, integral(f, mu), c); };
    } else {
        Vector u = zero_vector(c.dim());
        for (const auto& w : c.dual_generators()) u = u + w;
        const UpperSet far = halfspace_set(u, Extended(Rational(1000000)), c);
        phi.evaluate = [=](const SimpleSetFunction& f) {
            bool trigger = false;
            for (const auto& d : f.values()) {
                if (!d.is_proper() || d.lineality().empty()) continue;
                for (const auto& h : d.halfspaces()) trigger = trigger || h.offset != Extended(0);
            }
            const UpperSet v = integral(f, mu);
            return trigger ? sup_set({v, far}, c.dim()) : v;
        };
    }
    return phi;
}

}  // namespace aumann
