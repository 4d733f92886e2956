/**
 * The Aumann integral of simple set-valued functions on finite atomic spaces.
 *
 * The integral is built as the Minkowski sum of the scaled values; the
 * support-function identity
 *     support(∫F dμ, w) = Σ_x μ(x) support(F(x), w)
 * is recorded as a certificate rather than used as the constructor, which
 * gives an independent cross-check on every result.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aumann/cone.hpp"
#include "aumann/measure_space.hpp"
#include "aumann/random.hpp"
#include "aumann/rational.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

struct CertificateEntry {
    Vector normal;
    Extended lhs;  ///< support of the computed integral
    Extended rhs;  ///< Σ μ(x) support(F(x), normal)

    bool holds() const { return lhs == rhs; }
};

struct IntegralResult {
    UpperSet value;
    std::vector<CertificateEntry> certificate;

    bool certified() const
    {
        return std::all_of(certificate.begin(), certificate.end(),
                           [](const CertificateEntry& e) { return e.holds(); });
    }
};

/// Σ_x μ(x) support(F(x), w); zero-weight atoms contribute 0 (= support of C).
inline Extended integrated_support(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                   const Vector& w)
{
    require_same_dim(f.size(), mu.size(), "integrated_support");
    Extended s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (mu[i] == 0) continue;
        s = s + mu[i] * support(f[i], w);
    }
    return s;
}

/// Certificate entries at the given directions (zero directions skipped).
inline std::vector<CertificateEntry> support_certificate(const UpperSet& value,
                                                         const SimpleSetFunction& f,
                                                         const AtomicMeasure& mu,
                                                         const std::vector<Vector>& directions)
{
    std::vector<CertificateEntry> out;
    for (const auto& w : directions) {
        if (is_zero(w)) continue;
        out.push_back({w, support(value, w), integrated_support(f, mu, w)});
    }
    return out;
}

inline void require_integrable_setup(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                     const Cone& c)
{
    require_same_dim(f.size(), mu.size(), "integral: atoms of function and measure");
    require_same_dim(f.dim(), c.dim(), "integral: dimension of values and cone");
    if (mu.total() <= 0) throw ValidationError("integral: measure has zero total mass");
}

/// On finite spaces with finite weights every F with nonempty values has an
/// integrable selection.
inline bool is_integrable(const SimpleSetFunction& f, const AtomicMeasure& mu)
{
    return f.size() == mu.size() && f.size() > 0;
}

inline IntegralResult aumann_integral(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                      const Cone& c)
{
    require_integrable_setup(f, mu, c);
    UpperSet acc = cone_set(c);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (mu[i] == 0) continue;
        acc = oplus(acc, scale(mu[i], f[i], c));
        if (acc.is_full()) break;
    }
    std::vector<Vector> dirs;
    for (const auto& h : acc.halfspaces()) dirs.push_back(h.normal);
    dirs.insert(dirs.end(), c.dual_generators().begin(), c.dual_generators().end());
    sort_unique(dirs);
    IntegralResult r{acc, {}};
    r.certificate = support_certificate(acc, f, mu, dirs);
    return r;
}

/// ∫_A F dμ := ∫ 1_A F dμ; equals C when μ(A) = 0.
inline IntegralResult integral_over(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                    const AtomSet& a, const Cone& c)
{
    return aumann_integral(indicator_modify(f, a, c), mu, c);
}

// ---------------------------------------------------------------------------
// Selection oracle

struct Decomposition {
    Vector point;                  ///< vertex-representative of the integral
    VectorFunction selection;      ///< f with f(x) in F(x)
};

struct OracleReport {
    std::size_t trials = 0;
    std::size_t containment_checked = 0;
    std::size_t points_attained = 0;
    bool upper_set_ok = false;
    std::vector<Decomposition> decompositions;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty() && upper_set_ok; }
};

namespace detail {

/// Random point of D: convex combination of its points plus a random
/// displacement along rays and lineality.
inline Vector random_member(Rng& rng, const UpperSet& d)
{
    if (d.is_full()) return rng.rational_vector(d.dim(), -5, 5);
    const auto lambda = rng.convex_weights(d.points().size());
    Vector z = zero_vector(d.dim());
    for (std::size_t i = 0; i < lambda.size(); ++i) z = z + lambda[i] * d.points()[i];
    for (const auto& r : d.rays()) z = z + rng.nonneg_rational(3) * r;
    for (const auto& l : d.lineality()) z = z + rng.rational(-3, 3) * l;
    return z;
}

/// Nonnegative solution of Σ α_i g_i = t by Carathéodory: try linearly
/// independent subsets of the generators of size at most `max_size`.
inline std::optional<std::vector<Rational>> conic_solve(const std::vector<Vector>& gens,
                                                        const Vector& t, std::size_t max_size)
{
    const std::size_t n = gens.size();
    if (is_zero(t)) return std::vector<Rational>(n, Rational(0));
    std::vector<std::size_t> pick;
    std::optional<std::vector<Rational>> found;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (found) return;
        if (!pick.empty()) {
            std::vector<Vector> cols;
            for (auto i : pick) cols.push_back(gens[i]);
            Vector x;
            if (solve_combination(cols, t, x) &&
                std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; })) {
                std::vector<Rational> alpha(n, Rational(0));
                for (std::size_t k = 0; k < pick.size(); ++k) alpha[pick[k]] = x[k];
                found = alpha;
                return;
            }
        }
        if (pick.size() == max_size) return;
        for (std::size_t i = start; i < n && !found; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return found;
}

/// Point of D minimising <., w>; ties broken by the sorted point order.
inline Vector argmin_point(const UpperSet& d, const Vector& w)
{
    const Vector* best = &d.points().front();
    for (const auto& p : d.points()) {
        if (dot(p, w) < dot(*best, w)) best = &p;
    }
    return *best;
}

/// Selection f with Σ μ(x) f(x) = p for a V-representation point p of ∫F dμ.
inline std::optional<VectorFunction> attain(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                            const UpperSet& integral, const Vector& p)
{
    const std::size_t m = integral.dim();
    VectorFunction sel = pick_selection(f);
    std::optional<std::size_t> full_atom;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (mu[i] > 0 && f[i].is_full()) full_atom = i;
    }
    if (full_atom) {
        // Absorb the whole remainder on one R^m-valued atom.
        const std::size_t j = *full_atom;
        sel.values[j] = zero_vector(m);
        const Vector rest = p - integrate(sel, mu);
        sel.values[j] = (Rational(1) / mu[j]) * rest;
        return sel;
    }

    // w in the relative interior of the normal cone at p; zero when the
    // integral is R^m, and then every ray may carry part of the gap.
    Vector w = zero_vector(m);
    for (const auto& h : integral.halfspaces()) {
        if (dot(p, h.normal) == h.offset.value()) w = w + h.normal;
    }

    std::vector<Vector> gens;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (mu[i] == 0) continue;
        sel.values[i] = argmin_point(f[i], w);
        for (const auto& r : f[i].rays()) {
            if (dot(r, w) != 0) continue;
            gens.push_back(r);
            owner.push_back(i);
        }
        for (const auto& l : f[i].lineality()) {
            gens.push_back(l);
            owner.push_back(i);
            gens.push_back(-l);
            owner.push_back(i);
        }
    }
    const Vector gap = p - integrate(sel, mu);
    if (is_zero(gap)) return sel;
    const auto alpha = conic_solve(gens, gap, m);
    if (!alpha) return std::nullopt;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if ((*alpha)[k] == 0) continue;
        const std::size_t i = owner[k];
        sel.values[i] = sel.values[i] + ((*alpha)[k] / mu[i]) * gens[k];
    }
    return sel;
}

}  // namespace detail

/// Checks the computed integral against the selection definition:
/// (a) ∫f dμ ∈ ∫F dμ for `trials` random selections f;
/// (b) each V-representation point of ∫F dμ is ∫f dμ for an explicit selection;
/// (c) ∫F dμ ⊕ C = ∫F dμ.
inline OracleReport selection_oracle(const SimpleSetFunction& f, const AtomicMeasure& mu,
                                     const Cone& c, std::size_t trials, std::uint64_t seed)
{
    if (trials == 0) throw ValidationError("selection_oracle: trials must be >= 1");
    const UpperSet value = aumann_integral(f, mu, c).value;
    OracleReport rep;
    rep.trials = trials;
    Rng rng(seed);

    for (std::size_t t = 0; t < trials; ++t) {
        VectorFunction sel;
        for (const auto& d : f.values()) sel.values.push_back(detail::random_member(rng, d));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!member(f[i], sel[i])) {
                rep.violations.push_back("selection generator left F(x" + std::to_string(i + 1) +
                                         ") at " + to_string(sel[i]));
            }
        }
        const Vector z = integrate(sel, mu);
        ++rep.containment_checked;
        if (!member(value, z)) {
            rep.violations.push_back("containment: integral of selection " + to_string(z) +
                                     " is outside the computed integral (trial " +
                                     std::to_string(t) + ")");
        }
    }

    const std::vector<Vector> targets =
        value.is_full() ? std::vector<Vector>{zero_vector(c.dim())} : value.points();
    for (const auto& p : targets) {
        const auto sel = detail::attain(f, mu, value, p);
        bool ok = sel.has_value() && integrate(*sel, mu) == p;
        for (std::size_t i = 0; ok && i < f.size(); ++i) ok = member(f[i], (*sel)[i]);
        if (!ok) {
            rep.violations.push_back("attainment: point " + to_string(p) + " has no exact selection decomposition");
            continue;
        }
        ++rep.points_attained;
        rep.decompositions.push_back({p, *sel});
    }

    rep.upper_set_ok = oplus(value, cone_set(c)) == value;
    if (!rep.upper_set_ok) rep.violations.push_back("upper-set check: integral ⊕ C differs from the integral");
    return rep;
}

// ---------------------------------------------------------------------------
// Monotone convergence

/// n, w -> tolerance for |support(Φ(F_n), w) - support(Φ(F), w)|.
using EpsilonSchedule = std::function<Rational(std::size_t, const Vector&)>;

/// K<c, w>/n.
inline EpsilonSchedule constant_epsilon(const Rational& k, const Cone& c)
{
    return [k, ci = c.interior_point()](std::size_t n, const Vector& w) { return k * dot(ci, w) / Rational(n); };
}

/// |support(first, w) - support(limit, w)| / n: the first gap shrunk at the
/// rate of the schedule t_n = 1/n.
inline EpsilonSchedule auto_epsilon(const UpperSet& first, const UpperSet& limit)
{
    return [first, limit](std::size_t n, const Vector& w) {
        const Extended a = support(first, w), b = support(limit, w);
        if (!a.is_finite() || !b.is_finite()) return Rational(0);
        Rational g = a.value() - b.value();
        if (g < 0) g = -g;
        return g / Rational(n);
    };
}

/// Map from set-valued functions to sets (the integral, or a functional under test).
using Evaluator = std::function<UpperSet(const SimpleSetFunction&)>;

/// Explicit nested list F_1 ⊆ ... ⊆ F_N with declared limit F.
struct FiniteChain {
    std::vector<SimpleSetFunction> steps;
    SimpleSetFunction limit;
};

/// F_n = base ⊕ (t_n ξ c + C) with t_n = 1/n, decreasing to `base`.
struct ParametricChain {
    SimpleSetFunction base;
    ScalarFunction displacement;
    std::size_t length = 16;

    SimpleSetFunction step(std::size_t n, const Cone& c) const
    {
        ScalarFunction s;
        for (const auto& v : displacement.values) s.values.emplace_back(v.value() / Rational(n));
        return oplus(base, scalar_times_c(s, c));
    }
};

struct ChainReport {
    bool precondition_ok = true;
    bool monotone = true;
    bool limit_ok = true;
    std::size_t first_violation = 0;  ///< 1-based chain index, 0 when none
    std::vector<std::string> messages;

    bool passed() const { return precondition_ok && monotone && limit_ok; }

    void fail(bool ChainReport::*flag, std::size_t n, std::string msg)
    {
        this->*flag = false;
        if (first_violation == 0) first_violation = n;
        messages.push_back(std::move(msg));
    }
};

namespace detail {

inline bool pointwise_subset(const SimpleSetFunction& a, const SimpleSetFunction& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!subset(a[i], b[i])) return false;
    }
    return true;
}

inline ChainReport check_finite_chain(const Evaluator& eval, const FiniteChain& chain, const Cone& c)
{
    ChainReport rep;
    const auto& steps = chain.steps;
    if (steps.empty()) {
        rep.fail(&ChainReport::precondition_ok, 0, "empty chain");
        return rep;
    }
    for (std::size_t n = 0; n + 1 < steps.size(); ++n) {
        if (!pointwise_subset(steps[n], steps[n + 1])) {
            rep.fail(&ChainReport::precondition_ok, n + 1,
                     "precondition: F_" + std::to_string(n + 1) + " is not contained in F_" +
                         std::to_string(n + 2));
        }
    }
    for (std::size_t i = 0; i < chain.limit.size(); ++i) {
        std::vector<UpperSet> fam;
        for (const auto& fn : steps) fam.push_back(fn[i]);
        if (!set_equal(inf_set(fam, c.dim()), chain.limit[i])) {
            rep.fail(&ChainReport::precondition_ok, steps.size(),
                     "precondition: pointwise limit differs from F at atom #" + std::to_string(i));
        }
    }
    if (!rep.precondition_ok) return rep;

    std::vector<UpperSet> values;
    for (const auto& fn : steps) values.push_back(eval(fn));
    for (std::size_t n = 0; n + 1 < values.size(); ++n) {
        if (!subset(values[n], values[n + 1])) {
            rep.fail(&ChainReport::monotone, n + 1,
                     "value at F_" + std::to_string(n + 1) + " is not contained in the value at F_" +
                         std::to_string(n + 2));
        }
    }
    if (!set_equal(inf_set(values, c.dim()), eval(chain.limit))) {
        rep.fail(&ChainReport::limit_ok, steps.size(), "inf of the chain values differs from the value at the limit");
    }
    return rep;
}

inline ChainReport check_parametric_chain(const Evaluator& eval, const ParametricChain& chain,
                                          const Cone& c, const EpsilonSchedule& eps)
{
    ChainReport rep;
    if (!chain.displacement.is_nonnegative_finite()) {
        rep.fail(&ChainReport::precondition_ok, 0, "precondition: displacement must be finite and >= 0");
        return rep;
    }
    const UpperSet target = eval(chain.base);
    std::optional<SimpleSetFunction> prev_f;
    std::optional<UpperSet> prev_v;
    for (std::size_t n = 1; n <= chain.length; ++n) {
        const SimpleSetFunction fn = chain.step(n, c);
        if (prev_f && !pointwise_subset(*prev_f, fn)) {
            rep.fail(&ChainReport::precondition_ok, n, "precondition: chain not nested at n = " + std::to_string(n));
            return rep;
        }
        const UpperSet v = eval(fn);
        if (prev_v && !subset(*prev_v, v)) {
            rep.fail(&ChainReport::monotone, n, "values not nested at n = " + std::to_string(n));
        }
        if (!subset(v, target)) {
            rep.fail(&ChainReport::monotone, n, "value at n = " + std::to_string(n) + " is not contained in the limit value");
        }
        if (!target.is_proper()) {
            prev_f = fn;
            prev_v = v;
            continue;
        }
        for (const auto& h : target.halfspaces()) {
            const Extended s = support(v, h.normal);
            const Rational tol = eps(n, h.normal);
            if (!s.is_finite()) {
                rep.fail(&ChainReport::limit_ok, n,
                         "n = " + std::to_string(n) + ": support at " + to_string(h.normal) + " is " + to_string(s));
                continue;
            }
            Rational gap = s.value() - h.offset.value();
            if (gap < 0) gap = -gap;
            if (gap > tol) {
                rep.fail(&ChainReport::limit_ok, n,
                         "n = " + std::to_string(n) + ", w = " + to_string(h.normal) + ": gap " +
                             to_string(gap) + " exceeds " + to_string(tol));
            }
        }
        prev_f = fn;
        prev_v = v;
    }
    return rep;
}

}  // namespace detail

/// Stabilising chain: precondition, nestedness of the integrals and
/// inf_n ∫F_n dμ = ∫F dμ.
inline ChainReport monotone_limit_check(const FiniteChain& chain, const AtomicMeasure& mu, const Cone& c)
{
    return detail::check_finite_chain(
        [&](const SimpleSetFunction& f) { return aumann_integral(f, mu, c).value; }, chain, c);
}

/// Parametric chain F_n = base ⊕ (ξc/n + C) for n = 1..length: nestedness and
/// |support(∫F_n, w) - support(∫base, w)| <= eps(n, w) at every facet normal
/// of the limit integral.
inline ChainReport monotone_limit_check(const ParametricChain& chain, const AtomicMeasure& mu,
                                        const Cone& c, const EpsilonSchedule& eps)
{
    return detail::check_parametric_chain(
        [&](const SimpleSetFunction& f) { return aumann_integral(f, mu, c).value; }, chain, c, eps);
}

}  // namespace aumann
