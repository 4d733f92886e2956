/**
 * Conformance checker for set-valued functionals Φ on simple functions.
 *
 * Each of the six characterising properties (A), (P), (C), (N), (I), (S) is
 * tested on a finite sample set. When all of them pass, the representing
 * measure is read off from Φ on indicator functions and the identity
 * Φ(F) = ∫F dμ is verified on families that follow the structure of the
 * representation proof (halfspace-valued, negative, f + C, general).
 *
 * Finite surrogates:
 *   (C) uses stabilising chains (exact) and chains F_n = L ⊕ (ξc/n + C) with
 *       an ε-schedule on the support gap.
 *   (S) intersects Φ(F^w) over a finite W: the facet normals of the values of
 *       F, the dual generators of C and the facet normals of Φ(F). This is
 *       sound (a reported failure is a genuine violation) but incomplete.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aumann/cone.hpp"
#include "aumann/integral.hpp"
#include "aumann/measure_space.hpp"
#include "aumann/random.hpp"
#include "aumann/rational.hpp"
#include "aumann/text.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

struct SetFunctional {
    std::string name;
    std::string params;
    Evaluator evaluate;
    bool serial = false;  ///< evaluator must not be invoked concurrently
};

inline SetFunctional integral_functional(const AtomicMeasure& mu, const Cone& c,
                                         const std::string& measure_name = "mu")
{
    return {"integral", measure_name,
            [mu, c](const SimpleSetFunction& f) { return aumann_integral(f, mu, c).value; }, false};
}

// ---------------------------------------------------------------------------
// Scalar extraction

struct ScalarExtraction {
    enum class Kind { Scalar, Empty, NotOfForm };
    Kind kind = Kind::NotOfForm;
    Rational k;

    bool is_scalar() const { return kind == Kind::Scalar; }
    std::string str() const
    {
        switch (kind) {
        case Kind::Scalar: return to_string(k);
        case Kind::Empty: return "empty";
        default: return "not_of_form";
        }
    }
};

/// k >= 0 with S = kc + C, "empty" for ∅, "not_of_form" otherwise.
inline ScalarExtraction extract_scalar(const UpperSet& s, const Cone& c)
{
    require_same_dim(s.dim(), c.dim(), "extract_scalar");
    if (s.is_empty()) return {ScalarExtraction::Kind::Empty, 0};
    if (s.is_full()) return {};
    const Vector& w = c.dual_generators().front();
    const Extended sup = support(s, w);
    if (!sup.is_finite()) return {};
    const Rational k = sup.value() / dot(c.interior_point(), w);
    if (k < 0) return {};
    if (!set_equal(s, point_plus_cone(k * c.interior_point(), c))) return {};
    return {ScalarExtraction::Kind::Scalar, k};
}

// ---------------------------------------------------------------------------
// Reports

enum class AxiomStatus { Pass, Fail, Skipped };

inline const char* to_string(AxiomStatus s)
{
    switch (s) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::Fail: return "FAIL";
    default: return "skipped";
    }
}

/// Enough to replay a failure: the functions Φ was applied to, the scalar
/// parameters, and both sides in canonical form.
struct Counterexample {
    std::string description;
    std::vector<std::pair<std::string, SimpleSetFunction>> functions;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs_label;
    UpperSet lhs;
    std::string rhs_label;
    UpperSet rhs;
};

struct AxiomResult {
    std::string code;   ///< "A", "P", "C", "N", "I", "S"
    std::string title;
    AxiomStatus status = AxiomStatus::Skipped;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;

    void fail(Counterexample cx)
    {
        if (status != AxiomStatus::Fail) counterexample = std::move(cx);
        status = AxiomStatus::Fail;
    }
    void finish()
    {
        if (status != AxiomStatus::Fail) status = checked > 0 ? AxiomStatus::Pass : AxiomStatus::Skipped;
    }
};

struct PhiEntry {
    ScalarFunction xi;
    ScalarExtraction value;
};

struct AxiomReport {
    std::vector<AxiomResult> results;  ///< in the order A, P, C, N, I, S
    std::vector<PhiEntry> phi_table;

    bool passed() const
    {
        for (const auto& r : results) {
            if (r.status == AxiomStatus::Fail) return false;
        }
        return !results.empty();
    }
    const AxiomResult& get(const std::string& code) const
    {
        for (const auto& r : results) {
            if (r.code == code) return r;
        }
        throw Error("no result for axiom " + code);
    }
};

// ---------------------------------------------------------------------------
// Samples

struct SampleSet {
    std::vector<SimpleSetFunction> functions;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Rational> lambdas{Rational(0), Rational(1, 2), Rational(1), Rational(3)};
    std::vector<FiniteChain> chains;
    std::vector<ParametricChain> parametric_chains;
    std::vector<Vector> w_samples;
    std::vector<ScalarFunction> xi_samples;
};

/// Default sample set: `count` seeded functions whose values are cl co of
/// 1-3 integer points of int C plus C, all pairs i <= j, the λ-grid
/// {0, 1/2, 1, 3}, three stabilising and three constant chains, parametric
/// chains C ⊕ (ξc/n + C) for ξ ≡ 1 and a random integer ξ >= 1 containing a 1,
/// the dual generators as nullity directions, and ξ-samples 1_{x} for every
/// atom, ξ ≡ 0, ξ ≡ 1 and the random ξ.
inline SampleSet default_samples(const Cone& c, std::size_t atoms, std::uint64_t seed,
                                 std::size_t count = 20, std::size_t chain_length = 16)
{
    if (atoms == 0) throw ValidationError("default_samples: no atoms");
    Rng rng(seed);
    SampleSet s;
    for (std::size_t i = 0; i < count; ++i) s.functions.push_back(random_interior_function(rng, c, atoms));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i; j < count; ++j) s.pairs.emplace_back(i, j);
    }

    const auto cc = SimpleSetFunction::constant(atoms, cone_set(c));
    const auto shift = [&](const SimpleSetFunction& f, long k) {
        return oplus(f, scalar_times_c(ScalarFunction::constant(atoms, k), c));
    };
    for (std::size_t i = 0; i < std::min<std::size_t>(3, count); ++i) {
        const auto& l = s.functions[i];
        s.chains.push_back({{shift(l, 2), shift(l, 1), l}, l});
        s.chains.push_back({{l, l, l}, l});
    }

    ScalarFunction xi;
    for (std::size_t i = 0; i < atoms; ++i) xi.values.emplace_back(rng.integer(1, 4));
    xi.values[rng.index(atoms)] = Extended(1);
    s.parametric_chains.push_back({cc, ScalarFunction::constant(atoms, 1), chain_length});
    s.parametric_chains.push_back({cc, xi, chain_length});

    s.w_samples = c.dual_generators();

    for (std::size_t i = 0; i < atoms; ++i) s.xi_samples.push_back(ScalarFunction::indicator({i}, atoms));
    s.xi_samples.push_back(ScalarFunction::constant(atoms, 0));
    s.xi_samples.push_back(ScalarFunction::constant(atoms, 1));
    s.xi_samples.push_back(xi);
    return s;
}

// ---------------------------------------------------------------------------
// Individual checks

namespace detail {

/// Memoising, optionally serialising wrapper around a functional.
class CachedFunctional {
public:
    explicit CachedFunctional(const SetFunctional& phi) : phi_(phi) {}

    UpperSet operator()(const SimpleSetFunction& f)
    {
        std::string key;
        for (const auto& v : f.values()) key += format_set(v) + ";";
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        UpperSet out;
        if (phi_.serial) {
            std::lock_guard<std::mutex> lock(eval_mutex_);
            out = phi_.evaluate(f);
        } else {
            out = phi_.evaluate(f);
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(std::move(key), out);
        return out;
    }

private:
    const SetFunctional& phi_;
    std::mutex cache_mutex_;
    std::mutex eval_mutex_;
    std::map<std::string, UpperSet> cache_;
};

using Eval = std::function<UpperSet(const SimpleSetFunction&)>;

inline Counterexample counterexample(std::string what,
                                     std::vector<std::pair<std::string, SimpleSetFunction>> fs,
                                     std::vector<std::pair<std::string, std::string>> params,
                                     std::string lhs_label, UpperSet lhs, std::string rhs_label,
                                     UpperSet rhs)
{
    return {std::move(what), std::move(fs), std::move(params), std::move(lhs_label),
            std::move(lhs), std::move(rhs_label), std::move(rhs)};
}

}  // namespace detail

inline AxiomResult check_additivity(const detail::Eval& phi, const SampleSet& s)
{
    AxiomResult r{"A", "additivity"};
    for (const auto& [i, j] : s.pairs) {
        const auto& f = s.functions.at(i);
        const auto& g = s.functions.at(j);
        const UpperSet a = phi(f), b = phi(g);
        if (a.is_empty() || b.is_empty()) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        const UpperSet lhs = phi(oplus(f, g));
        const UpperSet rhs = oplus(a, b);
        if (!set_equal(lhs, rhs)) {
            r.fail(detail::counterexample("Φ(F ⊕ G) differs from Φ(F) ⊕ Φ(G)", {{"F", f}, {"G", g}},
                                          {{"pair", std::to_string(i) + "," + std::to_string(j)}},
                                          "Φ(F ⊕ G)", lhs, "Φ(F) ⊕ Φ(G)", rhs));
        }
    }
    if (r.skipped) r.notes.push_back(std::to_string(r.skipped) + " pairs skipped (Φ(F) or Φ(G) empty)");
    r.finish();
    return r;
}

inline AxiomResult check_positive_homogeneity(const detail::Eval& phi, const SampleSet& s, const Cone& c)
{
    AxiomResult r{"P", "positive homogeneity"};
    for (std::size_t i = 0; i < s.functions.size(); ++i) {
        const auto& f = s.functions[i];
        const UpperSet base = phi(f);
        for (const auto& lambda : s.lambdas) {
            ++r.checked;
            const UpperSet lhs = phi(scale(lambda, f, c));
            const UpperSet rhs = scale(lambda, base, c);
            if (!set_equal(lhs, rhs)) {
                r.fail(detail::counterexample("Φ(λF) differs from λΦ(F)", {{"F", f}},
                                              {{"lambda", to_string(lambda)}, {"sample", std::to_string(i)}},
                                              "Φ(λF)", lhs, "λΦ(F)", rhs));
            }
        }
    }
    r.finish();
    return r;
}

/// ε(n, w) for parametric chains; nullopt selects the automatic schedule
/// ε(n, w) = gap_1(w)/n, the first support gap shrunk at the chain's own
/// rate. A constant K selects ε(n, w) = K<c, w>/n.
struct ContinuityOptions {
    std::optional<Rational> epsilon_constant;
};

inline AxiomResult check_continuity_from_above(const detail::Eval& phi, const SampleSet& s, const Cone& c,
                                               const ContinuityOptions& opt = {})
{
    AxiomResult r{"C", "continuity from above"};
    for (std::size_t k = 0; k < s.chains.size(); ++k) {
        const auto& ch = s.chains[k];
        if (ch.steps.empty() || phi(ch.steps.front()).is_empty()) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        const ChainReport rep = detail::check_finite_chain(phi, ch, c);
        if (!rep.passed()) {
            const std::size_t n = std::max<std::size_t>(rep.first_violation, 1);
            const auto& fn = ch.steps.at(std::min(n, ch.steps.size()) - 1);
            r.fail(detail::counterexample(
                "chain #" + std::to_string(k) + ": " + rep.messages.front(), {{"F_n", fn}, {"F", ch.limit}},
                {{"n", std::to_string(n)}}, "Φ(F_n)", phi(fn), "Φ(F)", phi(ch.limit)));
        }
    }
    for (std::size_t k = 0; k < s.parametric_chains.size(); ++k) {
        const auto& ch = s.parametric_chains[k];
        const SimpleSetFunction first = ch.step(1, c);
        const UpperSet v1 = phi(first);
        if (v1.is_empty()) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        const UpperSet limit = phi(ch.base);
        const EpsilonSchedule eps =
            opt.epsilon_constant ? constant_epsilon(*opt.epsilon_constant, c) : auto_epsilon(v1, limit);
        const ChainReport rep = detail::check_parametric_chain(phi, ch, c, eps);
        if (!rep.passed()) {
            const std::size_t n = std::max<std::size_t>(rep.first_violation, 1);
            const auto fn = ch.step(n, c);
            r.fail(detail::counterexample("parametric chain #" + std::to_string(k) + ": " + rep.messages.front(),
                                          {{"F_n", fn}, {"F", ch.base}},
                                          {{"n", std::to_string(n)}, {"xi", format_scalars(ch.displacement)}},
                                          "Φ(F_n)", phi(fn), "Φ(F)", limit));
        }
    }
    r.notes.push_back(opt.epsilon_constant ? "epsilon schedule K<c,w>/n with K = " + to_string(*opt.epsilon_constant)
                                           : std::string("epsilon schedule auto: gap_1(w)/n"));
    r.finish();
    return r;
}

inline AxiomResult check_nullity(const detail::Eval& phi, const SampleSet& s, const Cone& c, std::size_t atoms)
{
    AxiomResult r{"N", "nullity"};
    for (const auto& w : s.w_samples) {
        ++r.checked;
        const UpperSet h = homogeneous_halfspace(w, c);
        const auto f = SimpleSetFunction::constant(atoms, h);
        const UpperSet lhs = phi(f);
        if (!set_equal(lhs, h)) {
            r.fail(detail::counterexample("Φ(H(w)) differs from H(w)", {{"F", f}}, {{"w", to_string(w)}},
                                          "Φ(H(w))", lhs, "H(w)", h));
        }
    }
    r.finish();
    return r;
}

inline AxiomResult check_indicator(const detail::Eval& phi, const SampleSet& s, const Cone& c,
                                   std::vector<PhiEntry>* table = nullptr)
{
    AxiomResult r{"I", "indicator property"};
    bool nontrivial = false;
    for (const auto& xi : s.xi_samples) {
        if (!xi.is_nonnegative_finite()) throw ValidationError("indicator samples must be finite and >= 0");
        ++r.checked;
        const auto f = scalar_times_c(xi, c);
        const UpperSet v = phi(f);
        const ScalarExtraction e = extract_scalar(v, c);
        if (table) table->push_back({xi, e});
        if (e.kind == ScalarExtraction::Kind::NotOfForm) {
            r.fail(detail::counterexample("Φ(ξc + C) is neither empty nor of the form kc + C", {{"F", f}},
                                          {{"xi", format_scalars(xi)}}, "Φ(ξc + C)", v, "nearest kc + C",
                                          UpperSet::empty(c.dim())));
            if (auto k = support(v, c.dual_generators().front()); k.is_finite()) {
                r.counterexample->rhs = point_plus_cone(
                    (k.value() / dot(c.interior_point(), c.dual_generators().front())) * c.interior_point(), c);
            }
        }
        if (xi.is_strictly_positive() && e.is_scalar() && e.k != 0) nontrivial = true;
    }
    if (!nontrivial && r.status != AxiomStatus::Fail) {
        r.notes.push_back("no strictly positive ξ-sample gives a value outside {∅, C}");
        r.fail(detail::counterexample("nontriviality: Φ(ξc + C) ∈ {∅, C} for every strictly positive sample",
                                      {}, {}, "", UpperSet::empty(c.dim()), "", UpperSet::empty(c.dim())));
    }
    r.finish();
    return r;
}

/// The finite direction set W used for (S).
inline std::vector<Vector> interchange_directions(const SimpleSetFunction& f, const UpperSet& value,
                                                  const Cone& c)
{
    std::vector<Vector> w = c.dual_generators();
    for (const auto& d : f.values()) {
        for (const auto& h : d.halfspaces()) w.push_back(h.normal);
    }
    for (const auto& h : value.halfspaces()) w.push_back(h.normal);
    sort_unique(w);
    return w;
}

inline AxiomResult check_interchange(const detail::Eval& phi, const SampleSet& s, const Cone& c)
{
    AxiomResult r{"S", "interchangeability with supporting halfspaces"};
    for (std::size_t i = 0; i < s.functions.size(); ++i) {
        const auto& f = s.functions[i];
        const UpperSet lhs = phi(f);
        if (lhs.is_empty()) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        std::vector<UpperSet> parts;
        for (const auto& w : interchange_directions(f, lhs, c)) parts.push_back(phi(supporting_halfspaces(f, w, c)));
        const UpperSet rhs = sup_set(parts, c.dim());
        if (!set_equal(lhs, rhs)) {
            r.fail(detail::counterexample("Φ(F) differs from the intersection of Φ(F^w) over W", {{"F", f}},
                                          {{"sample", std::to_string(i)}}, "Φ(F)", lhs, "⋂ Φ(F^w)", rhs));
        }
    }
    r.notes.push_back("W = facet normals of F(x), dual generators of C, facet normals of Φ(F)");
    r.finish();
    return r;
}

struct CheckOptions {
    ContinuityOptions continuity;
    bool parallel = true;
};

/// Runs the six checks (concurrently unless disabled) and merges the results
/// in the fixed order A, P, C, N, I, S.
inline AxiomReport check_all(const SetFunctional& phi, const SampleSet& s, const Cone& c, std::size_t atoms,
                             const CheckOptions& opt = {})
{
    detail::CachedFunctional cached(phi);
    const detail::Eval eval = [&cached](const SimpleSetFunction& f) { return cached(f); };
    AxiomReport rep;
    std::vector<PhiEntry> table;
    std::vector<std::function<AxiomResult()>> jobs{
        [&] { return check_additivity(eval, s); },
        [&] { return check_positive_homogeneity(eval, s, c); },
        [&] { return check_continuity_from_above(eval, s, c, opt.continuity); },
        [&] { return check_nullity(eval, s, c, atoms); },
        [&] { return check_indicator(eval, s, c, &table); },
        [&] { return check_interchange(eval, s, c); },
    };
    if (opt.parallel) {
        std::vector<std::future<AxiomResult>> futures;
        for (auto& j : jobs) futures.push_back(std::async(std::launch::async, j));
        for (auto& f : futures) rep.results.push_back(f.get());
    } else {
        for (auto& j : jobs) rep.results.push_back(j());
    }
    rep.phi_table = std::move(table);
    return rep;
}

// ---------------------------------------------------------------------------
// Measure reconstruction

struct ReconstructedMeasure {
    std::vector<std::optional<Rational>> weights;  ///< nullopt: atom of infinite mass
    std::vector<PhiEntry> phi_table;
    std::vector<std::string> problems;

    bool finite() const
    {
        for (const auto& w : weights) {
            if (!w) return false;
        }
        return true;
    }
    bool ok() const { return problems.empty(); }
    AtomicMeasure measure() const
    {
        std::vector<Rational> w;
        for (const auto& x : weights) {
            if (!x) throw ValidationError("reconstructed measure has an atom of infinite mass");
            w.push_back(*x);
        }
        return AtomicMeasure(std::move(w));
    }
};

/// μ({x}) := φ(1_{x}), then additivity re-checked against φ(1_A) on every
/// subset A (or `subset_samples` random ones for larger spaces).
inline ReconstructedMeasure reconstruct_measure(const SetFunctional& phi, std::size_t atoms, const Cone& c,
                                                std::uint64_t seed = 0, std::size_t subset_samples = 64)
{
    detail::CachedFunctional cached(phi);
    ReconstructedMeasure rm;
    auto phi_of = [&](const ScalarFunction& xi) {
        const ScalarExtraction e = extract_scalar(cached(scalar_times_c(xi, c)), c);
        rm.phi_table.push_back({xi, e});
        return e;
    };
    for (std::size_t i = 0; i < atoms; ++i) {
        const ScalarExtraction e = phi_of(ScalarFunction::indicator({i}, atoms));
        if (e.kind == ScalarExtraction::Kind::Scalar) {
            rm.weights.emplace_back(e.k);
        } else if (e.kind == ScalarExtraction::Kind::Empty) {
            rm.weights.emplace_back(std::nullopt);
        } else {
            rm.weights.emplace_back(std::nullopt);
            rm.problems.push_back("Φ(1_{x" + std::to_string(i + 1) + "}c + C) is not of the form kc + C");
        }
    }

    std::vector<AtomSet> subsets;
    if (atoms <= 6) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << atoms); ++mask) {
            AtomSet a;
            for (std::size_t i = 0; i < atoms; ++i) {
                if (mask >> i & 1) a.insert(i);
            }
            subsets.push_back(std::move(a));
        }
    } else {
        Rng rng(seed);
        for (std::size_t k = 0; k < subset_samples; ++k) {
            AtomSet a;
            for (std::size_t i = 0; i < atoms; ++i) {
                if (rng.coin()) a.insert(i);
            }
            subsets.push_back(std::move(a));
        }
    }
    for (const auto& a : subsets) {
        if (a.size() <= 1) continue;
        const ScalarExtraction e = phi_of(ScalarFunction::indicator(a, atoms));
        bool infinite = false;
        Rational sum = 0;
        for (auto i : a) {
            if (!rm.weights[i]) {
                infinite = true;
            } else {
                sum += *rm.weights[i];
            }
        }
        const bool ok = infinite ? e.kind == ScalarExtraction::Kind::Empty
                                 : (e.is_scalar() && e.k == sum);
        if (!ok) {
            std::string name = "{";
            for (auto i : a) name += (name.size() > 1 ? "," : "") + std::string("x") + std::to_string(i + 1);
            rm.problems.push_back("φ(1_A) = " + e.str() + " for A = " + name + "}, expected " +
                                  (infinite ? std::string("empty") : to_string(sum)));
        }
    }
    Rational total = 0;
    for (const auto& w : rm.weights) {
        if (w) total += *w;
    }
    if (rm.finite() && total == 0) rm.problems.push_back("reconstructed measure has zero total mass");
    return rm;
}

// ---------------------------------------------------------------------------
// Decomposition f = ξc - g

struct Decomposed {
    ScalarFunction xi;
    VectorFunction g;
};

/// ξ(x) = max(0, max_{w vertex of D(c)} <f(x), w>), g = ξc - f ∈ C.
inline Decomposed decompose_nonneg(const VectorFunction& f, const Cone& c)
{
    const auto verts = c.base_polytope();
    Decomposed d;
    for (const auto& fx : f.values) {
        require_same_dim(fx.size(), c.dim(), "decompose_nonneg");
        Rational xi = 0;
        for (const auto& w : verts) xi = std::max(xi, dot(fx, w));
        d.xi.values.emplace_back(xi);
        d.g.values.push_back(xi * c.interior_point() - fx);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Representation

struct FamilyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t failures = 0;
    std::optional<Counterexample> counterexample;
};

struct RepresentationReport {
    std::vector<FamilyResult> families;

    bool passed() const
    {
        for (const auto& f : families) {
            if (f.failures) return false;
        }
        return !families.empty();
    }
};

/// Generated test families, one per kind of function used in the proof of
/// the representation. Deterministic in `seed`.
inline std::vector<std::pair<std::string, std::vector<SimpleSetFunction>>>
representation_suite(const Cone& c, std::size_t atoms, std::uint64_t seed, std::size_t per_family = 8)
{
    Rng rng(seed);
    const std::size_t m = c.dim();
    std::vector<std::pair<std::string, std::vector<SimpleSetFunction>>> out;

    std::vector<SimpleSetFunction> fam;
    std::vector<Vector> ws = c.dual_generators();
    for (std::size_t k = 0; k < 3; ++k) ws.push_back(random_dual_vector(rng, c));
    for (const auto& w : ws) fam.push_back(SimpleSetFunction::constant(atoms, homogeneous_halfspace(w, c)));
    out.emplace_back("constant halfspace H(w)", std::move(fam));

    auto halfspace_family = [&](bool unbounded) {
        std::vector<SimpleSetFunction> v;
        for (std::size_t k = 0; k < per_family; ++k) {
            const Vector w = random_dual_vector(rng, c);
            ScalarFunction off;
            for (std::size_t i = 0; i < atoms; ++i) {
                if (unbounded && rng.integer(0, 2) == 0) {
                    off.values.push_back(Extended::neg_inf());
                } else {
                    off.values.emplace_back(-rng.nonneg_rational(4));
                }
            }
            v.push_back(halfspace_function(w, off, c));
        }
        return v;
    };
    out.emplace_back("halfspace, finite offsets <= 0", halfspace_family(false));
    out.emplace_back("halfspace, offsets in [-inf, 0]", halfspace_family(true));

    fam.clear();
    for (std::size_t k = 0; k < per_family; ++k) {
        std::vector<UpperSet> v;
        for (std::size_t i = 0; i < atoms; ++i) v.push_back(random_negative_set(rng, c));
        fam.push_back(SimpleSetFunction(std::move(v)));
    }
    out.emplace_back("negative (0 in F(x))", std::move(fam));

    fam.clear();
    for (std::size_t k = 0; k < per_family; ++k) {
        VectorFunction f;
        for (std::size_t i = 0; i < atoms; ++i) f.values.push_back(-random_cone_vector(rng, c));
        fam.push_back(vector_plus_cone(f, c));
    }
    out.emplace_back("f + C, f in -C", std::move(fam));

    fam.clear();
    for (std::size_t k = 0; k < per_family; ++k) {
        ScalarFunction xi;
        for (std::size_t i = 0; i < atoms; ++i) xi.values.emplace_back(rng.nonneg_rational(4));
        fam.push_back(scalar_times_c(xi, c));
    }
    out.emplace_back("ξc + C", std::move(fam));

    fam.clear();
    for (std::size_t k = 0; k < per_family; ++k) fam.push_back(vector_plus_cone(random_vector_function(rng, m, atoms), c));
    out.emplace_back("f + C, general f", std::move(fam));

    fam.clear();
    for (std::size_t k = 0; k < per_family; ++k) fam.push_back(random_function(rng, c, atoms));
    out.emplace_back("general", std::move(fam));
    return out;
}

/// Φ(F) = ∫F dμ̂ on the representation suite (F with Φ(F) = ∅ are skipped).
inline RepresentationReport verify_representation(const SetFunctional& phi, const AtomicMeasure& mu_hat,
                                                  const Cone& c, std::uint64_t seed, std::size_t per_family = 8)
{
    RepresentationReport rep;
    detail::CachedFunctional cached(phi);
    for (const auto& [name, fam] : representation_suite(c, mu_hat.size(), seed, per_family)) {
        FamilyResult fr{name};
        for (const auto& f : fam) {
            const UpperSet lhs = cached(f);
            if (lhs.is_empty()) {
                ++fr.skipped;
                continue;
            }
            ++fr.checked;
            const UpperSet rhs = aumann_integral(f, mu_hat, c).value;
            if (!set_equal(lhs, rhs)) {
                ++fr.failures;
                if (!fr.counterexample) {
                    fr.counterexample =
                        detail::counterexample("Φ(F) differs from the integral against the reconstructed measure",
                                               {{"F", f}}, {}, "Φ(F)", lhs, "∫F dμ̂", rhs);
                }
            }
        }
        rep.families.push_back(std::move(fr));
    }
    return rep;
}

}  // namespace aumann
