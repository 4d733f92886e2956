/**
 * Workspace files: YAML documents declaring the cone, the atoms and named
 * measures, scalar/vector/set-valued functions, chains and the functional
 * under test. The grammar is documented in README.md; every printed set or
 * function literal is itself valid input.
 *
 * Errors are reported as WorkspaceError with "path:line:column: message".
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "aumann/cone.hpp"
#include "aumann/integral.hpp"
#include "aumann/measure_space.hpp"
#include "aumann/rational.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

class WorkspaceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

struct Workspace {
    std::string path;
    std::size_t dimension = 0;
    std::optional<Cone> cone_;
    std::optional<AtomicSpace> space_;
    std::map<std::string, AtomicMeasure> measures;
    std::map<std::string, ScalarFunction> scalars;
    std::map<std::string, VectorFunction> vectors;
    std::map<std::string, UpperSet> sets;
    std::map<std::string, SimpleSetFunction> functions;
    std::map<std::string, FiniteChain> chains;
    std::map<std::string, ParametricChain> parametric_chains;
    std::optional<std::string> functional;

    const Cone& cone() const { return *cone_; }
    const AtomicSpace& space() const { return *space_; }
    std::size_t atoms() const { return space_->size(); }

    template <class T>
    static const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind)
    {
        auto it = m.find(name);
        if (it == m.end()) throw ValidationError(std::string("unknown ") + kind + " '" + name + "'");
        return it->second;
    }
    const AtomicMeasure& measure(const std::string& n) const { return lookup(measures, n, "measure"); }
    const SimpleSetFunction& function(const std::string& n) const { return lookup(functions, n, "function"); }
    const UpperSet& set(const std::string& n) const { return lookup(sets, n, "set"); }
    const ScalarFunction& scalar(const std::string& n) const { return lookup(scalars, n, "scalar function"); }
    const VectorFunction& vector(const std::string& n) const { return lookup(vectors, n, "vector function"); }
};

namespace detail {

class YamlReader {
public:
    explicit YamlReader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& n, const std::string& msg) const
    {
        const YAML::Mark mk = n.Mark();
        std::string where = source_;
        if (mk.line >= 0) where += ":" + std::to_string(mk.line + 1) + ":" + std::to_string(mk.column + 1);
        throw WorkspaceError(where + ": " + msg);
    }

    /// Re-throws library errors from `fn` with the location of `n`.
    template <class F>
    auto at(const YAML::Node& n, F&& fn) const -> decltype(fn())
    {
        try {
            return fn();
        } catch (const WorkspaceError&) {
            throw;
        } catch (const Error& e) {
            fail(n, e.what());
        }
    }

    Extended extended(const YAML::Node& n) const
    {
        if (!n.IsScalar()) fail(n, "expected a number");
        return at(n, [&] { return parse_extended(n.Scalar()); });
    }

    Rational rational(const YAML::Node& n) const
    {
        const Extended e = extended(n);
        if (!e.is_finite()) fail(n, "expected a finite number");
        return e.value();
    }

    Vector vector(const YAML::Node& n, std::size_t m) const
    {
        if (!n.IsSequence()) fail(n, "expected a vector [a, b, ...]");
        if (n.size() != m) {
            fail(n, "vector has " + std::to_string(n.size()) + " entries, expected " + std::to_string(m));
        }
        Vector v;
        for (const auto& x : n) v.push_back(rational(x));
        return v;
    }

    std::vector<Vector> vectors(const YAML::Node& n, std::size_t m) const
    {
        if (!n.IsSequence()) fail(n, "expected a list of vectors");
        std::vector<Vector> out;
        for (const auto& x : n) out.push_back(vector(x, m));
        return out;
    }

    std::string name(const YAML::Node& n) const
    {
        if (!n.IsScalar()) fail(n, "expected a name");
        return n.Scalar();
    }

    const std::string& source() const { return source_; }

private:
    std::string source_;
};

}  // namespace detail

/// Set literal: `empty`, `full`, `cone`, a name from `sets`, or a mapping with
/// `halfspaces: [[w..., b], ...]` and/or `points`, `rays`, `lineality`. The
/// result is cl co(literal + C); with both forms given, their intersection.
inline UpperSet parse_set_node(const detail::YamlReader& rd, const YAML::Node& n, const Cone& c,
                               const std::map<std::string, UpperSet>* named = nullptr)
{
    const std::size_t m = c.dim();
    if (n.IsScalar()) {
        const std::string& s = n.Scalar();
        if (s == "empty") return UpperSet::empty(m);
        if (s == "full") return UpperSet::full(m);
        if (s == "cone") return cone_set(c);
        if (named) {
            auto it = named->find(s);
            if (it != named->end()) return it->second;
        }
        rd.fail(n, "unknown set '" + s + "'");
    }
    if (!n.IsMap()) rd.fail(n, "expected a set literal");
    for (const auto& kv : n) {
        const std::string key = kv.first.as<std::string>();
        if (key != "halfspaces" && key != "points" && key != "rays" && key != "lineality") {
            rd.fail(kv.first, "unknown set key '" + key + "' (expected halfspaces, points, rays, lineality)");
        }
    }
    std::vector<UpperSet> parts;
    if (n["halfspaces"]) {
        const YAML::Node hs = n["halfspaces"];
        if (!hs.IsSequence()) rd.fail(hs, "halfspaces must be a list of [w_1, ..., w_m, b]");
        HRep h;
        for (const auto& row : hs) {
            if (!row.IsSequence() || row.size() != m + 1) {
                rd.fail(row, "halfspace needs " + std::to_string(m + 1) + " entries [w_1, ..., w_m, b]");
            }
            Vector w;
            for (std::size_t i = 0; i < m; ++i) w.push_back(rd.rational(row[i]));
            if (is_zero(w)) rd.fail(row, "halfspace normal must be nonzero");
            h.halfspaces.push_back({w, rd.extended(row[m])});
        }
        parts.push_back(rd.at(n, [&] { return canonicalize(h, c); }));
    }
    if (n["points"] || n["rays"] || n["lineality"]) {
        VRep v;
        if (n["points"]) v.points = rd.vectors(n["points"], m);
        if (n["rays"]) v.rays = rd.vectors(n["rays"], m);
        if (n["lineality"]) {
            for (const auto& l : rd.vectors(n["lineality"], m)) {
                v.rays.push_back(l);
                v.rays.push_back(-l);
            }
        }
        if (v.points.empty()) rd.fail(n, "a generator literal needs at least one point");
        parts.push_back(rd.at(n, [&] { return canonicalize(v, c); }));
    }
    if (parts.empty()) rd.fail(n, "empty set literal");
    if (parts.size() == 1) return parts.front();
    return sup_set(parts, m);
}

/// One-line set literal (as printed by format_set).
inline UpperSet parse_set(const std::string& text, const Cone& c, const std::string& source = "<input>")
{
    detail::YamlReader rd(source);
    YAML::Node n;
    try {
        n = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw WorkspaceError(source + ": " + e.what());
    }
    return parse_set_node(rd, n, c);
}

namespace detail {

inline AtomicMeasure parse_measure(const YamlReader& rd, const YAML::Node& n, const AtomicSpace& sp)
{
    std::vector<Rational> w(sp.size(), Rational(0));
    if (n.IsSequence()) {
        if (n.size() != sp.size()) rd.fail(n, "measure needs one weight per atom");
        for (std::size_t i = 0; i < sp.size(); ++i) w[i] = rd.rational(n[i]);
    } else if (n.IsMap()) {
        for (const auto& kv : n) {
            const std::size_t i = rd.at(kv.first, [&] { return sp.index_of(kv.first.as<std::string>()); });
            w[i] = rd.rational(kv.second);
        }
    } else {
        rd.fail(n, "measure must be a list of weights or a map atom -> weight");
    }
    return rd.at(n, [&] { return AtomicMeasure(w); });
}

inline ScalarFunction parse_scalars(const YamlReader& rd, const YAML::Node& n, const AtomicSpace& sp)
{
    ScalarFunction xi{std::vector<Extended>(sp.size(), Extended(0))};
    if (n.IsSequence()) {
        if (n.size() != sp.size()) rd.fail(n, "scalar function needs one value per atom");
        for (std::size_t i = 0; i < sp.size(); ++i) xi.values[i] = rd.extended(n[i]);
    } else if (n.IsMap()) {
        for (const auto& kv : n) {
            const std::size_t i = rd.at(kv.first, [&] { return sp.index_of(kv.first.as<std::string>()); });
            xi.values[i] = rd.extended(kv.second);
        }
    } else {
        rd.fail(n, "scalar function must be a list or a map atom -> value");
    }
    return xi;
}

inline VectorFunction parse_vectors(const YamlReader& rd, const YAML::Node& n, const AtomicSpace& sp, std::size_t m)
{
    VectorFunction f{std::vector<Vector>(sp.size(), zero_vector(m))};
    if (n.IsSequence()) {
        if (n.size() != sp.size()) rd.fail(n, "vector function needs one vector per atom");
        for (std::size_t i = 0; i < sp.size(); ++i) f.values[i] = rd.vector(n[i], m);
    } else if (n.IsMap()) {
        for (const auto& kv : n) {
            const std::size_t i = rd.at(kv.first, [&] { return sp.index_of(kv.first.as<std::string>()); });
            f.values[i] = rd.vector(kv.second, m);
        }
    } else {
        rd.fail(n, "vector function must be a list or a map atom -> vector");
    }
    return f;
}

}  // namespace detail

/// Function literal: a map atom -> set literal (missing atoms default to C),
/// `{constant: <set>}`, `{plus_cone: <vector function>}` for f + C, or
/// `{halfspace: [w...], offsets: <scalar function>}` for {z : <z, w> >= ξ(x)}.
inline SimpleSetFunction parse_function_node(const detail::YamlReader& rd, const YAML::Node& n, const Workspace& ws)
{
    const Cone& c = ws.cone();
    const AtomicSpace& sp = ws.space();
    if (!n.IsMap()) rd.fail(n, "function must be a map");
    if (n["constant"]) {
        const UpperSet d = parse_set_node(rd, n["constant"], c, &ws.sets);
        if (d.is_empty()) rd.fail(n, "function values must be nonempty");
        return SimpleSetFunction::constant(sp.size(), d);
    }
    if (n["plus_cone"]) {
        const YAML::Node v = n["plus_cone"];
        const VectorFunction f = v.IsScalar() ? rd.at(v, [&] { return ws.vector(v.Scalar()); })
                                              : detail::parse_vectors(rd, v, sp, c.dim());
        return vector_plus_cone(f, c);
    }
    if (n["halfspace"]) {
        const Vector w = rd.vector(n["halfspace"], c.dim());
        const YAML::Node o = n["offsets"];
        if (!o) rd.fail(n, "halfspace function needs `offsets`");
        const ScalarFunction xi = o.IsScalar() ? rd.at(o, [&] { return ws.scalar(o.Scalar()); })
                                               : detail::parse_scalars(rd, o, sp);
        return rd.at(n, [&] { return halfspace_function(w, xi, c); });
    }
    std::vector<UpperSet> values(sp.size(), cone_set(c));
    for (const auto& kv : n) {
        const std::size_t i = rd.at(kv.first, [&] { return sp.index_of(kv.first.as<std::string>()); });
        values[i] = parse_set_node(rd, kv.second, c, &ws.sets);
        if (values[i].is_empty()) rd.fail(kv.second, "function value at atom '" + sp.name(i) + "' is empty");
    }
    return SimpleSetFunction(std::move(values));
}

/// One-line function literal `{x1: <set>, ...}` as written by the external protocol.
inline SimpleSetFunction parse_function(const std::string& text, const Workspace& ws,
                                        const std::string& source = "<input>")
{
    detail::YamlReader rd(source);
    YAML::Node n;
    try {
        n = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw WorkspaceError(source + ": " + e.what());
    }
    return parse_function_node(rd, n, ws);
}

inline Workspace load_workspace_node(const YAML::Node& root, const std::string& source)
{
    detail::YamlReader rd(source);
    Workspace ws;
    ws.path = source;
    if (!root.IsMap()) rd.fail(root, "workspace must be a mapping");
    static const std::vector<std::string> known{"dimension", "cone",   "atoms",     "measures", "scalars",
                                                "vectors",   "sets",   "functions", "chains",   "functional"};
    for (const auto& kv : root) {
        const std::string key = kv.first.as<std::string>();
        if (std::find(known.begin(), known.end(), key) == known.end()) rd.fail(kv.first, "unknown key '" + key + "'");
    }

    if (!root["dimension"]) rd.fail(root, "missing `dimension`");
    const YAML::Node dn = root["dimension"];
    long m = 0;
    try {
        m = dn.as<long>();
    } catch (const YAML::Exception&) {
        rd.fail(dn, "dimension must be a positive integer");
    }
    if (m < 1 || m > 8) rd.fail(dn, "dimension must be between 1 and 8");
    ws.dimension = static_cast<std::size_t>(m);

    const YAML::Node cn = root["cone"];
    if (!cn || !cn.IsMap()) rd.fail(root, "missing `cone` with `generators` and `interior`");
    if (!cn["generators"]) rd.fail(cn, "cone needs `generators`");
    if (!cn["interior"]) rd.fail(cn, "cone needs `interior` (the fixed point c in int C)");
    const auto gens = rd.vectors(cn["generators"], ws.dimension);
    const Vector c = rd.vector(cn["interior"], ws.dimension);
    ws.cone_.emplace(rd.at(cn, [&] { return Cone(gens, c); }));

    const YAML::Node an = root["atoms"];
    if (!an) rd.fail(root, "missing `atoms`");
    if (an.IsScalar()) {
        long n = 0;
        try {
            n = an.as<long>();
        } catch (const YAML::Exception&) {
            rd.fail(an, "atoms must be a count or a list of names");
        }
        if (n < 1) rd.fail(an, "need at least one atom");
        ws.space_.emplace(AtomicSpace::numbered(static_cast<std::size_t>(n)));
    } else {
        std::vector<std::string> names;
        for (const auto& a : an) names.push_back(rd.name(a));
        ws.space_.emplace(rd.at(an, [&] { return AtomicSpace(names); }));
    }

    auto each = [&](const char* key, auto&& fn) {
        const YAML::Node sec = root[key];
        if (!sec) return;
        if (!sec.IsMap()) rd.fail(sec, std::string("`") + key + "` must be a mapping name -> value");
        for (const auto& kv : sec) fn(kv.first.as<std::string>(), kv.second);
    };
    each("measures", [&](const std::string& k, const YAML::Node& v) { ws.measures.emplace(k, detail::parse_measure(rd, v, ws.space())); });
    each("scalars", [&](const std::string& k, const YAML::Node& v) { ws.scalars.emplace(k, detail::parse_scalars(rd, v, ws.space())); });
    each("vectors", [&](const std::string& k, const YAML::Node& v) {
        ws.vectors.emplace(k, detail::parse_vectors(rd, v, ws.space(), ws.dimension));
    });
    each("sets", [&](const std::string& k, const YAML::Node& v) { ws.sets.emplace(k, parse_set_node(rd, v, ws.cone(), &ws.sets)); });
    each("functions", [&](const std::string& k, const YAML::Node& v) { ws.functions.emplace(k, parse_function_node(rd, v, ws)); });
    each("chains", [&](const std::string& k, const YAML::Node& v) {
        if (!v.IsMap()) rd.fail(v, "chain must be a mapping");
        if (v["steps"]) {
            FiniteChain ch;
            for (const auto& s : v["steps"]) ch.steps.push_back(rd.at(s, [&] { return ws.function(rd.name(s)); }));
            if (ch.steps.empty()) rd.fail(v, "chain needs at least one step");
            if (!v["limit"]) rd.fail(v, "chain needs `limit`");
            ch.limit = rd.at(v["limit"], [&] { return ws.function(rd.name(v["limit"])); });
            ws.chains.emplace(k, std::move(ch));
        } else if (v["base"]) {
            ParametricChain ch;
            ch.base = rd.at(v["base"], [&] { return ws.function(rd.name(v["base"])); });
            const YAML::Node d = v["displacement"];
            if (!d) rd.fail(v, "parametric chain needs `displacement`");
            ch.displacement = d.IsScalar() ? rd.at(d, [&] { return ws.scalar(d.Scalar()); })
                                           : detail::parse_scalars(rd, d, ws.space());
            if (!ch.displacement.is_nonnegative_finite()) rd.fail(d, "displacement must be finite and >= 0");
            if (v["schedule"] && v["schedule"].as<std::string>() != "1/n") {
                rd.fail(v["schedule"], "only the schedule 1/n is supported");
            }
            if (v["length"]) {
                const long len = v["length"].as<long>();
                if (len < 1) rd.fail(v["length"], "length must be >= 1");
                ch.length = static_cast<std::size_t>(len);
            }
            ws.parametric_chains.emplace(k, std::move(ch));
        } else {
            rd.fail(v, "chain needs `steps`/`limit` or `base`/`displacement`");
        }
    });
    if (root["functional"]) ws.functional = rd.name(root["functional"]);
    return ws;
}

inline Workspace load_workspace_text(const std::string& text, const std::string& source = "<string>")
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw WorkspaceError(source + ":" + std::to_string(e.mark.line + 1) + ":" +
                             std::to_string(e.mark.column + 1) + ": syntax error: " + e.msg);
    }
    return load_workspace_node(root, source);
}

inline Workspace parse_workspace(const std::string& path)
{
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::BadFile&) {
        throw WorkspaceError(path + ": cannot open file");
    } catch (const YAML::ParserException& e) {
        throw WorkspaceError(path + ":" + std::to_string(e.mark.line + 1) + ":" +
                             std::to_string(e.mark.column + 1) + ": syntax error: " + e.msg);
    }
    return load_workspace_node(root, path);
}

}  // namespace aumann
