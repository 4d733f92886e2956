// Canonical one-line text forms of sets and functions. These are valid
// flow-style YAML, so the workspace parser reads back everything printed here.
#pragma once

#include <string>
#include <vector>

#include "aumann/measure_space.hpp"
#include "aumann/rational.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

/// `empty`, `full`, or `{halfspaces: [[w_1, ..., w_m, b], ...]}`.
inline std::string format_set(const UpperSet& d)
{
    if (d.is_empty()) return "empty";
    if (d.is_full()) return "full";
    std::string s = "{halfspaces: [";
    for (std::size_t i = 0; i < d.halfspaces().size(); ++i) {
        const auto& h = d.halfspaces()[i];
        if (i) s += ", ";
        Vector row = h.normal;
        row.push_back(h.offset.value());
        s += to_string(row);
    }
    return s + "]}";
}

inline std::string format_vrep(const UpperSet& d)
{
    if (!d.is_proper()) return format_set(d);
    auto list = [](const std::vector<Vector>& vs) {
        std::string s = "[";
        for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
        return s + "]";
    };
    std::string s = "{points: " + list(d.points()) + ", rays: " + list(d.rays());
    if (!d.lineality().empty()) s += ", lineality: " + list(d.lineality());
    return s + "}";
}

/// `{x1: <set>, x2: <set>}` keyed by atom name.
inline std::string format_function(const SimpleSetFunction& f, const AtomicSpace& space)
{
    require_same_dim(f.size(), space.size(), "format_function");
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ", ";
        s += space.name(i) + ": " + format_set(f[i]);
    }
    return s + "}";
}

inline std::string format_scalars(const ScalarFunction& xi)
{
    std::string s = "[";
    for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? ", " : "") + to_string(xi[i]);
    return s + "]";
}

inline std::string format_weights(const AtomicMeasure& mu)
{
    return to_string(Vector(mu.weights()));
}

}  // namespace aumann
