#pragma once

#include <initializer_list>
#include <ostream>
#include <string>

#include "aumann/text.hpp"
#include "aumann/upper_set.hpp"

namespace aumann {

inline void PrintTo(const UpperSet& d, std::ostream* os) { *os << format_set(d); }

}  // namespace aumann

namespace testing_helpers {

inline aumann::Vector vec(std::initializer_list<long> xs)
{
    aumann::Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline aumann::Rational q(long p, long d = 1) { return aumann::Rational(p, d); }

inline aumann::UpperSet hs(std::initializer_list<std::initializer_list<long>> rows, const aumann::Cone& c)
{
    aumann::HRep h;
    for (const auto& r : rows) {
        aumann::Vector n(r.begin(), r.end() - 1);
        h.halfspaces.push_back({n, aumann::Extended(aumann::Rational(*(r.end() - 1)))});
    }
    return aumann::canonicalize(h, c);
}

inline aumann::UpperSet pts(std::initializer_list<aumann::Vector> ps, const aumann::Cone& c)
{
    aumann::VRep v;
    v.points.assign(ps.begin(), ps.end());
    return aumann::canonicalize(v, c);
}

}  // namespace testing_helpers
