#include <gtest/gtest.h>

#include "aumann/cone.hpp"
#include "aumann/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aumann;
using testing_helpers::q;
using testing_helpers::vec;

namespace {

// Brute force: w generates an extreme ray of C+ iff it is nonnegative on all
// generators and orthogonal to m-1 linearly independent ones.
std::vector<Vector> brute_dual(const std::vector<Vector>& gens, std::size_t m)
{
    oracle::Gens g{{zero_vector(m)}, gens, false};
    std::vector<Vector> out;
    for (const auto& in : oracle::inequalities(g, m)) out.push_back(primitive(in.normal));
    sort_unique(out);
    return out;
}

}  // namespace

TEST(Cone, OrthantIsSelfDual)
{
    const Cone c = orthant(2);
    EXPECT_EQ(c.dual_generators(), (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
    const Cone c3 = orthant(3);
    EXPECT_EQ(c3.dual_generators().size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(c3.dual_contains(unit_vector(3, i)));
}

TEST(Cone, DualOfSkewedCone)
{
    const Cone c({vec({1, 0}), vec({1, 1})}, vec({2, 1}));
    EXPECT_EQ(c.dual_generators(), (std::vector<Vector>{vec({0, 1}), vec({1, -1})}));
    EXPECT_EQ(c.dual_generators(), brute_dual(c.generators(), 2));
}

TEST(Cone, Contains)
{
    const Cone c = orthant(2);
    EXPECT_TRUE(cone_contains(c, vec({1, 1})));
    EXPECT_FALSE(cone_contains(c, vec({-1, 0})));
    const Cone s({vec({1, 0}), vec({1, 1})}, vec({2, 1}));
    EXPECT_TRUE(cone_contains(s, vec({2, 1})));
    EXPECT_FALSE(cone_contains(s, vec({0, 1})));
    EXPECT_THROW(cone_contains(s, vec({1, 1, 1})), DimensionError);
}

TEST(Cone, BasePolytope)
{
    EXPECT_EQ(orthant(2).base_polytope(), (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
    const Cone c2(std::vector<Vector>{vec({1, 0}), vec({0, 1})}, vec({2, 1}));
    EXPECT_EQ(c2.base_polytope(), (std::vector<Vector>{vec({0, 1}), Vector{q(1, 2), q(0)}}));
    const Cone s({vec({1, 0}), vec({1, 1})}, vec({2, 1}));
    EXPECT_EQ(s.base_polytope(), (std::vector<Vector>{vec({0, 1}), vec({1, -1})}));
}

TEST(Cone, RejectsBadInput)
{
    EXPECT_THROW(Cone({vec({1, 0}), vec({0, 1})}, vec({1, 0})), ValidationError);   // c on the boundary
    EXPECT_THROW(Cone({vec({1, 0}), vec({-1, 0})}, vec({1, 0})), ValidationError);  // no interior
    EXPECT_THROW(Cone({vec({1, 0}), vec({0, 1, 0})}, vec({1, 1})), DimensionError);
    EXPECT_THROW(Cone({vec({1, 0}), vec({0, 1})}, vec({1, 1, 1})), DimensionError);
}

TEST(ConeProperty, DoubleDualityAndBrute)
{
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t m = 2 + t % 3;
        const Cone c = random_cone(rng, m);
        EXPECT_EQ(c.dual_generators(), brute_dual(c.generators(), m));
        for (const auto& v : c.base_polytope()) EXPECT_EQ(dot(c.interior_point(), v), 1);
        // dual_cone twice generates C again (C+ needs an interior, so C pointed).
        if (!c.lineality().empty()) continue;
        const auto back = dual_cone(dual_cone(c.generators()));
        for (const auto& g : back) EXPECT_TRUE(c.contains(g));
        oracle::Gens bg{{zero_vector(m)}, back, false}, cg{{zero_vector(m)}, c.generators(), false};
        EXPECT_TRUE(oracle::equal(bg, cg, m));
    }
}
