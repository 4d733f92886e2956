#include <gtest/gtest.h>

#include "aumann/measure_space.hpp"
#include "aumann/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aumann;
using testing_helpers::pts;
using testing_helpers::q;
using testing_helpers::vec;

namespace {
const Cone& R2() { static const Cone c = orthant(2); return c; }
}

TEST(Measure, Validation)
{
    EXPECT_THROW(AtomicMeasure({q(-1), q(1)}), ValidationError);
    const AtomicMeasure mu({q(1), q(2), q(1, 3)});
    EXPECT_EQ(mu.total(), q(10, 3));
    EXPECT_EQ(mu.of({0, 2}), q(4, 3));
    EXPECT_THROW(mu.of({3}), ValidationError);
}

TEST(Space, Names)
{
    EXPECT_THROW(AtomicSpace({"a", "a"}), ValidationError);
    EXPECT_THROW(AtomicSpace(std::vector<std::string>{}), ValidationError);
    const AtomicSpace s = AtomicSpace::numbered(3);
    EXPECT_EQ(s.index_of("x2"), 1u);
    EXPECT_THROW(s.index_of("y"), ValidationError);
}

TEST(ScalarIntegral, ExtendedConventions)
{
    const AtomicMeasure mu({q(0), q(2)});
    ScalarFunction xi{{Extended::neg_inf(), Extended(q(3))}};
    EXPECT_EQ(integrate(xi, mu), Extended(q(6)));  // 0 * (-inf) = 0
    xi.values[1] = Extended::neg_inf();
    EXPECT_TRUE(integrate(xi, mu).is_neg_inf());
}

TEST(IndicatorModify, Examples)
{
    const SimpleSetFunction f({pts({vec({1, 0})}, R2()), pts({vec({0, 1})}, R2())});
    EXPECT_EQ(indicator_modify(f, {0, 1}, R2()), f);
    EXPECT_EQ(indicator_modify(f, {}, R2()), SimpleSetFunction::constant(2, cone_set(R2())));
    const auto g = indicator_modify(f, {0}, R2());
    EXPECT_EQ(g[0], f[0]);
    EXPECT_EQ(g[1], cone_set(R2()));
    EXPECT_THROW(indicator_modify(f, {2}, R2()), ValidationError);
}

TEST(Preimage, Examples)
{
    const auto cc = SimpleSetFunction::constant(3, cone_set(R2()));
    EXPECT_EQ(preimage(cc, point_minus_cone(vec({1, 1}), R2())), (AtomSet{0, 1, 2}));
    const SimpleSetFunction f({pts({vec({1, 0})}, R2())});
    EXPECT_TRUE(preimage(f, point_minus_cone(vec({0, 0}), R2())).empty());
    EXPECT_EQ(preimage(f, whole_space(2)), AtomSet{0});

    const SimpleSetFunction h({homogeneous_halfspace(vec({1, 1}), R2())});
    EXPECT_TRUE(preimage_identity_check(h, vec({2, -1}), R2()));
    EXPECT_EQ(preimage(h, point_minus_cone(vec({2, -1}), R2())), AtomSet{0});
    const SimpleSetFunction p({pts({vec({1, 1})}, R2())});
    EXPECT_TRUE(preimage_identity_check(p, vec({0, 0}), R2()));
}

TEST(Preimage, IdentityOnRandomPairs)
{
    Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        const Cone c = t % 50 == 0 ? random_cone(rng, 2 + t % 3) : orthant(2 + t % 3);
        const auto f = random_function(rng, c, 1 + rng.index(4));
        const Vector y = rng.rational_vector(c.dim(), -4, 4, 2);
        ASSERT_TRUE(preimage_identity_check(f, y, c));
        // the right-hand side agrees with the brute-force oracle too
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_EQ(member(f[i], y), oracle::member(oracle::from(f[i]), y, c.dim()));
        }
    }
}

TEST(Selection, Examples)
{
    const auto f = SimpleSetFunction::constant(2, pts({vec({1, 2})}, R2()));
    EXPECT_EQ(pick_selection(f).values, (std::vector<Vector>{vec({1, 2}), vec({1, 2})}));
    const auto h = SimpleSetFunction::constant(1, homogeneous_halfspace(vec({1, 1}), R2()));
    EXPECT_EQ(pick_selection(h).values.front(), vec({0, 0}));
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_function(rng, R2(), 4);
        const auto s = pick_selection(g);
        for (std::size_t i = 0; i < g.size(); ++i) EXPECT_TRUE(member(g[i], s[i]));
    }
}
