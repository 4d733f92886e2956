#include <gtest/gtest.h>

#include "aumann/integral.hpp"
#include "aumann/random.hpp"
#include "aumann/text.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aumann;
using testing_helpers::hs;
using testing_helpers::pts;
using testing_helpers::q;
using testing_helpers::vec;

namespace {
const Cone& R2() { static const Cone c = orthant(2); return c; }
}

TEST(Integral, OfConeIsCone)
{
    const auto f = SimpleSetFunction::constant(3, cone_set(R2()));
    EXPECT_EQ(aumann_integral(f, AtomicMeasure({q(1), q(0), q(5, 2)}), R2()).value, cone_set(R2()));
}

TEST(Integral, HalfspaceValued)
{
    const ScalarFunction xi{{Extended(q(1)), Extended(q(3))}};
    const auto f = halfspace_function(vec({1, 1}), xi, R2());
    const IntegralResult r = aumann_integral(f, AtomicMeasure({q(1), q(1)}), R2());
    EXPECT_EQ(format_set(r.value), "{halfspaces: [[1, 1, 4]]}");
    EXPECT_TRUE(r.certified());
}

TEST(Integral, PointPlusCone)
{
    const VectorFunction f{{vec({1, 0}), vec({0, 1})}};
    const IntegralResult r = aumann_integral(vector_plus_cone(f, R2()), AtomicMeasure({q(1), q(2)}), R2());
    EXPECT_EQ(r.value, pts({vec({1, 2})}, R2()));
    ASSERT_EQ(r.certificate.size(), 2u);
    EXPECT_EQ(r.certificate[0].normal, vec({0, 1}));
    EXPECT_EQ(r.certificate[0].lhs, Extended(2));
    EXPECT_EQ(r.certificate[1].rhs, Extended(1));
}

TEST(Integral, RejectsZeroMeasureAndMismatch)
{
    const auto f = SimpleSetFunction::constant(2, cone_set(R2()));
    EXPECT_THROW(aumann_integral(f, AtomicMeasure({q(0), q(0)}), R2()), ValidationError);
    EXPECT_THROW(aumann_integral(f, AtomicMeasure({q(1)}), R2()), Error);
}

TEST(IntegralOver, Examples)
{
    const SimpleSetFunction f({pts({vec({1, 0})}, R2()), pts({vec({0, 1})}, R2())});
    const AtomicMeasure mu({q(1), q(1)});
    EXPECT_EQ(integral_over(f, mu, {0}, R2()).value, pts({vec({1, 0})}, R2()));
    EXPECT_EQ(integral_over(f, mu, {0, 1}, R2()).value, aumann_integral(f, mu, R2()).value);
    EXPECT_EQ(integral_over(f, AtomicMeasure({q(0), q(1)}), {0}, R2()).value, cone_set(R2()));
}

TEST(Integral, FullSpaceValue)
{
    const SimpleSetFunction f({UpperSet::full(2), pts({vec({0, 1})}, R2())});
    EXPECT_TRUE(aumann_integral(f, AtomicMeasure({q(1), q(1)}), R2()).value.is_full());
    EXPECT_EQ(aumann_integral(f, AtomicMeasure({q(0), q(1)}), R2()).value, pts({vec({0, 1})}, R2()));
}

class IntegralLaws : public ::testing::TestWithParam<int> {};

TEST_P(IntegralLaws, AgainstOracle)
{
    Rng rng(200 + GetParam());
    const std::size_t m = 2 + GetParam() % 2;
    const Cone c = GetParam() % 3 == 0 ? orthant(m) : random_cone(rng, m);
    for (int t = 0; t < 8; ++t) {
        const std::size_t n = 1 + rng.index(3);
        const auto f = random_function(rng, c, n), g = random_function(rng, c, n);
        const auto mu = random_measure(rng, n);
        const IntegralResult r = aumann_integral(f, mu, c);
        EXPECT_TRUE(r.certified());
        EXPECT_TRUE(oracle::equal(oracle::from(r.value), oracle::integral(f, mu, c.generators()), m))
            << format_set(r.value);
        EXPECT_EQ(canonicalize(r.value, c), r.value);

        EXPECT_EQ(aumann_integral(oplus(f, g), mu, c).value, oplus(r.value, aumann_integral(g, mu, c).value));
        for (const Rational lambda : {q(0), q(1, 3), q(2)}) {
            EXPECT_EQ(aumann_integral(scale(lambda, f, c), mu, c).value, scale(lambda, r.value, c));
        }
        for (int k = 0; k < 5; ++k) {
            const Vector w = random_dual_vector(rng, c);
            EXPECT_EQ(support(r.value, w), integrated_support(f, mu, w));
        }

        // integrals over A and its complement add up when every value contains 0
        std::vector<UpperSet> neg;
        for (std::size_t i = 0; i < n; ++i) neg.push_back(random_negative_set(rng, c));
        const SimpleSetFunction h(neg);
        AtomSet a;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.coin()) a.insert(i);
        }
        EXPECT_EQ(oplus(integral_over(h, mu, a, c).value, integral_over(h, mu, complement(a, n), c).value),
                  aumann_integral(h, mu, c).value);

        // supporting-halfspace interchange at the facet normals
        const UpperSet v = aumann_integral(f, mu, c).value;
        if (v.is_proper()) {
            std::vector<UpperSet> parts;
            std::vector<Vector> ws = c.dual_generators();
            for (const auto& d : f.values())
                for (const auto& hh : d.halfspaces()) ws.push_back(hh.normal);
            // in m >= 3 a facet of the sum can come from edges of two summands
            for (const auto& hh : v.halfspaces()) ws.push_back(hh.normal);
            for (const auto& w : ws) parts.push_back(aumann_integral(supporting_halfspaces(f, w, c), mu, c).value);
            EXPECT_EQ(sup_set(parts, m), v);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IntegralLaws, ::testing::Range(0, 8));

TEST(Oracle, Examples)
{
    const VectorFunction f{{vec({1, 0}), vec({0, 1})}};
    const OracleReport r = selection_oracle(vector_plus_cone(f, R2()), AtomicMeasure({q(1), q(2)}), R2(), 200, 1);
    EXPECT_TRUE(r.passed());
    ASSERT_EQ(r.decompositions.size(), 1u);
    EXPECT_EQ(r.decompositions[0].point, vec({1, 2}));
    EXPECT_EQ(r.decompositions[0].selection.values, (std::vector<Vector>{vec({1, 0}), vec({0, 1})}));

    const auto cc = SimpleSetFunction::constant(2, cone_set(R2()));
    const OracleReport rc = selection_oracle(cc, AtomicMeasure({q(3), q(1, 2)}), R2(), 50, 2);
    EXPECT_TRUE(rc.passed());
    ASSERT_EQ(rc.decompositions.size(), 1u);
    EXPECT_EQ(rc.decompositions[0].selection.values, (std::vector<Vector>{vec({0, 0}), vec({0, 0})}));
    EXPECT_THROW(selection_oracle(cc, AtomicMeasure({q(1), q(1)}), R2(), 0, 1), ValidationError);
}

TEST(Oracle, WholeSpaceFromProperValues)
{
    // two halfspaces with independent normals sum to R^2 although neither value is R^2
    const SimpleSetFunction f({homogeneous_halfspace(vec({1, 0}), R2()), homogeneous_halfspace(vec({0, 1}), R2())});
    const OracleReport r = selection_oracle(f, AtomicMeasure({q(1), q(2)}), R2(), 100, 3);
    EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
    ASSERT_EQ(r.decompositions.size(), 1u);
    EXPECT_EQ(r.decompositions[0].point, vec({0, 0}));
}

TEST(Oracle, RandomInstances)
{
    Rng rng(31);
    for (int t = 0; t < 15; ++t) {
        const Cone c = t % 2 ? orthant(2) : random_cone(rng, 2 + t % 3);
        const auto f = random_function(rng, c, 2 + rng.index(2));
        const OracleReport r = selection_oracle(f, random_measure(rng, f.size()), c, 300, t);
        EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
    }
}

TEST(Chains, FiniteAndParametric)
{
    const Cone& c = R2();
    const AtomicMeasure mu({q(1)});
    const auto cc = SimpleSetFunction::constant(1, cone_set(c));
    const ParametricChain ch{cc, ScalarFunction::constant(1, 1), 64};
    EXPECT_TRUE(monotone_limit_check(ch, mu, c, constant_epsilon(1, c)).passed());
    // a schedule that is too tight is reported
    EXPECT_FALSE(monotone_limit_check(ch, mu, c, constant_epsilon(q(1, 2), c)).passed());

    const auto f3 = SimpleSetFunction::constant(1, pts({vec({1, 1})}, c));
    const auto f2 = SimpleSetFunction::constant(1, pts({vec({2, 2})}, c));
    EXPECT_TRUE(monotone_limit_check(FiniteChain{{f2, f3, f3}, f3}, mu, c).passed());
    EXPECT_TRUE(monotone_limit_check(FiniteChain{{f3, f3}, f3}, mu, c).passed());

    const ChainReport bad = monotone_limit_check(FiniteChain{{f3, f2}, f2}, mu, c);
    EXPECT_FALSE(bad.precondition_ok);
    EXPECT_EQ(bad.first_violation, 1u);
    EXPECT_FALSE(monotone_limit_check(FiniteChain{{f2, f3}, cc}, mu, c).passed());
}
