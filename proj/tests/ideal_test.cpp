#include <gtest/gtest.h>

#include <thread>

#include "support.hpp"

namespace varinterp {
namespace {

using testing::PolyFactory;
using testing::RandomPolynomials;
using testing::ring_of;

class IdealTest : public ::testing::Test {
protected:
    RingPtr r2 = ring_of({"x", "y"});
    RingPtr r3 = ring_of({"x", "y", "z"});
    PolyFactory P{r2};
    PolyFactory Q{r3};
};

TEST_F(IdealTest, Sum) {
    EXPECT_TRUE(ideal_equal(ideal_sum(P.ideal({"x^2 - y"}), P.ideal({"y"})), P.ideal({"x^2", "y"})));
    auto s = ideal_sum(P.ideal({"x*y"}), P.ideal({"x - y"}));
    EXPECT_EQ(s.generators(), P({"x*y", "x - y"}));
    EXPECT_EQ(s.groebner().elements, P({"x - y", "y^2"}));
    auto j = P.ideal({"x^2 + y", "x*y"});
    EXPECT_TRUE(ideal_equal(ideal_sum(j, Ideal::zero(r2)), j));
    EXPECT_THROW(ideal_sum(j, Q.ideal({"x"})), RingMismatch);
}

TEST_F(IdealTest, Intersection) {
    EXPECT_TRUE(ideal_equal(ideal_intersection(P.ideal({"x"}), P.ideal({"y"})), P.ideal({"x*y"})));
    EXPECT_TRUE(ideal_equal(ideal_intersection(Q.ideal({"z - x"}), Q.ideal({"z - y"})), Q.ideal({"(z - x)*(z - y)"})));
    auto j = P.ideal({"x^2 - y", "y^3"});
    EXPECT_TRUE(ideal_equal(ideal_intersection(j, j), j));
    EXPECT_TRUE(ideal_intersection(j, Ideal::zero(r2)).is_zero());
    EXPECT_TRUE(ideal_equal(ideal_intersection(j, Ideal::unit(r2)), j));
    auto self = ideal_intersection(j, j);
    for (const auto& g : self.generators()) EXPECT_TRUE(same_ring(g.ring(), r2)) << g;
}

TEST_F(IdealTest, RadicalMember) {
    auto j = P.ideal({"x^2", "y"});
    EXPECT_TRUE(radical_member(P("x"), j));
    EXPECT_FALSE(j.member(P("x")));
    EXPECT_FALSE(radical_member(P("1"), j));
    EXPECT_TRUE(radical_member(P("0"), j));
    EXPECT_FALSE(radical_member(P("x - 1"), j));
    // x - y vanishes where (z-x)(z-y), x, y do: only the origin.
    EXPECT_TRUE(radical_member(Q("z"), Q.ideal({"(z - x)*(z - y)", "x", "y"})));
}

TEST_F(IdealTest, ZeroDimensionality) {
    EXPECT_TRUE(is_zero_dimensional(P.ideal({"x^2", "y"})));
    EXPECT_TRUE(is_zero_dimensional(P.ideal({"x*y", "x - y"})));
    EXPECT_FALSE(is_zero_dimensional(P.ideal({"y - x^2"})));
    EXPECT_TRUE(is_zero_dimensional(Ideal::unit(r2)));
    EXPECT_FALSE(is_zero_dimensional(Ideal::zero(r2)));
}

TEST_F(IdealTest, ZeroDimensionalRadical) {
    auto xy = P.ideal({"x", "y"});
    EXPECT_TRUE(ideal_equal(zero_dim_radical(P.ideal({"x^2", "y"})), xy));
    EXPECT_TRUE(ideal_equal(zero_dim_radical(P.ideal({"x*y", "x - y"})), xy));
    EXPECT_TRUE(ideal_equal(zero_dim_radical(xy), xy));
    EXPECT_FALSE(is_radical(P.ideal({"x^2", "y"})));
    EXPECT_FALSE(is_radical(P.ideal({"x*y", "x - y"})));
    EXPECT_TRUE(is_radical(xy));
    EXPECT_FALSE(is_radical(Q.ideal({"(z - x)*(z - y)", "x", "y"})));
    EXPECT_TRUE(is_radical(P.ideal({"x^2 - 1", "y - x"})));
    EXPECT_THROW(zero_dim_radical(P.ideal({"y - x^2"})), PreconditionError);
    EXPECT_EQ(radicality(P.ideal({"y - x^2"})), Radicality::undecided);
    EXPECT_EQ(radicality(P.ideal({"x^2", "y"})), Radicality::not_radical);
}

TEST_F(IdealTest, RadicalOfNonReducedPointClusters) {
    // {(1,1), (-1, 1)} with multiplicity: (x^2-1)^2, (y-1)^3
    auto j = P.ideal({"(x^2 - 1)^2", "(y - 1)^3"});
    auto r = zero_dim_radical(j);
    EXPECT_TRUE(ideal_equal(r, P.ideal({"x^2 - 1", "y - 1"})));
    EXPECT_TRUE(is_radical(r));
}

TEST_F(IdealTest, Equality) {
    EXPECT_TRUE(ideal_equal(P.ideal({"x^2 - y", "y"}), P.ideal({"x^2", "y"})));
    EXPECT_TRUE(ideal_equal(ideal_sum(Q.ideal({"(z - x)*(z - y)"}), Q.ideal({"x", "y"})), Q.ideal({"x", "y", "z^2"})));
    EXPECT_FALSE(ideal_equal(P.ideal({"x"}), P.ideal({"x^2"})));
    EXPECT_THROW(ideal_equal(P.ideal({"x"}), Q.ideal({"x"})), RingMismatch);
}

TEST_F(IdealTest, CacheIsStableAcrossThreads) {
    auto j = Q.ideal({"x^2 + y*z - 1", "x*y - z", "y^2 - x + 2*z"});
    std::vector<const GroebnerBasis*> seen(4);
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < seen.size(); ++k) workers.emplace_back([&, k] { seen[k] = &j.groebner(); });
    for (auto& w : workers) w.join();
    for (auto* gb : seen) EXPECT_EQ(gb, seen.front());
    auto copy = j;
    EXPECT_EQ(&copy.groebner(), seen.front());
}

TEST(IdealProperties, IntersectionAgreesWithMembership) {
    RandomPolynomials gen(42);
    for (int trial = 0; trial < 15; ++trial) {
        auto ring = ring_of({"x", "y"});
        Ideal a(ring, {gen.sparse(ring, 2, 3), gen.sparse(ring, 2, 2)});
        Ideal b(ring, {gen.sparse(ring, 2, 3)});
        auto both = ideal_intersection(a, b);
        for (const auto& g : both.generators()) {
            EXPECT_TRUE(a.member(g));
            EXPECT_TRUE(b.member(g));
        }
        for (int k = 0; k < 8; ++k) {
            Polynomial p = k % 2 ? gen.sparse(ring, 4, 4) : a.generators()[0] * b.generators()[0] * gen.sparse(ring, 1, 2);
            EXPECT_EQ(both.contains(p), a.contains(p) && b.contains(p)) << p;
        }
    }
}

TEST(IdealProperties, MembershipImpliesRadicalMembership) {
    RandomPolynomials gen(8);
    auto ring = ring_of({"x", "y"});
    for (int trial = 0; trial < 15; ++trial) {
        Ideal j(ring, {gen.sparse(ring, 2, 3), gen.sparse(ring, 3, 3)});
        auto p = j.generators()[0] * gen.sparse(ring, 2, 2) + j.generators()[1];
        ASSERT_TRUE(j.contains(p));
        EXPECT_TRUE(radical_member(p, j));
    }
}

TEST(IdealProperties, ZeroDimensionalRadicalIsIdempotent) {
    RandomPolynomials gen(77);
    auto ring = ring_of({"x", "y"});
    int checked = 0;
    for (int trial = 0; trial < 20 && checked < 8; ++trial) {
        auto a = gen.sparse(ring, 1, 3);
        auto b = gen.sparse(ring, 1, 3);
        Ideal j(ring, {a * a, b * b * b, a * b});
        if (!is_zero_dimensional(j) || j.is_unit()) continue;
        auto r = zero_dim_radical(j);
        EXPECT_TRUE(ideal_equal(zero_dim_radical(r), r));
        EXPECT_TRUE(is_radical(r));
        for (std::size_t v = 0; v < 2; ++v) {
            auto m = minimal_polynomial(r, v);
            EXPECT_EQ(squarefree_part(m, v), m);
        }
        ++checked;
    }
    EXPECT_GT(checked, 3);
}

}  // namespace
}  // namespace varinterp
