#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "oracles.hpp"
#include "support.hpp"

namespace varinterp {
namespace {

using testing::PolyFactory;
using testing::RandomPolynomials;
using testing::ring_of;

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

class GroebnerTest : public ::testing::Test {
protected:
    RingPtr r2 = ring_of({"x", "y"});
    RingPtr r3 = ring_of({"x", "y", "z"});
    PolyFactory P{r2};
    PolyFactory Q{r3};
};

TEST_F(GroebnerTest, DivisionExamples) {
    auto divisors = P({"x^2", "y"});
    auto d = multivariate_divide(P("x^2 + x + y"), divisors, kGrevlex);
    EXPECT_EQ(d.quotients, P({"1", "1"}));
    EXPECT_EQ(d.remainder, P("x"));
    EXPECT_EQ(d.quotients[0] * divisors[0] + d.quotients[1] * divisors[1] + d.remainder, P("x^2 + x + y"));

    d = multivariate_divide(P("x"), divisors, kGrevlex);
    EXPECT_EQ(d.quotients, P({"0", "0"}));
    EXPECT_EQ(d.remainder, P("x"));

    auto self = P({"x^2 - y"});
    d = multivariate_divide(P("x^2 - y"), self, kGrevlex);
    EXPECT_EQ(d.quotients, P({"1"}));
    EXPECT_TRUE(d.remainder.is_zero());

    auto with_zero = P({"x", "0"});
    EXPECT_THROW(multivariate_divide(P("x"), with_zero, kGrevlex), PreconditionError);
}

TEST_F(GroebnerTest, ReducedBasisExamples) {
    EXPECT_EQ(buchberger_reduced(P({"x^2 - y", "y"})).elements, P({"y", "x^2"}));
    EXPECT_EQ(buchberger_reduced(P({"x*y", "x - y"})).elements, P({"x - y", "y^2"}));
    EXPECT_EQ(buchberger_reduced(P({"x"}), MonomialOrder::lex()).elements, P({"x"}));
    EXPECT_EQ(buchberger_reduced(P({"3*x"})).elements, P({"x"}));
    EXPECT_THROW(buchberger_reduced(P({"0", "0"})), PreconditionError);
    EXPECT_THROW(buchberger_reduced(std::vector<Polynomial>{}), PreconditionError);
}

TEST_F(GroebnerTest, ExpressionsReproduceElements) {
    auto gens = Q({"x^2 + y*z - 1", "x*y - z", "y^2 - x + 2*z"});
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1, 3)}) {
        auto gb = buchberger_reduced(gens, order);
        ASSERT_TRUE(gb.tracks_cofactors());
        for (std::size_t k = 0; k < gb.elements.size(); ++k) {
            Certificate c{gb.elements[k], gens, gb.expressions[k]};
            EXPECT_TRUE(c.verify()) << order.name() << " element " << gb.elements[k];
        }
    }
}

TEST_F(GroebnerTest, NormalFormExamples) {
    auto gb = buchberger_reduced(P({"x^2", "y"}));
    EXPECT_EQ(normal_form(P("x"), gb), P("x"));
    EXPECT_TRUE(normal_form(P("x^2"), gb).is_zero());
    auto gb2 = buchberger_reduced(P({"x*y", "x - y"}));
    EXPECT_TRUE(normal_form(P("x^2"), gb2).is_zero());
    EXPECT_THROW(normal_form(P("x"), gb, MonomialOrder::lex()), PreconditionError);
}

TEST_F(GroebnerTest, IdealMemberExamples) {
    auto gens = Q({"z - x", "z - y"});
    auto cert = ideal_member(Q("x - y"), gens);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(cert->verify());
    EXPECT_EQ(cert->cofactors, Q({"-1", "1"}));

    EXPECT_FALSE(ideal_member(P("x"), P({"x^2", "y"})));

    auto zero = ideal_member(P("0"), P({"x^2", "y"}));
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->cofactors, P({"0", "0"}));

    auto from_zero_ideal = ideal_member(P("x"), P({"0"}));
    EXPECT_FALSE(from_zero_ideal);
}

TEST_F(GroebnerTest, ExpressOneExamples) {
    auto one = express_one(P({"x", "x - 1"}));
    ASSERT_TRUE(one);
    EXPECT_EQ(one->cofactors, P({"1", "-1"}));
    EXPECT_TRUE(one->verify());

    auto three = express_one(P({"x", "y", "x + y - 1"}));
    ASSERT_TRUE(three);
    EXPECT_TRUE(three->verify());
    EXPECT_EQ(three->expand(), P("1"));

    EXPECT_FALSE(express_one(P({"x^2", "y"})));
}

// Division identity, irreducible remainder, degree bound under grevlex.
TEST(GroebnerProperties, DivisionInvariants) {
    RandomPolynomials gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto ring = ring_of({"x", "y", "z"});
        auto p = gen.sparse(ring, 5, 6);
        std::vector<Polynomial> divisors;
        for (int k = 0; k < gen.integer(1, 3); ++k) divisors.push_back(gen.sparse(ring, 3, 3));
        auto d = multivariate_divide(p, divisors, kGrevlex);
        Polynomial sum = d.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            sum += d.quotients[i] * divisors[i];
            if (!d.quotients[i].is_zero()) {
                EXPECT_LE((d.quotients[i] * divisors[i]).total_degree(), p.total_degree());
            }
        }
        EXPECT_EQ(sum, p);
        for (const auto& [m, c] : d.remainder.terms())
            for (const auto& g : divisors) EXPECT_FALSE(g.leading_monomial(kGrevlex).divides(m));
    }
}

bool is_groebner_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            const auto& a = gb.elements[i];
            const auto& b = gb.elements[j];
            Monomial l = a.leading_monomial(gb.order).lcm(b.leading_monomial(gb.order));
            Polynomial s(a.ring());
            s.add_scaled(a, Scalar(1) / a.leading_coefficient(gb.order), l.quotient(a.leading_monomial(gb.order)));
            s.add_scaled(b, Scalar(-1) / b.leading_coefficient(gb.order), l.quotient(b.leading_monomial(gb.order)));
            if (!multivariate_divide(s, gb.elements, gb.order).remainder.is_zero()) return false;
        }
    }
    return true;
}

bool is_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        if (!gb.elements[i].leading_coefficient(gb.order).is_one()) return false;
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            const auto& lm = gb.elements[j].leading_monomial(gb.order);
            for (const auto& [m, c] : gb.elements[i].terms())
                if (lm.divides(m)) return false;
        }
    }
    return true;
}

TEST(GroebnerProperties, BasesAreReducedAndCanonical) {
    RandomPolynomials gen(2024);
    for (int trial = 0; trial < 30; ++trial) {
        auto ring = ring_of({"x", "y", "z"});
        std::vector<Polynomial> gens;
        int n = gen.integer(1, 3);
        for (int k = 0; k < n; ++k) gens.push_back(gen.sparse(ring, static_cast<unsigned>(gen.integer(1, 3)), 3));
        auto order = trial % 3 == 0 ? MonomialOrder::lex() : kGrevlex;
        auto gb = buchberger_reduced(gens, order);
        EXPECT_TRUE(is_groebner_basis(gb));
        EXPECT_TRUE(is_reduced(gb));
        for (std::size_t k = 0; k < gb.elements.size(); ++k)
            EXPECT_TRUE((Certificate{gb.elements[k], gens, gb.expressions[k]}.verify()));

        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
        shuffled.push_back(gens.front() * gen.sparse(ring, 1, 2));
        EXPECT_EQ(buchberger_reduced(shuffled, order).elements, gb.elements);
        EXPECT_EQ(buchberger_reduced(gens, order).elements, gb.elements);
    }
}

TEST(GroebnerProperties, NormalFormIsLinear) {
    RandomPolynomials gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto ring = ring_of({"x", "y"});
        auto gb = buchberger_reduced(std::vector<Polynomial>{gen.sparse(ring, 3, 3), gen.sparse(ring, 2, 3)});
        auto p = gen.sparse(ring, 4, 4);
        auto q = gen.sparse(ring, 4, 4);
        EXPECT_EQ(normal_form(p + q, gb), normal_form(normal_form(p, gb) + normal_form(q, gb), gb));
    }
}

// Membership agrees with the Macaulay-matrix oracle at cofactor degree
// 2*deg p + max deg g, and every certificate expands to its target.
TEST(GroebnerProperties, MembershipMatchesMacaulayOracle) {
    RandomPolynomials gen(314159);
    int instances = 0, members = 0;
    for (int trial = 0; trial < 110; ++trial) {
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(static_cast<std::size_t>(gen.integer(1, 3)));
        auto ring = ring_of(names);
        std::vector<Polynomial> gens;
        int n = gen.integer(1, 3);
        unsigned max_deg = 0;
        for (int k = 0; k < n; ++k) {
            gens.push_back(gen.sparse(ring, static_cast<unsigned>(gen.integer(1, 3)), 3));
            max_deg = std::max(max_deg, gens.back().total_degree());
        }
        Polynomial p(ring);
        if (trial % 2 == 0) {
            for (const auto& g : gens) {
                unsigned room = g.total_degree() >= 4 ? 0 : 4 - g.total_degree();
                p += gen.sparse(ring, room, 2) * g;
            }
        } else {
            p = gen.sparse(ring, 4, 4);
        }
        auto cert = ideal_member(p, gens);
        unsigned p_deg = p.is_zero() ? 0 : p.total_degree();
        bool oracle = testing::macaulay_member(p, gens, 2 * p_deg + max_deg);
        EXPECT_EQ(cert.has_value(), oracle) << "p = " << p;
        if (cert) {
            EXPECT_TRUE(cert->verify());
            ++members;
        }
        ++instances;
    }
    EXPECT_GE(instances, 100);
    EXPECT_GT(members, 20);
}

}  // namespace
}  // namespace varinterp
