#include <gtest/gtest.h>

#include "support.hpp"

namespace varinterp {
namespace {

using testing::PolyFactory;
using testing::RandomPolynomials;
using testing::ring_of;

class PolynomialTest : public ::testing::Test {
protected:
    RingPtr r2 = ring_of({"x", "y"});
    RingPtr c2 = ring_of({"x", "y"}, Field::gaussian_rational);
    PolyFactory P{r2};
    PolyFactory C{c2};
};

TEST_F(PolynomialTest, LeadingForm) {
    EXPECT_EQ(leading_form(P("x^2 - y")), P("x^2"));
    EXPECT_EQ(leading_form(P("x^2 + y^2 - 1")), P("x^2 + y^2"));
    EXPECT_EQ(leading_form(P("3*x + 2*y + 1")), P("3*x + 2*y"));
    EXPECT_TRUE(leading_form(P("x^3 - x*y + 7")).is_homogeneous());
    EXPECT_THROW(leading_form(P("0")), PreconditionError);
}

TEST_F(PolynomialTest, ApplyDiffOp) {
    EXPECT_EQ(apply_diff_op(P("x^2"), P("x^4")), P("12*x^2"));
    EXPECT_EQ(apply_diff_op(P("x^2 + y^2"), P("x^2 - y^2")), P("0"));
    EXPECT_EQ(apply_diff_op(P("x"), P("5")), P("0"));
    EXPECT_EQ(apply_diff_op(P("x*y"), P("x^2*y^3")), P("6*x*y^2"));
    EXPECT_EQ(apply_diff_op(P("1"), P("x + y")), P("x + y"));
    EXPECT_THROW(apply_diff_op(P("x"), parse_polynomial(ring_of({"x"}), "x")), RingMismatch);
}

TEST_F(PolynomialTest, FischerProductOfMonomials) {
    EXPECT_EQ(fischer_product(P("x^2"), P("x^2")), Scalar(2));
    EXPECT_EQ(fischer_product(P("x*y"), P("x^2")), Scalar(0));
    EXPECT_EQ(fischer_product(P("x^2*y"), P("x^2*y")), Scalar(2));
    EXPECT_EQ(fischer_product(P("x^3"), P("x^3")), Scalar(6));
    EXPECT_THROW(fischer_product(P("x^2 + 1"), P("x^2")), PreconditionError);
    EXPECT_THROW(fischer_product(P("x^2"), P("x^3")), PreconditionError);
}

TEST_F(PolynomialTest, FischerProductIsConjugateLinearInSecondArgument) {
    // <x, i*x> = 1! * 1 * conj(i) = -i
    EXPECT_EQ(fischer_product(C("x"), C("i*x")), Scalar(Rational(0), Rational(-1)));
    EXPECT_EQ(fischer_product(C("i*x"), C("x")), Scalar::imaginary_unit());
}

TEST_F(PolynomialTest, Evaluate) {
    std::vector<Scalar> one_one{Scalar(1), Scalar(1)};
    EXPECT_EQ(evaluate(P("x^2 - y"), one_one), Scalar(0));
    std::vector<Scalar> pt{Scalar(0), Scalar(5)};
    EXPECT_EQ(evaluate(P("x*y"), pt), Scalar(0));
    EXPECT_EQ(evaluate(C("x + i*y"), one_one), Scalar(Rational(1), Rational(1)));
    std::vector<Scalar> bad{Scalar(1)};
    EXPECT_THROW(evaluate(P("x"), bad), PreconditionError);
}

TEST_F(PolynomialTest, HomogeneousComponent) {
    auto p = P("x^2 + x + 3");
    EXPECT_EQ(homogeneous_component(p, 1), P("x"));
    EXPECT_EQ(homogeneous_component(p, 0), P("3"));
    EXPECT_EQ(homogeneous_component(p, 5), P("0"));
}

TEST_F(PolynomialTest, ZeroPolynomialHasNoDegree) {
    EXPECT_THROW(P("x - x").total_degree(), PreconditionError);
    EXPECT_TRUE(P("x - x").is_zero());
    EXPECT_EQ(P("x - x").size(), 0u);
}

TEST_F(PolynomialTest, CanonicalPrinting) {
    EXPECT_EQ(P("1/2 + (x^2 - y^2)/2").to_string(), "1/2*x^2 - 1/2*y^2 + 1/2");
    EXPECT_EQ(P("y + x").to_string(), "x + y");
    EXPECT_EQ(P("-x*y^2 + x^3 - 1").to_string(), "x^3 - x*y^2 - 1");
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_EQ(P("6/4*x").to_string(), "3/2*x");
    EXPECT_EQ(C("(1 + 2*i)*x - i*y + 3*i").to_string(), "(1+2*i)*x - i*y + 3*i");
    EXPECT_EQ(C("(1/2 - i)").to_string(), "(1/2-i)");
}

TEST_F(PolynomialTest, ParseErrorsCarryPositions) {
    try {
        P("x + z");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 5u);
        EXPECT_NE(std::string(e.what()).find("undeclared variable 'z'"), std::string::npos);
    }
    EXPECT_THROW(P("x y"), ParseError);
    EXPECT_THROW(P("x / y"), ParseError);
    EXPECT_THROW(P("x^"), ParseError);
    EXPECT_THROW(P("(x + 1"), ParseError);
    EXPECT_THROW(P("i*x"), ParseError);
    EXPECT_THROW(P(""), ParseError);
}

// Ring axioms, degree and leading-form multiplicativity on random inputs.
TEST(PolynomialProperties, RingAxiomsAndDegrees) {
    RandomPolynomials gen(20261018);
    for (int trial = 0; trial < 60; ++trial) {
        auto ring = ring_of({"x", "y", "z"}, trial % 3 == 0 ? Field::gaussian_rational : Field::rational);
        auto a = gen.sparse(ring, 3, 4);
        auto b = gen.sparse(ring, 3, 4);
        auto c = gen.sparse(ring, 2, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
        EXPECT_EQ(leading_form(a * b), leading_form(a) * leading_form(b));
        Polynomial sum(ring);
        for (unsigned k = 0; k <= a.total_degree(); ++k) sum += homogeneous_component(a, k);
        EXPECT_EQ(sum, a);
    }
}

TEST(PolynomialProperties, PrintParseRoundTrip) {
    RandomPolynomials gen(7);
    for (int trial = 0; trial < 80; ++trial) {
        auto ring = ring_of({"x", "y", "z"}, trial % 2 ? Field::gaussian_rational : Field::rational);
        auto p = gen.sparse(ring, 4, 5);
        EXPECT_EQ(parse_polynomial(ring, p.to_string()), p) << p;
    }
}

// <x_j f, L> = <f, D_j L> for f in H_k, L in H_{k+1}.
TEST(PolynomialProperties, FischerAdjunction) {
    RandomPolynomials gen(99);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto ring = ring_of({"x", "y", "z"}, trial % 2 ? Field::gaussian_rational : Field::rational);
        unsigned k = static_cast<unsigned>(gen.integer(0, 4));
        auto f = gen.homogeneous(ring, k, 4);
        auto op = gen.homogeneous(ring, k + 1, 5);
        for (std::size_t j = 0; j < 3; ++j) {
            auto xj = Polynomial::variable(ring, j);
            EXPECT_EQ(fischer_product(xj * f, op), fischer_product(f, apply_diff_op(xj, op)));
            ++checked;
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(PolynomialProperties, FischerProductPositiveDefinite) {
    RandomPolynomials gen(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto ring = ring_of({"x", "y"}, Field::gaussian_rational);
        auto f = gen.homogeneous(ring, static_cast<unsigned>(gen.integer(0, 5)), 4);
        Scalar self = fischer_product(f, f);
        EXPECT_TRUE(self.is_real());
        EXPECT_GT(self.re(), 0);
    }
}

}  // namespace
}  // namespace varinterp
