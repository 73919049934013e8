#include <gtest/gtest.h>

#include <lndkit/catalog.hpp>
#include <lndkit/laurent.hpp>
#include <lndkit/parser.hpp>
#include <lndkit/polynomial.hpp>
#include <lndkit/rational.hpp>

namespace {

using namespace lnd;

class PolyringTest : public ::testing::Test {
protected:
    VarSet v = catalog::xyz();
    MultiPoly p(const char *text) const { return parse(text, v); }
    MultiPoly f = catalog::f_poly(v);
    MultiPoly P = catalog::surface_poly(v);
    const std::string yz[2] = {"y", "z"};
};

TEST(RationalTest, StaysReduced)
{
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), BigInt(-3));
    EXPECT_EQ(r.denominator(), BigInt(2));
    EXPECT_EQ(Rational(1) / Rational(3) + Rational(2) / Rational(3), Rational(1));
    EXPECT_EQ(Rational::from_string("-10/4").to_string(), "-5/2");
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(Rational::from_string("1/"), std::invalid_argument);
}

TEST_F(PolyringTest, AddCancels)
{
    EXPECT_EQ(f + p("y^2"), p("x*z"));
    EXPECT_EQ(P + (f + p("1")) * (f + p("4")), p("x*y"));
    const MultiPoly q = p("x^3 - 2/3*y*z");
    EXPECT_EQ(MultiPoly(v) + q, q);
}

TEST_F(PolyringTest, MulExpands)
{
    // (xz - y^2)^2 + 5(xz - y^2) + 4 expanded by hand.
    const MultiPoly expected = MultiPoly::monomial(v, {2, 0, 2}) - MultiPoly::monomial(v, {1, 2, 1}, 2) +
                               MultiPoly::monomial(v, {0, 4, 0}) + MultiPoly::monomial(v, {1, 0, 1}, 5) -
                               MultiPoly::monomial(v, {0, 2, 0}, 5) + MultiPoly::constant(v, 4);
    EXPECT_EQ((f + p("1")) * (f + p("4")), expected);
    const MultiPoly q = p("x - y + 7*z^2");
    EXPECT_TRUE((q * MultiPoly(v)).is_zero());
    EXPECT_EQ(q * p("1"), q);
}

TEST_F(PolyringTest, MismatchedVarSetsThrow)
{
    const MultiPoly a = parse("x", VarSet{"x", "y"});
    EXPECT_THROW(a + p("x"), VarSetMismatch);
    EXPECT_THROW(a * p("x"), VarSetMismatch);
}

TEST_F(PolyringTest, Substitute)
{
    const MultiPoly quartic = catalog::displayed_quartic(v);
    EXPECT_EQ(substitute(quartic, {{"x", p("0")}}), p("y^4 - 5*y^2 + 4"));
    EXPECT_EQ(substitute(f, {{"x", p("0")}, {"y", p("1")}}), p("-1"));
    EXPECT_EQ(substitute(P, {{"x", p("x")}, {"y", p("y")}, {"z", p("z")}}), P);
}

TEST_F(PolyringTest, Partial)
{
    // dP/dz = -(2f + 5) * df/dz with df/dz = x.
    EXPECT_EQ(partial(P, "z"), -(p("x") * (p("2") * f + p("5"))));
    EXPECT_EQ(partial(f, "y"), p("-2*y"));
    EXPECT_TRUE(partial(p("17/3"), "x").is_zero());
}

TEST_F(PolyringTest, HomogeneousComponent)
{
    EXPECT_EQ(homogeneous_component(P, yz, 4), p("-y^4"));
    const MultiPoly phi_y = catalog::displayed_phi_y(v);
    EXPECT_EQ(homogeneous_component(phi_y, yz, 8), p("x^3*y^8"));
    EXPECT_TRUE(homogeneous_component(P, yz, -1).is_zero());
}

TEST_F(PolyringTest, DegreeIn)
{
    EXPECT_EQ(degree_in(catalog::displayed_phi_y(v), yz), 8);
    const std::string y[1] = {"y"};
    EXPECT_EQ(degree_in(MultiPoly(v), y), std::nullopt);
    EXPECT_EQ(degree_in(P, y), 4);
}

TEST_F(PolyringTest, DivideExact)
{
    EXPECT_FALSE(divide_exact(p("x^5*y^16"), p("x^6*y^16")).has_value());
    EXPECT_FALSE(divide_exact(P, p("x")).has_value());
    EXPECT_EQ(divide_exact(p("x^2*y"), p("x")), p("x*y"));
    EXPECT_EQ(divide_exact(p("x^2 - y^2"), p("x + y")), p("x - y"));
    EXPECT_THROW(divide_exact(p("x"), MultiPoly(v)), std::domain_error);
}

TEST_F(PolyringTest, RemainderIn)
{
    // y^3 = y * y^2 and y^2 = 5/2 mod 2y^2 - 5.
    EXPECT_EQ(remainder_in(p("y^3 + x"), "y", p("2*y^2 - 5")), p("5/2*y + x"));
}

TEST_F(PolyringTest, LaurentScale)
{
    const LaurentPoly g = laurent_scale(p("3 + x"), 2);
    EXPECT_EQ(g.shift(), 2u);
    EXPECT_EQ(g.to_string(), "x^-1 + 3*x^-2");
    const LaurentPoly one = laurent_scale(p("x^2"), 2);
    EXPECT_TRUE(one.is_polynomial());
    EXPECT_EQ(one.to_polynomial(), p("1"));
    EXPECT_TRUE(laurent_sub(g, g).is_zero());
    EXPECT_EQ(laurent_sub(g, g).shift(), 0u);
    EXPECT_EQ(g.min_exponent(), -2);
    EXPECT_EQ(g.times_power(2).to_polynomial(), p("3 + x"));
    EXPECT_EQ(laurent_add(g, laurent_scale(p("-3"), 2)).to_string(), "x^-1");
}

TEST_F(PolyringTest, ParseAndPrint)
{
    const MultiPoly quartic = p("x*(x*z^2 - 2*y^2*z + 5*z) + y^4 - 5*y^2 + 4");
    EXPECT_EQ(quartic.to_string(), "x^2*z^2 - 2*x*y^2*z + 5*x*z + y^4 - 5*y^2 + 4");
    EXPECT_TRUE(p("0").is_zero());
    EXPECT_EQ(p("0").to_string(), "0");
    EXPECT_EQ(p("(x*z - y^2)^2"), p("x^2*z^2 - 2*x*y^2*z + y^4"));
    EXPECT_EQ(p("-1/2*x + 3/4").to_string(), "-1/2*x + 3/4");
    for (const char *canon : {"x^2*z^2 - 2*x*y^2*z + 5*x*z + y^4 - 5*y^2 + 4", "-x^3*y + 2/3*z - 1", "y", "-7/5"}) {
        EXPECT_EQ(p(canon).to_string(), canon);
    }
}

TEST_F(PolyringTest, ParseErrors)
{
    EXPECT_THROW(p("x + w"), ParseError);
    EXPECT_THROW(p("2x"), ParseError);
    EXPECT_THROW(p("(x + y"), ParseError);
    EXPECT_THROW(p("x^"), ParseError);
    try {
        p("x + * y");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST_F(PolyringTest, DisplayedQuarticIsXYMinusP)
{
    const MultiPoly quartic = catalog::displayed_quartic(v);
    EXPECT_EQ(quartic, (f + p("1")) * (f + p("4")));
    EXPECT_EQ(quartic, p("x*y") - P);
    EXPECT_NE(quartic, -P);
}

} // namespace
