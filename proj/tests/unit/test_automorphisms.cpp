#include <gtest/gtest.h>

#include <lndkit/automorphism.hpp>
#include <lndkit/catalog.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/parser.hpp>

#include "random_instances.hpp"

namespace {

using namespace lnd;
using Point = std::map<std::string, Rational, std::less<>>;

Point apply_point(const PolyMap &m, const Point &pt)
{
    Point out;
    for (const auto &name : m.vars().names()) {
        out.emplace(name, fixtures::eval(m.component(name), pt));
    }
    return out;
}

class AutomorphismTest : public ::testing::Test {
protected:
    VarSet v = catalog::xyz();
    VarSet v4 = catalog::xyzu();
    MultiPoly p(const char *text) const { return parse(text, v); }
    const std::string yz[2] = {"y", "z"};
};

TEST_F(AutomorphismTest, ComposeOrder)
{
    const PolyMap g = parse_map("y' = y + x");
    const PolyMap h = parse_map("x' = 2*x");
    // h first: (x, y) -> (2x, y) -> (2x, y + 2x).
    EXPECT_EQ(compose(g, h).component("y"), p("y + 2*x"));
    EXPECT_EQ(compose(h, g).component("y"), p("y + x"));
}

TEST_F(AutomorphismTest, VerifyInversePair)
{
    const PolyMap sq = parse_map("x' = x^2");
    const auto r = verify_inverse_pair(sq, sq);
    ASSERT_TRUE(std::holds_alternative<NotInverse>(r));
    EXPECT_EQ(std::get<NotInverse>(r).variable, "x");
    EXPECT_EQ(std::get<NotInverse>(r).component, p("x^4"));

    const auto ok = verify_inverse_pair(parse_map("y' = y + x^2\nz' = z + x*y^2"),
                                        parse_map("y' = y - x^2\nz' = z - x*(y - x^2)^2"));
    EXPECT_TRUE(std::holds_alternative<PolyAuto>(ok));
}

TEST_F(AutomorphismTest, Triangular)
{
    const PolyAuto t = make_triangular(v, {{"z", p("x*y^2")}, {"y", p("x^3")}});
    EXPECT_EQ(t.inverse_map().component("z"), p("z - x*(y - x^3)^2"));
    EXPECT_THROW(make_triangular(v, {{"y", p("z")}}), NotTriangular);
    EXPECT_THROW(make_triangular(v, {{"y", p("y^2")}}), NotTriangular);
}

TEST_F(AutomorphismTest, ConjugateAndInverse)
{
    const PolyAuto a = make_triangular(v, {{"z", p("y^2")}});
    const PolyAuto by = make_triangular(v, {{"y", p("x")}});
    const PolyAuto c = conjugate(a, by);
    EXPECT_TRUE(std::holds_alternative<PolyAuto>(verify_inverse_pair(c.forward(), c.inverse_map())));
    EXPECT_EQ(c.forward(), compose(by.inverse_map(), compose(a.forward(), by.forward())));
    EXPECT_TRUE(compose(c, c.inverse()).forward().is_identity());
}

TEST_F(AutomorphismTest, ExtendVariable)
{
    const PolyMap m = extend_variable(parse_map("y' = y + x^2"), "u");
    EXPECT_EQ(m.vars(), v4);
    EXPECT_EQ(m.component("u"), parse("u", v4));
    EXPECT_EQ(m.component("y"), parse("y + x^2", v4));
}

TEST_F(AutomorphismTest, LeadingComponentsOfWildMap)
{
    const PolyAuto phi = exponential_automorphism(catalog::surface_derivation(v), catalog::surface_poly(v));
    const auto r = tame_obstruction(phi, "x", yz);
    EXPECT_EQ(r.d2, 8);
    EXPECT_EQ(r.d3, 16);
    EXPECT_EQ(r.F2, p("x^3*y^8"));
    EXPECT_EQ(r.F3, p("x^5*y^16"));
    EXPECT_EQ(r.power, 2u);
    EXPECT_FALSE(r.divisible);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.verdict, TameVerdict::WildnessCertified);
}

TEST_F(AutomorphismTest, TameControl)
{
    const PolyAuto t = make_triangular(v, {{"z", p("x*y^2")}});
    const auto r = tame_obstruction(t, "x", yz);
    EXPECT_EQ(r.d2, 1);
    EXPECT_EQ(r.d3, 2);
    EXPECT_TRUE(r.divisible);
    EXPECT_EQ(r.witness, p("x"));
    EXPECT_EQ(r.verdict, TameVerdict::NoObstruction);

    const auto affine = tame_obstruction(make_triangular(v, {{"y", p("x")}}), "x", yz);
    EXPECT_TRUE(affine.degenerate);
    EXPECT_TRUE(affine.divisible);
    EXPECT_EQ(affine.verdict, TameVerdict::NoObstruction);

    const auto id = tame_obstruction(PolyAuto::identity(v), "x", yz);
    EXPECT_TRUE(id.degenerate);
    EXPECT_TRUE(id.divisible);
    EXPECT_EQ(id.verdict, TameVerdict::NoObstruction);

    // (x, y + x*z^2, z): here the z-component is the low-degree one.
    const auto pair = verify_inverse_pair(parse_map("y' = y + x*z^2"), parse_map("y' = y - x*z^2"));
    ASSERT_TRUE(std::holds_alternative<PolyAuto>(pair));
    const auto swapped = tame_obstruction(std::get<PolyAuto>(pair), "x", yz);
    EXPECT_EQ(swapped.d2, 2);
    EXPECT_EQ(swapped.d3, 1);
    EXPECT_FALSE(swapped.degenerate);
    EXPECT_TRUE(swapped.divisible);
    EXPECT_EQ(swapped.witness, p("x"));
    EXPECT_THROW(tame_obstruction(make_triangular(v, {{"y", p("x")}}), "y", yz), NotBaseAutomorphism);
}

TEST_F(AutomorphismTest, NagataReproduction)
{
    const PolyMap e = exponential(catalog::nagata_derivation(v), p("1"));
    EXPECT_EQ(e, catalog::nagata_map_displayed(v));
    const auto r = tame_obstruction(exponential_automorphism(catalog::nagata_derivation(v), p("1")), "x", yz);
    EXPECT_EQ(r.verdict, TameVerdict::WildnessCertified);
}

// exp(P d) x id = exp(u d~) o tau o exp(-u d~) o tau^-1 as point maps with
// tau(u) = u + P: every factor is evaluated numerically at random points,
// without composing polynomials.
TEST_F(AutomorphismTest, StableTamenessAtPoints)
{
    const Derivation d4 = catalog::surface_derivation(v4);
    const MultiPoly P = catalog::surface_poly(v4);
    const MultiPoly u = parse("u", v4);
    const PolyMap target = exponential(d4, P);
    const PolyMap e_plus = exponential(d4.scaled(u), parse("1", v4));
    const PolyMap e_minus = exponential(d4.scaled(u), parse("-1", v4));
    const PolyMap tau(v4, Bindings{{"u", u + P}});
    const PolyMap tau_inv(v4, Bindings{{"u", u - P}});
    fixtures::RandomPolys gen(v4, 11);
    for (int i = 0; i < 100; ++i) {
        const Point pt = gen.point();
        const Point img = apply_point(e_plus, apply_point(tau, apply_point(e_minus, apply_point(tau_inv, pt))));
        ASSERT_EQ(img, apply_point(target, pt));
        // The opposite composition order lands on the inverse.
        const Point rev = apply_point(tau_inv, apply_point(e_minus, apply_point(tau, apply_point(e_plus, pt))));
        ASSERT_EQ(rev, apply_point(exponential(d4, -P), pt));
    }
}

TEST_F(AutomorphismTest, StableTamenessExact)
{
    const Derivation d4 = catalog::surface_derivation(v4);
    const MultiPoly P = catalog::surface_poly(v4);
    const MultiPoly u = parse("u", v4);
    MapWord w(v4);
    w.then_exponential(d4.scaled(u), parse("1", v4))
        .then(PolyMap(v4, Bindings{{"u", u + P}}))
        .then_exponential(d4.scaled(u), parse("-1", v4))
        .then(PolyMap(v4, Bindings{{"u", u - P}}));
    const PolyMap lhs = extend_variable(exponential(catalog::surface_derivation(v), catalog::surface_poly(v)), "u");
    EXPECT_EQ(w.evaluate(), lhs);
}

TEST_F(AutomorphismTest, NagataStableTameness)
{
    const Derivation d0 = catalog::nagata_base_derivation(v4);
    const MultiPoly u = parse("u", v4);
    const PolyAuto tau = make_triangular(v4, {{"u", catalog::nagata_invariant(v4)}});
    const PolyAuto e1 = exponential_automorphism(d0.scaled(u), parse("1", v4));
    const PolyAuto word = compose(compose(e1, tau), compose(e1.inverse(), tau.inverse()));
    EXPECT_EQ(word.forward(), extend_variable(catalog::nagata_map_displayed(v), "u"));
}

TEST_F(AutomorphismTest, ParseMapErrors)
{
    EXPECT_THROW(parse_map("w' = x"), ParseError);
    EXPECT_THROW(parse_map("y = x"), ParseError);
    EXPECT_THROW(parse_map("y' = x\ny' = z"), ParseError);
}

} // namespace
