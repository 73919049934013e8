#include <gtest/gtest.h>

#include <lndkit/catalog.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/parser.hpp>

#include "random_instances.hpp"

namespace {

using namespace lnd;

class DerivationTest : public ::testing::Test {
protected:
    VarSet v = catalog::xyz();
    MultiPoly p(const char *text) const { return parse(text, v, catalog::surface_lets(v)); }
    Derivation d = catalog::surface_derivation(v);
    MultiPoly P = catalog::surface_poly(v);
};

TEST_F(DerivationTest, Images)
{
    EXPECT_TRUE(d.image("x").is_zero());
    EXPECT_EQ(d.image("y"), p("x*(2*f + 5)"));
    EXPECT_EQ(d.image("z"), p("x + 2*y*(2*f + 5)"));
    EXPECT_EQ(d.apply(p("f")), p("x^2"));
}

TEST_F(DerivationTest, Invariants)
{
    EXPECT_TRUE(d.apply(P).is_zero());
    EXPECT_TRUE(d.in_kernel(p("x")));
    // The printed quartic is x*y - P, so its image is d(x*y) = x*d(y).
    EXPECT_EQ(d.apply(catalog::displayed_quartic(v)), p("x^2*(2*f + 5)"));
}

TEST_F(DerivationTest, NilpotencyIndices)
{
    auto r = nilpotency_certificate(d, 64);
    ASSERT_TRUE(std::holds_alternative<NilpotencyCertificate>(r));
    const auto &cert = std::get<NilpotencyCertificate>(r);
    EXPECT_EQ(cert.index_of("x"), 1u);
    EXPECT_EQ(cert.index_of("y"), 3u);
    EXPECT_EQ(cert.index_of("z"), 5u);
    EXPECT_TRUE(cert.entries[2].chain.back().is_zero());
    // d^2(y) = 2x * d(f) = 2x^3.
    EXPECT_EQ(cert.entries[1].chain[1], p("2*x^3"));

    auto n = nilpotency_certificate(catalog::nagata_derivation(v), 64);
    ASSERT_TRUE(std::holds_alternative<NilpotencyCertificate>(n));
    const auto &nc = std::get<NilpotencyCertificate>(n);
    EXPECT_EQ(nc.index_of("x"), 1u);
    EXPECT_EQ(nc.index_of("y"), 2u);
    EXPECT_EQ(nc.index_of("z"), 3u);
}

TEST_F(DerivationTest, EulerIsNotNilpotent)
{
    const Derivation euler(v, {{"x", p("x")}, {"y", p("y")}, {"z", p("z")}});
    auto r = nilpotency_certificate(euler, 10);
    ASSERT_TRUE(std::holds_alternative<NotNilpotentWithinBound>(r));
    const auto &fail = std::get<NotNilpotentWithinBound>(r);
    EXPECT_EQ(fail.generator, "x");
    EXPECT_EQ(fail.bound, 10u);
    EXPECT_EQ(fail.last_iterate, p("x"));
    EXPECT_THROW(exponential(euler, p("1"), 10), NilpotencyBoundExceeded);
}

TEST_F(DerivationTest, MultiplierMustBeInKernel)
{
    EXPECT_THROW(exponential(d, p("y")), MultiplierNotInKernel);
    MapWord w(v);
    EXPECT_THROW(w.then_exponential(d, p("z")), MultiplierNotInKernel);
}

TEST_F(DerivationTest, ExponentialYComponent)
{
    const PolyMap phi = exponential(d, P);
    EXPECT_TRUE(phi.component("x") == p("x"));
    EXPECT_EQ(phi.component("y"), p("y + x*(2*f + 5)*P + x^3*P^2"));
}

// Hand-expanded exp(P d)(z), checked at random rational points using only
// Rational arithmetic on the values of f and P.
TEST_F(DerivationTest, ExponentialZComponentMatchesHandExpansion)
{
    const MultiPoly z_image = exponential(d, P).component("z");
    fixtures::RandomPolys gen(v);
    for (int i = 0; i < 100; ++i) {
        const auto pt = gen.point();
        const Rational &x = pt.at("x");
        const Rational &y = pt.at("y");
        const Rational &z = pt.at("z");
        const Rational fv = x * z - y * y;
        const Rational Pv = x * y - (fv + 1) * (fv + 4);
        const Rational t = 2 * fv + 5;
        const Rational expected = z + Pv * (x + 2 * y * t) + Pv.pow(2) * (x * t * t + 2 * x * x * y) +
                                  2 * x.pow(3) * Pv.pow(3) * t + x.pow(5) * Pv.pow(4);
        ASSERT_EQ(fixtures::eval(z_image, pt), expected) << "at x=" << x << " y=" << y << " z=" << z;
    }
}

TEST_F(DerivationTest, PrintedZComponentDiffers)
{
    const MultiPoly z_image = exponential(d, P).component("z");
    EXPECT_NE(z_image, catalog::displayed_phi_z(v));
    // The P^3 and P^4 parts agree: compare in Q[x,y,z,p] with P kept formal.
    const VarSet w{"x", "y", "z", "p"};
    Bindings lets{{"f", catalog::f_poly(w)}, {"P", parse("p", w)}};
    const MultiPoly printed = parse(catalog::kDisplayedPhiZ, w, lets);
    const MultiPoly hand =
        parse("z + P*(x + 2*y*(2*f + 5)) + P^2*(x*(2*f + 5)^2 + 2*x^2*y) + 2*x^3*P^3*(2*f + 5) + x^5*P^4", w, lets);
    const std::string pv[1] = {"p"};
    for (int k : {3, 4}) {
        EXPECT_EQ(homogeneous_component(printed, pv, k), homogeneous_component(hand, pv, k)) << "P^" << k;
    }
    for (int k : {1, 2}) {
        EXPECT_NE(homogeneous_component(printed, pv, k), homogeneous_component(hand, pv, k)) << "P^" << k;
    }
    const MultiPoly p1 = *divide_exact(homogeneous_component(hand, pv, 1), parse("p", w));
    EXPECT_EQ(p1, parse("4*x*y*z + x - 4*y^3 + 10*y", w));
}

TEST_F(DerivationTest, ExponentialRoundTrip)
{
    const PolyAuto phi = exponential_automorphism(d, P);
    EXPECT_EQ(phi.inverse_map(), exponential(d, -P));
    const VarSet w = catalog::xyzu();
    const PolyAuto phi4 = exponential_automorphism(catalog::surface_derivation(w), catalog::surface_poly(w));
    EXPECT_EQ(phi4.forward().component("u"), parse("u", w));
}

TEST_F(DerivationTest, ApplyExponentialMatchesPullback)
{
    const Derivation n = catalog::nagata_derivation(v);
    const PolyMap e = exponential(n, p("1"));
    fixtures::RandomPolys gen(v, 7);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly h = gen.poly(3, 2);
        EXPECT_EQ(apply_exponential(n, p("1"), h), e.pullback(h));
    }
}

TEST_F(DerivationTest, MapWordMatchesCompose)
{
    const PolyMap a = parse_map("y' = y + x^2\nz' = z - x*y");
    const PolyMap b = exponential(catalog::nagata_base_derivation(v), p("x*z + y^2"));
    MapWord w(v);
    w.then(a).then_exponential(catalog::nagata_base_derivation(v), p("x*z + y^2"));
    EXPECT_EQ(w.size(), 2u);
    EXPECT_EQ(w.evaluate(), compose(a, b));
}

TEST_F(DerivationTest, FixedIdeal)
{
    const auto gens = fixed_ideal_generators(d, p("1"));
    ASSERT_EQ(gens.size(), 2u);
    EXPECT_EQ(gens[0], d.image("y"));
}

TEST_F(DerivationTest, ParseDerivationFile)
{
    const auto file = parse_derivation("let f = x*z - y^2\ndy = x*(2*f + 5)\ndz = x + 2*y*(2*f + 5)\n");
    EXPECT_EQ(file.derivation, d);
    EXPECT_EQ(file.lets.at("f"), catalog::f_poly(v));
    EXPECT_THROW(parse_derivation("dw = x"), ParseError);
    EXPECT_THROW(parse_derivation("dy = x\ndy = z"), ParseError);
    const auto four = parse_derivation("vars x y z u\ndy = u");
    EXPECT_EQ(four.derivation.vars().size(), 4u);
}

TEST_F(DerivationTest, Extended)
{
    const Derivation e = d.extended("u");
    EXPECT_TRUE(e.image("u").is_zero());
    EXPECT_EQ(e.image("y"), d.image("y").rebase(e.vars()));
}

} // namespace
