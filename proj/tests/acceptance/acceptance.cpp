// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Printed-formula discrepancies are listed under their criterion.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <lndkit/automorphism.hpp>
#include <lndkit/catalog.hpp>
#include <lndkit/danielewski.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/dualgraph.hpp>
#include <lndkit/parser.hpp>

#include "property_checks.hpp"

namespace {

using namespace lnd;

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::vector<std::string> &notes)> check;
};

MultiPoly poly(const VarSet &v, const char *text) { return parse(text, v, catalog::surface_lets(v)); }

bool invariance(std::vector<std::string> &notes)
{
    const VarSet v = catalog::xyz();
    const Derivation d = catalog::surface_derivation(v);
    const MultiPoly image = d.apply(catalog::displayed_quartic(v));
    const bool ok = d.apply(catalog::surface_poly(v)).is_zero() && image == poly(v, "x^2*(2*f + 5)") && !image.is_zero();
    notes.push_back("paper-discrepancy: d(printed quartic) = " + image.to_string() + " (printed quartic = x*y - P)");
    return ok;
}

bool nilpotency(std::vector<std::string> &notes)
{
    const VarSet v = catalog::xyz();
    bool ok = true;
    auto expect = [&](const Derivation &d, unsigned ix, unsigned iy, unsigned iz, const char *label) {
        const auto r = nilpotency_certificate(d, 64);
        const auto *cert = std::get_if<NilpotencyCertificate>(&r);
        if (cert == nullptr) {
            ok = false;
            notes.push_back(std::string(label) + ": not nilpotent within 64");
            return;
        }
        notes.push_back(std::string(label) + ": x:" + std::to_string(cert->index_of("x")) + " y:" +
                        std::to_string(cert->index_of("y")) + " z:" + std::to_string(cert->index_of("z")));
        ok = ok && cert->index_of("x") == ix && cert->index_of("y") == iy && cert->index_of("z") == iz;
    };
    expect(catalog::surface_derivation(v), 1, 3, 5, "surface derivation");
    expect(catalog::nagata_derivation(v), 1, 2, 3, "Nagata derivation");
    return ok;
}

bool round_trip(std::vector<std::string> &)
{
    bool ok = true;
    for (const VarSet &v : {catalog::xyz(), catalog::xyzu()}) {
        const Derivation d = catalog::surface_derivation(v);
        const MultiPoly P = catalog::surface_poly(v);
        const PolyMap fwd = exponential(d, P);
        const PolyMap back = exponential(d, -P);
        for (const auto &name : v.names()) {
            const MultiPoly g = MultiPoly::variable(v, name);
            // Pullback of g along fwd o back, and along back o fwd.
            ok = ok && apply_exponential(d, -P, fwd.component(name)) == g &&
                 apply_exponential(d, P, back.component(name)) == g;
        }
    }
    return ok;
}

bool formula_match(std::vector<std::string> &notes)
{
    const VarSet v = catalog::xyz();
    const PolyMap phi = exponential(catalog::surface_derivation(v), catalog::surface_poly(v));
    const bool y_ok = phi.component("y") == catalog::displayed_phi_y(v);

    // Compare in Q[x,y,z,p] with P formal so the terms can be split by P-degree.
    const VarSet w{"x", "y", "z", "p"};
    const Bindings lets{{"f", catalog::f_poly(w)}, {"P", parse("p", w)}};
    const Derivation dw(w, {{"y", parse("x*(2*f + 5)", w, lets)}, {"z", parse("x + 2*y*(2*f + 5)", w, lets)}});
    // d(p) is taken as 0: p stands for an element of the kernel.
    const MultiPoly computed = apply_exponential(dw, parse("p", w), parse("z", w));
    const MultiPoly printed = parse(catalog::kDisplayedPhiZ, w, lets);
    const std::string pv[1] = {"p"};
    bool tail_ok = true;
    for (int k : {3, 4}) {
        tail_ok = tail_ok && homogeneous_component(computed, pv, k) == homogeneous_component(printed, pv, k);
    }
    const bool z_differs = !(phi.component("z") == catalog::displayed_phi_z(v));
    const bool consistent = substitute(computed, {{"p", catalog::surface_poly(w)}}) == phi.component("z").rebase(w);
    notes.push_back("paper-discrepancy: z-component");
    notes.push_back("  printed:  " + std::string(catalog::kDisplayedPhiZ));
    notes.push_back("  computed: z + P*(" + (*divide_exact(homogeneous_component(computed, pv, 1), parse("p", w))).to_string() +
                    ") + P^2*(" + (*divide_exact(homogeneous_component(computed, pv, 2), parse("p^2", w))).to_string() +
                    ") + P^3*(" + (*divide_exact(homogeneous_component(computed, pv, 3), parse("p^3", w))).to_string() +
                    ") + P^4*(" + (*divide_exact(homogeneous_component(computed, pv, 4), parse("p^4", w))).to_string() +
                    ")");
    notes.push_back(std::string("  P^3 and P^4 terms ") + (tail_ok ? "match" : "DO NOT match"));
    return y_ok && tail_ok && z_differs && consistent;
}

bool leading_components(std::vector<std::string> &notes)
{
    const VarSet v = catalog::xyz();
    const PolyAuto phi = exponential_automorphism(catalog::surface_derivation(v), catalog::surface_poly(v));
    const std::string yz[2] = {"y", "z"};
    const auto r = tame_obstruction(phi, "x", yz);
    notes.push_back("d2 = " + std::to_string(r.d2) + ", d3 = " + std::to_string(r.d3) + ", F2 = " + r.F2.to_string() +
                    ", F3 = " + r.F3.to_string());
    return r.d2 == 8 && r.d3 == 16 && r.F2 == parse("x^3*y^8", v) && r.F3 == parse("x^5*y^16", v);
}

bool wildness(std::vector<std::string> &notes)
{
    const VarSet v = catalog::xyz();
    const PolyAuto phi = exponential_automorphism(catalog::surface_derivation(v), catalog::surface_poly(v));
    const std::string yz[2] = {"y", "z"};
    const auto r = tame_obstruction(phi, "x", yz);
    notes.push_back(std::string("verdict: ") + std::string(to_string(r.verdict)));
    // Independently: F3 / F2^2 = x^-1 is not a polynomial.
    const bool direct = !divide_exact(r.F3, r.F2.pow(2)).has_value();
    return !r.divisible && r.power == 2 && direct && r.verdict == TameVerdict::WildnessCertified;
}

// The identities hold as compositions of ring endomorphisms (the rightmost
// factor acts on a polynomial first). As point maps the same composite reads
// exp(u d~) o tau o exp(-u d~) o tau^-1, which is how MapWord is built; taken
// literally in point order the written word yields the inverse automorphism.
bool stable_tameness(std::vector<std::string> &notes)
{
    const VarSet v3 = catalog::xyz();
    const VarSet v4 = catalog::xyzu();
    const MultiPoly u = MultiPoly::variable(v4, "u");
    const MultiPoly one = MultiPoly::constant(v4, 1);

    auto word = [&](const Derivation &d, const MultiPoly &h, bool literal_point_order) {
        const PolyMap tau(v4, Bindings{{"u", u + h}});
        const PolyMap tau_inv(v4, Bindings{{"u", u - h}});
        MapWord w(v4);
        if (literal_point_order) {
            w.then(tau_inv).then_exponential(d.scaled(u), -one).then(tau).then_exponential(d.scaled(u), one);
        } else {
            w.then_exponential(d.scaled(u), one).then(tau).then_exponential(d.scaled(u), -one).then(tau_inv);
        }
        return w.evaluate();
    };

    const Derivation d3 = catalog::surface_derivation(v3);
    const MultiPoly P3 = catalog::surface_poly(v3);
    const Derivation n3 = catalog::nagata_derivation(v3);
    const MultiPoly one3 = MultiPoly::constant(v3, 1);
    const Derivation d4 = catalog::surface_derivation(v4);
    const MultiPoly P4 = catalog::surface_poly(v4);
    const Derivation n4 = catalog::nagata_base_derivation(v4);
    const MultiPoly w4 = catalog::nagata_invariant(v4);

    const PolyMap phi = extend_variable(exponential(d3, P3), "u");
    const PolyMap nagata = extend_variable(exponential(n3, one3), "u");
    const PolyMap lhs1 = word(d4, P4, false);
    const PolyMap lhs2 = word(n4, w4, false);
    bool ok = true;
    for (const auto &name : v4.names()) {
        ok = ok && phi.component(name) == lhs1.component(name) && nagata.component(name) == lhs2.component(name);
    }
    const bool inverse_ok = word(d4, P4, true) == extend_variable(exponential(d3, -P3), "u") &&
                            word(n4, w4, true) == extend_variable(exponential(n3, -one3), "u");
    notes.push_back("holds as ring endomorphisms, i.e. point maps exp(u d~) o tau o exp(-u d~) o tau^-1");
    notes.push_back(std::string("written word as literal point composite gives the inverse: ") +
                    (inverse_ok ? "confirmed" : "NOT confirmed"));
    return ok && inverse_ok;
}

bool nagata_reproduction(std::vector<std::string> &)
{
    const VarSet v = catalog::xyz();
    return exponential(catalog::nagata_derivation(v), MultiPoly::constant(v, 1)) == catalog::nagata_map_displayed(v);
}

bool fiber_structure(std::vector<std::string> &notes)
{
    const auto s = danielewski::canonical_surface();
    const auto fd = danielewski::fiber_over(s, Rational(0));
    const auto *split = std::get_if<danielewski::SplitFiber>(&fd.shape);
    if (split == nullptr) {
        return false;
    }
    std::vector<Rational> roots;
    bool ok = split->reduced() && split->fully_split();
    for (const auto &l : split->lines) {
        roots.push_back(l.root);
    }
    ok = ok && roots == std::vector<Rational>{-2, -1, 1, 2};
    const auto samples = danielewski::default_fiber_samples();
    for (const Rational a : {Rational(1), Rational(2), Rational(-1), Rational(1) / Rational(2)}) {
        ok = ok && danielewski::generic_fiber_check(s, a, samples);
    }
    notes.push_back("fiber over 0: " + std::to_string(roots.size()) + " reduced lines");
    return ok;
}

bool fixed_locus(std::vector<std::string> &)
{
    const auto s = danielewski::canonical_surface();
    const auto r = danielewski::fixed_locus_report(s.derivation);
    bool ok = r.contained() && r.entries.size() == 2;
    for (const auto &e : r.entries) {
        ok = ok && e.remainder.is_zero();
    }
    return ok;
}

bool cocycle(std::vector<std::string> &notes)
{
    const auto c = danielewski::build_cocycle();
    bool ok = danielewski::antisymmetric(c) && danielewski::satisfies_cocycle_identity(c);
    const auto vals = danielewski::component_values(danielewski::canonical_surface());
    const Rational third = Rational(1) / Rational(3);
    ok = ok && vals.at(1) == third && vals.at(-1) == -third && vals.at(2) == -2 * third && vals.at(-2) == 2 * third;
    for (const auto &[a, val] : vals) {
        // (-1)^(|a|-1) a / 3
        const Rational expected = (std::abs(a) % 2 == 1 ? Rational(1) : Rational(-1)) * Rational(a) * third;
        ok = ok && val == expected;
    }
    const auto r = danielewski::distinguishing_function_search(c, 5);
    const auto *none = std::get_if<danielewski::NoSolution>(&r);
    if (none == nullptr || none->per_n.size() != 5) {
        return false;
    }
    const auto &two = none->per_n[1];
    ok = ok && two.kind == danielewski::ChartObstruction::Kind::ConstantsCollide && two.a == -two.b &&
         two.offsets.at(two.a) == two.offsets.at(two.b);
    for (const auto &[a, oa] : two.offsets) {
        for (const auto &[b, ob] : two.offsets) {
            ok = ok && ob == Rational(b * b - a * a) + oa;
        }
    }
    notes.push_back("n = 2: " + two.detail);
    return ok;
}

bool dual_graph(std::vector<std::string> &)
{
    bool ok = true;
    for (int n : {0, 1, 2, 3, 5}) {
        const auto g = build_paper_compactification(n);
        ok = ok && g.weight("F_inf") == 0 && g.weight("D") == -n && g.weight("F_0") == -2 && g.weight("E_-1") == -3 &&
             g.weight("E_-4") == -3;
        for (const char *c : {"C_1", "C_-1", "C_2", "C_-2"}) {
            ok = ok && g.weight(c) == -1;
        }
        ok = ok && !is_chain(boundary_subgraph(g));
    }
    const auto cases = transversality_cases();
    ok = ok && cases.size() == 3;
    for (const auto &g : cases) {
        ok = ok && !can_contract_to_fiber(g).contractible;
    }
    return ok && can_contract_to_fiber(WeightedCurveGraph().with_vertex("F", 0)).contractible;
}

bool property_suites(std::vector<std::string> &notes)
{
    using namespace lnd::fixtures;
    const std::pair<const char *, PropertyOutcome> runs[] = {
        {"ring axioms", check_ring_axioms(kInstances)},
        {"Leibniz", check_leibniz(kInstances)},
        {"substitution homomorphism", check_substitution_homomorphism(kInstances)},
        {"homogeneous decomposition", check_homogeneous_reconstruction(kInstances)},
        {"blow-up/blow-down", check_blow_up_round_trips(kInstances)},
    };
    bool ok = true;
    for (const auto &[name, r] : runs) {
        notes.push_back(std::string(name) + ": " + std::to_string(r.instances - r.failures) + "/" +
                        std::to_string(r.instances) + (r.failures ? " first counterexample " + r.first_failure : ""));
        ok = ok && r.ok() && r.instances >= 100;
    }
    return ok;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "invariance", invariance},
        {2, "nilpotency", nilpotency},
        {3, "exponential round trip", round_trip},
        {4, "printed formula match", formula_match},
        {5, "leading components", leading_components},
        {6, "wildness obstruction", wildness},
        {7, "stable tameness", stable_tameness},
        {8, "Nagata reproduction", nagata_reproduction},
        {9, "fiber structure", fiber_structure},
        {10, "fixed locus", fixed_locus},
        {11, "cocycle", cocycle},
        {12, "dual graph", dual_graph},
        {13, "property suites", property_suites},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        std::vector<std::string> notes;
        bool ok = false;
        try {
            ok = c.check(notes);
        } catch (const std::exception &e) {
            notes.push_back(std::string("exception: ") + e.what());
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.name << '\n';
        for (const auto &n : notes) {
            std::cout << "       " << n << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
