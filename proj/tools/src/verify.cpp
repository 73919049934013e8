#include <lndkit_tools/verify.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <lndkit/catalog.hpp>
#include <lndkit/danielewski.hpp>
#include <lndkit/dualgraph.hpp>
#include <lndkit/laurent.hpp>
#include <lndkit/parser.hpp>

namespace lnd::tools {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::PaperDiscrepancy:
        return "paper-discrepancy";
    }
    return "unknown";
}

std::size_t RunReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseOutcome &c) { return c.result.status == s; }));
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

// Collects failed expectations as witnesses.
class Checker {
public:
    void equal(const std::string &what, const MultiPoly &expected, const MultiPoly &actual)
    {
        if (!(expected == actual)) {
            failures_.push_back({what + " (expected)", expected.to_string()});
            failures_.push_back({what + " (computed)", actual.to_string()});
        }
    }

    template <class T>
    void equal_value(const std::string &what, const T &expected, const T &actual)
    {
        if (!(expected == actual)) {
            std::ostringstream e;
            std::ostringstream a;
            e << expected;
            a << actual;
            failures_.push_back({what + " (expected)", e.str()});
            failures_.push_back({what + " (computed)", a.str()});
        }
    }

    void that(bool ok, const std::string &what, const std::string &detail = "false")
    {
        if (!ok) {
            failures_.push_back({what, detail});
        }
    }

    bool failed() const { return !failures_.empty(); }

    CaseResult done(std::string summary)
    {
        if (failures_.empty()) {
            return {Status::Pass, std::move(summary), {}};
        }
        return {Status::Fail, "expectation failed: " + failures_.front().label, std::move(failures_)};
    }

private:
    std::vector<Witness> failures_;
};

std::string join_indices(const NilpotencyCertificate &cert)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        os << (i ? ", " : "") << cert.entries[i].generator << ':' << cert.entries[i].index;
    }
    return os.str();
}

void expect_indices(Checker &ck, const NilpotencyResult &r, const std::map<std::string, unsigned> &expected)
{
    const auto *cert = std::get_if<NilpotencyCertificate>(&r);
    ck.that(cert != nullptr, "nilpotent within bound");
    if (cert == nullptr) {
        return;
    }
    for (const auto &[g, idx] : expected) {
        ck.equal_value("index of " + g, idx, cert->index_of(g));
    }
}

// ---------------------------------------------------------------------------
// derivation cases

CaseResult derivation_invariance()
{
    Checker ck;
    const auto s = danielewski::canonical_surface();
    const VarSet &v = s.P.vars();
    ck.that(s.derivation.in_kernel(s.P), "d(P) = 0");
    ck.equal("d(f)", parse("x^2", v), s.derivation.apply(s.f));
    ck.equal("d(x)", MultiPoly(v), s.derivation.apply(MultiPoly::variable(v, "x")));
    ck.that(s.derivation.in_kernel(parse("x^3*P^2 + 7*x", v, catalog::surface_lets(v))), "x^3*P^2 + 7*x in kernel");
    ck.that(!s.derivation.in_kernel(MultiPoly::variable(v, "y")), "y not in kernel");
    return ck.done("d(P) = 0 and d(f) = x^2 for P = " + s.P.to_string());
}

CaseResult surface_printed_quartic()
{
    Checker ck;
    const auto s = danielewski::canonical_surface();
    const auto disc = danielewski::display_discrepancy(s);
    const VarSet &v = s.P.vars();
    ck.that(disc.displayed_is_x_y_minus_P, "printed quartic equals x*y - P");
    ck.equal("d(printed quartic)", parse("x^2*(2*f + 5)", v, catalog::surface_lets(v)), disc.derivation_image);
    if (ck.failed()) {
        return ck.done("");
    }
    if (disc.annihilated) {
        return {Status::Pass, "printed quartic is invariant", {}};
    }
    return {Status::PaperDiscrepancy,
            "printed quartic equals x*y - P = (f+1)(f+4) and is not invariant; the invariant is P",
            {{"printed", disc.displayed.to_string()},
             {"invariant", s.P.to_string()},
             {"derivation of printed", disc.derivation_image.to_string()}}};
}

CaseResult derivation_nilpotency()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const auto d = catalog::surface_derivation(v);
    const auto r = nilpotency_certificate(d, 64);
    expect_indices(ck, r, {{"x", 1}, {"y", 3}, {"z", 5}});
    if (const auto *cert = std::get_if<NilpotencyCertificate>(&r); cert != nullptr && !ck.failed()) {
        ck.equal("d^2(y)", parse("2*x^3", v), cert->entries[1].chain[1]);
        ck.equal("d^4(z)", parse("24*x^5", v), cert->entries[2].chain[3]);
        return ck.done("indices " + join_indices(*cert));
    }
    return ck.done("");
}

CaseResult nagata_nilpotency()
{
    Checker ck;
    const auto r = nilpotency_certificate(catalog::nagata_derivation(catalog::xyz()), 64);
    expect_indices(ck, r, {{"x", 1}, {"y", 2}, {"z", 3}});
    const auto *cert = std::get_if<NilpotencyCertificate>(&r);
    return ck.done(cert ? "indices " + join_indices(*cert) : "");
}

// ---------------------------------------------------------------------------
// automorphism cases

CaseResult nagata_exponential()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const PolyMap sigma = exponential(catalog::nagata_derivation(v), MultiPoly::constant(v, 1));
    const PolyMap shown = catalog::nagata_map_displayed(v);
    for (const auto &name : v.names()) {
        ck.equal("exp(d)(" + name + ")", shown.component(name), sigma.component(name));
    }
    const PolyMap same = exponential(catalog::nagata_base_derivation(v), catalog::nagata_invariant(v));
    ck.that(same == sigma, "exp((xz+y^2) D) = exp(d)");
    return ck.done("exp(d) = (" + sigma.component("x").to_string() + ", " + sigma.component("y").to_string() + ", " +
                   sigma.component("z").to_string() + ")");
}

// exp(u D) o tau o exp(-u D) o tau^-1 in point order, tau: u -> u + h. As ring
// maps (g -> g o F) this is the product tau^-1 exp(-u D) tau exp(u D) with the
// rightmost factor applied first.
MapWord stable_tame_word(const VarSet &v4, const Derivation &d4, const MultiPoly &h)
{
    const MultiPoly u = MultiPoly::variable(v4, "u");
    MapWord w(v4);
    w.then_exponential(d4.scaled(u), MultiPoly::constant(v4, 1))
        .then(PolyMap(v4, Bindings{{"u", u + h}}))
        .then_exponential(d4.scaled(u), MultiPoly::constant(v4, -1))
        .then(PolyMap(v4, Bindings{{"u", u - h}}));
    return w;
}

// tau^-1 o exp(-u D) o tau o exp(u D) in point order.
MapWord stable_tame_word_point_order(const VarSet &v4, const Derivation &d4, const MultiPoly &h)
{
    const MultiPoly u = MultiPoly::variable(v4, "u");
    MapWord w(v4);
    w.then(PolyMap(v4, Bindings{{"u", u - h}}))
        .then_exponential(d4.scaled(u), MultiPoly::constant(v4, -1))
        .then(PolyMap(v4, Bindings{{"u", u + h}}))
        .then_exponential(d4.scaled(u), MultiPoly::constant(v4, 1));
    return w;
}

CaseResult nagata_stable_tame()
{
    Checker ck;
    const VarSet v3 = catalog::xyz();
    const VarSet v4 = catalog::xyzu();
    const PolyMap target = extend_variable(exponential(catalog::nagata_derivation(v3), MultiPoly::constant(v3, 1)), "u");
    const Derivation d0 = catalog::nagata_base_derivation(v4);
    const MultiPoly delta = catalog::nagata_invariant(v4);
    const PolyMap word = stable_tame_word(v4, d0, delta).evaluate();
    for (const auto &name : v4.names()) {
        ck.equal("component " + name, target.component(name), word.component(name));
    }
    // Cross-check with fully expanded certified automorphisms.
    const MultiPoly u = MultiPoly::variable(v4, "u");
    const PolyAuto tau = make_triangular(v4, Bindings{{"u", delta}});
    const PolyAuto e_plus = exponential_automorphism(d0.scaled(u), MultiPoly::constant(v4, 1));
    const PolyAuto product = compose(e_plus, conjugate(e_plus.inverse(), tau.inverse()));
    ck.that(product.forward() == target, "expanded product exp(d1) o tau o exp(-d1) o tau^-1");
    const PolyMap reversed = stable_tame_word_point_order(v4, d0, delta).evaluate();
    const PolyMap inverse_target =
        extend_variable(exponential(catalog::nagata_derivation(v3), MultiPoly::constant(v3, -1)), "u");
    ck.that(reversed == inverse_target, "tau^-1 o exp(-d1) o tau o exp(d1) in point order gives exp(-d)");
    return ck.done("exp(d) x id = tau^-1 exp(-d1) tau exp(d1) as ring maps, d1 = u(x d/dy - 2y d/dz), "
                   "tau: u -> u + xz + y^2; composed as point maps in the written order it gives exp(-d) x id");
}

CaseResult phi_roundtrip()
{
    Checker ck;
    for (const VarSet &v : {catalog::xyz(), catalog::xyzu()}) {
        const PolyAuto a = exponential_automorphism(catalog::surface_derivation(v), catalog::surface_poly(v));
        ck.that(a.forward().component("x") == MultiPoly::variable(v, "x"), "x fixed");
        ck.that(a.inverse_map() == exponential(catalog::surface_derivation(v), -catalog::surface_poly(v)),
                "inverse is exp(-P d)");
    }
    return ck.done("exp(P d) o exp(-P d) = exp(-P d) o exp(P d) = id in 3 and 4 variables");
}

CaseResult phi_y_component()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const PolyMap phi = exponential(catalog::surface_derivation(v), catalog::surface_poly(v));
    ck.equal("exp(P d)(y)", catalog::displayed_phi_y(v), phi.component("y"));
    return ck.done("exp(P d)(y) = " + std::string(catalog::kDisplayedPhiY));
}

CaseResult phi_z_component()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const PolyMap phi = exponential(catalog::surface_derivation(v), catalog::surface_poly(v));
    const MultiPoly computed = phi.component("z");
    const MultiPoly printed = catalog::displayed_phi_z(v);
    ck.equal("hand-expanded exp(P d)(z)",
             parse("z + P*(x + 2*y*(2*f + 5)) + P^2*(x*(2*f + 5)^2 + 2*x^2*y) + 2*x^3*P^3*(2*f + 5) + x^5*P^4", v,
                   catalog::surface_lets(v)),
             computed);

    // Coefficients in a formal p standing for P: Q[x,y,z,p] with d(p) = 0.
    const VarSet vp{"x", "y", "z", "p"};
    const MultiPoly p = MultiPoly::variable(vp, "p");
    const MultiPoly formal = exponential(catalog::surface_derivation(vp), p).component("z");
    Bindings lets{{"f", catalog::f_poly(vp)}, {"P", p}};
    const MultiPoly formal_printed = parse(catalog::kDisplayedPhiZ, vp, lets);
    const std::string only_p[] = {"p"};
    std::vector<int> differing;
    std::vector<Witness> coefficient_witnesses;
    for (int k = 0; k <= 4; ++k) {
        const MultiPoly a = homogeneous_component(formal, only_p, k);
        const MultiPoly b = homogeneous_component(formal_printed, only_p, k);
        if (!(a == b)) {
            differing.push_back(k);
            const MultiPoly pk = p.pow(static_cast<unsigned>(k));
            coefficient_witnesses.push_back({"printed P^" + std::to_string(k) + " coefficient", divide_exact(b, pk)->to_string()});
            coefficient_witnesses.push_back({"computed P^" + std::to_string(k) + " coefficient", divide_exact(a, pk)->to_string()});
        }
    }
    ck.that(degree_in(formal_printed, only_p) == std::optional<int>(4), "printed formula has degree 4 in P");
    ck.that(std::find(differing.begin(), differing.end(), 3) == differing.end(), "P^3 terms agree");
    ck.that(std::find(differing.begin(), differing.end(), 4) == differing.end(), "P^4 terms agree");
    if (ck.failed()) {
        return ck.done("");
    }
    if (computed == printed) {
        return {Status::Pass, "printed z-component matches", {}};
    }
    std::ostringstream os;
    os << "printed z-component differs in the P^";
    for (std::size_t i = 0; i < differing.size(); ++i) {
        os << (i ? " and P^" : "") << differing[i];
    }
    os << " terms; P^3 and P^4 terms agree";
    std::vector<Witness> w{{"printed", printed.to_string()}, {"computed", computed.to_string()}};
    w.insert(w.end(), coefficient_witnesses.begin(), coefficient_witnesses.end());
    return {Status::PaperDiscrepancy, os.str(), std::move(w)};
}

CaseResult phi_leading_components()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const PolyMap phi = exponential(catalog::surface_derivation(v), catalog::surface_poly(v));
    const std::string fiber[] = {"y", "z"};
    const auto d2 = degree_in(phi.component("y"), fiber);
    const auto d3 = degree_in(phi.component("z"), fiber);
    ck.that(d2 == std::optional<int>(8), "d2 = 8", d2 ? std::to_string(*d2) : "-inf");
    ck.that(d3 == std::optional<int>(16), "d3 = 16", d3 ? std::to_string(*d3) : "-inf");
    if (!ck.failed()) {
        ck.equal("F2", parse("x^3*y^8", v), homogeneous_component(phi.component("y"), fiber, 8));
        ck.equal("F3", parse("x^5*y^16", v), homogeneous_component(phi.component("z"), fiber, 16));
    }
    return ck.done("d2 = 8, d3 = 16, F2 = x^3*y^8, F3 = x^5*y^16");
}

CaseResult phi_wildness_obstruction()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const std::string fiber[] = {"y", "z"};
    const PolyAuto phi = exponential_automorphism(catalog::surface_derivation(v), catalog::surface_poly(v));
    const auto r = tame_obstruction(phi, "x", fiber);
    ck.that(!r.divisible, "F3 not divisible by F2^2 over Q[x]");
    ck.that(r.verdict == TameVerdict::WildnessCertified, "verdict", std::string(to_string(r.verdict)));
    ck.equal_value("power", 2U, r.power);

    const PolyAuto control = make_triangular(v, Bindings{{"z", parse("x*y^2", v)}});
    const auto rc = tame_obstruction(control, "x", fiber);
    ck.that(rc.divisible && rc.witness.has_value() && *rc.witness == parse("x", v), "control (x, y, z + x*y^2): c = x");
    return ck.done("no c in Q[x] with x^5*y^16 = c*(x^3*y^8)^2; control (x, y, z + x*y^2) gives c = x");
}

CaseResult phi_stable_tame()
{
    Checker ck;
    const VarSet v3 = catalog::xyz();
    const VarSet v4 = catalog::xyzu();
    const PolyMap target = extend_variable(exponential(catalog::surface_derivation(v3), catalog::surface_poly(v3)), "u");
    const Derivation d4 = catalog::surface_derivation(v4);
    const MultiPoly P = catalog::surface_poly(v4);
    const PolyMap word = stable_tame_word(v4, d4, P).evaluate();
    for (const auto &name : v4.names()) {
        ck.equal("component " + name, target.component(name), word.component(name));
    }
    const PolyMap direct = exponential(d4, P);
    ck.that(direct == target, "exp(P d~) = exp(P d) x id");
    const PolyMap reversed = stable_tame_word_point_order(v4, d4, P).evaluate();
    ck.that(reversed == exponential(d4, -P), "tau^-1 o exp(-u d~) o tau o exp(u d~) in point order gives exp(-P d~)");
    return ck.done("exp(P d) x id = tau^-1 exp(-u d~) tau exp(u d~) as ring maps, tau: u -> u + P; composed as "
                   "point maps in the written order it gives exp(-P d~)");
}

// ---------------------------------------------------------------------------
// surface cases

CaseResult surface_fiber_zero()
{
    Checker ck;
    const auto s = danielewski::canonical_surface();
    const auto fd = danielewski::fiber_over(s, Rational(0));
    const auto *split = std::get_if<danielewski::SplitFiber>(&fd.shape);
    ck.that(split != nullptr, "special fiber over 0");
    if (split == nullptr) {
        return ck.done("");
    }
    std::vector<Rational> roots;
    for (const auto &l : split->lines) {
        roots.push_back(l.root);
    }
    ck.that(roots == std::vector<Rational>{Rational(-2), Rational(-1), Rational(1), Rational(2)}, "roots +-1, +-2");
    ck.that(split->reduced(), "reduced");
    ck.that(split->fully_split(), "splits into lines");
    const VarSet &v = s.P.vars();
    ck.equal("P(0, y, z)", parse("-y^4 + 5*y^2 - 4", v), split->reconstruct());

    const auto control = danielewski::split_fiber(parse("x^2*z - y^2", v), "x", Rational(0), "y");
    ck.that(control.lines.size() == 1 && control.lines[0].root == Rational(0) && control.lines[0].multiplicity == 2,
            "x^2*z - y^2 over 0: double line y = 0");
    ck.that(!control.reduced(), "control fiber not reduced");
    return ck.done("fiber over 0: four reduced lines y = -2, -1, 1, 2");
}

CaseResult surface_generic_fibers()
{
    Checker ck;
    const auto s = danielewski::canonical_surface();
    const std::vector<Rational> samples{Rational(-4), Rational(-1), Rational(0), Rational(1), Rational(3)};
    for (const Rational &a : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
        ck.that(danielewski::generic_fiber_check(s, a, samples), "generic fiber over " + a.to_string());
        const auto fd = danielewski::fiber_over(s, a);
        const auto *line = std::get_if<danielewski::GenericLine>(&fd.shape);
        ck.that(line != nullptr && line->parametrization_verified, "fiber_over " + a.to_string() + " is a line");
    }
    return ck.done("fibers over 1, 2, -1, 1/2 are lines parametrized by f");
}

CaseResult surface_fixed_locus()
{
    Checker ck;
    const VarSet v = catalog::xyz();
    const auto r = danielewski::fixed_locus_report(catalog::surface_derivation(v));
    ck.that(r.contained(), "d(Q[x,y,z]) in (x, 2y^2 - 5)");
    ck.equal_value("nonzero images", std::size_t{2}, r.entries.size());
    const auto n = danielewski::fixed_locus_report(catalog::nagata_derivation(v));
    ck.that(!n.contained(), "Nagata: not contained");
    for (const auto &e : n.entries) {
        if (e.generator == "z") {
            ck.equal("Nagata d(z) remainder", parse("-5*y", v), e.remainder);
        }
    }
    return ck.done("both images reduce to 0 modulo (x, 2y^2 - 5); Nagata's d(z) leaves -5*y");
}

// ---------------------------------------------------------------------------
// cocycle cases

Rational expected_component_value(int a)
{
    const int sign = (std::abs(a) % 2 == 1) ? 1 : -1; // (-1)^(|a|-1)
    return Rational(sign * a) / Rational(3);
}

CaseResult cocycle_identities()
{
    Checker ck;
    const auto c = danielewski::build_cocycle();
    ck.that(danielewski::antisymmetric(c), "antisymmetry");
    ck.that(danielewski::satisfies_cocycle_identity(c), "cocycle identity");
    const VarSet x{"x"};
    ck.that(c.transition(1, 2) == laurent_scale(parse("3 + x", x), 2), "g(1,2) = 3x^-2 + x^-1");
    ck.that(c.transition(1, -1) == laurent_scale(parse("2/3*x", x), 2), "g(1,-1) = 2/3 x^-1");
    const auto values = danielewski::component_values(danielewski::canonical_surface());
    std::ostringstream os;
    for (int a : {1, -1, 2, -2}) {
        ck.equal_value("g_" + std::to_string(a) + " on C_" + std::to_string(a), expected_component_value(a),
                       values.at(a));
        // h_a = (f + sigma_a)/x^2 is regular along C_a only if g_a there
        // cancels the linear coefficient of sigma_a.
        ck.that(values.at(a) + c.sigma.at(a).coefficient({1}) == Rational(0), "regularity along C_" + std::to_string(a));
        os << (a == 1 ? "" : ", ") << a << ':' << values.at(a);
    }
    return ck.done("16 pairs antisymmetric, 64 triples satisfy the cocycle identity; component values " + os.str());
}

CaseResult cocycle_no_distinguishing_function()
{
    Checker ck;
    const auto c = danielewski::build_cocycle();
    const auto r = danielewski::distinguishing_function_search(c, 5);
    const auto *none = std::get_if<danielewski::NoSolution>(&r);
    ck.that(none != nullptr, "no distinguishing function up to n = 5");
    std::string n2;
    if (none != nullptr) {
        ck.equal_value("obstructions", std::size_t{5}, none->per_n.size());
        if (none->per_n.size() == 5) {
            using Kind = danielewski::ChartObstruction::Kind;
            ck.that(none->per_n[0].kind == Kind::NotPolynomial, "n = 1: not polynomial");
            const auto &o2 = none->per_n[1];
            ck.that(o2.kind == Kind::ConstantsCollide && o2.a == 1 && o2.b == -1, "n = 2: P_-1(0) = P_1(0)");
            for (int a : c.labels) {
                ck.equal_value("n = 2 offset of " + std::to_string(a), Rational(a * a - 1), o2.offsets.at(a));
            }
            for (std::size_t i = 2; i < 5; ++i) {
                ck.that(none->per_n[i].kind == Kind::ConstantsCollide, "n = " + std::to_string(i + 1) + ": collide");
            }
            n2 = o2.detail;
        }
    }
    std::map<int, MultiPoly> sigma;
    const VarSet x{"x"};
    for (int a : c.labels) {
        sigma.emplace(a, MultiPoly::constant(x, Rational(a)));
    }
    const auto control = danielewski::distinguishing_function_search(
        danielewski::cocycle_from_sigma(c.labels, std::move(sigma), 1), 5);
    const auto *sol = std::get_if<danielewski::Solution>(&control);
    ck.that(sol != nullptr && sol->n == 1, "control cocycle solved at n = 1");
    return ck.done("no solution for n = 1..5; n = 2: " + n2);
}

CaseResult cocycle_tree_relabel()
{
    Checker ck;
    const auto c = danielewski::build_cocycle();
    const auto tree = danielewski::tree_sigma();
    // The tree carries a^2 + a*x/3 for every label, the formula
    // a^2 + (-1)^|a| a*x/3: the two agree on +-2 and swap +1 and -1.
    for (int a : c.labels) {
        const int partner = std::abs(a) == 1 ? -a : a;
        ck.equal("tree sigma_" + std::to_string(a), c.sigma.at(partner), tree.at(a));
    }
    ck.that(!(tree.at(1) == c.sigma.at(1)), "tree labels differ from the transition formula");
    return ck.done("tree labels equal the transition-formula labels with 1 and -1 exchanged");
}

// ---------------------------------------------------------------------------
// graph cases

CaseResult graph_compactification()
{
    Checker ck;
    for (int n : {0, 1, 2, 5}) {
        const auto g = build_paper_compactification(n);
        const std::map<std::string, int> expected{{"F_inf", 0},  {"D", -n},   {"F_0", -2},  {"E_-1", -3},
                                                  {"E_-4", -3},  {"C_1", -1}, {"C_-1", -1}, {"C_2", -1},
                                                  {"C_-2", -1}};
        for (const auto &[name, w] : expected) {
            ck.equal_value("n = " + std::to_string(n) + " weight of " + name, w, g.weight(name));
        }
        ck.equal_value("vertex count", expected.size(), g.vertex_count());
        const auto b = boundary_subgraph(g);
        ck.that(!is_chain(b), "boundary is not a chain");
        ck.that(b.degree("F_0") == 3, "F_0 has three boundary neighbors");
        ck.that(b.connected() && b.edges().size() + 1 == b.vertex_count(), "boundary is a tree");
    }
    return ck.done("weights F_inf:0, D:-n, F_0:-2, E_-1:-3, E_-4:-3, C:-1 x4; boundary is a tree but not a chain");
}

CaseResult graph_fiber_cases()
{
    Checker ck;
    int i = 1;
    for (const auto &g : transversality_cases(1)) {
        ck.that(!can_contract_to_fiber(g).contractible, "case " + std::to_string(i++) + " not contractible");
    }
    for (int k = 2; k <= 4; ++k) {
        ck.that(!can_contract_to_fiber(fiber_candidate(k)).contractible, "D of weight -" + std::to_string(k));
    }
    ck.that(can_contract_to_fiber(WeightedCurveGraph{}.with_vertex("F", 0)).contractible, "single 0-curve");
    return ck.done("none of the three candidate configurations contracts to a smooth fiber");
}

VerificationCase make_case(std::string id, std::string category, std::string title, CaseResult (*fn)())
{
    return VerificationCase{std::move(id), std::move(category), std::move(title), fn};
}

} // namespace

std::vector<VerificationCase> builtin_cases()
{
    std::vector<VerificationCase> out{
        make_case("cocycle-identities", "cocycle", "transition cocycle identities and component values",
                  cocycle_identities),
        make_case("cocycle-no-distinguishing-function", "cocycle", "no function separates the four lines",
                  cocycle_no_distinguishing_function),
        make_case("cocycle-tree-relabel", "cocycle", "weighted-tree labels versus transition formula",
                  cocycle_tree_relabel),
        make_case("derivation-invariance", "derivation", "P is invariant", derivation_invariance),
        make_case("derivation-nilpotency", "derivation", "nilpotency indices of the surface derivation",
                  derivation_nilpotency),
        make_case("graph-compactification", "graph", "dual graph of the compactification", graph_compactification),
        make_case("graph-fiber-cases", "graph", "candidate fibers do not contract", graph_fiber_cases),
        make_case("nagata-exponential", "automorphism", "Nagata's automorphism as an exponential", nagata_exponential),
        make_case("nagata-nilpotency", "derivation", "nilpotency indices of Nagata's derivation", nagata_nilpotency),
        make_case("nagata-stable-tame", "automorphism", "Nagata's automorphism is stably tame", nagata_stable_tame),
        make_case("phi-leading-components", "automorphism", "leading components of exp(P d)", phi_leading_components),
        make_case("phi-roundtrip", "automorphism", "exp(P d) is invertible", phi_roundtrip),
        make_case("phi-stable-tame", "automorphism", "exp(P d) is stably tame", phi_stable_tame),
        make_case("phi-wildness-obstruction", "automorphism", "leading-component obstruction for exp(P d)",
                  phi_wildness_obstruction),
        make_case("phi-y-component", "automorphism", "y-component of exp(P d)", phi_y_component),
        make_case("phi-z-component", "automorphism", "z-component of exp(P d)", phi_z_component),
        make_case("surface-fiber-zero", "surface", "fiber over 0", surface_fiber_zero),
        make_case("surface-fixed-locus", "surface", "fixed locus ideal", surface_fixed_locus),
        make_case("surface-generic-fibers", "surface", "fibers over nonzero points", surface_generic_fibers),
        make_case("surface-printed-quartic", "derivation", "printed invariant quartic", surface_printed_quartic),
    };
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    return out;
}

VerificationCase derivation_file_case(const std::string &id, const std::string &path, unsigned bound)
{
    return VerificationCase{id, "derivation", "nilpotency of " + path, [path, bound]() -> CaseResult {
                                const auto file = parse_derivation(read_file(path));
                                const auto r = nilpotency_certificate(file.derivation, bound);
                                if (const auto *cert = std::get_if<NilpotencyCertificate>(&r)) {
                                    return {Status::Pass, "indices " + join_indices(*cert), {}};
                                }
                                const auto &fail = std::get<NotNilpotentWithinBound>(r);
                                return {Status::Fail,
                                        "not nilpotent on " + fail.generator + " within " + std::to_string(bound),
                                        {{"last iterate", fail.last_iterate.to_string()}}};
                            }};
}

VerificationCase map_pair_case(const std::string &id, const std::string &forward_path, const std::string &inverse_path)
{
    return VerificationCase{
        id, "automorphism", "inverse pair " + forward_path + ", " + inverse_path,
        [forward_path, inverse_path]() -> CaseResult {
            const PolyMap g = parse_map(read_file(forward_path));
            const PolyMap h = parse_map(read_file(inverse_path));
            const auto r = verify_inverse_pair(g, h);
            if (std::holds_alternative<PolyAuto>(r)) {
                return {Status::Pass, "maps are mutually inverse", {}};
            }
            const auto &bad = std::get<NotInverse>(r);
            return {Status::Fail,
                    bad.composition + " differs from the identity on " + bad.variable,
                    {{"component", bad.component.to_string()}}};
        }};
}

RunReport run_suite(const std::vector<VerificationCase> &registry, const std::optional<std::vector<std::string>> &selection,
                    unsigned jobs)
{
    std::vector<const VerificationCase *> chosen;
    if (!selection) {
        for (const auto &c : registry) {
            chosen.push_back(&c);
        }
    } else {
        std::set<std::string> seen;
        for (const auto &id : *selection) {
            auto it = std::find_if(registry.begin(), registry.end(), [&](const auto &c) { return c.id == id; });
            if (it == registry.end()) {
                throw UnknownCase("unknown case id '" + id + "'");
            }
            if (seen.insert(id).second) {
                chosen.push_back(&*it);
            }
        }
    }

    RunReport report;
    report.cases.resize(chosen.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < chosen.size(); i = next++) {
            const VerificationCase &c = *chosen[i];
            CaseOutcome out{c.id, c.category, c.title, {}, 0.0};
            const auto start = std::chrono::steady_clock::now();
            try {
                out.result = c.run();
            } catch (const std::exception &e) {
                out.result = {Status::Fail, std::string("error: ") + e.what(), {}};
            }
            out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            report.cases[i] = std::move(out);
        }
    };
    unsigned n = jobs != 0 ? jobs : std::max(1U, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, chosen.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseOutcome &a, const CaseOutcome &b) { return a.id < b.id; });
    return report;
}

nlohmann::ordered_json report_json(const RunReport &r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["summary"] = {{"total", r.cases.size()},
                    {"pass", r.count(Status::Pass)},
                    {"fail", r.count(Status::Fail)},
                    {"paper_discrepancy", r.count(Status::PaperDiscrepancy)}};
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto &c : r.cases) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["category"] = c.category;
        e["title"] = c.title;
        e["status"] = std::string(to_string(c.result.status));
        e["summary"] = c.result.summary;
        if (c.result.status != Status::Pass) {
            e["witnesses"] = nlohmann::ordered_json::array();
            for (const auto &w : c.result.witnesses) {
                e["witnesses"].push_back({{"label", w.label}, {"value", w.value}});
            }
        }
        if (include_timing) {
            e["seconds"] = c.seconds;
        }
        j["cases"].push_back(std::move(e));
    }
    return j;
}

std::string report_text(const RunReport &r, bool include_timing)
{
    std::ostringstream os;
    for (const auto &c : r.cases) {
        os << '[' << to_string(c.result.status) << "] " << c.id << " (" << c.category << "): " << c.result.summary;
        if (include_timing) {
            os << " [" << std::fixed << std::setprecision(3) << c.seconds << " s]";
            os.unsetf(std::ios::fixed);
        }
        os << '\n';
        if (c.result.status != Status::Pass) {
            for (const auto &w : c.result.witnesses) {
                os << "    " << w.label << ": " << w.value << '\n';
            }
        }
    }
    os << r.cases.size() << " cases: " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
       << r.count(Status::PaperDiscrepancy) << " paper-discrepancy\n";
    return os.str();
}

nlohmann::ordered_json surface_report_json()
{
    const auto s = danielewski::canonical_surface();
    nlohmann::ordered_json j;
    j["fiber_over_0"] = nlohmann::ordered_json::array();
    const auto fd = danielewski::fiber_over(s, Rational(0));
    const auto &split = std::get<danielewski::SplitFiber>(fd.shape);
    for (const auto &l : split.lines) {
        j["fiber_over_0"].push_back({{"y", l.root.to_string()}, {"multiplicity", l.multiplicity}});
    }
    const auto c = danielewski::build_cocycle();
    j["cocycle_ok"] = danielewski::antisymmetric(c) && danielewski::satisfies_cocycle_identity(c);
    j["typo_witnesses"] = nlohmann::ordered_json::array();
    for (auto fn : {surface_printed_quartic, phi_z_component}) {
        const CaseResult r = fn();
        nlohmann::ordered_json w;
        w["status"] = std::string(to_string(r.status));
        w["summary"] = r.summary;
        for (const auto &x : r.witnesses) {
            w[x.label] = x.value;
        }
        j["typo_witnesses"].push_back(std::move(w));
    }
    j["component_values"] = nlohmann::ordered_json::object();
    for (const auto &[a, value] : danielewski::component_values(s)) {
        j["component_values"][std::to_string(a)] = value.to_string();
    }
    j["fixed_locus_contained"] = danielewski::fixed_locus_report(s.derivation).contained();
    return j;
}

std::string surface_report_text()
{
    const auto s = danielewski::canonical_surface();
    std::ostringstream os;
    os << "P = " << s.P << '\n';
    os << "f = " << s.f << '\n';
    os << s.derivation.to_string();
    const auto fd = danielewski::fiber_over(s, Rational(0));
    const auto &split = std::get<danielewski::SplitFiber>(fd.shape);
    os << "fiber over 0:";
    for (const auto &l : split.lines) {
        os << " y = " << l.root << " (multiplicity " << l.multiplicity << ')';
    }
    os << '\n';
    const auto c = danielewski::build_cocycle();
    os << "cocycle ok: "
       << (danielewski::antisymmetric(c) && danielewski::satisfies_cocycle_identity(c) ? "yes" : "no") << '\n';
    os << "fixed locus in (x, 2*y^2 - 5): "
       << (danielewski::fixed_locus_report(s.derivation).contained() ? "yes" : "no") << '\n';
    for (auto fn : {surface_printed_quartic, phi_z_component}) {
        const CaseResult r = fn();
        os << '[' << to_string(r.status) << "] " << r.summary << '\n';
        for (const auto &w : r.witnesses) {
            os << "    " << w.label << ": " << w.value << '\n';
        }
    }
    return os.str();
}

PolyMap exp_command(std::string_view derivation_text, std::string_view multiplier, unsigned bound)
{
    const auto file = parse_derivation(derivation_text);
    const MultiPoly m = parse(multiplier, file.derivation.vars(), file.lets);
    return exponential(file.derivation, m, bound);
}

} // namespace lnd::tools
