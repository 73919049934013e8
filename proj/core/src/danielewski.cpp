#include <lndkit/danielewski.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <lndkit/catalog.hpp>
#include <lndkit/parser.hpp>

namespace lnd::danielewski {

SurfaceData canonical_surface()
{
    const VarSet vars = catalog::xyz();
    SurfaceData s{catalog::f_poly(vars), catalog::surface_poly(vars), catalog::displayed_quartic(vars),
                  catalog::surface_derivation(vars)};
    const MultiPoly one = MultiPoly::constant(vars, 1);
    const MultiPoly product = (s.f + one) * (s.f + MultiPoly::constant(vars, 4));
    const MultiPoly xy = parse("x*y", vars);
    if (!(s.P == xy - product)) {
        throw std::logic_error("canonical_surface: P != x*y - (f+1)(f+4)");
    }
    if (!s.derivation.in_kernel(s.P)) {
        throw std::logic_error("canonical_surface: derivation does not annihilate P");
    }
    if (!(s.displayed == product)) {
        throw std::logic_error("canonical_surface: printed quartic != (f+1)(f+4)");
    }
    return s;
}

DisplayDiscrepancy display_discrepancy(const SurfaceData &s)
{
    const MultiPoly xy = parse("x*y", s.P.vars());
    MultiPoly image = s.derivation.apply(s.displayed);
    const bool annihilated = image.is_zero();
    return DisplayDiscrepancy{s.displayed, xy - s.P, std::move(image), s.displayed == xy - s.P, annihilated};
}

// ---------------------------------------------------------------------------
// Fibers

namespace {

using Dense = std::vector<Rational>; // coefficient of t^i at index i

void trim(Dense &c)
{
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
    }
}

Rational eval(const Dense &c, const Rational &t)
{
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

// c / (t - r), assuming r is a root.
Dense deflate(const Dense &c, const Rational &r)
{
    Dense q(c.size() - 1);
    Rational carry(0);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        carry = carry * r + c[i + 1];
        q[i] = carry;
    }
    return q;
}

// Positive divisors of |n| by trial division; nullopt if |n| is too large to
// enumerate cheaply.
std::optional<std::vector<BigInt>> divisors(BigInt n)
{
    if (n < 0) {
        n = -n;
    }
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    constexpr unsigned long kLimit = 2'000'000;
    unsigned long steps = 0;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (++steps > kLimit) {
            return std::nullopt;
        }
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::pair<std::vector<FiberLine>, Dense> rational_roots(Dense c)
{
    std::vector<FiberLine> lines;
    trim(c);
    if (c.size() <= 1) {
        return {lines, c};
    }
    unsigned zero_mult = 0;
    while (c.size() > 1 && c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) {
        lines.push_back({Rational(0), zero_mult});
    }
    if (c.size() <= 1) {
        return {lines, c};
    }
    // Integer multiple with the same roots.
    BigInt lcm = 1;
    for (const auto &q : c) {
        const BigInt d = q.denominator();
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    const BigInt a0 = (c.front() * Rational(lcm)).numerator();
    const BigInt an = (c.back() * Rational(lcm)).numerator();
    auto ps = divisors(a0);
    auto qs = divisors(an);
    if (!ps || !qs) {
        return {lines, c};
    }
    std::vector<Rational> candidates;
    for (const auto &p : *ps) {
        for (const auto &q : *qs) {
            candidates.emplace_back(p, q);
            candidates.emplace_back(-p, q);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto &r : candidates) {
        unsigned mult = 0;
        while (c.size() > 1 && eval(c, r).is_zero()) {
            c = deflate(c, r);
            ++mult;
        }
        if (mult > 0) {
            lines.push_back({r, mult});
        }
    }
    std::sort(lines.begin(), lines.end(), [](const FiberLine &l, const FiberLine &r) { return l.root < r.root; });
    return {lines, c};
}

} // namespace

bool SplitFiber::reduced() const
{
    return std::all_of(lines.begin(), lines.end(), [](const FiberLine &l) { return l.multiplicity == 1; });
}

MultiPoly SplitFiber::reconstruct() const
{
    const VarSet &vars = unfactored.vars();
    MultiPoly acc = unfactored;
    const MultiPoly t = MultiPoly::variable(vars, line_var);
    for (const auto &l : lines) {
        acc *= (t - MultiPoly::constant(vars, l.root)).pow(l.multiplicity);
    }
    return acc;
}

SplitFiber split_fiber(const MultiPoly &equation, const std::string &base_var, const Rational &at,
                       const std::string &line_var)
{
    const VarSet &vars = equation.vars();
    const MultiPoly restricted = evaluate_at(equation, {{base_var, at}});
    const std::string only[] = {line_var};
    SplitFiber out{line_var, {}, restricted};
    if (!restricted.uses_only(only) || restricted.is_zero()) {
        out.univariate = false;
        return out;
    }
    const std::size_t vi = vars.index(line_var);
    Dense dense(restricted.max_exponent(line_var) + 1, Rational(0));
    for (const auto &[e, c] : restricted.terms()) {
        dense[e[vi]] = c;
    }
    auto [lines, rest] = rational_roots(std::move(dense));
    out.lines = std::move(lines);
    MultiPoly remaining(vars);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        Exponents e(vars.size(), 0);
        e[vi] = static_cast<unsigned>(i);
        remaining += MultiPoly::monomial(vars, std::move(e), rest[i]);
    }
    out.unfactored = std::move(remaining);
    return out;
}

std::vector<Rational> default_fiber_samples() { return {Rational(-4), Rational(-1), Rational(0), Rational(1), Rational(3)}; }

bool generic_fiber_check(const SurfaceData &s, const Rational &a, std::span<const Rational> samples)
{
    if (a.is_zero()) {
        throw std::invalid_argument("generic_fiber_check: base value must be nonzero");
    }
    for (const auto &f0 : samples) {
        const Rational y = (f0 + Rational(1)) * (f0 + Rational(4)) / a;
        const Rational z = (f0 + y * y) / a;
        const MultiPoly value = evaluate_at(s.P, {{"x", a}, {"y", y}, {"z", z}});
        const MultiPoly f_value = evaluate_at(s.f, {{"x", a}, {"y", y}, {"z", z}});
        if (!value.is_zero() || !(f_value.constant_value() == f0)) {
            return false;
        }
    }
    return true;
}

FiberDecomposition fiber_over(const SurfaceData &s, const Rational &a)
{
    if (a.is_zero()) {
        return FiberDecomposition{a, split_fiber(s.P, "x", a, "y")};
    }
    const auto samples = default_fiber_samples();
    return FiberDecomposition{a, GenericLine{generic_fiber_check(s, a, samples)}};
}

// ---------------------------------------------------------------------------
// Fixed locus

bool FixedLocusReport::contained() const
{
    return std::all_of(entries.begin(), entries.end(), [](const Entry &e) { return e.remainder.is_zero(); });
}

FixedLocusReport fixed_locus_report(const Derivation &d, const std::string &base_var, const std::string &line_var,
                                    const MultiPoly &modulus)
{
    FixedLocusReport report;
    for (std::size_t i = 0; i < d.vars().size(); ++i) {
        const MultiPoly &img = d.images()[i];
        if (img.is_zero()) {
            continue;
        }
        MultiPoly at_zero = evaluate_at(img, {{base_var, Rational(0)}});
        MultiPoly rem = remainder_in(at_zero, line_var, modulus.rebase(d.vars()));
        report.entries.push_back({d.vars().name(i), img, std::move(at_zero), std::move(rem)});
    }
    return report;
}

FixedLocusReport fixed_locus_report(const Derivation &d)
{
    return fixed_locus_report(d, "x", "y", parse("2*y^2 - 5", d.vars()));
}

// ---------------------------------------------------------------------------
// Cocycle

namespace {

const VarSet &x_ring()
{
    static const VarSet vars{"x"};
    return vars;
}

int parity_sign(int a) { return (std::abs(a) % 2 == 0) ? 1 : -1; }

} // namespace

CocycleData cocycle_from_sigma(std::vector<int> labels, std::map<int, MultiPoly> sigma, unsigned shift)
{
    CocycleData c{std::move(labels), shift, std::move(sigma), {}};
    for (int a : c.labels) {
        for (int b : c.labels) {
            c.g.emplace(std::make_pair(a, b), laurent_scale(c.sigma.at(b) - c.sigma.at(a), shift, "x"));
        }
    }
    return c;
}

LaurentPoly displayed_transition(int a, int b)
{
    const VarSet &vars = x_ring();
    const MultiPoly x = MultiPoly::variable(vars, "x");
    const Rational squares(static_cast<std::int64_t>(b) * b - static_cast<std::int64_t>(a) * a);
    const Rational linear = Rational(parity_sign(b) * b - parity_sign(a) * a) / Rational(3);
    return laurent_scale(MultiPoly::constant(vars, squares) + x * linear, 2, "x");
}

CocycleData build_cocycle()
{
    const VarSet &vars = x_ring();
    const MultiPoly x = MultiPoly::variable(vars, "x");
    std::vector<int> labels{1, -1, 2, -2};
    std::map<int, MultiPoly> sigma;
    for (int a : labels) {
        sigma.emplace(a, MultiPoly::constant(vars, Rational(a * a)) + x * (Rational(parity_sign(a) * a) / Rational(3)));
    }
    CocycleData c = cocycle_from_sigma(labels, std::move(sigma), 2);
    for (int a : c.labels) {
        for (int b : c.labels) {
            if (!(c.transition(a, b) == displayed_transition(a, b))) {
                throw std::logic_error("build_cocycle: sigma encoding disagrees with the transition formula at (" +
                                       std::to_string(a) + ", " + std::to_string(b) + ")");
            }
        }
    }
    if (!antisymmetric(c) || !satisfies_cocycle_identity(c)) {
        throw std::logic_error("build_cocycle: cocycle identities fail");
    }
    return c;
}

std::map<int, MultiPoly> tree_sigma()
{
    const VarSet &vars = x_ring();
    return {{1, parse("1 + 1/3*x", vars)},
            {-1, parse("1 - 1/3*x", vars)},
            {2, parse("4 + 2/3*x", vars)},
            {-2, parse("4 - 2/3*x", vars)}};
}

bool antisymmetric(const CocycleData &c)
{
    for (int a : c.labels) {
        for (int b : c.labels) {
            if (!(c.transition(a, b) == -c.transition(b, a))) {
                return false;
            }
        }
    }
    return true;
}

bool satisfies_cocycle_identity(const CocycleData &c)
{
    for (int a : c.labels) {
        for (int b : c.labels) {
            for (int e : c.labels) {
                if (!(c.transition(a, b) + c.transition(b, e) == c.transition(a, e))) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::map<int, Rational> component_values(const SurfaceData &s)
{
    const VarSet &vars = s.P.vars();
    const MultiPoly one = MultiPoly::constant(vars, 1);
    const MultiPoly four = MultiPoly::constant(vars, 4);
    // On S, x*y = (f+1)(f+4), so y/(f+4) = (f+1)/x and y/(f+1) = (f+4)/x.
    if (!(parse("x*y", vars) - (s.f + one) * (s.f + four) == s.P)) {
        throw std::logic_error("component_values: x*y - (f+1)(f+4) != P");
    }
    std::map<int, Rational> out;
    for (int a : {1, -1, 2, -2}) {
        const std::map<std::string, Rational, std::less<>> point{{"x", Rational(0)}, {"y", Rational(a)}, {"z", Rational(0)}};
        const Rational y = *evaluate_at(MultiPoly::variable(vars, "y"), point).constant_value();
        const Rational f = *evaluate_at(s.f, point).constant_value();
        const Rational den = std::abs(a) == 1 ? f + Rational(4) : f + Rational(1);
        if (den.is_zero()) {
            throw std::logic_error("component_values: pole on C_" + std::to_string(a));
        }
        out.emplace(a, y / den);
    }
    return out;
}

DistinguishingResult distinguishing_function_search(const CocycleData &c, unsigned max_n)
{
    if (max_n == 0) {
        throw std::invalid_argument("distinguishing_function_search: max_n must be >= 1");
    }
    if (c.labels.size() < 2) {
        throw std::invalid_argument("distinguishing_function_search: need at least two charts");
    }
    NoSolution none;
    const int base = c.labels.front();
    for (unsigned n = 1; n <= max_n; ++n) {
        // P_b - P_a must equal x^n g(a, b) and so be a polynomial.
        std::optional<ChartObstruction> obstruction;
        for (int a : c.labels) {
            for (int b : c.labels) {
                if (!obstruction && a != b && !c.transition(a, b).times_power(static_cast<int>(n)).is_polynomial()) {
                    std::ostringstream os;
                    os << "x^" << n << " * g(" << a << "," << b << ") = "
                       << c.transition(a, b).times_power(static_cast<int>(n)) << " is not a polynomial";
                    obstruction = ChartObstruction{n, ChartObstruction::Kind::NotPolynomial, a, b, {}, os.str()};
                }
            }
        }
        if (obstruction) {
            none.per_n.push_back(std::move(*obstruction));
            continue;
        }

        std::map<int, MultiPoly> P;
        std::map<int, Rational> offsets;
        for (int b : c.labels) {
            MultiPoly pb = *c.transition(base, b).times_power(static_cast<int>(n)).to_polynomial();
            offsets.emplace(b, *evaluate_at(pb, {{"x", Rational(0)}}).constant_value());
            P.emplace(b, std::move(pb));
        }
        for (std::size_t i = 0; i < c.labels.size() && !obstruction; ++i) {
            for (std::size_t j = i + 1; j < c.labels.size() && !obstruction; ++j) {
                const int a = c.labels[i];
                const int b = c.labels[j];
                if (offsets.at(a) == offsets.at(b)) {
                    const bool all_equal = std::all_of(offsets.begin(), offsets.end(),
                                                       [&](const auto &kv) { return kv.second == offsets.at(a); });
                    std::ostringstream os;
                    if (all_equal) {
                        os << "x^" << n << " * g has no constant term: every P_a(0) is forced equal";
                    } else {
                        os << "P_b(0) = (x^" << n << " * g(a,b))(0) + P_a(0) forces P_" << b << "(0) = P_" << a
                           << "(0)";
                    }
                    obstruction = ChartObstruction{n, ChartObstruction::Kind::ConstantsCollide, a, b, offsets, os.str()};
                }
            }
        }
        if (obstruction) {
            none.per_n.push_back(std::move(*obstruction));
            continue;
        }
        return Solution{n, std::move(P)};
    }
    return none;
}

} // namespace lnd::danielewski
