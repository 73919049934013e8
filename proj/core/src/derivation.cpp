#include <lndkit/derivation.hpp>

#include <cstdlib>
#include <sstream>

#include <lndkit/parser.hpp>

#include "polyauto_access.hpp"

namespace lnd {

unsigned default_nilpotency_bound()
{
    if (const char *env = std::getenv("LNDKIT_NILPOTENCY_BOUND")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1'000'000) {
            return static_cast<unsigned>(v);
        }
    }
    return kDefaultNilpotencyBound;
}

Derivation::Derivation(VarSet vars) : vars_(std::move(vars))
{
    images_.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        images_.emplace_back(vars_);
    }
}

Derivation::Derivation(VarSet vars, const Bindings &images) : Derivation(std::move(vars))
{
    for (const auto &[name, value] : images) {
        if (!(value.vars() == vars_)) {
            throw VarSetMismatch("Derivation: image of '" + name + "' lives in a different variable set");
        }
        images_[vars_.index(name)] = value;
    }
}

MultiPoly Derivation::apply(const MultiPoly &p) const
{
    if (!(p.vars() == vars_)) {
        throw VarSetMismatch("Derivation::apply: polynomial lives in a different variable set");
    }
    MultiPoly out(vars_);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (images_[i].is_zero()) {
            continue;
        }
        MultiPoly dp = partial(p, vars_.name(i));
        if (!dp.is_zero()) {
            out += dp * images_[i];
        }
    }
    return out;
}

Derivation Derivation::scaled(const MultiPoly &m) const
{
    if (!(m.vars() == vars_)) {
        throw VarSetMismatch("Derivation::scaled: multiplier lives in a different variable set");
    }
    Derivation out(vars_);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        out.images_[i] = m * images_[i];
    }
    return out;
}

Derivation Derivation::extended(std::string name) const
{
    VarSet wider = vars_.with(std::move(name));
    Derivation out(wider);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        out.images_[i] = images_[i].rebase(wider);
    }
    return out;
}

std::string Derivation::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        os << 'd' << vars_.name(i) << " = " << images_[i] << '\n';
    }
    return os.str();
}

unsigned NilpotencyCertificate::index_of(std::string_view generator) const
{
    for (const auto &e : entries) {
        if (e.generator == generator) {
            return e.index;
        }
    }
    throw UnknownVariable("no certificate entry for '" + std::string(generator) + "'");
}

namespace {

// d(g), d^2(g), ... up to the first zero, or the failure record.
std::variant<std::vector<MultiPoly>, NotNilpotentWithinBound> iterate_to_zero(const Derivation &d, const MultiPoly &g,
                                                                               const std::string &name, unsigned bound)
{
    std::vector<MultiPoly> chain;
    MultiPoly current = g;
    for (unsigned n = 1; n <= bound; ++n) {
        current = d.apply(current);
        chain.push_back(current);
        if (current.is_zero()) {
            return chain;
        }
    }
    return NotNilpotentWithinBound{name, bound, chain.empty() ? g : chain.back()};
}

} // namespace

NilpotencyResult nilpotency_certificate(const Derivation &d, unsigned bound)
{
    if (bound == 0) {
        throw std::invalid_argument("nilpotency_certificate: bound must be >= 1");
    }
    NilpotencyCertificate cert;
    for (std::size_t i = 0; i < d.vars().size(); ++i) {
        const std::string &name = d.vars().name(i);
        auto r = iterate_to_zero(d, MultiPoly::variable(d.vars(), name), name, bound);
        if (auto *fail = std::get_if<NotNilpotentWithinBound>(&r)) {
            return *fail;
        }
        auto chain = std::get<std::vector<MultiPoly>>(std::move(r));
        const auto index = static_cast<unsigned>(chain.size());
        cert.entries.push_back({name, index, std::move(chain)});
    }
    return cert;
}

NilpotencyBoundExceeded::NilpotencyBoundExceeded(NotNilpotentWithinBound detail)
    : std::runtime_error("derivation not nilpotent on '" + detail.generator + "' within " +
                         std::to_string(detail.bound) + " iterations"),
      detail_(std::move(detail))
{
}

namespace {

void check_multiplier(const Derivation &d, const MultiPoly &multiplier, const char *op)
{
    if (!(multiplier.vars() == d.vars())) {
        throw VarSetMismatch(std::string(op) + ": multiplier lives in a different variable set");
    }
    if (!d.in_kernel(multiplier)) {
        throw MultiplierNotInKernel(std::string(op) + ": multiplier not annihilated by the derivation");
    }
}

MultiPoly series(const Derivation &d, const MultiPoly &multiplier, const MultiPoly &h, const std::string &label,
                 unsigned bound)
{
    auto r = iterate_to_zero(d, h, label, bound);
    if (auto *fail = std::get_if<NotNilpotentWithinBound>(&r)) {
        throw NilpotencyBoundExceeded(*fail);
    }
    const auto &chain = std::get<std::vector<MultiPoly>>(r);
    MultiPoly sum = h;
    MultiPoly mk = MultiPoly::constant(d.vars(), 1);
    for (std::size_t k = 1; k <= chain.size(); ++k) {
        if (chain[k - 1].is_zero()) {
            break;
        }
        mk *= multiplier;
        sum += (mk * chain[k - 1]) * (Rational(1) / factorial(static_cast<unsigned>(k)));
    }
    return sum;
}

} // namespace

PolyMap exponential(const Derivation &d, const MultiPoly &multiplier, unsigned bound)
{
    check_multiplier(d, multiplier, "exponential");
    if (multiplier.is_zero()) {
        return PolyMap::identity(d.vars());
    }
    Bindings components;
    for (std::size_t i = 0; i < d.vars().size(); ++i) {
        const std::string &name = d.vars().name(i);
        components.emplace(name, series(d, multiplier, MultiPoly::variable(d.vars(), name), name, bound));
    }
    return PolyMap(d.vars(), components);
}

MultiPoly apply_exponential(const Derivation &d, const MultiPoly &multiplier, const MultiPoly &h, unsigned bound)
{
    check_multiplier(d, multiplier, "apply_exponential");
    if (!(h.vars() == d.vars())) {
        throw VarSetMismatch("apply_exponential: argument lives in a different variable set");
    }
    if (multiplier.is_zero()) {
        return h;
    }
    return series(d, multiplier, h, "argument", bound);
}

PolyAuto exponential_automorphism(const Derivation &d, const MultiPoly &multiplier, unsigned bound)
{
    PolyMap forward = exponential(d, multiplier, bound);
    PolyMap inverse = exponential(d, -multiplier, bound);
    for (std::size_t i = 0; i < d.vars().size(); ++i) {
        const MultiPoly g = MultiPoly::variable(d.vars(), d.vars().name(i));
        // Pullback along the inverse of a forward component, and vice versa.
        if (!(apply_exponential(d, -multiplier, forward.components()[i], bound) == g) ||
            !(apply_exponential(d, multiplier, inverse.components()[i], bound) == g)) {
            throw std::logic_error("exponential_automorphism: round trip fails on '" + d.vars().name(i) + "'");
        }
    }
    return PolyAutoAccess::make(std::move(forward), std::move(inverse));
}

MapWord &MapWord::then(PolyMap m)
{
    if (!(m.vars() == vars_)) {
        throw VarSetMismatch("MapWord::then: map lives in a different variable set");
    }
    factors_.emplace_back(std::move(m));
    return *this;
}

MapWord &MapWord::then_exponential(Derivation d, MultiPoly multiplier)
{
    if (!(d.vars() == vars_)) {
        throw VarSetMismatch("MapWord::then_exponential: derivation lives in a different variable set");
    }
    check_multiplier(d, multiplier, "MapWord::then_exponential");
    factors_.emplace_back(Exponential{std::move(d), std::move(multiplier)});
    return *this;
}

MultiPoly MapWord::pullback(const MultiPoly &p) const
{
    // p o f_1 o ... o f_k = f_k^*( ... f_1^*(p)).
    MultiPoly h = p;
    for (const auto &f : factors_) {
        if (const auto *m = std::get_if<PolyMap>(&f)) {
            h = m->pullback(h);
        } else {
            const auto &e = std::get<Exponential>(f);
            h = apply_exponential(e.derivation, e.multiplier, h);
        }
    }
    return h;
}

PolyMap MapWord::evaluate() const
{
    Bindings components;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        components.emplace(vars_.name(i), pullback(MultiPoly::variable(vars_, vars_.name(i))));
    }
    return PolyMap(vars_, components);
}

std::vector<MultiPoly> fixed_ideal_generators(const Derivation &d, const MultiPoly &multiplier)
{
    std::vector<MultiPoly> out;
    if (multiplier.is_zero()) {
        return out;
    }
    for (const auto &img : d.images()) {
        if (!img.is_zero()) {
            out.push_back(multiplier * img);
        }
    }
    return out;
}

DerivationFile parse_derivation(std::string_view text)
{
    Script script = parse_script(text);
    Bindings images;
    for (const auto &a : script.assignments) {
        if (a.lhs.size() < 2 || a.lhs[0] != 'd' || !script.vars.contains(std::string_view(a.lhs).substr(1))) {
            throw ParseError("line " + std::to_string(a.line) + ": expected 'd<variable> = ...', got '" + a.lhs + "'",
                             0, a.line);
        }
        const std::string var = a.lhs.substr(1);
        if (images.count(var) != 0) {
            throw ParseError("line " + std::to_string(a.line) + ": duplicate image for '" + var + "'", 0, a.line);
        }
        images.emplace(var, script.expand(a));
    }
    return DerivationFile{Derivation(script.vars, images), std::move(script.lets)};
}

} // namespace lnd
