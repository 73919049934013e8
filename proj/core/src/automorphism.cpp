#include <lndkit/automorphism.hpp>

#include <sstream>

#include <lndkit/parser.hpp>

#include "polyauto_access.hpp"

namespace lnd {

PolyMap::PolyMap(VarSet vars, std::vector<MultiPoly> components)
    : vars_(std::move(vars)), components_(std::move(components))
{
}

PolyMap PolyMap::identity(VarSet vars) { return PolyMap(std::move(vars), Bindings{}); }

PolyMap::PolyMap(VarSet vars, const Bindings &components) : vars_(std::move(vars))
{
    components_.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        components_.push_back(MultiPoly::variable(vars_, vars_.name(i)));
    }
    for (const auto &[name, value] : components) {
        if (!(value.vars() == vars_)) {
            throw VarSetMismatch("PolyMap: component for '" + name + "' lives in a different variable set");
        }
        components_[vars_.index(name)] = value;
    }
}

bool PolyMap::is_identity() const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!(components_[i] == MultiPoly::variable(vars_, vars_.name(i)))) {
            return false;
        }
    }
    return true;
}

MultiPoly PolyMap::pullback(const MultiPoly &p) const
{
    Bindings b;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        b.emplace(vars_.name(i), components_[i]);
    }
    return substitute(p, b);
}

std::string PolyMap::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        os << vars_.name(i) << "' = " << components_[i] << '\n';
    }
    return os.str();
}

PolyMap compose(const PolyMap &g, const PolyMap &h)
{
    if (!(g.vars_ == h.vars_)) {
        throw VarSetMismatch("compose: maps live on different variable sets");
    }
    std::vector<MultiPoly> out;
    out.reserve(g.components_.size());
    for (const auto &c : g.components_) {
        out.push_back(h.pullback(c));
    }
    return PolyMap(g.vars_, std::move(out));
}

PolyMap extend_variable(const PolyMap &m, const std::string &newvar)
{
    VarSet wider = m.vars_.with(newvar);
    std::vector<MultiPoly> out;
    for (const auto &c : m.components_) {
        out.push_back(c.rebase(wider));
    }
    out.push_back(MultiPoly::variable(wider, newvar));
    return PolyMap(std::move(wider), std::move(out));
}

PolyAuto PolyAuto::identity(VarSet vars)
{
    auto id = PolyMap::identity(std::move(vars));
    return PolyAuto(id, id);
}

namespace {

std::optional<NotInverse> first_non_identity(const PolyMap &m, const char *label)
{
    for (std::size_t i = 0; i < m.vars().size(); ++i) {
        const auto &name = m.vars().name(i);
        if (!(m.components()[i] == MultiPoly::variable(m.vars(), name))) {
            return NotInverse{label, name, m.components()[i]};
        }
    }
    return std::nullopt;
}

PolyAuto certify(const PolyMap &g, const PolyMap &h, const char *context)
{
    auto r = verify_inverse_pair(g, h);
    if (auto *bad = std::get_if<NotInverse>(&r)) {
        throw std::logic_error(std::string(context) + ": result failed inverse certification on '" +
                               bad->variable + "'");
    }
    return std::get<PolyAuto>(std::move(r));
}

} // namespace

InverseCheck verify_inverse_pair(const PolyMap &g, const PolyMap &h)
{
    if (!(g.vars() == h.vars())) {
        throw VarSetMismatch("verify_inverse_pair: maps live on different variable sets");
    }
    if (auto bad = first_non_identity(compose(g, h), "g o h")) {
        return *bad;
    }
    if (auto bad = first_non_identity(compose(h, g), "h o g")) {
        return *bad;
    }
    return PolyAutoAccess::make(g, h);
}

PolyAuto make_triangular(const VarSet &vars, const Bindings &shifts)
{
    for (const auto &[name, shift] : shifts) {
        const std::size_t i = vars.index(name);
        if (!(shift.vars() == vars)) {
            throw VarSetMismatch("make_triangular: shift for '" + name + "' lives in a different variable set");
        }
        std::vector<std::string> earlier(vars.names().begin(), vars.names().begin() + static_cast<std::ptrdiff_t>(i));
        if (!shift.uses_only(earlier)) {
            throw NotTriangular("make_triangular: shift for '" + name + "' uses '" + name +
                                "' or a later variable");
        }
    }
    Bindings forward;
    Bindings inverse;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string &name = vars.name(i);
        const MultiPoly v = MultiPoly::variable(vars, name);
        auto it = shifts.find(name);
        if (it == shifts.end() || it->second.is_zero()) {
            inverse.emplace(name, v);
            continue;
        }
        forward.emplace(name, v + it->second);
        // Back-substitution: the shift only sees earlier coordinates, whose
        // inverse components are already known.
        inverse.emplace(name, v - substitute(it->second, inverse));
    }
    return certify(PolyMap(vars, forward), PolyMap(vars, inverse), "make_triangular");
}

// Products and extensions of certified pairs are again inverse pairs, so these
// skip the (potentially expensive) substitution check.
PolyAuto compose(const PolyAuto &g, const PolyAuto &h)
{
    return PolyAutoAccess::make(compose(g.forward(), h.forward()), compose(h.inverse_map(), g.inverse_map()));
}

PolyAuto conjugate(const PolyAuto &a, const PolyAuto &by)
{
    return compose(by.inverse(), compose(a, by));
}

PolyAuto extend_variable(const PolyAuto &a, const std::string &newvar)
{
    return PolyAutoAccess::make(extend_variable(a.forward(), newvar), extend_variable(a.inverse_map(), newvar));
}

std::string_view to_string(TameVerdict v)
{
    switch (v) {
    case TameVerdict::NoObstruction:
        return "no obstruction";
    case TameVerdict::WildnessCertified:
        return "wildness certified";
    }
    return "unknown";
}

TameObstructionReport tame_obstruction(const PolyAuto &a, const std::string &base_var,
                                       std::span<const std::string> fiber_vars)
{
    const VarSet &vars = a.vars();
    if (fiber_vars.size() != 2) {
        throw std::invalid_argument("tame_obstruction: exactly two fiber variables are required");
    }
    if (!(a.forward().component(base_var) == MultiPoly::variable(vars, base_var))) {
        throw NotBaseAutomorphism("tame_obstruction: automorphism does not fix '" + base_var + "'");
    }
    const MultiPoly &c2 = a.forward().component(fiber_vars[0]);
    const MultiPoly &c3 = a.forward().component(fiber_vars[1]);
    const auto d2 = degree_in(c2, fiber_vars);
    const auto d3 = degree_in(c3, fiber_vars);
    if (!d2 || !d3) {
        throw std::logic_error("tame_obstruction: zero component in an automorphism");
    }
    TameObstructionReport r{*d2, *d3, homogeneous_component(c2, fiber_vars, *d2),
                            homogeneous_component(c3, fiber_vars, *d3), 0, false, false, std::nullopt,
                            TameVerdict::NoObstruction};
    if (r.d2 <= 1 && r.d3 <= 1) {
        r.degenerate = true;
        r.divisible = true;
        r.verdict = TameVerdict::NoObstruction;
        return r;
    }
    const bool second_is_low = r.d2 <= r.d3;
    const int d_lo = second_is_low ? r.d2 : r.d3;
    const int d_hi = second_is_low ? r.d3 : r.d2;
    const MultiPoly &f_lo = second_is_low ? r.F2 : r.F3;
    const MultiPoly &f_hi = second_is_low ? r.F3 : r.F2;
    if (d_lo <= 0 || d_hi % d_lo != 0) {
        r.divisible = false;
        r.verdict = TameVerdict::WildnessCertified;
        return r;
    }
    r.power = static_cast<unsigned>(d_hi / d_lo);
    auto q = divide_exact(f_hi, f_lo.pow(r.power));
    const std::string base[] = {base_var};
    r.divisible = q.has_value() && q->uses_only(base);
    if (r.divisible) {
        r.witness = std::move(q);
    }
    r.verdict = r.divisible ? TameVerdict::NoObstruction : TameVerdict::WildnessCertified;
    return r;
}

PolyMap parse_map(std::string_view text)
{
    Script script = parse_script(text);
    Bindings comps;
    for (const auto &a : script.assignments) {
        if (a.lhs.size() < 2 || a.lhs.back() != '\'' ||
            !script.vars.contains(std::string_view(a.lhs).substr(0, a.lhs.size() - 1))) {
            throw ParseError("line " + std::to_string(a.line) + ": expected \"<variable>' = ...\", got '" + a.lhs + "'",
                             0, a.line);
        }
        const std::string var = a.lhs.substr(0, a.lhs.size() - 1);
        if (comps.count(var) != 0) {
            throw ParseError("line " + std::to_string(a.line) + ": duplicate component for '" + var + "'", 0, a.line);
        }
        comps.emplace(var, script.expand(a));
    }
    return PolyMap(script.vars, comps);
}

} // namespace lnd
