#include <lndkit/polynomial.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace lnd {

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names)
{
    std::unordered_set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw std::invalid_argument("VarSet: empty variable name");
        }
        if (!seen.insert(n).second) {
            throw std::invalid_argument("VarSet: duplicate variable '" + n + "'");
        }
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const
{
    const auto &ns = *names_;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

VarSet VarSet::with(std::string name) const
{
    if (contains(name)) {
        throw std::invalid_argument("VarSet: variable '" + name + "' already present");
    }
    auto ns = *names_;
    ns.push_back(std::move(name));
    return VarSet(std::move(ns));
}

bool operator==(const VarSet &a, const VarSet &b) { return a.names_ == b.names_ || *a.names_ == *b.names_; }

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VarSet vars, const Rational &c)
{
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSet vars, std::string_view name)
{
    Exponents e(vars.size(), 0);
    e[vars.index(name)] = 1;
    return monomial(std::move(vars), std::move(e));
}

MultiPoly MultiPoly::monomial(VarSet vars, Exponents exps, const Rational &c)
{
    if (exps.size() != vars.size()) {
        throw std::invalid_argument("MultiPoly: exponent vector length does not match VarSet");
    }
    MultiPoly p(std::move(vars));
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](unsigned e) { return e == 0; }));
}

std::optional<Rational> MultiPoly::constant_value() const
{
    if (!is_constant()) {
        return std::nullopt;
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const MultiPoly::TermMap::value_type &MultiPoly::leading_term() const
{
    if (terms_.empty()) {
        throw std::domain_error("leading_term of the zero polynomial");
    }
    return *terms_.begin();
}

bool MultiPoly::uses_only(std::span<const std::string> names) const
{
    std::vector<bool> allowed(vars_.size(), false);
    for (const auto &n : names) {
        if (auto i = vars_.find(n)) {
            allowed[*i] = true;
        }
    }
    for (const auto &[e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0 && !allowed[i]) {
                return false;
            }
        }
    }
    return true;
}

unsigned MultiPoly::max_exponent(std::string_view name) const
{
    const std::size_t i = vars_.index(name);
    unsigned m = 0;
    for (const auto &[e, c] : terms_) {
        m = std::max(m, e[i]);
    }
    return m;
}

MultiPoly MultiPoly::rebase(const VarSet &target) const
{
    if (target == vars_) {
        return *this;
    }
    std::vector<std::optional<std::size_t>> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        where[i] = target.find(vars_.name(i));
    }
    MultiPoly out(target);
    for (const auto &[e, c] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!where[i]) {
                throw UnknownVariable("rebase: variable '" + vars_.name(i) + "' missing from target");
            }
            ne[*where[i]] = e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

void MultiPoly::add_term(const Exponents &e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::require_same_vars(const MultiPoly &o, const char *op) const
{
    if (!(vars_ == o.vars_)) {
        throw VarSetMismatch(std::string(op) + ": operands live in different variable sets");
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out(vars_);
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), e, -c);
    }
    return out;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    require_same_vars(o, "add");
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    require_same_vars(o, "sub");
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    a.require_same_vars(b, "mul");
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += vars_.name(i);
            if (e[i] > 1) {
                mono += '^' + std::to_string(e[i]);
            }
        }
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        if (mono.empty()) {
            os << mag;
        } else if (mag == Rational(1)) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const MultiPoly &p) { return os << p.to_string(); }

MultiPoly substitute(const MultiPoly &p, const Bindings &bindings)
{
    const VarSet &vars = p.vars();
    const std::size_t n = vars.size();
    std::vector<const MultiPoly *> image(n, nullptr);
    for (const auto &[name, value] : bindings) {
        const std::size_t i = vars.index(name);
        if (!(value.vars() == vars)) {
            throw VarSetMismatch("substitute: binding for '" + name + "' lives in a different variable set");
        }
        image[i] = &value;
    }

    // powers[i][k] = image[i]^k, filled lazily.
    std::vector<std::vector<MultiPoly>> powers(n);
    auto power = [&](std::size_t i, unsigned k) -> const MultiPoly & {
        auto &cache = powers[i];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(vars, 1));
        }
        while (cache.size() <= k) {
            cache.push_back(cache.back() * *image[i]);
        }
        return cache[k];
    };

    MultiPoly out(vars);
    for (const auto &[e, c] : p.terms()) {
        Exponents kept(n, 0);
        MultiPoly factor = MultiPoly::constant(vars, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (image[i] == nullptr) {
                kept[i] = e[i];
            } else {
                factor = factor * power(i, e[i]);
            }
        }
        out += factor * MultiPoly::monomial(vars, std::move(kept));
    }
    return out;
}

MultiPoly evaluate_at(const MultiPoly &p, const std::map<std::string, Rational, std::less<>> &values)
{
    Bindings b;
    for (const auto &[name, v] : values) {
        b.emplace(name, MultiPoly::constant(p.vars(), v));
    }
    return substitute(p, b);
}

MultiPoly partial(const MultiPoly &p, std::string_view var)
{
    const std::size_t i = p.vars().index(var);
    MultiPoly out(p.vars());
    for (const auto &[e, c] : p.terms()) {
        if (e[i] == 0) {
            continue;
        }
        Exponents d = e;
        d[i] -= 1;
        out += MultiPoly::monomial(p.vars(), std::move(d), c * Rational(static_cast<std::int64_t>(e[i])));
    }
    return out;
}

namespace {

std::vector<std::size_t> subset_indices(const VarSet &vars, std::span<const std::string> subset)
{
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const auto &n : subset) {
        idx.push_back(vars.index(n));
    }
    return idx;
}

int partial_degree(const Exponents &e, const std::vector<std::size_t> &idx)
{
    int d = 0;
    for (auto i : idx) {
        d += static_cast<int>(e[i]);
    }
    return d;
}

} // namespace

MultiPoly homogeneous_component(const MultiPoly &p, std::span<const std::string> subset, int degree)
{
    const auto idx = subset_indices(p.vars(), subset);
    MultiPoly out(p.vars());
    if (degree < 0) {
        return out;
    }
    for (const auto &[e, c] : p.terms()) {
        if (partial_degree(e, idx) == degree) {
            out += MultiPoly::monomial(p.vars(), e, c);
        }
    }
    return out;
}

std::optional<int> degree_in(const MultiPoly &p, std::span<const std::string> subset)
{
    const auto idx = subset_indices(p.vars(), subset);
    std::optional<int> best;
    for (const auto &[e, c] : p.terms()) {
        const int d = partial_degree(e, idx);
        if (!best || d > *best) {
            best = d;
        }
    }
    return best;
}

std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b)
{
    if (!(a.vars() == b.vars())) {
        throw VarSetMismatch("divide_exact: operands live in different variable sets");
    }
    if (b.is_zero()) {
        throw std::domain_error("divide_exact: division by the zero polynomial");
    }
    const auto &[lb_exp, lb_coeff] = b.leading_term();
    MultiPoly quotient(a.vars());
    MultiPoly rest = a;
    while (!rest.is_zero()) {
        const auto &[lr_exp, lr_coeff] = rest.leading_term();
        Exponents q(lr_exp.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (lr_exp[i] < lb_exp[i]) {
                return std::nullopt;
            }
            q[i] = lr_exp[i] - lb_exp[i];
        }
        const MultiPoly t = MultiPoly::monomial(a.vars(), std::move(q), lr_coeff / lb_coeff);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

MultiPoly remainder_in(const MultiPoly &p, std::string_view var, const MultiPoly &divisor)
{
    if (!(p.vars() == divisor.vars())) {
        throw VarSetMismatch("remainder_in: operands live in different variable sets");
    }
    const std::string name(var);
    const std::size_t vi = p.vars().index(var);
    if (!divisor.uses_only(std::span<const std::string>(&name, 1))) {
        throw std::invalid_argument("remainder_in: divisor must involve only '" + name + "'");
    }
    if (divisor.is_zero()) {
        throw std::domain_error("remainder_in: division by the zero polynomial");
    }
    const auto &[ld_exp, ld_coeff] = divisor.leading_term();
    const unsigned deg = ld_exp[vi];

    MultiPoly rest = p;
    for (;;) {
        // Highest power of var present; terms are eliminated top-down.
        const MultiPoly::TermMap::value_type *pick = nullptr;
        for (const auto &term : rest.terms()) {
            if (term.first[vi] >= deg && (pick == nullptr || term.first[vi] > pick->first[vi])) {
                pick = &term;
            }
        }
        if (pick == nullptr) {
            return rest;
        }
        Exponents shift = pick->first;
        shift[vi] -= deg;
        const MultiPoly t = MultiPoly::monomial(p.vars(), std::move(shift), pick->second / ld_coeff);
        rest -= t * divisor;
    }
}

} // namespace lnd
