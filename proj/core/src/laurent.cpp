#include <lndkit/laurent.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace lnd {

LaurentPoly::LaurentPoly(MultiPoly body, std::string_view var, unsigned shift)
    : body_(std::move(body)), var_index_(body_.vars().index(var)), shift_(shift)
{
    normalize();
}

void LaurentPoly::normalize()
{
    if (body_.is_zero()) {
        shift_ = 0;
        return;
    }
    unsigned common = shift_;
    for (const auto &[e, c] : body_.terms()) {
        common = std::min(common, e[var_index_]);
    }
    if (common == 0) {
        return;
    }
    MultiPoly reduced(body_.vars());
    for (const auto &[e, c] : body_.terms()) {
        Exponents d = e;
        d[var_index_] -= common;
        reduced += MultiPoly::monomial(body_.vars(), std::move(d), c);
    }
    body_ = std::move(reduced);
    shift_ -= common;
}

std::optional<MultiPoly> LaurentPoly::to_polynomial() const
{
    if (shift_ != 0) {
        return std::nullopt;
    }
    return body_;
}

LaurentPoly LaurentPoly::times_power(int n) const
{
    if (n <= 0) {
        return LaurentPoly(body_, var(), shift_ + static_cast<unsigned>(-n));
    }
    const auto up = static_cast<unsigned>(n);
    if (up <= shift_) {
        return LaurentPoly(body_, var(), shift_ - up);
    }
    Exponents e(body_.vars().size(), 0);
    e[var_index_] = up - shift_;
    return LaurentPoly(body_ * MultiPoly::monomial(body_.vars(), std::move(e)), var(), 0);
}

MultiPoly LaurentPoly::degree_zero_part() const
{
    MultiPoly out(body_.vars());
    for (const auto &[e, c] : body_.terms()) {
        if (e[var_index_] == shift_) {
            Exponents d = e;
            d[var_index_] = 0;
            out += MultiPoly::monomial(body_.vars(), std::move(d), c);
        }
    }
    return out;
}

std::optional<int> LaurentPoly::min_exponent() const
{
    if (body_.is_zero()) {
        return std::nullopt;
    }
    unsigned m = body_.terms().begin()->first[var_index_];
    for (const auto &[e, c] : body_.terms()) {
        m = std::min(m, e[var_index_]);
    }
    return static_cast<int>(m) - static_cast<int>(shift_);
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-body_, var(), shift_); }

namespace {

MultiPoly lift(const MultiPoly &body, std::size_t vi, unsigned by)
{
    if (by == 0) {
        return body;
    }
    Exponents e(body.vars().size(), 0);
    e[vi] = by;
    return body * MultiPoly::monomial(body.vars(), std::move(e));
}

} // namespace

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b)
{
    if (!(a.vars() == b.vars()) || a.var_index_ != b.var_index_) {
        throw VarSetMismatch("laurent add: operands use different rings");
    }
    const unsigned k = std::max(a.shift_, b.shift_);
    return LaurentPoly(lift(a.body_, a.var_index_, k - a.shift_) + lift(b.body_, b.var_index_, k - b.shift_),
                       a.var(), k);
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly &a, const Rational &c) { return LaurentPoly(a.body_ * c, a.var(), a.shift_); }

bool operator==(const LaurentPoly &a, const LaurentPoly &b)
{
    return a.var_index_ == b.var_index_ && a.shift_ == b.shift_ && a.body_ == b.body_;
}

std::string LaurentPoly::to_string() const
{
    if (body_.is_zero()) {
        return "0";
    }
    // Reorder by the true (possibly negative) exponent of var, then by the
    // canonical order of the remaining variables.
    struct Term {
        int power;
        Exponents rest;
        Rational coeff;
    };
    std::vector<Term> terms;
    for (const auto &[e, c] : body_.terms()) {
        Exponents rest = e;
        rest[var_index_] = 0;
        terms.push_back({static_cast<int>(e[var_index_]) - static_cast<int>(shift_), std::move(rest), c});
    }
    std::stable_sort(terms.begin(), terms.end(), [](const Term &l, const Term &r) { return l.power > r.power; });

    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms) {
        std::string mono;
        for (std::size_t i = 0; i < t.rest.size(); ++i) {
            const bool is_var = i == var_index_;
            if (is_var ? t.power == 0 : t.rest[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += body_.vars().name(i);
            const int p = is_var ? t.power : static_cast<int>(t.rest[i]);
            if (p != 1) {
                mono += '^' + std::to_string(p);
            }
        }
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = t.coeff.abs();
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

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

LaurentPoly laurent_scale(const MultiPoly &p, unsigned k, std::string_view var) { return LaurentPoly(p, var, k); }

} // namespace lnd
