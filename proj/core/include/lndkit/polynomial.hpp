#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <lndkit/rational.hpp>

namespace lnd {

class VarSetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Ordered list of distinct variable names. The order fixes exponent-vector
// positions and the printing order. Copies share the name storage.
class VarSet {
public:
    VarSet(std::initializer_list<std::string> names);
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string &name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string> &names() const { return *names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws UnknownVariable.
    std::size_t index(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    // Appends a new variable at the end; throws on collision.
    VarSet with(std::string name) const;

    friend bool operator==(const VarSet &a, const VarSet &b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<unsigned>;

// Lexicographic order on exponent vectors, largest first (x > y > z in
// VarSet order). This is the canonical term order for printing.
struct LexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const { return a > b; }
};

// Sparse multivariate polynomial with rational coefficients. Zero
// coefficients are never stored, so equality of term maps is equality of
// polynomials.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, LexGreater>;

    explicit MultiPoly(VarSet vars);

    static MultiPoly constant(VarSet vars, const Rational &c);
    static MultiPoly variable(VarSet vars, std::string_view name);
    static MultiPoly monomial(VarSet vars, Exponents exps, const Rational &c = Rational(1));

    const VarSet &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial, nullopt otherwise.
    std::optional<Rational> constant_value() const;
    Rational coefficient(const Exponents &e) const;

    // Leading term under LexGreater; requires a nonzero polynomial.
    const TermMap::value_type &leading_term() const;

    // True iff every term only involves variables from `names`.
    bool uses_only(std::span<const std::string> names) const;
    // Largest exponent of `name` over all terms (0 for the zero polynomial).
    unsigned max_exponent(std::string_view name) const;

    // Re-expresses the polynomial over `target`, matching variables by name.
    // Throws UnknownVariable if a variable that actually occurs is missing.
    MultiPoly rebase(const VarSet &target) const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

    // Canonical text, e.g. "x^2*z^2 - 2*x*y^2*z + 5*x*z + y^4 - 5*y^2 + 4".
    std::string to_string() const;

private:
    void add_term(const Exponents &e, const Rational &c);
    void require_same_vars(const MultiPoly &o, const char *op) const;

    VarSet vars_;
    TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const MultiPoly &p);

using Bindings = std::map<std::string, MultiPoly, std::less<>>;

// Image of `p` under the ring homomorphism sending each bound variable to its
// binding and every other variable to itself. Bindings must live in p's VarSet.
MultiPoly substitute(const MultiPoly &p, const Bindings &bindings);

// Substitutes rationals for variables and returns the remaining polynomial.
MultiPoly evaluate_at(const MultiPoly &p, const std::map<std::string, Rational, std::less<>> &values);

MultiPoly partial(const MultiPoly &p, std::string_view var);

// Sum of the terms whose total degree in `subset` equals `degree`.
MultiPoly homogeneous_component(const MultiPoly &p, std::span<const std::string> subset, int degree);

// Maximum total degree in `subset`; nullopt stands for the degree of 0 (-inf).
std::optional<int> degree_in(const MultiPoly &p, std::span<const std::string> subset);

// q with a == b*q, or nullopt if b does not divide a. Throws std::domain_error
// if b is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b);

// Remainder of `p` modulo a polynomial `divisor` involving only `var`, with the
// other variables treated as coefficients.
MultiPoly remainder_in(const MultiPoly &p, std::string_view var, const MultiPoly &divisor);

} // namespace lnd
