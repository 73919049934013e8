#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <lndkit/polynomial.hpp>

namespace lnd {

// body / var^shift with one distinguished variable allowed negative powers.
// Normalized: shift == 0 or var does not divide body.
class LaurentPoly {
public:
    LaurentPoly(MultiPoly body, std::string_view var, unsigned shift);

    const MultiPoly &body() const { return body_; }
    unsigned shift() const { return shift_; }
    const std::string &var() const { return body_.vars().name(var_index_); }
    const VarSet &vars() const { return body_.vars(); }

    bool is_zero() const { return body_.is_zero(); }
    bool is_polynomial() const { return shift_ == 0; }
    std::optional<MultiPoly> to_polynomial() const;

    // Multiplies by var^n, n of either sign.
    LaurentPoly times_power(int n) const;

    // Part of degree 0 in var (a polynomial in the other variables).
    MultiPoly degree_zero_part() const;
    // Smallest exponent of var that occurs; nullopt for zero.
    std::optional<int> min_exponent() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(const LaurentPoly &a, const Rational &c);

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

    // Terms by descending power of var, negative powers printed as "x^-2".
    std::string to_string() const;

private:
    void normalize();

    MultiPoly body_;
    std::size_t var_index_;
    unsigned shift_;
};

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

// p * var^-k, normalized.
LaurentPoly laurent_scale(const MultiPoly &p, unsigned k, std::string_view var = "x");

inline LaurentPoly laurent_add(const LaurentPoly &a, const LaurentPoly &b) { return a + b; }
inline LaurentPoly laurent_sub(const LaurentPoly &a, const LaurentPoly &b) { return a - b; }

} // namespace lnd
