#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lnd {

using BigInt = boost::multiprecision::mpz_int;

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(BigInt n);       // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    // Accepts "n" or "n/d" with an optional leading sign.
    static Rational from_string(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const;
    int sign() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    Rational abs() const;
    Rational pow(unsigned e) const;

    std::string to_string() const;

private:
    explicit Rational(boost::multiprecision::mpq_rational v) : value_(std::move(v)) {}

    boost::multiprecision::mpq_rational value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational factorial(unsigned n);

} // namespace lnd
