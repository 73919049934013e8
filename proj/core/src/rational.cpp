#include <lndkit/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lnd {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t n) : value_(n) {}

Rational::Rational(BigInt n) : value_(std::move(n)) {}

Rational::Rational(BigInt num, BigInt den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mp::mpq_rational(std::move(num), std::move(den));
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(whole) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("Rational: malformed literal '" + std::string(whole) + "'");
        }
    }
    return BigInt(std::string(digits));
}

} // namespace

Rational Rational::from_string(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_integer(s.substr(slash + 1), text);
    if (negative) {
        num = -num;
    }
    return Rational(std::move(num), std::move(den));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }

BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return mp::denominator(value_) == 1; }

int Rational::sign() const { return value_.sign(); }

Rational Rational::operator-() const { return Rational(mp::mpq_rational(-value_)); }

Rational &Rational::operator+=(const Rational &o)
{
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    if (a.value_ < b.value_) {
        return std::strong_ordering::less;
    }
    if (a.value_ > b.value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned e) const
{
    Rational result(1);
    Rational base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

std::string Rational::to_string() const
{
    std::string out = mp::numerator(value_).str();
    if (!is_integer()) {
        out += '/';
        out += mp::denominator(value_).str();
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

Rational factorial(unsigned n)
{
    BigInt acc = 1;
    for (unsigned k = 2; k <= n; ++k) {
        acc *= k;
    }
    return Rational(std::move(acc));
}

} // namespace lnd
