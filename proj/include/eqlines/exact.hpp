#pragma once

// Exact scalars: arbitrary-precision integers and rationals, plus quadratic
// surds a + b*sqrt(d) with a single radicand per value.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eqlines {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed or out-of-domain input to an exact operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when two surds with incompatible radicands meet in one expression.
class RadicandMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

struct IntegerSqrt {
    BigInt root;
    bool exact = false;
};

inline IntegerSqrt integer_sqrt(const BigInt& x)
{
    if (x < 0)
        throw DomainError("integer_sqrt: negative argument");
    BigInt remainder;
    BigInt root = boost::multiprecision::sqrt(x, remainder);
    return {std::move(root), remainder == 0};
}

inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0)
        throw DomainError("binomial: negative argument");
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// p/q with the sign moved to the numerator (Boost's rational rejects a
/// negative cpp_int denominator).
inline Rational ratio(BigInt p, BigInt q)
{
    if (q == 0)
        throw DomainError("rational with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) { return ratio(BigInt(p), BigInt(q)); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::optional<std::int64_t> to_int64(const Rational& x)
{
    if (!is_integer(x))
        return std::nullopt;
    const BigInt& n = numerator(x);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(n);
}

inline int sign(const Rational& x) { return x.sign(); }

inline std::string to_string(const Rational& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

inline BigInt parse_integer(std::string_view s, std::size_t& pos)
{
    skip_spaces(s, pos);
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (start == pos)
        throw DomainError("expected integer in '" + std::string(s) + "'");
    BigInt value(std::string(s.substr(start, pos - start)));
    return negative ? BigInt(-value) : value;
}

/// Parses "p" or "p/q" starting at pos.
inline Rational parse_fraction(std::string_view s, std::size_t& pos)
{
    BigInt p = parse_integer(s, pos);
    skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        BigInt q = parse_integer(s, pos);
        if (q == 0)
            throw DomainError("zero denominator in '" + std::string(s) + "'");
        return ratio(p, q);
    }
    return Rational(p);
}

} // namespace detail

inline Rational parse_rational(std::string_view s)
{
    std::size_t pos = 0;
    Rational value = detail::parse_fraction(s, pos);
    detail::skip_spaces(s, pos);
    if (pos != s.size())
        throw DomainError("trailing characters in rational '" + std::string(s) + "'");
    return value;
}

namespace detail {

struct SquareSplit {
    BigInt square_root_part; // s
    BigInt free_part;        // f, with x = s^2 * f
};

// Trial division removes every prime p with p^3 <= (remaining cofactor); the
// cofactor left over has at most two prime factors, so it is either a perfect
// square or square-free. Huge inputs stop after a fixed trial budget; the
// result is then still a valid factorization x = s^2 f, only f may keep a
// large square factor.
inline SquareSplit split_square(const BigInt& x)
{
    if (x == 0)
        return {0, 0};
    constexpr std::uint64_t trial_budget = 200000;
    SquareSplit out{1, 1};
    auto absorb = [&](auto& rest, std::uint64_t p) {
        unsigned exponent = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exponent;
        }
        for (unsigned i = 0; i < exponent / 2; ++i)
            out.square_root_part *= p;
        if (exponent % 2)
            out.free_part *= p;
    };
    auto finish = [&](const BigInt& rest) {
        IntegerSqrt r = integer_sqrt(rest);
        if (r.exact)
            out.square_root_part *= r.root;
        else
            out.free_part *= rest;
    };
    if (x <= std::numeric_limits<std::uint64_t>::max()) {
        auto rest = static_cast<std::uint64_t>(x);
        absorb(rest, 2);
        for (std::uint64_t p = 3; p <= 2642245 && p * p * p <= rest; p += 2)
            absorb(rest, p);
        finish(BigInt(rest));
        return out;
    }
    BigInt rest = x;
    absorb(rest, 2);
    for (std::uint64_t p = 3; p < trial_budget && BigInt(p) * p * p <= rest; p += 2)
        absorb(rest, p);
    finish(rest);
    return out;
}

} // namespace detail

/// Value rational_part + coefficient * sqrt(radicand).
///
/// Normal form: radicand is 0 exactly when the value is rational (coefficient
/// is then 0 too); otherwise radicand > 1 is not a perfect square and square
/// factors found by trial division have been moved into the coefficient.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(const Rational& value) : rational_(value) {} // NOLINT: implicit by design of the field
    QuadraticSurd(std::int64_t value) : rational_(value) {}    // NOLINT
    QuadraticSurd(Rational rational_part, Rational coefficient, BigInt radicand)
        : rational_(std::move(rational_part)), coefficient_(std::move(coefficient)), radicand_(std::move(radicand))
    {
        normalize();
    }

    const Rational& rational_part() const { return rational_; }
    const Rational& coefficient() const { return coefficient_; }
    const BigInt& radicand() const { return radicand_; }

    bool is_rational() const { return radicand_ == 0; }

    Rational as_rational() const
    {
        if (!is_rational())
            throw DomainError("value " + str() + " is irrational");
        return rational_;
    }

    std::optional<std::int64_t> as_int64() const
    {
        if (!is_rational())
            return std::nullopt;
        return to_int64(rational_);
    }

    double to_double() const
    {
        double v = rational_.convert_to<double>();
        if (!is_rational())
            v += coefficient_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
        return v;
    }

    int sign() const
    {
        int sa = rational_.sign();
        int sb = coefficient_.sign();
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        Rational lhs = rational_ * rational_;
        Rational rhs = coefficient_ * coefficient_ * Rational(radicand_);
        if (lhs > rhs)
            return sa;
        if (lhs < rhs)
            return sb;
        return 0;
    }

    QuadraticSurd conjugate() const { return is_rational() ? *this : QuadraticSurd(rational_, -coefficient_, radicand_); }

    QuadraticSurd operator-() const { return QuadraticSurd(-rational_, -coefficient_, radicand_); }

    QuadraticSurd& operator+=(const QuadraticSurd& o)
    {
        BigInt d = common_radicand(o);
        Rational ob = o.coefficient_in(d);
        Rational tb = coefficient_in(d);
        *this = QuadraticSurd(rational_ + o.rational_, tb + ob, d);
        return *this;
    }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this += -o; }

    QuadraticSurd& operator*=(const QuadraticSurd& o)
    {
        BigInt d = common_radicand(o);
        Rational a1 = rational_, b1 = coefficient_in(d);
        Rational a2 = o.rational_, b2 = o.coefficient_in(d);
        *this = QuadraticSurd(a1 * a2 + b1 * b2 * Rational(d), a1 * b2 + a2 * b1, d);
        return *this;
    }

    QuadraticSurd& operator/=(const QuadraticSurd& o)
    {
        if (o.sign() == 0)
            throw DomainError("division by zero");
        if (o.is_rational()) {
            *this = QuadraticSurd(rational_ / o.rational_, coefficient_ / o.rational_, radicand_);
            return *this;
        }
        Rational norm = o.rational_ * o.rational_ - o.coefficient_ * o.coefficient_ * Rational(o.radicand_);
        *this *= o.conjugate();
        *this = QuadraticSurd(rational_ / norm, coefficient_ / norm, radicand_);
        return *this;
    }

    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() == 0; }
    friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) { return b < a; }
    friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) { return !(b < a); }
    friend bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) { return !(a < b); }

    /// "p/q" for rationals, "r/s*sqrt(d)" or "p/q + r/s*sqrt(d)" otherwise.
    std::string str() const
    {
        if (is_rational())
            return to_string(rational_);
        if (rational_ == 0)
            return to_string(coefficient_) + "*sqrt(" + radicand_.str() + ")";
        std::string out = to_string(rational_);
        if (coefficient_.sign() < 0)
            out += " - " + to_string(Rational(-coefficient_));
        else
            out += " + " + to_string(coefficient_);
        return out + "*sqrt(" + radicand_.str() + ")";
    }

private:
    void normalize()
    {
        if (radicand_ < 0)
            throw DomainError("negative radicand");
        if (coefficient_ == 0 || radicand_ == 0) {
            coefficient_ = 0;
            radicand_ = 0;
            return;
        }
        detail::SquareSplit split = detail::split_square(radicand_);
        coefficient_ *= Rational(split.square_root_part);
        radicand_ = split.free_part;
        if (radicand_ == 1) {
            rational_ += coefficient_;
            coefficient_ = 0;
            radicand_ = 0;
        }
    }

    // Radicand both operands can be written over; throws when d1*d2 is not a square.
    BigInt common_radicand(const QuadraticSurd& o) const
    {
        if (is_rational())
            return o.radicand_;
        if (o.is_rational() || radicand_ == o.radicand_)
            return radicand_;
        if (!integer_sqrt(radicand_ * o.radicand_).exact)
            throw RadicandMismatch("surds over sqrt(" + radicand_.str() + ") and sqrt(" + o.radicand_.str() +
                                   ") do not share a field");
        return radicand_;
    }

    // Coefficient of sqrt(d) when this value is rewritten over radicand d.
    Rational coefficient_in(const BigInt& d) const
    {
        if (is_rational() || radicand_ == d)
            return coefficient_;
        // sqrt(r) = sqrt(r*d)/d * sqrt(d)
        return coefficient_ * ratio(integer_sqrt(radicand_ * d).root, d);
    }

    Rational rational_{0};
    Rational coefficient_{0};
    BigInt radicand_{0};
};

inline std::string to_string(const QuadraticSurd& x) { return x.str(); }

inline QuadraticSurd sqrt_of_rational(const Rational& x)
{
    if (x.sign() < 0)
        throw DomainError("sqrt_of_rational: negative input " + to_string(x));
    // sqrt(p/q) = sqrt(p*q)/q
    const BigInt& q = denominator(x);
    return QuadraticSurd(Rational(0), ratio(BigInt(1), q), numerator(x) * q);
}

/// Accepts "p/q", "p/q + r/s*sqrt(d)", "p/q - r/s*sqrt(d)", "r/s*sqrt(d)" and "sqrt(d)".
inline QuadraticSurd parse_surd(std::string_view s)
{
    auto parse_radical = [&](std::size_t& pos, Rational coefficient) {
        detail::skip_spaces(s, pos);
        if (s.substr(pos, 5) != "sqrt(")
            throw DomainError("expected sqrt( in '" + std::string(s) + "'");
        pos += 5;
        BigInt d = detail::parse_integer(s, pos);
        detail::skip_spaces(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw DomainError("expected ) in '" + std::string(s) + "'");
        ++pos;
        return QuadraticSurd(Rational(0), coefficient, d);
    };
    auto divide_by_integer = [&](std::size_t& pos, QuadraticSurd x) {
        detail::skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            BigInt q = detail::parse_integer(s, pos);
            if (q == 0)
                throw DomainError("zero denominator in '" + std::string(s) + "'");
            x /= QuadraticSurd(Rational(q));
        }
        return x;
    };
    auto parse_term = [&](std::size_t& pos, int sign_factor) {
        detail::skip_spaces(s, pos);
        if (s.substr(pos, 4) == "sqrt")
            return divide_by_integer(pos, parse_radical(pos, Rational(sign_factor)));
        Rational value = Rational(detail::parse_integer(s, pos)) * sign_factor;
        detail::skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            detail::skip_spaces(s, pos);
            if (s.substr(pos, 4) == "sqrt") // p/sqrt(d)
                return QuadraticSurd(value) / parse_radical(pos, Rational(1));
            BigInt q = detail::parse_integer(s, pos);
            if (q == 0)
                throw DomainError("zero denominator in '" + std::string(s) + "'");
            value = value / Rational(q);
            detail::skip_spaces(s, pos);
        }
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            return divide_by_integer(pos, parse_radical(pos, value));
        }
        return QuadraticSurd(value);
    };

    std::size_t pos = 0;
    QuadraticSurd value = parse_term(pos, 1);
    detail::skip_spaces(s, pos);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        int sign_factor = s[pos] == '-' ? -1 : 1;
        ++pos;
        value += parse_term(pos, sign_factor);
    }
    detail::skip_spaces(s, pos);
    if (pos != s.size())
        throw DomainError("trailing characters in '" + std::string(s) + "'");
    return value;
}

} // namespace eqlines
