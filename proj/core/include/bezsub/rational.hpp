#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace bezsub {

/// Exact rational scalar backed by GMP. Always stored canonically:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    explicit Rational(mpq_class v);

    /// Parses "p", "+p", "-p" or "p/q" with q > 0. No floating point, no
    /// whitespace. Throws Error{parse} otherwise.
    static Rational from_string(std::string_view text);

    const mpz_class& num() const noexcept { return value_.get_num(); }
    const mpz_class& den() const noexcept { return value_.get_den(); }

    bool is_zero() const noexcept { return value_ == 0; }
    int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational inverse() const;

    /// Exact integer power; exponent may be negative (throws on 0^negative).
    Rational pow(long exponent) const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

Rational abs(const Rational& r);

}  // namespace bezsub
