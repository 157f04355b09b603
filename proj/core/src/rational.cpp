#include "bezsub/rational.hpp"

#include <cctype>
#include <ostream>

#include "bezsub/error.hpp"

namespace bezsub {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse: return "parse";
        case ErrorCode::basis: return "basis";
        case ErrorCode::degree: return "degree";
        case ErrorCode::range: return "range";
        case ErrorCode::shape: return "shape";
        case ErrorCode::division: return "division";
    }
    return "unknown";
}

Rational::Rational(long n, long d) {
    if (d == 0) throw Error(ErrorCode::division, "rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer(den, false))
            throw Error(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
    }
    if (!is_integer(num, true))
        throw Error(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);  // mpz rejects an explicit plus

    mpq_class v;
    if (den.empty()) {
        v = mpq_class(std::string(num));
    } else {
        mpz_class d{std::string(den)};
        if (d == 0)
            throw Error(ErrorCode::division, "rational '" + std::string(text) + "' has zero denominator");
        v = mpq_class(mpz_class{std::string(num)}, d);
        v.canonicalize();
    }
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::division, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::division, "inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    if (is_zero()) {
        if (exponent < 0) throw Error(ErrorCode::division, "negative power of zero");
        return Rational(0);
    }
    const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    mpq_class v = exponent > 0 ? mpq_class(n, d) : mpq_class(d, n);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

}  // namespace bezsub
