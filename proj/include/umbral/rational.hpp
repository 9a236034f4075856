#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbral {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and every
/// arithmetic result is canonicalized, so structural equality is numeric
/// equality and the textual form is unique.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(long numerator, long denominator);

    explicit Rational(mpz_class integer) : value_(std::move(integer)) {}
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" (optional leading '-', q > 0). Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class value_{0};
};

/// x^k for k >= 0; 0^0 = 1.
Rational pow(const Rational& x, unsigned k);

/// n! as a rational.
Rational factorial(unsigned n);

/// Falling factorial (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned k);

/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

}  // namespace umbral
