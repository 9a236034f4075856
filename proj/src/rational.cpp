#include "umbral/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace umbral {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (sgn(value_.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || (slash != std::string_view::npos && !all_digits(den))) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }

    mpz_class p(std::string(num), 10);
    mpz_class q = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(p, q));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& x, unsigned k) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), k);
    return Rational(mpq_class(num, den));
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational falling_factorial(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x - Rational(i);
    return r;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

}  // namespace umbral
