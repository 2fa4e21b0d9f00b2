/*
   Copyright 2026 The kraw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kraw/rational.hpp"

#include <ostream>

#include "kraw/primes.hpp"

namespace kraw {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s, 10));
        return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(Rational base, unsigned exponent) {
    Rational result(1);
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return result;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

long Valuation::value() const {
    if (is_infinite()) throw std::logic_error("value() of infinite valuation");
    return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value_ <=> b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(a.value_ + b.value_);
}

std::string Valuation::str() const { return is_infinite() ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

NotPrime::NotPrime(std::uint64_t p) : std::invalid_argument(std::to_string(p) + " is not prime") {}

long vp_integer(const BigInt& value, std::uint64_t p) {
    if (value == 0) throw std::domain_error("valuation of zero integer");
    BigInt rest;
    const BigInt prime(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const Rational& r, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r.is_zero()) return Valuation::infinity();
    return Valuation(vp_integer(r.numerator(), p) - vp_integer(r.denominator(), p));
}

std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    std::uint64_t digit_sum = 0;
    for (std::uint64_t m = n; m > 0; m /= p) digit_sum += m % p;
    return (n - digit_sum) / (p - 1);
}

Rational rat_binomial(const Rational& x, unsigned j) {
    Rational result(1);
    for (unsigned i = 0; i < j; ++i) {
        result *= x - Rational(static_cast<long>(i));
        result /= Rational(static_cast<long>(i + 1));
    }
    return result;
}

bool is_rational_square(const Rational& r) {
    if (r.sign() < 0) return false;
    return mpz_perfect_square_p(r.raw().get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(r.raw().get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& r) {
    if (!is_rational_square(r)) throw std::domain_error(r.str() + " is not a rational square");
    BigInt num;
    BigInt den;
    mpz_sqrt(num.get_mpz_t(), r.raw().get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(num, den);
}

}  // namespace kraw
