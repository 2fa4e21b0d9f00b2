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

#ifndef KRAW_RATIONAL_HPP
#define KRAW_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kraw {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(Rational base, unsigned exponent);
Rational abs(const Rational& r);

/// p-adic valuation; INFINITY is a distinct state, never an integer sentinel.
class Valuation {
public:
    explicit Valuation(long value) : kind_(Kind::Finite), value_(value) {}
    static Valuation infinity() { return Valuation(Kind::Infinite); }

    bool is_infinite() const { return kind_ == Kind::Infinite; }
    long value() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.kind_ == b.kind_ && (a.is_infinite() || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    std::string str() const;

private:
    enum class Kind { Finite, Infinite };
    explicit Valuation(Kind kind) : kind_(kind), value_(0) {}
    Kind kind_;
    long value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

class NotPrime : public std::invalid_argument {
public:
    explicit NotPrime(std::uint64_t p);
};

/// v_p of a nonzero integer; p must be prime (checked by callers).
long vp_integer(const BigInt& value, std::uint64_t p);

/// v_p(r) = v_p(num) - v_p(den); INFINITY for r = 0. Rejects non-prime p.
Valuation vp(const Rational& r, std::uint64_t p);

/// Legendre: v_p(n!) = (n - digit_sum_p(n)) / (p - 1).
std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p);

/// binom(x, j) = x (x-1) ... (x-j+1) / j!
Rational rat_binomial(const Rational& x, unsigned j);

/// True iff r >= 0 and both |num| and den are perfect squares.
bool is_rational_square(const Rational& r);

/// Exact square root of a rational square; throws std::domain_error otherwise.
Rational rational_sqrt(const Rational& r);

}  // namespace kraw

#endif  // KRAW_RATIONAL_HPP
