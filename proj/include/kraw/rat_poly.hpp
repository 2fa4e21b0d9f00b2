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

#ifndef KRAW_RAT_POLY_HPP
#define KRAW_RAT_POLY_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kraw/rational.hpp"

namespace kraw {

/// Dense univariate polynomial over Q, ascending powers: coefficient j multiplies x^j.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

    static RatPoly constant(const Rational& c) { return RatPoly({c}); }
    static RatPoly monomial(const Rational& c, std::size_t power);
    /// b*x + a
    static RatPoly linear(const Rational& a, const Rational& b) { return RatPoly({a, b}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^j; zero beyond the degree.
    const Rational& coeff(std::size_t j) const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& leading() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    RatPoly scaled(const Rational& c) const;

    /// Canonical text: "c0 + c1*x + c2*x^2", zero terms omitted, "0" for the zero polynomial.
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline RatPoly poly_add(const RatPoly& f, const RatPoly& g) { return f + g; }
inline RatPoly poly_mul(const RatPoly& f, const RatPoly& g) { return f * g; }
inline RatPoly poly_scale(const RatPoly& f, const Rational& c) { return f.scaled(c); }

/// Horner evaluation.
Rational poly_eval(const RatPoly& f, const Rational& x0);

/// f(b*x + a).
RatPoly poly_compose_linear(const RatPoly& f, const Rational& a, const Rational& b);

RatPoly poly_derivative(const RatPoly& f);

/// Quotient and remainder of f by nonzero g.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& f, const RatPoly& g);

/// Monic gcd (zero if both inputs are zero).
RatPoly poly_gcd(RatPoly f, RatPoly g);

RatPoly make_monic(const RatPoly& f);

/// Divide by the leading coefficient, then substitute x -> x - a_{n-1}/(n a_n):
/// monic with vanishing x^{n-1} term. Requires degree >= 2.
RatPoly depress(const RatPoly& f);

/// Largest m with x^m | f (f nonzero).
std::size_t zero_root_multiplicity(const RatPoly& f);

}  // namespace kraw

#endif  // KRAW_RAT_POLY_HPP
