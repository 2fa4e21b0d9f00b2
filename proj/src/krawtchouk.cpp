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

#include "kraw/krawtchouk.hpp"

#include <string>
#include <vector>

namespace kraw {

RatPoly krawtchouk_poly(const KrawtchoukSpec& spec) {
    const unsigned n = spec.n;
    RatPoly result;
    RatPoly basis = RatPoly::constant(1);  // binom(x, j)
    Rational power(1);                     // (-2)^j
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) {
            basis = basis * RatPoly::linear(Rational(-static_cast<long>(j - 1)), Rational(1));
            basis = basis.scaled(Rational(1, static_cast<long>(j)));
            power *= Rational(-2);
        }
        const Rational coef = power * rat_binomial(spec.t - Rational(static_cast<long>(j)), n - j);
        result += basis.scaled(coef);
    }
    return result;
}

Rational jacobi_at_zero(unsigned n, const Rational& alpha, const Rational& beta) {
    const Rational big_n(static_cast<long>(n));
    Rational sum;
    for (unsigned j = 0; j <= n; ++j) {
        Rational term = rat_binomial(big_n + alpha, n - j) * rat_binomial(big_n + beta, j);
        if (j & 1U) term = -term;
        sum += term;
    }
    return sum / pow(Rational(2), n);
}

bool check_jacobi_identity(const KrawtchoukSpec& spec, const Rational& x0) {
    const Rational n(static_cast<long>(spec.n));
    const Rational lhs = poly_eval(krawtchouk_poly(spec), x0);
    const Rational rhs = pow(Rational(2), spec.n) * jacobi_at_zero(spec.n, spec.t - x0 - n, x0 - n);
    return lhs == rhs;
}

RatPoly shifted_poly(const KrawtchoukSpec& spec) {
    return poly_compose_linear(krawtchouk_poly(spec), spec.t / Rational(2), Rational(1));
}

RatPoly underlying_poly(const UnderlyingSpec& spec) {
    if (spec.delta > 1) throw std::invalid_argument("delta must be 0 or 1");
    return underlying_poly(spec, krawtchouk_poly({spec.krawtchouk_degree(), spec.t}));
}

RatPoly underlying_poly(const UnderlyingSpec& spec, const RatPoly& krawtchouk) {
    if (spec.delta > 1) throw std::invalid_argument("delta must be 0 or 1");
    if (krawtchouk.degree() != static_cast<int>(spec.krawtchouk_degree())) throw std::invalid_argument("degree does not match 2m + delta");
    const RatPoly centred = poly_compose_linear(krawtchouk, spec.t / Rational(2), Rational(1));
    std::vector<Rational> out(spec.m + 1);
    for (std::size_t j = 0; j < centred.coefficients().size(); ++j) {
        if (j % 2 == spec.delta) {
            out[j / 2] = centred.coeff(j);
        } else if (!centred.coeff(j).is_zero()) {
            throw ParityViolation("nonzero coefficient of x^" + std::to_string(j) + " in centred Krawtchouk polynomial of degree " +
                                  std::to_string(spec.krawtchouk_degree()));
        }
    }
    return RatPoly(std::move(out));
}

std::pair<int, int> descartes_bounds(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("descartes_bounds of zero polynomial");
    int positive = 0;
    int negative = 0;
    int last_pos = 0;
    int last_neg = 0;
    for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
        const int s = f.coeff(j).sign();
        if (s == 0) continue;
        const int s_neg = (j & 1U) ? -s : s;
        if (last_pos != 0 && s != last_pos) ++positive;
        if (last_neg != 0 && s_neg != last_neg) ++negative;
        last_pos = s;
        last_neg = s_neg;
    }
    return {positive, negative};
}

}  // namespace kraw
