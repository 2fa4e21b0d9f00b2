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

#ifndef KRAW_KRAWTCHOUK_HPP
#define KRAW_KRAWTCHOUK_HPP

#include <stdexcept>
#include <utility>

#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"

namespace kraw {

/// Degree n and parameter specialization t of the binary (q = 2) Krawtchouk polynomial.
struct KrawtchoukSpec {
    unsigned n = 0;
    Rational t;
};

/// n = 2m + delta; the degree-m polynomial whose composition with x^2 (times x
/// when delta = 1) is the centred Krawtchouk polynomial of degree n.
struct UnderlyingSpec {
    unsigned m = 0;
    unsigned delta = 0;  // 0 or 1
    Rational t;

    unsigned krawtchouk_degree() const { return 2 * m + delta; }
};

/// Raised when the centred polynomial has a nonzero coefficient of the wrong parity.
class ParityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// K_n^(t)(x) = sum_{j=0}^n (-2)^j binom(t - j, n - j) binom(x, j).
///
/// This is the general Krawtchouk polynomial
///   K_k(n, q; x) = sum_j (-q)^j (q - 1)^{k - j} binom(n - j, k - j) binom(x, j)
/// at q = 2, with the coding-theory length renamed to t and the degree to n.
/// Leading coefficient (-2)^n / n!, constant coefficient binom(t, n).
RatPoly krawtchouk_poly(const KrawtchoukSpec& spec);

/// Jacobi P_n^(alpha, beta) at 0:
/// sum_j binom(n + alpha, n - j) binom(n + beta, j) (-1/2)^j (1/2)^{n - j}.
Rational jacobi_at_zero(unsigned n, const Rational& alpha, const Rational& beta);

/// K_n^(t)(x0) == 2^n P_n^(t - x0 - n, x0 - n)(0), both sides exact.
bool check_jacobi_identity(const KrawtchoukSpec& spec, const Rational& x0);

/// K_n^(t)(x + t/2): even when n is even, odd when n is odd.
RatPoly shifted_poly(const KrawtchoukSpec& spec);

/// Reads the parity-class coefficients of shifted_poly directly; throws
/// ParityViolation if any coefficient of the other class is nonzero.
RatPoly underlying_poly(const UnderlyingSpec& spec);
/// Same, reusing an already built K_{2m+delta}^(t).
RatPoly underlying_poly(const UnderlyingSpec& spec, const RatPoly& krawtchouk);

/// Sign variations of f(x) and f(-x): upper bounds on the number of positive
/// and negative real roots.
std::pair<int, int> descartes_bounds(const RatPoly& f);

}  // namespace kraw

#endif  // KRAW_KRAWTCHOUK_HPP
