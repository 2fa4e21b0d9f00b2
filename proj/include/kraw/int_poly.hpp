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

#ifndef KRAW_INT_POLY_HPP
#define KRAW_INT_POLY_HPP

#include <span>
#include <vector>

#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"

namespace kraw {

/// Primitive integer model of a rational polynomial: scale * coeffs == source, coefficientwise.
/// The coefficient gcd is 1; the sign of the leading coefficient follows the source.
struct IntPoly {
    std::vector<BigInt> coeffs;  // ascending powers, highest nonzero
    Rational scale{1};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigInt& leading() const { return coeffs.back(); }
    RatPoly to_rat_poly() const;  // without the scale
};

/// Lifts an integer coefficient vector (ascending, trailing zeros trimmed) to a primitive IntPoly.
IntPoly make_int_poly(std::vector<BigInt> coeffs);

/// Clears denominators and removes the (positive) content. Rejects the zero polynomial.
IntPoly primitive_integer_form(const RatPoly& f);

/// Resultant by the subresultant remainder sequence (fraction-free over Z).
/// Coefficient spans are ascending with nonzero top entry.
BigInt resultant(std::span<const BigInt> f, std::span<const BigInt> g);
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^{n(n-1)/2} res(F, F') / lc(F) of the integer polynomial itself (scale ignored).
BigInt integer_discriminant(const IntPoly& f);

/// Standard discriminant of a rational polynomial of degree >= 1.
Rational discriminant(const RatPoly& f);

/// Coefficient content, positive.
BigInt content(std::span<const BigInt> coeffs);

}  // namespace kraw

#endif  // KRAW_INT_POLY_HPP
