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

#ifndef KRAW_PRIME_POLY_HPP
#define KRAW_PRIME_POLY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kraw/int_poly.hpp"

namespace kraw {

/// Polynomial over F_p, ascending residues in [0, p). Highest residue nonzero
/// (the zero polynomial stores nothing). Requires p < 2^32.
class PrimePoly {
public:
    PrimePoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
    static PrimePoly x(std::uint64_t modulus) { return PrimePoly(modulus, {0, 1}); }

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    std::uint64_t leading() const { return c_.back(); }

    friend bool operator==(const PrimePoly& a, const PrimePoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    std::string str() const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

PrimePoly operator+(const PrimePoly& a, const PrimePoly& b);
PrimePoly operator-(const PrimePoly& a, const PrimePoly& b);
PrimePoly operator*(const PrimePoly& a, const PrimePoly& b);
PrimePoly poly_rem(const PrimePoly& a, const PrimePoly& b);
PrimePoly poly_quot(const PrimePoly& a, const PrimePoly& b);
PrimePoly poly_gcd(PrimePoly a, PrimePoly b);  // monic
PrimePoly make_monic(const PrimePoly& a);
PrimePoly poly_derivative(const PrimePoly& a);
/// base^e mod modulus
PrimePoly poly_powmod(const PrimePoly& base, std::uint64_t e, const PrimePoly& modulus);

class BadPrime : public std::domain_error {
public:
    BadPrime(std::uint64_t p, const std::string& why);
};

class NotSquarefree : public std::domain_error {
public:
    explicit NotSquarefree(std::uint64_t p);
};

/// Coefficientwise reduction; BadPrime when p divides the leading coefficient.
PrimePoly reduce_mod_p(const IntPoly& f, std::uint64_t p);

/// gcd(g, g') = 1 in F_p[x]; g' = 0 (a p-th power) counts as not squarefree.
bool is_squarefree_mod_p(const PrimePoly& g);

/// Sorted multiset of irreducible factor degrees of a squarefree polynomial.
struct CycleType {
    std::vector<int> degrees;  // ascending

    int total() const;
    bool contains(int part) const;
    friend bool operator==(const CycleType&, const CycleType&) = default;
    std::string str() const;
};

/// Distinct-degree factorization. Throws NotSquarefree when g is not squarefree.
CycleType factor_degrees_mod_p(const PrimePoly& g);
/// factor_degrees_mod_p without the squarefree check, for callers that just ran it.
CycleType factor_degrees_squarefree(const PrimePoly& g);

}  // namespace kraw

#endif  // KRAW_PRIME_POLY_HPP
