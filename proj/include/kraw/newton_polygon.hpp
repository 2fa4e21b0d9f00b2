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

#ifndef KRAW_NEWTON_POLYGON_HPP
#define KRAW_NEWTON_POLYGON_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "kraw/int_poly.hpp"
#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"

namespace kraw {

// Orientation: the coefficient a_j of x^j sits at abscissa n - j, so the
// leading coefficient is at x = 0 and the constant term at x = n. This is the
// reverse of the more common convention; slopes flip sign accordingly.

struct HullPoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

struct Segment {
    Rational slope;
    long length = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of {(n - j, v_p(a_j)) : a_j != 0}. Vertices are breaks only
/// (collinear points dropped), x strictly increasing from 0.
/// For f divisible by x^m the hull ends at x = n - m; m is kept in zero_root_multiplicity.
class NewtonPolygon {
public:
    NewtonPolygon(std::uint64_t prime, std::vector<HullPoint> vertices, std::size_t zero_root_multiplicity);

    std::uint64_t prime() const { return prime_; }
    const std::vector<HullPoint>& vertices() const { return vertices_; }
    std::size_t zero_root_multiplicity() const { return zero_root_multiplicity_; }
    std::vector<Segment> segments() const;
    long horizontal_length() const { return vertices_.back().x - vertices_.front().x; }

private:
    std::uint64_t prime_;
    std::vector<HullPoint> vertices_;
    std::size_t zero_root_multiplicity_;
};

NewtonPolygon newton_polygon(const RatPoly& f, std::uint64_t p);

/// (j, v_p(a_{n-j})) for j = 0..n, infinite entries included.
std::vector<std::pair<long, Valuation>> coefficient_valuations(const RatPoly& f, std::uint64_t p);

/// Binary expansion n = sum 2^{j_l}, j_1 < ... < j_k, and the segment list it predicts.
struct DegreeBasedShape {
    std::vector<unsigned> exponents;
    std::vector<Segment> segments;  // (2^{j_l}, -2^{-j_l}) in exponent order
};

DegreeBasedShape degree_based_shape(unsigned n);

/// True iff the 2-adic polygon has exactly the segments of degree_based_shape(deg f).
bool is_degree_based(const RatPoly& f);

/// For r = 0..k: (2^{j_1} + ... + 2^{j_r}, v_2 of that coefficient of K_n^(t)),
/// the coefficient being a_{n - position}.
std::vector<std::pair<long, Valuation>> distinguished_valuations(unsigned n, const Rational& t);

enum class EisensteinCertificate { None, Direct, Reversed };

const char* to_string(EisensteinCertificate c);

/// Eisenstein at p on the primitive integer form of f, then on its coefficient reversal.
EisensteinCertificate eisenstein_certificate(const RatPoly& f, std::uint64_t p);
/// Same test on an already primitive integer polynomial.
EisensteinCertificate eisenstein_certificate(const IntPoly& f, std::uint64_t p);

/// Degree multisets (ascending) compatible with the polygon: each factor's
/// polygon is made of lattice pieces of the segments, so a segment of length L
/// and reduced slope denominator e splits into L/e atoms of size e.
/// A set equal to {{n}} certifies irreducibility. Size grows like the partition numbers.
std::set<std::vector<int>> np_factor_constraints(const NewtonPolygon& np);

/// Degrees d in [1, n-1] that a proper factor could have according to the polygon
/// (subset sums of the atoms above).
std::set<int> np_feasible_factor_degrees(const NewtonPolygon& np);

struct NewtonIndex {
    BigInt index{1};
    std::map<std::uint64_t, BigInt> contributions;  // primes whose slope denominators exceed 1
};

/// lcm of slope denominators of NP_p(f) over primes p <= prime_bound. A truncation:
/// primes above the bound are not examined.
NewtonIndex newton_index(const RatPoly& f, std::uint64_t prime_bound);

}  // namespace kraw

#endif  // KRAW_NEWTON_POLYGON_HPP
