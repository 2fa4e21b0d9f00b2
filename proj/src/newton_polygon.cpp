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

#include "kraw/newton_polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kraw/int_poly.hpp"
#include "kraw/krawtchouk.hpp"
#include "kraw/primes.hpp"

namespace kraw {

namespace {

// > 0 for a strict left turn o -> a -> b.
long cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool divisible(const BigInt& a, std::uint64_t d) { return mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d)) != 0; }

// size -> count of indivisible lattice pieces.
std::map<int, int> polygon_atoms(const NewtonPolygon& np) {
    std::map<int, int> atoms;
    for (const auto& s : np.segments()) {
        const long e = s.slope.denominator().get_si();
        atoms[static_cast<int>(e)] += static_cast<int>(s.length / e);
    }
    if (np.zero_root_multiplicity() > 0) atoms[1] += static_cast<int>(np.zero_root_multiplicity());
    return atoms;
}

struct PartitionEnumerator {
    std::vector<int> sizes;
    std::set<std::vector<int>> out;

    // Emits every partition of `remaining` into nonzero parts taken in
    // lexicographically non-increasing order (each multiset exactly once).
    void run(std::vector<int>& remaining, const std::vector<int>& bound, std::vector<int>& degrees) {
        if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; })) {
            std::vector<int> sorted = degrees;
            std::sort(sorted.begin(), sorted.end());
            out.insert(std::move(sorted));
            return;
        }
        std::vector<int> part(remaining.size(), 0);
        while (advance(part, remaining)) {
            if (std::lexicographical_compare(bound.begin(), bound.end(), part.begin(), part.end())) continue;
            int degree = 0;
            for (std::size_t i = 0; i < part.size(); ++i) {
                degree += part[i] * sizes[i];
                remaining[i] -= part[i];
            }
            degrees.push_back(degree);
            run(remaining, part, degrees);
            degrees.pop_back();
            for (std::size_t i = 0; i < part.size(); ++i) remaining[i] += part[i];
        }
    }

    // Odometer over 0 <= part <= limit; false once it wraps to zero.
    static bool advance(std::vector<int>& part, const std::vector<int>& limit) {
        for (std::size_t i = part.size(); i-- > 0;) {
            if (part[i] < limit[i]) {
                ++part[i];
                return true;
            }
            part[i] = 0;
        }
        return false;
    }
};

}  // namespace

NewtonPolygon::NewtonPolygon(std::uint64_t prime, std::vector<HullPoint> vertices, std::size_t zero_root_multiplicity)
    : prime_(prime), vertices_(std::move(vertices)), zero_root_multiplicity_(zero_root_multiplicity) {
    if (vertices_.empty()) throw std::invalid_argument("Newton polygon needs at least one vertex");
}

std::vector<Segment> NewtonPolygon::segments() const {
    std::vector<Segment> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const long dx = vertices_[i].x - vertices_[i - 1].x;
        const long dy = vertices_[i].y - vertices_[i - 1].y;
        out.push_back({Rational(dy, dx), dx});
    }
    return out;
}

NewtonPolygon newton_polygon(const RatPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
    if (!is_prime(p)) throw NotPrime(p);
    const long n = f.degree();
    std::vector<HullPoint> hull;
    for (long j = n; j >= 0; --j) {
        const Rational& a = f.coeff(static_cast<std::size_t>(j));
        if (a.is_zero()) continue;
        const HullPoint pt{n - j, vp(a, p).value()};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }
    return NewtonPolygon(p, std::move(hull), zero_root_multiplicity(f));
}

std::vector<std::pair<long, Valuation>> coefficient_valuations(const RatPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw std::invalid_argument("coefficient valuations of the zero polynomial");
    const long n = f.degree();
    std::vector<std::pair<long, Valuation>> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (long j = 0; j <= n; ++j) out.emplace_back(j, vp(f.coeff(static_cast<std::size_t>(n - j)), p));
    return out;
}

DegreeBasedShape degree_based_shape(unsigned n) {
    if (n == 0) throw std::invalid_argument("degree-based shape needs n >= 1");
    DegreeBasedShape shape;
    for (unsigned bit = 0; (n >> bit) != 0; ++bit) {
        if (((n >> bit) & 1U) == 0) continue;
        const long len = 1L << bit;
        shape.exponents.push_back(bit);
        shape.segments.push_back({Rational(-1, len), len});
    }
    return shape;
}

bool is_degree_based(const RatPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_degree_based needs degree >= 1");
    return newton_polygon(f, 2).segments() == degree_based_shape(static_cast<unsigned>(f.degree())).segments;
}

std::vector<std::pair<long, Valuation>> distinguished_valuations(unsigned n, const Rational& t) {
    const RatPoly k = krawtchouk_poly({n, t});
    const DegreeBasedShape shape = degree_based_shape(n);
    std::vector<std::pair<long, Valuation>> out;
    long position = 0;
    out.emplace_back(position, vp(k.coeff(n), 2));
    for (const auto& seg : shape.segments) {
        position += seg.length;
        out.emplace_back(position, vp(k.coeff(static_cast<std::size_t>(static_cast<long>(n) - position)), 2));
    }
    return out;
}

const char* to_string(EisensteinCertificate c) {
    switch (c) {
        case EisensteinCertificate::Direct: return "EisensteinDirect";
        case EisensteinCertificate::Reversed: return "EisensteinReversed";
        case EisensteinCertificate::None: break;
    }
    return "None";
}

EisensteinCertificate eisenstein_certificate(const RatPoly& f, std::uint64_t p) {
    if (f.degree() < 1) throw std::invalid_argument("Eisenstein test needs degree >= 1");
    return eisenstein_certificate(primitive_integer_form(f), p);
}

EisensteinCertificate eisenstein_certificate(const IntPoly& g, std::uint64_t p) {
    if (g.degree() < 1) throw std::invalid_argument("Eisenstein test needs degree >= 1");
    if (!is_prime(p)) throw NotPrime(p);
    const auto& c = g.coeffs;
    const std::size_t n = c.size() - 1;
    const std::uint64_t p2 = p * p;

    bool direct = !divisible(c[n], p) && !divisible(c[0], p2);
    for (std::size_t j = 0; direct && j < n; ++j) direct = divisible(c[j], p);
    if (direct) return EisensteinCertificate::Direct;

    bool reversed = c[0] != 0 && !divisible(c[0], p) && !divisible(c[n], p2);
    for (std::size_t j = 1; reversed && j <= n; ++j) reversed = divisible(c[j], p);
    return reversed ? EisensteinCertificate::Reversed : EisensteinCertificate::None;
}

std::set<std::vector<int>> np_factor_constraints(const NewtonPolygon& np) {
    const auto atoms = polygon_atoms(np);
    PartitionEnumerator e;
    std::vector<int> remaining;
    for (const auto& [size, count] : atoms) {
        e.sizes.push_back(size);
        remaining.push_back(count);
    }
    std::vector<int> degrees;
    e.run(remaining, remaining, degrees);
    return std::move(e.out);
}

std::set<int> np_feasible_factor_degrees(const NewtonPolygon& np) {
    const auto atoms = polygon_atoms(np);
    int total = 0;
    for (const auto& [size, count] : atoms) total += size * count;
    std::vector<bool> reachable(static_cast<std::size_t>(total) + 1, false);
    reachable[0] = true;
    for (const auto& [size, count] : atoms) {
        for (int k = 0; k < count; ++k) {
            for (int s = total; s >= size; --s) {
                if (reachable[static_cast<std::size_t>(s - size)]) reachable[static_cast<std::size_t>(s)] = true;
            }
        }
    }
    std::set<int> out;
    for (int d = 1; d < total; ++d) {
        if (reachable[static_cast<std::size_t>(d)]) out.insert(d);
    }
    return out;
}

NewtonIndex newton_index(const RatPoly& f, std::uint64_t prime_bound) {
    if (f.degree() < 1) throw std::invalid_argument("Newton index needs degree >= 1");
    if (prime_bound < 2) throw std::invalid_argument("Newton index needs prime_bound >= 2");
    NewtonIndex out;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        BigInt local = 1;
        for (const auto& s : newton_polygon(f, p).segments()) {
            const BigInt d = s.slope.denominator();
            mpz_lcm(local.get_mpz_t(), local.get_mpz_t(), d.get_mpz_t());
        }
        if (local > 1) {
            out.contributions.emplace(p, local);
            mpz_lcm(out.index.get_mpz_t(), out.index.get_mpz_t(), local.get_mpz_t());
        }
    }
    return out;
}

}  // namespace kraw
