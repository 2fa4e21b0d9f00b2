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

#ifndef KRAW_TESTS_SUPPORT_HPP
#define KRAW_TESTS_SUPPORT_HPP

// Shared generators and independent oracles. Nothing here calls the library
// routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kraw/int_poly.hpp"
#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"

namespace kraw::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    for (;;) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

/// Integer coefficients in [-bound, bound], exact degree.
inline std::vector<BigInt> random_int_coeffs(std::mt19937_64& rng, int degree, long bound) {
    std::vector<BigInt> c;
    for (int j = 0; j <= degree; ++j) c.emplace_back(uniform(rng, -bound, bound));
    while (c.back() == 0) c.back() = uniform(rng, -bound, bound);
    return c;
}

inline RatPoly to_rat(const std::vector<BigInt>& c) {
    std::vector<Rational> r;
    for (const auto& v : c) r.emplace_back(v);
    return RatPoly(std::move(r));
}

/// Sylvester determinant by exact Gaussian elimination over Q.
inline BigInt sylvester_resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size, 0));
    // Rows hold descending coefficients, shifted.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j <= m; ++j) a[r][r + j] = f[m - j];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) a[n + r][r + j] = g[n - j];
    }
    mpq_class det = 1;
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t pivot = c;
        while (pivot < size && a[pivot][c] == 0) ++pivot;
        if (pivot == size) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < size; ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < size; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    return det.get_num();
}

/// v_p(n!) by dividing every factor 1..n.
inline std::uint64_t brute_vp_factorial(std::uint64_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 2; k <= n; ++k) {
        for (std::uint64_t m = k; m % p == 0; m /= p) ++total;
    }
    return total;
}

struct Pt {
    long x;
    long y;
};

/// Lower-hull vertices: the two end points plus every point lying strictly
/// below each chord between a point on its left and one on its right. O(n^3).
inline std::vector<Pt> brute_lower_hull(const std::vector<Pt>& pts) {
    std::vector<Pt> out;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        bool vertex = true;
        for (std::size_t i = 0; vertex && i < j; ++i) {
            for (std::size_t k = j + 1; vertex && k < pts.size(); ++k) {
                // y_j < chord(i,k)(x_j)  <=>  (y_j - y_i)(x_k - x_i) < (y_k - y_i)(x_j - x_i)
                const long lhs = (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                const long rhs = (pts[k].y - pts[i].y) * (pts[j].x - pts[i].x);
                if (lhs >= rhs) vertex = false;
            }
        }
        if (vertex) out.push_back(pts[j]);
    }
    return out;
}

/// Naive F_p[x] arithmetic on ascending residue vectors, independent of PrimePoly.
namespace naive {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t x = 1; x < p; ++x) {
        if ((a * x) % p == 1) return x;
    }
    return 0;
}

/// Returns true and replaces f by f / g when g divides f.
inline bool divide_if_divisible(Poly& f, const Poly& g, std::uint64_t p) {
    Poly r = f;
    const std::size_t dg = g.size() - 1;
    if (r.size() < g.size()) return false;
    Poly q(r.size() - dg, 0);
    const std::uint64_t inv = inverse(g.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::uint64_t c = (r[k + dg] * inv) % p;
        q[k] = c;
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] = (r[k + j] + p * p - c * g[j] % p) % p;
    }
    trim(r);
    if (!r.empty()) return false;
    trim(q);
    f = q;
    return true;
}

/// Factor degrees by trial division with every monic polynomial, lowest degree first.
inline std::vector<int> factor_degrees(Poly f, std::uint64_t p) {
    trim(f);
    std::vector<int> degrees;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = c % p;
                c /= p;
            }
            g.back() = 1;
            // Lower-degree factors are already gone, so any divisor found here is irreducible.
            while (divide_if_divisible(f, g, p)) degrees.push_back(d);
        }
    }
    if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace naive

}  // namespace kraw::testing

#endif  // KRAW_TESTS_SUPPORT_HPP
