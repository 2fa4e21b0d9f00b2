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

#include "kraw/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace kraw {

namespace {

using Coeffs = std::vector<BigInt>;

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// lc(B)^{deg A - deg B + 1} A mod B, computed without division.
Coeffs pseudo_remainder(Coeffs r, const Coeffs& b) {
    const int db = deg(b);
    int e = deg(r) - db + 1;
    const BigInt& lb = b.back();
    while (!r.empty() && deg(r) >= db) {
        const BigInt top = r.back();
        const int shift = deg(r) - db;
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= top * b[static_cast<std::size_t>(i)];
        trim(r);
        --e;
    }
    if (e > 0) {
        const BigInt f = pow_int(lb, static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

}  // namespace

RatPoly IntPoly::to_rat_poly() const {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& a : coeffs) c.emplace_back(a);
    return RatPoly(std::move(c));
}

BigInt content(std::span<const BigInt> coeffs) {
    BigInt g = 0;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly make_int_poly(std::vector<BigInt> coeffs) {
    trim(coeffs);
    if (coeffs.empty()) throw std::invalid_argument("zero polynomial has no primitive form");
    const BigInt g = content(coeffs);
    for (auto& c : coeffs) c = exact_div(c, g);
    return IntPoly{std::move(coeffs), Rational(g)};
}

IntPoly primitive_integer_form(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no primitive form");
    BigInt denom_lcm = 1;
    for (const auto& c : f.coefficients()) {
        const BigInt d = c.denominator();
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Coeffs ints;
    ints.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) ints.push_back(exact_div(c.numerator() * denom_lcm, c.denominator()));
    IntPoly out = make_int_poly(std::move(ints));
    out.scale = out.scale / Rational(denom_lcm);
    return out;
}

BigInt resultant(std::span<const BigInt> f_in, std::span<const BigInt> g_in) {
    Coeffs a(f_in.begin(), f_in.end());
    Coeffs b(g_in.begin(), g_in.end());
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw std::invalid_argument("resultant of zero polynomial");

    int sign = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
    }
    if (deg(b) == 0) return sign * pow_int(b[0], static_cast<unsigned long>(deg(a)));

    const BigInt ca = content(a);
    const BigInt cb = content(b);
    for (auto& c : a) c = exact_div(c, ca);
    for (auto& c : b) c = exact_div(c, cb);
    const BigInt scale = pow_int(ca, static_cast<unsigned long>(deg(b))) * pow_int(cb, static_cast<unsigned long>(deg(a)));

    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
        Coeffs r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) return 0;
        const BigInt divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        for (auto& c : r) c = exact_div(c, divisor);
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0) {
            h = exact_div(pow_int(g, static_cast<unsigned long>(delta)), pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (deg(b) <= 0) break;
    }
    // b is a nonzero constant and deg a >= 1: h <- lc(b)^{deg a} / h^{deg a - 1}
    const auto da = static_cast<unsigned long>(deg(a));
    h = exact_div(pow_int(b[0], da), pow_int(h, da - 1));
    return sign * scale * h;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) { return resultant(std::span<const BigInt>(f.coeffs), g.coeffs); }

BigInt integer_discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    Coeffs deriv(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) deriv[static_cast<std::size_t>(j - 1)] = f.coeffs[static_cast<std::size_t>(j)] * j;
    BigInt res = resultant(std::span<const BigInt>(f.coeffs), deriv);
    BigInt disc = exact_div(res, f.leading());
    if ((static_cast<long>(n) * (n - 1) / 2) & 1) disc = -disc;
    return disc;
}

Rational discriminant(const RatPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    const IntPoly prim = primitive_integer_form(f);
    return Rational(integer_discriminant(prim)) * pow(prim.scale, static_cast<unsigned>(2 * n - 2));
}

}  // namespace kraw
