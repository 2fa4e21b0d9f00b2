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

#include <doctest.h>

#include <random>

#include "kraw/galois.hpp"
#include "kraw/krawtchouk.hpp"
#include "kraw/prime_poly.hpp"
#include "kraw/primes.hpp"
#include "support.hpp"

using namespace kraw;
namespace naive = kraw::testing::naive;

namespace {

IntPoly ints(std::vector<BigInt> c) { return make_int_poly(std::move(c)); }

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

naive::Poly residues(const std::vector<BigInt>& c, std::uint64_t p) {
    naive::Poly out;
    for (const auto& v : c) {
        BigInt r = v % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        out.push_back(r.get_ui());
    }
    return out;
}

IntPoly k_minus_one(unsigned n) { return primitive_integer_form(krawtchouk_poly({n, Rational(-1)})); }

}  // namespace

TEST_CASE("reduce_mod_p") {
    CHECK(reduce_mod_p(ints({7, 5, 3}), 5) == PrimePoly(5, {2, 0, 3}));
    CHECK(reduce_mod_p(ints({-1, 0, 1}), 3) == PrimePoly(3, {2, 0, 1}));
    CHECK_THROWS_AS(reduce_mod_p(ints({1, 1, 5}), 5), BadPrime);
    CHECK_THROWS(reduce_mod_p(ints({1, 1}), 6));
}

TEST_CASE("squarefree test mod p") {
    CHECK(is_squarefree_mod_p(PrimePoly(7, {6, 0, 1})));
    CHECK_FALSE(is_squarefree_mod_p(PrimePoly(7, {1, 2, 1})));
    // x^2 + 1 = (x + 1)^2 over F_2.
    CHECK_FALSE(is_squarefree_mod_p(PrimePoly(2, {1, 0, 1})));
    // A p-th power has zero derivative.
    CHECK_FALSE(is_squarefree_mod_p(PrimePoly(3, {1, 0, 0, 1})));
    CHECK_THROWS_AS(factor_degrees_mod_p(PrimePoly(7, {1, 2, 1})), NotSquarefree);
}

TEST_CASE("distinct-degree factorization examples") {
    CHECK(factor_degrees_mod_p(PrimePoly(7, {1, 0, 1})).degrees == std::vector<int>{2});
    CHECK(factor_degrees_mod_p(PrimePoly(5, {4, 0, 1})).degrees == std::vector<int>{1, 1});
    CHECK(factor_degrees_mod_p(PrimePoly(2, {1, 1, 0, 1})).degrees == std::vector<int>{3});
    // x^5 - x splits completely over F_5.
    CHECK(factor_degrees_mod_p(PrimePoly(5, {0, 4, 0, 0, 0, 1})).degrees == std::vector<int>{1, 1, 1, 1, 1});
    const CycleType c = factor_degrees_mod_p(PrimePoly(3, {2, 0, 0, 1, 0, 1}));
    CHECK(c.total() == 5);
    CHECK(c.str() == "[1,4]");
}

TEST_CASE("DDF agrees with exhaustive trial division") {
    std::mt19937_64 rng(53);
    int compared = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int i = 0; i < 150; ++i) {
            const int degree = 1 + static_cast<int>(rng() % 6);
            std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
            for (auto& v : c) v = rng() % p;
            c.back() = 1 + rng() % (p - 1);
            const PrimePoly g(p, c);
            if (!is_squarefree_mod_p(g)) continue;
            naive::Poly monic = c;
            const std::uint64_t inv = naive::inverse(c.back(), p);
            for (auto& v : monic) v = v * inv % p;
            REQUIRE(factor_degrees_mod_p(g).degrees == naive::factor_degrees(monic, p));
            ++compared;
        }
    }
    CHECK(compared > 300);
}

TEST_CASE("jordan_range") {
    CHECK(jordan_range(10) == std::vector<std::uint64_t>{7});
    CHECK(jordan_range(20) == std::vector<std::uint64_t>{11, 13, 17});
    CHECK(jordan_range(8) == std::vector<std::uint64_t>{5});
    CHECK(jordan_range(9) == std::vector<std::uint64_t>{5});
    CHECK(jordan_range(12) == std::vector<std::uint64_t>{7});
    CHECK_THROWS_AS(jordan_range(7), DegreeTooSmall);
}

TEST_CASE("rational_roots") {
    // x (2x - 1)(x + 3)(x^2 + 1)
    const auto f = multiply(multiply(multiply({0, 1}, {-1, 2}), {3, 1}), {1, 0, 1});
    CHECK(rational_roots(kraw::testing::to_rat(f)) == std::vector<Rational>{Rational(-3), Rational(0), Rational(1, 2)});
    CHECK(rational_roots(RatPoly{1, 0, 1}).empty());
    CHECK(rational_roots(RatPoly{Rational(-4, 9), 0, 1}) == std::vector<Rational>{Rational(-2, 3), Rational(2, 3)});
    // Repeated root.
    CHECK(rational_roots(kraw::testing::to_rat(multiply({-5, 7}, {-5, 7}))) == std::vector<Rational>{Rational(5, 7)});
    CHECK(rational_roots(RatPoly::constant(4)).empty());
    CHECK_THROWS(rational_roots(RatPoly()));

    std::mt19937_64 rng(59);
    for (int i = 0; i < 100; ++i) {
        const Rational r = kraw::testing::random_rational(rng, 1000, 500);
        const auto cofactor = kraw::testing::random_int_coeffs(rng, static_cast<int>(rng() % 5), 30);
        const auto f = multiply({-r.numerator(), r.denominator()}, cofactor);
        const auto roots = rational_roots(kraw::testing::to_rat(f));
        CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
        for (const auto& x : roots) CHECK(poly_eval(kraw::testing::to_rat(f), x).is_zero());
    }
}

TEST_CASE("irreducibility sieve examples") {
    for (unsigned k = 2; k <= 6; ++k) CHECK(irreducibility_sieve(k_minus_one(1U << k), {}).verdict == SieveVerdict::Irreducible);
    const SieveResult split = irreducibility_sieve(ints({-1, 0, 1}), {});
    CHECK(split.verdict == SieveVerdict::Reducible);
    REQUIRE(split.root.has_value());
    CHECK((*split.root == 1 || *split.root == -1));
    CHECK(irreducibility_sieve(ints({2, 0, 0, 0, 0, 1}), {}).verdict == SieveVerdict::Irreducible);
    // Product of two irreducible quadratics: no root, the sieve must not claim irreducibility.
    CHECK(irreducibility_sieve(ints(multiply({1, 0, 1}, {2, 0, 1})), {}).verdict != SieveVerdict::Irreducible);
    // A reducible cubic specialization: the underlying cubic at t = 2 has a rational root.
    const RatPoly cubic = underlying_poly({3, 0, Rational(2)});
    const SieveResult r3 = irreducibility_sieve(primitive_integer_form(cubic), {});
    CHECK(r3.verdict == (rational_roots(cubic).empty() ? SieveVerdict::Irreducible : SieveVerdict::Reducible));
}

TEST_CASE("sieve soundness on constructed reducibles") {
    std::mt19937_64 rng(61);
    int reducible = 0;
    for (int i = 0; i < 500; ++i) {
        const int dg = 1 + static_cast<int>(rng() % 5);
        const int dh = 1 + static_cast<int>(rng() % (10 - dg > 5 ? 5 : 10 - dg));
        const auto f = multiply(kraw::testing::random_int_coeffs(rng, dg, 20), kraw::testing::random_int_coeffs(rng, dh, 20));
        const SieveResult s = irreducibility_sieve(ints(f), {});
        REQUIRE(s.verdict != SieveVerdict::Irreducible);
        if (s.verdict == SieveVerdict::Reducible) {
            ++reducible;
            if (s.root) CHECK(poly_eval(kraw::testing::to_rat(f), *s.root).is_zero());
        }
    }
    CHECK(reducible > 0);
}

TEST_CASE("galois_scan on small examples") {
    const GaloisReport quad = galois_scan(ints({1, 1, 1}), 50);
    CHECK(quad.status == GaloisStatus::FullSymmetric);
    CHECK(quad.discriminant == -3);

    const GaloisReport cyclic = galois_scan(ints({-1, -3, 0, 1}), 100);
    CHECK(cyclic.discriminant == 81);
    CHECK(cyclic.disc_square);
    CHECK(cyclic.irreducibility.verdict == SieveVerdict::Irreducible);
    CHECK(cyclic.status == GaloisStatus::ContainsAlternating);
    // A_3: every good prime either splits it completely or keeps it irreducible.
    for (const auto& w : cyclic.witnesses) CHECK((w.cycle_type.degrees == std::vector<int>{3} || w.cycle_type.degrees == std::vector<int>{1, 1, 1}));

    CHECK(galois_scan(ints({-1, 0, 1}), 50).status == GaloisStatus::Reducible);
    CHECK(galois_scan(ints({1, 2, 1}), 50).status == GaloisStatus::Reducible);
    // (x^2 + 2)^2: no good prime exists, so nothing beyond "unknown" may be claimed.
    const GaloisReport square = galois_scan(ints({4, 0, 4, 0, 1}), 50);
    CHECK(square.discriminant == 0);
    CHECK(square.primes_sampled == 0);
    CHECK(square.irreducibility.verdict != SieveVerdict::Irreducible);
    CHECK((square.status == GaloisStatus::Reducible || square.status == GaloisStatus::Inconclusive));

    const GaloisReport k20 = galois_scan(primitive_integer_form(underlying_poly({10, 0, Rational(20)})), 200);
    CHECK(k20.status == GaloisStatus::FullSymmetric);
    CHECK(k20.jordan_prime == std::optional<std::uint64_t>{7});
}

TEST_CASE("Dedekind consistency on products") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 50; ++i) {
        const auto g = kraw::testing::random_int_coeffs(rng, 1 + static_cast<int>(rng() % 4), 15);
        const auto h = kraw::testing::random_int_coeffs(rng, 1 + static_cast<int>(rng() % 4), 15);
        const auto f = multiply(g, h);
        const IntPoly fi = ints(f);
        for (std::uint64_t p : primes_up_to(60)) {
            if (f.back() % static_cast<unsigned long>(p) == 0) continue;
            const PrimePoly fp = reduce_mod_p(fi, p);
            if (!is_squarefree_mod_p(fp)) continue;
            std::vector<int> expected = factor_degrees_mod_p(reduce_mod_p(ints(g), p)).degrees;
            const auto hd = factor_degrees_mod_p(reduce_mod_p(ints(h), p)).degrees;
            expected.insert(expected.end(), hd.begin(), hd.end());
            std::sort(expected.begin(), expected.end());
            CHECK(factor_degrees_mod_p(fp).degrees == expected);
            CHECK(naive::factor_degrees(residues(fi.coeffs, p), p).size() == expected.size());
        }
    }
}

TEST_CASE("FULL_SYMMETRIC never comes with a square discriminant") {
    std::mt19937_64 rng(71);
    int full = 0;
    for (int i = 0; i < 80; ++i) {
        const auto f = kraw::testing::random_int_coeffs(rng, 2 + static_cast<int>(rng() % 9), 25);
        const IntPoly fi = ints(f);
        if (integer_discriminant(fi) == 0) continue;
        const GaloisReport r = galois_scan(fi, 150);
        if (r.status == GaloisStatus::FullSymmetric) {
            ++full;
            CHECK_FALSE(r.disc_square);
        }
        for (const auto& w : r.witnesses) CHECK(w.cycle_type.total() == fi.degree());
    }
    CHECK(full > 20);
}

TEST_CASE("disc_valuation_profile") {
    const DiscProfile a = disc_valuation_profile(ints({-1, 0, 1}), {2, 3});
    CHECK(a.discriminant == 4);
    CHECK(a.valuations == std::vector<std::pair<std::uint64_t, long>>{{2, 2}, {3, 0}});
    CHECK(a.cofactor == 1);
    const DiscProfile b = disc_valuation_profile(ints({-3, 0, 1}), {2, 3, 5});
    CHECK(b.discriminant == 12);
    CHECK(b.valuations == std::vector<std::pair<std::uint64_t, long>>{{2, 2}, {3, 1}, {5, 0}});
    CHECK_THROWS(disc_valuation_profile(ints({1, 2, 1}), {2}));
}

TEST_CASE("product_of_roots_relation") {
    CHECK(product_of_roots_relation(2) == std::pair{Rational(1), Rational(1, 2)});
    CHECK(product_of_roots_relation(4) == std::pair{Rational(1), Rational(3, 2)});
    CHECK(product_of_roots_relation(8).second == Rational(315, 2));
    CHECK_THROWS(product_of_roots_relation(3));
}

TEST_CASE("report JSON") {
    const nlohmann::json j = to_json(galois_scan(ints({-1, -3, 0, 1}), 30));
    CHECK(j.at("status") == "CONTAINS_ALTERNATING");
    CHECK(j.at("disc_square") == true);
    CHECK(j.contains("witnesses"));
}
