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

#include "kraw/int_poly.hpp"
#include "kraw/primes.hpp"
#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"
#include "support.hpp"

using namespace kraw;
using kraw::testing::random_nonzero_rational;
using kraw::testing::random_rational;

namespace {

RatPoly X() { return RatPoly::monomial(1, 1); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("17").str() == "17");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
}

TEST_CASE("rat_binomial") {
    CHECK(rat_binomial(-1, 5) == -1);
    CHECK(rat_binomial(Rational(7, 3), 0) == 1);
    CHECK(rat_binomial(19, 3) == 969);
    CHECK(rat_binomial(3, 5) == 0);
    CHECK(rat_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    for (unsigned n = 0; n <= 12; ++n) CHECK(rat_binomial(-1, n) == (n % 2 ? -1 : 1));
}

TEST_CASE("vp") {
    CHECK(vp(12, 2) == Valuation(2));
    CHECK(vp(0, 2).is_infinite());
    CHECK(vp(Rational(3, 8), 2) == Valuation(-3));
    CHECK_THROWS_AS(vp(12, 4), NotPrime);
    CHECK(Valuation::infinity() > Valuation(1000000));
    CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
    CHECK_THROWS(Valuation::infinity().value());
}

TEST_CASE("vp is additive on random rationals") {
    std::mt19937_64 rng(11);
    const auto primes = primes_up_to(100);
    for (int i = 0; i < 400; ++i) {
        const Rational a = random_nonzero_rational(rng, 100000, 100000);
        const Rational b = random_nonzero_rational(rng, 100000, 100000);
        const std::uint64_t p = primes[rng() % primes.size()];
        CHECK(vp(a * b, p) == vp(a, p) + vp(b, p));
    }
}

TEST_CASE("vp_factorial") {
    CHECK(vp_factorial(19, 2) == 16);
    CHECK(vp_factorial(0, 5) == 0);
    CHECK(vp_factorial(9, 3) == 4);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (std::uint64_t n = 0; n <= 2000; ++n) REQUIRE(vp_factorial(n, p) == kraw::testing::brute_vp_factorial(n, p));
    }
}

TEST_CASE("polynomial ring operations") {
    const RatPoly x = X();
    CHECK((x + RatPoly::constant(1)) * (x - RatPoly::constant(1)) == RatPoly{-1, 0, 1});
    const RatPoly f{1, 2, 3};
    CHECK(f + RatPoly() == f);
    CHECK(poly_scale(x.scaled(Rational(1, 2)), 2) == x);
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    CHECK(RatPoly{1, 0, 0}.degree() == 0);
    CHECK(RatPoly{Rational(1, 2), 0, -3}.str() == "1/2 + -3*x^2");
    CHECK(RatPoly().str() == "0");
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(RatPoly{-1, 0, 1}, 2) == 3);
    CHECK(poly_eval(RatPoly{7, 5, 3}, 0) == 7);
    CHECK(poly_eval(RatPoly::monomial(1, 3), Rational(-1, 2)) == Rational(-1, 8));
}

TEST_CASE("poly_compose_linear") {
    CHECK(poly_compose_linear(RatPoly::monomial(1, 2), 1, 1) == RatPoly{1, 2, 1});
    const RatPoly f{3, -1, 4, 1};
    CHECK(poly_compose_linear(f, 0, 1) == f);
    CHECK(poly_compose_linear(RatPoly{0, -1, 1}, Rational(1, 2), 1) == RatPoly{Rational(-1, 4), 0, 1});

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const RatPoly g = kraw::testing::to_rat(kraw::testing::random_int_coeffs(rng, 5, 20));
        const Rational a = random_rational(rng, 9, 9);
        const Rational b = random_nonzero_rational(rng, 9, 9);
        const Rational x0 = random_rational(rng, 9, 9);
        CHECK(poly_eval(poly_compose_linear(g, a, b), x0) == poly_eval(g, b * x0 + a));
    }
}

TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(RatPoly::monomial(1, 3)) == RatPoly{0, 0, 3});
    CHECK(poly_derivative(RatPoly::constant(5)).is_zero());
    CHECK(poly_derivative(RatPoly{0, 1, Rational(1, 2)}) == RatPoly{1, 1});
}

TEST_CASE("division and gcd") {
    const RatPoly f{-1, 0, 0, 1};  // x^3 - 1
    const RatPoly g{-1, 1};
    const auto [q, r] = poly_divmod(f, g);
    CHECK(q == RatPoly{1, 1, 1});
    CHECK(r.is_zero());
    CHECK(poly_gcd(f, RatPoly{-1, 0, 1}) == g);
    CHECK_THROWS(poly_divmod(f, RatPoly()));
}

TEST_CASE("primitive_integer_form") {
    const IntPoly a = primitive_integer_form(RatPoly{Rational(1, 3), Rational(1, 2)});
    CHECK(a.coeffs == std::vector<BigInt>{2, 3});
    CHECK(a.scale == Rational(1, 6));
    const IntPoly b = primitive_integer_form(RatPoly{1, 1});
    CHECK(b.coeffs == std::vector<BigInt>{1, 1});
    CHECK(b.scale == 1);
    const IntPoly c = primitive_integer_form(RatPoly{2, 4});
    CHECK(c.coeffs == std::vector<BigInt>{1, 2});
    CHECK(c.scale == 2);
    CHECK_THROWS_AS(primitive_integer_form(RatPoly()), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> coeffs;
        const int degree = static_cast<int>(rng() % 8);
        for (int j = 0; j <= degree; ++j) coeffs.push_back(random_rational(rng, 50, 30));
        if (coeffs.back().is_zero()) coeffs.back() = 1;
        const RatPoly f(coeffs);
        const IntPoly g = primitive_integer_form(f);
        CHECK(g.to_rat_poly().scaled(g.scale) == f);
        CHECK(content(g.coeffs) == 1);
        CHECK(sgn(g.leading()) == f.leading().sign());
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(std::vector<BigInt>{-1, 1}, std::vector<BigInt>{1, 1}) == 2);
    CHECK(resultant(std::vector<BigInt>{0, 1}, std::vector<BigInt>{0, 1}) == 0);
    CHECK(resultant(std::vector<BigInt>{1, 0, 1}, std::vector<BigInt>{-1, 1}) == 2);
    CHECK_THROWS_AS(resultant(std::vector<BigInt>{}, std::vector<BigInt>{1, 1}), std::invalid_argument);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const int df = static_cast<int>(rng() % 7);
        const int dg = static_cast<int>(rng() % 7);
        auto f = kraw::testing::random_int_coeffs(rng, df, 12);
        auto g = kraw::testing::random_int_coeffs(rng, dg, 12);
        if (i % 5 == 0 && df >= 1 && dg >= 1) {
            // Force a common factor (x - 1) now and then.
            std::vector<BigInt> lin{-1, 1};
            auto mul = [&](const std::vector<BigInt>& a) {
                std::vector<BigInt> out(a.size() + 1, 0);
                for (std::size_t j = 0; j < a.size(); ++j) {
                    out[j] += a[j] * lin[0];
                    out[j + 1] += a[j] * lin[1];
                }
                return out;
            };
            f = mul(f);
            g = mul(g);
        }
        const BigInt expected = kraw::testing::sylvester_resultant(f, g);
        REQUIRE(resultant(f, g) == expected);
        const int sign = ((f.size() - 1) * (g.size() - 1)) % 2 ? -1 : 1;
        CHECK(resultant(g, f) == sign * expected);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(RatPoly{1, 1, 1}) == -3);
    CHECK(discriminant(RatPoly{1, -2, 1}) == 0);
    CHECK(discriminant(RatPoly{1, 0, 0, 1}) == -27);
    CHECK(discriminant(RatPoly{-1, 2}) == 1);
    CHECK_THROWS_AS(discriminant(RatPoly::constant(3)), std::invalid_argument);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const Rational p = random_rational(rng, 60, 20);
        const Rational q = random_rational(rng, 60, 20);
        CHECK(discriminant(RatPoly{q, p, 0, 1}) == Rational(-4) * p * p * p - Rational(27) * q * q);
        const Rational a = random_nonzero_rational(rng, 30, 10);
        const Rational b = random_rational(rng, 30, 10);
        const Rational c = random_rational(rng, 30, 10);
        CHECK(discriminant(RatPoly{c, b, a}) == b * b - Rational(4) * a * c);
    }
}

TEST_CASE("is_rational_square") {
    CHECK(is_rational_square(Rational(4, 9)));
    CHECK_FALSE(is_rational_square(-4));
    CHECK(is_rational_square(Rational(441, 4)));
    CHECK(is_rational_square(0));
    CHECK_FALSE(is_rational_square(Rational(2, 9)));
    CHECK(rational_sqrt(Rational(441, 4)) == Rational(21, 2));
    CHECK_THROWS_AS(rational_sqrt(3), std::domain_error);
}

TEST_CASE("depress") {
    CHECK(depress(RatPoly{2, 4, 2}) == RatPoly::monomial(1, 2));
    CHECK(depress(RatPoly{0, 0, -3, 1}) == RatPoly{-2, -3, 0, 1});
    CHECK(depress(RatPoly{1, 0, 1}) == RatPoly{1, 0, 1});
    CHECK_THROWS_AS(depress(RatPoly{1, 1}), std::invalid_argument);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        const int degree = 2 + static_cast<int>(rng() % 6);
        const RatPoly f = kraw::testing::to_rat(kraw::testing::random_int_coeffs(rng, degree, 15));
        const RatPoly d = depress(f);
        CHECK(d.degree() == degree);
        CHECK(d.leading() == 1);
        CHECK(d.coeff(static_cast<std::size_t>(degree - 1)).is_zero());
        CHECK(discriminant(make_monic(f)) == discriminant(d));
    }
}
