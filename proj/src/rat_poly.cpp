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

#include "kraw/rat_poly.hpp"

#include <stdexcept>

namespace kraw {

namespace {
const Rational kZero;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return RatPoly(std::move(coeffs));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : kZero; }

const Rational& RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    RatPoly r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[j].str();
        if (j >= 1) out += "*" + var;
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

Rational poly_eval(const RatPoly& f, const Rational& x0) {
    Rational acc;
    const auto c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

RatPoly poly_compose_linear(const RatPoly& f, const Rational& a, const Rational& b) {
    const RatPoly inner = RatPoly::linear(a, b);
    RatPoly acc;
    const auto c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RatPoly::constant(*it);
    return acc;
}

RatPoly poly_derivative(const RatPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
    for (std::size_t j = 1; j < f.coefficients().size(); ++j) out[j - 1] = f.coeff(j) * Rational(static_cast<long>(j));
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {RatPoly(), f};
    std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
    const auto dg = static_cast<std::size_t>(g.degree());
    std::vector<Rational> quot(rem.size() - dg);
    const Rational inv_lead = Rational(1) / g.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + dg] * inv_lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i <= dg; ++i) rem[k + i] -= q * g.coeff(i);
    }
    rem.resize(dg);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(const RatPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(Rational(1) / f.leading());
}

RatPoly poly_gcd(RatPoly f, RatPoly g) {
    while (!g.is_zero()) {
        RatPoly r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f);
}

RatPoly depress(const RatPoly& f) {
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("depress requires degree >= 2");
    const RatPoly monic = make_monic(f);
    const Rational shift = -monic.coeff(static_cast<std::size_t>(n - 1)) / Rational(static_cast<long>(n));
    return poly_compose_linear(monic, shift, Rational(1));
}

std::size_t zero_root_multiplicity(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("zero polynomial");
    std::size_t m = 0;
    while (f.coeff(m).is_zero()) ++m;
    return m;
}

}  // namespace kraw
