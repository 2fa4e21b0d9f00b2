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

#include "kraw/prime_poly.hpp"

#include <algorithm>
#include <utility>

#include "kraw/kernels.hpp"
#include "kraw/primes.hpp"

namespace kraw {

namespace {

void trim(std::vector<std::uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// In-place remainder of r by b (b nonzero); r keeps deg(b) entries at most.
void reduce_in_place(std::vector<std::uint64_t>& r, const PrimePoly& b) {
    const std::uint64_t p = b.modulus();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const std::uint64_t inv_lead = inv_mod(b.leading(), p);
    trim(r);
    while (r.size() > db) {
        const std::size_t shift = r.size() - 1 - db;
        const std::uint64_t q = (r.back() * inv_lead) % p;
        kernels::axpy_mod(std::span(r).subspan(shift, db + 1), bc, (p - q) % p, p);
        trim(r);
    }
}

}  // namespace

PrimePoly::PrimePoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : p_(modulus), c_(std::move(coeffs)) {
    if (p_ < 2 || p_ >= (1ULL << 32)) throw std::invalid_argument("PrimePoly modulus out of range");
    for (auto& v : c_) v %= p_;
    trim(c_);
}

std::string PrimePoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j] == 0) continue;
        if (!out.empty()) out += " + ";
        if (c_[j] != 1 || j == 0) out += std::to_string(c_[j]);
        if (j >= 1) out += (c_[j] != 1 ? "*x" : "x");
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out + " (mod " + std::to_string(p_) + ")";
}

PrimePoly operator+(const PrimePoly& a, const PrimePoly& b) {
    std::vector<std::uint64_t> out = a.coefficients();
    if (b.coefficients().size() > out.size()) out.resize(b.coefficients().size(), 0);
    kernels::axpy_mod(std::span(out).first(b.coefficients().size()), b.coefficients(), 1, a.modulus());
    return PrimePoly(a.modulus(), std::move(out));
}

PrimePoly operator-(const PrimePoly& a, const PrimePoly& b) {
    std::vector<std::uint64_t> out = a.coefficients();
    if (b.coefficients().size() > out.size()) out.resize(b.coefficients().size(), 0);
    kernels::axpy_mod(std::span(out).first(b.coefficients().size()), b.coefficients(), a.modulus() - 1, a.modulus());
    return PrimePoly(a.modulus(), std::move(out));
}

PrimePoly operator*(const PrimePoly& a, const PrimePoly& b) {
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return PrimePoly(p, {});
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<std::uint64_t> out(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        kernels::axpy_mod(std::span(out).subspan(i, bc.size()), bc, ac[i], p);
    }
    return PrimePoly(p, std::move(out));
}

PrimePoly poly_rem(const PrimePoly& a, const PrimePoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial remainder by zero");
    std::vector<std::uint64_t> r = a.coefficients();
    reduce_in_place(r, b);
    return PrimePoly(a.modulus(), std::move(r));
}

PrimePoly poly_quot(const PrimePoly& a, const PrimePoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return PrimePoly(p, {});
    std::vector<std::uint64_t> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const std::uint64_t inv_lead = inv_mod(b.leading(), p);
    std::vector<std::uint64_t> q(r.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::uint64_t coef = (r[k + db] * inv_lead) % p;
        q[k] = coef;
        if (coef != 0) kernels::axpy_mod(std::span(r).subspan(k, db + 1), bc, (p - coef) % p, p);
    }
    return PrimePoly(p, std::move(q));
}

PrimePoly make_monic(const PrimePoly& a) {
    if (a.is_zero()) return a;
    std::vector<std::uint64_t> c = a.coefficients();
    kernels::scale_mod(c, inv_mod(a.leading(), a.modulus()), a.modulus());
    return PrimePoly(a.modulus(), std::move(c));
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b) {
    while (!b.is_zero()) {
        PrimePoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

PrimePoly poly_derivative(const PrimePoly& a) {
    const std::uint64_t p = a.modulus();
    const auto& c = a.coefficients();
    if (c.size() <= 1) return PrimePoly(p, {});
    std::vector<std::uint64_t> out(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) out[j - 1] = (c[j] * (j % p)) % p;
    return PrimePoly(p, std::move(out));
}

PrimePoly poly_powmod(const PrimePoly& base, std::uint64_t e, const PrimePoly& modulus) {
    const std::uint64_t p = base.modulus();
    PrimePoly result = poly_rem(PrimePoly(p, {1}), modulus);
    PrimePoly b = poly_rem(base, modulus);
    while (e) {
        if (e & 1U) result = poly_rem(result * b, modulus);
        e >>= 1U;
        if (e) b = poly_rem(b * b, modulus);
    }
    return result;
}

BadPrime::BadPrime(std::uint64_t p, const std::string& why)
    : std::domain_error("bad prime " + std::to_string(p) + ": " + why) {}

NotSquarefree::NotSquarefree(std::uint64_t p)
    : std::domain_error("reduction is not squarefree mod " + std::to_string(p)) {}

PrimePoly reduce_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs.size());
    for (const auto& a : f.coeffs) c.push_back(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
    if (c.back() == 0) throw BadPrime(p, "divides the leading coefficient");
    return PrimePoly(p, std::move(c));
}

bool is_squarefree_mod_p(const PrimePoly& g) {
    if (g.degree() < 1) return true;
    const PrimePoly d = poly_derivative(g);
    if (d.is_zero()) return false;
    return poly_gcd(g, d).degree() == 0;
}

int CycleType::total() const {
    int s = 0;
    for (int d : degrees) s += d;
    return s;
}

bool CycleType::contains(int part) const { return std::find(degrees.begin(), degrees.end(), part) != degrees.end(); }

std::string CycleType::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + std::to_string(degrees[i]);
    return out + "]";
}

CycleType factor_degrees_mod_p(const PrimePoly& g) {
    if (!is_squarefree_mod_p(g)) throw NotSquarefree(g.modulus());
    return factor_degrees_squarefree(g);
}

CycleType factor_degrees_squarefree(const PrimePoly& g) {
    const std::uint64_t p = g.modulus();
    CycleType out;
    PrimePoly f = make_monic(g);
    const PrimePoly x = PrimePoly::x(p);

    // Frobenius powers: frob[i] = x^{i p} mod f, so h(x)^p = sum h_i frob[i].
    std::vector<PrimePoly> frob;
    const PrimePoly xp = poly_powmod(x, p, f);
    frob.push_back(poly_rem(PrimePoly(p, {1}), f));
    for (int i = 1; i < f.degree(); ++i) frob.push_back(poly_rem(frob.back() * xp, f));

    PrimePoly h = xp;  // x^{p^d} mod f
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        if (d > 1) {
            std::vector<std::uint64_t> next(static_cast<std::size_t>(f.degree()), 0);
            const auto& hc = h.coefficients();
            for (std::size_t i = 0; i < hc.size(); ++i) {
                const auto& col = frob[i].coefficients();
                if (hc[i] != 0 && !col.empty()) kernels::axpy_mod(std::span(next).first(col.size()), col, hc[i], p);
            }
            h = PrimePoly(p, std::move(next));
        }
        const PrimePoly stratum = poly_gcd(f, h - x);
        if (stratum.degree() > 0) {
            // Every irreducible factor in this stratum has degree exactly d.
            for (int k = 0; k < stratum.degree() / d; ++k) out.degrees.push_back(d);
            f = poly_quot(f, stratum);
            h = poly_rem(h, f);
            frob.resize(static_cast<std::size_t>(std::max(f.degree(), 1)), PrimePoly(p, {}));
            for (auto& col : frob) col = poly_rem(col, f);
        }
    }
    if (f.degree() > 0) out.degrees.push_back(f.degree());
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

}  // namespace kraw
