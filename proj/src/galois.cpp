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

#include "kraw/galois.hpp"

#include <algorithm>
#include <set>

#include "kraw/krawtchouk.hpp"
#include "kraw/newton_polygon.hpp"
#include "kraw/primes.hpp"

namespace kraw {

namespace {

struct PrimeSample {
    std::uint64_t p = 0;
    enum class Kind { DividesLeading, NotSquarefree, Good } kind = Kind::Good;
    CycleType cycle_type;
};

std::vector<PrimeSample> sample_primes(const IntPoly& f, const std::vector<std::uint64_t>& primes) {
    std::vector<PrimeSample> out;
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw NotPrime(p);
        PrimeSample s;
        s.p = p;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p))) {
            s.kind = PrimeSample::Kind::DividesLeading;
        } else {
            const PrimePoly g = reduce_mod_p(f, p);
            if (is_squarefree_mod_p(g)) {
                s.cycle_type = factor_degrees_squarefree(g);
            } else {
                s.kind = PrimeSample::Kind::NotSquarefree;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::set<int> subset_sums(const std::vector<int>& parts, int n) {
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (int d : parts) {
        for (int s = n; s >= d; --s) {
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
        }
    }
    std::set<int> out;
    for (int s = 1; s < n; ++s) {
        if (reach[static_cast<std::size_t>(s)]) out.insert(s);
    }
    return out;
}

void intersect(std::set<int>& acc, const std::set<int>& other) {
    for (auto it = acc.begin(); it != acc.end();) {
        it = other.count(*it) ? std::next(it) : acc.erase(it);
    }
}

SieveResult sieve_with_samples(const IntPoly& f, const std::vector<PrimeSample>& samples) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("irreducibility sieve needs degree >= 1");
    if (n == 1) return {SieveVerdict::Irreducible, "linear", std::nullopt, std::nullopt};

    const RatPoly rat = f.to_rat_poly();
    const auto roots = rational_roots(rat);
    if (!roots.empty()) return {SieveVerdict::Reducible, "rational-root", roots.front(), std::nullopt};
    if (n <= 3) return {SieveVerdict::Irreducible, "no-rational-root", std::nullopt, std::nullopt};

    for (const auto& s : samples) {
        const auto cert = eisenstein_certificate(f, s.p);
        if (cert == EisensteinCertificate::Direct) return {SieveVerdict::Irreducible, "eisenstein", std::nullopt, s.p};
        if (cert == EisensteinCertificate::Reversed) return {SieveVerdict::Irreducible, "eisenstein-reversed", std::nullopt, s.p};
    }

    // Degrees a proper factor could still have; linear factors are already excluded.
    std::set<int> feasible;
    for (int d = 2; d <= n - 2; ++d) feasible.insert(d);
    for (const auto& s : samples) {
        const std::set<int> np_degrees = np_feasible_factor_degrees(newton_polygon(rat, s.p));
        if (np_degrees.empty()) return {SieveVerdict::Irreducible, "dumas", std::nullopt, s.p};
        intersect(feasible, np_degrees);
        if (s.kind == PrimeSample::Kind::Good) {
            if (s.cycle_type.degrees.size() == 1) return {SieveVerdict::Irreducible, "irreducible-mod-p", std::nullopt, s.p};
            intersect(feasible, subset_sums(s.cycle_type.degrees, n));
        }
        if (feasible.empty()) return {SieveVerdict::Irreducible, "degree-sets", std::nullopt, s.p};
    }
    return {SieveVerdict::Unknown, "", std::nullopt, std::nullopt};
}

// First odd prime p not dividing lc(h) with h squarefree mod p; gives up
// after `attempts` primes (0 = never, for h known to be squarefree over Q).
std::optional<PrimePoly> squarefree_reduction(const IntPoly& h, unsigned attempts) {
    if (h.degree() < 1) return std::nullopt;
    unsigned tried = 0;
    for (std::uint64_t p = 3; attempts == 0 || tried < attempts; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(h.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ++tried;
        PrimePoly candidate = reduce_mod_p(h, p);
        if (is_squarefree_mod_p(candidate)) return candidate;
    }
    return std::nullopt;
}

bool is_transposition_witness(const CycleType& ct) {
    int twos = 0;
    for (int d : ct.degrees) {
        if (d == 2) {
            ++twos;
        } else if (d % 2 == 0) {
            return false;
        }
    }
    return twos == 1;
}

}  // namespace

DegreeTooSmall::DegreeTooSmall(int n)
    : std::invalid_argument("Jordan's criterion needs degree >= 8, got " + std::to_string(n)) {}

std::vector<std::uint64_t> jordan_range(int n) {
    if (n < 8) throw DegreeTooSmall(n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t l : primes_up_to(static_cast<std::uint64_t>(n))) {
        if (2 * l > static_cast<std::uint64_t>(n) && l + 2 < static_cast<std::uint64_t>(n)) out.push_back(l);
    }
    return out;
}

std::vector<Rational> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::set<Rational> roots;
    const std::size_t m = zero_root_multiplicity(f);
    if (m > 0) roots.insert(Rational(0));
    RatPoly g(std::vector<Rational>(f.coefficients().begin() + static_cast<long>(m), f.coefficients().end()));
    if (g.degree() >= 1) {
        IntPoly h = primitive_integer_form(g);
        std::optional<PrimePoly> reduced = squarefree_reduction(h, 64);
        if (h.degree() > 1 && !reduced) {
            // Repeated factors over Q: continue with the squarefree part.
            h = primitive_integer_form(poly_divmod(g, poly_gcd(g, poly_derivative(g))).first);
            reduced = squarefree_reduction(h, 0);
        }
        const BigInt& lead = h.leading();
        if (h.degree() == 1) {
            roots.insert(Rational(-h.coeffs[0], lead));
        } else if (h.degree() > 1) {
            const BigInt abs_lead = ::abs(lead);
            BigInt max_coeff = 0;
            for (std::size_t i = 0; i + 1 < h.coeffs.size(); ++i) max_coeff = std::max(max_coeff, BigInt(::abs(h.coeffs[i])));
            BigInt cauchy;
            mpz_cdiv_q(cauchy.get_mpz_t(), max_coeff.get_mpz_t(), abs_lead.get_mpz_t());
            cauchy += 1;
            const BigInt needed = 2 * abs_lead * cauchy + 1;

            const std::uint64_t p = reduced->modulus();
            const RatPoly h_rat = h.to_rat_poly();
            std::vector<BigInt> deriv(h.coeffs.size() - 1);
            for (std::size_t j = 1; j < h.coeffs.size(); ++j) deriv[j - 1] = h.coeffs[j] * static_cast<unsigned long>(j);

            auto eval_mod = [](const std::vector<BigInt>& c, const BigInt& x, const BigInt& mod) {
                BigInt acc = 0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) {
                    acc = acc * x + *it;
                    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
                }
                return acc;
            };

            const auto& rc = reduced->coefficients();
            for (std::uint64_t r = 0; r < p; ++r) {
                std::uint64_t acc = 0;
                for (auto it = rc.rbegin(); it != rc.rend(); ++it) acc = (acc * r + *it) % p;
                if (acc != 0) continue;
                // Newton iteration doubles the p-adic precision each step.
                BigInt modulus = static_cast<unsigned long>(p);
                BigInt x = static_cast<unsigned long>(r);
                while (modulus < needed) {
                    modulus *= modulus;
                    const BigInt fx = eval_mod(h.coeffs, x, modulus);
                    BigInt dfx = eval_mod(deriv, x, modulus);
                    mpz_invert(dfx.get_mpz_t(), dfx.get_mpz_t(), modulus.get_mpz_t());
                    x = x - fx * dfx;
                    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
                }
                // A root u/v has v | lead, so lead * u / v is an integer of size <= |lead| * cauchy.
                BigInt c = lead * x;
                mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
                if (2 * c > modulus) c -= modulus;
                const Rational candidate(c, lead);
                if (poly_eval(h_rat, candidate).is_zero()) roots.insert(candidate);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

const char* to_string(SieveVerdict v) {
    switch (v) {
        case SieveVerdict::Irreducible: return "IRREDUCIBLE";
        case SieveVerdict::Reducible: return "REDUCIBLE";
        case SieveVerdict::Unknown: break;
    }
    return "UNKNOWN";
}

SieveResult irreducibility_sieve(const IntPoly& f, const SieveBudget& budget) {
    return sieve_with_samples(f, sample_primes(f, primes_up_to(budget.prime_bound)));
}

const char* to_string(GaloisStatus s) {
    switch (s) {
        case GaloisStatus::Reducible: return "REDUCIBLE";
        case GaloisStatus::ContainsAlternating: return "CONTAINS_ALTERNATING";
        case GaloisStatus::FullSymmetric: return "FULL_SYMMETRIC";
        case GaloisStatus::Inconclusive: break;
    }
    return "INCONCLUSIVE";
}

namespace {

GaloisReport scan_with_samples(const IntPoly& f, const std::vector<PrimeSample>& samples, const SieveResult& irreducibility) {
    GaloisReport report;
    const int n = f.degree();
    report.degree = n;
    report.irreducibility = irreducibility;
    report.primes_examined = samples.size();

    std::vector<std::uint64_t> jordan;
    if (n >= 8) jordan = jordan_range(n);
    bool transposition = false;
    bool long_cycle = false;
    for (const auto& s : samples) {
        if (s.kind != PrimeSample::Kind::Good) continue;
        ++report.primes_sampled;
        report.witnesses.push_back({s.p, s.cycle_type});
        for (std::uint64_t l : jordan) {
            if (s.cycle_type.contains(static_cast<int>(l))) {
                ++report.jordan_witness_count;
                if (!report.jordan_prime) report.jordan_prime = l;
                break;
            }
        }
        if (is_transposition_witness(s.cycle_type)) transposition = true;
        if (n >= 2 && s.cycle_type.degrees == std::vector<int>{1, n - 1}) long_cycle = true;
    }

    report.discriminant = integer_discriminant(f);
    report.disc_square = report.discriminant != 0 && is_rational_square(Rational(report.discriminant));
    if (report.discriminant != 0) {
        for (std::uint64_t p : primes_up_to(100)) {
            const long v = vp_integer(report.discriminant, p);
            if (v > 0) report.disc_valuations.emplace_back(p, v);
        }
    }

    switch (irreducibility.verdict) {
        case SieveVerdict::Reducible:
            report.status = GaloisStatus::Reducible;
            return report;
        case SieveVerdict::Unknown:
            report.status = GaloisStatus::Inconclusive;
            return report;
        case SieveVerdict::Irreducible:
            break;
    }

    if (n == 1) {
        // The trivial group is both S_1 and A_1; the discriminant 1 is a square.
        report.status = GaloisStatus::ContainsAlternating;
        report.evidence = "degree-1";
    } else if (n == 2) {
        report.status = GaloisStatus::FullSymmetric;
        report.evidence = "degree-2";
    } else if (n == 3) {
        report.status = report.disc_square ? GaloisStatus::ContainsAlternating : GaloisStatus::FullSymmetric;
        report.evidence = "degree-3-discriminant";
    } else if (report.jordan_prime) {
        report.status = report.disc_square ? GaloisStatus::ContainsAlternating : GaloisStatus::FullSymmetric;
        report.evidence = "jordan";
    } else if (transposition && long_cycle) {
        // Transitive with an (n-1)-cycle is 2-transitive; add a transposition and it is S_n.
        report.status = GaloisStatus::FullSymmetric;
        report.evidence = "transposition+(n-1)-cycle";
    } else {
        report.status = GaloisStatus::Inconclusive;
    }
    return report;
}

}  // namespace

GaloisReport galois_scan(const IntPoly& f, std::uint64_t prime_bound) {
    return galois_scan_sampled(f, primes_up_to(prime_bound));
}

GaloisReport galois_scan(const IntPoly& f, std::uint64_t prime_bound, const SieveResult& irreducibility) {
    return galois_scan_sampled(f, primes_up_to(prime_bound), irreducibility);
}

GaloisReport galois_scan_sampled(const IntPoly& f, std::vector<std::uint64_t> primes, const std::optional<SieveResult>& irreducibility) {
    if (f.degree() < 1) throw std::invalid_argument("galois_scan needs degree >= 1");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    const auto samples = sample_primes(f, primes);
    return scan_with_samples(f, samples, irreducibility ? *irreducibility : sieve_with_samples(f, samples));
}

DiscProfile disc_valuation_profile(const IntPoly& f, const std::vector<std::uint64_t>& primes) {
    DiscProfile out;
    out.discriminant = integer_discriminant(f);
    if (out.discriminant == 0) throw std::domain_error("discriminant is zero");
    out.cofactor = out.discriminant;
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw NotPrime(p);
        const BigInt prime(static_cast<unsigned long>(p));
        const long v = static_cast<long>(mpz_remove(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), prime.get_mpz_t()));
        out.valuations.emplace_back(p, v);
    }
    return out;
}

std::pair<Rational, Rational> product_of_roots_relation(unsigned n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("product_of_roots_relation needs even n >= 2");
    const RatPoly k = krawtchouk_poly({n, Rational(-1)});
    return {k.coeff(0), k.coeff(0) / k.leading()};
}

nlohmann::json to_json(const SieveResult& result) {
    nlohmann::json j;
    j["verdict"] = to_string(result.verdict);
    j["certificate"] = result.certificate;
    j["root"] = result.root ? nlohmann::json(result.root->str()) : nlohmann::json(nullptr);
    j["prime"] = result.prime ? nlohmann::json(*result.prime) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const GaloisReport& report) {
    nlohmann::json j;
    j["degree"] = report.degree;
    j["status"] = to_string(report.status);
    j["evidence"] = report.evidence;
    j["irreducibility"] = to_json(report.irreducibility);
    j["jordan_prime"] = report.jordan_prime ? nlohmann::json(*report.jordan_prime) : nlohmann::json(nullptr);
    j["jordan_witness_count"] = report.jordan_witness_count;
    j["primes_examined"] = report.primes_examined;
    j["primes_sampled"] = report.primes_sampled;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) witnesses.push_back({{"p", w.p}, {"cycle_type", w.cycle_type.degrees}});
    j["witnesses"] = std::move(witnesses);
    j["disc_square"] = report.disc_square;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& [p, v] : report.disc_valuations) vals.push_back({p, v});
    j["disc_valuations"] = std::move(vals);
    return j;
}

}  // namespace kraw
