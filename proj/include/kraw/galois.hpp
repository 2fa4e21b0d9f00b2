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

#ifndef KRAW_GALOIS_HPP
#define KRAW_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kraw/int_poly.hpp"
#include "kraw/prime_poly.hpp"
#include "kraw/rat_poly.hpp"

namespace kraw {

class DegreeTooSmall : public std::invalid_argument {
public:
    explicit DegreeTooSmall(int n);
};

/// Primes l with n/2 < l < n - 2. Requires n >= 8.
std::vector<std::uint64_t> jordan_range(int n);

/// Distinct rational roots, ascending. Roots are found mod a good prime,
/// Hensel-lifted past the root-size bound and confirmed by exact evaluation.
std::vector<Rational> rational_roots(const RatPoly& f);

struct SieveBudget {
    std::uint64_t prime_bound = 200;
};

enum class SieveVerdict { Irreducible, Reducible, Unknown };

const char* to_string(SieveVerdict v);

struct SieveResult {
    SieveVerdict verdict = SieveVerdict::Unknown;
    /// How the verdict was reached, e.g. "eisenstein@2", "irreducible-mod-13", "degree-sets", "rational-root".
    std::string certificate;
    std::optional<Rational> root;  // set for REDUCIBLE via a rational root
    std::optional<std::uint64_t> prime;
};

/// Sound irreducibility evidence over Q: IRREDUCIBLE only with a certificate,
/// REDUCIBLE only with an explicit factor witness, UNKNOWN otherwise.
SieveResult irreducibility_sieve(const IntPoly& f, const SieveBudget& budget);

enum class GaloisStatus { Reducible, ContainsAlternating, FullSymmetric, Inconclusive };

const char* to_string(GaloisStatus s);

struct PrimeWitness {
    std::uint64_t p = 0;
    CycleType cycle_type;
};

struct GaloisReport {
    int degree = 0;
    GaloisStatus status = GaloisStatus::Inconclusive;
    SieveResult irreducibility;
    std::optional<std::uint64_t> jordan_prime;
    /// Which rule produced the status ("jordan", "transposition+(n-1)-cycle", "degree-3-discriminant", ...).
    std::string evidence;
    std::vector<PrimeWitness> witnesses;  // every good prime sampled, ascending
    std::size_t primes_examined = 0;
    std::size_t primes_sampled = 0;  // good primes
    std::size_t jordan_witness_count = 0;
    BigInt discriminant;
    bool disc_square = false;
    std::vector<std::pair<std::uint64_t, long>> disc_valuations;  // primes < 100 dividing disc
};

/// Samples every prime p <= prime_bound, skipping p | lc(f) and primes with a
/// non-squarefree reduction (both counted, never used as evidence).
GaloisReport galois_scan(const IntPoly& f, std::uint64_t prime_bound);

/// As galois_scan, with an irreducibility verdict supplied by the caller.
GaloisReport galois_scan(const IntPoly& f, std::uint64_t prime_bound, const SieveResult& irreducibility);

/// Scan over an explicit prime list (sorted and deduplicated first), e.g. a
/// random subset for large sweeps. Runs the sieve unless a verdict is supplied.
GaloisReport galois_scan_sampled(const IntPoly& f, std::vector<std::uint64_t> primes,
                                 const std::optional<SieveResult>& irreducibility = std::nullopt);

struct DiscProfile {
    BigInt discriminant;
    std::vector<std::pair<std::uint64_t, long>> valuations;
    BigInt cofactor;  // disc / prod p^v
};

/// Rejects a zero discriminant.
DiscProfile disc_valuation_profile(const IntPoly& f, const std::vector<std::uint64_t>& primes);

/// For even n >= 2: (constant coefficient of K_n^(-1), a_0 / a_n).
std::pair<Rational, Rational> product_of_roots_relation(unsigned n);

nlohmann::json to_json(const GaloisReport& report);
nlohmann::json to_json(const SieveResult& result);

}  // namespace kraw

#endif  // KRAW_GALOIS_HPP
