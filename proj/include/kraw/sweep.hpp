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

#ifndef KRAW_SWEEP_HPP
#define KRAW_SWEEP_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kraw/galois.hpp"
#include "kraw/rational.hpp"

namespace kraw {

/// Grid of specializations t = a/b of the underlying polynomial of degree n.
struct SweepConfig {
    unsigned n_min = 1;
    unsigned n_max = 12;
    long num_bound = 50;  // |a| <= num_bound
    long den_bound = 50;  // 1 <= b <= den_bound
    std::vector<unsigned> deltas{0, 1};
    std::uint64_t prime_bound = 500;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// 0 samples every prime up to prime_bound; otherwise this many, drawn per grid point from the seed.
    std::size_t sample_primes = 0;
    /// Wall-clock time per row. Off by default so that output is reproducible byte for byte.
    bool record_runtime = false;

    void validate() const;
};

struct GridPoint {
    unsigned n = 0;
    unsigned delta = 0;
    Rational t;
};

struct SweepGrid {
    std::vector<GridPoint> points;  // reduced, deduplicated, in (n, delta, a, b) order
    std::size_t raw_count = 0;      // every (n, delta, a, b) before reduction
};

SweepGrid sweep_grid(const SweepConfig& config);

struct SpecializationRecord {
    unsigned n = 0;
    unsigned delta = 0;
    Rational t;
    SieveResult sieve;
    GaloisStatus status = GaloisStatus::Inconclusive;
    std::optional<std::uint64_t> jordan_prime;
    bool disc_square = false;
    std::size_t primes_sampled = 0;
    long runtime_ms = 0;

    /// Certified irreducible of degree >= 2 with a square discriminant: the
    /// group sits inside A_n, so it is not S_n.
    bool contradicts_full_symmetric() const;
    std::string csv_row() const;
    static SpecializationRecord parse_csv_row(const std::string& line);
};

inline constexpr const char* kSweepCsvHeader = "n,delta,t_num,t_den,sieve,status,jordan_prime,disc_square,primes_sampled,runtime_ms";

/// Builds the underlying polynomial, certifies or refutes irreducibility and scans its Galois group.
/// For delta = 0 an Eisenstein certificate at 2 for K_{2n}^(t) is tried first
/// ("eisenstein-lift"): a factorization of the underlying polynomial would
/// factor K_{2n}^(t)(x + t/2) = underlying(x^2).
SpecializationRecord evaluate_specialization(const GridPoint& point, const SweepConfig& config);

struct SweepResult {
    std::vector<SpecializationRecord> records;  // grid order
    std::size_t raw_count = 0;
    std::size_t resumed = 0;

    std::map<std::string, std::size_t> status_counts() const;
    std::vector<const SpecializationRecord*> contradictions() const;
    /// Summary without timings or worker count, so identical configs give identical bytes.
    nlohmann::json summary(const SweepConfig& config) const;
};

std::string sweep_csv(const std::vector<SpecializationRecord>& records);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

/// Runs the grid on `config.workers` threads. When `out` is set the CSV is
/// rewritten atomically after every batch; with `resume`, rows already present
/// in `out` are kept and not recomputed.
SweepResult conjecture_sweep(const SweepConfig& config, const std::optional<std::filesystem::path>& out = std::nullopt,
                             bool resume = false);

}  // namespace kraw

#endif  // KRAW_SWEEP_HPP
