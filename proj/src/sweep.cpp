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

#include "kraw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "kraw/krawtchouk.hpp"
#include "kraw/newton_polygon.hpp"
#include "kraw/primes.hpp"

namespace kraw {

namespace {

constexpr std::size_t kBatchSize = 512;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(s);
    while (std::getline(is, field, sep)) out.push_back(field);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

SieveVerdict parse_verdict(const std::string& s) {
    for (auto v : {SieveVerdict::Irreducible, SieveVerdict::Reducible, SieveVerdict::Unknown}) {
        if (s == to_string(v)) return v;
    }
    throw std::invalid_argument("unknown sieve verdict: " + s);
}

GaloisStatus parse_status(const std::string& s) {
    for (auto v : {GaloisStatus::Reducible, GaloisStatus::ContainsAlternating, GaloisStatus::FullSymmetric, GaloisStatus::Inconclusive}) {
        if (s == to_string(v)) return v;
    }
    throw std::invalid_argument("unknown Galois status: " + s);
}

// VERDICT[:certificate][@prime][=root]
std::string sieve_field(const SieveResult& s) {
    std::string out = to_string(s.verdict);
    if (!s.certificate.empty()) out += ":" + s.certificate;
    if (s.prime) out += "@" + std::to_string(*s.prime);
    if (s.root) out += "=" + s.root->str();
    return out;
}

SieveResult parse_sieve_field(std::string s) {
    SieveResult out;
    if (const auto eq = s.find('='); eq != std::string::npos) {
        out.root = Rational::parse(s.substr(eq + 1));
        s.resize(eq);
    }
    if (const auto at = s.find('@'); at != std::string::npos) {
        out.prime = std::stoull(s.substr(at + 1));
        s.resize(at);
    }
    if (const auto colon = s.find(':'); colon != std::string::npos) {
        out.certificate = s.substr(colon + 1);
        s.resize(colon);
    }
    out.verdict = parse_verdict(s);
    return out;
}

std::string point_key(unsigned n, unsigned delta, const Rational& t) {
    return std::to_string(n) + "," + std::to_string(delta) + "," + t.str();
}

std::vector<std::uint64_t> random_prime_subset(const std::vector<std::uint64_t>& pool, std::size_t count, const GridPoint& point,
                                               std::uint64_t seed) {
    if (count >= pool.size()) return pool;
    const auto num = static_cast<std::uint32_t>(point.t.numerator().get_si());
    const auto den = static_cast<std::uint32_t>(point.t.denominator().get_si());
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), point.n, point.delta, num, den};
    std::mt19937_64 rng(seq);
    std::vector<std::uint64_t> shuffled = pool;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng() % (i + 1)]);
    shuffled.resize(count);
    return shuffled;
}

}  // namespace

void SweepConfig::validate() const {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sweep needs 1 <= n_min <= n_max");
    if (num_bound < 1 || den_bound < 1) throw std::invalid_argument("sweep bounds must be >= 1");
    if (deltas.empty()) throw std::invalid_argument("sweep needs at least one delta");
    for (unsigned d : deltas) {
        if (d > 1) throw std::invalid_argument("delta must be 0 or 1");
    }
    if (prime_bound < 2) throw std::invalid_argument("prime_bound must be >= 2");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

SweepGrid sweep_grid(const SweepConfig& config) {
    config.validate();
    std::vector<unsigned> deltas = config.deltas;
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    SweepGrid grid;
    for (unsigned n = config.n_min; n <= config.n_max; ++n) {
        for (unsigned delta : deltas) {
            for (long a = -config.num_bound; a <= config.num_bound; ++a) {
                for (long b = 1; b <= config.den_bound; ++b) {
                    ++grid.raw_count;
                    // a/b in lowest terms is the one representative kept of its value.
                    if (std::gcd(a, b) == 1) grid.points.push_back({n, delta, Rational(a, b)});
                }
            }
        }
    }
    return grid;
}

bool SpecializationRecord::contradicts_full_symmetric() const {
    return n >= 2 && sieve.verdict == SieveVerdict::Irreducible && disc_square;
}

std::string SpecializationRecord::csv_row() const {
    std::ostringstream os;
    os << n << ',' << delta << ',' << t.numerator().get_str() << ',' << t.denominator().get_str() << ',' << sieve_field(sieve) << ','
       << to_string(status) << ',' << (jordan_prime ? std::to_string(*jordan_prime) : std::string()) << ','
       << (disc_square ? "true" : "false") << ',' << primes_sampled << ',' << runtime_ms;
    return os.str();
}

SpecializationRecord SpecializationRecord::parse_csv_row(const std::string& line) {
    const auto f = split(line, ',');
    if (f.size() != 10) throw std::invalid_argument("sweep row needs 10 fields: " + line);
    SpecializationRecord r;
    r.n = static_cast<unsigned>(std::stoul(f[0]));
    r.delta = static_cast<unsigned>(std::stoul(f[1]));
    r.t = Rational(BigInt(f[2]), BigInt(f[3]));
    r.sieve = parse_sieve_field(f[4]);
    r.status = parse_status(f[5]);
    if (!f[6].empty()) r.jordan_prime = std::stoull(f[6]);
    if (f[7] != "true" && f[7] != "false") throw std::invalid_argument("disc_square must be true or false: " + line);
    r.disc_square = f[7] == "true";
    r.primes_sampled = std::stoull(f[8]);
    r.runtime_ms = std::stol(f[9]);
    return r;
}

SpecializationRecord evaluate_specialization(const GridPoint& point, const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const UnderlyingSpec spec{point.n, point.delta, point.t};
    const RatPoly k = krawtchouk_poly({spec.krawtchouk_degree(), point.t});
    const IntPoly f = primitive_integer_form(underlying_poly(spec, k));

    std::optional<SieveResult> lifted;
    if (point.delta == 0 && point.n >= 2) {
        const auto cert = eisenstein_certificate(k, 2);
        if (cert != EisensteinCertificate::None) lifted = SieveResult{SieveVerdict::Irreducible, "eisenstein-lift", std::nullopt, 2};
    }
    std::vector<std::uint64_t> primes = primes_up_to(config.prime_bound);
    if (config.sample_primes > 0) primes = random_prime_subset(primes, config.sample_primes, point, config.seed);
    const GaloisReport report = galois_scan_sampled(f, std::move(primes), lifted);

    SpecializationRecord r;
    r.n = point.n;
    r.delta = point.delta;
    r.t = point.t;
    r.sieve = report.irreducibility;
    r.status = report.status;
    r.jordan_prime = report.jordan_prime;
    r.disc_square = report.disc_square;
    r.primes_sampled = report.primes_sampled;
    if (config.record_runtime) {
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

std::map<std::string, std::size_t> SweepResult::status_counts() const {
    std::map<std::string, std::size_t> out;
    for (auto s : {GaloisStatus::FullSymmetric, GaloisStatus::ContainsAlternating, GaloisStatus::Inconclusive, GaloisStatus::Reducible}) {
        out[to_string(s)] = 0;
    }
    for (const auto& r : records) ++out[to_string(r.status)];
    return out;
}

std::vector<const SpecializationRecord*> SweepResult::contradictions() const {
    std::vector<const SpecializationRecord*> out;
    for (const auto& r : records) {
        if (r.contradicts_full_symmetric()) out.push_back(&r);
    }
    return out;
}

nlohmann::json SweepResult::summary(const SweepConfig& config) const {
    nlohmann::json j;
    j["config"] = {{"n_min", config.n_min},
                   {"n_max", config.n_max},
                   {"num_bound", config.num_bound},
                   {"den_bound", config.den_bound},
                   {"deltas", config.deltas},
                   {"prime_bound", config.prime_bound},
                   {"seed", config.seed},
                   {"sample_primes", config.sample_primes}};
    j["raw_count"] = raw_count;
    j["deduplicated_count"] = records.size();
    j["status_counts"] = status_counts();

    std::map<std::string, std::size_t> sieve_counts;
    std::map<std::string, std::size_t> certificates;
    std::size_t irreducible = 0;
    for (const auto& r : records) {
        ++sieve_counts[to_string(r.sieve.verdict)];
        if (r.sieve.verdict == SieveVerdict::Irreducible) {
            ++irreducible;
            ++certificates[r.sieve.certificate];
        }
    }
    j["sieve_counts"] = sieve_counts;
    j["irreducibility_certificates"] = certificates;

    // Per degree: irreducible cases and how many of them were shown to be S_n.
    nlohmann::json per_degree = nlohmann::json::object();
    for (const auto& r : records) {
        auto& row = per_degree[std::to_string(r.n)];
        if (row.is_null()) row = {{"irreducible", 0}, {"full_symmetric", 0}, {"contains_alternating", 0}, {"inconclusive", 0}};
        if (r.sieve.verdict != SieveVerdict::Irreducible) continue;
        row["irreducible"] = row["irreducible"].get<std::size_t>() + 1;
        const char* key = r.status == GaloisStatus::FullSymmetric      ? "full_symmetric"
                          : r.status == GaloisStatus::ContainsAlternating ? "contains_alternating"
                                                                          : "inconclusive";
        row[key] = row[key].get<std::size_t>() + 1;
    }
    j["support_by_degree"] = std::move(per_degree);
    j["irreducible_count"] = irreducible;

    nlohmann::json contra = nlohmann::json::array();
    for (const auto* r : contradictions()) {
        contra.push_back({{"n", r->n}, {"delta", r->delta}, {"t", r->t.str()}, {"certificate", r->sieve.certificate}, {"status", to_string(r->status)}});
    }
    j["contradiction_witnesses"] = std::move(contra);
    return j;
}

std::string sweep_csv(const std::vector<SpecializationRecord>& records) {
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : records) out += r.csv_row() + "\n";
    return out;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << contents;
        os.flush();
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

SweepResult conjecture_sweep(const SweepConfig& config, const std::optional<std::filesystem::path>& out, bool resume) {
    const SweepGrid grid = sweep_grid(config);
    std::vector<std::optional<SpecializationRecord>> slots(grid.points.size());
    SweepResult result;
    result.raw_count = grid.raw_count;

    if (resume && out && std::filesystem::exists(*out)) {
        std::unordered_map<std::string, SpecializationRecord> previous;
        std::ifstream is(*out);
        std::string line;
        std::getline(is, line);
        if (line != kSweepCsvHeader) throw std::runtime_error("resume file has an unexpected header: " + out->string());
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            SpecializationRecord r = SpecializationRecord::parse_csv_row(line);
            previous.emplace(point_key(r.n, r.delta, r.t), std::move(r));
        }
        for (std::size_t i = 0; i < grid.points.size(); ++i) {
            const auto& p = grid.points[i];
            auto it = previous.find(point_key(p.n, p.delta, p.t));
            if (it != previous.end()) {
                slots[i] = std::move(it->second);
                ++result.resumed;
            }
        }
    }

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) pending.push_back(i);
    }

    auto completed_rows = [&]() {
        std::vector<SpecializationRecord> rows;
        for (const auto& s : slots) {
            if (s) rows.push_back(*s);
        }
        return rows;
    };

    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t begin = 0; begin < pending.size(); begin += kBatchSize) {
        const std::size_t end = std::min(pending.size(), begin + kBatchSize);
        std::atomic<std::size_t> next{begin};
        auto work = [&]() {
            try {
                for (std::size_t k = next++; k < end; k = next++) {
                    const std::size_t idx = pending[k];
                    slots[idx] = evaluate_specialization(grid.points[idx], config);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        const unsigned threads = std::min<unsigned>(config.workers, static_cast<unsigned>(end - begin));
        if (threads <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
        }
        if (failure) std::rethrow_exception(failure);
        if (out) write_file_atomically(*out, sweep_csv(completed_rows()));
    }

    result.records = completed_rows();
    if (out && pending.empty()) write_file_atomically(*out, sweep_csv(result.records));
    return result;
}

}  // namespace kraw
