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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kraw/experiments.hpp"
#include "kraw/krawtchouk.hpp"
#include "kraw/sweep.hpp"

using namespace kraw;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("kraw-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

SweepConfig small_config() {
    SweepConfig c;
    c.n_max = 5;
    c.num_bound = 6;
    c.den_bound = 4;
    c.prime_bound = 120;
    return c;
}

bool has_point(const std::vector<CurvePoint>& pts, const Rational& t, const Rational& s) {
    return std::find(pts.begin(), pts.end(), CurvePoint{t, s}) != pts.end();
}

}  // namespace

TEST_CASE("np example report") {
    const Report r = repro_example_np();
    CHECK(r.ok());
    const Report one = repro_example_np(1);
    CHECK(one.ok());
    CHECK(one.data.at("table") == nlohmann::json::parse("[[0,1],[1,0]]"));
    CHECK(printed_np_table().size() == 20);
}

TEST_CASE("theorem windows") {
    CHECK(theorem_window(19) == std::vector<long>{19});
    CHECK(theorem_window(12) == std::vector<long>{12, 13, 14, 15});
    CHECK(theorem_window(8).size() == 8);
}

TEST_CASE("verification reports pass at small sizes") {
    CHECK(verify_theorem(16).ok());
    CHECK(verify_corollary(3).ok());
    CHECK(verify_prop_minus1(4).ok());
    CHECK(repro_depressed_cubics(10, 5).ok());
    CHECK(crosscheck_sextic_vs_disc(0, 10, 3).ok());
    CHECK(crosscheck_sextic_vs_disc(1, 10, 3).ok());
}

TEST_CASE("report rendering") {
    Report r("demo");
    r.add("first", true, "fine");
    r.add("second", false);
    CHECK_FALSE(r.ok());
    CHECK(r.text() == "[PASS] first: fine\n[FAIL] second\ndemo: 1/2 checks passed\n");
    CHECK(r.to_json().at("ok") == false);
}

TEST_CASE("sextic curves at worked points") {
    for (unsigned delta : {0U, 1U}) CHECK(poly_eval(sextic_curve(delta), 5) == 2304);
    CHECK(poly_eval(sextic_curve(0), 3) == Rational(441, 4));
    CHECK(poly_eval(sextic_curve(1), 3) == Rational(13689, 4));
}

TEST_CASE("hyperelliptic search") {
    const auto d0 = hyperelliptic_search(0, 20);
    const auto d1 = hyperelliptic_search(1, 20);
    CHECK(has_point(d0, 5, 48));
    CHECK(has_point(d1, 5, 48));
    CHECK(has_point(d0, 3, Rational(21, 2)));
    CHECK(has_point(d1, 3, Rational(117, 2)));
    for (unsigned delta : {0U, 1U}) {
        const RatPoly curve = sextic_curve(delta);
        for (const auto& pt : delta ? d1 : d0) {
            CHECK(pt.s >= 0);
            CHECK(pt.s * pt.s == poly_eval(curve, pt.t));
        }
        // Monotone in the height bound.
        const auto small = hyperelliptic_search(delta, 7);
        const auto& large = delta ? d1 : d0;
        for (const auto& pt : small) CHECK(has_point(large, pt.t, pt.s));
    }
    CHECK_THROWS(hyperelliptic_search(2, 5));
}

TEST_CASE("sweep grid") {
    SweepConfig c;
    c.n_min = 2;
    c.n_max = 3;
    c.num_bound = 2;
    c.den_bound = 2;
    const SweepGrid g = sweep_grid(c);
    // 5 numerators x 2 denominators per (n, delta); 0/2, 2/2, -2/2 repeat.
    CHECK(g.raw_count == 2 * 2 * 10);
    CHECK(g.points.size() == 2 * 2 * 7);
    CHECK(g.points.front().t == -2);
    c.deltas = {3};
    CHECK_THROWS(c.validate());
}

TEST_CASE("CSV rows round trip") {
    SpecializationRecord r;
    r.n = 4;
    r.delta = 1;
    r.t = Rational(-7, 3);
    r.sieve = {SieveVerdict::Reducible, "rational-root", Rational(1, 2), std::nullopt};
    r.status = GaloisStatus::Reducible;
    r.primes_sampled = 12;
    const SpecializationRecord back = SpecializationRecord::parse_csv_row(r.csv_row());
    CHECK(back.csv_row() == r.csv_row());
    CHECK(back.t == r.t);
    CHECK(back.sieve.root == r.sieve.root);
    CHECK_THROWS(SpecializationRecord::parse_csv_row("1,2,3"));
}

TEST_CASE("sweep is deterministic across worker counts") {
    SweepConfig one = small_config();
    SweepConfig four = small_config();
    four.workers = 4;
    const SweepResult a = conjecture_sweep(one);
    const SweepResult b = conjecture_sweep(four);
    CHECK(sweep_csv(a.records) == sweep_csv(b.records));
    CHECK(a.summary(one).dump() == b.summary(four).dump());
    CHECK(a.records.size() == sweep_grid(one).points.size());
    for (const auto& r : a.records) {
        if (r.sieve.verdict == SieveVerdict::Reducible && r.sieve.root) {
            CHECK(poly_eval(underlying_poly({r.n, r.delta, r.t}), *r.sieve.root).is_zero());
        }
    }
}

TEST_CASE("sampled primes depend only on the seed") {
    SweepConfig c = small_config();
    c.sample_primes = 10;
    c.seed = 9;
    const std::string first = sweep_csv(conjecture_sweep(c).records);
    c.workers = 3;
    CHECK(sweep_csv(conjecture_sweep(c).records) == first);
}

TEST_CASE("sweep output and resume") {
    const fs::path dir = scratch_dir("resume");
    const fs::path out = dir / "sweep.csv";
    const SweepConfig c = small_config();
    const SweepResult full = conjecture_sweep(c, out);
    const std::string bytes = slurp(out);
    CHECK(bytes == sweep_csv(full.records));

    // Drop the tail, as after an interrupted run, then resume.
    std::string truncated = bytes.substr(0, bytes.size() / 2);
    truncated = truncated.substr(0, truncated.rfind('\n') + 1);
    std::ofstream(out, std::ios::binary) << truncated;
    const SweepResult resumed = conjecture_sweep(c, out, true);
    CHECK(resumed.resumed > 0);
    CHECK(resumed.resumed < full.records.size());
    CHECK(slurp(out) == bytes);
    for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().filename() == "sweep.csv");
    fs::remove_all(dir);
}
