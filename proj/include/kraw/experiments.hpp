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

#ifndef KRAW_EXPERIMENTS_HPP
#define KRAW_EXPERIMENTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kraw/newton_polygon.hpp"
#include "kraw/rat_poly.hpp"
#include "kraw/rational.hpp"

namespace kraw {

/// One named pass/fail comparison inside a report.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of a reproduction or verification command. `data` carries the
/// command-specific payload; all of it is deterministic for a fixed input.
struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    std::vector<Check> checks;
    nlohmann::json data = nlohmann::json::object();

    bool ok() const;
    void add(std::string name, bool passed, std::string detail = {});
    nlohmann::json to_json() const;
    /// Human-readable rendering: one line per check plus a summary line.
    std::string text() const;
};

/// Uniform rational a/b with |a| <= num_bound and 1 <= b <= den_bound.
/// Uses raw engine output so the sequence is identical across standard libraries.
Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound);

/// JSON for a polygon: {prime, orientation, vertices, segments, degree_based}.
nlohmann::json polygon_json(const NewtonPolygon& np, bool degree_based);

/// Standalone SVG of the valuation points and the lower hull.
std::string polygon_svg(const NewtonPolygon& np, const std::vector<std::pair<long, Valuation>>& points);

/// (j, v_2(a_{19-j})) for K_19^(19) as printed, j = 0..19.
const std::vector<std::pair<long, long>>& printed_np_table();

/// Valuation table and 2-adic polygon of K_d^(d). For d = 19 the table and the
/// breaks are compared against the printed values.
Report repro_example_np(unsigned degree = 19);

/// Integer t with n <= t < n + 2^{j_1}, j_1 the lowest set bit of n.
std::vector<long> theorem_window(unsigned n);

/// Degree-based polygon for every n <= n_max across its window, and the
/// distinguished coefficients of K_n^(n) having v_2 = k - r.
Report verify_theorem(unsigned n_max);

/// Eisenstein at 2 (direct or reversed) for K_{2^k}^(t), t in [2^k, 2^{k+1}).
Report verify_corollary(unsigned k_max);

/// Irreducibility certificate, constant coefficient and Descartes bound for K_{2^k}^(-1).
Report verify_prop_minus1(unsigned k_max);

/// The printed discriminant cofactor of the degree-10 example.
const BigInt& printed_k20_cofactor();

/// Discriminant profile, good-prime count, order-7 witnesses and final status
/// for the underlying degree-10 polynomial at t = 20.
Report repro_k20();

/// (3/128) times the printed sextic for the given delta.
RatPoly sextic_curve(unsigned delta);

/// Coefficients (ascending in t) of the printed linear and constant terms of
/// the depressed cubic, as polynomials in t.
std::pair<RatPoly, RatPoly> printed_depressed_cubic(unsigned delta);

struct CurvePoint {
    Rational t;
    Rational s;  // s >= 0
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Points (t, s) on s^2 = sextic_curve(delta)(t) with t = a/b reduced,
/// |a| <= height, 1 <= b <= height. Ascending in t.
std::vector<CurvePoint> hyperelliptic_search(unsigned delta, long height);

/// Points as printed, keyed by the printed delta label.
const std::vector<CurvePoint>& printed_curve_points(unsigned delta);

/// Search both curves and compare the union with the printed lists,
/// reporting which printed points actually lie on which curve.
Report hyper_report(unsigned delta_mask, long height);

/// sextic(t) / disc(depress(underlying cubic)) at random t must be one constant square.
Report crosscheck_sextic_vs_disc(unsigned delta, unsigned samples, std::uint64_t seed);

/// Depressed underlying cubic against the printed coefficient polynomials.
Report repro_depressed_cubics(unsigned samples, std::uint64_t seed);

}  // namespace kraw

#endif  // KRAW_EXPERIMENTS_HPP
