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

#include "kraw/experiments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "kraw/galois.hpp"
#include "kraw/int_poly.hpp"
#include "kraw/krawtchouk.hpp"
#include "kraw/primes.hpp"

namespace kraw {

namespace {

std::string join_pairs(const std::vector<std::pair<long, long>>& pairs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? "," : "") << '(' << pairs[i].first << ',' << pairs[i].second << ')';
    return os.str();
}

std::string vertex_list(const NewtonPolygon& np) {
    std::vector<std::pair<long, long>> v;
    for (const auto& p : np.vertices()) v.emplace_back(p.x, p.y);
    return join_pairs(v);
}

const std::vector<long>& sextic_integer_coeffs(unsigned delta) {
    static const std::vector<long> even{304704, -668080, 622860, -303125, 81225, -11475, 675};
    static const std::vector<long> odd{8267304, -11982460, 7539882, -2561825, 492009, -50715, 2205};
    if (delta > 1) throw std::invalid_argument("delta must be 0 or 1");
    return delta == 0 ? even : odd;
}

std::string point_str(const CurvePoint& p) { return "(" + p.t.str() + "," + p.s.str() + ")"; }

}  // namespace

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["ok"] = ok();
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = std::move(cs);
    j["data"] = data;
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.passed ? 1 : 0;
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    os << command << ": " << passed << '/' << checks.size() << " checks passed\n";
    return os.str();
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    if (num_bound < 0 || den_bound < 1) throw std::invalid_argument("random_rational bounds");
    const auto span = static_cast<std::uint64_t>(2 * num_bound + 1);
    const long a = static_cast<long>(rng() % span) - num_bound;
    const long b = static_cast<long>(rng() % static_cast<std::uint64_t>(den_bound)) + 1;
    return Rational(a, b);
}

nlohmann::json polygon_json(const NewtonPolygon& np, bool degree_based) {
    nlohmann::json j;
    j["prime"] = np.prime();
    j["orientation"] = "x = n - j for coefficient a_j";
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : np.vertices()) vs.push_back({v.x, v.y});
    j["vertices"] = std::move(vs);
    nlohmann::json ss = nlohmann::json::array();
    for (const auto& s : np.segments()) ss.push_back({{"slope", s.slope.str()}, {"length", s.length}});
    j["segments"] = std::move(ss);
    j["degree_based"] = degree_based;
    return j;
}

std::string polygon_svg(const NewtonPolygon& np, const std::vector<std::pair<long, Valuation>>& points) {
    constexpr int unit = 32;
    constexpr int margin = 40;
    long max_x = 1;
    long max_y = 1;
    for (const auto& [x, v] : points) {
        max_x = std::max(max_x, x);
        if (!v.is_infinite()) max_y = std::max(max_y, v.value());
    }
    const long width = max_x * unit + 2 * margin;
    const long height = max_y * unit + 2 * margin;
    auto sx = [&](long x) { return margin + x * unit; };
    auto sy = [&](long y) { return height - margin - y * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x) << "\" y2=\"" << sy(0)
       << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(max_y)
       << "\" stroke=\"black\"/>\n";
    for (const auto& [x, v] : points) {
        if (v.is_infinite()) continue;
        os << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(v.value()) << "\" r=\"3\" fill=\"gray\"/>\n";
    }
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < np.vertices().size(); ++i) {
        const auto& v = np.vertices()[i];
        os << (i ? " " : "") << sx(v.x) << ',' << sy(v.y);
    }
    os << "\"/>\n";
    os << "  <text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"monospace\">NP_" << np.prime()
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

const std::vector<std::pair<long, long>>& printed_np_table() {
    static const std::vector<std::pair<long, long>> table{
        {0, 3},  {1, 2},  {2, 3},  {3, 1},  {4, 4},   {5, 3},   {6, 4},   {7, 3},   {8, 3},   {9, 2},
        {10, 3}, {11, 5}, {12, 6}, {13, 6}, {14, 7}, {15, 12}, {16, 11}, {17, 14}, {18, 18}, {19, 0}};
    return table;
}

Report repro_example_np(unsigned degree) {
    if (degree == 0) throw std::invalid_argument("degree must be >= 1");
    Report r("repro np-example");
    const Rational t(static_cast<long>(degree));
    const RatPoly k = krawtchouk_poly({degree, t});
    const auto vals = coefficient_valuations(k, 2);
    const NewtonPolygon np = newton_polygon(k, 2);
    const bool based = is_degree_based(k);

    std::vector<std::pair<long, long>> table;
    for (const auto& [j, v] : vals) {
        if (v.is_infinite()) throw std::logic_error("zero coefficient in K_n^(n)");
        table.emplace_back(j, v.value());
    }
    r.data["degree"] = degree;
    r.data["t"] = t.str();
    r.data["table"] = table;
    r.data["polygon"] = polygon_json(np, based);

    if (degree == 19) {
        const auto& printed = printed_np_table();
        std::string first_diff;
        for (std::size_t i = 0; i < printed.size(); ++i) {
            if (i >= table.size() || table[i] != printed[i]) {
                first_diff = "row " + std::to_string(i) + ": expected " + join_pairs({printed[i]}) + ", got " +
                             (i < table.size() ? join_pairs({table[i]}) : std::string("nothing"));
                break;
            }
        }
        if (first_diff.empty() && table.size() != printed.size()) first_diff = "extra rows";
        r.add("valuation table matches printed values", first_diff.empty(), first_diff.empty() ? join_pairs(table) : first_diff);
        const std::vector<HullPoint> breaks{{0, 3}, {1, 2}, {3, 1}, {19, 0}};
        r.add("polygon breaks (0,3),(1,2),(3,1),(19,0)", np.vertices() == breaks, vertex_list(np));
    } else {
        r.add("valuation table computed", table.size() == degree + 1U, join_pairs(table));
    }
    r.add("polygon is degree-based", based, vertex_list(np));
    return r;
}

std::vector<long> theorem_window(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    const long low = static_cast<long>(n);
    const long width = static_cast<long>(n & (~n + 1U));
    std::vector<long> out;
    for (long t = low; t < low + width; ++t) out.push_back(t);
    return out;
}

Report verify_theorem(unsigned n_max) {
    if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
    Report r("verify theorem");
    std::size_t cases = 0;
    std::vector<std::string> failures;
    std::size_t law_cases = 0;
    std::vector<std::string> law_failures;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (long t : theorem_window(n)) {
            ++cases;
            if (!is_degree_based(krawtchouk_poly({n, Rational(t)}))) failures.push_back("n=" + std::to_string(n) + ",t=" + std::to_string(t));
        }
        const auto dist = distinguished_valuations(n, Rational(static_cast<long>(n)));
        const long k = static_cast<long>(dist.size()) - 1;
        for (long i = 0; i <= k; ++i) {
            ++law_cases;
            const Valuation& v = dist[static_cast<std::size_t>(i)].second;
            if (v.is_infinite() || v.value() != k - i) {
                law_failures.push_back("n=" + std::to_string(n) + ",r=" + std::to_string(i) + ",v=" + v.str());
            }
        }
    }
    auto summary = [](std::size_t total, const std::vector<std::string>& fails) {
        std::string s = std::to_string(total) + " cases, " + std::to_string(fails.size()) + " failures";
        if (!fails.empty()) s += " (first: " + fails.front() + ")";
        return s;
    };
    r.add("degree-based polygon on every window", failures.empty(), summary(cases, failures));
    r.add("distinguished coefficients have v_2 = k - r at t = n", law_failures.empty(), summary(law_cases, law_failures));
    r.data["n_max"] = n_max;
    r.data["cases"] = cases;
    r.data["failures"] = failures;
    r.data["distinguished_cases"] = law_cases;
    r.data["distinguished_failures"] = law_failures;
    return r;
}

Report verify_corollary(unsigned k_max) {
    if (k_max > 20) throw std::invalid_argument("k_max too large");
    Report r("verify corollary");
    std::size_t cases = 0;
    std::map<std::string, std::size_t> by_kind;
    std::vector<std::string> failures;
    for (unsigned k = 0; k <= k_max; ++k) {
        const unsigned n = 1U << k;
        for (long t = n; t < 2L * n; ++t) {
            ++cases;
            const auto cert = eisenstein_certificate(krawtchouk_poly({n, Rational(t)}), 2);
            ++by_kind[to_string(cert)];
            if (cert == EisensteinCertificate::None) failures.push_back("k=" + std::to_string(k) + ",t=" + std::to_string(t));
        }
    }
    r.add("Eisenstein at 2 for every K_{2^k}^(t), t in [2^k, 2^{k+1})", failures.empty(),
          std::to_string(cases) + " cases, " + std::to_string(failures.size()) + " failures");
    r.data["k_max"] = k_max;
    r.data["cases"] = cases;
    r.data["certificates"] = by_kind;
    r.data["failures"] = failures;
    return r;
}

Report verify_prop_minus1(unsigned k_max) {
    if (k_max < 2 || k_max > 12) throw std::invalid_argument("k_max must be in [2, 12]");
    Report r("verify prop-minus1");
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned k = 2; k <= k_max; ++k) {
        const unsigned n = 1U << k;
        const RatPoly f = krawtchouk_poly({n, Rational(-1)});
        const auto cert = eisenstein_certificate(f, 2);
        std::string certificate = to_string(cert);
        bool irreducible = cert != EisensteinCertificate::None;
        if (!irreducible) {
            const auto sieve = irreducibility_sieve(primitive_integer_form(f), SieveBudget{});
            irreducible = sieve.verdict == SieveVerdict::Irreducible;
            certificate = sieve.certificate;
        }
        const RatPoly under = underlying_poly({n / 2, 0, Rational(-1)});
        const auto [positive, negative] = descartes_bounds(under);
        const auto [constant, root_product] = product_of_roots_relation(n);
        const std::string tag = "k=" + std::to_string(k);
        r.add(tag + " irreducible", irreducible, certificate);
        r.add(tag + " constant coefficient 1", constant == Rational(1), constant.str());
        r.add(tag + " no positive roots of the underlying polynomial", positive == 0,
              "sign variations " + std::to_string(positive) + "/" + std::to_string(negative));
        rows.push_back({{"k", k},
                        {"n", n},
                        {"certificate", certificate},
                        {"constant_coefficient", constant.str()},
                        {"root_product", root_product.str()},
                        {"descartes_positive", positive},
                        {"descartes_negative", negative}});
    }
    r.data["rows"] = std::move(rows);
    return r;
}

const BigInt& printed_k20_cofactor() {
    static const BigInt value("3080247982713573950046529683277689810503273830007221192065657784224004955821");
    return value;
}

Report repro_k20() {
    Report r("repro k20");
    const IntPoly f = primitive_integer_form(underlying_poly({10, 0, Rational(20)}));
    const DiscProfile profile = disc_valuation_profile(f, {2, 3, 5, 7, 2857, 3371});
    const std::vector<long> expected{28, 50, 33, 8};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto [p, v] = profile.valuations[i];
        r.add("v_" + std::to_string(p) + "(disc) = " + std::to_string(expected[i]), v == expected[i], std::to_string(v));
    }
    r.add("2857 divides disc", profile.valuations[4].second >= 1, "v = " + std::to_string(profile.valuations[4].second));
    r.add("3371 divides disc", profile.valuations[5].second >= 1, "v = " + std::to_string(profile.valuations[5].second));
    r.add("cofactor equals printed value", profile.cofactor == printed_k20_cofactor(), profile.cofactor.get_str());

    const GaloisReport scan = galois_scan(f, 2856);
    std::size_t good = 0;
    std::size_t with_seven = 0;
    std::size_t in_interval = 0;
    for (std::uint64_t p : primes_in_range(8, 2856)) {
        (void)p;
        ++in_interval;
    }
    for (const auto& w : scan.witnesses) {
        if (w.p <= 7) continue;
        ++good;
        if (w.cycle_type.contains(7)) ++with_seven;
    }
    r.add("410 good primes in (7, 2857)", good == 410, std::to_string(good) + " good of " + std::to_string(in_interval));
    r.add("65 of them have a degree-7 factor", with_seven == 65, std::to_string(with_seven));
    r.add("disc is not a square", !scan.disc_square);
    r.add("status FULL_SYMMETRIC", scan.status == GaloisStatus::FullSymmetric,
          std::string(to_string(scan.status)) + " via " + scan.irreducibility.certificate + ", " + scan.evidence);

    std::vector<std::string> coeffs;
    for (const auto& c : f.coeffs) coeffs.push_back(c.get_str());
    r.data["coefficients"] = coeffs;
    r.data["discriminant"] = profile.discriminant.get_str();
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [p, v] : profile.valuations) vals[std::to_string(p)] = v;
    r.data["valuations"] = std::move(vals);
    r.data["cofactor"] = profile.cofactor.get_str();
    r.data["good_primes"] = good;
    r.data["order7_witnesses"] = with_seven;
    r.data["status"] = to_string(scan.status);
    r.data["irreducibility"] = to_json(scan.irreducibility);
    return r;
}

RatPoly sextic_curve(unsigned delta) {
    std::vector<Rational> c;
    for (long v : sextic_integer_coeffs(delta)) c.emplace_back(Rational(v) * Rational(3, 128));
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> printed_depressed_cubic(unsigned delta) {
    if (delta == 0) {
        return {RatPoly{Rational(-131, 6), Rational(95, 8), Rational(-15, 8)},
                RatPoly{Rational(965, 27), Rational(-325, 12), Rational(55, 8), Rational(-5, 8)}};
    }
    if (delta == 1) {
        return {RatPoly{Rational(-637, 12), Rational(175, 8), Rational(-21, 8)},
                RatPoly{Rational(3305, 27), Rational(-833, 12), Rational(105, 8), Rational(-7, 8)}};
    }
    throw std::invalid_argument("delta must be 0 or 1");
}

std::vector<CurvePoint> hyperelliptic_search(unsigned delta, long height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    const auto& c = sextic_integer_coeffs(delta);
    std::vector<CurvePoint> out;
    BigInt n_val;
    BigInt root;
    for (long b = 1; b <= height; ++b) {
        for (long a = -height; a <= height; ++a) {
            if (std::gcd(a, b) != 1) continue;
            // N = sum c_i a^i b^{6-i}; s^2 = 3N / (128 b^6) is a square iff 6N is.
            n_val = 0;
            BigInt apow = 1;
            for (std::size_t i = 0; i < c.size(); ++i) {
                BigInt term = apow * c[i];
                for (std::size_t k = i; k < 6; ++k) term *= b;
                n_val += term;
                apow *= a;
            }
            n_val *= 6;
            if (n_val < 0 || !mpz_perfect_square_p(n_val.get_mpz_t())) continue;
            mpz_sqrt(root.get_mpz_t(), n_val.get_mpz_t());
            BigInt den = 16;
            for (int k = 0; k < 3; ++k) den *= b;
            out.push_back({Rational(a, b), Rational(root, den)});
        }
    }
    std::sort(out.begin(), out.end(), [](const CurvePoint& x, const CurvePoint& y) { return x.t < y.t; });
    return out;
}

const std::vector<CurvePoint>& printed_curve_points(unsigned delta) {
    static const std::vector<CurvePoint> even{{Rational(3), Rational(117, 2)},
                                              {Rational(4), Rational(165, 4)},
                                              {Rational(5), Rational(48)},
                                              {Rational(6), Rational(120)},
                                              {Rational(14), Rational(7680)}};
    static const std::vector<CurvePoint> odd{{Rational(2), Rational(63, 4)},
                                             {Rational(3), Rational(21, 2)},
                                             {Rational(4), Rational(12)},
                                             {Rational(5), Rational(48)},
                                             {Rational(12), Rational(3072)}};
    if (delta > 1) throw std::invalid_argument("delta must be 0 or 1");
    return delta == 0 ? even : odd;
}

Report hyper_report(unsigned delta_mask, long height) {
    if (delta_mask == 0 || delta_mask > 3) throw std::invalid_argument("delta_mask must be 1, 2 or 3");
    Report r("hyper");
    std::vector<CurvePoint> found[2];
    nlohmann::json curves = nlohmann::json::array();
    for (unsigned delta = 0; delta < 2; ++delta) {
        if (((delta_mask >> delta) & 1U) == 0) continue;
        found[delta] = hyperelliptic_search(delta, height);
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : found[delta]) {
            // Reducible iff the cubic has a rational root.
            const bool reducible = !rational_roots(underlying_poly({3, delta, p.t})).empty();
            pts.push_back({{"t", p.t.str()}, {"s", p.s.str()}, {"cubic_reducible", reducible}});
            r.add("delta=" + std::to_string(delta) + " point " + point_str(p) + " on curve",
                  poly_eval(sextic_curve(delta), p.t) == p.s * p.s);
        }
        curves.push_back({{"delta", delta}, {"height", height}, {"points", std::move(pts)}});
    }
    r.data["curves"] = std::move(curves);
    if (delta_mask != 3) return r;

    // Where each printed point actually lies.
    bool swapped = true;
    nlohmann::json placement = nlohmann::json::array();
    for (unsigned label = 0; label < 2; ++label) {
        for (const auto& p : printed_curve_points(label)) {
            bool on[2];
            for (unsigned d = 0; d < 2; ++d) on[d] = poly_eval(sextic_curve(d), p.t) == p.s * p.s;
            if (!on[1 - label]) swapped = false;
            placement.push_back({{"printed_delta", label}, {"point", point_str(p)}, {"on_delta0", on[0]}, {"on_delta1", on[1]}});
        }
    }
    r.data["printed_placement"] = std::move(placement);
    r.data["label_swap"] = swapped;
    r.add("printed delta labels are interchanged relative to the printed sextics", swapped,
          "every printed point lies on the other curve");

    std::set<Rational> union_t;
    std::set<std::pair<Rational, Rational>> union_pts;
    for (const auto& pts : found) {
        for (const auto& p : pts) {
            union_t.insert(p.t);
            union_pts.emplace(p.t, p.s);
        }
    }
    const std::set<Rational> printed_t{2, 3, 4, 5, 6, 12, 14};
    std::string extra;
    for (const auto& t : union_t) {
        if (!printed_t.count(t)) extra += (extra.empty() ? "" : ",") + t.str();
    }
    std::string missing;
    for (const auto& t : printed_t) {
        if (!union_t.count(t)) missing += (missing.empty() ? "" : ",") + t.str();
    }
    r.add("union of t-values equals {2,3,4,5,6,12,14}", extra.empty() && missing.empty(),
          "extra: [" + extra + "], missing: [" + missing + "]");

    std::string unmatched;
    for (unsigned label = 0; label < 2; ++label) {
        for (const auto& p : printed_curve_points(label)) {
            if (!union_pts.count({p.t, p.s})) unmatched += (unmatched.empty() ? "" : ",") + point_str(p);
        }
    }
    r.add("printed s-values found by the search", unmatched.empty(), unmatched.empty() ? "all 10 printed points" : unmatched);
    return r;
}

Report crosscheck_sextic_vs_disc(unsigned delta, unsigned samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    Report r("crosscheck sextic");
    const RatPoly sextic = sextic_curve(delta);
    std::mt19937_64 rng(seed);
    std::optional<Rational> ratio;
    std::size_t zero_cases = 0;
    std::vector<std::string> failures;
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned i = 0; i < samples; ++i) {
        const Rational t = random_rational(rng, 1000, 1000);
        const Rational disc = discriminant(depress(underlying_poly({3, delta, t})));
        const Rational s = poly_eval(sextic, t);
        rows.push_back({{"t", t.str()}, {"sextic", s.str()}, {"disc", disc.str()}});
        if (disc.is_zero() || s.is_zero()) {
            ++zero_cases;
            if (!(disc.is_zero() && s.is_zero())) failures.push_back("t=" + t.str() + " one side zero");
            continue;
        }
        const Rational q = s / disc;
        if (!ratio) ratio = q;
        if (q != *ratio) failures.push_back("t=" + t.str() + " ratio " + q.str());
    }
    const bool square = ratio && is_rational_square(*ratio);
    r.add("ratio constant across samples", failures.empty(), failures.empty() ? std::string() : failures.front());
    r.add("ratio is a rational square", square, ratio ? ratio->str() : std::string("no nonzero sample"));
    r.data["delta"] = delta;
    r.data["seed"] = seed;
    r.data["ratio"] = ratio ? ratio->str() : std::string();
    r.data["zero_cases"] = zero_cases;
    r.data["samples"] = std::move(rows);
    return r;
}

Report repro_depressed_cubics(unsigned samples, std::uint64_t seed) {
    Report r("repro cubics");
    std::mt19937_64 rng(seed);
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (unsigned i = 0; i < samples; ++i) ts.push_back(random_rational(rng, 1000, 1000));
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned delta = 0; delta < 2; ++delta) {
        const auto [linear, constant] = printed_depressed_cubic(delta);
        std::vector<std::string> mismatches;
        for (const auto& t : ts) {
            const RatPoly d = depress(underlying_poly({3, delta, t}));
            const bool match = d.degree() == 3 && d.coeff(3) == Rational(1) && d.coeff(2).is_zero() &&
                               d.coeff(1) == poly_eval(linear, t) && d.coeff(0) == poly_eval(constant, t);
            if (!match) mismatches.push_back("t=" + t.str() + " got " + d.str());
            rows.push_back({{"delta", delta}, {"t", t.str()}, {"depressed", d.str()}, {"match", match}});
        }
        r.add("delta=" + std::to_string(delta) + " depressed cubic matches printed coefficients at " + std::to_string(ts.size()) + " values of t",
              mismatches.empty(), mismatches.empty() ? std::string() : mismatches.front());
    }
    r.data["seed"] = seed;
    r.data["rows"] = std::move(rows);
    return r;
}

}  // namespace kraw
