/*
* Acceptance runner. Prints one PASS/FAIL line per criterion and exits
* non-zero if any criterion fails. Benchmark ordering checks print WARN
* lines and never fail the run.
*/
#include "properties.hpp"
#include "reference.hpp"

#include <kdfkit/bench.hpp>
#include <kdfkit/vectors.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace kdfkit;

namespace {

constexpr double kLimitVectorsS = 5.0;
constexpr double kLimitOracleS = 30.0;
constexpr double kLimitPropertiesS = 60.0;
constexpr double kLimitBenchS = 120.0;
constexpr double kLimitMutationsS = 5.0;

constexpr size_t kOracleMaxLen = 96;
constexpr size_t kOracleTrials = 50;
constexpr size_t kBenchIterations = 1000;
constexpr size_t kBenchWarmup = 100;
constexpr size_t kMutations = 20;
constexpr uint64_t kSeed = 20241019;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && elapsed >= limit_s) {
        out = {false, "over time limit"};
    }
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ["
              << std::fixed << std::setprecision(2) << elapsed << " s, limit " << std::setprecision(0)
              << limit_s << " s]";
    if (!out.detail.empty()) std::cout << " " << out.detail;
    std::cout << std::endl;
}

Outcome known_answers() {
    const auto cases = vectors::load_vectors(KDFKIT_VECTORS);
    const auto report = vectors::run_cases(cases);
    std::set<std::string> names;
    for (const auto& c : cases) names.insert(c.name);
    for (const char* needed :
         {"RFC 4231 case 1", "RFC 4231 case 2", "RFC 4231 case 3", "RFC 4231 case 4", "RFC 4493 example 1",
          "RFC 4493 example 2", "RFC 4493 example 3", "RFC 4493 example 4", "FIPS-197 C.1",
          "FIPS 180-4 SHA-256 abc", "FIPS 202 SHAKE128 empty", "SP 800-185 cSHAKE128 sample 1",
          "SP 800-185 KMAC128 sample 1"}) {
        if (!names.count(needed)) return {false, std::string("missing case '") + needed + "'"};
    }
    for (const auto& r : report.results) {
        if (!r.passed) return {false, "case '" + r.name + "' failed: " + r.detail};
    }
    return {report.all_passed() && report.total > 0,
            std::to_string(report.passed) + "/" + std::to_string(report.total) + " cases"};
}

Outcome oracle_equivalence() {
    if (auto err = reference::counter_kdf_equivalence(kOracleMaxLen, kOracleTrials, kSeed); !err.empty()) {
        return {false, err};
    }
    if (auto err = reference::ieee_kdf_grid_equivalence(kSeed); !err.empty()) {
        return {false, err};
    }
    return {true, "L=1.." + std::to_string(kOracleMaxLen) + " x " + std::to_string(kOracleTrials) +
                      " per PRF, 16x16 grid per purpose"};
}

Outcome property_suites() {
    size_t n = 0;
    for (const auto& p : properties::all()) {
        ++n;
        if (auto err = p.check(); !err.empty()) {
            return {false, p.module + ": " + p.name + ": " + err};
        }
    }
    return {n > 0, std::to_string(n) + " properties"};
}

Outcome benchmark_shape() {
    std::vector<bench::Record> records;
    for (auto kind : bench::kAllKinds) {
        bench::Record r;
        r.target = bench::make_target(kind, kSeed);
        const auto samples = bench::run_bench(r.target, kBenchIterations, kBenchWarmup, kSeed);
        if (samples.samples_ns.size() != kBenchIterations) return {false, "short sample set"};
        r.stats = bench::summarize(samples);
        r.iterations = kBenchIterations;
        r.warmup = kBenchWarmup;
        r.seed = kSeed;
        r.input_digest = samples.input_digest;
        records.push_back(r);
    }
    for (const auto& r : records) {
        const auto& s = r.stats;
        const std::string name(bench::to_string(r.target.kind));
        if (r.target.msg_len != 32 || (bench::is_kdf(r.target.kind) && r.target.out_len != 48)) {
            return {false, name + " has the wrong input/output size"};
        }
        if (!(std::isfinite(s.mean_ms) && s.mean_ms > 0 && s.stddev_ms >= 0 && s.min_ms <= s.q1_ms &&
              s.q1_ms <= s.median_ms && s.median_ms <= s.q3_ms && s.q3_ms <= s.max_ms &&
              s.min_ms <= s.mean_ms && s.mean_ms <= s.max_ms)) {
            return {false, name + " statistics are inconsistent"};
        }
    }
    const std::string csv = bench::export_results(records, bench::Format::Csv);
    if (std::count(csv.begin(), csv.end(), '\n') != 8) return {false, "CSV does not have 7 rows"};
    if (bench::parse_results_json(bench::export_results(records, bench::Format::Json)).size() != 7) {
        return {false, "JSON does not have 7 rows"};
    }

    for (const auto& r : records) {
        std::cout << "  " << std::left << std::setw(9) << bench::to_string(r.target.kind) << std::fixed
                  << std::setprecision(6) << " mean " << r.stats.mean_ms << " median " << r.stats.median_ms
                  << " stddev " << r.stats.stddev_ms << " ms\n";
    }
    for (const auto& c : bench::check_orderings(records)) {
        std::cout << "  " << (c.passed ? "ok   " : "WARN ") << c.name << " (" << c.detail << ")\n";
    }
    return {true, "7 rows"};
}

Outcome negative_controls() {
    auto cases = vectors::load_vectors(KDFKIT_VECTORS);
    std::mt19937_64 rng(kSeed);
    size_t flipped = 0;
    std::ostringstream log;
    for (size_t n = 0; n < kMutations; ++n) {
        vectors::VectorCase c = cases[rng() % cases.size()];
        std::vector<std::pair<const char*, Bytes*>> fields;
        if (!c.key.empty()) fields.emplace_back("key", &c.key);
        if (!c.msg.empty()) fields.emplace_back("msg", &c.msg);
        fields.emplace_back("expect", &c.expect);
        auto [field, bytes] = fields[rng() % fields.size()];
        const size_t pos = rng() % bytes->size();
        (*bytes)[pos] ^= static_cast<uint8_t>(1 + rng() % 255);
        const auto report = vectors::run_cases({c});
        if (report.passed == 0) {
            ++flipped;
        } else {
            log << " still passes: '" << c.name << "' " << field << "[" << pos << "]";
        }
    }
    return {flipped == kMutations,
            std::to_string(flipped) + "/" + std::to_string(kMutations) + " mutations flipped to FAIL" + log.str()};
}

}  // namespace

int main() {
    criterion(1, "known-answer vectors", kLimitVectorsS, known_answers);
    criterion(2, "oracle equivalence", kLimitOracleS, oracle_equivalence);
    criterion(3, "property suites", kLimitPropertiesS, property_suites);
    criterion(4, "benchmark shape", kLimitBenchS, benchmark_shape);
    criterion(5, "negative controls", kLimitMutationsS, negative_controls);
    return failures == 0 ? 0 : 1;
}
