/*
* Timing harness: per-invocation wall-clock samples for each MAC/KDF,
* summary statistics, and CSV/JSON export.
*/
#pragma once

#include <kdfkit/bytes.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kdfkit::bench {

enum class Kind { Hmac, Cmac, Kmac, HmacKdf, CmacKdf, KmacKdf, IeeeKdf };

inline constexpr std::array<Kind, 7> kAllKinds = {Kind::Hmac,    Kind::Cmac,    Kind::Kmac,
                                                  Kind::HmacKdf, Kind::CmacKdf, Kind::KmacKdf,
                                                  Kind::IeeeKdf};
inline constexpr std::array<Kind, 3> kMacKinds = {Kind::Hmac, Kind::Cmac, Kind::Kmac};
inline constexpr std::array<Kind, 4> kKdfKinds = {Kind::HmacKdf, Kind::CmacKdf, Kind::KmacKdf,
                                                  Kind::IeeeKdf};

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);  // case-insensitive
bool is_kdf(Kind kind);

inline constexpr size_t kDefaultMsgLen = 32;
inline constexpr size_t kDefaultKdfOutLen = 48;
inline constexpr size_t kDefaultIterations = 1000;
inline constexpr size_t kDefaultWarmup = 100;

struct Target {
    Kind kind = Kind::Hmac;
    Bytes key;                        // 16 bytes for every kind
    size_t msg_len = kDefaultMsgLen;  // ignored by IeeeKdf, whose input is i || j
    size_t out_len = kDefaultKdfOutLen;

    /// Bytes produced per invocation: the tag length for MACs, out_len for KDFs.
    size_t output_len() const;
};

/// Target with a 16-byte key drawn from `seed`.
Target make_target(Kind kind, uint64_t seed);

struct TimingSampleSet {
    std::vector<uint64_t> samples_ns;
    size_t iterations = 0;
    size_t warmup_count = 0;
    std::string input_digest;  // SHA-256 over the key and every generated input, hex
};

/// Runs `warmup` untimed calls, then times each of `iterations` calls
/// individually on the steady clock. Inputs are generated up front from
/// `seed`, so the input stream (and input_digest) replays exactly.
/// Throws InvalidParameter for iterations == 0 or an unusable target.
TimingSampleSet run_bench(const Target& target, size_t iterations, size_t warmup, uint64_t seed);

struct Stats {
    double mean_ms = 0;
    double median_ms = 0;
    double stddev_ms = 0;  // population
    double q1_ms = 0;
    double q3_ms = 0;
    double min_ms = 0;
    double max_ms = 0;
};

/// Quartiles interpolate linearly at position p * (n - 1) of the sorted samples.
Stats summarize_ms(std::vector<double> samples_ms);
Stats summarize(const TimingSampleSet& samples);

struct Record {
    Target target;
    Stats stats;
    size_t iterations = 0;
    size_t warmup = 0;
    uint64_t seed = 0;
    std::string input_digest;
};

enum class Format { Csv, Json };

/// Column order of the CSV export.
inline constexpr std::array<std::string_view, 14> kCsvColumns = {
    "target",  "msg_len",   "out_len",   "iterations", "warmup", "seed",   "input_sha256",
    "mean_ms", "median_ms", "stddev_ms", "q1_ms",      "q3_ms",  "min_ms", "max_ms"};

void export_results(const std::vector<Record>& records, Format format, std::ostream& out);
std::string export_results(const std::vector<Record>& records, Format format);

/// Reads back what export_results(..., Format::Json) wrote. Keys are not exported.
std::vector<Record> parse_results_json(std::string_view json);

double round6(double value);

struct OrderingCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Soft comparisons against the published orderings; only checks whose
/// targets are all present are returned.
std::vector<OrderingCheck> check_orderings(const std::vector<Record>& records);

}  // namespace kdfkit::bench
