#include <kdfkit/bench.hpp>

#include <kdfkit/cmac.hpp>
#include <kdfkit/hmac.hpp>
#include <kdfkit/kdf.hpp>
#include <kdfkit/kmac.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace kdfkit::bench {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {"HMAC",     "CMAC",     "KMAC",    "HMAC_KDF",
                                                        "CMAC_KDF", "KMAC_KDF", "IEEE_KDF"};

Bytes random_bytes(std::mt19937_64& rng, size_t n) {
    Bytes out(n);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& b : out) {
        b = static_cast<uint8_t>(dist(rng));
    }
    return out;
}

template <typename T>
inline void do_not_optimize(const T& value) {
    asm volatile("" : : "g"(&value) : "memory");
}

// One invocation of the target on `input`; returns the first output byte so
// the caller can fold it into a sink.
using Invoker = std::function<uint8_t(ByteView)>;

Invoker make_invoker(const Target& t) {
    const Bytes key = t.key;
    switch (t.kind) {
        case Kind::Hmac:
            return [key](ByteView m) { return hmac_sha256(key, m)[0]; };
        case Kind::Cmac:
            return [key](ByteView m) { return cmac(key, m)[0]; };
        case Kind::Kmac:
            return [key](ByteView m) { return kmac(key, m, KmacParams{})[0]; };
        case Kind::HmacKdf:
            return [key, n = t.out_len](ByteView m) {
                return counter_kdf(PrfChoice::HmacSha256, key, m, n)[0];
            };
        case Kind::CmacKdf:
            return [key, n = t.out_len](ByteView m) {
                return counter_kdf(PrfChoice::CmacAes128, key, m, n)[0];
            };
        case Kind::KmacKdf:
            return [key, n = t.out_len](ByteView m) { return kmac_kdf(key, m, 8 * n)[0]; };
        case Kind::IeeeKdf:
            return [key](ByteView ij) { return ieee_kdf(key, ij.first(4), ij.subspan(4), 1)[0]; };
    }
    throw InvalidParameter("unknown bench target");
}

void validate(const Target& t) {
    if (t.key.size() != 16) {
        throw InvalidParameter("bench targets use 16-byte keys");
    }
    if (is_kdf(t.kind) && t.out_len == 0) {
        throw InvalidParameter("KDF bench target needs a positive output length");
    }
    if (t.kind == Kind::IeeeKdf && t.out_len != kIeeeKdfOutputLen) {
        throw InvalidParameter("IEEE 1609.2.1 KDF output is fixed at 48 bytes");
    }
}

double interpolate(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string fixed6(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

}  // namespace

std::string_view to_string(Kind kind) {
    return kKindNames[static_cast<size_t>(kind)];
}

std::optional<Kind> parse_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == upper) {
            return static_cast<Kind>(i);
        }
    }
    return std::nullopt;
}

bool is_kdf(Kind kind) {
    return std::find(kKdfKinds.begin(), kKdfKinds.end(), kind) != kKdfKinds.end();
}

size_t Target::output_len() const {
    switch (kind) {
        case Kind::Hmac: return 32;
        case Kind::Cmac: return 16;
        case Kind::Kmac: return KmacParams{}.out_len_bits / 8;
        default: return out_len;
    }
}

Target make_target(Kind kind, uint64_t seed) {
    // separate stream from the per-iteration inputs drawn from the same seed
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Target t;
    t.kind = kind;
    t.key = random_bytes(rng, 16);
    return t;
}

TimingSampleSet run_bench(const Target& target, size_t iterations, size_t warmup, uint64_t seed) {
    if (iterations == 0) {
        throw InvalidParameter("iterations must be at least 1");
    }
    validate(target);
    const Invoker invoke = make_invoker(target);

    std::mt19937_64 rng(seed);
    const size_t input_len = target.kind == Kind::IeeeKdf ? 8 : target.msg_len;
    std::vector<Bytes> inputs;
    inputs.reserve(warmup + iterations);
    Sha256 digest;
    digest.update(target.key);
    for (size_t i = 0; i < warmup + iterations; ++i) {
        inputs.push_back(random_bytes(rng, input_len));
        digest.update(inputs.back());
    }

    TimingSampleSet out;
    out.iterations = iterations;
    out.warmup_count = warmup;
    out.input_digest = to_hex(digest.final());
    out.samples_ns.reserve(iterations);

    uint8_t sink = 0;
    for (size_t i = 0; i < warmup; ++i) {
        sink ^= invoke(inputs[i]);
    }
    using clock = std::chrono::steady_clock;
    for (size_t i = warmup; i < warmup + iterations; ++i) {
        const auto start = clock::now();
        const uint8_t r = invoke(inputs[i]);
        do_not_optimize(r);
        const auto stop = clock::now();
        sink ^= r;
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        // floor at one tick of the clock's nanosecond granularity
        out.samples_ns.push_back(static_cast<uint64_t>(std::max<int64_t>(ns, 1)));
    }
    do_not_optimize(sink);
    return out;
}

Stats summarize_ms(std::vector<double> samples) {
    if (samples.empty()) {
        throw InvalidParameter("cannot summarize an empty sample set");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    // sum over sorted values so the result does not depend on input order
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    double sq = 0;
    for (double s : samples) {
        sq += (s - mean) * (s - mean);
    }
    Stats st;
    st.mean_ms = mean;
    st.stddev_ms = std::sqrt(sq / n);
    st.median_ms = interpolate(samples, 0.5);
    st.q1_ms = interpolate(samples, 0.25);
    st.q3_ms = interpolate(samples, 0.75);
    st.min_ms = samples.front();
    st.max_ms = samples.back();
    // rounding in the mean can land a hair outside [min, max] for constant series
    st.mean_ms = std::clamp(st.mean_ms, st.min_ms, st.max_ms);
    return st;
}

Stats summarize(const TimingSampleSet& samples) {
    std::vector<double> ms;
    ms.reserve(samples.samples_ns.size());
    for (uint64_t ns : samples.samples_ns) {
        ms.push_back(static_cast<double>(ns) / 1e6);
    }
    return summarize_ms(std::move(ms));
}

double round6(double value) {
    return std::round(value * 1e6) / 1e6;
}

void export_results(const std::vector<Record>& records, Format format, std::ostream& out) {
    if (records.empty()) {
        throw InvalidParameter("nothing to export");
    }
    if (format == Format::Csv) {
        for (size_t i = 0; i < kCsvColumns.size(); ++i) {
            out << (i ? "," : "") << kCsvColumns[i];
        }
        out << '\n';
        for (const auto& r : records) {
            const auto& s = r.stats;
            out << to_string(r.target.kind) << ',' << r.target.msg_len << ',' << r.target.output_len()
                << ',' << r.iterations << ',' << r.warmup << ',' << r.seed << ',' << r.input_digest;
            for (double v : {s.mean_ms, s.median_ms, s.stddev_ms, s.q1_ms, s.q3_ms, s.min_ms, s.max_ms}) {
                out << ',' << fixed6(v);
            }
            out << '\n';
        }
    } else {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : records) {
            const auto& s = r.stats;
            rows.push_back({
                {"target", to_string(r.target.kind)},
                {"msg_len", r.target.msg_len},
                {"out_len", r.target.output_len()},
                {"iterations", r.iterations},
                {"warmup", r.warmup},
                {"seed", r.seed},
                {"input_sha256", r.input_digest},
                {"mean_ms", round6(s.mean_ms)},
                {"median_ms", round6(s.median_ms)},
                {"stddev_ms", round6(s.stddev_ms)},
                {"q1_ms", round6(s.q1_ms)},
                {"q3_ms", round6(s.q3_ms)},
                {"min_ms", round6(s.min_ms)},
                {"max_ms", round6(s.max_ms)},
            });
        }
        out << nlohmann::ordered_json{{"unit", "ms"}, {"results", rows}}.dump(2) << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed to write benchmark results");
    }
}

std::string export_results(const std::vector<Record>& records, Format format) {
    std::ostringstream os;
    export_results(records, format, os);
    return os.str();
}

std::vector<Record> parse_results_json(std::string_view json) {
    const auto doc = nlohmann::json::parse(json);
    std::vector<Record> out;
    for (const auto& row : doc.at("results")) {
        Record r;
        const auto kind = parse_kind(row.at("target").get<std::string>());
        if (!kind) {
            throw ConfigError("unknown target " + row.at("target").get<std::string>());
        }
        r.target.kind = *kind;
        r.target.msg_len = row.at("msg_len").get<size_t>();
        r.target.out_len = row.at("out_len").get<size_t>();
        r.iterations = row.at("iterations").get<size_t>();
        r.warmup = row.at("warmup").get<size_t>();
        r.seed = row.at("seed").get<uint64_t>();
        r.input_digest = row.at("input_sha256").get<std::string>();
        r.stats.mean_ms = row.at("mean_ms").get<double>();
        r.stats.median_ms = row.at("median_ms").get<double>();
        r.stats.stddev_ms = row.at("stddev_ms").get<double>();
        r.stats.q1_ms = row.at("q1_ms").get<double>();
        r.stats.q3_ms = row.at("q3_ms").get<double>();
        r.stats.min_ms = row.at("min_ms").get<double>();
        r.stats.max_ms = row.at("max_ms").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<OrderingCheck> check_orderings(const std::vector<Record>& records) {
    std::map<Kind, double> mean;
    for (const auto& r : records) {
        mean[r.target.kind] = r.stats.mean_ms;
    }
    const auto has = [&](std::initializer_list<Kind> kinds) {
        return std::all_of(kinds.begin(), kinds.end(), [&](Kind k) { return mean.count(k) > 0; });
    };
    const auto cmp = [&](Kind a, Kind b) {
        return std::string(to_string(a)) + "=" + fixed6(mean[a]) + " ms, " + std::string(to_string(b)) +
               "=" + fixed6(mean[b]) + " ms";
    };

    std::vector<OrderingCheck> checks;
    if (has({Kind::Cmac, Kind::Hmac})) {
        checks.push_back({"mean(CMAC) <= mean(HMAC)", mean[Kind::Cmac] <= mean[Kind::Hmac],
                          cmp(Kind::Cmac, Kind::Hmac)});
    }
    if (has({Kind::Hmac, Kind::Kmac})) {
        checks.push_back({"mean(HMAC) <= mean(KMAC)", mean[Kind::Hmac] <= mean[Kind::Kmac],
                          cmp(Kind::Hmac, Kind::Kmac)});
    }
    if (has({Kind::Kmac, Kind::Cmac})) {
        const double ratio = mean[Kind::Kmac] / mean[Kind::Cmac];
        checks.push_back({"mean(KMAC)/mean(CMAC) in [1.2, 5]", ratio >= 1.2 && ratio <= 5.0,
                          "ratio=" + fixed6(ratio)});
    }
    if (has({Kind::HmacKdf, Kind::CmacKdf, Kind::KmacKdf, Kind::IeeeKdf})) {
        const auto by_mean = [&](Kind a, Kind b) { return mean[a] < mean[b]; };
        const Kind fastest = *std::min_element(kKdfKinds.begin(), kKdfKinds.end(), by_mean);
        const Kind slowest = *std::max_element(kKdfKinds.begin(), kKdfKinds.end(), by_mean);
        checks.push_back({"mean(CMAC_KDF) minimal among KDFs", fastest == Kind::CmacKdf,
                          "fastest=" + std::string(to_string(fastest))});
        checks.push_back({"mean(IEEE_KDF) maximal among KDFs", slowest == Kind::IeeeKdf,
                          "slowest=" + std::string(to_string(slowest))});
    }
    return checks;
}

}  // namespace kdfkit::bench
