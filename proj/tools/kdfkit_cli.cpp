/*
* kdfkit command-line tool.
*
*   kdfkit mac {hmac|cmac|kmac} --key HEX --msg HEX [--bits N] [--custom HEX] [--variant 128|256]
*   kdfkit kdf {ctr|kmac|ieee} --key HEX ...
*   kdfkit selftest [FILE] [--filter NAME]
*   kdfkit bench [--targets all|macs|kdfs|LIST] [--iterations N] [--warmup N] [--seed N]
*                [--out PATH] [--format csv|json]
*
* Exit codes: 0 success, 1 self-test failure, 2 usage or parameter error.
*/

#include <kdfkit/bench.hpp>
#include <kdfkit/cmac.hpp>
#include <kdfkit/hmac.hpp>
#include <kdfkit/kdf.hpp>
#include <kdfkit/kmac.hpp>
#include <kdfkit/vectors.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#ifndef KDFKIT_DEFAULT_VECTORS
#define KDFKIT_DEFAULT_VECTORS "data/vectors.json"
#endif

namespace {

using namespace kdfkit;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct MacArgs {
    std::string algorithm;
    std::string key_hex;
    std::string msg_hex;
    size_t bits = 256;
    std::string custom_hex;
    int variant = 128;
};

struct KdfArgs {
    std::string family;
    std::string key_hex;
    std::string msg_hex;
    std::string prf = "hmac";
    size_t len = 48;
    size_t bits = 384;
    std::string i_hex;
    std::string j_hex;
    int purpose = 0;
    int variant = 128;
};

struct SelftestArgs {
    std::string file = KDFKIT_DEFAULT_VECTORS;
    std::string filter;
};

struct BenchArgs {
    std::string targets = "all";
    size_t iterations = bench::kDefaultIterations;
    size_t warmup = bench::kDefaultWarmup;
    uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

KmacVariant to_variant(int v) {
    return v == 256 ? KmacVariant::Kmac256 : KmacVariant::Kmac128;
}

int cmd_mac(const MacArgs& a) {
    const Bytes key = from_hex(a.key_hex);
    const Bytes msg = from_hex(a.msg_hex);
    Bytes tag;
    if (a.algorithm == "hmac") {
        const auto t = hmac_sha256(key, msg);
        tag.assign(t.begin(), t.end());
    } else if (a.algorithm == "cmac") {
        const auto t = cmac(key, msg);
        tag.assign(t.begin(), t.end());
    } else {
        tag = kmac(key, msg, {to_variant(a.variant), a.bits, from_hex(a.custom_hex)});
    }
    std::cout << to_hex(tag) << '\n';
    return kExitOk;
}

int cmd_kdf(const KdfArgs& a) {
    const Bytes key = from_hex(a.key_hex);
    Bytes out;
    if (a.family == "ctr") {
        const PrfChoice prf = a.prf == "cmac" ? PrfChoice::CmacAes128 : PrfChoice::HmacSha256;
        out = counter_kdf(prf, key, from_hex(a.msg_hex), a.len);
    } else if (a.family == "kmac") {
        out = kmac_kdf(key, from_hex(a.msg_hex), a.bits, to_variant(a.variant));
    } else {
        if (a.i_hex.empty() || a.j_hex.empty() || a.purpose == 0) {
            throw InvalidParameter("kdf ieee requires --i, --j and --purpose");
        }
        const auto derived = ieee_kdf(key, from_hex(a.i_hex), from_hex(a.j_hex), a.purpose);
        out.assign(derived.begin(), derived.end());
    }
    std::cout << to_hex(out) << '\n';
    return kExitOk;
}

int cmd_selftest(const SelftestArgs& a) {
    const auto cases = vectors::load_vectors(a.file);
    const auto report = vectors::run_cases(cases, a.filter);
    for (const auto& r : report.results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.construction << "  " << r.name;
        if (!r.passed) {
            std::cout << "  (got " << r.detail << ")";
        }
        std::cout << '\n';
    }
    std::cout << report.passed << '/' << report.total << '\n';
    return report.all_passed() ? kExitOk : kExitFail;
}

std::vector<bench::Kind> select_targets(const std::string& spec) {
    if (spec == "all") return {bench::kAllKinds.begin(), bench::kAllKinds.end()};
    if (spec == "macs") return {bench::kMacKinds.begin(), bench::kMacKinds.end()};
    if (spec == "kdfs") return {bench::kKdfKinds.begin(), bench::kKdfKinds.end()};
    std::vector<bench::Kind> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = bench::parse_kind(item);
        if (!kind) {
            throw InvalidParameter("unknown bench target '" + item + "'");
        }
        out.push_back(*kind);
    }
    if (out.empty()) {
        throw InvalidParameter("no bench targets selected");
    }
    return out;
}

void print_table(const std::string& title, const std::vector<bench::Record>& records) {
    if (records.empty()) {
        return;
    }
    std::cout << title << " (ms, " << records.front().iterations << " runs)\n";
    std::cout << std::left << std::setw(10) << "";
    for (const auto& r : records) {
        std::cout << std::right << std::setw(12) << bench::to_string(r.target.kind);
    }
    std::cout << '\n';
    const std::pair<const char*, double bench::Stats::*> rows[] = {
        {"Mean", &bench::Stats::mean_ms},     {"Median", &bench::Stats::median_ms},
        {"Std.dev", &bench::Stats::stddev_ms}, {"Q1", &bench::Stats::q1_ms},
        {"Q3", &bench::Stats::q3_ms},         {"Min", &bench::Stats::min_ms},
        {"Max", &bench::Stats::max_ms},
    };
    for (const auto& [label, field] : rows) {
        std::cout << std::left << std::setw(10) << label << std::right << std::fixed
                  << std::setprecision(6);
        for (const auto& r : records) {
            std::cout << std::setw(12) << r.stats.*field;
        }
        std::cout << '\n';
    }
    std::cout << '\n';
}

int cmd_bench(const BenchArgs& a) {
    if (a.iterations == 0) {
        throw InvalidParameter("--iterations must be at least 1");
    }
    const auto format = a.format == "json" ? bench::Format::Json : bench::Format::Csv;
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot write " << a.out << '\n';
            return kExitUsage;
        }
    }

    std::vector<bench::Record> macs, kdfs, all;
    for (const auto kind : select_targets(a.targets)) {
        const auto target = bench::make_target(kind, a.seed);
        const auto samples = bench::run_bench(target, a.iterations, a.warmup, a.seed);
        bench::Record r{target, bench::summarize(samples), a.iterations, a.warmup, a.seed,
                        samples.input_digest};
        (bench::is_kdf(kind) ? kdfs : macs).push_back(r);
        all.push_back(std::move(r));
    }
    print_table("MAC generation", macs);
    print_table("KDF output generation", kdfs);
    for (const auto& check : bench::check_orderings(all)) {
        std::cout << (check.passed ? "ok   " : "WARN ") << check.name << "  (" << check.detail << ")\n";
    }

    if (file.is_open()) {
        bench::export_results(all, format, file);
        file.close();
        if (!file) {
            std::cerr << "error: failed writing " << a.out << '\n';
            return kExitUsage;
        }
        std::cout << "wrote " << all.size() << " rows to " << a.out << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HMAC / CMAC / KMAC and the KDFs built on them"};
    app.require_subcommand(1);

    MacArgs mac_args;
    auto* mac = app.add_subcommand("mac", "compute a message authentication code");
    mac->add_option("algorithm", mac_args.algorithm, "hmac, cmac or kmac")
        ->required()
        ->check(CLI::IsMember({"hmac", "cmac", "kmac"}));
    mac->add_option("--key", mac_args.key_hex, "key (hex)")->required();
    mac->add_option("--msg", mac_args.msg_hex, "message (hex)");
    mac->add_option("--bits", mac_args.bits, "KMAC output length in bits")->capture_default_str();
    mac->add_option("--custom", mac_args.custom_hex, "KMAC customization string (hex)");
    mac->add_option("--variant", mac_args.variant, "KMAC variant")
        ->check(CLI::IsMember({128, 256}))
        ->capture_default_str();

    KdfArgs kdf_args;
    auto* kdf = app.add_subcommand("kdf", "derive pseudorandom bytes");
    kdf->add_option("family", kdf_args.family, "ctr, kmac or ieee")
        ->required()
        ->check(CLI::IsMember({"ctr", "kmac", "ieee"}));
    kdf->add_option("--key", kdf_args.key_hex, "key (hex)")->required();
    kdf->add_option("--msg", kdf_args.msg_hex, "context message (hex)");
    kdf->add_option("--prf", kdf_args.prf, "counter-mode PRF")
        ->check(CLI::IsMember({"hmac", "cmac"}))
        ->capture_default_str();
    kdf->add_option("--len", kdf_args.len, "counter-mode output length in bytes")->capture_default_str();
    kdf->add_option("--bits", kdf_args.bits, "KMAC-KDF output length in bits")->capture_default_str();
    kdf->add_option("--i", kdf_args.i_hex, "IEEE period index (4 bytes hex)");
    kdf->add_option("--j", kdf_args.j_hex, "IEEE key index (4 bytes hex)");
    kdf->add_option("--purpose", kdf_args.purpose, "IEEE purpose: 1 signing, 2 encryption")
        ->check(CLI::IsMember({1, 2}));
    kdf->add_option("--variant", kdf_args.variant, "KMAC-KDF variant")
        ->check(CLI::IsMember({128, 256}))
        ->capture_default_str();

    SelftestArgs selftest_args;
    auto* selftest = app.add_subcommand("selftest", "run a known-answer vector file");
    selftest->add_option("file", selftest_args.file, "vector file (JSON)")->capture_default_str();
    selftest->add_option("--filter", selftest_args.filter, "only run this construction or family");

    BenchArgs bench_args;
    if (const char* env = std::getenv("KDFKIT_BENCH_ITERATIONS")) {
        try {
            bench_args.iterations = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "error: KDFKIT_BENCH_ITERATIONS is not a number\n";
            return kExitUsage;
        }
    }
    auto* bench_cmd = app.add_subcommand("bench", "time every construction");
    bench_cmd->add_option("--targets", bench_args.targets, "all, macs, kdfs or a comma list")
        ->capture_default_str();
    bench_cmd->add_option("--iterations", bench_args.iterations, "timed runs per target")
        ->capture_default_str();
    bench_cmd->add_option("--warmup", bench_args.warmup, "untimed runs per target")->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed, "input generator seed")->capture_default_str();
    bench_cmd->add_option("--out", bench_args.out, "result file");
    bench_cmd->add_option("--format", bench_args.format, "result file format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*mac) return cmd_mac(mac_args);
        if (*kdf) return cmd_kdf(kdf_args);
        if (*selftest) return cmd_selftest(selftest_args);
        return cmd_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
