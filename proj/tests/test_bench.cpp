#include <doctest.h>

#include <kdfkit/bench.hpp>

#include <cmath>
#include <sstream>

using namespace kdfkit;
using namespace kdfkit::bench;

namespace {

size_t count_lines(const std::string& s) {
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::vector<Record> fake_records(std::initializer_list<std::pair<Kind, double>> means) {
    std::vector<Record> out;
    for (auto [kind, mean] : means) {
        Record r;
        r.target = make_target(kind, 1);
        r.stats = summarize_ms({mean, mean});
        r.iterations = 2;
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("summarize") {
    SUBCASE("1..5") {
        const auto s = summarize_ms({5, 1, 4, 2, 3});
        CHECK(s.mean_ms == doctest::Approx(3.0));
        CHECK(s.median_ms == doctest::Approx(3.0));
        CHECK(s.stddev_ms == doctest::Approx(std::sqrt(2.0)));
        CHECK(s.q1_ms == doctest::Approx(2.0));
        CHECK(s.q3_ms == doctest::Approx(4.0));
        CHECK(s.min_ms == 1.0);
        CHECK(s.max_ms == 5.0);
    }
    SUBCASE("constant samples") {
        const auto s = summarize_ms({2, 2, 2, 2});
        CHECK(s.mean_ms == 2.0);
        CHECK(s.stddev_ms == 0.0);
        CHECK(s.q1_ms == 2.0);
        CHECK(s.q3_ms == 2.0);
    }
    SUBCASE("even count interpolates") {
        const auto s = summarize_ms({1, 3});
        CHECK(s.median_ms == doctest::Approx(2.0));
        CHECK(s.q1_ms == doctest::Approx(1.5));
        CHECK(s.q3_ms == doctest::Approx(2.5));
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(summarize_ms({}), InvalidParameter);
    }
    SUBCASE("nanoseconds convert to milliseconds") {
        TimingSampleSet t;
        t.samples_ns = {1'000'000, 3'000'000};
        t.iterations = 2;
        CHECK(summarize(t).mean_ms == doctest::Approx(2.0));
    }
}

TEST_CASE("kind names") {
    for (auto k : kAllKinds) {
        CHECK(parse_kind(to_string(k)) == k);
    }
    CHECK(parse_kind("cmac_kdf") == Kind::CmacKdf);
    CHECK_FALSE(parse_kind("sha1").has_value());
    CHECK(is_kdf(Kind::IeeeKdf));
    CHECK_FALSE(is_kdf(Kind::Kmac));
}

TEST_CASE("targets") {
    CHECK(make_target(Kind::Hmac, 3).key.size() == 16);
    CHECK(make_target(Kind::Hmac, 3).key == make_target(Kind::Hmac, 3).key);
    CHECK(make_target(Kind::Hmac, 3).output_len() == 32);
    CHECK(make_target(Kind::Cmac, 3).output_len() == 16);
    CHECK(make_target(Kind::Kmac, 3).output_len() == 32);
    CHECK(make_target(Kind::IeeeKdf, 3).output_len() == 48);
    CHECK(make_target(Kind::HmacKdf, 3).output_len() == 48);
}

TEST_CASE("run_bench") {
    for (auto k : kAllKinds) {
        CAPTURE(to_string(k));
        const auto t = make_target(k, 7);
        const auto s = run_bench(t, 1000, 100, 7);
        REQUIRE(s.samples_ns.size() == 1000);
        CHECK(s.iterations == 1000);
        CHECK(s.warmup_count == 100);
        CHECK(std::all_of(s.samples_ns.begin(), s.samples_ns.end(), [](uint64_t v) { return v > 0; }));
        CHECK(s.input_digest.size() == 64);
    }
    const auto t = make_target(Kind::Cmac, 7);
    CHECK(run_bench(t, 10, 0, 42).input_digest == run_bench(t, 10, 0, 42).input_digest);
    CHECK(run_bench(t, 10, 0, 42).input_digest != run_bench(t, 10, 0, 43).input_digest);
    CHECK_THROWS_AS(run_bench(t, 0, 0, 1), InvalidParameter);
}

TEST_CASE("export") {
    std::vector<Record> records;
    for (auto k : kAllKinds) {
        Record r;
        r.target = make_target(k, 1);
        const auto s = run_bench(r.target, 20, 2, 1);
        r.stats = summarize(s);
        r.iterations = 20;
        r.warmup = 2;
        r.seed = 1;
        r.input_digest = s.input_digest;
        records.push_back(r);
    }

    SUBCASE("CSV has a header and one row per target") {
        const std::string csv = export_results(records, Format::Csv);
        CHECK(count_lines(csv) == 8);
        CHECK(csv.rfind("target,msg_len,out_len,iterations,warmup,seed,input_sha256,mean_ms", 0) == 0);
        const std::string one = export_results({records.front()}, Format::Csv);
        CHECK(count_lines(one) == 2);
        CHECK(one.find("\nHMAC,32,32,20,2,1,") != std::string::npos);
    }
    SUBCASE("JSON round-trips to six decimals") {
        const auto back = parse_results_json(export_results(records, Format::Json));
        REQUIRE(back.size() == records.size());
        for (size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].target.kind == records[i].target.kind);
            CHECK(back[i].stats.mean_ms == round6(records[i].stats.mean_ms));
            CHECK(back[i].input_digest == records[i].input_digest);
        }
    }
    SUBCASE("empty export is rejected") {
        CHECK_THROWS_AS(export_results({}, Format::Csv), InvalidParameter);
    }
}

TEST_CASE("ordering checks") {
    const auto good = fake_records({{Kind::Hmac, 0.002},
                                    {Kind::Cmac, 0.001},
                                    {Kind::Kmac, 0.003},
                                    {Kind::HmacKdf, 0.006},
                                    {Kind::CmacKdf, 0.004},
                                    {Kind::KmacKdf, 0.005},
                                    {Kind::IeeeKdf, 0.008}});
    const auto checks = check_orderings(good);
    CHECK(checks.size() == 5);
    CHECK(std::all_of(checks.begin(), checks.end(), [](const OrderingCheck& c) { return c.passed; }));

    const auto bad = fake_records({{Kind::Hmac, 0.001}, {Kind::Cmac, 0.002}});
    const auto partial = check_orderings(bad);
    REQUIRE(partial.size() == 1);
    CHECK_FALSE(partial[0].passed);

    CHECK(check_orderings(fake_records({{Kind::Kmac, 1.0}})).empty());
}
