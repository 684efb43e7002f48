#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <kdfkit/bench.hpp>
#include <kdfkit/cmac.hpp>
#include <kdfkit/hmac.hpp>
#include <kdfkit/kdf.hpp>
#include <kdfkit/kmac.hpp>
#include <kdfkit/vectors.hpp>

#include <string>

namespace py = pybind11;
using namespace kdfkit;

namespace {

ByteView view(const py::bytes& b) {
    const std::string_view sv(b);
    return as_bytes(sv);
}

template <typename Container>
py::bytes to_py(const Container& c) {
    return py::bytes(reinterpret_cast<const char*>(c.data()), c.size());
}

KmacVariant variant_of(int v) {
    if (v != 128 && v != 256) {
        throw InvalidParameter("variant must be 128 or 256");
    }
    return v == 128 ? KmacVariant::Kmac128 : KmacVariant::Kmac256;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "HMAC, AES-CMAC, KMAC and the key derivation functions built on them";

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("aes_encrypt_block", [](py::bytes key, py::bytes block) {
        return to_py(aes_encrypt_block(view(key), to_block(view(block))));
    }, py::arg("key"), py::arg("block"));
    m.def("sha256", [](py::bytes data) { return to_py(sha256(view(data))); }, py::arg("data"));
    m.def("sponge", [](py::bytes data, size_t rate, uint8_t domain_pad, size_t out_len) {
        return to_py(sponge_absorb_squeeze(view(data), rate, domain_pad, out_len));
    }, py::arg("data"), py::arg("rate"), py::arg("domain_pad"), py::arg("out_len"));

    m.def("hmac_sha256", [](py::bytes key, py::bytes msg) {
        return to_py(hmac_sha256(view(key), view(msg)));
    }, py::arg("key"), py::arg("msg"));
    m.def("cmac", [](py::bytes key, py::bytes msg) { return to_py(cmac(view(key), view(msg))); },
          py::arg("key"), py::arg("msg"));
    m.def("cmac_subkeys", [](py::bytes key) {
        const auto sk = derive_subkeys(view(key));
        return py::make_tuple(to_py(sk.k1), to_py(sk.k2));
    }, py::arg("key"));
    m.def("cshake", [](py::bytes msg, size_t bits, py::bytes name, py::bytes custom, int variant) {
        return to_py(cshake(view(msg), bits, view(name), view(custom), rate_of(variant_of(variant))));
    }, py::arg("msg"), py::arg("bits"), py::arg("name") = py::bytes(), py::arg("custom") = py::bytes(),
       py::arg("variant") = 128);
    m.def("kmac", [](py::bytes key, py::bytes msg, size_t bits, py::bytes custom, int variant) {
        const std::string_view s(custom);
        return to_py(kmac(view(key), view(msg), {variant_of(variant), bits, Bytes(s.begin(), s.end())}));
    }, py::arg("key"), py::arg("msg"), py::arg("bits") = 256, py::arg("custom") = py::bytes(),
       py::arg("variant") = 128);

    m.def("counter_kdf", [](const std::string& prf, py::bytes key, py::bytes msg, size_t length) {
        if (prf != "hmac" && prf != "cmac") {
            throw InvalidParameter("prf must be 'hmac' or 'cmac'");
        }
        const PrfChoice choice = prf == "hmac" ? PrfChoice::HmacSha256 : PrfChoice::CmacAes128;
        return to_py(counter_kdf(choice, view(key), view(msg), length));
    }, py::arg("prf"), py::arg("key"), py::arg("msg"), py::arg("length"));
    m.def("kmac_kdf", [](py::bytes key, py::bytes msg, size_t bits, int variant) {
        return to_py(kmac_kdf(view(key), view(msg), bits, variant_of(variant)));
    }, py::arg("key"), py::arg("msg"), py::arg("bits"), py::arg("variant") = 128);
    m.def("ieee_kdf", [](py::bytes key, py::bytes i_value, py::bytes j_value, int purpose) {
        return to_py(ieee_kdf(view(key), view(i_value), view(j_value), purpose));
    }, py::arg("key"), py::arg("i_value"), py::arg("j_value"), py::arg("purpose"));

    py::class_<bench::Stats>(m, "BenchStats")
        .def_readonly("mean_ms", &bench::Stats::mean_ms)
        .def_readonly("median_ms", &bench::Stats::median_ms)
        .def_readonly("stddev_ms", &bench::Stats::stddev_ms)
        .def_readonly("q1_ms", &bench::Stats::q1_ms)
        .def_readonly("q3_ms", &bench::Stats::q3_ms)
        .def_readonly("min_ms", &bench::Stats::min_ms)
        .def_readonly("max_ms", &bench::Stats::max_ms);
    m.def("summarize", [](std::vector<double> samples_ms) { return bench::summarize_ms(std::move(samples_ms)); },
          py::arg("samples_ms"));
    m.def("run_bench", [](const std::string& target, size_t iterations, size_t warmup, uint64_t seed) {
        const auto kind = bench::parse_kind(target);
        if (!kind) {
            throw InvalidParameter("unknown bench target '" + target + "'");
        }
        const auto samples = bench::run_bench(bench::make_target(*kind, seed), iterations, warmup, seed);
        return py::make_tuple(samples.samples_ns, samples.input_digest);
    }, py::arg("target"), py::arg("iterations") = bench::kDefaultIterations,
       py::arg("warmup") = bench::kDefaultWarmup, py::arg("seed") = 1);

    m.def("selftest", [](const std::string& path, const std::string& filter) {
        const auto report = vectors::run_cases(vectors::load_vectors(path), filter);
        return py::make_tuple(report.passed, report.total);
    }, py::arg("path"), py::arg("filter") = "");
}
