#include <kdfkit/vectors.hpp>

#include <kdfkit/cmac.hpp>
#include <kdfkit/hmac.hpp>
#include <kdfkit/kdf.hpp>
#include <kdfkit/kmac.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kdfkit::vectors {

namespace {

Bytes hex_field(const nlohmann::json& obj, const char* key) {
    if (!obj.contains(key)) {
        return {};
    }
    return from_hex(obj.at(key).get<std::string>());
}

size_t require(const std::optional<size_t>& v, const char* what) {
    if (!v) {
        throw InvalidParameter(std::string("missing parameter '") + what + "'");
    }
    return *v;
}

bool is(const VectorCase& c, std::string_view name) {
    return c.construction == name;
}

}  // namespace

const std::vector<std::string>& known_constructions() {
    static const std::vector<std::string> names = {
        "aes128",      "sha256",      "shake128",            "shake256",
        "cshake128",   "cshake256",   "hmac-sha256",         "cmac-aes128",
        "kmac128",     "kmac256",     "kdf-ctr-hmac-sha256", "kdf-ctr-cmac-aes128",
        "kdf-kmac128", "kdf-kmac256", "kdf-ieee"};
    return names;
}

size_t expected_output_len(const VectorCase& c) {
    if (is(c, "aes128") || is(c, "cmac-aes128")) return 16;
    if (is(c, "sha256") || is(c, "hmac-sha256")) return 32;
    if (is(c, "kdf-ieee")) return kIeeeKdfOutputLen;
    if (c.construction.starts_with("kdf-ctr-")) return require(c.params.len, "len");
    return require(c.params.bits, "bits") / 8;
}

std::vector<VectorCase> parse_vectors(std::string_view json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw VectorFileError(std::string("vector file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw VectorFileError("vector file must hold a JSON array of cases");
    }
    const auto& known = known_constructions();
    std::vector<VectorCase> cases;
    for (size_t idx = 0; idx < doc.size(); ++idx) {
        const auto& item = doc[idx];
        try {
            VectorCase c;
            c.construction = item.at("construction").get<std::string>();
            if (std::find(known.begin(), known.end(), c.construction) == known.end()) {
                throw ConfigError("unknown construction '" + c.construction + "'");
            }
            c.name = item.value("name", c.construction + " #" + std::to_string(idx));
            c.key = hex_field(item, "key");
            c.msg = hex_field(item, "msg");
            c.expect = from_hex(item.at("expect").get<std::string>());
            const auto params = item.value("params", nlohmann::json::object());
            if (params.contains("bits")) c.params.bits = params.at("bits").get<size_t>();
            if (params.contains("len")) c.params.len = params.at("len").get<size_t>();
            if (params.contains("U")) c.params.purpose = params.at("U").get<int>();
            c.params.function_name = hex_field(params, "N");
            c.params.customization = hex_field(params, "S");
            c.params.i_value = hex_field(params, "i");
            c.params.j_value = hex_field(params, "j");
            if (c.expect.size() != expected_output_len(c)) {
                throw InvalidParameter("expect has " + std::to_string(c.expect.size()) +
                                       " bytes, construction produces " +
                                       std::to_string(expected_output_len(c)));
            }
            cases.push_back(std::move(c));
        } catch (const std::exception& e) {
            throw VectorFileError("case " + std::to_string(idx) + ": " + e.what());
        }
    }
    return cases;
}

std::vector<VectorCase> load_vectors(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw VectorFileError("cannot read vector file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_vectors(buf.str());
}

Bytes compute(const VectorCase& c) {
    const auto& p = c.params;
    const auto block = [](const auto& b) { return Bytes(b.begin(), b.end()); };

    if (is(c, "aes128")) return block(aes_encrypt_block(c.key, to_block(c.msg)));
    if (is(c, "sha256")) return block(sha256(c.msg));
    if (is(c, "shake128"))
        return sponge_absorb_squeeze(c.msg, kRate128, kShakePad, require(p.bits, "bits") / 8);
    if (is(c, "shake256"))
        return sponge_absorb_squeeze(c.msg, kRate256, kShakePad, require(p.bits, "bits") / 8);
    if (is(c, "cshake128"))
        return cshake(c.msg, require(p.bits, "bits"), p.function_name, p.customization, kRate128);
    if (is(c, "cshake256"))
        return cshake(c.msg, require(p.bits, "bits"), p.function_name, p.customization, kRate256);
    if (is(c, "hmac-sha256")) return block(hmac_sha256(c.key, c.msg));
    if (is(c, "cmac-aes128")) return block(cmac(c.key, c.msg));
    if (is(c, "kmac128"))
        return kmac(c.key, c.msg, {KmacVariant::Kmac128, require(p.bits, "bits"), p.customization});
    if (is(c, "kmac256"))
        return kmac(c.key, c.msg, {KmacVariant::Kmac256, require(p.bits, "bits"), p.customization});
    if (is(c, "kdf-ctr-hmac-sha256"))
        return counter_kdf(PrfChoice::HmacSha256, c.key, c.msg, require(p.len, "len"));
    if (is(c, "kdf-ctr-cmac-aes128"))
        return counter_kdf(PrfChoice::CmacAes128, c.key, c.msg, require(p.len, "len"));
    if (is(c, "kdf-kmac128")) return kmac_kdf(c.key, c.msg, require(p.bits, "bits"));
    if (is(c, "kdf-kmac256"))
        return kmac_kdf(c.key, c.msg, require(p.bits, "bits"), KmacVariant::Kmac256);
    if (is(c, "kdf-ieee")) {
        if (!p.purpose) throw InvalidParameter("missing parameter 'U'");
        return block(ieee_kdf(c.key, p.i_value, p.j_value, *p.purpose));
    }
    throw ConfigError("unknown construction '" + c.construction + "'");
}

bool matches_filter(std::string_view construction, std::string_view filter) {
    if (filter.empty() || construction == filter) {
        return true;
    }
    return construction.substr(0, construction.find('-')) == filter;
}

Report run_cases(const std::vector<VectorCase>& cases, std::string_view filter) {
    Report report;
    for (const auto& c : cases) {
        if (!matches_filter(c.construction, filter)) {
            continue;
        }
        CaseResult r{c.name, c.construction, false, {}};
        try {
            const Bytes actual = compute(c);
            r.passed = actual == c.expect;
            r.detail = to_hex(actual);
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        report.passed += r.passed ? 1 : 0;
        ++report.total;
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace kdfkit::vectors
