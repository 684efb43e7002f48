#include <doctest.h>

#include "properties.hpp"

namespace {

void check_module(const std::string& module) {
    size_t seen = 0;
    for (const auto& p : kdfkit::properties::all()) {
        if (p.module != module) continue;
        ++seen;
        CAPTURE(p.name);
        const std::string failure = p.check();
        CHECK_MESSAGE(failure.empty(), failure);
    }
    CHECK(seen > 0);
}

}  // namespace

TEST_CASE("primitive_adapters properties") { check_module("primitive_adapters"); }
TEST_CASE("hmac properties") { check_module("hmac"); }
TEST_CASE("cmac properties") { check_module("cmac"); }
TEST_CASE("kmac properties") { check_module("kmac"); }
TEST_CASE("kdf properties") { check_module("kdf"); }
TEST_CASE("bench properties") { check_module("bench"); }
TEST_CASE("cli properties") { check_module("cli"); }
