/*
* Known-answer vector files: a JSON array of cases, each naming a
* construction, its inputs as hex, and the expected output.
*
*   [{"name": "RFC 4493 example 1", "construction": "cmac-aes128",
*     "key": "2b7e...", "msg": "", "params": {}, "expect": "bb1d..."}]
*
* params by construction:
*   shake128/256     bits
*   cshake128/256    bits, N (hex), S (hex)
*   kmac128/256      bits, S (hex)
*   kdf-ctr-*        len (bytes)
*   kdf-kmac128/256  bits
*   kdf-ieee         i (hex, 4 bytes), j (hex, 4 bytes), U (1 or 2)
*/
#pragma once

#include <kdfkit/bytes.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdfkit::vectors {

/// Unreadable or malformed vector file.
class VectorFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Params {
    std::optional<size_t> bits;
    std::optional<size_t> len;
    std::optional<int> purpose;
    Bytes function_name;
    Bytes customization;
    Bytes i_value;
    Bytes j_value;
};

struct VectorCase {
    std::string name;
    std::string construction;
    Bytes key;
    Bytes msg;
    Params params;
    Bytes expect;
};

const std::vector<std::string>& known_constructions();

/// Output length the construction produces for this case's parameters.
size_t expected_output_len(const VectorCase& c);

std::vector<VectorCase> parse_vectors(std::string_view json);
std::vector<VectorCase> load_vectors(const std::filesystem::path& path);

/// Runs the construction on the case inputs. Throws ConfigError for an
/// unknown construction and the construction's own errors otherwise.
Bytes compute(const VectorCase& c);

/// True if construction equals filter, or the part before its first '-' does.
bool matches_filter(std::string_view construction, std::string_view filter);

struct CaseResult {
    std::string name;
    std::string construction;
    bool passed = false;
    std::string detail;  // actual output, or the error text
};

struct Report {
    std::vector<CaseResult> results;
    size_t passed = 0;
    size_t total = 0;
    bool all_passed() const { return passed == total; }
};

Report run_cases(const std::vector<VectorCase>& cases, std::string_view filter = {});

}  // namespace kdfkit::vectors
