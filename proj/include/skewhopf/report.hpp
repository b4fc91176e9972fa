#pragma once

#include <map>
#include <string>

#include "check.hpp"

namespace skewhopf {

inline constexpr const char* kToolName = "skewhopf";
inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable verification report. Deterministic: the same input yields a
// byte-identical report apart from the version/digest header fields.
struct Report {
    std::string command;
    std::string input_digest;
    CheckList checks;
    std::map<std::string, std::string> results;  // informational key/value output

    // 0 all pass, 1 some check failed, 3 unresolved without failures.
    int exit_code() const;

    std::string to_json() const;
    std::string to_text() const;
};

// FNV-1a 64-bit digest of the input text, hex encoded.
std::string input_digest(const std::string& text);

}  // namespace skewhopf
