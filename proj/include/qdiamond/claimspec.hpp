#pragma once

#include <stdexcept>
#include <string>

#include "qdiamond/diamonds.hpp"

namespace qdiamond {

// Parse failure with the byte position where the input stopped making sense.
struct ClaimParseError : std::runtime_error {
    ClaimParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Claim grammar, the only parsing in the project:
//   claim       := "d" "[" k-expr "]" "(" progression ")" "=" "0" "mod" INT
//   k-expr      := INT "j" "+" INT | INT
//   progression := INT "n" ("+" INT)?
// Whitespace is free between tokens. Examples:
//   d[8j+7](4n+3) = 0 mod 8
//   d[2](81n+44)=0 mod 81
CongruenceClaim parse_claim(const std::string& text);

// One ledger line (JSON object, no trailing newline) for a finished check.
// timestamp is caller-provided so output stays reproducible under test.
std::string ledger_record(const CheckReport& report, const std::string& command,
                          const std::string& timestamp);

// RFC3339 UTC timestamp of the current wall clock.
std::string now_timestamp();

}  // namespace qdiamond
