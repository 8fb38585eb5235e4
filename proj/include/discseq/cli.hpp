#pragma once

// File formats and the batch command-line front end.
//
// Sequence files:
//   CSV  - one real per line, optional first line "# start_index=0" or
//          "# start_index=1" (default 1). Blank lines are ignored.
//   JSON - {"start_index": 0|1, "values": [ ... ]}
// The format is detected from content: a leading '{' means JSON.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "discseq/sequence.hpp"

namespace discseq {

inline constexpr std::string_view kToolName = "discseq";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Shortest decimal string that parses back to exactly x ('.' separator).
std::string format_number(double x);

Sequence parse_sequence(std::string_view text);
Sequence read_sequence_file(const std::filesystem::path& path);

std::string sequence_to_csv(const Sequence& u);
std::string sequence_to_json(const Sequence& u);
// JSON when the extension is ".json", CSV otherwise.
void write_sequence_file(const std::filesystem::path& path, const Sequence& u);

// Exit codes: 0 success (or property holds), 1 property fails, 2 input or usage error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace discseq
