#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bipdeg/search.hpp"

namespace bipdeg::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kInvalid = 2 };

/// Integers separated by whitespace and/or commas. Throws InvalidInput on any
/// other token.
std::vector<int> parse_sequence(std::string_view text);

/// One decision, flattened for output.
struct Record {
    std::optional<std::vector<int>> input;  ///< absent when the text did not parse
    std::string verdict;                    ///< "yes", "no" or "invalid"
    std::optional<std::vector<int>> sequence;
    std::optional<std::vector<int>> a, b;
    std::optional<std::string> certificate;
    std::optional<bool> exact;
    std::optional<int> phase;
    double elapsed_ms = 0;
    std::size_t zeros_dropped = 0;
    std::optional<std::string> error;

    int exit_code() const;
};

/// Parses and decides one line of input; never throws on bad input.
Record decide_text(std::string_view text, const SearchConfig& config);
Record decide_values(const std::vector<int>& raw, const SearchConfig& config);

nlohmann::json to_json(const Record& r);
std::string to_human(const Record& r);

/// Runs the command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bipdeg::cli
