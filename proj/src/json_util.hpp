#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace ontogen::detail {

using Json = nlohmann::json;

// Parses `text`, rethrowing syntax errors as ParseError with "source:line".
Json parseJson(std::string_view text, const std::string& source);

// Reads a whole file; throws ParseError naming the path if unreadable.
std::string readFile(const std::string& path);

// Throws ParseError unless doc["schema"] equals `expected`.
void requireSchema(const Json& doc, std::string_view expected, const std::string& source);

// Line number of the first occurrence of `needle` in `text` (1-based), or 0.
int lineOf(std::string_view text, std::string_view needle);

}  // namespace ontogen::detail
