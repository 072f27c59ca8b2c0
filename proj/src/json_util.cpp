#include "json_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontogen/error.hpp"

namespace ontogen::detail {

namespace {

int lineAtByte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

Json parseJson(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(source + ":" + std::to_string(lineAtByte(text, at)), e.what());
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void requireSchema(const Json& doc, std::string_view expected, const std::string& source) {
  if (!doc.is_object()) throw ParseError(source, "top-level value must be an object");
  auto it = doc.find("schema");
  if (it == doc.end() || !it->is_string() || it->get<std::string>() != expected) {
    throw ParseError(source, "expected schema \"" + std::string(expected) + "\"");
  }
}

int lineOf(std::string_view text, std::string_view needle) {
  auto pos = text.find(needle);
  if (pos == std::string_view::npos) return 0;
  return lineAtByte(text, pos);
}

}  // namespace ontogen::detail
