#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bdsym::detail {

std::string_view trim(std::string_view s);

struct Record {
  std::string_view text;
  int line;
};

/// Splits on newlines and ';', drops '#' comments and blank records.
std::vector<Record> records(std::string_view text);

inline std::string at_line(int line, std::string_view what) {
  return "line " + std::to_string(line) + ": " + std::string(what);
}

}  // namespace bdsym::detail
