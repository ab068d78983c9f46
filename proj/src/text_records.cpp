#include "text_records.hpp"

namespace bdsym::detail {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line;
    auto body = text.substr(pos, nl - pos);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::size_t p = 0;
    while (p <= body.size()) {
      auto semi = body.find(';', p);
      if (semi == std::string_view::npos) semi = body.size();
      auto r = trim(body.substr(p, semi - p));
      if (!r.empty()) out.push_back({r, line});
      p = semi + 1;
    }
    pos = nl + 1;
  }
  return out;
}

}  // namespace bdsym::detail
