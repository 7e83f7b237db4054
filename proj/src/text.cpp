#include "procco/text.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <regex>

namespace procco::text {

namespace {

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_rest(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), ident_rest);
}

std::string spaced(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string underscored(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

std::string quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::optional<std::size_t> first_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cb = static_cast<unsigned char>(s[i + k]);
      if ((cb & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cb & 0x3F);
    }
    // overlong forms, surrogates and out-of-range code points
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::nullopt;
}

std::size_t utf8_length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

bool is_iso_datetime(std::string_view s) {
  static const std::regex pattern(
      R"((\d{4})-(\d{2})-(\d{2})(?:T(\d{2}):(\d{2})(?::(\d{2})(?:\.\d+)?)?(Z|[+-](\d{2}):(\d{2}))?)?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(s.begin(), s.end(), m, pattern)) return false;
  auto field = [&](int i) { return std::string_view(&*m[i].first, m[i].length()); };
  using namespace std::chrono;
  year_month_day ymd{year{to_int(field(1))}, month{static_cast<unsigned>(to_int(field(2)))},
                     day{static_cast<unsigned>(to_int(field(3)))}};
  if (!ymd.ok()) return false;
  if (m[4].matched) {
    if (to_int(field(4)) > 23 || to_int(field(5)) > 59) return false;
    if (m[6].matched && to_int(field(6)) > 60) return false;  // leap second
    if (m[8].matched && (to_int(field(8)) > 23 || to_int(field(9)) > 59)) return false;
  }
  return true;
}

bool is_decimal(std::string_view s) {
  static const std::regex pattern(R"(-?[0-9]+(\.[0-9]+)?)");
  return std::regex_match(s.begin(), s.end(), pattern);
}

}  // namespace procco::text
