#pragma once

// Line-oriented text helpers shared by the file-format parsers.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cpmonoid/error.hpp"

namespace cpmonoid::detail {

  // Splits on '\n', dropping a trailing '\r' per line. A final newline does
  // not produce an extra empty line.
  inline std::vector<std::string_view> lines(std::string_view text) {
    std::vector<std::string_view> result;
    std::size_t                   start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      result.push_back(line);
      start = end + 1;
    }
    return result;
  }

  inline std::string_view trim(std::string_view s) {
    auto const ws = " \t\r";
    auto       b  = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  }

  inline bool blank(std::string_view s) {
    return trim(s).empty();
  }

  inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> fields;
    std::size_t                   start = 0;
    while (true) {
      auto pos = s.find(sep, start);
      if (pos == std::string_view::npos) {
        fields.push_back(s.substr(start));
        return fields;
      }
      fields.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
  }

  // Whitespace-separated tokens.
  inline std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> result;
    std::size_t                   i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
      }
      auto start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
        ++i;
      }
      if (i > start) {
        result.push_back(s.substr(start, i - start));
      }
    }
    return result;
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FormatError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace cpmonoid::detail
