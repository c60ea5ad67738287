#pragma once

// Text format for tournaments, consumed and produced by the CLI:
//   line 1      decimal vertex count n
//   lines 2..n+1  n characters from {0,1}; character j of row i is 1 iff
//                 the edge is directed i -> j
// Rows are terminated by a single '\n' with no trailing whitespace.
// Serialization is bit-exact and unique per tournament; parse(serialize(t))
// is the identity and serialize(parse(s)) reproduces s on valid input.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "starfactor/tournament.hpp"

namespace starfactor {

struct ParseError : std::runtime_error {
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

inline std::string serialize_tournament(const Tournament& t) {
  int n = t.size();
  std::string out = std::to_string(n);
  out += '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += (i != j && t.beats(i, j)) ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline Tournament parse_tournament(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](int line_no) -> std::string_view {
    if (pos >= text.size()) throw ParseError(line_no, 1, "unexpected end of input");
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };

  std::string_view header = next_line(1);
  if (header.empty()) throw ParseError(1, 1, "expected vertex count");
  long n = 0;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(header[i])))
      throw ParseError(1, static_cast<int>(i + 1), "vertex count must be a decimal integer");
    n = n * 10 + (header[i] - '0');
    if (n > 1'000'000) throw ParseError(1, static_cast<int>(i + 1), "vertex count too large");
  }
  if (n < 1) throw ParseError(1, 1, "vertex count must be positive");

  std::vector<std::string_view> rows;
  rows.reserve(n);
  for (long i = 0; i < n; ++i) {
    std::string_view row = next_line(static_cast<int>(i + 2));
    if (static_cast<long>(row.size()) != n)
      throw ParseError(static_cast<int>(i + 2), static_cast<int>(row.size() + 1),
                       "row has " + std::to_string(row.size()) + " characters, expected " +
                           std::to_string(n));
    rows.push_back(row);
  }
  if (pos < text.size())
    throw ParseError(static_cast<int>(n + 2), 1, "trailing content after adjacency rows");

  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1')
        throw ParseError(static_cast<int>(i + 2), static_cast<int>(j + 1),
                         std::string("invalid character '") + c + "', expected 0 or 1");
      if (i == j && c != '0')
        throw ParseError(static_cast<int>(i + 2), static_cast<int>(j + 1),
                         "diagonal entry must be 0");
    }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (rows[i][j] == rows[j][i])
        throw ParseError(static_cast<int>(j + 2), static_cast<int>(i + 1),
                         "pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") must be oriented exactly one way");

  return Tournament::build(static_cast<int>(n), [&](int i, int j) { return rows[i][j] == '1'; });
}

}  // namespace starfactor
