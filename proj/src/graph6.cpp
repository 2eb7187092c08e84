#include "xform/graph6.hpp"

#include <cstddef>
#include <vector>

namespace xform {

namespace {

constexpr int kOffset = 63;
constexpr long kLongFormMaxN = 258047;  // beyond this the header would collide with '~~'

bool is_data_byte(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

int byte_value(char c) { return static_cast<unsigned char>(c) - kOffset; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  using Kind = graph6_error::Kind;
  if (text.empty()) throw graph6_error(Kind::bad_header, "empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw graph6_error(Kind::bad_header, "eight-byte graph6 order form is not supported");
    if (text.size() < 4)
      throw graph6_error(Kind::bad_header, "long-form header needs four bytes");
    for (int i = 1; i <= 3; ++i)
      if (!is_data_byte(text[i]))
        throw graph6_error(Kind::bad_header, "long-form header byte out of range");
    n = (static_cast<long>(byte_value(text[1])) << 12) |
        (static_cast<long>(byte_value(text[2])) << 6) |
        static_cast<long>(byte_value(text[3]));
    pos = 4;
  } else {
    if (!is_data_byte(text[0]))
      throw graph6_error(Kind::bad_header, "header byte out of range");
    n = byte_value(text[0]);
    pos = 1;
  }
  if (n == 0) throw graph6_error(Kind::bad_data, "order 0 is not a graph here; n >= 1 required");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < nbytes)
    throw graph6_error(Kind::truncated, "bit section truncated: need " + std::to_string(nbytes) +
                                            " data bytes, have " + std::to_string(have));
  if (have > nbytes)
    throw graph6_error(Kind::trailing_garbage,
                       std::to_string(have - nbytes) + " unexpected bytes after the bit section");
  for (std::size_t i = 0; i < nbytes; ++i)
    if (!is_data_byte(text[pos + i]))
      throw graph6_error(Kind::bad_data, "data byte out of range at offset " + std::to_string(pos + i));
  if (nbits % 6 != 0) {
    const int pad = static_cast<int>(6 - nbits % 6);
    if (byte_value(text[pos + nbytes - 1]) & ((1 << pad) - 1))
      throw graph6_error(Kind::bad_data, "nonzero padding bits in the final data byte");
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_value(text[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= kLongFormMaxN) {
    out.push_back('~');
    out.push_back(static_cast<char>(kOffset + (n >> 12)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6 here (n > 258047)");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace xform
