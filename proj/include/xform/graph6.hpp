#ifndef XFORM_GRAPH6_HPP
#define XFORM_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "xform/graph.hpp"

namespace xform {

class graph6_error : public std::runtime_error {
 public:
  enum class Kind {
    bad_header,        // missing/unparseable order bytes, unsupported form
    truncated,         // bit section shorter than n(n-1)/2 bits requires
    trailing_garbage,  // bytes left over after the bit section
    bad_data,          // out-of-range data byte, nonzero padding, or n = 0
  };

  graph6_error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Decodes one graph6 string: one header byte for n <= 62, or the four-byte
// '~'-prefixed form for 63 <= n <= 258047. The eight-byte '~~' form is not
// supported. Adjacency bits cover the upper triangle in column order
// ((0,1),(0,2),(1,2),(0,3),...), six bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view text);

// Canonical encoding: short form whenever n <= 62, zero padding bits.
std::string to_graph6(const Graph& g);

}  // namespace xform

#endif
