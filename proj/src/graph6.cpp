// graph6 reader/writer (McKay's format).
//
// A record is N(n) followed by the upper triangle of the adjacency matrix in
// column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed six bits per byte,
// most significant bit first, each byte offset by 63.

#include <string>

#include "fibdim/error.hpp"
#include "fibdim/graph.hpp"

namespace fibdim {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string encode_size(std::size_t n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  return out;
}

class Reader {
 public:
  Reader(std::string_view body, std::size_t base) : body_(body), base_(base) {}

  std::size_t offset() const { return base_ + pos_; }
  bool done() const { return pos_ == body_.size(); }

  unsigned next() {
    if (pos_ >= body_.size()) {
      throw ParseError("graph6 record truncated at offset " +
                           std::to_string(offset()),
                       offset());
    }
    unsigned char c = static_cast<unsigned char>(body_[pos_]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte " + std::to_string(c) +
                           " out of range at offset " +
                           std::to_string(offset()),
                       offset());
    }
    ++pos_;
    return c - 63u;
  }

  unsigned peek_raw() const {
    return pos_ < body_.size() ? static_cast<unsigned char>(body_[pos_]) : 0;
  }

 private:
  std::string_view body_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view bytes) {
  std::size_t base = 0;
  if (bytes.starts_with(kHeader)) {
    bytes.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) {
    bytes.remove_suffix(1);
  }
  if (bytes.empty()) throw ParseError("empty graph6 record", base);

  Reader in(bytes, base);
  std::size_t n = 0;
  if (in.peek_raw() != 126) {
    n = in.next();
  } else {
    in.next();
    int groups = 3;
    if (in.peek_raw() == 126) {
      in.next();
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | in.next();
  }

  std::vector<Edge> edges;
  unsigned word = 0;
  int bits_left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = in.next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1u) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (!in.done()) {
    throw ParseError("graph6 record has trailing bytes at offset " +
                         std::to_string(in.offset()),
                     in.offset());
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ValidationError("graph6 needs at least one vertex");
  std::string out = encode_size(n);
  unsigned word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace fibdim
