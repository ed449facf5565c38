#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibdim/bitstring.hpp"

namespace fibdim {

enum class EmbeddingTarget { fibonacci, hypercube };

/// On-disk form:
///   {"target": "fibonacci", "dimension": f, "labels": {"0": "0100", ...}}
/// Vertex keys are decimal ids; every vertex of the graph appears once.
struct EmbeddingFile {
  EmbeddingTarget target = EmbeddingTarget::fibonacci;
  std::size_t dimension = 0;
  std::vector<BitString> labels;
};

/// Labels must all have length `dimension`.
std::string write_embedding_json(const EmbeddingFile& file);

/// Parses the JSON form for a graph on n vertices. Malformed JSON, an unknown
/// target, a missing or out-of-range vertex key, or a non-binary label throws
/// ParseError. Label lengths are not checked here.
EmbeddingFile read_embedding_json(std::string_view text, std::size_t n);

}  // namespace fibdim
