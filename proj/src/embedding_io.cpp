#include "fibdim/embedding_io.hpp"

#include <charconv>
#include <optional>

#include <json.hpp>

#include "fibdim/error.hpp"

namespace fibdim {

namespace {

using ordered_json = nlohmann::ordered_json;

ParseError bad(const std::string& what) {
  return ParseError("embedding JSON: " + what, 0);
}

}  // namespace

std::string write_embedding_json(const EmbeddingFile& file) {
  ordered_json doc;
  doc["target"] =
      file.target == EmbeddingTarget::fibonacci ? "fibonacci" : "hypercube";
  doc["dimension"] = file.dimension;
  ordered_json labels = ordered_json::object();
  for (std::size_t v = 0; v < file.labels.size(); ++v) {
    if (file.labels[v].size() != file.dimension) {
      throw ValidationError("label of vertex " + std::to_string(v) +
                            " does not have the declared dimension");
    }
    labels[std::to_string(v)] = to_string(file.labels[v]);
  }
  doc["labels"] = std::move(labels);
  return doc.dump(2) + "\n";
}

EmbeddingFile read_embedding_json(std::string_view text, std::size_t n) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("embedding JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw bad("top level must be an object");

  EmbeddingFile file;
  const auto target = doc.find("target");
  if (target == doc.end() || !target->is_string()) throw bad("missing \"target\"");
  if (*target == "fibonacci") {
    file.target = EmbeddingTarget::fibonacci;
  } else if (*target == "hypercube") {
    file.target = EmbeddingTarget::hypercube;
  } else {
    throw bad("unknown target " + target->dump());
  }

  const auto dimension = doc.find("dimension");
  if (dimension == doc.end() || !dimension->is_number_unsigned()) {
    throw bad("\"dimension\" must be a non-negative integer");
  }
  file.dimension = dimension->get<std::size_t>();

  const auto labels = doc.find("labels");
  if (labels == doc.end() || !labels->is_object()) throw bad("missing \"labels\"");
  std::vector<std::optional<BitString>> slots(n);
  for (const auto& [key, value] : labels->items()) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || end != key.data() + key.size() || v >= n) {
      throw bad("vertex key \"" + key + "\" is not a vertex of the graph");
    }
    if (!value.is_string()) throw bad("label of vertex " + key + " is not a string");
    if (slots[v]) throw bad("vertex " + key + " appears twice");
    try {
      slots[v] = bits_from_string(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw bad("label of vertex " + key + ": " + e.what());
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!slots[v]) throw bad("vertex " + std::to_string(v) + " has no label");
    file.labels.push_back(std::move(*slots[v]));
  }
  return file;
}

}  // namespace fibdim
