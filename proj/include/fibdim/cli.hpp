#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fibdim/graph.hpp"

namespace fibdim::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;  // also parse and format errors
inline constexpr int not_partial_cube = 2;
inline constexpr int resource = 3;
inline constexpr int internal = 4;
inline constexpr int rejected = 5;
}  // namespace exit_code

enum class GraphFormat { automatic, edge_list, graph6 };

/// A first content line holding two tokens means an edge list; a single
/// token (or a ">>graph6<<" header) means graph6. Blank input is an edge
/// list.
GraphFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

/// FNV-1a 64 of the raw bytes, as 16 lowercase hex digits.
std::string input_digest(std::string_view bytes);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is one of exit_code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibdim::cli
