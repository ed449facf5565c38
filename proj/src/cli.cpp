#include "fibdim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdim/constructions.hpp"
#include "fibdim/embedding_io.hpp"
#include "fibdim/error.hpp"
#include "fibdim/fibdim_approx.hpp"
#include "fibdim/fibdim_exact.hpp"
#include "fibdim/oracle.hpp"
#include "fibdim/partial_cube.hpp"
#include "fibdim/semicube_graphs.hpp"

namespace fibdim::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "fibdim/1";

/// Bad command-line values and unreadable files.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string bytes;
  Graph graph;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  return GraphFormat::automatic;
}

Input load_graph(const std::string& path, const std::string& format) {
  Input in;
  in.bytes = read_source(path);
  in.graph = parse_graph(in.bytes, format_from_name(format));
  return in;
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got \"" +
                     text + "\"");
  }
  return value;
}

ExactOptions exact_options(const std::optional<std::size_t>& flag) {
  ExactOptions options;
  if (flag) {
    options.max_k = *flag;
  } else if (const char* env = std::getenv("FIBDIM_MAX_K")) {
    options.max_k = parse_count(env, "FIBDIM_MAX_K");
  }
  return options;
}

ordered_json report_head(const std::string& command, const std::string& digest,
                         const Graph& g) {
  ordered_json r;
  r["schema"] = kSchema;
  r["command"] = command;
  r["input_digest"] = digest;
  r["n"] = g.order();
  r["m"] = g.size();
  return r;
}

void finish(ordered_json& report, Clock::time_point start, std::ostream& out) {
  const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
  report["timing_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
  out << report.dump(2) << "\n";
}

ordered_json bounds_json(const DimBounds& b) {
  return ordered_json{{"lower", b.lower}, {"upper", b.upper}};
}

ordered_json paths_json(const CoordinatingPathSystem& system) {
  ordered_json paths = ordered_json::array();
  for (const auto& path : system.paths) {
    ordered_json names = ordered_json::array();
    for (auto s : path) names.push_back(to_string(s));
    paths.push_back(std::move(names));
  }
  return paths;
}

std::string node_name(std::size_t node) {
  return to_string(SemicubeRef::from_node(node));
}

// --- dims -----------------------------------------------------------------

struct DimsArgs {
  std::string input;
  std::string format = "auto";
};

int cmd_dims(const DimsArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_graph(a.input, a.format);
  const Graph& g = in.graph;
  auto report = report_head("dims", input_digest(in.bytes), g);
  const auto emb = canonical_embedding(g);
  const std::size_t l = ldim(g);
  report["idim"] = emb.k;
  report["ldim"] = l;
  report["bounds"] = bounds_json(fdim_bounds(g));
  finish(report, start, out);
  return exit_code::ok;
}

// --- fdim -----------------------------------------------------------------

struct FdimArgs {
  std::string input;
  std::string format = "auto";
  bool exact = false;
  bool approx = false;
  std::string simplex_graph;
  double epsilon = 0.5;
  std::string emit_embedding;
  std::optional<std::size_t> max_k;
};

std::size_t zero_columns(const FibonacciEmbedding& emb) {
  std::size_t count = 0;
  for (std::size_t c = 0; c < emb.f; ++c) {
    const bool all_zero = std::none_of(emb.label.begin(), emb.label.end(),
                                       [c](const BitString& s) { return s[c]; });
    count += all_zero;
  }
  return count;
}

// Serializes, parses back and re-checks the embedding exactly as `verify`
// would. Returns the JSON text that may be written to disk.
std::string reverify(const Graph& g, const FibonacciEmbedding& emb,
                     ordered_json& report) {
  const std::string text = write_embedding_json(
      EmbeddingFile{EmbeddingTarget::fibonacci, emb.f, emb.label});
  const EmbeddingFile back = read_embedding_json(text, g.order());
  const auto check =
      verify_fibonacci(g, FibonacciEmbedding{back.dimension, back.labels});
  if (!check) {
    throw VerificationError("emitted embedding failed re-verification");
  }
  report["verification"] = ordered_json{
      {"verdict", "accepted"},
      {"fibonacci_strings", true},
      {"isometric", true},
      {"pairs_checked", g.order() * (g.order() - (g.order() > 0)) / 2},
      {"constant_zero_columns", zero_columns(emb)},
  };
  return text;
}

int cmd_fdim(const FdimArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_graph(a.input, a.format);
  const Graph& g = in.graph;
  std::string digest_bytes = in.bytes;
  std::optional<Input> base;
  if (!a.simplex_graph.empty()) {
    base = load_graph(a.simplex_graph, "auto");
    digest_bytes += base->bytes;
  }
  auto report = report_head("fdim", input_digest(digest_bytes), g);

  const ExactOptions options = exact_options(a.max_k);
  const DimBounds bounds = fdim_bounds(g);
  const std::size_t l = ldim(g);

  FibonacciEmbedding embedding;
  std::size_t value = 0;
  if (a.exact) {
    const ExactResult r = fdim_exact(g, options);
    report["method"] = "exact";
    report["idim"] = r.idim;
    report["ldim"] = l;
    report["bounds"] = bounds_json(bounds);
    report["fdim"] = r.fdim();
    report["path_count"] = r.paths.size();
    report["paths"] = paths_json(r.paths);
    embedding = r.embedding;
    value = r.fdim();
  } else {
    ApproxResult r;
    if (a.approx) {
      r = fdim_approx_3_2(g);
      report["method"] = "approx-3/2";
    } else {
      r = fdim_simplex_eps(g, base->graph, a.epsilon, options);
      report["method"] = "simplex-eps";
      report["epsilon"] = a.epsilon;
    }
    report["idim"] = r.idim;
    report["ldim"] = l;
    report["bounds"] = bounds_json(bounds);
    report["f_prime"] = r.f();
    if (a.approx) {
      report["matching_size"] = r.matching_size;
    } else {
      report["used_exact"] = r.used_exact;
    }
    report["path_count"] = r.paths.size();
    report["paths"] = paths_json(r.paths);
    embedding = r.embedding;
    value = r.f();
  }
  report["ratio_to_lower_bound"] =
      bounds.lower == 0 ? 1.0
                        : static_cast<double>(value) / static_cast<double>(bounds.lower);

  const std::string text = reverify(g, embedding, report);
  if (!a.emit_embedding.empty()) {
    std::ofstream file(a.emit_embedding, std::ios::binary);
    if (!(file << text)) throw UsageError("cannot write " + a.emit_embedding);
    report["embedding_file"] = a.emit_embedding;
  }
  finish(report, start, out);
  return exit_code::ok;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string format = "edgelist";
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  auto need = [&](std::size_t count, const char* usage) {
    if (a.params.size() != count) {
      throw UsageError("gen " + a.family + " expects " + usage);
    }
  };
  auto number = [&](std::size_t idx) { return parse_count(a.params[idx], "parameter"); };
  auto graph_param = [&](std::size_t idx) { return load_graph(a.params[idx], "auto").graph; };

  Graph g;
  const std::string& f = a.family;
  if (f == "fibonacci-cube") {
    need(1, "<d>");
    g = fibonacci_cube(number(0));
  } else if (f == "hypercube") {
    need(1, "<k>");
    g = hypercube(number(0));
  } else if (f == "cycle") {
    need(1, "<n>");
    g = cycle(number(0));
  } else if (f == "path") {
    need(1, "<n>");
    g = path(number(0));
  } else if (f == "star") {
    need(1, "<leaves>");
    g = star(number(0));
  } else if (f == "complete") {
    need(1, "<n>");
    g = complete_graph(number(0));
  } else if (f == "complete-bipartite") {
    need(2, "<a> <b>");
    g = complete_bipartite(number(0), number(1));
  } else if (f == "grid") {
    need(2, "<rows> <cols>");
    g = grid(number(0), number(1));
  } else if (f == "random-tree") {
    need(1, "<n>");
    g = random_tree(number(0), a.seed);
  } else if (f == "simplex") {
    need(1, "<graph-file>");
    g = simplex_graph(graph_param(0));
  } else if (f == "two-simplex") {
    need(1, "<graph-file>");
    g = two_simplex_graph(graph_param(0));
  } else if (f == "complement") {
    need(1, "<graph-file>");
    g = complement(graph_param(0));
  } else if (f == "hardness") {
    need(1, "<graph-file>");
    g = hardness_instance(graph_param(0));
  } else if (f == "product") {
    need(2, "<graph-file> <graph-file>");
    g = cartesian_product(graph_param(0), graph_param(1));
  } else if (f == "tsp12") {
    need(1, "<graph-file>");
    out << format_tsp12(tsp12_instance(graph_param(0)));
    return exit_code::ok;
  } else {
    throw UsageError("unknown family \"" + f + "\"");
  }

  if (a.format == "graph6") {
    out << emit_graph6(g) << "\n";
  } else {
    out << emit_edge_list(g);
  }
  return exit_code::ok;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string embedding;
  std::string format = "auto";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_graph(a.graph, a.format);
  const Graph& g = in.graph;
  const EmbeddingFile file = read_embedding_json(read_source(a.embedding), g.order());
  auto report = report_head("verify", input_digest(in.bytes), g);
  const bool fib = file.target == EmbeddingTarget::fibonacci;
  report["target"] = fib ? "fibonacci" : "hypercube";
  report["dimension"] = file.dimension;

  auto reject = [&](const std::string& reason, ordered_json witness) {
    report["verdict"] = "rejected";
    report["reason"] = reason;
    report["witness"] = std::move(witness);
    finish(report, start, out);
    return exit_code::rejected;
  };

  for (std::size_t v = 0; v < file.labels.size(); ++v) {
    if (file.labels[v].size() != file.dimension) {
      return reject("label length differs from dimension", ordered_json::array({v}));
    }
  }
  const DistMatrix d = distance_matrix(g);
  std::optional<std::pair<Vertex, Vertex>> pair;
  if (fib) {
    const auto check = verify_fibonacci(g, d, FibonacciEmbedding{file.dimension, file.labels});
    if (check.non_fibonacci) {
      return reject("label contains two consecutive ones",
                    ordered_json::array({*check.non_fibonacci}));
    }
    pair = check.distance_witness;
  } else {
    pair = verify_isometric(g, d, file.labels).witness;
  }
  if (pair) {
    const auto [u, v] = *pair;
    report["graph_distance"] = d(u, v) == DistMatrix::kUnreachable
                                   ? ordered_json(nullptr)
                                   : ordered_json(d(u, v));
    report["label_distance"] = hamming(file.labels[u], file.labels[v]);
    return reject("label distance differs from graph distance",
                  ordered_json::array({u, v}));
  }
  report["verdict"] = "accepted";
  finish(report, start, out);
  return exit_code::ok;
}

// --- aux ------------------------------------------------------------------

struct AuxArgs {
  std::string which;
  std::string graph;
  std::string format = "auto";
};

int cmd_aux(const AuxArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph, a.format).graph;
  const auto emb = canonical_embedding(g);
  auto dump = [&](const auto& edges, auto name) {
    for (auto [x, y] : edges) out << name(x) << ' ' << name(y) << '\n';
  };
  auto index = [](std::size_t i) { return std::to_string(i); };
  if (a.which == "X") {
    dump(build_X(emb).graph.edges(), node_name);
  } else if (a.which == "Sc") {
    dump(build_Sc(emb).graph.edges(), node_name);
  } else if (a.which == "Y") {
    dump(build_Y(build_X(emb)).graph.edges(), index);
  } else {
    dump(crossing_graph(emb).edges(), index);
  }
  return exit_code::ok;
}

// --- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string which;
  std::string graph;
  std::string format = "auto";
  std::size_t max_dim = oracle::kMaxBruteForceDimension;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_graph(a.graph, a.format);
  const Graph& g = in.graph;
  auto report = report_head("oracle " + a.which, input_digest(in.bytes), g);
  report["unstable"] = true;
  if (a.which == "fdim") {
    const auto f = oracle::brute_force_fdim(g, a.max_dim);
    report["fdim"] = f ? ordered_json(*f) : ordered_json(nullptr);
    report["searched_up_to"] = a.max_dim;
  } else if (a.which == "path-cover") {
    const auto x = build_X(canonical_embedding(g));
    report["k"] = x.k;
    report["path_cover"] = oracle::brute_force_path_cover(x);
  } else if (a.which == "hamiltonian") {
    report["hamiltonian_path"] = oracle::has_hamiltonian_path(g);
  } else if (a.which == "tsp12") {
    report["tour_length"] = oracle::tsp12_optimal(tsp12_instance(g));
  } else {
    report["median"] = oracle::is_median_graph(g);
  }
  finish(report, start, out);
  return exit_code::ok;
}

void add_format(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
      ->capture_default_str();
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.starts_with(">>graph6<<")) return GraphFormat::graph6;
    std::istringstream tokens(line);
    std::string first, second;
    if (!(tokens >> first) || first.starts_with('#')) continue;
    return (tokens >> second) ? GraphFormat::edge_list : GraphFormat::graph6;
  }
  return GraphFormat::edge_list;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) format = detect_format(text);
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  // Allow surrounding whitespace around a single graph6 record.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return parse_graph6(text);
  const auto last = text.find_last_not_of(" \t\r\n");
  return parse_graph6(text.substr(first, last - first + 1));
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[i] = kHex[hash & 0xf];
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Isometric, lattice and Fibonacci dimensions of partial cubes",
               "fibdim"};
  app.require_subcommand(1);

  DimsArgs dims_args;
  auto* dims = app.add_subcommand("dims", "idim, ldim and Fibonacci-dimension bounds");
  dims->add_option("graph", dims_args.input, "Graph file, - for stdin")->required();
  add_format(dims, dims_args.format);

  FdimArgs fdim_args;
  auto* fdim = app.add_subcommand("fdim", "Fibonacci dimension with a certified embedding");
  fdim->add_option("graph", fdim_args.input, "Graph file, - for stdin")->required();
  add_format(fdim, fdim_args.format);
  auto* method = fdim->add_option_group("method");
  method->add_flag("--exact", fdim_args.exact, "Exact subset DP");
  method->add_flag("--approx", fdim_args.approx, "Matching-based 3/2-approximation");
  method->add_option("--simplex", fdim_args.simplex_graph,
                     "Input is the simplex graph of this base graph");
  method->require_option(1);
  fdim->add_option("--epsilon", fdim_args.epsilon, "Simplex scheme accuracy")
      ->capture_default_str();
  fdim->add_option("--emit-embedding", fdim_args.emit_embedding,
                   "Write the embedding JSON here");
  fdim->add_option("--max-k", fdim_args.max_k, "Cap on idim for the exact DP");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", gen_args.family,
                  "fibonacci-cube, hypercube, cycle, path, star, complete, "
                  "complete-bipartite, grid, random-tree, simplex, two-simplex, "
                  "complement, hardness, product, tsp12")
      ->required();
  gen->add_option("params", gen_args.params, "Sizes or graph files");
  gen->add_option("--format", gen_args.format, "Output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->capture_default_str();
  gen->add_option("--seed", gen_args.seed, "Seed for random-tree")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check an embedding JSON against a graph");
  verify->add_option("graph", verify_args.graph)->required();
  verify->add_option("embedding", verify_args.embedding)->required();
  add_format(verify, verify_args.format);

  AuxArgs aux_args;
  auto* aux = app.add_subcommand("aux", "Print X, Sc, Y or the crossing graph");
  aux->add_option("which", aux_args.which)
      ->check(CLI::IsMember({"X", "Sc", "Y", "crossing"}))
      ->required();
  aux->add_option("graph", aux_args.graph)->required();
  add_format(aux, aux_args.format);

  OracleArgs oracle_args;
  auto* orc = app.add_subcommand("oracle", "Brute-force references (unstable)");
  orc->add_option("which", oracle_args.which)
      ->check(CLI::IsMember({"fdim", "path-cover", "hamiltonian", "tsp12", "median"}))
      ->required();
  orc->add_option("graph", oracle_args.graph)->required();
  orc->add_option("--max-f", oracle_args.max_dim, "Largest dimension tried by oracle fdim")
      ->capture_default_str();
  add_format(orc, oracle_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (dims->parsed()) return cmd_dims(dims_args, out);
    if (fdim->parsed()) return cmd_fdim(fdim_args, out);
    if (gen->parsed()) return cmd_gen(gen_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
    if (aux->parsed()) return cmd_aux(aux_args, out);
    return cmd_oracle(oracle_args, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
    return exit_code::usage;
  } catch (const NotPartialCubeError& e) {
    err << "not a partial cube: " << e.what();
    if (e.has_witness()) err << " (witness " << e.u() << ", " << e.v() << ")";
    err << "\n";
    return exit_code::not_partial_cube;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return exit_code::resource;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return exit_code::internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

}  // namespace fibdim::cli
