#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/bounds.hpp"
#include "spectral/graph.hpp"
#include "spectral/products.hpp"

namespace spectral {

// ---- graph6 ----------------------------------------------------------------
// Printable encoding of the upper adjacency triangle: after the size header
// (one byte n+63 for n <= 62, or 126 followed by three 6-bit chunks), bits run
// column by column, (0,1),(0,2),(1,2),(0,3),..., packed 6 per byte, most
// significant first, zero-padded, every byte offset by 63.

Graph parse_graph6(std::string_view bytes);
std::string write_graph6(const Graph& g);

// ---- edge list ---------------------------------------------------------------
// Header line "n <vertex count>" (required, so isolated vertices survive),
// then one edge per line "u v", 0-indexed; '#' starts a comment line.

Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// ---- bundled named graphs ----------------------------------------------------

struct NamedGraphInfo {
  std::string name;
  std::string filename;
  int vertices;
  std::optional<int> edges;
  std::optional<int> degree;  // asserted regular with this degree when set
};

const std::vector<NamedGraphInfo>& named_graph_registry();

// Data directory resolution: $SGT_DATA_DIR, else ./data when present, else
// the compiled-in default.
std::filesystem::path default_data_dir();

// Throws NotProvisioned for unknown names or missing data files (callers are
// expected to degrade to skip-with-warning); ParseError if a provisioned file
// is malformed or fails its registry manifest.
Graph load_named(std::string_view name);
Graph load_named(std::string_view name, const std::filesystem::path& data_dir);

// ---- emitters -----------------------------------------------------------------

// Undirected DOT with vertices filled white (+1), black (-1) or gray (0).
// No layout coordinates are emitted.
std::string emit_dot(const Graph& g, const SignPattern& pattern);

// Binary P6, n x n, linear grayscale with 0 -> white and the largest defined
// entry -> black; masked entries are red.
std::string emit_heatmap_ppm(const ProductHeatmap& heatmap);

// n x n comma-separated matrix; masked entries are empty fields.
std::string emit_heatmap_csv(const ProductHeatmap& heatmap);

// JSON array of bound reports with a fixed key order.
std::string emit_report_json(std::span<const BoundReport> reports);

// Shared JSON helpers (doubles carry 17 significant digits; non-finite
// values serialize as null).
std::string json_number(double value);
std::string json_quote(std::string_view text);

}  // namespace spectral
