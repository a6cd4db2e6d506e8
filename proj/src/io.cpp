#include "spectral/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace spectral {
namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6LongHeader = 126;
constexpr long long kGraph6MaxLong = 258047;  // 2^18 - 1

int graph6_byte(std::string_view bytes, std::size_t offset) {
  const auto c = static_cast<unsigned char>(bytes[offset]);
  if (c < kGraph6Offset || c > kGraph6LongHeader) {
    throw ParseError("graph6 byte outside printable range [63, 126]", offset);
  }
  return c - kGraph6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view bytes) {
  if (bytes.empty()) throw ParseError("empty graph6 input", 0);

  std::size_t header = 1;
  long long n = 0;
  if (static_cast<unsigned char>(bytes[0]) == kGraph6LongHeader) {
    if (bytes.size() < 4) throw ParseError("truncated graph6 size header", bytes.size());
    if (static_cast<unsigned char>(bytes[1]) == kGraph6LongHeader) {
      throw ParseError("graph6 inputs beyond 258047 vertices are not supported", 1);
    }
    n = (static_cast<long long>(graph6_byte(bytes, 1)) << 12) |
        (static_cast<long long>(graph6_byte(bytes, 2)) << 6) |
        static_cast<long long>(graph6_byte(bytes, 3));
    if (n <= 62) throw ParseError("non-canonical long size header for n <= 62", 0);
    header = 4;
  } else {
    n = graph6_byte(bytes, 0);
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (bytes.size() < header + data_bytes) {
    throw ParseError("truncated graph6 adjacency data", bytes.size());
  }
  if (bytes.size() > header + data_bytes) {
    throw ParseError("trailing bytes after graph6 adjacency data", header + data_bytes);
  }

  std::vector<Graph::Edge> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t offset = header + static_cast<std::size_t>(bit / 6);
      const int value = graph6_byte(bytes, offset);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  for (; bit < static_cast<long long>(data_bytes) * 6; ++bit) {
    const std::size_t offset = header + static_cast<std::size_t>(bit / 6);
    if ((graph6_byte(bytes, offset) >> (5 - bit % 6)) & 1) {
      throw ParseError("nonzero padding bits", offset);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= kGraph6MaxLong) {
    out.push_back(static_cast<char>(kGraph6LongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kGraph6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kGraph6Offset));
    out.push_back(static_cast<char>((n & 0x3f) + kGraph6Offset));
  } else {
    throw InvalidParameter("graph6 output beyond 258047 vertices is not supported");
  }

  const long long bits = n * (n - 1) / 2;
  std::vector<int> groups(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const auto& [u, v] : g.edges()) {
    const long long bit = static_cast<long long>(v) * (v - 1) / 2 + u;
    groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
  }
  for (int group : groups) out.push_back(static_cast<char>(group + kGraph6Offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;

  while (std::getline(stream, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      std::string extra;
      if (!(fields >> tag >> n) || tag != "n" || n < 0 || (fields >> extra)) {
        throw ParseError("expected header line 'n <vertex count>'", line_no);
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw ParseError("expected an edge line 'u v'", line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    Graph::Edge edge{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(edge).second) throw ParseError("duplicate edge", line_no);
    edges.push_back(edge);
  }
  if (n < 0) throw ParseError("missing header line 'n <vertex count>'", line_no);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

const std::vector<NamedGraphInfo>& named_graph_registry() {
  static const std::vector<NamedGraphInfo> registry = {
      {"thomassen-94", "thomassen-94.edges", 94, 141, 3},
      {"thomassen-105", "thomassen-105.edges", 105, std::nullopt, std::nullopt},
      {"tutte", "tutte.edges", 46, 69, 3},
      {"wiener-araya", "wiener-araya.edges", 42, 67, std::nullopt},
      {"deltoidal-icositetrahedron", "deltoidal-icositetrahedron.edges", 26, 48, std::nullopt},
      {"small-rhombicuboctahedron", "small-rhombicuboctahedron.edges", 24, 48, 4},
  };
  return registry;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("SGT_DATA_DIR")) return env;
  if (std::filesystem::is_directory("data")) return "data";
#ifdef SGT_DEFAULT_DATA_DIR
  return SGT_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

Graph load_named(std::string_view name) { return load_named(name, default_data_dir()); }

Graph load_named(std::string_view name, const std::filesystem::path& data_dir) {
  const auto& registry = named_graph_registry();
  const auto info = std::find_if(registry.begin(), registry.end(),
                                 [&](const NamedGraphInfo& g) { return g.name == name; });
  if (info == registry.end()) {
    throw NotProvisioned("unknown named graph '" + std::string(name) + "'");
  }
  const auto path = data_dir / info->filename;
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw NotProvisioned("data file for '" + info->name + "' not provisioned (expected " +
                         path.string() + "; see data/README.md, or set SGT_DATA_DIR)");
  }
  std::ostringstream contents;
  contents << file.rdbuf();
  Graph g = parse_edge_list(contents.str());

  if (g.vertex_count() != info->vertices) {
    throw ParseError("manifest mismatch for '" + info->name + "': expected " +
                         std::to_string(info->vertices) + " vertices, file has " +
                         std::to_string(g.vertex_count()),
                     0);
  }
  if (info->edges && g.edge_count() != *info->edges) {
    throw ParseError("manifest mismatch for '" + info->name + "': expected " +
                         std::to_string(*info->edges) + " edges, file has " +
                         std::to_string(g.edge_count()),
                     0);
  }
  if (info->degree && regular_degree(g) != info->degree) {
    throw ParseError("manifest mismatch for '" + info->name + "': file is not " +
                         std::to_string(*info->degree) + "-regular",
                     0);
  }
  return g;
}

std::string emit_dot(const Graph& g, const SignPattern& pattern) {
  if (pattern.signs.size() != g.vertex_count()) {
    throw InvalidParameter("sign pattern length does not match graph");
  }
  std::string out = "graph G {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const char* color = pattern.signs[v] > 0 ? "white" : pattern.signs[v] < 0 ? "black" : "gray";
    out += "  " + std::to_string(v) + " [fillcolor=" + color + "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string emit_heatmap_ppm(const ProductHeatmap& heatmap) {
  const Eigen::Index n = heatmap.size();
  double max_value = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!heatmap.undefined(i, j)) max_value = std::max(max_value, heatmap.values(i, j));
    }
  }
  std::string out = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(3 * n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (heatmap.undefined(i, j)) {
        out.push_back(static_cast<char>(255));
        out.push_back(static_cast<char>(0));
        out.push_back(static_cast<char>(0));
      } else {
        const double value = std::max(0.0, heatmap.values(i, j));
        const double scaled = max_value > 0.0 ? value / max_value : 0.0;
        const int gray = static_cast<int>(std::lround(255.0 * (1.0 - scaled)));
        out.append(3, static_cast<char>(gray));
      }
    }
  }
  return out;
}

std::string emit_heatmap_csv(const ProductHeatmap& heatmap) {
  const Eigen::Index n = heatmap.size();
  std::string out;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j > 0) out.push_back(',');
      if (!heatmap.undefined(i, j)) out += json_number(heatmap.values(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

std::string json_number(double value) {
  if (!std::isfinite(value)) return "null";  // JSON has no inf/nan
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string json_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string emit_report_json(std::span<const BoundReport> reports) {
  if (reports.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t r = 0; r < reports.size(); ++r) {
    const BoundReport& report = reports[r];
    out += "  {\n";
    out += "    \"theorem\": " + json_quote(bound_kind_name(report.theorem)) + ",\n";
    out += "    \"inputs\": " + json_quote(report.inputs) + ",\n";
    out += std::string("    \"equality\": ") + (report.equality ? "true" : "false") + ",\n";
    out += "    \"epsilon\": [";
    for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
      if (i > 0) out += ", ";
      out += json_number(report.epsilons[i]);
    }
    out += "],\n";
    out += "    \"lhs\": " + json_number(report.lhs) + ",\n";
    out += "    \"rhs\": " + json_number(report.rhs) + ",\n";
    out += "    \"slack\": " + json_number(report.slack) + ",\n";
    out += "    \"tolerance\": " + json_number(report.tolerance) + ",\n";
    out += std::string("    \"satisfied\": ") + (report.satisfied ? "true" : "false") + ",\n";
    out += "    \"diagnostics\": {";
    for (std::size_t i = 0; i < report.diagnostics.size(); ++i) {
      if (i > 0) out += ", ";
      out += json_quote(report.diagnostics[i].first) + ": " + json_number(report.diagnostics[i].second);
    }
    out += "}\n";
    out += r + 1 < reports.size() ? "  },\n" : "  }\n";
  }
  out += "]";
  return out;
}

}  // namespace spectral
