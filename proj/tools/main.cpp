// sgt: command-line driver for the spectral graph toolkit.
//
// Subcommands: spectrum, heatmap, signs, verify {thm1,thm2,corollary}, and
// demo {cycle,bipartite,er}.  All randomness is seeded, outputs are
// byte-identical across runs with identical flags, and files are written via
// temp + rename.  Exit codes: 0 success or skipped, 1 a check failed,
// 2 usage/input error, 3 numerical failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectral/bounds.hpp"
#include "spectral/cycle_oracle.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/products.hpp"
#include "spectral/spectra.hpp"

namespace {

using namespace spectral;

struct InputOptions {
  std::string named;
  std::string file;
  std::string format;  // "g6" | "edges" | "" (infer from extension)
  int cycle = 0;
  std::vector<int> complete_bipartite;
  int flower_snark = 0;
  std::vector<int> mostly_bipartite;
  std::vector<double> er;
  std::uint64_t seed = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  auto* group = cmd->add_option_group("input", "graph to analyze");
  group->add_option("--named", input.named, "bundled named graph (see data/README.md)");
  group->add_option("--file", input.file, "graph file (graph6 or edge list)");
  group->add_option("--cycle", input.cycle, "cycle graph C_n");
  group->add_option("--complete-bipartite", input.complete_bipartite, "complete bipartite K_{a,b}")
      ->expected(2);
  group->add_option("--flower-snark", input.flower_snark, "flower snark J_m (odd m >= 5)");
  group
      ->add_option("--mostly-bipartite", input.mostly_bipartite,
                   "half_n d k: d-regular, k within-part edges (seeded)")
      ->expected(3);
  group->add_option("--er", input.er, "n p: Erdos-Renyi G(n, p) (seeded)")->expected(2);
  group->require_option(1);
  cmd->add_option("--format", input.format, "file format: g6 or edges (default: by extension)")
      ->check(CLI::IsMember({"g6", "edges"}));
  cmd->add_option("--seed", input.seed, "random seed for generated graphs");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot open file " + path);
  std::ostringstream contents;
  contents << file.rdbuf();
  return contents.str();
}

std::string short_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

// Returns the graph plus a short stem used to label reports and output files.
std::pair<Graph, std::string> build_input(const InputOptions& input) {
  if (!input.named.empty()) return {load_named(input.named), input.named};
  if (!input.file.empty()) {
    const std::string text = read_file(input.file);
    std::string format = input.format;
    if (format.empty()) {
      format = std::filesystem::path(input.file).extension() == ".g6" ? "g6" : "edges";
    }
    std::string contents = text;
    // tolerate one trailing newline on single-line graph6 files
    if (format == "g6") {
      while (!contents.empty() && (contents.back() == '\n' || contents.back() == '\r')) {
        contents.pop_back();
      }
    }
    Graph g = format == "g6" ? parse_graph6(contents) : parse_edge_list(contents);
    return {std::move(g), std::filesystem::path(input.file).stem().string()};
  }
  if (input.cycle != 0) return {make_cycle(input.cycle), "cycle-" + std::to_string(input.cycle)};
  if (!input.complete_bipartite.empty()) {
    const int a = input.complete_bipartite[0];
    const int b = input.complete_bipartite[1];
    return {make_complete_bipartite(a, b),
            "complete-bipartite-" + std::to_string(a) + "-" + std::to_string(b)};
  }
  if (input.flower_snark != 0) {
    return {make_flower_snark(input.flower_snark), "flower-snark-" + std::to_string(input.flower_snark)};
  }
  if (!input.mostly_bipartite.empty()) {
    const int half_n = input.mostly_bipartite[0];
    const int d = input.mostly_bipartite[1];
    const int k = input.mostly_bipartite[2];
    return {mostly_bipartite_random(half_n, d, k, input.seed),
            "mostly-bipartite-" + std::to_string(half_n) + "-" + std::to_string(d) + "-" +
                std::to_string(k) + "-s" + std::to_string(input.seed)};
  }
  if (!input.er.empty()) {
    const int n = static_cast<int>(input.er[0]);
    const double p = input.er[1];
    return {erdos_renyi(n, p, input.seed),
            "er-" + std::to_string(n) + "-p" + short_number(p) + "-s" + std::to_string(input.seed)};
  }
  throw InvalidParameter("no input source selected");
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidParameter("cannot write " + tmp.string());
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  }
  std::filesystem::rename(tmp, path);
}

std::pair<int, int> parse_index_pair(const std::string& text, Eigen::Index n) {
  int i = 0;
  int j = 0;
  char comma = 0;
  std::istringstream stream(text);
  if (!(stream >> i >> comma >> j) || comma != ',' || !stream.eof()) {
    throw InvalidParameter("expected a pair like 2,3, got '" + text + "'");
  }
  if (i < 1 || j < 1 || i > n || j > n) {
    throw InvalidParameter("eigenvector indices are 1-based and at most " + std::to_string(n));
  }
  return {i, j};
}

std::vector<int> parse_step_range(const std::string& text) {
  std::vector<int> steps;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 0 || hi < lo) throw InvalidParameter("bad k range '" + text + "'");
    for (int k = lo; k <= hi; ++k) steps.push_back(k);
    return steps;
  }
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) steps.push_back(std::stoi(token));
  if (steps.empty()) throw InvalidParameter("bad k range '" + text + "'");
  return steps;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(std::stoi(token));
  if (values.empty()) throw InvalidParameter("expected a comma-separated list, got '" + text + "'");
  return values;
}

int run_spectrum(const InputOptions& input, const std::string& op, bool with_vectors) {
  auto [g, stem] = build_input(input);
  const bool laplacian = op == "laplacian";
  const auto dec = laplacian ? decompose_laplacian(g) : decompose_signless(g);

  std::string out = "{\n";
  out += "  \"graph\": " + json_quote(stem) + ",\n";
  out += "  \"vertices\": " + std::to_string(g.vertex_count()) + ",\n";
  out += "  \"edges\": " + std::to_string(g.edge_count()) + ",\n";
  out += "  \"operator\": " + json_quote(op) + ",\n";
  out += "  \"eigenvalues\": [";
  for (Eigen::Index k = 0; k < dec.size(); ++k) {
    if (k > 0) out += ", ";
    out += json_number(dec.eigenvalues[k]);
  }
  out += "],\n";
  double max_residual = 0.0;
  std::string residuals = "[";
  for (Eigen::Index k = 0; k < dec.size(); ++k) {
    const VertexFunction phi = dec.eigenvector(k);
    const VertexFunction image = laplacian ? apply_laplacian(g, phi) : apply_signless(g, phi);
    const double residual = (image - dec.eigenvalues[k] * phi).norm();
    max_residual = std::max(max_residual, residual);
    if (k > 0) residuals += ", ";
    residuals += json_number(residual);
  }
  out += "  \"residuals\": " + residuals + "],\n";
  out += "  \"max_residual\": " + json_number(max_residual);
  if (with_vectors) {
    out += ",\n  \"eigenvectors\": [";
    for (Eigen::Index k = 0; k < dec.size(); ++k) {
      if (k > 0) out += ", ";
      out += "[";
      for (Eigen::Index v = 0; v < dec.size(); ++v) {
        if (v > 0) out += ", ";
        out += json_number(dec.eigenvectors(v, k));
      }
      out += "]";
    }
    out += "]";
  }
  out += "\n}";
  std::cout << out << "\n";
  return 0;
}

int run_heatmap(const InputOptions& input, const std::string& out_dir) {
  auto [g, stem] = build_input(input);
  const auto dec = decompose_laplacian(g);
  const auto heatmap = product_heatmap(g, dec);

  std::filesystem::create_directories(out_dir);
  const auto csv_path = std::filesystem::path(out_dir) / (stem + "-heatmap.csv");
  const auto ppm_path = std::filesystem::path(out_dir) / (stem + "-heatmap.ppm");
  write_file_atomic(csv_path, emit_heatmap_csv(heatmap));
  write_file_atomic(ppm_path, emit_heatmap_ppm(heatmap));

  double max_entry = 0.0;
  long long masked = 0;
  for (Eigen::Index i = 0; i < heatmap.size(); ++i) {
    for (Eigen::Index j = 0; j < heatmap.size(); ++j) {
      if (heatmap.undefined(i, j)) {
        ++masked;
      } else {
        max_entry = std::max(max_entry, heatmap.values(i, j));
      }
    }
  }
  std::cout << "{\n  \"files\": [" << json_quote(csv_path.string()) << ", "
            << json_quote(ppm_path.string()) << "],\n  \"max_entry\": " << json_number(max_entry)
            << ",\n  \"masked_entries\": " << masked << "\n}\n";
  return 0;
}

int run_signs(const InputOptions& input, const std::string& pair_text, double sign_tol,
              const std::string& out_dir) {
  auto [g, stem] = build_input(input);
  const auto dec = decompose_laplacian(g);
  const auto [i, j] = parse_index_pair(pair_text, dec.size());
  const VertexFunction phi = dec.eigenvector(i - 1);
  const VertexFunction psi = dec.eigenvector(j - 1);

  std::filesystem::create_directories(out_dir);
  const auto path_i = std::filesystem::path(out_dir) / (stem + "-phi" + std::to_string(i) + ".dot");
  const auto path_j = std::filesystem::path(out_dir) / (stem + "-phi" + std::to_string(j) + ".dot");
  const auto path_p = std::filesystem::path(out_dir) /
                      (stem + "-phi" + std::to_string(i) + "x" + std::to_string(j) + ".dot");
  write_file_atomic(path_i, emit_dot(g, sign_pattern(phi, sign_tol)));
  write_file_atomic(path_j, emit_dot(g, sign_pattern(psi, sign_tol)));
  write_file_atomic(path_p, emit_dot(g, sign_pattern(hadamard(phi, psi), sign_tol)));
  std::cout << "{\n  \"files\": [" << json_quote(path_i.string()) << ", "
            << json_quote(path_j.string()) << ", " << json_quote(path_p.string()) << "]\n}\n";
  return 0;
}

int emit_and_grade(const std::vector<BoundReport>& reports) {
  std::cout << emit_report_json(reports) << "\n";
  for (const auto& report : reports) {
    if (!report.satisfied) return 1;
  }
  return 0;
}

int run_verify(const std::string& selector, const InputOptions& input,
               const std::vector<std::string>& pair_specs, const std::string& k_range,
               std::optional<double> tol) {
  auto [g, stem] = build_input(input);
  BoundOptions options;
  if (tol) {
    options.check_rel_tol = *tol;
    options.equality_rel_tol = *tol;
  }

  std::vector<BoundReport> reports;
  if (selector == "thm1") {
    const auto dec = decompose_laplacian(g);
    std::vector<std::pair<int, int>> pairs;
    if (pair_specs.empty() || (pair_specs.size() == 1 && pair_specs[0] == "all")) {
      for (int i = 1; i <= dec.size(); ++i)
        for (int j = i; j <= dec.size(); ++j) pairs.emplace_back(i, j);
    } else {
      for (const auto& spec : pair_specs) pairs.push_back(parse_index_pair(spec, dec.size()));
    }
    for (const auto& [i, j] : pairs) {
      auto result = theorem1_check(g, dec.eigenvector(i - 1), dec.eigenvector(j - 1), options);
      const std::string label =
          stem + " pair(" + std::to_string(i) + "," + std::to_string(j) + "); ";
      result.proof_form.inputs = label + result.proof_form.inputs;
      reports.push_back(std::move(result.proof_form));
      if (result.normalized) {
        result.normalized->inputs = label + result.normalized->inputs;
        reports.push_back(std::move(*result.normalized));
      }
    }
  } else if (selector == "thm2") {
    const auto degree = regular_degree(g);
    if (!degree) throw InvalidParameter("thm2 requires a regular graph");
    const auto dec = decompose_signless(g);
    const auto steps = parse_step_range(k_range);
    for (Eigen::Index e = 0; e < dec.size(); ++e) {
      // the bound needs eps strictly below d; skip eigenvalues sitting at d
      if (!(dec.eigenvalues[e] < *degree - 1e-9)) continue;
      for (int k : steps) {
        auto report = theorem2_check(g, dec.eigenvector(e), k, options);
        report.inputs = stem + " eigenpair " + std::to_string(e + 1) + " (eps=" +
                        json_number(dec.eigenvalues[e]) + "); " + report.inputs;
        reports.push_back(std::move(report));
      }
    }
  } else if (selector == "corollary") {
    if (!regular_degree(g)) throw InvalidParameter("corollary requires a regular graph");
    const auto dec = decompose_signless(g);
    for (Eigen::Index e = 0; e < dec.size(); ++e) {
      auto report = corollary_check(g, dec.eigenvector(e), options);
      report.inputs = stem + " eigenpair " + std::to_string(e + 1) + " (eps=" +
                      json_number(dec.eigenvalues[e]) + "); " + report.inputs;
      reports.push_back(std::move(report));
    }
  } else {
    throw InvalidParameter("unknown verify selector '" + selector + "'");
  }
  return emit_and_grade(reports);
}

int run_demo_cycle(const std::string& n_list) {
  std::string out = "[\n";
  const auto sizes = parse_int_list(n_list);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto record = sharpness_experiment(sizes[i]);
    out += "  {\"n\": " + std::to_string(record.n) + ", \"epsilon\": " + json_number(record.epsilon) +
           ", \"actual\": " + json_number(record.actual) + ", \"bound\": " + json_number(record.bound) +
           ", \"ratio\": " + json_number(record.ratio) + "}";
    out += i + 1 < sizes.size() ? ",\n" : "\n";
  }
  out += "]";
  std::cout << out << "\n";
  return 0;
}

int run_demo_bipartite(int half_n, int d, int k, std::uint64_t seed, std::optional<double> tol) {
  const Graph g = mostly_bipartite_random(half_n, d, k, seed);
  BoundOptions options;
  if (tol) options.check_rel_tol = *tol;
  std::vector<int> colors(static_cast<std::size_t>(2 * half_n), 0);
  for (int v = half_n; v < 2 * half_n; ++v) colors[static_cast<std::size_t>(v)] = 1;

  auto report = rayleigh_ritz_cut(g, colors, options);
  report.inputs = "mostly-bipartite(half_n=" + std::to_string(half_n) + ", d=" + std::to_string(d) +
                  ", k=" + std::to_string(k) + ", seed=" + std::to_string(seed) + "); " + report.inputs;
  report.diagnostics.emplace_back("two_k_over_half_n", 2.0 * k / half_n);
  return emit_and_grade({report});
}

int run_demo_er(int n, double p, std::uint64_t seed, const std::string& out_dir) {
  const Graph g = erdos_renyi(n, p, seed);
  const auto dec = decompose_laplacian(g);
  const auto heatmap = product_heatmap(g, dec);

  std::filesystem::create_directories(out_dir);
  const std::string stem = "er-" + std::to_string(n) + "-p" + short_number(p) + "-s" + std::to_string(seed);
  const auto csv_path = std::filesystem::path(out_dir) / (stem + "-heatmap.csv");
  const auto ppm_path = std::filesystem::path(out_dir) / (stem + "-heatmap.ppm");
  write_file_atomic(csv_path, emit_heatmap_csv(heatmap));
  write_file_atomic(ppm_path, emit_heatmap_ppm(heatmap));

  // Negative control: products of the most oscillatory eigenvectors should
  // stay oscillatory here, so report the smallest quotient among the top
  // pairs instead of asserting anything.
  const Eigen::Index top = std::min<Eigen::Index>(5, dec.size());
  double min_quotient = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < top; ++i) {
    for (Eigen::Index j = i + 1; j < top; ++j) {
      if (!heatmap.undefined(i, j)) min_quotient = std::min(min_quotient, heatmap.values(i, j));
    }
  }
  std::string out = "{\n";
  out += "  \"graph\": " + json_quote(stem) + ",\n";
  out += "  \"vertices\": " + std::to_string(g.vertex_count()) + ",\n";
  out += "  \"edges\": " + std::to_string(g.edge_count()) + ",\n";
  out += "  \"files\": [" + json_quote(csv_path.string()) + ", " + json_quote(ppm_path.string()) + "],\n";
  out += "  \"top_eigenvalues\": [";
  for (Eigen::Index k = 0; k < top; ++k) {
    if (k > 0) out += ", ";
    out += json_number(dec.eigenvalues[k]);
  }
  out += "],\n";
  out += "  \"min_top_pair_quotient\": " + json_number(min_quotient) + "\n}";
  std::cout << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph toolkit: Laplacian spectra, eigenvector products, and walk bounds"};
  app.require_subcommand(1);

  InputOptions spectrum_input;
  std::string spectrum_operator = "laplacian";
  bool spectrum_vectors = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "full eigendecomposition as JSON");
  add_input_options(spectrum_cmd, spectrum_input);
  spectrum_cmd->add_option("--operator", spectrum_operator, "laplacian or signless")
      ->check(CLI::IsMember({"laplacian", "signless"}));
  spectrum_cmd->add_flag("--eigenvectors", spectrum_vectors, "include eigenvectors in the dump");

  InputOptions heatmap_input;
  std::string heatmap_out = ".";
  auto* heatmap_cmd = app.add_subcommand("heatmap", "all-pairs product Rayleigh quotients (CSV + PPM)");
  add_input_options(heatmap_cmd, heatmap_input);
  heatmap_cmd->add_option("--out", heatmap_out, "output directory");

  InputOptions signs_input;
  std::string signs_pair;
  double signs_tol = 1e-9;
  std::string signs_out = ".";
  auto* signs_cmd = app.add_subcommand("signs", "sign patterns of two eigenvectors and their product (DOT)");
  add_input_options(signs_cmd, signs_input);
  signs_cmd->add_option("--pair", signs_pair, "1-based eigenvector indices, e.g. 2,3")->required();
  signs_cmd->add_option("--sign-tol", signs_tol, "relative zero band for signs");
  signs_cmd->add_option("--out", signs_out, "output directory");

  auto* verify_cmd = app.add_subcommand("verify", "check a bound on a graph; nonzero exit on violation");
  verify_cmd->require_subcommand(1);
  struct VerifyArgs {
    InputOptions input;
    std::vector<std::string> pairs;
    std::string k_range = "0..4";
    double tol = -1.0;
  };
  VerifyArgs thm1_args;
  auto* thm1_cmd = verify_cmd->add_subcommand("thm1", "product-smoothness bound over eigenvector pairs");
  add_input_options(thm1_cmd, thm1_args.input);
  thm1_cmd->add_option("--pairs", thm1_args.pairs, "'all' or 1-based pairs like 2,3");
  thm1_cmd->add_option("--tol", thm1_args.tol, "relative slack tolerance override");

  VerifyArgs thm2_args;
  auto* thm2_cmd = verify_cmd->add_subcommand("thm2", "sup-norm walk bound over signless eigenpairs");
  add_input_options(thm2_cmd, thm2_args.input);
  thm2_cmd->add_option("--k", thm2_args.k_range, "walk exponents, e.g. 0..4 or 0,2,4");
  thm2_cmd->add_option("--tol", thm2_args.tol, "relative slack tolerance override");

  VerifyArgs corollary_args;
  auto* corollary_cmd = verify_cmd->add_subcommand("corollary", "one- and two-step walk identities");
  add_input_options(corollary_cmd, corollary_args.input);
  corollary_cmd->add_option("--tol", corollary_args.tol, "relative equality tolerance override");

  auto* demo_cmd = app.add_subcommand("demo", "reproductions of the bundled experiments");
  demo_cmd->require_subcommand(1);
  std::string demo_cycle_sizes = "51,101,201";
  auto* demo_cycle_cmd = demo_cmd->add_subcommand("cycle", "sharpness of the product bound on odd cycles");
  demo_cycle_cmd->add_option("--n", demo_cycle_sizes, "comma-separated odd cycle lengths");

  int demo_bip_n = 50;
  int demo_bip_d = 4;
  int demo_bip_k = 4;
  std::uint64_t demo_bip_seed = 0;
  double demo_bip_tol = -1.0;
  auto* demo_bip_cmd = demo_cmd->add_subcommand("bipartite", "cut-vector certificate on a mostly bipartite graph");
  demo_bip_cmd->add_option("--n", demo_bip_n, "vertices per side");
  demo_bip_cmd->add_option("--d", demo_bip_d, "degree");
  demo_bip_cmd->add_option("--k", demo_bip_k, "within-part edges (even)");
  demo_bip_cmd->add_option("--seed", demo_bip_seed, "random seed");
  demo_bip_cmd->add_option("--tol", demo_bip_tol, "relative slack tolerance override");

  int demo_er_n = 40;
  double demo_er_p = 0.3;
  std::uint64_t demo_er_seed = 0;
  std::string demo_er_out = ".";
  auto* demo_er_cmd = demo_cmd->add_subcommand("er", "negative control on an Erdos-Renyi graph");
  demo_er_cmd->add_option("--n", demo_er_n, "vertex count");
  demo_er_cmd->add_option("--p", demo_er_p, "edge probability");
  demo_er_cmd->add_option("--seed", demo_er_seed, "random seed");
  demo_er_cmd->add_option("--out", demo_er_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum_input, spectrum_operator, spectrum_vectors);
    if (heatmap_cmd->parsed()) return run_heatmap(heatmap_input, heatmap_out);
    if (signs_cmd->parsed()) return run_signs(signs_input, signs_pair, signs_tol, signs_out);
    if (thm1_cmd->parsed()) {
      return run_verify("thm1", thm1_args.input, thm1_args.pairs, thm1_args.k_range,
                        thm1_args.tol >= 0 ? std::optional(thm1_args.tol) : std::nullopt);
    }
    if (thm2_cmd->parsed()) {
      return run_verify("thm2", thm2_args.input, thm2_args.pairs, thm2_args.k_range,
                        thm2_args.tol >= 0 ? std::optional(thm2_args.tol) : std::nullopt);
    }
    if (corollary_cmd->parsed()) {
      return run_verify("corollary", corollary_args.input, corollary_args.pairs,
                        corollary_args.k_range,
                        corollary_args.tol >= 0 ? std::optional(corollary_args.tol) : std::nullopt);
    }
    if (demo_cycle_cmd->parsed()) return run_demo_cycle(demo_cycle_sizes);
    if (demo_bip_cmd->parsed()) {
      return run_demo_bipartite(demo_bip_n, demo_bip_d, demo_bip_k, demo_bip_seed,
                                demo_bip_tol >= 0 ? std::optional(demo_bip_tol) : std::nullopt);
    }
    if (demo_er_cmd->parsed()) return run_demo_er(demo_er_n, demo_er_p, demo_er_seed, demo_er_out);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const NotProvisioned& e) {
    std::cerr << "warning: skipped: " << e.what() << "\n";
    std::cout << "{\n  \"skipped\": true,\n  \"reason\": " << json_quote(e.what()) << "\n}\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // includes InvalidParameter and stoi/stod
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateInput& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const ConstructionFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
