#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prpd/prpd.hpp"

namespace prpd::cli {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string format = "auto";
  PageRankConfig pagerank;
  bool with_essential = false;
  std::size_t jobs = 0;
  std::string out;
};

void add_format_flag(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--format", opts.format, "Input format (auto picks off for *.off, edgelist otherwise)")
      ->check(CLI::IsMember({"auto", "edgelist", "off"}));
}

void add_pagerank_flags(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--damping", opts.pagerank.damping, "PageRank damping factor")->capture_default_str();
  cmd.add_option("--tol", opts.pagerank.tolerance, "L1 convergence tolerance")->capture_default_str();
  cmd.add_option("--max-iter", opts.pagerank.max_iterations, "Power-iteration cap")->capture_default_str();
}

GraphFormat resolve_format(const std::string& flag, const fs::path& path) {
  return flag == "auto" ? infer_graph_format(path) : parse_graph_format(flag);
}

// Writes to --out when given, stdout otherwise.
template <typename Writer>
void emit(const std::string& out_path, std::ostream& out, Writer&& write) {
  if (out_path.empty() || out_path == "-") {
    write(out);
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError(out_path + ": cannot open for writing");
  write(file);
  if (!file) throw InputError(out_path + ": write failed");
}

PersistenceDiagram graph_descriptor(const fs::path& path, const CommonOptions& opts, std::ostream& err) {
  const Graph g = load_graph(path, resolve_format(opts.format, path));
  if (g.num_vertices() == 0) throw DomainError(path.string() + ": graph is empty");
  const auto pr = compute_pagerank(g, opts.pagerank);
  if (!pr.converged) {
    err << "warning: " << path.string() << ": PageRank did not converge in " << pr.iterations
        << " iterations (residual " << format_real(pr.residual) << ")\n";
  }
  return compute_pd0(g, pr.scores);
}

struct Corpus {
  CorpusManifest manifest;
  std::vector<std::string> names;
  std::vector<std::string> labels;
  std::vector<PersistenceDiagram> diagrams;
};

Corpus load_corpus(const std::string& manifest_path, const CommonOptions& opts, std::ostream& err) {
  Corpus corpus;
  corpus.manifest = load_manifest(manifest_path);
  const auto& entries = corpus.manifest.entries;
  corpus.diagrams.resize(entries.size());
  std::vector<std::string> warnings(entries.size());
  parallel_for(entries.size(), opts.jobs, [&](std::size_t i) {
    std::ostringstream warn;
    corpus.diagrams[i] = graph_descriptor(corpus.manifest.resolve(entries[i]), opts, warn);
    warnings[i] = warn.str();
  });
  for (const auto& w : warnings) err << w;
  for (const auto& e : entries) {
    corpus.names.push_back(e.path);
    corpus.labels.push_back(e.label);
  }
  return corpus;
}

int cmd_pd(const std::string& input, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const auto diagram = graph_descriptor(input, opts, err);
  emit(opts.out, out, [&](std::ostream& s) { write_diagram_csv(s, diagram); });
  return kOk;
}

int cmd_dist(const std::string& a, const std::string& b, const CommonOptions& opts, std::ostream& out) {
  const double d = bottleneck(load_diagram_csv(a), load_diagram_csv(b), opts.with_essential);
  out << format_real(d) << '\n';
  return kOk;
}

int cmd_distmat(const std::string& manifest, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  auto corpus = load_corpus(manifest, opts, err);
  const auto matrix = compute_distance_matrix(corpus.diagrams, corpus.names, opts.with_essential, opts.jobs);
  emit(opts.out, out, [&](std::ostream& s) { write_distance_matrix_csv(s, matrix); });
  return kOk;
}

int cmd_eval(const std::string& manifest, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  auto corpus = load_corpus(manifest, opts, err);
  const auto matrix = compute_distance_matrix(corpus.diagrams, corpus.names, opts.with_essential, opts.jobs);
  const auto report = evaluate(matrix, corpus.labels);
  write_eval_text(out, report);
  if (!opts.out.empty()) {
    emit(opts.out, out, [&](std::ostream& s) { write_eval_json(s, report); });
  }
  return kOk;
}

struct BenchOptions {
  std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
  std::uint64_t seed = 1;
  std::size_t repeats = 1;
};

int cmd_bench(const BenchOptions& bench, const CommonOptions& opts, std::ostream& out) {
  emit(opts.out, out, [&](std::ostream& s) {
    s << "vertices,edges,stage,seconds\n";
    for (std::size_t size : bench.sizes) {
      const Graph g = synthetic::random_geometric_graph_with_edges(size, bench.seed);
      StageTimings best;
      for (std::size_t r = 0; r < bench.repeats; ++r) {
        const auto t = time_descriptor(g, opts.pagerank);
        if (r == 0 || t.total() < best.total()) best = t;
      }
      const auto row = [&](const char* stage, double seconds) {
        s << g.num_vertices() << ',' << g.num_edges() << ',' << stage << ',' << format_real(seconds) << '\n';
      };
      row("pagerank", best.pagerank);
      row("sort", best.sort);
      row("union_find", best.union_find);
      row("total", best.total());
    }
  });
  return kOk;
}

int cmd_synth(const std::string& dir, std::size_t per_class, std::uint64_t seed, std::ostream& out) {
  fs::create_directories(dir);
  const auto corpus = synthetic::two_class_corpus(per_class, seed);
  std::ofstream manifest(fs::path(dir) / "manifest.csv");
  if (!manifest) throw InputError(dir + ": cannot write manifest.csv");
  manifest << "path,label\n";
  for (const auto& item : corpus) {
    std::ofstream mesh(fs::path(dir) / item.name);
    if (!mesh) throw InputError(dir + "/" + item.name + ": cannot open for writing");
    synthetic::write_off(mesh, item.mesh);
    manifest << item.name << ',' << item.label << '\n';
  }
  out << "wrote " << corpus.size() << " meshes and " << (fs::path(dir) / "manifest.csv").string() << '\n';
  return kOk;
}

}  // namespace

void write_eval_text(std::ostream& out, const EvalReport& report) {
  out << "classes: " << report.intra_class_mean.size() << ", items: " << report.neighbors.size() << '\n';
  for (const auto& [label, mean] : report.intra_class_mean) {
    out << "  intra-class mean [" << label << "]: " << format_real(mean) << '\n';
  }
  out << "intra-class mean: " << format_real(report.intra_mean) << '\n';
  out << "inter-class mean: " << format_real(report.inter_mean) << '\n';
  out << "1-NN accuracy:    " << format_real(report.accuracy) << '\n';
  for (const auto& nn : report.neighbors) {
    out << "  " << nn.name << " [" << nn.label << "] -> " << nn.neighbor << " [" << nn.neighbor_label
        << "] " << format_real(nn.distance) << (nn.label == nn.neighbor_label ? "" : "  MISS") << '\n';
  }
}

void write_eval_json(std::ostream& out, const EvalReport& report) {
  nlohmann::json j;
  j["intra_class_mean"] = report.intra_class_mean;
  j["intra_mean"] = report.intra_mean;
  j["inter_mean"] = report.inter_mean;
  j["accuracy"] = report.accuracy;
  j["neighbors"] = nlohmann::json::array();
  for (const auto& nn : report.neighbors) {
    j["neighbors"].push_back({{"name", nn.name},
                              {"label", nn.label},
                              {"neighbor", nn.neighbor},
                              {"neighbor_label", nn.neighbor_label},
                              {"distance", nn.distance}});
  }
  out << std::setw(2) << j << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PageRank lower-star persistence descriptors for graphs and meshes", "prpd"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::string input;
  auto* pd = app.add_subcommand("pd", "Compute the persistence diagram of one graph");
  pd->add_option("input", input, "Graph file")->required();
  add_format_flag(*pd, opts);
  add_pagerank_flags(*pd, opts);
  pd->add_option("--out", opts.out, "Output diagram CSV (default stdout)");

  std::string diagram_a;
  std::string diagram_b;
  auto* dist = app.add_subcommand("dist", "Bottleneck distance between two diagram CSV files");
  dist->add_option("a", diagram_a, "First diagram")->required();
  dist->add_option("b", diagram_b, "Second diagram")->required();
  dist->add_flag("--with-essential", opts.with_essential, "Also match essential classes");

  std::string manifest;
  auto* distmat = app.add_subcommand("distmat", "Pairwise bottleneck distance matrix over a manifest");
  distmat->add_option("manifest", manifest, "CSV manifest path,label")->required();
  add_format_flag(*distmat, opts);
  add_pagerank_flags(*distmat, opts);
  distmat->add_flag("--with-essential", opts.with_essential, "Also match essential classes");
  distmat->add_option("--jobs", opts.jobs, "Worker threads (0 = all cores)");
  distmat->add_option("--out", opts.out, "Output matrix CSV (default stdout)");

  auto* eval = app.add_subcommand("eval", "Clustering report (intra/inter means, 1-NN accuracy)");
  eval->add_option("manifest", manifest, "CSV manifest path,label")->required();
  add_format_flag(*eval, opts);
  add_pagerank_flags(*eval, opts);
  eval->add_flag("--with-essential", opts.with_essential, "Also match essential classes");
  eval->add_option("--jobs", opts.jobs, "Worker threads (0 = all cores)");
  eval->add_option("--out", opts.out, "Also write the report as JSON here");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time descriptor stages on random geometric graphs");
  bench->add_option("--sizes", bench_opts.sizes, "Target edge counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Generator seed")->capture_default_str();
  bench->add_option("--repeats", bench_opts.repeats, "Runs per size; the fastest is reported")
      ->check(CLI::PositiveNumber);
  add_pagerank_flags(*bench, opts);
  bench->add_option("--out", opts.out, "Output timing CSV (default stdout)");

  std::string synth_dir;
  std::size_t per_class = 20;
  std::uint64_t synth_seed = 1;
  auto* synth = app.add_subcommand("synth", "Write a synthetic two-class OFF corpus with a manifest");
  synth->add_option("--out", synth_dir, "Output directory")->required();
  synth->add_option("--per-class", per_class, "Meshes per class")->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    opts.pagerank.validate();
    if (pd->parsed()) return cmd_pd(input, opts, out, err);
    if (dist->parsed()) return cmd_dist(diagram_a, diagram_b, opts, out);
    if (distmat->parsed()) return cmd_distmat(manifest, opts, out, err);
    if (eval->parsed()) return cmd_eval(manifest, opts, out, err);
    if (bench->parsed()) return cmd_bench(bench_opts, opts, out);
    if (synth->parsed()) return cmd_synth(synth_dir, per_class, synth_seed, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputeError;
  }
  return kUsageError;
}

}  // namespace prpd::cli
