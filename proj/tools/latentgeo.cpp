#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latentgeo/embedding.hpp"
#include "latentgeo/error.hpp"
#include "latentgeo/genmodel.hpp"
#include "latentgeo/geodist.hpp"
#include "latentgeo/graph.hpp"
#include "latentgeo/inference.hpp"
#include "latentgeo/parallel.hpp"
#include "latentgeo/report.hpp"
#include "latentgeo/study.hpp"

using namespace latentgeo;

namespace {

struct DetectArgs {
  std::string input;
  std::string output;
  std::string method = "all";
  std::size_t replicates = 1000;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  bool integer_ids = false;
  std::string embeddings;
  std::string table;
};

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  double tau = 1.0;
  double phi = 2.0;
  double gamma = 1.0;
  std::optional<double> kbar;
  std::optional<double> radius;
  std::string radial = "area";
  std::uint64_t seed = 1;
  std::string output;
  std::string positions;
  bool require_connected = false;
  std::size_t max_tries = 1000;
};

struct StudyArgs {
  std::string config;
  std::string output;
  std::string csv;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

struct PlotArgs {
  std::string input;
  std::string output;
};

int run_detect_command(const DetectArgs& a) {
  const Network net = read_edge_list_file(a.input, ParseOptions{a.integer_ids});
  DetectRequest request;
  request.input = a.input;
  request.methods = parse_methods(a.method);
  request.replicates = a.replicates;
  request.alpha = a.alpha;
  request.seed = a.seed;
  const Json report = run_detect(net, request);
  for (const auto& r : report.at("results")) std::cout << verdict_line(r) << '\n';
  if (!a.output.empty()) write_file_atomic(a.output, report.dump(2) + "\n");

  if (!a.embeddings.empty()) {
    const auto geo = geodesic_distances(net);
    std::ostringstream out;
    write_embedding_csv(out, classical_mds(geo), net.labels());
    std::ostringstream hyp;
    write_embedding_csv(hyp, hyperbolic_mds(geo), net.labels());
    std::string rows = hyp.str();
    rows.erase(0, rows.find('\n') + 1);  // one header for both manifolds
    write_file_atomic(a.embeddings, out.str() + rows);
  }
  if (!a.table.empty()) {
    const auto geo = geodesic_distances(net);
    const auto m = network_measures(net);
    const auto params = calibrate_glpm(net.size(), m.avg_degree, m.transitivity);
    std::ostringstream out;
    write_table_csv(out, build_conditional_table(net.size(), params, geo.max_value()));
    write_file_atomic(a.table, out.str());
  }
  return 0;
}

int run_generate_command(const GenerateArgs& a) {
  if (a.n == 0) throw Error(ErrorCode::InvalidArgument, "--n must be positive");
  if (a.max_tries == 0) throw Error(ErrorCode::InvalidArgument, "--max-tries must be positive");
  std::function<LatentSample(Rng&)> draw;
  if (a.model == "glpm") {
    const GlpmParams params{a.gamma, a.phi, a.tau, 2};
    params.validate();
    draw = [params, n = a.n](Rng& rng) { return sample_glpm(n, params, rng); };
  } else if (a.model == "hyperbolic") {
    if (a.kbar.has_value() == a.radius.has_value()) {
      throw Error(ErrorCode::InvalidArgument, "hyperbolic model needs exactly one of --kbar or --radius");
    }
    HyperbolicParams params;
    params.radius = a.radius ? *a.radius : radius_for_degree(a.n, *a.kbar);
    params.radial = a.radial == "uniform" ? RadialLaw::Uniform : RadialLaw::AreaUniform;
    params.validate();
    std::fprintf(stderr, "disk radius R = %.6f\n", params.radius);
    draw = [params, n = a.n](Rng& rng) { return sample_hyperbolic(n, params, rng); };
  } else {
    throw Error(ErrorCode::InvalidArgument, "--model must be glpm or hyperbolic");
  }

  Rng rng = make_stream(a.seed, {});
  LatentSample sample = draw(rng);
  std::size_t tries = 1;
  while (a.require_connected && !is_connected(sample.network)) {
    if (tries == a.max_tries) {
      throw Error(ErrorCode::Disconnected,
                  "no connected network in " + std::to_string(a.max_tries) + " draws");
    }
    sample = draw(rng);
    ++tries;
  }

  std::ostringstream out;
  write_edge_list(out, sample.network);
  write_file_atomic(a.output, out.str());
  if (!a.positions.empty()) {
    std::ostringstream pos;
    pos.precision(17);
    pos << (a.model == "glpm" ? "node_label,x,y\n" : "node_label,r,theta\n");
    for (std::size_t i = 0; i < sample.positions.size(); ++i) {
      pos << sample.network.label(static_cast<NodeId>(i)) << ',' << sample.positions[i].x << ','
          << sample.positions[i].y << '\n';
    }
    write_file_atomic(a.positions, pos.str());
  }
  std::printf("%zu nodes, %zu edges, %s\n", sample.network.size(), sample.network.edge_count(),
              is_connected(sample.network) ? "connected" : "disconnected");
  return 0;
}

int run_study_command(const StudyArgs& a) {
  StudyConfig config = read_study_config_file(a.config);
  if (a.seed) config.seed = *a.seed;
  StudyProgress progress;
  if (!a.quiet) progress = [](const std::string& line) { std::cerr << line << '\n'; };
  const StudyReport report = run_simulation_study(config, progress);
  write_study_table(std::cout, report);
  if (!a.output.empty()) write_file_atomic(a.output, to_json(report).dump(2) + "\n");
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_study_csv(out, report);
    write_file_atomic(a.csv, out.str());
  }
  return 0;
}

int run_plot_command(const PlotArgs& a) {
  const Json report = Json::parse(read_file(a.input));
  std::ostringstream out;
  const auto kind = report.value("kind", std::string());
  if (kind == "study") {
    write_study_csv(out, study_from_json(report));
  } else if (kind == "detect") {
    write_null_distribution_csv(out, report);
  } else {
    throw Error(ErrorCode::InvalidArgument, a.input + " is not a latentgeo report");
  }
  if (a.output.empty()) std::cout << out.str();
  else write_file_atomic(a.output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test whether a network is better embedded in the Euclidean or the hyperbolic plane."};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: all cores)");

  DetectArgs detect;
  auto* d = app.add_subcommand("detect", "Run the geometry tests on an edge-list network");
  d->add_option("--input", detect.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  d->add_option("--output", detect.output, "JSON report path");
  d->add_option("--method", detect.method, "stress|permutation|bootstrap|all (comma list allowed)");
  d->add_option("--replicates", detect.replicates, "Permutation/bootstrap replicates");
  d->add_option("--alpha", detect.alpha, "Significance level");
  d->add_option("--seed", detect.seed, "Master seed");
  d->add_flag("--integer-ids", detect.integer_ids, "Node ids are integers; index = id - min id");
  d->add_option("--embeddings", detect.embeddings, "Write both embeddings as CSV");
  d->add_option("--table", detect.table, "Write the calibrated conditional distance table as CSV");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Sample a latent-space network");
  g->add_option("--model", gen.model, "glpm|hyperbolic")->required()->check(CLI::IsMember({"glpm", "hyperbolic"}));
  g->add_option("--n", gen.n, "Number of nodes")->required();
  g->add_option("--tau", gen.tau, "GLPM sparsity");
  g->add_option("--phi", gen.phi, "GLPM kernel bandwidth");
  g->add_option("--gamma", gen.gamma, "GLPM latent variance");
  g->add_option("--kbar", gen.kbar, "Hyperbolic target mean degree");
  g->add_option("--radius", gen.radius, "Hyperbolic disk radius");
  g->add_option("--radial", gen.radial, "Hyperbolic radial law: area|uniform")
      ->check(CLI::IsMember({"area", "uniform"}));
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--output", gen.output, "Edge-list output path")->required();
  g->add_option("--positions", gen.positions, "Latent positions CSV");
  g->add_flag("--require-connected", gen.require_connected, "Resample until connected");
  g->add_option("--max-tries", gen.max_tries, "Resampling cap for --require-connected");

  StudyArgs study;
  auto* s = app.add_subcommand("study", "Sensitivity/specificity simulation study");
  s->add_option("--config", study.config, "key = value config file")->required()->check(CLI::ExistingFile);
  s->add_option("--output", study.output, "JSON report path");
  s->add_option("--csv", study.csv, "Rates CSV path");
  s->add_option("--seed", study.seed, "Override the config seed");
  s->add_flag("--quiet", study.quiet, "No progress on stderr");

  PlotArgs plot;
  auto* p = app.add_subcommand("plot-data", "Tidy CSV from a detect or study report");
  p->add_option("--input", plot.input, "JSON report")->required()->check(CLI::ExistingFile);
  p->add_option("--output", plot.output, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_thread_count(threads);

  try {
    if (d->parsed()) return run_detect_command(detect);
    if (g->parsed()) return run_generate_command(gen);
    if (s->parsed()) return run_study_command(study);
    if (p->parsed()) return run_plot_command(plot);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
