// Command-line front end: simulate / fit / select / fdr / evaluate / bench.
// Every command is deterministic given its seed; outputs are CSV/JSON/DOT.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "riw/data.hpp"
#include "riw/fdr.hpp"
#include "riw/io.hpp"
#include "riw/sampler.hpp"
#include "riw/selection.hpp"
#include "riw/simbench.hpp"

using nlohmann::json;
using namespace riw;

namespace {

std::string resolve_out(std::string out, const std::string& cmd) {
  if (!out.empty()) return out;
  if (const char* root = std::getenv("RIW_OUT_ROOT"))
    return std::string(root) + "/" + cmd;
  throw std::runtime_error("no --out given and RIW_OUT_ROOT is unset");
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Hyperparameters config_hyper(int n, int p, const std::string& prior,
                             const std::string& cond_d,
                             const std::string& lshape) {
  Hyperparameters h = default_hyperparameters(n, p);
  if (prior == "iw")
    h.variant = Variant::IW_BASELINE;
  else if (prior != "riw")
    throw std::runtime_error("unknown --prior: " + prior);
  if (cond_d == "exact_gig")
    h.conditional_d = ConditionalD::EXACT_GIG;
  else if (cond_d != "paper_ig")
    throw std::runtime_error("unknown --conditional-d: " + cond_d);
  if (lshape == "derived")
    h.lambda_shape = LambdaShape::DERIVED;
  else if (lshape == "exact")
    h.lambda_shape = LambdaShape::EXACT_CONDITIONAL;
  else if (lshape != "paper")
    throw std::runtime_error("unknown --lambda-shape: " + lshape);
  return h;
}

CombineRule parse_rule(const std::string& rule) {
  if (rule == "and") return CombineRule::AND;
  if (rule == "or") return CombineRule::OR;
  throw std::runtime_error("unknown --rule: " + rule);
}

int cmd_simulate(const std::string& kind, int n, int p, double hurst,
                 int hubs, int hub_degree, std::uint64_t seed,
                 std::vector<double> cms, std::string out) {
  out = resolve_out(out, "simulate");
  std::filesystem::create_directories(out);
  if (cms.empty()) cms = {0.005, 0.1};

  RngStream rng(seed, 0);
  Matrix omega0;
  if (kind == "fgn") {
    omega0 = spd_inverse(fgn_covariance({p, hurst}).matrix());
  } else if (kind == "sparse") {
    omega0 = sparse_precision_generator(p, hubs, hub_degree, rng)
                 .omega0.matrix();
  } else {
    throw std::runtime_error("unknown --case: " + kind);
  }
  const SpdMatrix om0(omega0);
  const SpdMatrix sigma0 = spd_inverse(om0);
  RngStream data_rng(seed, 1);
  const Matrix x = sample_mvn_zero(sigma0, n, data_rng);

  write_csv_matrix(out + "/data.csv", x);
  write_csv_matrix(out + "/omega0.csv", omega0);
  json manifest;
  manifest["case"] = kind;
  manifest["n"] = n;
  manifest["p"] = p;
  manifest["seed"] = seed;
  if (kind == "fgn") manifest["hurst"] = hurst;
  if (kind == "sparse") {
    manifest["hubs"] = hubs;
    manifest["hub_degree"] = hub_degree;
  }
  for (double cm : cms) {
    const std::string name = "edges_cm_" + std::to_string(cm) + ".csv";
    write_edge_list(out + "/" + name,
                    adjacency_to_edges(true_edge_set(om0, cm)));
    manifest["truth_files"].push_back(name);
  }
  write_json(out + "/manifest.json", manifest);
  return 0;
}

int cmd_fit(const std::string& data_path, std::uint64_t seed, int iters,
            int burnin, int thin, const std::string& prior,
            const std::string& cond_d, const std::string& lshape,
            bool store_draws, std::string out) {
  out = resolve_out(out, "fit");
  std::filesystem::create_directories(out);
  const DataMatrix data = standardize(read_csv_matrix(data_path));
  const Hyperparameters hyper =
      config_hyper(data.n(), data.p(), prior, cond_d, lshape);

  std::ofstream log(out + "/fit.log");
  const auto t0 = std::chrono::steady_clock::now();
  RngStream rng(seed, 0);
  const ChainSamples samples =
      run_chain(data, hyper, iters, burnin, thin, rng, store_draws);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  log << "iterations " << iters << " burnin " << burnin << "\n"
      << "total seconds " << secs << "\n"
      << "seconds per 1000 iterations " << 1000.0 * secs / iters << "\n";
  save_chain_samples(out, samples);
  return 0;
}

int cmd_select(const std::string& fit_dir, int delta_count,
               const std::string& rule_name, std::string out) {
  out = resolve_out(out, "select");
  std::filesystem::create_directories(out);
  const ChainSamples samples = load_chain_samples(fit_dir);
  const CombineRule rule = parse_rule(rule_name);

  const PathEnsemble ens = build_ensemble(samples);
  const DeltaGrid grid = calibrate_grid(ens, delta_count);
  const SelectionPath path = build_path(ens, grid, rule);

  write_csv_vector(out + "/grid.csv",
                   Eigen::Map<const Vector>(grid.values.data(),
                                            grid.values.size()));
  json manifest;
  manifest["rule"] = rule_name;
  manifest["delta_count"] = grid.size();
  manifest["p"] = samples.p;
  manifest["fit_dir"] = fit_dir;
  for (int m = 0; m < grid.size(); ++m) {
    const std::string name = "edges_delta_" + std::to_string(m + 1) + ".csv";
    write_edge_list(out + "/" + name,
                    adjacency_to_edges(path.adjacency_at[std::size_t(m)]));
    manifest["edge_files"].push_back(name);
  }
  write_csv_matrix(out + "/inclusion.csv", inclusion_matrix(path).p_mat);
  write_json(out + "/manifest.json", manifest);
  return 0;
}

int cmd_fdr(const std::string& select_dir, const std::string& fit_dir,
            double eta, bool printed_rule, std::string out) {
  out = resolve_out(out, "fdr");
  std::filesystem::create_directories(out);
  InclusionMatrix incl;
  incl.p_mat = read_csv_matrix(select_dir + "/inclusion.csv");
  const json manifest = json::parse(std::ifstream(select_dir + "/manifest.json"));
  incl.grid_size = manifest["delta_count"];
  const Matrix omega_mean = read_csv_matrix(fit_dir + "/omega_mean.csv");

  const FdrThreshold th = fdr_threshold(incl, eta, printed_rule);
  const GraphEstimate ge = point_estimate(incl, th.c_eta, omega_mean);
  write_edge_list(out + "/edges.csv", ge.edges);
  write_dot(out + "/graph.dot", ge.adjacency);
  write_csv_matrix(out + "/omega_est.csv", ge.omega_est);
  json rec;
  rec["eta"] = eta;
  rec["c_eta"] = th.c_eta;
  rec["zeta"] = th.zeta;
  rec["min_eigenvalue"] = ge.min_eigenvalue;
  write_json(out + "/fdr.json", rec);
  return 0;
}

int cmd_evaluate(const std::string& graph_path, const std::string& truth_path,
                 int p, const std::string& select_dir, std::string out) {
  out = resolve_out(out, "evaluate");
  std::filesystem::create_directories(out);
  const Adjacency truth = edges_to_adjacency(read_edge_list(truth_path), p);

  std::ofstream csv(out + "/metrics.csv");
  csv << "source,tp,tn,fp,fn,sp,se\n";
  if (!graph_path.empty()) {
    const Adjacency est = edges_to_adjacency(read_edge_list(graph_path), p);
    const ConfusionMetrics c = confusion(est, truth);
    csv << "graph," << c.tp << ',' << c.tn << ',' << c.fp << ',' << c.fn
        << ',' << c.sp << ',' << c.se << '\n';
  }
  if (!select_dir.empty()) {
    const json manifest =
        json::parse(std::ifstream(select_dir + "/manifest.json"));
    std::vector<Adjacency> path;
    std::ofstream roc(out + "/roc.csv");
    roc << "fpr,tpr\n";
    for (const auto& name : manifest["edge_files"]) {
      path.push_back(edges_to_adjacency(
          read_edge_list(select_dir + "/" + name.get<std::string>()), p));
      const auto [fpr, tpr] = roc_point(path.back(), truth);
      roc << fpr << ',' << tpr << '\n';
    }
    json summary;
    summary["auc"] = roc_auc(path, truth);
    write_json(out + "/auc.json", summary);
  }
  return 0;
}

int cmd_bench(int n, int p, double hurst, int replicates, std::uint64_t seed,
              int iters, int burnin, double eta, const std::string& prior,
              const std::string& cond_d, const std::string& rule_name,
              std::string out) {
  out = resolve_out(out, "bench");
  std::filesystem::create_directories(out);
  BenchConfig cfg;
  cfg.iters = iters;
  cfg.burnin = burnin;
  cfg.eta = eta;
  cfg.variant = prior == "iw" ? Variant::IW_BASELINE : Variant::RIW;
  cfg.conditional_d = cond_d == "paper_ig" ? ConditionalD::PAPER_IG
                                           : ConditionalD::EXACT_GIG;
  cfg.rule = parse_rule(rule_name);
  std::vector<std::uint64_t> seeds;
  for (int r = 0; r < replicates; ++r) seeds.push_back(seed + r);

  const BenchResult res = run_fgn_benchmark(n, p, hurst, seeds, cfg);

  std::ofstream csv(out + "/replicates.csv");
  csv << "seed,threshold,auc,sp1,se1,zeta,c_eta,seconds\n";
  for (const auto& rm : res.reps)
    for (std::size_t t = 0; t < res.thresholds.size(); ++t)
      csv << rm.seed << ',' << res.thresholds[t] << ',' << rm.auc[t] << ','
          << rm.sp1 << ',' << rm.se1 << ',' << rm.zeta << ',' << rm.c_eta
          << ',' << rm.seconds << '\n';
  json summary;
  summary["n"] = n;
  summary["p"] = p;
  summary["hurst"] = hurst;
  summary["replicates"] = replicates;
  summary["prior"] = prior;
  summary["thresholds"] = res.thresholds;
  summary["auc_mean"] = res.auc_mean;
  summary["auc_se"] = res.auc_se;
  summary["sp1_mean"] = res.sp1_mean;
  summary["se1_mean"] = res.se1_mean;
  write_json(out + "/summary.json", summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized inverse-Wishart graphical model pipeline"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "generate data and ground truth");
  std::string sim_case = "fgn", sim_out;
  int sim_n = 100, sim_p = 10, sim_hubs = 2, sim_hub_degree = 5;
  double sim_hurst = 0.7;
  std::uint64_t sim_seed = 1;
  std::vector<double> sim_cms;
  sim->add_option("--case", sim_case, "fgn|sparse");
  sim->add_option("--n", sim_n);
  sim->add_option("--p", sim_p);
  sim->add_option("--hurst", sim_hurst);
  sim->add_option("--hubs", sim_hubs);
  sim->add_option("--hub-degree", sim_hub_degree);
  sim->add_option("--seed", sim_seed);
  sim->add_option("--cm", sim_cms, "truth thresholds");
  sim->add_option("--out", sim_out);

  // fit
  auto* fit = app.add_subcommand("fit", "run the Gibbs sampler");
  std::string fit_data, fit_prior = "riw", fit_cond_d = "paper_ig",
              fit_lshape = "paper", fit_out;
  std::uint64_t fit_seed = 1;
  int fit_iters = 15000, fit_burnin = 5000, fit_thin = 1;
  bool fit_store = false;
  fit->add_option("--data", fit_data)->required();
  fit->add_option("--seed", fit_seed);
  fit->add_option("--iters", fit_iters);
  fit->add_option("--burnin", fit_burnin);
  fit->add_option("--thin", fit_thin);
  fit->add_option("--prior", fit_prior, "riw|iw");
  fit->add_option("--conditional-d", fit_cond_d, "paper_ig|exact_gig");
  fit->add_option("--lambda-shape", fit_lshape, "paper|derived|exact");
  fit->add_flag("--store-draws", fit_store);
  fit->add_option("--out", fit_out);

  // select
  auto* sel = app.add_subcommand("select", "credible-region solution paths");
  std::string sel_fit, sel_rule = "and", sel_out;
  int sel_count = 50;
  sel->add_option("--fit", sel_fit)->required();
  sel->add_option("--delta-count", sel_count);
  sel->add_option("--rule", sel_rule, "and|or");
  sel->add_option("--out", sel_out);

  // fdr
  auto* fdr = app.add_subcommand("fdr", "FDR point-estimate graph");
  std::string fdr_sel, fdr_fit, fdr_out;
  double fdr_eta = 0.1;
  bool fdr_printed = false;
  fdr->add_option("--select", fdr_sel)->required();
  fdr->add_option("--fit", fdr_fit)->required();
  fdr->add_option("--eta", fdr_eta);
  fdr->add_flag("--printed-rule", fdr_printed,
                "use the literal running-mean rule");
  fdr->add_option("--out", fdr_out);

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "confusion/AUC against a truth");
  std::string ev_graph, ev_truth, ev_sel, ev_out;
  int ev_p = 0;
  ev->add_option("--graph", ev_graph);
  ev->add_option("--truth", ev_truth)->required();
  ev->add_option("--p", ev_p)->required();
  ev->add_option("--select", ev_sel);
  ev->add_option("--out", ev_out);

  // bench
  auto* bn = app.add_subcommand("bench", "fGn replicate benchmark sweep");
  std::string bn_prior = "riw", bn_cond_d = "exact_gig", bn_rule = "and",
              bn_out;
  int bn_n = 300, bn_p = 100, bn_reps = 10, bn_iters = 15000, bn_burnin = 5000;
  double bn_hurst = 0.7, bn_eta = 0.2;
  std::uint64_t bn_seed = 1;
  bn->add_option("--n", bn_n);
  bn->add_option("--p", bn_p);
  bn->add_option("--hurst", bn_hurst);
  bn->add_option("--replicates", bn_reps);
  bn->add_option("--seed", bn_seed);
  bn->add_option("--iters", bn_iters);
  bn->add_option("--burnin", bn_burnin);
  bn->add_option("--eta", bn_eta);
  bn->add_option("--prior", bn_prior, "riw|iw");
  bn->add_option("--conditional-d", bn_cond_d);
  bn->add_option("--rule", bn_rule);
  bn->add_option("--out", bn_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return cmd_simulate(sim_case, sim_n, sim_p, sim_hurst, sim_hubs,
                          sim_hub_degree, sim_seed, sim_cms, sim_out);
    if (fit->parsed())
      return cmd_fit(fit_data, fit_seed, fit_iters, fit_burnin, fit_thin,
                     fit_prior, fit_cond_d, fit_lshape, fit_store, fit_out);
    if (sel->parsed()) return cmd_select(sel_fit, sel_count, sel_rule, sel_out);
    if (fdr->parsed())
      return cmd_fdr(fdr_sel, fdr_fit, fdr_eta, fdr_printed, fdr_out);
    if (ev->parsed()) return cmd_evaluate(ev_graph, ev_truth, ev_p, ev_sel, ev_out);
    if (bn->parsed())
      return cmd_bench(bn_n, bn_p, bn_hurst, bn_reps, bn_seed, bn_iters,
                       bn_burnin, bn_eta, bn_prior, bn_cond_d, bn_rule, bn_out);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << std::endl;
    return 1;
  }
  return 0;
}
