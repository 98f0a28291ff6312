// bead-lab: evaluation, simulation and verification CLI.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 budget exceeded,
// 4 verification failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "beadlab/asymptotics.hpp"
#include "beadlab/kernels.hpp"
#include "beadlab/mc_oracles.hpp"
#include "beadlab/ring_dynamics.hpp"
#include "beadlab/torus.hpp"
#include "beadlab/verify.hpp"
#include "beadlab/volumes.hpp"

using namespace beadlab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string format = "json";
  bool no_timestamp = false;
  int threads = 1;
};

std::chrono::steady_clock::time_point run_start;

ordered_json manifest(const std::string& subcommand, const ordered_json& params,
                      const GlobalOpts& g) {
  ordered_json m;
  m["subcommand"] = subcommand;
  m["params"] = params;
  m["version"] = kVersion;
  if (!g.no_timestamp) {
    const auto wall = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - run_start)
                          .count();
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
    m["timing"] = {{"timestamp", buf}, {"wall_ms", wall}};
  }
  return m;
}

ordered_json complex_json(cdouble z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw domain_error("expected a comma-separated integer list");
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

std::uint64_t replica_seed(std::uint64_t seed, int rep) {
  return rep == 0 ? seed : seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(rep);
}

int cmd_volume(const GlobalOpts& g, int n, int k, int ell, const std::string& method,
               std::uint64_t samples, std::uint64_t seed, int replicas) {
  ordered_json params = {{"n", n},       {"k", k},       {"ell", ell}, {"method", method},
                         {"samples", samples}, {"seed", seed}, {"replicas", replicas}};
  ordered_json doc = manifest("volume", params, g);
  ordered_json result;
  if (method == "exact" || method == "centered") {
    const VolumeQuery q{n, k, ell};
    const VolumeResult r = (method == "exact") ? volumes::volume_exact(q, g.threads)
                                               : volumes::volume_exact_centered(q, g.threads);
    result["value"] = r.value;
    result["log_value"] = std::isfinite(r.log_abs) ? ordered_json(r.log_abs) : ordered_json();
    result["sign"] = r.sign;
    result["method"] = method;
    result["enumeration"] = r.method;
    result["imag_residual"] = r.imag_residual;
  } else if (method == "mc") {
    Welford merged;
    for (int rep = 0; rep < replicas; ++rep) {
      const McEstimate est = mc::volume_mc(n, k, ell, samples, replica_seed(seed, rep));
      Welford w;
      w.count = est.samples;
      w.mean = est.mean;
      w.m2 = est.std_error * est.std_error * est.samples * (est.samples - 1);
      merged.merge(w);
    }
    result["value"] = merged.mean;
    result["std_error"] = merged.std_error();
    result["samples"] = merged.count;
    result["seed"] = seed;
    result["method"] = "mc";
  } else {
    throw domain_error("volume: method must be exact, centered or mc");
  }
  doc["result"] = result;
  emit(doc);
  return 0;
}

int cmd_partition(const GlobalOpts& g, int n, double lambda, double T,
                  const std::string& theta) {
  ordered_json params = {{"n", n}, {"lambda", lambda}, {"t", T}, {"theta", theta}};
  ordered_json doc = manifest("partition", params, g);
  cdouble value;
  if (theta == "all") {
    value = volumes::partition_product(n, lambda, T);
  } else {
    const auto parts = parse_int_list(theta);
    if (parts.size() != 2) throw domain_error("partition: theta must be t1,t2");
    value = volumes::partition_theta(n, lambda, T, parts[0], parts[1]);
  }
  doc["result"] = {{"value", complex_json(value)}, {"method", "exact"}};
  emit(doc);
  return 0;
}

int cmd_kernel(const GlobalOpts& g, const std::string& family, const std::string& alpha,
               double t, long h, int n, int ell, double beta_re, double beta_im,
               int theta2, double T_re, double T_im, bool inversion, int grid,
               bool sine, const std::string& tau_n_list, double tau) {
  ordered_json params = {{"family", family}, {"alpha", alpha},   {"t", t},
                         {"h", h},           {"n", n},           {"ell", ell},
                         {"beta_re", beta_re}, {"beta_im", beta_im}, {"theta2", theta2},
                         {"T_re", T_re},     {"T_im", T_im}};
  ordered_json doc = manifest("kernel", params, g);

  if (inversion) {
    const TorusKernelParams p(n, {beta_re, beta_im}, theta2, {T_re, T_im});
    const double residual = kernels::verify_inversion(p, grid);
    doc["result"] = {{"residual", residual}, {"grid", grid}, {"method", "kernel"}};
    emit(doc);
    return 0;
  }
  if (sine) {
    const auto ns = parse_int_list(tau_n_list);
    const double s_vals[] = {0.25, 0.5, 1.0, 2.0};
    auto rows_json = ordered_json::array();
    for (const auto& row : kernels::sine_probe(tau, s_vals, ns))
      rows_json.push_back({{"n", row.n},
                           {"s", row.s},
                           {"kernel", row.kernel_value},
                           {"sine_limit", row.sine_value}});
    doc["result"] = {{"rows", rows_json}, {"method", "kernel"}};
    emit(doc);
    return 0;
  }

  const Flavor f = flavor_from_char(alpha.empty() ? 'o' : alpha[0]);
  cdouble value;
  if (family == "torus") {
    const TorusKernelParams p(n, {beta_re, beta_im}, theta2, {T_re, T_im});
    value = kernels::kernel_torus(p, f, t, h);
  } else if (family == "ring") {
    const RingKernelParams p = kernels::root_sets(n, ell);
    value = kernels::kernel_ring(p, f, t, h);
  } else {
    throw domain_error("kernel: family must be torus or ring");
  }
  doc["result"] = {{"value", complex_json(value)}, {"method", "kernel"}};
  emit(doc);
  return 0;
}

int cmd_simulate(const GlobalOpts& g, const std::string& chain, int n, int ell,
                 double horizon, std::uint64_t seed, int replicas,
                 const std::string& start_members) {
  ordered_json params = {{"chain", chain},     {"n", n},       {"ell", ell},
                         {"horizon", horizon}, {"seed", seed}, {"replicas", replicas}};
  emit(manifest("simulate", params, g));

  const ChainKind kind = (chain == "gordenko") ? ChainKind::gordenko
                         : (chain == "tasep")  ? ChainKind::tasep
                                               : throw domain_error(
                                                     "simulate: chain must be gordenko or tasep");
  RingSet start(n, 0);
  if (start_members.empty()) {
    for (int h = 0; h < ell; ++h) start.bits |= 1ULL << h;
  } else {
    start = RingSet::from_members(n, parse_int_list(start_members));
  }
  const ChainState state(n, start);

  for (int rep = 0; rep < replicas; ++rep) {
    const std::uint64_t rep_seed = replica_seed(seed, rep);
    const Trajectory traj = ring::simulate(kind, state, horizon, rep_seed);
    for (const auto& e : traj.events) {
      ordered_json ev = {{"type", "event"},
                         {"replica", rep},
                         {"time", e.time},
                         {"from", e.from},
                         {"to", (e.from + 1) % n}};
      emit(ev);
    }
    ordered_json summary = {
        {"type", "summary"},
        {"replica", rep},
        {"seed", rep_seed},
        {"events", traj.events.size()},
        {"jumps_per_unit_time", traj.events.size() / horizon},
        {"bead_density_per_string", traj.events.size() / horizon / n},
        {"expected_density", ring::chain_exit_rate(n, ell) / n},
        {"final_state", traj.state_at(horizon).members()},
        {"method", "simulated"}};
    emit(summary);
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const std::string& config) {
  ordered_json params = {{"suite", suite}, {"config", config}};
  ordered_json doc = manifest("verify", params, g);

  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) throw domain_error("verify: cannot open " + config);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const BeadConfiguration cfg = BeadConfiguration::from_json_text(buffer.str());
    const bool valid = torus::validate_configuration(cfg);
    ordered_json result = {{"valid", valid}, {"n", cfg.n}, {"k", cfg.k}, {"method", "exact"}};
    if (valid && cfg.k >= 1) {
      result["ell"] = torus::occupation_number(cfg);
      result["tilt"] = torus::tilt(cfg);
    }
    doc["result"] = result;
    emit(doc);
    return 0;
  }

  const auto results = verify::run_suite(suite);
  bool all_pass = true;
  auto rows = ordered_json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    rows.push_back({{"suite", r.suite},
                    {"check", r.name},
                    {"pass", r.pass},
                    {"metric", r.metric},
                    {"detail", r.detail}});
    std::fprintf(stderr, "[%s] %s / %s (metric %.3g)\n", r.pass ? "ok" : "FAIL",
                 r.suite.c_str(), r.name.c_str(), r.metric);
  }
  doc["result"] = {{"checks", rows}, {"pass", all_pass}};
  if (g.format == "csv") {
    std::printf("suite,check,pass,metric\n");
    for (const auto& r : results)
      std::printf("%s,%s,%d,%.17g\n", r.suite.c_str(), r.name.c_str(), int(r.pass),
                  r.metric);
  } else {
    emit(doc);
  }
  return all_pass ? 0 : 4;
}

int cmd_asymptotics(const GlobalOpts& g, double p, double tau, const std::string& n_list,
                    int truncation) {
  ordered_json params = {
      {"p", p}, {"tau", tau}, {"n_list", n_list}, {"gf_truncation", truncation}};
  const auto ns = parse_int_list(n_list);
  const auto rows = asym::convergence_probe({p, tau, truncation}, ns, g.threads);
  if (g.format == "csv") {
    std::printf("n,lhs_log,target_log,abs_error\n");
    for (const auto& r : rows)
      std::printf("%d,%.17g,%.17g,%.17g\n", r.n, r.log_lhs, r.log_target,
                  std::abs(r.log_lhs - r.log_target));
    return 0;
  }
  ordered_json doc = manifest("asymptotics", params, g);
  auto rows_json = ordered_json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"n", r.n},
                         {"k", r.k},
                         {"ell", r.ell},
                         {"lhs_log", r.log_lhs},
                         {"target_log", r.log_target},
                         {"rel_err_constant", r.rel_err_constant},
                         {"free_energy", r.free_energy_lhs},
                         {"free_energy_err", r.free_energy_err},
                         {"method", "exact"}});
  doc["result"] = {{"rows", rows_json},
                   {"free_energy_target", asym::free_energy(tau)},
                   {"constant_target", asym::asymptotic_constant({p, tau, truncation})}};
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  run_start = std::chrono::steady_clock::now();
  CLI::App app{"bead-lab: exact combinatorics, determinantal kernels and ring dynamics "
               "of the bead model on the semi-discrete torus"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timestamp", g.no_timestamp, "Suppress the timing block");
  app.add_option("--threads", g.threads, "Worker threads for enumerations")
      ->check(CLI::PositiveNumber);

  // volume
  auto* volume = app.add_subcommand("volume", "Exact, centered or Monte Carlo volume");
  volume->fallthrough();
  int v_n = 2, v_k = 1, v_ell = 1, v_replicas = 1;
  std::string v_method = "exact";
  std::uint64_t v_samples = 1000000, v_seed = 1;
  volume->add_option("--n", v_n)->required();
  volume->add_option("--k", v_k)->required();
  volume->add_option("--ell", v_ell)->required();
  volume->add_option("--method", v_method)->check(CLI::IsMember({"exact", "centered", "mc"}));
  volume->add_option("--samples", v_samples);
  volume->add_option("--seed", v_seed);
  volume->add_option("--replicas", v_replicas)->check(CLI::PositiveNumber);

  // partition
  auto* partition = app.add_subcommand("partition", "Partition function evaluation");
  partition->fallthrough();
  int p_n = 2;
  double p_lambda = 0.0, p_t = 0.0;
  std::string p_theta = "all";
  partition->add_option("--n", p_n)->required();
  partition->add_option("--lambda", p_lambda)->required();
  partition->add_option("--t", p_t)->required();
  partition->add_option("--theta", p_theta, "t1,t2 or all");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Correlation kernel queries");
  kernel->fallthrough();
  kernel->set_help_flag("--help", "Print this help message and exit");  // frees --h
  std::string k_family = "ring", k_alpha = "o", k_nlist = "8,16,32";
  double k_t = 0.0, k_beta = 1.0, k_beta_im = 0.0, k_T = 0.5, k_T_im = 0.0, k_tau = 0.5;
  long k_h = 0;
  int k_n = 4, k_ell = 2, k_theta2 = 0, k_grid = 16;
  bool k_inversion = false, k_sine = false;
  kernel->add_option("--family", k_family)->check(CLI::IsMember({"torus", "ring"}));
  kernel->add_option("--alpha", k_alpha)->check(CLI::IsMember({"b", "o", "u"}));
  kernel->add_option("--t", k_t);
  kernel->add_option("--h", k_h);
  kernel->add_option("--n", k_n);
  kernel->add_option("--ell", k_ell);
  kernel->add_option("--beta", k_beta);
  kernel->add_option("--beta-im", k_beta_im);
  kernel->add_option("--theta2", k_theta2)->check(CLI::IsMember({0, 1}));
  kernel->add_option("--T", k_T);
  kernel->add_option("--T-im", k_T_im);
  kernel->add_flag("--verify-inversion", k_inversion, "Report the inversion residual");
  kernel->add_option("--grid", k_grid);
  kernel->add_flag("--sine-probe", k_sine, "Diagnostic large-n kernel table");
  kernel->add_option("--n-list", k_nlist);
  kernel->add_option("--tau", k_tau);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Exclusion chain simulation");
  simulate->fallthrough();
  std::string s_chain = "gordenko", s_start;
  int s_n = 6, s_ell = 3, s_replicas = 1;
  double s_horizon = 10.0;
  std::uint64_t s_seed = 1;
  simulate->add_option("--chain", s_chain)->check(CLI::IsMember({"gordenko", "tasep"}));
  simulate->add_option("--n", s_n)->required();
  simulate->add_option("--ell", s_ell)->required();
  simulate->add_option("--horizon", s_horizon)->required();
  simulate->add_option("--seed", s_seed);
  simulate->add_option("--replicas", s_replicas)->check(CLI::PositiveNumber);
  simulate->add_option("--start", s_start, "Comma-separated occupied sites");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Invariant suites / config check");
  verify_cmd->fallthrough();
  std::string vy_suite = "all", vy_config;
  verify_cmd->add_option("--suite", vy_suite);
  verify_cmd->add_option("--config", vy_config, "Validate a configuration JSON file");

  // asymptotics
  auto* asymp = app.add_subcommand("asymptotics", "Volume asymptotics probe");
  asymp->fallthrough();
  double a_p = 1.0, a_tau = 0.5;
  std::string a_nlist = "8,12,16,20";
  int a_trunc = 64;
  asymp->add_option("--p", a_p)->required();
  asymp->add_option("--tau", a_tau)->required();
  asymp->add_option("--n-list", a_nlist);
  asymp->add_option("--gf-truncation", a_trunc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (g.format == "csv" && !verify_cmd->parsed() && !asymp->parsed())
      throw domain_error("csv output is defined for the verify and asymptotics subcommands");
    if (volume->parsed())
      return cmd_volume(g, v_n, v_k, v_ell, v_method, v_samples, v_seed, v_replicas);
    if (partition->parsed()) return cmd_partition(g, p_n, p_lambda, p_t, p_theta);
    if (kernel->parsed())
      return cmd_kernel(g, k_family, k_alpha, k_t, k_h, k_n, k_ell, k_beta, k_beta_im,
                        k_theta2, k_T, k_T_im, k_inversion, k_grid, k_sine, k_nlist, k_tau);
    if (simulate->parsed())
      return cmd_simulate(g, s_chain, s_n, s_ell, s_horizon, s_seed, s_replicas, s_start);
    if (verify_cmd->parsed()) return cmd_verify(g, vy_suite, vy_config);
    if (asymp->parsed()) return cmd_asymptotics(g, a_p, a_tau, a_nlist, a_trunc);
  } catch (const resource_error& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return 3;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
