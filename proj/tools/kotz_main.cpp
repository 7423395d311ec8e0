#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "kotz/estimation.hpp"
#include "kotz/harness.hpp"
#include "kotz/io.hpp"
#include "kotz/limit_laws.hpp"
#include "kotz/tail.hpp"
#include "kotz/version.hpp"

namespace {

using nlohmann::json;

struct ParamFlags {
  bool gaussian = false;
  std::optional<double> p, q, delta, N;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--gaussian", gaussian, "use the Gaussian parameters for the ambient dimension");
    cmd->add_option("--p", p, "radial tail constant p");
    cmd->add_option("--q", q, "radial exponential rate q");
    cmd->add_option("--delta", delta, "radial tail exponent delta");
    cmd->add_option("--N", N, "radial polynomial exponent N");
  }

  kotz::KotzParams resolve(int k) const {
    if (gaussian) return kotz::gaussian_params(k);
    if (!p || !q || !delta || !N) {
      throw CLI::ValidationError("params", "pass --gaussian or all of --p --q --delta --N");
    }
    return kotz::KotzParams{*p, *q, *delta, *N};
  }

  json to_json(const kotz::KotzParams& params) const {
    return {{"p", params.p}, {"q", params.q}, {"delta", params.delta}, {"N", params.N}};
  }
};

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw kotz::Error("cannot write " + out_path);
  out << report.dump(2) << "\n";
}

kotz::IndexSet parse_index_set(const std::string& text, int dim) {
  const kotz::Vector v = kotz::parse_vector(text);
  std::vector<int> members;
  for (Eigen::Index i = 0; i < v.size(); ++i) members.push_back(static_cast<int>(v[i]));
  return kotz::IndexSet(std::move(members), dim);
}

json qp_to_json(const kotz::QpSolution& sol) {
  return {{"I", kotz::to_json(sol.I)},          {"J", kotz::to_json(sol.J)},
          {"a_tilde", kotz::to_json(sol.a_tilde)}, {"value", sol.value},
          {"lambda_I", kotz::to_json(sol.lambda_I)}, {"binding_J", kotz::to_json(sol.binding_J)}};
}

int run(int argc, char** argv) {
  CLI::App app{"Tail asymptotics, limit laws and estimation for Kotz Type III elliptical vectors"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");

  // ---- qp
  auto* qp_cmd = app.add_subcommand("qp", "solve the quadratic program P(Sigma, a)");
  std::string qp_sigma, qp_a;
  bool qp_header = false;
  qp_cmd->add_option("--sigma", qp_sigma, "correlation matrix file (CSV or .json)")->required();
  qp_cmd->add_option("--a", qp_a, "threshold direction, inline or file")->required();
  qp_cmd->add_flag("--header", qp_header, "skip one CSV header line");

  // ---- tail
  auto* tail_cmd = app.add_subcommand("tail", "exact tail asymptotic expansion");
  std::string tail_sigma, tail_a, tail_x;
  double tail_t = 0.0;
  bool tail_header = false;
  ParamFlags tail_params;
  tail_cmd->add_option("--sigma", tail_sigma)->required();
  tail_cmd->add_option("--a", tail_a)->required();
  tail_cmd->add_option("--x", tail_x, "second-order offset (default 0)");
  tail_cmd->add_option("--t", tail_t, "threshold scale")->required();
  tail_cmd->add_flag("--header", tail_header);
  tail_params.attach(tail_cmd);

  // ---- marginal-tail
  auto* marg_cmd = app.add_subcommand("marginal-tail", "marginal tail 1 - G_1(t)");
  int marg_k = 0;
  double marg_t = 0.0;
  ParamFlags marg_params;
  marg_cmd->add_option("--k", marg_k, "ambient dimension")->required();
  marg_cmd->add_option("--t", marg_t)->required();
  marg_params.attach(marg_cmd);

  // ---- excess
  auto* excess_cmd = app.add_subcommand("excess", "limiting conditional-excess law");
  std::string excess_sigma, excess_a, excess_L, excess_x;
  bool excess_header = false;
  excess_cmd->add_option("--sigma", excess_sigma)->required();
  excess_cmd->add_option("--a", excess_a)->required();
  excess_cmd->add_option("--L", excess_L, "index set for a survivor evaluation");
  excess_cmd->add_option("--x", excess_x, "thresholds aligned with L");
  excess_cmd->add_flag("--header", excess_header);

  // ---- profile
  auto* profile_cmd = app.add_subcommand("profile", "conditional profile given extreme X_I");
  std::string profile_sigma, profile_a, profile_I, profile_mode = "exceedance";
  double profile_t = 0.0;
  bool profile_header = false;
  ParamFlags profile_params;
  profile_cmd->add_option("--sigma", profile_sigma)->required();
  profile_cmd->add_option("--a", profile_a)->required();
  profile_cmd->add_option("--I", profile_I, "conditioning index set")->required();
  profile_cmd->add_option("--t", profile_t)->required();
  profile_cmd->add_option("--mode", profile_mode)
      ->check(CLI::IsMember({"exceedance", "fixed"}));
  profile_cmd->add_flag("--header", profile_header);
  profile_params.attach(profile_cmd);

  // ---- hr
  auto* hr_cmd = app.add_subcommand("hr", "Huesler-Reiss norming and limit distribution");
  double hr_gamma = 0.0, hr_n = 0.0;
  std::optional<double> hr_x, hr_y;
  int hr_k = 2;
  ParamFlags hr_params;
  hr_cmd->add_option("--gamma", hr_gamma)->required();
  hr_cmd->add_option("--n", hr_n, "sample size per block")->required();
  hr_cmd->add_option("--x", hr_x);
  hr_cmd->add_option("--y", hr_y);
  hr_cmd->add_option("--k", hr_k, "ambient dimension for --gaussian");
  hr_params.attach(hr_cmd);

  // ---- sample
  auto* sample_cmd = app.add_subcommand("sample", "draw Kotz vectors to CSV with a JSON sidecar");
  std::string sample_sigma, sample_out;
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 20240801;
  bool sample_header = false;
  ParamFlags sample_params;
  sample_cmd->add_option("--sigma", sample_sigma)->required();
  sample_cmd->add_option("--n", sample_n)->required();
  sample_cmd->add_option("--seed", sample_seed);
  sample_cmd->add_option("--out", sample_out, "CSV output path")->required();
  sample_cmd->add_flag("--header", sample_header);
  sample_params.attach(sample_cmd);

  // ---- estimate
  auto* est_cmd = app.add_subcommand("estimate", "fit tail parameters from a CSV sample");
  std::string est_sample, est_x;
  bool est_header = false;
  int est_coord = 1;
  std::optional<std::size_t> est_kn;
  std::optional<double> est_tn, est_t;
  double est_p = 0.0, est_N = 0.0;
  est_cmd->add_option("--sample", est_sample, "CSV sample, one vector per row")->required();
  est_cmd->add_flag("--header", est_header);
  est_cmd->add_option("--coord", est_coord, "coordinate used for the marginal fit");
  est_cmd->add_option("--kn", est_kn, "number of upper order statistics");
  est_cmd->add_option("--Tn", est_tn, "spacing normaliser");
  est_cmd->add_option("--p", est_p, "known tail constant p")->required();
  est_cmd->add_option("--N", est_N, "known polynomial exponent N")->required();
  est_cmd->add_option("--t", est_t, "threshold for the plug-in survivor estimate");
  est_cmd->add_option("--x", est_x, "offset for the plug-in excess estimate");

  // ---- validate
  auto* val_cmd = app.add_subcommand("validate", "run a Monte Carlo validation scenario");
  std::string val_scenario;
  std::uint64_t val_seed = 20240801;
  double val_scale = 1.0;
  val_cmd->add_option("--scenario", val_scenario)->required()->check(CLI::IsMember(kotz::scenario_names()));
  val_cmd->add_option("--seed", val_seed);
  val_cmd->add_option("--scale", val_scale, "shrink Monte Carlo sizes by this factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  json report;
  report["version"] = kotz::kVersion;
  int exit_code = 0;

  if (qp_cmd->parsed()) {
    const auto spec = kotz::CorrelationSpec::factorize(kotz::read_matrix(qp_sigma, qp_header));
    const kotz::Vector a = kotz::parse_vector(qp_a);
    report["command"] = "qp";
    report["config"] = {{"sigma", qp_sigma}, {"a", kotz::to_json(a)}};
    report.update(qp_to_json(kotz::solve(spec, a)));
  } else if (tail_cmd->parsed()) {
    const auto spec = kotz::CorrelationSpec::factorize(kotz::read_matrix(tail_sigma, tail_header));
    const kotz::Vector a = kotz::parse_vector(tail_a);
    kotz::Vector x;
    if (!tail_x.empty()) x = kotz::parse_vector(tail_x);
    const kotz::KotzParams params = tail_params.resolve(spec.dim());
    const kotz::TailExpansion expansion =
        kotz::tail_asymptotic({kotz::KotzModel{params, spec}, a, x});
    report["command"] = "tail";
    report["config"] = {{"sigma", tail_sigma},
                        {"a", kotz::to_json(a)},
                        {"x", x.size() ? kotz::to_json(x) : json::array()},
                        {"t", tail_t},
                        {"params", tail_params.to_json(params)}};
    report["K"] = expansion.constant;
    report["beta"] = expansion.poly_exponent;
    report["c"] = expansion.exp_coefficient;
    report["delta"] = expansion.exp_power;
    report["qp"] = qp_to_json(expansion.qp);
    report["gauss_factor"] = expansion.gauss_factor.value;
    report["gauss_factor_error"] = expansion.gauss_factor.error;
    report["value"] = expansion.value_at(tail_t);
    report["log10_value"] = expansion.log_value_at(tail_t) / std::numbers::ln10;
  } else if (marg_cmd->parsed()) {
    const kotz::KotzParams params = marg_params.resolve(marg_k);
    const double value = kotz::marginal_tail(params, marg_k, marg_t);
    report["command"] = "marginal-tail";
    report["config"] = {{"k", marg_k}, {"t", marg_t}, {"params", marg_params.to_json(params)}};
    report["value"] = value;
    report["log10_value"] = std::log10(value);
  } else if (excess_cmd->parsed()) {
    const auto spec =
        kotz::CorrelationSpec::factorize(kotz::read_matrix(excess_sigma, excess_header));
    const kotz::Vector a = kotz::parse_vector(excess_a);
    const kotz::ExcessLimitLaw law = kotz::excess_limit(spec, a);
    report["command"] = "excess";
    report["config"] = {{"sigma", excess_sigma}, {"a", kotz::to_json(a)}};
    report["I"] = kotz::to_json(law.I);
    report["J"] = kotz::to_json(law.J);
    report["binding_J"] = kotz::to_json(law.binding_J);
    report["rates"] = kotz::to_json(law.rates);
    report["denominator"] = law.denom;
    if (law.cond_law) report["conditional_cov"] = kotz::to_json(law.cond_law->cov);
    if (!excess_L.empty()) {
      const kotz::IndexSet L = parse_index_set(excess_L, spec.dim());
      const kotz::Vector x = kotz::parse_vector(excess_x);
      report["config"]["L"] = kotz::to_json(L);
      report["config"]["x"] = kotz::to_json(x);
      report["survivor"] = kotz::excess_survivor(law, L, x);
    }
  } else if (profile_cmd->parsed()) {
    const auto spec =
        kotz::CorrelationSpec::factorize(kotz::read_matrix(profile_sigma, profile_header));
    const kotz::Vector a = kotz::parse_vector(profile_a);
    const kotz::IndexSet I = parse_index_set(profile_I, spec.dim());
    const kotz::KotzParams params = profile_params.resolve(spec.dim());
    const auto mode = profile_mode == "fixed" ? kotz::ProfileMode::kFixed
                                              : kotz::ProfileMode::kExceedance;
    const kotz::ConditionalProfile profile =
        kotz::conditional_profile(spec, a, I, params, profile_t, mode);
    report["command"] = "profile";
    report["config"] = {{"sigma", profile_sigma},
                        {"a", kotz::to_json(a)},
                        {"I", kotz::to_json(I)},
                        {"t", profile_t},
                        {"mode", profile_mode},
                        {"params", profile_params.to_json(params)}};
    report["center"] = kotz::to_json(profile.center);
    report["scale"] = profile.scale;
    report["conditional_cov"] = kotz::to_json(profile.law.cov);
  } else if (hr_cmd->parsed()) {
    const kotz::KotzParams params = hr_params.resolve(hr_k);
    const kotz::HrNorming norming = kotz::hr_norming(params, hr_n);
    report["command"] = "hr";
    report["config"] = {{"gamma", hr_gamma}, {"n", hr_n}, {"params", hr_params.to_json(params)}};
    report["a_n"] = norming.a_n;
    report["b_n"] = norming.b_n;
    report["sigma12"] = kotz::hr_corr_for_gamma(params, hr_gamma, hr_n);
    if (hr_x && hr_y) {
      report["x"] = *hr_x;
      report["y"] = *hr_y;
      report["G"] = kotz::hr_cdf(*hr_x, *hr_y, hr_gamma);
    }
  } else if (sample_cmd->parsed()) {
    const auto spec =
        kotz::CorrelationSpec::factorize(kotz::read_matrix(sample_sigma, sample_header));
    const kotz::KotzParams params = sample_params.resolve(spec.dim());
    const kotz::Matrix draws =
        kotz::sample_kotz(kotz::KotzModel{params, spec}, sample_n, sample_seed);
    kotz::write_matrix_csv(sample_out, draws);
    report["command"] = "sample";
    report["config"] = {{"sigma", sample_sigma}, {"n", sample_n}, {"seed", sample_seed}};
    report["params"] = sample_params.to_json(params);
    report["sigma"] = kotz::to_json(spec.sigma());
    report["n"] = sample_n;
    report["seed"] = sample_seed;
    report["csv"] = sample_out;
    std::ofstream meta(sample_out + ".meta.json");
    if (!meta) throw kotz::Error("cannot write sidecar for " + sample_out);
    meta << report.dump(2) << "\n";
  } else if (est_cmd->parsed()) {
    const kotz::SampleMatrix sample(kotz::read_matrix(est_sample, est_header));
    const kotz::TailFit fit = kotz::fit_tail(sample, est_coord, est_kn, est_tn);
    const kotz::CorrelationSpec corr = kotz::corr_estimate(sample);
    report["command"] = "estimate";
    report["config"] = {{"sample", est_sample}, {"coord", est_coord},
                        {"p", est_p},           {"N", est_N}};
    report["n"] = sample.n();
    report["k"] = sample.k();
    report["delta_hat"] = fit.delta_hat;
    report["q_hat"] = fit.q_hat;
    report["k_n"] = fit.k_n;
    report["T_n"] = fit.T_n;
    report["correlation"] = kotz::to_json(corr.sigma());
    const kotz::KotzParams fitted{est_p, fit.q_hat, fit.delta_hat, est_N};
    if (est_t) {
      report["t"] = *est_t;
      report["survivor_estimate"] = kotz::survivor_estimate(fitted, corr, *est_t);
      if (!est_x.empty()) {
        const kotz::Vector x = kotz::parse_vector(est_x);
        report["x"] = kotz::to_json(x);
        report["excess_estimate"] = kotz::excess_estimate(fitted, corr, *est_t, x);
      }
    }
    std::ifstream meta(est_sample + ".meta.json");
    if (meta) {
      json side;
      meta >> side;
      report["sample_meta"] = side;
    }
  } else if (val_cmd->parsed()) {
    const kotz::ValidationReport result = kotz::run_scenario(val_scenario, val_seed, val_scale);
    report.update(result.to_json());
    report["command"] = "validate";
    exit_code = result.pass ? 0 : 2;
  }

  emit(report, out_path);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kotz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
