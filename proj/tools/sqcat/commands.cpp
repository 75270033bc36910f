#include "commands.hpp"

#include "sqcat/sqcat.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sqcat::cli {

using nlohmann::json;

namespace {

const HilbertDims kVerifyIdentityDims{40, 10};

Check make_check(const std::string& suite, const std::string& name, double residual, double tolerance) {
  Check c{suite, name, residual, tolerance, std::isfinite(residual) && residual <= tolerance, ""};
  if (!std::isfinite(residual)) c.message = "non-finite residual";
  return c;
}

// Any exception from the body becomes a failed check carrying its message.
void guarded(std::vector<Check>& checks, const std::string& suite, const std::string& name, double tolerance,
             const std::function<double()>& body) {
  try {
    checks.push_back(make_check(suite, name, body(), tolerance));
  } catch (const std::exception& e) {
    Check c{suite, name, std::nan(""), tolerance, false, e.what()};
    checks.push_back(c);
  }
}

void write_file(const std::string& dir, const std::string& name, const std::string& contents) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

std::string header(const ScenarioConfig& c, const std::string& kind) {
  std::string h = "# sqcat " + std::string(kVersion) + " " + kind + "\n";
  h += "# config_hash " + c.hash() + "\n";
  h += "# params_hash " + params_hash(c.params) + "\n";
  return h;
}

ScenarioConfig resolve_config(const CommandOptions& opts) {
  if (opts.config_path) return load_config(*opts.config_path, opts.preset);
  return default_config(opts.preset.value_or(Preset::Default));
}

std::string row(std::initializer_list<double> values) {
  std::string s;
  bool first = true;
  for (const double v : values) {
    if (!first) s += ',';
    s += format_double(v);
    first = false;
  }
  return s + "\n";
}

double relative_hermiticity(const Matrix& m) {
  const double n = m.norm();
  return n == 0.0 ? 0.0 : hermiticity_defect(m) / n;
}

double jc_relative_residual(const PhysParams& p, const HilbertDims& dims) {
  const auto idx = joint_indices_up_to(dims, 10);
  return spectral_norm(restrict(jc_dropped_terms(p, dims), idx)) /
         spectral_norm(restrict(jc_drive_term(p, dims), idx));
}

double rotation_relative_residual(const PhysParams& p, const HilbertDims& dims) {
  const auto r = build_small_rotations(p, dims);
  const Matrix u = r.combined();
  const Matrix jc = build_H_JC(p, dims);
  return (u * jc * u.adjoint() - build_H_eff(p, dims)).norm() / jc.norm();
}

}  // namespace

std::string format_short(double v) {
  if (!std::isfinite(v)) return format_double(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json VerifyReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json j{{"suite", c.suite}, {"name", c.name}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
    if (!c.message.empty()) j["message"] = c.message;
    checks_json.push_back(j);
  }
  return json{{"version", kVersion},
              {"config_hash", config_hash},
              {"suites", suites},
              {"checks", checks_json},
              {"warnings", warnings},
              {"status", passed() ? "pass" : "fail"}};
}

std::vector<Check> verify_suite(const ScenarioConfig& config, const std::string& suite) {
  const PhysParams& p = config.params;
  const HilbertDims& dims = config.dims;
  const HilbertDims& idims = kVerifyIdentityDims;
  const auto interior = interior_joint_indices(idims);
  std::vector<Check> checks;

  guarded(checks, suite, "hamiltonians_hermitian", 1e-10, [&] {
    double worst = 0.0;
    worst = std::max(worst, relative_hermiticity(build_H_full(p, idims)));
    worst = std::max(worst, relative_hermiticity(build_H_T(p, idims)));
    worst = std::max(worst, relative_hermiticity(build_H_JC(p, idims)));
    worst = std::max(worst, relative_hermiticity(build_H_SS(p, idims)));
    return worst;
  });
  guarded(checks, suite, "conjugation_identity", 1e-6, [&] {
    const Matrix h = build_H_full(p, idims);
    const Matrix t = build_T(p, idims);
    return restrict(t * h * t.adjoint() - build_H_T(p, idims), interior).norm() / h.norm();
  });
  guarded(checks, suite, "unitarity_T", 1e-8,
          [&] { return restricted_unitarity_defect(build_T(p, idims), interior); });
  guarded(checks, suite, "unitarity_small_rotations", 1e-8, [&] {
    const auto r = build_small_rotations(p, idims);
    return std::max(restricted_unitarity_defect(r.u1, interior), restricted_unitarity_defect(r.u2, interior));
  });
  guarded(checks, suite, "unitarity_UR", 1e-8,
          [&] { return restricted_unitarity_defect(build_UR(idims), interior); });
  guarded(checks, suite, "unitarity_propagator", 1e-8, [&] {
    const Propagator prop(build_H_SS(p, idims));
    double worst = 0.0;
    for (const double t : {0.5, config.grid.t_end})
      worst = std::max(worst, restricted_unitarity_defect(prop.at(t), interior));
    return worst;
  });
  guarded(checks, suite, "jc_dropped_spectral_norm_over_EJ", 1.5, [&] {
    const auto idx = joint_indices_up_to(idims, 10);
    return spectral_norm(restrict(jc_dropped_terms(p, idims), idx)) / p.e_j;
  });
  guarded(checks, suite, "small_rotation_bound_ratio", 1.0, [&] {
    const auto r = build_small_rotations(p, idims);
    const Matrix u = r.combined();
    const Matrix jc = build_H_JC(p, idims);
    const double residual = (u * jc * u.adjoint() - build_H_eff(p, idims)).norm();
    const double eps_sum = std::abs(r.eps1) + std::abs(r.eps2);
    return residual / (4.0 * eps_sum * eps_sum * jc.norm());
  });
  guarded(checks, suite, "qubit_rotation_identity", 1e-10, [&] {
    const Matrix ur = build_UR(idims);
    const Matrix hss = build_H_SS(p, idims);
    return (ur * build_H_squeeze(p, idims) * ur.adjoint() - hss).norm() / hss.norm();
  });
  guarded(checks, suite, "squeeze_coefficient_vs_xi_squared", 1e-14, [&] {
    const double xi2 = xi_squared(p);
    return std::abs(squeeze_coefficient(p) + xi2) / xi2;
  });
  guarded(checks, suite, "oracle_vs_propagator_infidelity", 1e-8, [&] {
    const Propagator prop(build_H_SS(p, dims));
    const SqueezedCatOracle oracle(config.gamma_amp, p, dims);
    const JointState psi0 = product_state(Qubit::g, coherent_state(config.gamma_amp, dims));
    double worst = 0.0;
    int compared = 0;
    for (const double t : config.grid.times()) {
      const JointState exact{dims, prop.apply(psi0.amplitudes, t)};
      if (leakage(exact) >= kAnalyticLeakageLimit) continue;
      JointState analytic;
      try {
        analytic = oracle.psi_TR(t);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::TruncationLeakage) continue;
        throw;
      }
      worst = std::max(worst, 1.0 - fidelity(exact, analytic));
      ++compared;
    }
    if (compared == 0) throw Error(ErrorKind::TruncationLeakage, "no grid point below the leakage limit");
    return worst;
  });
  guarded(checks, suite, "analytic_norm", 1e-8, [&] {
    const SqueezedCatOracle oracle(config.gamma_amp, p, dims);
    double worst = 0.0;
    for (const double t : config.grid.times()) {
      try {
        worst = std::max(worst, std::abs(oracle.psi_TR(t).amplitudes.norm() - 1.0));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TruncationLeakage) throw;
      }
    }
    return worst;
  });
  guarded(checks, suite, "squeezing_law", 1e-6, [&] {
    const Propagator prop(h_ss_field_block(p, dims, +1, 0.0));
    const FieldState vac = fock_state(0, dims);
    double worst = 0.0;
    for (const double r : {0.1, 0.5, 1.0}) {
      const auto stats = quadrature_stats(evolve_field(prop, vac, r / (2.0 * squeeze_rate(p))));
      worst = std::max(worst, std::abs(stats.min_var_over_rotations - std::exp(-2.0 * r) / 4.0));
    }
    return worst;
  });
  guarded(checks, suite, "collapse_probability_sum", 1e-10, [&] {
    const SqueezedCatOracle oracle(config.gamma_amp, p, dims);
    const double t = std::min(1.0, config.grid.t_end);
    const JointState psi = oracle.psi_TR(t);
    return std::abs(outcome_probability(psi, Qubit::g) + outcome_probability(psi, Qubit::e) - 1.0);
  });
  guarded(checks, suite, "collapse_vs_phi_plus_infidelity", 1e-10, [&] {
    const SqueezedCatOracle oracle(config.gamma_amp, p, dims);
    const double t = std::min(1.0, config.grid.t_end);
    const auto g = measure_qubit(oracle.psi_TR(t), Qubit::g);
    return 1.0 - fidelity(g.collapsed.amplitudes, oracle.components(t).phi_plus);
  });
  guarded(checks, suite, "vacuum_wigner_origin", 1e-6,
          [&] { return std::abs(wigner_at(fock_state(0, dims), 0.0) - 2.0 / M_PI); });
  return checks;
}

int run_verify(const CommandOptions& opts, std::ostream& out) {
  std::vector<std::pair<std::string, ScenarioConfig>> runs;
  if (!opts.config_path && !opts.preset) {
    for (const Preset preset : {Preset::Default, Preset::DeepSqueeze})
      runs.emplace_back(to_string(preset), default_config(preset));
  } else {
    const ScenarioConfig c = resolve_config(opts);
    runs.emplace_back(opts.config_path ? std::string("config") : std::string(to_string(c.preset)), c);
  }

  VerifyReport report;
  std::string hashes;
  for (const auto& [suite, config] : runs) {
    report.suites.push_back(suite);
    hashes += config.hash();
    for (auto& c : verify_suite(config, suite)) report.checks.push_back(std::move(c));
    for (const auto& w : jc_regime_warnings(config.params)) report.warnings.push_back(suite + ": " + w);
    for (const auto& w : squeeze_regime_warnings(config.params)) report.warnings.push_back(suite + ": " + w);
  }
  report.config_hash = runs.size() == 1 ? runs.front().second.hash() : fnv1a_hex(hashes);

  write_file(opts.out_dir, "verify_report.json", report.to_json().dump(2) + "\n");

  out << std::left << std::setw(14) << "suite" << std::setw(36) << "check" << std::setw(26) << "residual"
      << std::setw(12) << "tolerance"
      << "status\n";
  for (const auto& c : report.checks) {
    out << std::setw(14) << c.suite << std::setw(36) << c.name << std::setw(26) << format_short(c.residual)
        << std::setw(12) << format_short(c.tolerance) << (c.passed ? "PASS" : "FAIL") << "\n";
    if (!c.message.empty()) out << "    " << c.message << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  out << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? kExitPass : kExitCheckFailure;
}

int run_evolve(const CommandOptions& opts, std::ostream& out) {
  const ScenarioConfig config = resolve_config(opts);
  const PhysParams& p = config.params;
  const HilbertDims& dims = config.dims;

  const JointState psi0 = product_state(Qubit::g, coherent_state(config.gamma_amp, dims));
  const Trajectory traj = evolve(build_H_SS(p, dims), psi0, config.grid);
  const SqueezedCatOracle oracle(config.gamma_amp, p, dims);

  std::string csv = header(config, "timeseries");
  csv += "t,fidelity_vs_analytic,p_g,p_e,var_x_g,var_p_g,min_var_g,leakage\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const JointState& psi = traj.states[k];
    double fid = std::nan("");
    try {
      fid = fidelity(psi, oracle.psi_TR(traj.times[k]));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TruncationLeakage) throw;
    }
    const double pg = outcome_probability(psi, Qubit::g);
    const double pe = outcome_probability(psi, Qubit::e);
    QuadratureStats stats;
    stats.var_x = stats.var_p = stats.min_var_over_rotations = std::nan("");
    if (pg >= kMinCollapseProbability) stats = quadrature_stats(measure_qubit(psi, Qubit::g).collapsed);
    csv += row({traj.times[k], fid, pg, pe, stats.var_x, stats.var_p, stats.min_var_over_rotations, traj.leakages[k]});
  }
  if (traj.aborted()) {
    csv += "# LeakageAbort t=" + format_double(*traj.aborted_at) + " leakage=" + format_double(traj.abort_leakage) +
           " limit=" + format_double(kTrajectoryLeakageLimit) + "\n";
  }
  write_file(opts.out_dir, "timeseries.csv", csv);

  if (config.outputs.count("wigner")) {
    CommandOptions w = opts;
    run_wigner(w, out);
  }
  if (config.outputs.count("sweep")) run_sweep(opts, out);

  out << "wrote " << traj.states.size() << " rows to " << (std::filesystem::path(opts.out_dir) / "timeseries.csv").string()
      << "\n";
  if (traj.aborted()) {
    out << "LeakageAbort at t = " << format_double(*traj.aborted_at) << "\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}

int run_wigner(const CommandOptions& opts, std::ostream& out) {
  ScenarioConfig config = resolve_config(opts);
  if (opts.time) {
    config.wigner.t = *opts.time;
    config.wigner.squeeze_r.reset();
  }
  if (opts.outcome) config.wigner.outcome = *opts.outcome;
  validate(config);
  const double t = config.wigner_time();
  if (t < config.grid.t_start || t > config.grid.t_end)
    throw ConfigError("wigner time " + format_double(t) + " lies outside the time grid");

  const SqueezedCatOracle oracle(config.gamma_amp, config.params, config.dims);
  const auto m = measure_qubit(oracle.psi_TR(t), config.wigner.outcome);
  const WignerGrid grid = wigner(m.collapsed, config.wigner.spec);

  std::string csv = header(config, "wigner");
  csv += std::string("# outcome ") + (config.wigner.outcome == Qubit::g ? "g" : "e") + "\n";
  csv += "# t " + format_double(t) + "\n";
  csv += "# probability " + format_double(m.probability) + "\n";
  csv += "x,p,w\n";
  const auto& spec = config.wigner.spec;
  for (int i = 0; i < spec.resolution; ++i)
    for (int j = 0; j < spec.resolution; ++j) csv += row({spec.x_at(i), spec.p_at(j), grid.values(i, j)});
  write_file(opts.out_dir, "wigner.csv", csv);
  out << "wrote wigner grid (min " << format_double(grid.min()) << ", max " << format_double(grid.max()) << ") to "
      << (std::filesystem::path(opts.out_dir) / "wigner.csv").string() << "\n";
  return kExitPass;
}

int run_sweep(const CommandOptions& opts, std::ostream& out) {
  const ScenarioConfig config = resolve_config(opts);
  const HilbertDims chain_dims = kVerifyIdentityDims;
  const double r_target = config.sweep.r_target;
  bool crossings_ok = true;

  std::string csv = header(config, "sweep");
  csv += "# parameter " + config.sweep.parameter + " r_target " + format_double(r_target) + "\n";
  csv += "beta,hbar_omega,xi_squared,t_star,t_star_crossing,chain_residual_jc,chain_residual_rot\n";
  std::string notes;
  for (const double v : config.sweep.values) {
    PhysParams p = config.params;
    if (config.sweep.parameter == "beta")
      p.beta = v;
    else
      p.hbar_omega = v;
    p.validate();
    const double xi2 = xi_squared(p);
    const double t_star = r_target / (2.0 * squeeze_rate(p));

    // First grid point where the omega-stripped evolved vacuum reaches the
    // target variance.
    const TimeGrid grid{0.0, 2.0 * t_star, config.grid.n_points};
    const Propagator prop(h_ss_field_block(p, config.dims, +1, 0.0));
    const FieldState vac = fock_state(0, config.dims);
    const double threshold = std::exp(-2.0 * r_target) / 4.0;
    double crossing = std::nan("");
    for (const double t : grid.times()) {
      if (quadrature_stats(evolve_field(prop, vac, t)).min_var_over_rotations <= threshold * (1.0 + 1e-12)) {
        crossing = t;
        break;
      }
    }
    if (!(std::abs(crossing - t_star) <= 2.0 * grid.step())) crossings_ok = false;

    const double jc = jc_relative_residual(p, chain_dims);
    double rot = std::nan("");
    try {
      rot = rotation_relative_residual(p, chain_dims);
    } catch (const Error& e) {
      notes += "# " + config.sweep.parameter + "=" + format_double(v) + ": chain_residual_rot undefined: " + e.what() +
               "\n";
    }
    csv += row({p.beta.real(), p.hbar_omega, xi2, t_star, crossing, jc, rot});
  }
  csv += notes;
  write_file(opts.out_dir, "sweep.csv", csv);
  out << "wrote " << config.sweep.values.size() << " sweep rows to "
      << (std::filesystem::path(opts.out_dir) / "sweep.csv").string() << "\n";
  if (!crossings_ok) {
    out << "variance crossing missed t_star by more than two grid steps\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}

int run_command(const std::string& name, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (name == "verify") return run_verify(opts, out);
    if (name == "evolve") return run_evolve(opts, out);
    if (name == "wigner") return run_wigner(opts, out);
    if (name == "sweep") return run_sweep(opts, out);
    err << "unknown command " << name << "\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace sqcat::cli
