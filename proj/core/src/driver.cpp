#include "mdhll/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mdhll/errors.hpp"
#include "mdhll/io.hpp"

namespace mdhll {

namespace {

using nlohmann::json;

struct Extremes {
  double rho = std::numeric_limits<double>::infinity();
  double p = std::numeric_limits<double>::infinity();
};

Extremes primitive_extremes(const Field& f) {
  Extremes e;
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      const Primitive w = recover_primitive(f(i, j), f.eos());
      e.rho = std::min(e.rho, w.rho);
      e.p = std::min(e.p, w.p);
    }
  }
  return e;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const RunConfig& validated(const RunConfig& c) {
  c.validate();
  return c;
}

}  // namespace

double min_pressure(const Field& field) { return primitive_extremes(field).p; }

Simulation::Simulation(const RunConfig& c)
    : problem(make_problem(validated(c).problem)),
      config(c),
      field(initial_field(problem, c.nx, c.ny, c.order)) {}

double Simulation::stable_dt() const {
  const double dt = config.order == 1 ? compute_dt_first(field, config.cfl)
                                      : compute_dt_high(field, config.cfl);
  return config.dt_shrink ? std::pow(dt, 5.0 / 3.0) : dt;
}

StepRecord Simulation::advance(double dt) {
  StepRecord r;
  r.step = step + 1;
  r.dt = dt;
  StepStats st;
  if (config.order == 1) {
    st = step_first_order(field, dt, {config.alpha, config.riemann});
  } else {
    HighOrderOptions opt;
    opt.alpha = config.alpha;
    opt.riemann = config.riemann;
    opt.weno = config.weno;
    opt.K = config.quad_nodes;
    opt.pcp = config.pcp;
    LimiterStats local;
    st = step_ssp_rk3(field, dt, opt, local);
    limiter += local;
    r.theta_scaling = local.scaling_fraction();
    r.theta_flux = local.flux_fraction();
  }
  step = r.step;
  t += dt;
  r.t = t;
  r.corners = st.corners;
  r.degenerate_corners = st.degenerate_corners;
  const Extremes e = primitive_extremes(field);
  r.min_rho = e.rho;
  r.min_p = e.p;
  return r;
}

void Simulation::run_until(double t_stop, const std::function<void(const StepRecord&)>& on_step) {
  while (t < t_stop) {
    if (config.max_steps > 0 && step >= config.max_steps) {
      throw NumericalError("step cap of " + std::to_string(config.max_steps) + " reached at t = " +
                           num(t));
    }
    const double remaining = t_stop - t;
    const double dt = stable_dt();
    const bool last = dt >= remaining;
    StepRecord r = advance(last ? remaining : dt);
    if (last) {
      t = t_stop;
      r.t = t_stop;
    }
    if (on_step) on_step(r);
  }
}

RunResult run(const RunConfig& config) {
  RunResult result;
  namespace fs = std::filesystem;
  json manifest;
  manifest["config"] = json::parse(config_to_json(config));
  manifest["execution"] = "serial";
  bool have_dir = false;
  try {
    config.validate();
    Simulation sim(config);
    json derived = {{"gamma", sim.problem.gamma},
                    {"dx", sim.field.mesh().dx()},
                    {"dy", sim.field.mesh().dy()},
                    {"t_end", sim.end_time()},
                    {"ghosts", sim.field.ghosts()}};
    for (const auto& [k, v] : sim.problem.metadata) derived[k] = v;
    manifest["derived"] = derived;

    fs::create_directories(config.output_dir);
    have_dir = true;
    const fs::path dir(config.output_dir);
    std::ofstream stats(dir / "stats.csv");
    if (!stats) throw ConfigError("cannot write stats.csv in '" + config.output_dir + "'");
    stats << "step,t,dt,min_rho,min_p,theta_scaling,theta_flux,corners,degenerate_corners\n";
    auto log = [&](const StepRecord& r) {
      stats << r.step << ',' << num(r.t) << ',' << num(r.dt) << ',' << num(r.min_rho) << ','
            << num(r.min_p) << ',' << num(r.theta_scaling) << ',' << num(r.theta_flux) << ','
            << r.corners << ',' << r.degenerate_corners << '\n';
      result.steps = r.step;
      result.t = r.t;
    };

    const double t_end = sim.end_time();
    std::vector<double> times;
    for (double t : config.snapshot_times) {
      if (t <= t_end) times.push_back(t);
    }
    times.push_back(t_end);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    const std::string ext = config.format == OutputFormat::Csv ? ".csv" : ".vtk";
    for (double target : times) {
      sim.run_until(target, log);
      const std::map<std::string, std::string> header = {{"problem", config.problem},
                                                         {"order", std::to_string(config.order)},
                                                         {"step", std::to_string(sim.step)}};
      const Snapshot snap = make_snapshot(sim.field, sim.t, header);
      char name[64];
      std::snprintf(name, sizeof name, "snapshot_%04zu", result.snapshots.size());
      const std::string path = (dir / (name + ext)).string();
      if (config.format == OutputFormat::Csv) {
        write_snapshot_csv(snap, path);
      } else {
        write_snapshot_vtk(snap, path);
      }
      result.snapshots.push_back(path);
    }
    result.steps = sim.step;
    result.t = sim.t;
    json lim = {{"cells", sim.limiter.cells},
                {"scaled_cells", sim.limiter.scaled_cells},
                {"edges", sim.limiter.edges},
                {"limited_edges", sim.limiter.limited_edges},
                {"stage_dt_violations", sim.limiter.stage_dt_violations}};
    manifest["limiter"] = lim;
    result.message = "completed";
  } catch (const ConfigError& e) {
    result.exit_code = kExitConfig;
    result.message = std::string("configuration error: ") + e.what();
  } catch (const PcpFailure& e) {
    result.exit_code = kExitPcp;
    result.message = std::string(e.what()) + " during step " + std::to_string(result.steps + 1) +
                     " (t = " + num(result.t) + ")";
  } catch (const std::exception& e) {
    result.exit_code = kExitNumerical;
    result.message = std::string("numerical error: ") + e.what() + " during step " +
                     std::to_string(result.steps + 1);
  }
  if (have_dir) {
    manifest["result"] = {{"exit_code", result.exit_code},
                          {"message", result.message},
                          {"steps", result.steps},
                          {"t", result.t},
                          {"snapshots", result.snapshots}};
    std::ofstream out(std::filesystem::path(config.output_dir) / "manifest.json");
    out << manifest.dump(2) << '\n';
  }
  return result;
}

std::vector<ConvergenceRow> convergence(const RunConfig& config, const std::vector<int>& meshes) {
  if (meshes.empty()) throw ConfigError("no meshes given");
  const ProblemSpec problem = make_problem(config.problem);
  if (!problem.has_exact()) throw ConfigError("problem '" + config.problem + "' has no exact solution");
  std::vector<ConvergenceRow> rows;
  for (int n : meshes) {
    RunConfig c = config;
    c.nx = c.ny = n;
    Simulation sim(c);
    sim.run_until(sim.end_time());
    const Field exact = exact_field(problem, n, n, sim.end_time());
    const ErrorNorms e = error_norms(sim.field.mesh(), [&](int i, int j) {
      return recover_primitive(sim.field(i, j), sim.field.eos()).rho -
             recover_primitive(exact(i, j), exact.eos()).rho;
    });
    ConvergenceRow r;
    r.n = n;
    r.l1 = e.l1;
    r.l2 = e.l2;
    r.linf = e.linf;
    r.theta_scaling = 100.0 * sim.limiter.scaling_fraction();
    r.theta_flux = 100.0 * sim.limiter.flux_fraction();
    r.steps = sim.step;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (rows.empty()) {
      r.l1_order = r.l2_order = r.linf_order = nan;
    } else {
      const ConvergenceRow& prev = rows.back();
      const double ratio = std::log2(static_cast<double>(n) / prev.n);
      r.l1_order = std::log2(prev.l1 / r.l1) / ratio;
      r.l2_order = std::log2(prev.l2 / r.l2) / ratio;
      r.linf_order = std::log2(prev.linf / r.linf) / ratio;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%6s %12s %7s %12s %7s %12s %7s %10s %10s\n", "N", "l1", "order",
                "l2", "order", "linf", "order", "theta1(%)", "theta2(%)");
  out << line;
  for (const ConvergenceRow& r : rows) {
    auto order = [](double o) {
      char b[16];
      if (std::isnan(o)) return std::string("--");
      std::snprintf(b, sizeof b, "%.2f", o);
      return std::string(b);
    };
    std::snprintf(line, sizeof line, "%6d %12.3e %7s %12.3e %7s %12.3e %7s %10.3g %10.3g\n", r.n, r.l1,
                  order(r.l1_order).c_str(), r.l2, order(r.l2_order).c_str(), r.linf,
                  order(r.linf_order).c_str(), r.theta_scaling, r.theta_flux);
    out << line;
  }
  return out.str();
}

std::string convergence_to_json(const std::vector<ConvergenceRow>& rows) {
  json arr = json::array();
  for (const ConvergenceRow& r : rows) {
    auto val = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
    arr.push_back({{"n", r.n},
                   {"l1", r.l1},
                   {"l1_order", val(r.l1_order)},
                   {"l2", r.l2},
                   {"l2_order", val(r.l2_order)},
                   {"linf", r.linf},
                   {"linf_order", val(r.linf_order)},
                   {"theta_scaling_percent", r.theta_scaling},
                   {"theta_flux_percent", r.theta_flux},
                   {"steps", r.steps}});
  }
  return arr.dump(2);
}

}  // namespace mdhll
