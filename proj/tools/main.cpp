// mdhll: command-line driver for the relativistic hydrodynamics solver.
//
//   mdhll run --config run.json -o nx=200 -o order=5
//   mdhll convergence --config sine.json --meshes 20,40,80
//   mdhll list-problems
//   mdhll cross-section --snapshot out/snapshot_0001.csv --line y=x

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mdhll/driver.hpp"
#include "mdhll/errors.hpp"
#include "mdhll/io.hpp"

using namespace mdhll;

namespace {

RunConfig make_config(const std::string& path, const std::vector<std::string>& overrides) {
  RunConfig c = path.empty() ? RunConfig{} : load_config(path);
  for (const std::string& o : overrides) c.apply_override(o);
  c.validate();
  return c;
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides) {
  const RunConfig c = make_config(config_path, overrides);
  const RunResult r = run(c);
  if (r.exit_code == kExitOk) {
    std::cout << "completed " << c.problem << ": " << r.steps << " steps to t = " << r.t << ", "
              << r.snapshots.size() << " snapshot(s) in " << c.output_dir << '\n';
  } else {
    std::cerr << r.message << '\n';
  }
  return r.exit_code;
}

int cmd_convergence(const std::string& config_path, const std::vector<std::string>& overrides,
                    const std::vector<int>& meshes, const std::string& json_path) {
  const RunConfig c = make_config(config_path, overrides);
  const std::vector<ConvergenceRow> rows = convergence(c, meshes);
  std::cout << format_convergence_table(rows);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot write '" + json_path + "'");
    out << convergence_to_json(rows) << '\n';
  }
  return kExitOk;
}

int cmd_cross_section(const std::string& snapshot, const std::string& line, const std::string& output,
                      bool symmetry) {
  const Snapshot s = read_snapshot_csv(snapshot);
  const std::vector<ProfileSample> profile = cross_section(s, parse_line(line));
  if (output.empty()) {
    std::cout << "s,x,y,rho,u,v,p,ln_rho,ln_p\n";
    for (const ProfileSample& p : profile) {
      std::cout << p.s << ',' << p.x << ',' << p.y << ',' << p.rho << ',' << p.u << ',' << p.v << ','
                << p.p << ',' << p.ln_rho << ',' << p.ln_p << '\n';
    }
  } else {
    write_profile_csv(profile, output);
  }
  if (symmetry) std::cerr << "symmetry metric: " << symmetry_metric(s) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidimensional HLL finite-volume solver for 2D relativistic hydrodynamics"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;

  auto* run_cmd = app.add_subcommand("run", "Run a simulation");
  run_cmd->add_option("-c,--config", config_path, "JSON run configuration (or a run manifest)");
  run_cmd->add_option("-o,--override", overrides, "key=value override, repeatable");

  std::vector<int> meshes;
  std::string json_path;
  auto* conv_cmd = app.add_subcommand("convergence", "Errors and orders on a sequence of N x N meshes");
  conv_cmd->add_option("-c,--config", config_path, "JSON run configuration");
  conv_cmd->add_option("-o,--override", overrides, "key=value override, repeatable");
  conv_cmd->add_option("--meshes", meshes, "Mesh sizes, e.g. 20,40,80")->delimiter(',')->required();
  conv_cmd->add_option("--json", json_path, "Also write the table as JSON");

  app.add_subcommand("list-problems", "List the available problem ids");

  std::string snapshot;
  std::string line = "y=x";
  std::string output;
  bool symmetry = false;
  auto* cs_cmd = app.add_subcommand("cross-section", "Sample a CSV snapshot along a line");
  cs_cmd->add_option("--snapshot", snapshot, "CSV snapshot")->required();
  cs_cmd->add_option("--line", line, "y-axis, y=x or y=x:lo,hi");
  cs_cmd->add_option("--output", output, "Profile CSV (stdout when omitted)");
  cs_cmd->add_flag("--symmetry", symmetry, "Also print the y-axis / y=x symmetry metric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, overrides);
    if (*conv_cmd) return cmd_convergence(config_path, overrides, meshes, json_path);
    if (*cs_cmd) return cmd_cross_section(snapshot, line, output, symmetry);
    for (const std::string& id : problem_ids()) {
      const ProblemSpec p = make_problem(id);
      std::cout << id << "  [" << p.x0 << ", " << p.x1 << "] x [" << p.y0 << ", " << p.y1
                << "]  Gamma = " << p.gamma << "  t_end = " << p.t_end
                << (p.has_exact() ? "  (exact solution)" : "") << '\n';
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PcpFailure& e) {
    std::cerr << e.what() << '\n';
    return kExitPcp;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
