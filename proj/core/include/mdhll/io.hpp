#pragma once

// Snapshots (CSV and legacy VTK), cross sections, schlieren field and the
// symmetry metric used for the explosion problem.

#include <map>
#include <string>
#include <vector>

#include "mdhll/grid.hpp"

namespace mdhll {

struct SnapshotCell {
  int i = 0, j = 0;
  double x = 0.0, y = 0.0;
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
  double D = 0.0, E = 0.0;
  double ln_rho = 0.0, ln_p = 0.0;
  /// |grad ln rho| normalized to [0, 1] over the snapshot.
  double schlieren = 0.0;
};

struct Snapshot {
  double time = 0.0;
  int nx = 0, ny = 0;
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  /// Extra "# key=value" header entries (problem, step, ...).
  std::map<std::string, std::string> header;
  /// Row-major, j outer.
  std::vector<SnapshotCell> cells;

  const SnapshotCell& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nx + i]; }
  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
};

/// Recovers primitives of every interior cell. Throws DomainError when a
/// cell is inadmissible.
Snapshot make_snapshot(const Field& field, double time,
                       const std::map<std::string, std::string>& header = {});

/// |grad ln rho| by central differences (one-sided on the domain edge),
/// divided by its maximum; all zeros for a uniform density.
std::vector<double> schlieren_field(const std::vector<double>& ln_rho, int nx, int ny, double dx,
                                    double dy);

/// 17 significant digits, so reading the file back is bit-exact.
void write_snapshot_csv(const Snapshot& s, const std::string& path);
Snapshot read_snapshot_csv(const std::string& path);
/// Legacy ASCII structured points at the cell centres.
void write_snapshot_vtk(const Snapshot& s, const std::string& path);

enum class LineKind { YAxis, Diagonal };

struct LineSpec {
  LineKind kind = LineKind::Diagonal;
  /// Optional x window for the diagonal, inclusive.
  bool windowed = false;
  double x_lo = 0.0, x_hi = 0.0;
};

/// "y-axis", "y=x", or "y=x:lo,hi" (diagonal restricted to x in [lo, hi]).
LineSpec parse_line(const std::string& text);

struct ProfileSample {
  /// Coordinate along the line: y for the y-axis, x for the diagonal.
  double s = 0.0;
  double x = 0.0, y = 0.0;
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
  double ln_rho = 0.0, ln_p = 0.0;
};

/// y-axis: the cell column nearest x = 0 (the mean of the two columns when
/// x = 0 is a cell edge). Diagonal: the cells (i, i), which needs nx == ny
/// and a square domain.
std::vector<ProfileSample> cross_section(const Snapshot& s, const LineSpec& line);
void write_profile_csv(const std::vector<ProfileSample>& profile, const std::string& path);

/// l2 distance between the density along the y-axis and along y = x, both as
/// functions of the signed distance from the origin; the diagonal profile is
/// linearly interpolated to the y-axis radii.
double symmetry_metric(const Snapshot& s);

}  // namespace mdhll
