#pragma once

// Uniform Cartesian mesh, cell-average storage with a ghost ring, boundary
// conditions and error norms.

#include <functional>
#include <vector>

#include "mdhll/state.hpp"

namespace mdhll {

class Mesh {
 public:
  Mesh(int nx, int ny, double x0, double x1, double y0, double y1);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x0() const { return x0_; }
  double x1() const { return x1_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double area() const { return (x1_ - x0_) * (y1_ - y0_); }

  /// Cell-centre coordinates; valid for ghost indices too.
  double xc(int i) const { return x0_ + (i + 0.5) * dx_; }
  double yc(int j) const { return y0_ + (j + 0.5) * dy_; }

 private:
  int nx_;
  int ny_;
  double x0_, x1_, y0_, y1_;
  double dx_, dy_;
};

enum class BoundaryKind { Periodic, Outflow, Reflecting, Inflow };

/// Condition on one side of the domain. Inflow writes a fixed state into
/// ghost cells whose centre coordinate along the side lies in [lo, hi] and
/// copies the nearest interior cell elsewhere.
struct SideCondition {
  BoundaryKind kind = BoundaryKind::Outflow;
  Primitive inflow;
  double lo = 0.0;
  double hi = 0.0;

  static SideCondition periodic() { return {BoundaryKind::Periodic, {}, 0.0, 0.0}; }
  static SideCondition outflow() { return {BoundaryKind::Outflow, {}, 0.0, 0.0}; }
  static SideCondition reflecting() { return {BoundaryKind::Reflecting, {}, 0.0, 0.0}; }
  static SideCondition inflow_window(const Primitive& state, double lo, double hi) {
    return {BoundaryKind::Inflow, state, lo, hi};
  }
};

struct BoundarySpec {
  SideCondition left;
  SideCondition right;
  SideCondition bottom;
  SideCondition top;

  static BoundarySpec all(const SideCondition& c) { return {c, c, c, c}; }

  /// Throws ConfigError when a periodic side has a non-periodic partner.
  void validate() const;
};

/// Cell averages of the conserved variables on a mesh plus `ghosts` layers of
/// ghost cells on every side (corner blocks included).
class Field {
 public:
  Field(const Mesh& mesh, const Eos& eos, const BoundarySpec& bc, int ghosts);

  const Mesh& mesh() const { return mesh_; }
  const Eos& eos() const { return eos_; }
  const BoundarySpec& bc() const { return bc_; }
  int ghosts() const { return ghosts_; }
  int nx() const { return mesh_.nx(); }
  int ny() const { return mesh_.ny(); }

  /// Cell (i, j) with -ghosts <= i < nx + ghosts and likewise for j.
  Conserved& operator()(int i, int j) { return data_[index(i, j)]; }
  const Conserved& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Row stride of the underlying storage (distance between (i, j) and (i, j+1)).
  int stride() const { return mesh_.nx() + 2 * ghosts_; }
  int index(int i, int j) const { return (j + ghosts_) * stride() + (i + ghosts_); }

  std::vector<Conserved>& data() { return data_; }
  const std::vector<Conserved>& data() const { return data_; }

  /// Fills interior cells from primitives at cell centres.
  void set_interior(const std::function<Primitive(double x, double y)>& init);

  /// Fills interior cells with averages of the conserved variables computed
  /// by an n x n tensor Gauss-Legendre rule (1 <= n <= 5).
  void set_interior_averages(const std::function<Primitive(double x, double y)>& init, int n);

  /// Sum over interior cells of U * dx * dy.
  Conserved totals() const;

  /// Smallest interior D and q values.
  double min_density() const;
  double min_q() const;

 private:
  Mesh mesh_;
  Eos eos_;
  BoundarySpec bc_;
  int ghosts_;
  std::vector<Conserved> data_;
};

/// Recovered fluid states of every cell within `layers` of the interior
/// (layers <= field.ghosts()). Recovery is the expensive part of a flux
/// evaluation, so each cell is recovered once per stage.
class StateGrid {
 public:
  StateGrid(const Field& field, int layers);

  const FluidState& operator()(int i, int j) const {
    return states_[static_cast<std::size_t>(j + layers_) * stride_ + (i + layers_)];
  }
  int layers() const { return layers_; }

 private:
  int layers_;
  std::size_t stride_;
  std::vector<FluidState> states_;
};

/// Populates every ghost cell from the interior and the boundary spec. The
/// x-sides are filled over interior rows first, then the y-sides over all
/// columns, which also fills the corner blocks.
void fill_ghosts(Field& field);

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Volume-normalized norms of the per-cell errors e(i, j) over the interior:
/// l1 = sum|e| dx dy / area, l2 = sqrt(sum e^2 dx dy / area), linf = max|e|.
ErrorNorms error_norms(const Mesh& mesh, const std::function<double(int i, int j)>& error);

}  // namespace mdhll
