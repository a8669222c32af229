#pragma once

// Fifth-order WENO reconstruction of point values at Gauss-Lobatto nodes on
// cell edges, plus the scaling limiter that pulls them into the admissible
// set.

#include <array>
#include <utility>
#include <vector>

#include "mdhll/grid.hpp"

namespace mdhll {

/// K-point Gauss-Lobatto rule on the reference interval [-1/2, 1/2]. The
/// endpoints are nodes, so on a cell edge they coincide with cell corners.
struct GaussLobattoRule {
  int K = 4;
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< sum to one

  /// K in [2, 5]; ContractError otherwise.
  static GaussLobattoRule make(int K);
};

/// WENO-JS reconstruction of a point value at offset xi (in cell widths,
/// |xi| <= 1/2) from five consecutive cell averages centred on the target
/// cell. Linear weights are derived for the requested offset; offsets whose
/// linear weights are not all positive are rejected with ContractError.
class Weno5 {
 public:
  explicit Weno5(double xi, double epsilon = 1e-6);

  double operator()(const std::array<double, 5>& avg) const;

  double xi() const { return xi_; }
  const std::array<double, 3>& linear_weights() const { return linear_; }

 private:
  double xi_;
  double eps_;
  std::array<std::array<double, 3>, 3> coeffs_{};  // per sub-stencil
  std::array<double, 3> linear_{};
};

/// Values at the left (x_{i-1/2}) and right (x_{i+1/2}) interfaces of the
/// centre cell of a five-cell stencil.
std::pair<double, double> weno5_line(const std::array<double, 5>& avg);

enum class WenoMode { Characteristic, Componentwise };

/// Right and left eigenvector matrices (row-major, L = R^-1) of the flux
/// Jacobian along `axis` at a primitive state. Columns of R are ordered
/// lambda_min, two contact waves, lambda_max.
struct CharacteristicBasis {
  std::array<double, 16> R{};
  std::array<double, 16> L{};

  static CharacteristicBasis at(const Primitive& w, const Eos& eos, Axis axis);

  Conserved to_characteristic(const Conserved& u) const;
  Conserved from_characteristic(const Conserved& c) const;
};

enum class EdgeSide { Left = 0, Right = 1, Bottom = 2, Top = 3 };

/// Reconstructed point values of every cell within one ghost layer of the
/// interior. Each cell carries K values per edge, ordered along increasing
/// x or y; the corner values are shared, e.g. left[0] == bottom[0].
class CellPointValues {
 public:
  CellPointValues(int nx, int ny, int K);

  int K() const { return K_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  /// Cells -1 <= i <= nx, -1 <= j <= ny.
  Conserved& at(int i, int j, EdgeSide side, int k) {
    return data_[offset(i, j) + static_cast<int>(side) * K_ + k];
  }
  const Conserved& at(int i, int j, EdgeSide side, int k) const {
    return data_[offset(i, j) + static_cast<int>(side) * K_ + k];
  }

  /// Distinct point values of a cell (4K - 4 of them: every edge node once).
  std::vector<Conserved> distinct(int i, int j) const;
  /// Writes back values in the order returned by distinct(), keeping the
  /// shared corners consistent.
  void assign_distinct(int i, int j, const std::vector<Conserved>& values);

 private:
  int offset(int i, int j) const { return ((j + 1) * (nx_ + 2) + (i + 1)) * 4 * K_; }

  int nx_;
  int ny_;
  int K_;
  std::vector<Conserved> data_;
};

/// Dimension-by-dimension WENO reconstruction. Left/right edge values come
/// from an x-sweep to the edge followed by a y-sweep to the nodes; bottom/top
/// edge values (which include the corners) from a y-sweep followed by an
/// x-sweep. Requires field.ghosts() >= 3 with ghosts filled.
CellPointValues reconstruct_quadrature_states(const Field& field, const GaussLobattoRule& rule,
                                              WenoMode mode);

struct ScalingResult {
  double theta_d = 1.0;
  double theta_q = 1.0;

  bool active() const { return theta_d < 1.0 || theta_q < 1.0; }
};

/// Default floors of the reconstruction limiter.
inline constexpr double kScalingFloor = 1e-13;

/// Shrinks the points affinely toward `avg`: first so that every D >= eps_d,
/// then so that every q >= eps_q (q is concave, so a linear interpolation of
/// q along the segment is a safe lower bound). Throws DomainError when avg
/// itself violates a floor.
ScalingResult scaling_pcp_limit(std::vector<Conserved>& points, const Conserved& avg,
                                double eps_d = kScalingFloor, double eps_q = kScalingFloor);

}  // namespace mdhll
