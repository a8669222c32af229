#include "mdhll/reconstruction.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mdhll/errors.hpp"

namespace mdhll {

GaussLobattoRule GaussLobattoRule::make(int K) {
  GaussLobattoRule r;
  r.K = K;
  switch (K) {
    case 2:
      r.nodes = {-0.5, 0.5};
      r.weights = {0.5, 0.5};
      break;
    case 3:
      r.nodes = {-0.5, 0.0, 0.5};
      r.weights = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
      break;
    case 4: {
      const double a = std::sqrt(5.0) / 10.0;
      r.nodes = {-0.5, -a, a, 0.5};
      r.weights = {1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0};
      break;
    }
    case 5: {
      const double a = std::sqrt(21.0) / 14.0;
      r.nodes = {-0.5, -a, 0.0, a, 0.5};
      r.weights = {1.0 / 20.0, 49.0 / 180.0, 16.0 / 45.0, 49.0 / 180.0, 1.0 / 20.0};
      break;
    }
    default:
      throw ContractError("Gauss-Lobatto rule supports K = 2..5, got " + std::to_string(K));
  }
  return r;
}

namespace {

// Weights c such that sum_k c_k * avg_k is the value at xi of the polynomial
// whose averages over the unit cells centred at `offsets` are avg_k.
template <int N>
Eigen::Matrix<double, N, 1> point_coefficients(const std::array<int, N>& offsets, double xi) {
  Eigen::Matrix<double, N, N> moments;
  for (int k = 0; k < N; ++k) {
    const double lo = offsets[k] - 0.5;
    const double hi = offsets[k] + 0.5;
    for (int m = 0; m < N; ++m) {
      moments(k, m) = (std::pow(hi, m + 1) - std::pow(lo, m + 1)) / (m + 1);
    }
  }
  Eigen::Matrix<double, N, 1> e;
  for (int m = 0; m < N; ++m) e(m) = std::pow(xi, m);
  // avg = moments * a and value = e . a, so value = (moments^-T e) . avg.
  return moments.transpose().fullPivLu().solve(e);
}

}  // namespace

Weno5::Weno5(double xi, double epsilon) : xi_(xi), eps_(epsilon) {
  if (std::abs(xi) > 0.5) throw ContractError("WENO offset must lie in the cell");
  const std::array<std::array<int, 3>, 3> sub = {{{-2, -1, 0}, {-1, 0, 1}, {0, 1, 2}}};
  Eigen::Matrix<double, 5, 3> embed = Eigen::Matrix<double, 5, 3>::Zero();
  for (int r = 0; r < 3; ++r) {
    const Eigen::Vector3d c = point_coefficients<3>(sub[r], xi);
    for (int k = 0; k < 3; ++k) {
      coeffs_[r][k] = c(k);
      embed(r + k, r) = c(k);
    }
  }
  const Eigen::Matrix<double, 5, 1> full = point_coefficients<5>({-2, -1, 0, 1, 2}, xi);
  const Eigen::Vector3d d = embed.colPivHouseholderQr().solve(full);
  if ((embed * d - full).norm() > 1e-12) {
    throw NumericalError("WENO linear weights do not reproduce the five-point value");
  }
  for (int r = 0; r < 3; ++r) {
    if (!(d(r) > 0.0)) {
      throw ContractError("WENO linear weights are not positive at offset " + std::to_string(xi));
    }
    linear_[r] = d(r);
  }
}

double Weno5::operator()(const std::array<double, 5>& a) const {
  const double b0 = 13.0 / 12.0 * std::pow(a[0] - 2.0 * a[1] + a[2], 2) +
                    0.25 * std::pow(a[0] - 4.0 * a[1] + 3.0 * a[2], 2);
  const double b1 = 13.0 / 12.0 * std::pow(a[1] - 2.0 * a[2] + a[3], 2) +
                    0.25 * std::pow(a[1] - a[3], 2);
  const double b2 = 13.0 / 12.0 * std::pow(a[2] - 2.0 * a[3] + a[4], 2) +
                    0.25 * std::pow(3.0 * a[2] - 4.0 * a[3] + a[4], 2);
  const std::array<double, 3> beta = {b0, b1, b2};
  double wsum = 0.0;
  double value = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double w = linear_[r] / ((eps_ + beta[r]) * (eps_ + beta[r]));
    const double p = coeffs_[r][0] * a[r] + coeffs_[r][1] * a[r + 1] + coeffs_[r][2] * a[r + 2];
    wsum += w;
    value += w * p;
  }
  return value / wsum;
}

std::pair<double, double> weno5_line(const std::array<double, 5>& avg) {
  static const Weno5 left(-0.5);
  static const Weno5 right(0.5);
  return {left(avg), right(avg)};
}

CharacteristicBasis CharacteristicBasis::at(const Primitive& w, const Eos& eos, Axis axis) {
  // Eigenvectors along x in (D, m_n, m_t, E) ordering; the y-direction swaps
  // the roles of the two velocity and momentum components.
  const double un = axis == Axis::X ? w.u : w.v;
  const double ut = axis == Axis::X ? w.v : w.u;
  const double W = lorentz_factor(w);
  const double h = specific_enthalpy(w, eos);
  const Eigenvalues ev = eigenvalues(w, eos, axis);

  auto acoustic = [&](double lambda) {
    const double A = (1.0 - un * un) / (1.0 - un * lambda);
    return std::array<double, 4>{1.0, h * W * A * lambda, h * W * ut, h * W * A};
  };
  const std::array<std::array<double, 4>, 4> cols = {
      acoustic(ev.min),
      std::array<double, 4>{1.0 / W, un, ut, 1.0},
      std::array<double, 4>{W * ut, 2.0 * h * W * W * un * ut, h * (1.0 + 2.0 * W * W * ut * ut),
                            2.0 * h * W * W * ut},
      acoustic(ev.max)};

  Eigen::Matrix4d R;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) R(r, c) = cols[c][r];
  }
  if (axis == Axis::Y) R.row(1).swap(R.row(2));
  const Eigen::Matrix4d L = R.inverse();
  if (!L.allFinite()) throw NumericalError("singular characteristic basis");

  CharacteristicBasis b;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      b.R[r * 4 + c] = R(r, c);
      b.L[r * 4 + c] = L(r, c);
    }
  }
  return b;
}

namespace {

Conserved apply(const std::array<double, 16>& M, const Conserved& u) {
  Conserved out;
  for (int r = 0; r < 4; ++r) {
    out[r] = M[r * 4] * u.D + M[r * 4 + 1] * u.mx + M[r * 4 + 2] * u.my + M[r * 4 + 3] * u.E;
  }
  return out;
}

}  // namespace

Conserved CharacteristicBasis::to_characteristic(const Conserved& u) const { return apply(L, u); }
Conserved CharacteristicBasis::from_characteristic(const Conserved& c) const { return apply(R, c); }

CellPointValues::CellPointValues(int nx, int ny, int K)
    : nx_(nx), ny_(ny), K_(K),
      data_(static_cast<std::size_t>(nx + 2) * (ny + 2) * 4 * K) {}

std::vector<Conserved> CellPointValues::distinct(int i, int j) const {
  // Bottom and top edges in full (corners included), then the interior
  // nodes of the left and right edges.
  std::vector<Conserved> out;
  out.reserve(4 * K_ - 4);
  for (int k = 0; k < K_; ++k) out.push_back(at(i, j, EdgeSide::Bottom, k));
  for (int k = 0; k < K_; ++k) out.push_back(at(i, j, EdgeSide::Top, k));
  for (int k = 1; k < K_ - 1; ++k) out.push_back(at(i, j, EdgeSide::Left, k));
  for (int k = 1; k < K_ - 1; ++k) out.push_back(at(i, j, EdgeSide::Right, k));
  return out;
}

void CellPointValues::assign_distinct(int i, int j, const std::vector<Conserved>& v) {
  int n = 0;
  for (int k = 0; k < K_; ++k) at(i, j, EdgeSide::Bottom, k) = v[n++];
  for (int k = 0; k < K_; ++k) at(i, j, EdgeSide::Top, k) = v[n++];
  for (int k = 1; k < K_ - 1; ++k) at(i, j, EdgeSide::Left, k) = v[n++];
  for (int k = 1; k < K_ - 1; ++k) at(i, j, EdgeSide::Right, k) = v[n++];
  at(i, j, EdgeSide::Left, 0) = at(i, j, EdgeSide::Bottom, 0);
  at(i, j, EdgeSide::Left, K_ - 1) = at(i, j, EdgeSide::Top, 0);
  at(i, j, EdgeSide::Right, 0) = at(i, j, EdgeSide::Bottom, K_ - 1);
  at(i, j, EdgeSide::Right, K_ - 1) = at(i, j, EdgeSide::Top, K_ - 1);
}

namespace {

// Reconstructs the values at several offsets from one five-value stencil,
// optionally in characteristic variables.
void reconstruct_stencil(const std::array<Conserved, 5>& s, const CharacteristicBasis* basis,
                         const std::vector<const Weno5*>& targets, Conserved* out) {
  std::array<Conserved, 5> c = s;
  if (basis != nullptr) {
    for (auto& v : c) v = basis->to_characteristic(v);
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Conserved r;
    for (int k = 0; k < 4; ++k) {
      r[k] = (*targets[t])({c[0][k], c[1][k], c[2][k], c[3][k], c[4][k]});
    }
    out[t] = basis != nullptr ? basis->from_characteristic(r) : r;
  }
}

Primitive average(const Primitive& a, const Primitive& b) {
  return {0.5 * (a.rho + b.rho), 0.5 * (a.u + b.u), 0.5 * (a.v + b.v), 0.5 * (a.p + b.p)};
}

}  // namespace

CellPointValues reconstruct_quadrature_states(const Field& field, const GaussLobattoRule& rule,
                                              WenoMode mode) {
  const int g = field.ghosts();
  if (g < 3) throw ContractError("fifth-order reconstruction needs three ghost layers");
  const int nx = field.nx();
  const int ny = field.ny();
  const int K = rule.K;
  const Eos& eos = field.eos();
  const bool characteristic = mode == WenoMode::Characteristic;

  std::vector<Weno5> node_weno;
  node_weno.reserve(K);
  for (double xi : rule.nodes) node_weno.emplace_back(xi);
  const Weno5& at_left = node_weno.front();
  const Weno5& at_right = node_weno.back();
  std::vector<const Weno5*> all_nodes;
  std::vector<const Weno5*> inner_nodes;
  for (int k = 0; k < K; ++k) {
    all_nodes.push_back(&node_weno[k]);
    if (k > 0 && k < K - 1) inner_nodes.push_back(&node_weno[k]);
  }

  // Primitive states of every stored cell, for the linearization states.
  const int sw = nx + 2 * g;
  std::vector<Primitive> prim(static_cast<std::size_t>(sw) * (ny + 2 * g));
  auto P = [&](int i, int j) -> Primitive& { return prim[(j + g) * sw + (i + g)]; };
  if (characteristic) {
    for (int j = -g; j < ny + g; ++j) {
      for (int i = -g; i < nx + g; ++i) P(i, j) = recover_primitive(field(i, j), eos);
    }
  }
  auto basis = [&](const Primitive& a, const Primitive& b, Axis axis) {
    return CharacteristicBasis::at(average(a, b), eos, axis);
  };

  CellPointValues out(nx, ny, K);

  // x-sweep to the left/right edges on rows -3..ny+2, then a y-sweep along
  // each edge line to the interior nodes.
  const int rows = ny + 6;
  const int cols = nx + 2;
  std::vector<Conserved> xl(static_cast<std::size_t>(rows) * cols);
  std::vector<Conserved> xr(xl.size());
  auto xid = [&](int i, int j) { return static_cast<std::size_t>((j + 3) * cols + (i + 1)); };
  auto XL = [&](int i, int j) -> Conserved& { return xl[xid(i, j)]; };
  auto XR = [&](int i, int j) -> Conserved& { return xr[xid(i, j)]; };
  for (int j = -3; j < ny + 3; ++j) {
    for (int i = -1; i <= nx; ++i) {
      const std::array<Conserved, 5> s = {field(i - 2, j), field(i - 1, j), field(i, j),
                                          field(i + 1, j), field(i + 2, j)};
      CharacteristicBasis bl, br;
      if (characteristic) {
        bl = basis(P(i - 1, j), P(i, j), Axis::X);
        br = basis(P(i, j), P(i + 1, j), Axis::X);
      }
      reconstruct_stencil(s, characteristic ? &bl : nullptr, {&at_left}, &XL(i, j));
      reconstruct_stencil(s, characteristic ? &br : nullptr, {&at_right}, &XR(i, j));
    }
  }
  std::vector<Conserved> buf(K);
  for (int j = -1; j <= ny; ++j) {
    for (int i = -1; i <= nx; ++i) {
      for (EdgeSide side : {EdgeSide::Left, EdgeSide::Right}) {
        const std::vector<Conserved>& line = side == EdgeSide::Left ? xl : xr;
        const std::array<Conserved, 5> s = {line[xid(i, j - 2)], line[xid(i, j - 1)],
                                            line[xid(i, j)], line[xid(i, j + 1)],
                                            line[xid(i, j + 2)]};
        CharacteristicBasis b;
        if (characteristic) {
          b = side == EdgeSide::Left ? basis(P(i - 1, j), P(i, j), Axis::Y)
                                     : basis(P(i, j), P(i + 1, j), Axis::Y);
        }
        reconstruct_stencil(s, characteristic ? &b : nullptr, inner_nodes, buf.data());
        for (int k = 1; k < K - 1; ++k) out.at(i, j, side, k) = buf[k - 1];
      }
    }
  }

  // y-sweep to the bottom/top edges on columns -3..nx+2, then an x-sweep
  // along each edge line to all nodes, corners included.
  const int cols_b = nx + 6;
  const int rows_b = ny + 2;
  std::vector<Conserved> yb(static_cast<std::size_t>(rows_b) * cols_b);
  std::vector<Conserved> yt(yb.size());
  auto yid = [&](int i, int j) { return static_cast<std::size_t>((j + 1) * cols_b + (i + 3)); };
  auto YB = [&](int i, int j) -> Conserved& { return yb[yid(i, j)]; };
  auto YT = [&](int i, int j) -> Conserved& { return yt[yid(i, j)]; };
  for (int j = -1; j <= ny; ++j) {
    for (int i = -3; i < nx + 3; ++i) {
      const std::array<Conserved, 5> s = {field(i, j - 2), field(i, j - 1), field(i, j),
                                          field(i, j + 1), field(i, j + 2)};
      CharacteristicBasis bb, bt;
      if (characteristic) {
        bb = basis(P(i, j - 1), P(i, j), Axis::Y);
        bt = basis(P(i, j), P(i, j + 1), Axis::Y);
      }
      reconstruct_stencil(s, characteristic ? &bb : nullptr, {&at_left}, &YB(i, j));
      reconstruct_stencil(s, characteristic ? &bt : nullptr, {&at_right}, &YT(i, j));
    }
  }
  for (int j = -1; j <= ny; ++j) {
    for (int i = -1; i <= nx; ++i) {
      for (EdgeSide side : {EdgeSide::Bottom, EdgeSide::Top}) {
        const std::vector<Conserved>& line = side == EdgeSide::Bottom ? yb : yt;
        const std::array<Conserved, 5> s = {line[yid(i - 2, j)], line[yid(i - 1, j)],
                                            line[yid(i, j)], line[yid(i + 1, j)],
                                            line[yid(i + 2, j)]};
        CharacteristicBasis b;
        if (characteristic) {
          b = side == EdgeSide::Bottom ? basis(P(i, j - 1), P(i, j), Axis::X)
                                       : basis(P(i, j), P(i, j + 1), Axis::X);
        }
        reconstruct_stencil(s, characteristic ? &b : nullptr, all_nodes, buf.data());
        for (int k = 0; k < K; ++k) out.at(i, j, side, k) = buf[k];
      }
      out.at(i, j, EdgeSide::Left, 0) = out.at(i, j, EdgeSide::Bottom, 0);
      out.at(i, j, EdgeSide::Left, K - 1) = out.at(i, j, EdgeSide::Top, 0);
      out.at(i, j, EdgeSide::Right, 0) = out.at(i, j, EdgeSide::Bottom, K - 1);
      out.at(i, j, EdgeSide::Right, K - 1) = out.at(i, j, EdgeSide::Top, K - 1);
    }
  }
  return out;
}

ScalingResult scaling_pcp_limit(std::vector<Conserved>& points, const Conserved& avg,
                                double eps_d, double eps_q) {
  const double q_avg = q_value(avg);
  if (!(avg.D >= eps_d) || !(q_avg >= eps_q)) {
    throw DomainError("cell average below the scaling-limiter floors");
  }
  // avg + theta (p - avg) loses about eps*|avg| to cancellation, so the
  // working floors sit a few roundoffs above that (but below the average).
  constexpr double kRound = 16.0 * std::numeric_limits<double>::epsilon();
  const double floor_d = std::min(eps_d + kRound * avg.D, 0.5 * (avg.D + eps_d));
  const double floor_q = std::min(eps_q + kRound * avg.E, 0.5 * (q_avg + eps_q));
  ScalingResult res;

  double d_min = avg.D;
  for (const Conserved& p : points) d_min = std::min(d_min, p.D);
  if (d_min < floor_d) {
    res.theta_d = std::clamp((avg.D - floor_d) / (avg.D - d_min), 0.0, 1.0);
    for (Conserved& p : points) p = avg + res.theta_d * (p - avg);
  }

  for (const Conserved& p : points) {
    const double q = q_value(p);
    if (q < floor_q) {
      res.theta_q = std::min(res.theta_q, std::clamp((q_avg - floor_q) / (q_avg - q), 0.0, 1.0));
    }
  }
  if (res.theta_q < 1.0) {
    for (Conserved& p : points) p = avg + res.theta_q * (p - avg);
  }
  return res;
}

}  // namespace mdhll
