#include "mdhll/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdhll/errors.hpp"

namespace mdhll {

Mesh::Mesh(int nx, int ny, double x0, double x1, double y0, double y1)
    : nx_(nx), ny_(ny), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
  if (nx < 4 || ny < 4) throw ConfigError("mesh needs at least 4 cells per direction");
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("mesh bounds must be increasing");
  dx_ = (x1 - x0) / nx;
  dy_ = (y1 - y0) / ny;
}

void BoundarySpec::validate() const {
  const bool lp = left.kind == BoundaryKind::Periodic;
  const bool rp = right.kind == BoundaryKind::Periodic;
  const bool bp = bottom.kind == BoundaryKind::Periodic;
  const bool tp = top.kind == BoundaryKind::Periodic;
  if (lp != rp) throw ConfigError("periodic boundary on x-sides must be paired");
  if (bp != tp) throw ConfigError("periodic boundary on y-sides must be paired");
}

Field::Field(const Mesh& mesh, const Eos& eos, const BoundarySpec& bc, int ghosts)
    : mesh_(mesh), eos_(eos), bc_(bc), ghosts_(ghosts) {
  if (ghosts < 1) throw ConfigError("field needs at least one ghost layer");
  bc_.validate();
  const std::size_t n = static_cast<std::size_t>(mesh.nx() + 2 * ghosts) *
                        static_cast<std::size_t>(mesh.ny() + 2 * ghosts);
  data_.assign(n, Conserved{});
}

void Field::set_interior(const std::function<Primitive(double, double)>& init) {
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      (*this)(i, j) = conserved_from_primitive(init(mesh_.xc(i), mesh_.yc(j)), eos_);
    }
  }
}

void Field::set_interior_averages(const std::function<Primitive(double, double)>& init, int n) {
  // Gauss-Legendre nodes and weights on [-1/2, 1/2].
  std::vector<double> x, w;
  switch (n) {
    case 1:
      x = {0.0};
      w = {1.0};
      break;
    case 2:
      x = {-0.5 / std::sqrt(3.0), 0.5 / std::sqrt(3.0)};
      w = {0.5, 0.5};
      break;
    case 3:
      x = {-0.5 * std::sqrt(0.6), 0.0, 0.5 * std::sqrt(0.6)};
      w = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
      break;
    case 4: {
      const double a = 0.5 * std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(1.2));
      const double b = 0.5 * std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(1.2));
      const double wa = (18.0 + std::sqrt(30.0)) / 72.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 72.0;
      x = {-b, -a, a, b};
      w = {wb, wa, wa, wb};
      break;
    }
    case 5: {
      const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 6.0;
      const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 6.0;
      const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 1800.0;
      const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 1800.0;
      x = {-b, -a, 0.0, a, b};
      w = {wb, wa, 128.0 / 450.0, wa, wb};
      break;
    }
    default:
      throw ConfigError("cell-average quadrature supports 1..5 points");
  }
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      Conserved sum;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          const Primitive p =
              init(mesh_.xc(i) + x[a] * mesh_.dx(), mesh_.yc(j) + x[b] * mesh_.dy());
          sum += (w[a] * w[b]) * conserved_from_primitive(p, eos_);
        }
      }
      (*this)(i, j) = sum;
    }
  }
}

Conserved Field::totals() const {
  Conserved sum;
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) sum += (*this)(i, j);
  }
  return sum * (mesh_.dx() * mesh_.dy());
}

double Field::min_density() const {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) m = std::min(m, (*this)(i, j).D);
  }
  return m;
}

double Field::min_q() const {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) m = std::min(m, q_value((*this)(i, j)));
  }
  return m;
}

StateGrid::StateGrid(const Field& field, int layers) : layers_(layers) {
  if (layers < 0 || layers > field.ghosts()) throw ContractError("state grid exceeds ghost ring");
  const int w = field.nx() + 2 * layers;
  const int h = field.ny() + 2 * layers;
  stride_ = static_cast<std::size_t>(w);
  states_.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int j = -layers; j < field.ny() + layers; ++j) {
    for (int i = -layers; i < field.nx() + layers; ++i) {
      states_[static_cast<std::size_t>(j + layers) * stride_ + (i + layers)] =
          FluidState::from_conserved(field(i, j), field.eos());
    }
  }
}

namespace {

// Source cell for ghost offset k (0 = adjacent to the boundary) on the low
// side of an axis with n interior cells.
int low_source(BoundaryKind kind, int k, int n) {
  switch (kind) {
    case BoundaryKind::Periodic:
      return n - 1 - k;
    case BoundaryKind::Reflecting:
      return k;
    default:
      return 0;
  }
}

int high_source(BoundaryKind kind, int k, int n) {
  switch (kind) {
    case BoundaryKind::Periodic:
      return k;
    case BoundaryKind::Reflecting:
      return n - 1 - k;
    default:
      return n - 1;
  }
}

// Ghost value from its source cell; `normal` selects the momentum component
// negated by a reflecting wall (1 = mx, 2 = my). Negating the normal momentum
// is the exact conserved image of mirroring the normal velocity.
Conserved ghost_value(const SideCondition& c, const Conserved& source, int normal,
                      double along, const Conserved& inflow) {
  if (c.kind == BoundaryKind::Reflecting) {
    Conserved g = source;
    g[normal] = -g[normal];
    return g;
  }
  if (c.kind == BoundaryKind::Inflow && along >= c.lo && along <= c.hi) return inflow;
  return source;
}

Conserved inflow_state(const SideCondition& c, const Eos& eos) {
  return c.kind == BoundaryKind::Inflow ? conserved_from_primitive(c.inflow, eos) : Conserved{};
}

}  // namespace

void fill_ghosts(Field& field) {
  const int g = field.ghosts();
  const int nx = field.nx();
  const int ny = field.ny();
  const Mesh& mesh = field.mesh();
  const BoundarySpec& bc = field.bc();

  const Conserved in_left = inflow_state(bc.left, field.eos());
  const Conserved in_right = inflow_state(bc.right, field.eos());
  const Conserved in_bottom = inflow_state(bc.bottom, field.eos());
  const Conserved in_top = inflow_state(bc.top, field.eos());

  for (int j = 0; j < ny; ++j) {
    const double y = mesh.yc(j);
    for (int k = 0; k < g; ++k) {
      field(-1 - k, j) = ghost_value(bc.left, field(low_source(bc.left.kind, k, nx), j), 1, y,
                                     in_left);
      field(nx + k, j) = ghost_value(bc.right, field(high_source(bc.right.kind, k, nx), j), 1,
                                     y, in_right);
    }
  }
  for (int i = -g; i < nx + g; ++i) {
    const double x = mesh.xc(i);
    for (int k = 0; k < g; ++k) {
      field(i, -1 - k) = ghost_value(bc.bottom, field(i, low_source(bc.bottom.kind, k, ny)), 2,
                                     x, in_bottom);
      field(i, ny + k) = ghost_value(bc.top, field(i, high_source(bc.top.kind, k, ny)), 2, x,
                                     in_top);
    }
  }
}

ErrorNorms error_norms(const Mesh& mesh, const std::function<double(int, int)>& error) {
  ErrorNorms n;
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const double e = std::abs(error(i, j));
      sum1 += e;
      sum2 += e * e;
      n.linf = std::max(n.linf, e);
    }
  }
  const double cell = mesh.dx() * mesh.dy() / mesh.area();
  n.l1 = sum1 * cell;
  n.l2 = std::sqrt(sum2 * cell);
  return n;
}

}  // namespace mdhll
