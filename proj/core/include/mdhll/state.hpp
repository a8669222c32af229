#pragma once

// State algebra for the 2D special-relativistic Euler equations with a
// Gamma-law gas, in units where the speed of light is one.

#include <array>
#include <cmath>

namespace mdhll {

/// Rest-mass density, velocity components and gas pressure.
struct Primitive {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

/// Laboratory-frame mass, momentum and total energy densities.
///
/// Fluxes share this layout (one component per conserved quantity), so the
/// type doubles as the flux vector; `Flux` is an alias for readability.
struct Conserved {
  double D = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 0.0;

  double& operator[](int k) { return k == 0 ? D : k == 1 ? mx : k == 2 ? my : E; }
  double operator[](int k) const { return k == 0 ? D : k == 1 ? mx : k == 2 ? my : E; }

  Conserved& operator+=(const Conserved& o) {
    D += o.D;
    mx += o.mx;
    my += o.my;
    E += o.E;
    return *this;
  }
  Conserved& operator-=(const Conserved& o) {
    D -= o.D;
    mx -= o.mx;
    my -= o.my;
    E -= o.E;
    return *this;
  }
  Conserved& operator*=(double s) {
    D *= s;
    mx *= s;
    my *= s;
    E *= s;
    return *this;
  }

  friend Conserved operator+(Conserved a, const Conserved& b) { return a += b; }
  friend Conserved operator-(Conserved a, const Conserved& b) { return a -= b; }
  friend Conserved operator-(const Conserved& a) { return {-a.D, -a.mx, -a.my, -a.E}; }
  friend Conserved operator*(double s, Conserved a) { return a *= s; }
  friend Conserved operator*(Conserved a, double s) { return a *= s; }
  friend Conserved operator/(Conserved a, double s) { return a *= (1.0 / s); }
  friend bool operator==(const Conserved&, const Conserved&) = default;
};

using Flux = Conserved;

/// Flux / eigen-structure direction.
enum class Axis { X, Y };

/// Gamma-law equation of state p = (Gamma - 1) rho e with 1 < Gamma <= 2.
class Eos {
 public:
  explicit Eos(double gamma = 5.0 / 3.0);

  double gamma() const { return gamma_; }
  /// Gamma / (Gamma - 1), the enthalpy coefficient.
  double enthalpy_factor() const { return gamma_ / (gamma_ - 1.0); }

 private:
  double gamma_;
};

/// Smallest and largest characteristic speeds along one axis; the contact
/// speed is the velocity component along that axis.
struct Eigenvalues {
  double min = 0.0;
  double contact = 0.0;
  double max = 0.0;
};

/// Default relative tolerance of the pressure recovery.
inline constexpr double kRecoveryTolerance = 1e-13;
/// Iteration cap of the pressure recovery.
inline constexpr int kRecoveryMaxIterations = 200;

double lorentz_factor(const Primitive& w);
double specific_enthalpy(const Primitive& w, const Eos& eos);

/// True when rho > 0, p > 0 and |velocity| < 1 (all finite).
bool is_valid(const Primitive& w);

/// D = rho*gamma, m = rho*h*gamma^2*velocity, E = rho*h*gamma^2 - p.
/// Throws DomainError for invalid primitives.
Conserved conserved_from_primitive(const Primitive& w, const Eos& eos);

/// Inverts conserved_from_primitive by solving the pressure equation
///   E + p = D*gamma + Gamma/(Gamma-1) * p * gamma^2,
///   gamma = (1 - |m|^2 / (E+p)^2)^(-1/2)
/// with a bracketed Newton iteration that falls back to bisection.
///
/// Throws DomainError for inadmissible input and NumericalError when the
/// iteration cap is hit before the relative tolerance is met.
Primitive recover_primitive(const Conserved& u, const Eos& eos,
                            double tol = kRecoveryTolerance);

/// Physical flux F (Axis::X) or G (Axis::Y) of a consistent (w, u) pair.
Flux physical_flux(const Primitive& w, const Conserved& u, Axis axis);

double sound_speed(const Primitive& w, const Eos& eos);

Eigenvalues eigenvalues(const Primitive& w, const Eos& eos, Axis axis);

/// max(|lambda_min|, |lambda_max|) of the flux Jacobian along `axis`.
double spectral_radius(const Primitive& w, const Eos& eos, Axis axis);

/// q(U) = E - sqrt(D^2 + |m|^2); concave in U.
inline double q_value(const Conserved& u) {
  return u.E - std::sqrt(u.D * u.D + u.mx * u.mx + u.my * u.my);
}

/// Membership in the admissible set: D > 0 and q(U) > 0.
inline bool is_admissible(const Conserved& u) {
  return std::isfinite(u.E) && u.D > 0.0 && q_value(u) > 0.0;
}

/// A conserved state together with the quantities the Riemann solvers need
/// from it: primitives, both physical fluxes and both eigenvalue extremes.
struct FluidState {
  Conserved cons;
  Primitive prim;
  Flux fx;
  Flux fy;
  Eigenvalues ex;
  Eigenvalues ey;

  static FluidState from_conserved(const Conserved& u, const Eos& eos);
  static FluidState from_primitive(const Primitive& w, const Eos& eos);

  const Flux& flux(Axis axis) const { return axis == Axis::X ? fx : fy; }
  const Eigenvalues& eig(Axis axis) const { return axis == Axis::X ? ex : ey; }
};

}  // namespace mdhll
