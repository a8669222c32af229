#include "mdhll/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mdhll/errors.hpp"

namespace mdhll {

namespace {

std::string describe(const Conserved& u) {
  std::ostringstream os;
  os.precision(17);
  os << "(D=" << u.D << ", mx=" << u.mx << ", my=" << u.my << ", E=" << u.E << ")";
  return os.str();
}

std::string describe(const Primitive& w) {
  std::ostringstream os;
  os.precision(17);
  os << "(rho=" << w.rho << ", u=" << w.u << ", v=" << w.v << ", p=" << w.p << ")";
  return os.str();
}

}  // namespace

Eos::Eos(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0 && gamma <= 2.0)) {
    throw DomainError("adiabatic index must lie in (1, 2]");
  }
}

double lorentz_factor(const Primitive& w) {
  return 1.0 / std::sqrt(1.0 - (w.u * w.u + w.v * w.v));
}

double specific_enthalpy(const Primitive& w, const Eos& eos) {
  return 1.0 + eos.enthalpy_factor() * w.p / w.rho;
}

bool is_valid(const Primitive& w) {
  return std::isfinite(w.rho) && std::isfinite(w.p) && std::isfinite(w.u) &&
         std::isfinite(w.v) && w.rho > 0.0 && w.p > 0.0 && w.u * w.u + w.v * w.v < 1.0;
}

Conserved conserved_from_primitive(const Primitive& w, const Eos& eos) {
  if (!is_valid(w)) throw DomainError("invalid primitive state " + describe(w));
  const double g2 = 1.0 / (1.0 - (w.u * w.u + w.v * w.v));
  const double gam = std::sqrt(g2);
  const double enthalpy_density = w.rho + eos.enthalpy_factor() * w.p;
  const double wg2 = enthalpy_density * g2;
  return {w.rho * gam, wg2 * w.u, wg2 * w.v, wg2 - w.p};
}

Primitive recover_primitive(const Conserved& u, const Eos& eos, double tol) {
  if (!is_admissible(u)) throw DomainError("inadmissible conserved state " + describe(u));

  const double k = eos.enthalpy_factor();
  const double m2 = u.mx * u.mx + u.my * u.my;
  const double m = std::sqrt(m2);

  // f(p) = D*gamma + k*p*gamma^2 - (E + p); f(0) < 0 < f((Gamma-1)E) for
  // every admissible state, so the root is bracketed.
  auto residual = [&](double p, double& slope) {
    const double ep = u.E + p;
    const double inv_g2 = (ep - m) * (ep + m) / (ep * ep);
    const double g2 = 1.0 / inv_g2;
    const double gam = std::sqrt(g2);
    const double dgam = -gam * g2 * m2 / (ep * ep * ep);
    slope = u.D * dgam + k * (g2 + 2.0 * p * gam * dgam) - 1.0;
    return u.D * gam + k * p * g2 - ep;
  };
  // Rounding floor of the residual: below this, Newton steps only chase noise.
  // gamma depends on E + p - |m|, whose absolute error is eps*(E + p), so the
  // gamma terms carry an extra factor (E + p) / (E + p - |m|).
  auto noise = [&](double p) {
    const double ep = u.E + p;
    const double g2 = ep * ep / ((ep - m) * (ep + m));
    const double amp = ep / (ep - m);
    return 4.0 * std::numeric_limits<double>::epsilon() *
           (ep + amp * (u.D * std::sqrt(g2) + k * p * g2));
  };

  double lo = 0.0;
  double hi = (eos.gamma() - 1.0) * u.E;
  double p = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < kRecoveryMaxIterations; ++it) {
    double slope = 0.0;
    const double f = residual(p, slope);
    if (std::abs(f) <= noise(p)) {
      // One last Newton step still moves p toward the root by up to the
      // noise-limited amount; further iterations would only oscillate.
      const double last = p - f / slope;
      if (std::isfinite(last) && last > 0.0) p = last;
      converged = true;
      break;
    }
    if (f < 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    double next = p - f / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    const double change = std::abs(next - p);
    p = next;
    if (change <= tol * p || hi - lo <= tol * hi) {
      converged = true;
      break;
    }
  }
  if (!converged || !(p > 0.0) || !std::isfinite(p)) {
    throw NumericalError("pressure recovery did not converge for " + describe(u));
  }

  const double ep = u.E + p;
  const double inv_gam = std::sqrt((ep - m) * (ep + m)) / ep;
  Primitive w;
  w.p = p;
  w.u = u.mx / ep;
  w.v = u.my / ep;
  w.rho = u.D * inv_gam;
  return w;
}

Flux physical_flux(const Primitive& w, const Conserved& u, Axis axis) {
  if (axis == Axis::X) {
    return {u.D * w.u, u.mx * w.u + w.p, u.my * w.u, (u.E + w.p) * w.u};
  }
  return {u.D * w.v, u.mx * w.v, u.my * w.v + w.p, (u.E + w.p) * w.v};
}

double sound_speed(const Primitive& w, const Eos& eos) {
  return std::sqrt(eos.gamma() * w.p / (w.rho + eos.enthalpy_factor() * w.p));
}

Eigenvalues eigenvalues(const Primitive& w, const Eos& eos, Axis axis) {
  // The textbook form
  //   (u_n (1 - c^2) -+ c/gamma sqrt(1 - u_n^2 - c^2 (|u|^2 - u_n^2))) / (1 - c^2 |u|^2)
  // cancels badly when both c and |u| approach one, so 1 - c^2 and the
  // radicand are assembled from non-negative pieces instead.
  const double g = eos.gamma();
  const double w_total = w.rho + eos.enthalpy_factor() * w.p;
  const double cs2 = g * w.p / w_total;
  const double one_minus_cs2 = (w.rho + g * (2.0 - g) / (g - 1.0) * w.p) / w_total;
  const double cs = std::sqrt(cs2);
  const double un = axis == Axis::X ? w.u : w.v;
  const double ut = axis == Axis::X ? w.v : w.u;
  const double inv_g2 = 1.0 - (w.u * w.u + w.v * w.v);
  const double root = std::sqrt(inv_g2 + ut * ut * one_minus_cs2);
  const double denom = one_minus_cs2 + cs2 * inv_g2;
  const double centre = un * one_minus_cs2;
  const double spread = cs * std::sqrt(inv_g2) * root;
  return {(centre - spread) / denom, un, (centre + spread) / denom};
}

double spectral_radius(const Primitive& w, const Eos& eos, Axis axis) {
  const Eigenvalues e = eigenvalues(w, eos, axis);
  return std::max(std::abs(e.min), std::abs(e.max));
}

FluidState FluidState::from_conserved(const Conserved& u, const Eos& eos) {
  FluidState s;
  s.cons = u;
  s.prim = recover_primitive(u, eos);
  s.fx = physical_flux(s.prim, u, Axis::X);
  s.fy = physical_flux(s.prim, u, Axis::Y);
  s.ex = eigenvalues(s.prim, eos, Axis::X);
  s.ey = eigenvalues(s.prim, eos, Axis::Y);
  return s;
}

FluidState FluidState::from_primitive(const Primitive& w, const Eos& eos) {
  FluidState s;
  s.cons = conserved_from_primitive(w, eos);
  s.prim = w;
  s.fx = physical_flux(w, s.cons, Axis::X);
  s.fy = physical_flux(w, s.cons, Axis::Y);
  s.ex = eigenvalues(w, eos, Axis::X);
  s.ey = eigenvalues(w, eos, Axis::Y);
  return s;
}

}  // namespace mdhll
