#pragma once

#include <functional>

#include "vortex/chart.hpp"
#include "vortex/common.hpp"
#include "vortex/polar.hpp"
#include "vortex/profile.hpp"

namespace vortex {

/// Solve a*cosh(l/a) = 1 for the catenoid neck parameter, returning the stable
/// (larger-a) root of cosh(m)/m = 1/l, m = l/a. Throws NoCatenoid past the
/// critical half-length l_c ~ 0.6627 where the two circles admit no catenoid.
CatenoidProfile catenoid_parameters(double l);

/// Lateral area of the catenoid over the doubled interval [0, 2l]:
/// 2*pi*a*l + pi*a^2*sinh(2l/a).
double catenoid_area(const CatenoidProfile& c);

/// Area of the flap {(t, r, 0) : rho_bar(t) <= r <= 1, t in [0, 2l]}:
/// 2l - 2a^2*sinh(l/a).
double flap_area(const CatenoidProfile& c);

/// Parameters of the approximating-map constructions; the defaults follow the
/// schedule (r_k, theta_k, theta_bar_k) = (1/k, 1/k^2, 2/k^2), which keeps
/// k*theta_k -> 0.
struct SequenceParams {
  int k = 8;
  double r_k = 0.0;
  double theta_k = 0.0;
  double theta_bar_k = 0.0;

  static SequenceParams defaults(int k);
  void validate(double l) const;
};

using MapFn = std::function<void(double r, double theta, double& v1, double& v2)>;

/// Degree-zero circle-valued approximation of the vortex map: the identity
/// angle away from the cut {theta = 0} and the small disc, unwound through the
/// antipode inside them. Area limit: vortex area + 2*pi*l (lateral cylinder).
MapFn cylinder_map(const SequenceParams& p, double l);

/// Radial ramp times the vortex map, u_k = phi_k(r) u, with a smoothstep ramp
/// from 0 on [0, 1/k^2] to 1 on [1/k, l] (slope <= 1.6k). Area limit:
/// vortex area + pi (the two discs).
MapFn two_discs_map(const SequenceParams& p, double l);

/// Slicewise catenoid-with-flap approximation: each circle of radius t is sent
/// to the unit circle minus a small arc, the flap slice {(r,0): rho(t)<=r<=1}
/// (traversed once per angular strip), and one half of the circle of radius
/// rho(t) per strip. Area limit: vortex area + catenoid_area/2 + flap_area
/// (the catenoid is swept over half its length, the flap twice over half).
MapFn catenoid_flap_map(const SequenceParams& p, double l);

/// Recovery-sequence map built from an optimal pair (h, psi) on the half
/// rectangle [0, l] x [-1, 1]: the vortex map outside a thin cone, the graph
/// of the regularized psi traced over the subgraph of h inside the cone, a
/// retraction blend near the origin, and interpolation wedges. Area limit:
/// vortex area + 2*F_l(h, psi).
MapFn recovery_map(const SequenceParams& p, double l, const ConvexProfile& h_half,
                   const ScalarField& psi_half);

/// Graded polar grid for a sequence map: nodes at the seam angles and radii,
/// with at least strip_cells cells across each angular strip and across each
/// of the inner radial bands.
PolarGrid sequence_grid(const SequenceParams& p, double l, int nr, int ntheta, int strip_cells);

/// Convenience: sample the map on its graded grid and integrate the graph
/// area with the polar quadrature.
double sequence_area(const MapFn& f, const SequenceParams& p, double l, int nr, int ntheta,
                     int strip_cells = 48);

}  // namespace vortex
