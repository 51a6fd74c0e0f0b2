#include "vortex/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace vortex {

namespace {

// cosh(m)/m attains its minimum where m*tanh(m) = 1.
double critical_m() {
  double lo = 0.5, hi = 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::tanh(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CatenoidProfile catenoid_parameters(double l) {
  if (l <= 0.0) throw InvalidRange("catenoid_parameters: l must be positive");
  const double m_star = critical_m();
  const double target = 1.0 / l;
  if (std::cosh(m_star) / m_star >= target)
    throw NoCatenoid("catenoid_parameters: no catenoid spans the circles at this half-length");
  // cosh(m)/m decreases from +inf to its minimum on (0, m_star]; the root
  // there is the stable (larger-a) branch.
  double lo = 1e-12, hi = m_star;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::cosh(mid) / mid > target ? lo : hi) = mid;
  }
  const double m = 0.5 * (lo + hi);
  CatenoidProfile c;
  c.a = l / m;
  c.half_length = l;
  return c;
}

double catenoid_area(const CatenoidProfile& c) {
  const double a = c.a, l = c.half_length;
  return 2.0 * kPi * a * l + kPi * a * a * std::sinh(2.0 * l / a);
}

double flap_area(const CatenoidProfile& c) {
  const double a = c.a, l = c.half_length;
  return 2.0 * l - 2.0 * a * a * std::sinh(l / a);
}

SequenceParams SequenceParams::defaults(int k) {
  SequenceParams p;
  p.k = k;
  p.r_k = 1.0 / k;
  p.theta_k = 1.0 / (static_cast<double>(k) * k);
  p.theta_bar_k = 2.0 / (static_cast<double>(k) * k);
  return p;
}

void SequenceParams::validate(double l) const {
  if (k < 2) throw InvalidRange("SequenceParams: k >= 2 required");
  if (!(r_k > 0.0 && r_k < l)) throw InvalidRange("SequenceParams: need 0 < r_k < l");
  if (!(theta_k > 0.0 && theta_bar_k > theta_k && theta_bar_k < kPi / 2))
    throw InvalidRange("SequenceParams: need 0 < theta_k < theta_bar_k < pi/2");
}

namespace {

// Signed angle in (-pi, pi].
double signed_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return (t > kPi) ? t - 2.0 * kPi : t;
}

void unit(double angle, double& v1, double& v2) {
  v1 = std::cos(angle);
  v2 = std::sin(angle);
}

}  // namespace

MapFn cylinder_map(const SequenceParams& p, double l) {
  p.validate(l);
  const double r_k = p.r_k, th_k = p.theta_k;
  return [r_k, th_k](double r, double theta, double& v1, double& v2) {
    const double phi = signed_angle(theta);
    const double s = (phi < 0.0) ? -1.0 : 1.0;
    const double aphi = std::abs(phi);
    double angle;
    if (aphi >= th_k) {
      // theta - pi and back: the antipodal unwinding keeps the degree zero.
      angle = (r >= r_k) ? phi : (r / r_k) * (phi - s * kPi) + s * kPi;
    } else {
      const double g = (th_k - kPi) / th_k * aphi;  // pi at phi=0, th_k-pi at the seam
      angle = s * ((r >= r_k ? 1.0 : r / r_k) * g + kPi);
    }
    unit(angle, v1, v2);
  };
}

MapFn two_discs_map(const SequenceParams& p, double l) {
  p.validate(l);
  const double r0 = 1.0 / (static_cast<double>(p.k) * p.k);
  const double r1 = 1.0 / p.k;
  return [r0, r1](double r, double theta, double& v1, double& v2) {
    double t = std::clamp((r - r0) / (r1 - r0), 0.0, 1.0);
    const double ramp = t * t * (3.0 - 2.0 * t);
    v1 = ramp * std::cos(theta);
    v2 = ramp * std::sin(theta);
  };
}

MapFn catenoid_flap_map(const SequenceParams& p, double l) {
  p.validate(l);
  const CatenoidProfile cat = catenoid_parameters(l);
  const double r_k = p.r_k, th_k = p.theta_k, thb_k = p.theta_bar_k;

  // Slice path of one angular strip at inner radius rho, parametrized by
  // q in [0, 1]: from (1, 0) along the flap segment to (rho, 0), then around
  // the upper half circle to (-rho, 0), split by arc length. The lower strip
  // uses the mirror image, so the two strips together cover the flap twice
  // and the rho-circle once per slice.
  auto strip_point = [](double rho, double q, double& x, double& y) {
    const double seg = 1.0 - rho;
    const double arc = kPi * rho;
    const double mu = seg / (seg + arc);
    if (q <= mu) {
      x = 1.0 - (mu > 0.0 ? q / mu : 1.0) * seg;
      y = 0.0;
    } else {
      const double alpha = kPi * (q - mu) / (1.0 - mu);
      x = rho * std::cos(alpha);
      y = rho * std::sin(alpha);
    }
  };

  return [=](double r, double theta, double& v1, double& v2) {
    const double phi = signed_angle(theta);
    const double s = (phi < 0.0) ? -1.0 : 1.0;
    const double aphi = std::abs(phi);
    if (r > r_k) {
      if (aphi >= thb_k) {
        unit(phi, v1, v2);
      } else if (aphi >= th_k) {
        // Small arc from (1,0) up to angle theta_bar_k.
        unit(s * thb_k * (aphi - th_k) / (thb_k - th_k), v1, v2);
      } else {
        const double rho = cat.rho_bar(l * (r - r_k) / (l - r_k));
        strip_point(rho, 1.0 - aphi / th_k, v1, v2);
        v2 *= s;
      }
      return;
    }
    // Inside B_{r_k} the trace at r = r_k is circle-valued (rho(r_k) = 1);
    // unwind its angle lift through the antipode, as in the cylinder map.
    double lift;  // angle of the trace at (r_k, phi), lifted continuously with lift(0) = pi
    if (aphi >= thb_k) {
      lift = phi;
    } else if (aphi >= th_k) {
      lift = s * thb_k * (aphi - th_k) / (thb_k - th_k);
    } else {
      lift = s * kPi * (1.0 - aphi / th_k);  // strip path at rho = 1 is the half circle
    }
    unit((r / r_k) * (lift - s * kPi) + s * kPi, v1, v2);
  };
}

namespace {

struct RecoveryData {
  double l;
  SequenceParams p;
  ConvexProfile h;     // half profile on [0, l], h(0) = 1
  ScalarField psi;     // on the subgraph chart of h
  double inv_k;

  double h_k(double w1) const {
    const double w = std::clamp(w1, 0.0, l);
    if (w >= inv_k) return h(w);
    return inv_k > 0.0 ? h(inv_k) + (1.0 - h(inv_k)) * (1.0 - w / inv_k) : h(w);
  }

  // psi evaluated through the chart, zero on and above the graph of h.
  double psi_raw(double w1, double w2) const {
    const MappedChart& c = psi.chart;
    double x = std::clamp(w1, c.x0, c.x1);
    int i = std::clamp(static_cast<int>((x - c.x0) / c.dx()), 0, c.n1 - 1);
    // nearest non-collapsed column pair handled by interpolate in sigma
    if (c.collapsed(i) || c.collapsed(i + 1)) return 0.0;
    const double hi = c.upper[static_cast<std::size_t>(i)];
    (void)hi;
    const double up = h(x);
    if (w2 >= up) return 0.0;
    const double lo = -1.0;
    if (w2 <= lo) return 0.0;
    const double sig = (w2 - lo) / (up - lo);
    return psi.interpolate(x, std::clamp(sig, 0.0, 1.0));
  }

  // Lipschitz regularization: clipped below by 1/k and above by the truncated
  // side data, so it vanishes near the Dirichlet boundary.
  double psi_k(double w1, double w2) const {
    const double w2c = std::clamp(w2, -1.0, 1.0);
    const double phi_k = std::max(std::sqrt(std::max(0.0, 1.0 - w2c * w2c)) - 2.0 * inv_k, 0.0);
    const double v = std::max(psi_raw(w1, w2c) - inv_k, 0.0);
    return std::min(v, phi_k);
  }
};

// Radial retraction of the upper half plane onto the unit semicircle; the
// side trace of the minimizer is the half circle of Dirichlet data.
void retract(double x, double y, double& v1, double& v2) {
  const double n = std::hypot(x, y);
  if (n < 1e-14) {
    v1 = -1.0;
    v2 = 0.0;
    return;
  }
  v1 = x / n;
  v2 = y / n;
}

}  // namespace

MapFn recovery_map(const SequenceParams& p, double l, const ConvexProfile& h_half,
                   const ScalarField& psi_half) {
  p.validate(l);
  if (h_half.degenerate)
    throw DegenerateProfile("recovery_map: the degenerate branch has no cone construction");
  if (std::abs(h_half.span() - l) > 1e-12)
    throw InvalidRange("recovery_map: profile span must equal l");
  auto data = std::make_shared<RecoveryData>();
  data->l = l;
  data->p = p;
  data->h = h_half;
  data->psi = psi_half;
  data->inv_k = 1.0 / p.k;

  const double r_k = p.r_k, th_k = p.theta_k, thb_k = p.theta_bar_k;
  const double delta = thb_k - th_k;

  return [=](double r, double theta, double& v1, double& v2) {
    const double phi = signed_angle(theta);
    const double s = (phi < 0.0) ? -1.0 : 1.0;
    const double aphi = std::abs(phi);

    if (aphi >= thb_k) {
      // Outside the cone: the vortex map, unwound inside B_{r_k/2}.
      const double angle =
          (r >= 0.5 * r_k) ? phi : (2.0 * r / r_k) * (phi - s * kPi) + s * kPi;
      unit(angle, v1, v2);
      return;
    }

    // alpha(r): angle of the retracted step-4 trace along theta = theta_k.
    auto alpha_of = [&](double rr) {
      const double x = 4.0 * rr / r_k - 1.0;
      double a1, a2;
      retract(x, data->psi_k(0.0, -x), a1, a2);
      return std::acos(std::clamp(a1, -1.0, 1.0));
    };

    if (aphi >= th_k) {
      // Interpolation wedge T_k.
      if (r > 0.5 * r_k) {
        unit(s * (1.0 - (thb_k - aphi) / delta) * thb_k, v1, v2);
      } else {
        const double w = (thb_k - aphi) / delta;
        const double beta = w * alpha_of(r) + (1.0 - w) * ((2.0 * r / r_k) * (thb_k - kPi) + kPi);
        unit(s * beta, v1, v2);
      }
      return;
    }

    // Cone C_k.
    if (r >= r_k) {
      const double tau = l * (r - r_k) / (l - r_k);
      const double hk = data->h_k(tau);
      const double sk = (1.0 + hk) * aphi / th_k - hk;
      v1 = sk;
      v2 = s * data->psi_k(tau, -sk);
      return;
    }
    if (r >= 0.5 * r_k) {
      // Blend between the r_k trace and its retraction onto the semicircle.
      const double sk = 2.0 * aphi / th_k - 1.0;
      const double px = sk, py = data->psi_k(0.0, -sk);
      double q1, q2;
      retract(px, py, q1, q2);
      const double lam = 2.0 - 2.0 * r / r_k;
      v1 = lam * q1 + (1.0 - lam) * px;
      v2 = s * (lam * q2 + (1.0 - lam) * py);
      return;
    }
    // Innermost disc: circle-valued sweep of the retracted trace.
    const double x = 4.0 * r * aphi / (r_k * th_k) - 1.0;
    double q1, q2;
    retract(x, data->psi_k(0.0, -x), q1, q2);
    v1 = q1;
    v2 = s * q2;
  };
}

PolarGrid sequence_grid(const SequenceParams& p, double l, int nr, int ntheta, int strip_cells) {
  std::vector<double> rb = {0.5 * p.r_k, p.r_k};
  const double k2 = 1.0 / (static_cast<double>(p.k) * p.k);
  rb.push_back(k2);  // two-discs ramp foot
  std::vector<double> tb = {0.0, p.theta_k, p.theta_bar_k, 2.0 * kPi - p.theta_bar_k,
                            2.0 * kPi - p.theta_k};
  return make_polar_grid(0.0, l, nr, ntheta, rb, tb, strip_cells);
}

double sequence_area(const MapFn& f, const SequenceParams& p, double l, int nr, int ntheta,
                     int strip_cells) {
  const PolarGrid g = sequence_grid(p, l, nr, ntheta, strip_cells);
  return map_graph_area_polar(PolarMapField::sample(g, f));
}

}  // namespace vortex
