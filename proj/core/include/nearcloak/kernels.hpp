#ifndef NEARCLOAK_KERNELS_HPP
#define NEARCLOAK_KERNELS_HPP

#include <utility>

#include "nearcloak/types.hpp"

namespace nearcloak {

/// Frequency and space dimension for the fundamental solutions.
struct KernelParams {
  double omega = 1.0;
  int dim = 2;
};

// Bessel functions of orders 0 and 1 for positive real argument,
// accurate to ~1e-15 relative over (0, 1e15).
double bessel_j0(double t);
double bessel_j1(double t);
double bessel_y0(double t);
double bessel_y1(double t);

/// H_0^{(1)}(t) and H_1^{(1)}(t) for t > 0.
std::pair<Complex, Complex> hankel_h0_h1(double t);

/// Outgoing fundamental solution of the Helmholtz operator:
/// (i/4) H_0^{(1)}(omega |x-y|) in 2D, e^{i omega |x-y|}/(4 pi |x-y|) in 3D
/// (3D evaluated with |x-y| supplied directly through phi_dist).
Complex phi(const Vec2& x, const Vec2& y, const KernelParams& params);
Complex phi_dist(double r, const KernelParams& params);

/// Static (Laplace) kernel: (1/2pi) ln(1/|x-y|) in 2D, 1/(4 pi |x-y|) in 3D.
double phi0(const Vec2& x, const Vec2& y, int dim);
double phi0_dist(double r, int dim);

/// Normal derivative of phi in the source point: dPhi(x,y)/dnu(y).
Complex grad_phi_nu(const Vec2& x, const Vec2& y, const Vec2& nu_y,
                    const KernelParams& params);

} // namespace nearcloak

#endif
