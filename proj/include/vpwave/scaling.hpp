#pragma once

#include <span>
#include <vector>

#include "vpwave/vpkernel.hpp"

namespace vpwave {

/// Element of V_n^m in the interpolating basis: a[k-1] is its value at x_k^n.
struct ScalingCoeffs {
  VpParams params;
  std::vector<double> a;
};

/// Element of V_n^m in the orthogonal basis Phi^perp_{n,r}, r = 0..n-1.
struct OrthoScalingCoeffs {
  VpParams params;
  std::vector<double> c;
};

/// One Chebyshev term weight * p_degree.
struct ChebTerm {
  int degree;
  double weight;
};

/// Phi_{n,k}^m(x) = (pi/n) v_n^m(x_k^n, x), k = 1..n.
double eval_scaling(const VpParams& params, int k, double x);

/// Same, with x given by its angle t = arccos x.
double eval_scaling_angle(const VpParams& params, int k, double t);

/// Phi^perp_{n,r}(x): p_r for r <= n-m, mu_r p_r - mu_{2n-r} p_{2n-r} above.
double eval_ortho_scaling(const VpParams& params, int r, double x);

/// Chebyshev expansion of Phi^perp_{n,r} (one or two terms).
std::vector<ChebTerm> ortho_scaling_terms(const VpParams& params, int r);

/// <Phi^perp_{n,r}, Phi^perp_{n,r}>.
double nu(const VpParams& params, int r);

/// V_n^m f from the samples of f at X_n.
ScalingCoeffs vp_interpolant(std::span<const double> samples, const VpParams& params);

/// sum_k a_k Phi_{n,k}^m(x) at each x.
std::vector<double> eval_coeffs(const ScalingCoeffs& coeffs, std::span<const double> xs);
double eval_coeffs(const ScalingCoeffs& coeffs, double x);

/// sum_r c_r Phi^perp_{n,r}(x) at each x.
std::vector<double> eval_ortho_coeffs(const OrthoScalingCoeffs& coeffs, std::span<const double> xs);

OrthoScalingCoeffs to_ortho(const ScalingCoeffs& coeffs);
ScalingCoeffs from_ortho(const OrthoScalingCoeffs& coeffs);

}  // namespace vpwave
