#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vpwave/scaling.hpp"
#include "vpwave/vpkernel.hpp"

namespace vpwave {

/// Element of W_n^m in the interpolating basis: b[k-1] is its value at y_k^n.
struct WaveletCoeffs {
  VpParams params;
  std::vector<double> b;
};

/// Element of W_n^m in the orthogonal basis psi^perp_{n,r}; d[r-n], r = n..3n-1.
struct OrthoWaveletCoeffs {
  VpParams params;
  std::vector<double> d;
};

/// psi_{n,k}^m(x), k = 1..2n, from the two-scale kernel formula. O(n).
double eval_wavelet(const VpParams& params, int k, double x);

/// psi^perp_{n,r}(x), r = n..3n-1.
double eval_ortho_wavelet(const VpParams& params, int r, double x);

/// Chebyshev expansion of psi^perp_{n,r} (one or two terms).
std::vector<ChebTerm> ortho_wavelet_terms(const VpParams& params, int r);

/// <psi^perp_{n,r}, psi^perp_{n,r}>.
double v_coeff(const VpParams& params, int r);

/// Coefficient of psi^perp_{n,r} in the expansion of psi_{n,k}.
double rho(const VpParams& params, int r, int k);

/// Dense rho table for one (n, m), row r-n, column k-1.
class RhoTable {
 public:
  explicit RhoTable(const VpParams& params);

  const VpParams& params() const { return params_; }
  double operator()(int r, int k) const {
    return values_[static_cast<std::size_t>(r - params_.n()) * dim_ + static_cast<std::size_t>(k - 1)];
  }

 private:
  VpParams params_;
  std::size_t dim_;
  std::vector<double> values_;
};

/// Shared immutable table, built once per (n, m).
std::shared_ptr<const RhoTable> rho_table(const VpParams& params);

/// Values of sum_k b_k psi_{n,k} at all of X_3n (index order of X_3n).
std::vector<double> wavelet_nodal_values(const WaveletCoeffs& coeffs);

/// sum_k b_k psi_{n,k}(x) at each x.
std::vector<double> eval_wavelet_coeffs(const WaveletCoeffs& coeffs, std::span<const double> xs);

/// sum_r d_r psi^perp_{n,r}(x) at each x.
std::vector<double> eval_ortho_wavelet_coeffs(const OrthoWaveletCoeffs& coeffs, std::span<const double> xs);

/// Interpolating -> orthogonal wavelet coefficients via the rho table.
OrthoWaveletCoeffs wavelet_to_ortho(const WaveletCoeffs& coeffs);
/// Orthogonal -> interpolating wavelet coefficients (values at Y_2n).
WaveletCoeffs wavelet_from_ortho(const OrthoWaveletCoeffs& coeffs);

/// int x^s psi_{n,k}(x) w(x) dx with an N-point Gauss-Chebyshev rule.
double wavelet_moment(const VpParams& params, int k, int s, int quad_order);

/// max over s = 0..n-m of |int x^s psi_{n,k} w|, quadrature order 4n.
double check_vanishing_moments(const VpParams& params, int k);

}  // namespace vpwave
