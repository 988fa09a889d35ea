#pragma once

#include <functional>
#include <vector>

namespace vpwave {

/// Resolution degree n and free parameter m of a VP basis, 0 < m < n.
class VpParams {
 public:
  VpParams(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  /// Polynomials up to this degree are reproduced exactly.
  int low_degree() const { return n_ - m_; }
  /// Degree of the kernel and of every element of V_n^m.
  int high_degree() const { return n_ + m_ - 1; }

  /// Same m at three times the resolution.
  VpParams tripled() const { return VpParams(3 * n_, m_); }

  friend bool operator==(const VpParams&, const VpParams&) = default;

 private:
  int n_;
  int m_;
};

/// Trapezoidal filter: 1 up to n-m, linear ramp (m+n-r)/(2m), 0 from n+m on.
double mu(const VpParams& params, int r);

/// mu[r] for r = 0..n+m-1.
std::vector<double> filter_coeffs(const VpParams& params);

/// v_n^m(x, y) as the filtered Chebyshev sum. O(n+m); the reference path.
double kernel_sum(const VpParams& params, double x, double y);

/// v_n^m(x, y) in the closed sine-quotient form. Falls back to kernel_sum
/// within 1e-6 rad of the removable singularities.
double kernel_trig(const VpParams& params, double x, double y);

/// Closed form evaluated directly on angles t = arccos x, tau = arccos y.
double kernel_angles(const VpParams& params, double t, double tau);

/// Angular distance below which kernel_trig uses the filtered sum.
inline constexpr double kSingularAngle = 1e-6;

/// sigma_n^m f via an N-point Gauss-Chebyshev rule (N = quad_order).
/// Test oracle; the returned closure owns the sampled values of f.
std::function<double(double)> sigma(const VpParams& params,
                                    const std::function<double(double)>& f,
                                    int quad_order);

/// max over an angle-uniform grid of sum_k |Phi_{n,k}^m(x)|.
double lebesgue_constant_estimate(const VpParams& params, int grid_size);

}  // namespace vpwave
