#include "vpwave/vpkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vpwave/chebgrid.hpp"
#include "vpwave/scaling.hpp"

namespace vpwave {

VpParams::VpParams(int n, int m) : n_(n), m_(m) {
  if (!(m > 0 && m < n)) {
    throw std::invalid_argument("VpParams: need 0 < m < n, got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));
  }
}

double mu(const VpParams& params, int r) {
  const int n = params.n();
  const int m = params.m();
  if (r < 0) throw std::invalid_argument("mu: negative index");
  if (r <= n - m) return 1.0;
  if (r < n + m) return static_cast<double>(m + n - r) / (2.0 * m);
  return 0.0;
}

std::vector<double> filter_coeffs(const VpParams& params) {
  std::vector<double> out(static_cast<std::size_t>(params.n() + params.m()));
  for (int r = 0; r < params.n() + params.m(); ++r) out[static_cast<std::size_t>(r)] = mu(params, r);
  return out;
}

namespace {

void check_unit(double x, const char* what) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error(std::string(what) + ": argument outside [-1,1]");
}

double kernel_sum_angles(const VpParams& params, double t, double tau) {
  double sum = 0.0;
  for (int r = 0; r < params.n() + params.m(); ++r) {
    sum += mu(params, r) * cheb_p_angle(r, t) * cheb_p_angle(r, tau);
  }
  return sum;
}

double sine_quotient(int m, int n, double d) {
  const double s = std::sin(0.5 * d);
  return std::sin(m * d) * std::sin(n * d) / (s * s);
}

}  // namespace

double kernel_sum(const VpParams& params, double x, double y) {
  check_unit(x, "kernel_sum");
  check_unit(y, "kernel_sum");
  return kernel_sum_angles(params, std::acos(x), std::acos(y));
}

double kernel_angles(const VpParams& params, double t, double tau) {
  const double diff = t - tau;
  const double sum = t + tau;
  if (std::abs(diff) < kSingularAngle || std::abs(sum) < kSingularAngle ||
      std::abs(sum - 2.0 * std::numbers::pi) < kSingularAngle) {
    return kernel_sum_angles(params, t, tau);
  }
  const int n = params.n();
  const int m = params.m();
  return (sine_quotient(m, n, diff) + sine_quotient(m, n, sum)) / (4.0 * std::numbers::pi * m);
}

double kernel_trig(const VpParams& params, double x, double y) {
  check_unit(x, "kernel_trig");
  check_unit(y, "kernel_trig");
  return kernel_angles(params, std::acos(x), std::acos(y));
}

std::function<double(double)> sigma(const VpParams& params,
                                    const std::function<double(double)>& f,
                                    int quad_order) {
  if (quad_order < 1) throw std::invalid_argument("sigma: quad_order must be >= 1");
  const ChebGrid grid(quad_order);
  std::vector<double> weighted(static_cast<std::size_t>(quad_order));
  for (int j = 1; j <= quad_order; ++j) {
    weighted[static_cast<std::size_t>(j - 1)] = std::numbers::pi / quad_order * f(grid.node(j));
  }
  std::vector<double> angles(grid.angles().begin(), grid.angles().end());
  return [params, weighted = std::move(weighted), angles = std::move(angles)](double x) {
    check_unit(x, "sigma");
    const double t = std::acos(x);
    double sum = 0.0;
    for (std::size_t j = 0; j < angles.size(); ++j) sum += kernel_sum_angles(params, t, angles[j]) * weighted[j];
    return sum;
  };
}

double lebesgue_constant_estimate(const VpParams& params, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("lebesgue_constant_estimate: grid_size must be >= 2");
  double best = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double t = std::numbers::pi * i / (grid_size - 1);
    double sum = 0.0;
    for (int k = 1; k <= params.n(); ++k) sum += std::abs(eval_scaling_angle(params, k, t));
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace vpwave
