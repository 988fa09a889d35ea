#include "vpwave/scaling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vpwave/chebgrid.hpp"

namespace vpwave {

namespace {

void check_unit(double x, const char* what) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error(std::string(what) + ": argument outside [-1,1]");
}

double node_angle(int n, int k) { return (2.0 * k - 1.0) * std::numbers::pi / (2.0 * n); }

}  // namespace

double eval_scaling_angle(const VpParams& params, int k, double t) {
  const int n = params.n();
  if (k < 1 || k > n) throw std::out_of_range("eval_scaling: k out of range");
  return std::numbers::pi / n * kernel_angles(params, node_angle(n, k), t);
}

double eval_scaling(const VpParams& params, int k, double x) {
  check_unit(x, "eval_scaling");
  return eval_scaling_angle(params, k, std::acos(x));
}

std::vector<ChebTerm> ortho_scaling_terms(const VpParams& params, int r) {
  const int n = params.n();
  if (r < 0 || r >= n) throw std::out_of_range("ortho scaling index out of range");
  if (r <= params.low_degree()) return {{r, 1.0}};
  return {{r, mu(params, r)}, {2 * n - r, -mu(params, 2 * n - r)}};
}

double eval_ortho_scaling(const VpParams& params, int r, double x) {
  check_unit(x, "eval_ortho_scaling");
  const double t = std::acos(x);
  double sum = 0.0;
  for (const auto& term : ortho_scaling_terms(params, r)) sum += term.weight * cheb_p_angle(term.degree, t);
  return sum;
}

double nu(const VpParams& params, int r) {
  const int n = params.n();
  const int m = params.m();
  if (r < 0 || r >= n) throw std::out_of_range("nu: index out of range");
  if (r <= n - m) return 1.0;
  const double mm = static_cast<double>(m) * m;
  return (mm + static_cast<double>(n - r) * (n - r)) / (2.0 * mm);
}

ScalingCoeffs vp_interpolant(std::span<const double> samples, const VpParams& params) {
  if (static_cast<int>(samples.size()) != params.n()) {
    throw std::invalid_argument("vp_interpolant: expected " + std::to_string(params.n()) + " samples, got " +
                                std::to_string(samples.size()));
  }
  return {params, std::vector<double>(samples.begin(), samples.end())};
}

double eval_coeffs(const ScalingCoeffs& coeffs, double x) {
  check_unit(x, "eval_coeffs");
  const double t = std::acos(x);
  double sum = 0.0;
  for (int k = 1; k <= coeffs.params.n(); ++k) {
    const double a = coeffs.a[static_cast<std::size_t>(k - 1)];
    if (a != 0.0) sum += a * eval_scaling_angle(coeffs.params, k, t);
  }
  return sum;
}

std::vector<double> eval_coeffs(const ScalingCoeffs& coeffs, std::span<const double> xs) {
  if (static_cast<int>(coeffs.a.size()) != coeffs.params.n()) {
    throw std::invalid_argument("eval_coeffs: coefficient length does not match n");
  }
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(eval_coeffs(coeffs, x));
  return out;
}

std::vector<double> eval_ortho_coeffs(const OrthoScalingCoeffs& coeffs, std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double sum = 0.0;
    for (int r = 0; r < coeffs.params.n(); ++r) {
      sum += coeffs.c[static_cast<std::size_t>(r)] * eval_ortho_scaling(coeffs.params, r, x);
    }
    out.push_back(sum);
  }
  return out;
}

OrthoScalingCoeffs to_ortho(const ScalingCoeffs& coeffs) {
  const int n = coeffs.params.n();
  if (static_cast<int>(coeffs.a.size()) != n) throw std::invalid_argument("to_ortho: length mismatch");
  return {coeffs.params, dct2_scaled(coeffs.a, std::numbers::pi / n)};
}

ScalingCoeffs from_ortho(const OrthoScalingCoeffs& coeffs) {
  if (static_cast<int>(coeffs.c.size()) != coeffs.params.n()) {
    throw std::invalid_argument("from_ortho: length mismatch");
  }
  return {coeffs.params, dct3_scaled(coeffs.c)};
}

}  // namespace vpwave
