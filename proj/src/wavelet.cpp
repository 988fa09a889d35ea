#include "vpwave/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vpwave/chebgrid.hpp"
#include "vpwave/transform.hpp"

namespace vpwave {

namespace {

void check_unit(double x, const char* what) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error(std::string(what) + ": argument outside [-1,1]");
}

void check_wavelet_index(const VpParams& params, int r) {
  if (r < params.n() || r >= 3 * params.n()) throw std::out_of_range("orthogonal wavelet index out of range");
}

double x3n_angle(int n, int j) { return (2.0 * j - 1.0) * std::numbers::pi / (6.0 * n); }

}  // namespace

double eval_wavelet(const VpParams& params, int k, double x) {
  check_unit(x, "eval_wavelet");
  const int n = params.n();
  if (k < 1 || k > 2 * n) throw std::out_of_range("eval_wavelet: k out of range");
  const VpParams fine = params.tripled();
  const double t = std::acos(x);
  const double yk = y_angle(n, k);
  const double scale = std::numbers::pi / (3.0 * n);
  double value = scale * kernel_angles(fine, yk, t);
  for (int h = 1; h <= n; ++h) {
    value -= eval_scaling_angle(params, h, yk) * scale * kernel_angles(fine, x3n_angle(n, 3 * h - 1), t);
  }
  return value;
}

std::vector<ChebTerm> ortho_wavelet_terms(const VpParams& params, int r) {
  check_wavelet_index(params, r);
  const int n = params.n();
  const int m = params.m();
  if (r == n) return {{n, 1.0}};
  if (r < n + m) return {{2 * n - r, mu(params, r)}, {r, mu(params, 2 * n - r)}};
  if (r <= 3 * n - m) return {{r, 1.0}};
  const VpParams fine = params.tripled();
  return {{r, mu(fine, r)}, {6 * n - r, -mu(fine, 6 * n - r)}};
}

double eval_ortho_wavelet(const VpParams& params, int r, double x) {
  check_unit(x, "eval_ortho_wavelet");
  const double t = std::acos(x);
  double sum = 0.0;
  for (const auto& term : ortho_wavelet_terms(params, r)) sum += term.weight * cheb_p_angle(term.degree, t);
  return sum;
}

double v_coeff(const VpParams& params, int r) {
  check_wavelet_index(params, r);
  const int n = params.n();
  const int m = params.m();
  const double mm = static_cast<double>(m) * m;
  if (n < r && r < n + m) return (mm + static_cast<double>(n - r) * (n - r)) / (2.0 * mm);
  if (r > 3 * n - m) return (mm + static_cast<double>(3 * n - r) * (3 * n - r)) / (2.0 * mm);
  return 1.0;
}

double rho(const VpParams& params, int r, int k) {
  check_wavelet_index(params, r);
  const int n = params.n();
  const int m = params.m();
  if (k < 1 || k > 2 * n) throw std::out_of_range("rho: k out of range");
  const double t = y_angle(n, k);
  const double scale = std::numbers::pi / (3.0 * n);
  auto p = [t](int degree) { return cheb_p_angle(degree, t); };
  if (r == n) return scale * p(n);
  if (r == 2 * n) return scale * (p(2 * n) + std::sqrt(2.0) * p(0));
  if (r <= 3 * n - m) return scale * (p(r) + p(std::abs(2 * n - r)));
  return scale * (p(r) + mu(params, r - 2 * n) * p(r - 2 * n) - mu(params, 4 * n - r) * p(4 * n - r));
}

RhoTable::RhoTable(const VpParams& params)
    : params_(params), dim_(static_cast<std::size_t>(2 * params.n())), values_(dim_ * dim_) {
  const int n = params.n();
  for (int r = n; r < 3 * n; ++r) {
    for (int k = 1; k <= 2 * n; ++k) {
      values_[static_cast<std::size_t>(r - n) * dim_ + static_cast<std::size_t>(k - 1)] = rho(params, r, k);
    }
  }
}

std::shared_ptr<const RhoTable> rho_table(const VpParams& params) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RhoTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{params.n(), params.m()}];
  if (!slot) slot = std::make_shared<const RhoTable>(params);
  return slot;
}

std::vector<double> wavelet_nodal_values(const WaveletCoeffs& coeffs) {
  const ScalingCoeffs zero{coeffs.params, std::vector<double>(static_cast<std::size_t>(coeffs.params.n()), 0.0)};
  return reconstruct_level(zero, coeffs);
}

std::vector<double> eval_wavelet_coeffs(const WaveletCoeffs& coeffs, std::span<const double> xs) {
  const ScalingCoeffs fine{coeffs.params.tripled(), wavelet_nodal_values(coeffs)};
  return eval_coeffs(fine, xs);
}

std::vector<double> eval_ortho_wavelet_coeffs(const OrthoWaveletCoeffs& coeffs, std::span<const double> xs) {
  const int n = coeffs.params.n();
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double sum = 0.0;
    for (int r = n; r < 3 * n; ++r) {
      sum += coeffs.d[static_cast<std::size_t>(r - n)] * eval_ortho_wavelet(coeffs.params, r, x);
    }
    out.push_back(sum);
  }
  return out;
}

OrthoWaveletCoeffs wavelet_to_ortho(const WaveletCoeffs& coeffs) {
  const int n = coeffs.params.n();
  if (static_cast<int>(coeffs.b.size()) != 2 * n) throw std::invalid_argument("wavelet_to_ortho: length mismatch");
  const auto table = rho_table(coeffs.params);
  std::vector<double> d(static_cast<std::size_t>(2 * n), 0.0);
  for (int r = n; r < 3 * n; ++r) {
    double sum = 0.0;
    for (int k = 1; k <= 2 * n; ++k) sum += (*table)(r, k) * coeffs.b[static_cast<std::size_t>(k - 1)];
    d[static_cast<std::size_t>(r - n)] = sum;
  }
  return {coeffs.params, std::move(d)};
}

WaveletCoeffs wavelet_from_ortho(const OrthoWaveletCoeffs& coeffs) {
  const int n = coeffs.params.n();
  if (static_cast<int>(coeffs.d.size()) != 2 * n) throw std::invalid_argument("wavelet_from_ortho: length mismatch");
  std::vector<double> ys(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= 2 * n; ++k) ys[static_cast<std::size_t>(k - 1)] = y_node(n, k);
  return {coeffs.params, eval_ortho_wavelet_coeffs(coeffs, ys)};
}

double wavelet_moment(const VpParams& params, int k, int s, int quad_order) {
  return gauss_cheb_quadrature([&](double x) { return std::pow(x, s) * eval_wavelet(params, k, x); }, quad_order);
}

double check_vanishing_moments(const VpParams& params, int k) {
  double worst = 0.0;
  for (int s = 0; s <= params.low_degree(); ++s) {
    worst = std::max(worst, std::abs(wavelet_moment(params, k, s, 4 * params.n())));
  }
  return worst;
}

}  // namespace vpwave
