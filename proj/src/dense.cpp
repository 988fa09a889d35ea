#include "vpwave/dense.hpp"

#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "vpwave/chebgrid.hpp"
#include "vpwave/scaling.hpp"
#include "vpwave/transform.hpp"
#include "vpwave/wavelet.hpp"

namespace vpwave {

namespace dense {

Eigen::MatrixXd scaling_at_y(const VpParams& params) {
  const int n = params.n();
  Eigen::MatrixXd a(n, 2 * n);
  for (int h = 1; h <= n; ++h) {
    for (int k = 1; k <= 2 * n; ++k) a(h - 1, k - 1) = eval_scaling_angle(params, h, y_angle(n, k));
  }
  return a;
}

namespace {

Eigen::MatrixXd weighted_node_gram(const VpParams& params, bool invert_nu) {
  const int n = params.n();
  const ChebGrid grid(n);
  Eigen::MatrixXd p(n, n);  // p(i, r) = p_i(x_{r+1})
  for (int i = 0; i < n; ++i) {
    for (int r = 1; r <= n; ++r) p(i, r - 1) = cheb_p_angle(i, grid.angle(r));
  }
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w(i) = invert_nu ? 1.0 / nu(params, i) : nu(params, i);
  return std::numbers::pi / n * p.transpose() * w.asDiagonal() * p;
}

}  // namespace

Eigen::MatrixXd gram_matrix(const VpParams& params) { return 3.0 * weighted_node_gram(params, false); }

Eigen::MatrixXd gram_inverse(const VpParams& params) { return weighted_node_gram(params, true) / 3.0; }

Eigen::MatrixXd two_scale_matrix(const VpParams& params) {
  const int n = params.n();
  const Eigen::MatrixXd a = scaling_at_y(params);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  m.topLeftCorner(n, n).setIdentity();
  m.topRightCorner(n, 2 * n) = a;
  m.bottomLeftCorner(2 * n, n) = -a.transpose();
  m.bottomRightCorner(2 * n, 2 * n).setIdentity();
  return m;
}

Eigen::MatrixXd two_scale_inverse(const VpParams& params) {
  const int n = params.n();
  const Eigen::MatrixXd a = scaling_at_y(params);
  const Eigen::MatrixXd g_inv = gram_inverse(params);
  const Eigen::MatrixXd g_inv_a = g_inv * a;
  Eigen::MatrixXd out(3 * n, 3 * n);
  out.topLeftCorner(n, n) = g_inv;
  out.topRightCorner(n, 2 * n) = -g_inv_a;
  out.bottomLeftCorner(2 * n, n) = a.transpose() * g_inv;
  out.bottomRightCorner(2 * n, 2 * n) = Eigen::MatrixXd::Identity(2 * n, 2 * n) - a.transpose() * g_inv_a;
  return out;
}

Eigen::MatrixXd ortho_two_scale_by_quadrature(const VpParams& params) {
  const int n = params.n();
  const VpParams fine = params.tripled();
  // Integrand degree <= 2 (3n + m - 1).
  const int order = 3 * n + params.m() + 1;
  const ChebGrid grid(order);
  auto basis = [&](int row, double x) {
    return row < n ? eval_ortho_scaling(params, row, x) : eval_ortho_wavelet(params, row, x);
  };
  Eigen::MatrixXd m(3 * n, 3 * n);
  for (int row = 0; row < 3 * n; ++row) {
    for (int j = 0; j < 3 * n; ++j) {
      double sum = 0.0;
      for (double x : grid.nodes()) sum += basis(row, x) * eval_ortho_scaling(fine, j, x);
      m(row, j) = std::numbers::pi / order * sum / nu(fine, j);
    }
  }
  return m;
}

}  // namespace dense

namespace {

Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

LevelCoeffs decompose_level_naive(std::span<const double> a3n, const VpParams& params) {
  const int n = params.n();
  if (static_cast<int>(a3n.size()) != 3 * n) throw std::invalid_argument("decompose_level_naive: length mismatch");
  const LevelSplit ls = split(a3n);
  Eigen::VectorXd joined(3 * n);
  joined << to_eigen(ls.a_prime), to_eigen(ls.a_double_prime);
  // Row-vector convention: (a, b) = (a', a'') M^{-1}.
  const Eigen::VectorXd out = dense::two_scale_inverse(params).transpose() * joined;
  return {ScalingCoeffs{params, to_std(out.head(n))}, WaveletCoeffs{params, to_std(out.tail(2 * n))}};
}

std::vector<double> reconstruct_level_naive(const ScalingCoeffs& coarse, const WaveletCoeffs& details) {
  if (!(coarse.params == details.params)) throw std::invalid_argument("reconstruct_level_naive: parameter mismatch");
  const int n = coarse.params.n();
  if (static_cast<int>(coarse.a.size()) != n || static_cast<int>(details.b.size()) != 2 * n) {
    throw std::invalid_argument("reconstruct_level_naive: length mismatch");
  }
  Eigen::VectorXd joined(3 * n);
  joined << to_eigen(coarse.a), to_eigen(details.b);
  const Eigen::VectorXd out = dense::two_scale_matrix(coarse.params).transpose() * joined;
  return merge(LevelSplit{to_std(out.head(n)), to_std(out.tail(2 * n))});
}

}  // namespace vpwave
