#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace vpwave {

/// Chebyshev zeros of the first kind, x_k = cos((2k-1)pi/(2n)), k = 1..n.
///
/// All vectors in the library are stored in this index order, i.e. with
/// decreasing abscissa. Slot `k-1` of a vector belongs to node `k`.
class ChebGrid {
 public:
  explicit ChebGrid(int n);

  int size() const { return n_; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> angles() const { return angles_; }

  /// 1-based node access.
  double node(int k) const { return nodes_[static_cast<std::size_t>(k - 1)]; }
  double angle(int k) const { return angles_[static_cast<std::size_t>(k - 1)]; }

 private:
  int n_;
  std::vector<double> nodes_;
  std::vector<double> angles_;
};

/// Index map of X_n and Y_2n inside X_3n (1-based indices into X_3n).
///
/// x_k^n sits at position 3k-1. The complement Y_2n is enumerated by
/// ascending X_3n index, so y_{2k-1} is at 3k-2 and y_{2k} at 3k.
struct GridEmbedding {
  int n = 0;
  std::vector<int> x_index_in_3n;
  std::vector<int> y_index_in_3n;
};

ChebGrid make_grid(int n);
GridEmbedding make_embedding(int n);

/// Position (1-based) in X_3n of the k-th Y node, k = 1..2n.
constexpr int y_index_in_3n(int k) {
  const int pair = (k + 1) / 2;
  return (k % 2 == 1) ? 3 * pair - 2 : 3 * pair;
}

/// Angle of y_k^n, k = 1..2n.
inline double y_angle(int n, int k) {
  return (2.0 * y_index_in_3n(k) - 1.0) * std::numbers::pi / (6.0 * n);
}

inline double y_node(int n, int k) { return std::cos(y_angle(n, k)); }

/// Normalisation of the orthonormal Chebyshev polynomial p_r.
inline double cheb_norm(int r) {
  return r == 0 ? std::sqrt(1.0 / std::numbers::pi) : std::sqrt(2.0 / std::numbers::pi);
}

/// p_r evaluated at angle t, i.e. at x = cos t.
inline double cheb_p_angle(int r, double t) { return cheb_norm(r) * std::cos(r * t); }

/// Orthonormal Chebyshev polynomial p_r(x) = c_r cos(r arccos x).
double cheb_p(int r, double x);

/// Gauss-Chebyshev rule (pi/n) sum_k f(x_k^n); exact for degree <= 2n-1.
template <class F>
double gauss_cheb_quadrature(F&& f, int n) {
  if (n < 1) throw std::invalid_argument("gauss_cheb_quadrature: n must be >= 1");
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += f(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)));
  }
  return std::numbers::pi / n * sum;
}

/// alpha_r = scale * sum_k v_k p_r(x_k^n), r = 0..n-1. O(n log n).
std::vector<double> dct2_scaled(std::span<const double> v, double scale);

/// v_k = sum_r alpha_r p_r(x_k^n), k = 1..n. Inverse of dct2_scaled(., pi/n).
std::vector<double> dct3_scaled(std::span<const double> alpha);

}  // namespace vpwave
