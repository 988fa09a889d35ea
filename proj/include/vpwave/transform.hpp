#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "vpwave/scaling.hpp"
#include "vpwave/wavelet.hpp"

namespace vpwave {

/// Nodal values of f_3n split into the X_n slots (a') and the Y_2n slots (a'').
struct LevelSplit {
  std::vector<double> a_prime;
  std::vector<double> a_double_prime;
};

LevelSplit split(std::span<const double> a3n);
std::vector<double> merge(const LevelSplit& ls);

/// f_3n = f_n + g_2n in the interpolating bases.
struct LevelCoeffs {
  ScalingCoeffs coarse;
  WaveletCoeffs details;
};

/// Fast single-level decomposition, O(n log n). `params` is the level-n pair;
/// a3n holds the values of f_3n in V_3n^m (same m) at X_3n.
LevelCoeffs decompose_level(std::span<const double> a3n, const VpParams& params);

/// Fast single-level reconstruction; returns the values of f_3n at X_3n.
std::vector<double> reconstruct_level(const ScalingCoeffs& coarse, const WaveletCoeffs& details);

/// Dense O(n^2) realisations through A_n, G_n^{-1} and the block inverse.
LevelCoeffs decompose_level_naive(std::span<const double> a3n, const VpParams& params);
std::vector<double> reconstruct_level_naive(const ScalingCoeffs& coarse, const WaveletCoeffs& details);

/// One nonzero of the sparse orthogonal change-of-basis matrices.
struct SparseEntry {
  int row;
  int col;
  double value;
};

/// Entries of M (rows: coarse 0..n-1 then wavelet n..3n-1; cols: level-3n modes).
std::vector<SparseEntry> ortho_two_scale_matrix(const VpParams& params);
/// Entries of M^{-1} (rows: level-3n modes; cols as the rows of M).
std::vector<SparseEntry> ortho_two_scale_inverse(const VpParams& params);

struct OrthoLevelCoeffs {
  OrthoScalingCoeffs coarse;
  OrthoWaveletCoeffs details;
};

/// a3n is an element of V_3n^m in the orthogonal basis; `params` is level n.
OrthoLevelCoeffs ortho_decompose(const OrthoScalingCoeffs& a3n, const VpParams& params);
OrthoScalingCoeffs ortho_reconstruct(const OrthoScalingCoeffs& coarse, const OrthoWaveletCoeffs& details);

/// Per-level choice of m. Levels are counted coarse to fine.
class MSchedule {
 public:
  static MSchedule theta(double theta);
  static MSchedule explicit_list(std::vector<int> ms);

  /// m at level `index` (0 = coarsest) whose size is n. Throws if invalid.
  int m_for(int index, int n) const;

  /// true when m = floor(theta n) had to be raised to 1 somewhere in `sizes`.
  bool clamps(std::span<const int> sizes) const;

  std::optional<double> theta_value() const;

 private:
  std::variant<double, std::vector<int>> rule_;
};

/// max(1, floor(theta n)).
int m_from_theta(double theta, int n);

struct PyramidLevel {
  int n;
  int m;
  std::vector<double> details;

  bool operator==(const PyramidLevel&) const = default;
};

/// Coarse scaling values at n0 plus details per level, ordered coarse to fine.
struct Pyramid {
  int n0 = 0;
  std::vector<PyramidLevel> levels;
  std::vector<double> coarse;

  int finest_size() const;
  /// Throws std::invalid_argument on any structural violation.
  void validate() const;

  bool operator==(const Pyramid&) const = default;
};

/// Splits N = n0 3^J; throws if N / n0 is not a power of 3.
int count_levels(int total, int n0);

Pyramid multi_decompose(std::span<const double> samples, int n0, const MSchedule& schedule);
std::vector<double> multi_reconstruct(const Pyramid& p);

/// Per-component nodal vectors on the finest grid: [coarse, level 0 details,
/// level 1 details, ...]. They sum to multi_reconstruct(p).
std::vector<std::vector<double>> pyramid_components(const Pyramid& p);

}  // namespace vpwave
