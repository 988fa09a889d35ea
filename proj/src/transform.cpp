#include "vpwave/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vpwave/chebgrid.hpp"

namespace vpwave {

LevelSplit split(std::span<const double> a3n) {
  if (a3n.empty() || a3n.size() % 3 != 0) throw std::invalid_argument("split: length must be a positive multiple of 3");
  const std::size_t n = a3n.size() / 3;
  LevelSplit ls;
  ls.a_prime.reserve(n);
  ls.a_double_prime.reserve(2 * n);
  for (std::size_t i = 0; i < a3n.size(); ++i) {
    // 0-based slot 3k-2 holds x_k^n.
    if (i % 3 == 1) {
      ls.a_prime.push_back(a3n[i]);
    } else {
      ls.a_double_prime.push_back(a3n[i]);
    }
  }
  return ls;
}

std::vector<double> merge(const LevelSplit& ls) {
  const std::size_t n = ls.a_prime.size();
  if (ls.a_double_prime.size() != 2 * n) throw std::invalid_argument("merge: need |a''| = 2 |a'|");
  std::vector<double> out(3 * n);
  std::size_t xi = 0;
  std::size_t yi = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (i % 3 == 1) ? ls.a_prime[xi++] : ls.a_double_prime[yi++];
  }
  return out;
}

namespace {

// beta_r = scale * sum_s values_s q_r(y_s), via one length-3n DCT-2 with
// zeros at the X_n slots.
std::vector<double> q_transform_on_y(const VpParams& params, std::span<const double> values, double scale) {
  const int n = params.n();
  std::vector<double> padded(static_cast<std::size_t>(3 * n), 0.0);
  for (int k = 1; k <= 2 * n; ++k) {
    padded[static_cast<std::size_t>(y_index_in_3n(k) - 1)] = values[static_cast<std::size_t>(k - 1)];
  }
  const std::vector<double> gamma = dct2_scaled(padded, scale);
  std::vector<double> beta(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < n; ++r) {
    for (const auto& term : ortho_scaling_terms(params, r)) {
      beta[static_cast<std::size_t>(r)] += term.weight * gamma[static_cast<std::size_t>(term.degree)];
    }
  }
  return beta;
}

// sum_r coeffs_r q_r(y_k) for k = 1..2n, via one length-3n DCT-3.
std::vector<double> q_series_on_y(const VpParams& params, std::span<const double> coeffs) {
  const int n = params.n();
  std::vector<double> cheb(static_cast<std::size_t>(3 * n), 0.0);
  for (int r = 0; r < n; ++r) {
    for (const auto& term : ortho_scaling_terms(params, r)) {
      cheb[static_cast<std::size_t>(term.degree)] += term.weight * coeffs[static_cast<std::size_t>(r)];
    }
  }
  const std::vector<double> values = dct3_scaled(cheb);
  std::vector<double> out(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= 2 * n; ++k) {
    out[static_cast<std::size_t>(k - 1)] = values[static_cast<std::size_t>(y_index_in_3n(k) - 1)];
  }
  return out;
}

void check_level_input(std::span<const double> a3n, const VpParams& params, const char* what) {
  if (static_cast<int>(a3n.size()) != 3 * params.n()) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(3 * params.n()) +
                                " values, got " + std::to_string(a3n.size()));
  }
}

void check_pair(const ScalingCoeffs& coarse, const WaveletCoeffs& details, const char* what) {
  if (!(coarse.params == details.params)) throw std::invalid_argument(std::string(what) + ": parameter mismatch");
  const int n = coarse.params.n();
  if (static_cast<int>(coarse.a.size()) != n || static_cast<int>(details.b.size()) != 2 * n) {
    throw std::invalid_argument(std::string(what) + ": coefficient length mismatch");
  }
}

}  // namespace

LevelCoeffs decompose_level(std::span<const double> a3n, const VpParams& params) {
  check_level_input(a3n, params, "decompose_level");
  const int n = params.n();
  const double scale = std::numbers::pi / (3.0 * n);
  const LevelSplit ls = split(a3n);

  std::vector<double> coeff = dct2_scaled(ls.a_prime, scale);
  const std::vector<double> beta = q_transform_on_y(params, ls.a_double_prime, scale);
  for (int r = 0; r < n; ++r) {
    const auto i = static_cast<std::size_t>(r);
    coeff[i] = (coeff[i] + beta[i]) / nu(params, r);
  }

  ScalingCoeffs coarse{params, dct3_scaled(coeff)};
  std::vector<double> b = q_series_on_y(params, coeff);
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = ls.a_double_prime[k] - b[k];
  return {std::move(coarse), WaveletCoeffs{params, std::move(b)}};
}

std::vector<double> reconstruct_level(const ScalingCoeffs& coarse, const WaveletCoeffs& details) {
  check_pair(coarse, details, "reconstruct_level");
  const VpParams& params = coarse.params;
  const int n = params.n();

  const std::vector<double> alpha = dct2_scaled(coarse.a, std::numbers::pi / n);
  const std::vector<double> beta = q_transform_on_y(params, details.b, std::numbers::pi / (3.0 * n));

  LevelSplit ls;
  ls.a_prime = dct3_scaled(beta);
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    ls.a_prime[i] = coarse.a[i] - 3.0 * ls.a_prime[i];
  }
  ls.a_double_prime = q_series_on_y(params, alpha);
  for (std::size_t k = 0; k < ls.a_double_prime.size(); ++k) ls.a_double_prime[k] += details.b[k];
  return merge(ls);
}

std::vector<SparseEntry> ortho_two_scale_matrix(const VpParams& params) {
  const int n = params.n();
  const int m = params.m();
  std::vector<SparseEntry> entries;
  entries.reserve(static_cast<std::size_t>(6 * n));
  // Every coarse and every non-top wavelet function has degree <= 3n-m,
  // where Phi^perp_{3n,j} = p_j and nu_{3n,j} = 1.
  for (int k = 0; k < n; ++k) {
    for (const auto& term : ortho_scaling_terms(params, k)) entries.push_back({k, term.degree, term.weight});
  }
  for (int r = n; r < 3 * n; ++r) {
    if (r > 3 * n - m) {
      entries.push_back({r, r, 1.0});
      continue;
    }
    for (const auto& term : ortho_wavelet_terms(params, r)) entries.push_back({r, term.degree, term.weight});
  }
  return entries;
}

std::vector<SparseEntry> ortho_two_scale_inverse(const VpParams& params) {
  const VpParams fine = params.tripled();
  const int n = params.n();
  std::vector<SparseEntry> entries;
  for (const auto& e : ortho_two_scale_matrix(params)) {
    const double inner = e.value * nu(fine, e.col);
    const double norm = e.row < n ? nu(params, e.row) : v_coeff(params, e.row);
    entries.push_back({e.col, e.row, inner / norm});
  }
  return entries;
}

OrthoLevelCoeffs ortho_decompose(const OrthoScalingCoeffs& a3n, const VpParams& params) {
  const int n = params.n();
  if (!(a3n.params == params.tripled())) throw std::invalid_argument("ortho_decompose: parameter mismatch");
  if (static_cast<int>(a3n.c.size()) != 3 * n) throw std::invalid_argument("ortho_decompose: length mismatch");
  std::vector<double> out(static_cast<std::size_t>(3 * n), 0.0);
  for (const auto& e : ortho_two_scale_inverse(params)) {
    out[static_cast<std::size_t>(e.col)] += a3n.c[static_cast<std::size_t>(e.row)] * e.value;
  }
  OrthoScalingCoeffs coarse{params, std::vector<double>(out.begin(), out.begin() + n)};
  OrthoWaveletCoeffs details{params, std::vector<double>(out.begin() + n, out.end())};
  return {std::move(coarse), std::move(details)};
}

OrthoScalingCoeffs ortho_reconstruct(const OrthoScalingCoeffs& coarse, const OrthoWaveletCoeffs& details) {
  if (!(coarse.params == details.params)) throw std::invalid_argument("ortho_reconstruct: parameter mismatch");
  const VpParams& params = coarse.params;
  const int n = params.n();
  if (static_cast<int>(coarse.c.size()) != n || static_cast<int>(details.d.size()) != 2 * n) {
    throw std::invalid_argument("ortho_reconstruct: length mismatch");
  }
  std::vector<double> out(static_cast<std::size_t>(3 * n), 0.0);
  for (const auto& e : ortho_two_scale_matrix(params)) {
    const double in = e.row < n ? coarse.c[static_cast<std::size_t>(e.row)]
                                : details.d[static_cast<std::size_t>(e.row - n)];
    out[static_cast<std::size_t>(e.col)] += in * e.value;
  }
  return {params.tripled(), std::move(out)};
}

int m_from_theta(double theta, int n) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0,1)");
  // Guard against theta*n landing a hair below an integer.
  const int m = static_cast<int>(std::floor(theta * n + 1e-9));
  return std::clamp(m, 1, std::max(1, n - 1));
}

MSchedule MSchedule::theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0,1)");
  MSchedule s;
  s.rule_ = theta;
  return s;
}

MSchedule MSchedule::explicit_list(std::vector<int> ms) {
  MSchedule s;
  s.rule_ = std::move(ms);
  return s;
}

int MSchedule::m_for(int index, int n) const {
  int m = 0;
  if (const auto* theta = std::get_if<double>(&rule_)) {
    m = m_from_theta(*theta, n);
  } else {
    const auto& list = std::get<std::vector<int>>(rule_);
    if (index < 0 || index >= static_cast<int>(list.size())) {
      throw std::invalid_argument("m-list has no entry for level " + std::to_string(index));
    }
    m = list[static_cast<std::size_t>(index)];
  }
  if (!(m > 0 && m < n)) {
    throw std::invalid_argument("invalid m=" + std::to_string(m) + " at level n=" + std::to_string(n));
  }
  return m;
}

bool MSchedule::clamps(std::span<const int> sizes) const {
  const auto* theta = std::get_if<double>(&rule_);
  if (theta == nullptr) return false;
  return std::any_of(sizes.begin(), sizes.end(),
                     [&](int n) { return std::floor(*theta * n + 1e-9) < 1.0; });
}

std::optional<double> MSchedule::theta_value() const {
  if (const auto* theta = std::get_if<double>(&rule_)) return *theta;
  return std::nullopt;
}

int count_levels(int total, int n0) {
  if (n0 < 1 || total < n0 || total % n0 != 0) {
    throw std::invalid_argument("length " + std::to_string(total) + " is not n0 * 3^J for n0=" + std::to_string(n0));
  }
  int q = total / n0;
  int levels = 0;
  while (q % 3 == 0) {
    q /= 3;
    ++levels;
  }
  if (q != 1) {
    throw std::invalid_argument("length " + std::to_string(total) + " is not n0 * 3^J for n0=" + std::to_string(n0));
  }
  return levels;
}

int Pyramid::finest_size() const { return levels.empty() ? n0 : 3 * levels.back().n; }

void Pyramid::validate() const {
  if (n0 < 2) throw std::invalid_argument("pyramid: n0 must be >= 2");
  if (levels.empty()) throw std::invalid_argument("pyramid: no levels");
  if (static_cast<int>(coarse.size()) != n0) throw std::invalid_argument("pyramid: coarse length != n0");
  int n = n0;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const auto& level = levels[j];
    if (level.n != n) {
      throw std::invalid_argument("pyramid: level " + std::to_string(j) + " has n=" + std::to_string(level.n) +
                                  ", expected " + std::to_string(n));
    }
    if (!(level.m > 0 && level.m < level.n)) {
      throw std::invalid_argument("pyramid: level n=" + std::to_string(level.n) + " has invalid m=" +
                                  std::to_string(level.m));
    }
    if (static_cast<int>(level.details.size()) != 2 * level.n) {
      throw std::invalid_argument("pyramid: level n=" + std::to_string(level.n) + " needs 2n details");
    }
    n *= 3;
  }
}

Pyramid multi_decompose(std::span<const double> samples, int n0, const MSchedule& schedule) {
  const int total = static_cast<int>(samples.size());
  const int levels = count_levels(total, n0);
  if (levels < 1) throw std::invalid_argument("multi_decompose: need at least one level");

  std::vector<int> sizes(static_cast<std::size_t>(levels));
  std::vector<int> ms(static_cast<std::size_t>(levels));
  for (int j = 0, n = n0; j < levels; ++j, n *= 3) {
    sizes[static_cast<std::size_t>(j)] = n;
    ms[static_cast<std::size_t>(j)] = schedule.m_for(j, n);
  }

  Pyramid p;
  p.n0 = n0;
  p.levels.resize(static_cast<std::size_t>(levels));
  std::vector<double> current(samples.begin(), samples.end());
  for (int j = levels - 1; j >= 0; --j) {
    const auto idx = static_cast<std::size_t>(j);
    LevelCoeffs lc = decompose_level(current, VpParams(sizes[idx], ms[idx]));
    p.levels[idx] = PyramidLevel{sizes[idx], ms[idx], std::move(lc.details.b)};
    current = std::move(lc.coarse.a);
  }
  p.coarse = std::move(current);
  return p;
}

std::vector<double> multi_reconstruct(const Pyramid& p) {
  p.validate();
  std::vector<double> current = p.coarse;
  for (const auto& level : p.levels) {
    const VpParams params(level.n, level.m);
    current = reconstruct_level(ScalingCoeffs{params, std::move(current)}, WaveletCoeffs{params, level.details});
  }
  return current;
}

std::vector<std::vector<double>> pyramid_components(const Pyramid& p) {
  p.validate();
  Pyramid zeroed = p;
  std::fill(zeroed.coarse.begin(), zeroed.coarse.end(), 0.0);
  for (auto& level : zeroed.levels) std::fill(level.details.begin(), level.details.end(), 0.0);

  std::vector<std::vector<double>> out;
  Pyramid only = zeroed;
  only.coarse = p.coarse;
  out.push_back(multi_reconstruct(only));
  for (std::size_t j = 0; j < p.levels.size(); ++j) {
    only = zeroed;
    only.levels[j].details = p.levels[j].details;
    out.push_back(multi_reconstruct(only));
  }
  return out;
}

}  // namespace vpwave
