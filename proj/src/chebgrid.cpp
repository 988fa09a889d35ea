#include "vpwave/chebgrid.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace vpwave {

ChebGrid::ChebGrid(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ChebGrid: n must be >= 1");
  nodes_.resize(static_cast<std::size_t>(n));
  angles_.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double t = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * n);
    angles_[static_cast<std::size_t>(k - 1)] = t;
    nodes_[static_cast<std::size_t>(k - 1)] = std::cos(t);
  }
}

ChebGrid make_grid(int n) { return ChebGrid(n); }

GridEmbedding make_embedding(int n) {
  if (n < 1) throw std::invalid_argument("make_embedding: n must be >= 1");
  GridEmbedding e;
  e.n = n;
  e.x_index_in_3n.reserve(static_cast<std::size_t>(n));
  e.y_index_in_3n.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) e.x_index_in_3n.push_back(3 * k - 1);
  for (int k = 1; k <= 2 * n; ++k) e.y_index_in_3n.push_back(y_index_in_3n(k));
  return e;
}

double cheb_p(int r, double x) {
  if (r < 0) throw std::invalid_argument("cheb_p: negative degree");
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("cheb_p: |x| > 1");
  return cheb_norm(r) * std::cos(r * std::acos(x));
}

namespace {

// FFTW plans are created once per (kind, length) and only executed afterwards.
// The planner is not reentrant, so creation is serialised; fftw_execute_r2r on
// an existing plan is thread-safe.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(fftw_r2r_kind kind, int n) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(static_cast<int>(kind), n);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<double> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_r2r_1d(n, in.data(), out.data(), kind,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw: plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

// FFTW REDFT10: Y_r = 2 sum_j X_j cos(pi r (2j+1) / (2n)).
std::vector<double> dct2_scaled(std::span<const double> v, double scale) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw std::invalid_argument("dct2_scaled: empty input");
  std::vector<double> in(v.begin(), v.end());
  std::vector<double> out(v.size());
  fftw_execute_r2r(plan_cache().get(FFTW_REDFT10, n), in.data(), out.data());
  for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] *= 0.5 * scale * cheb_norm(r);
  return out;
}

// FFTW REDFT01: Y_k = X_0 + 2 sum_{r>=1} X_r cos(pi r (2k+1) / (2n)).
std::vector<double> dct3_scaled(std::span<const double> alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw std::invalid_argument("dct3_scaled: empty input");
  std::vector<double> in(alpha.size());
  in[0] = alpha[0] * cheb_norm(0);
  for (int r = 1; r < n; ++r) {
    in[static_cast<std::size_t>(r)] = 0.5 * alpha[static_cast<std::size_t>(r)] * cheb_norm(r);
  }
  std::vector<double> out(alpha.size());
  fftw_execute_r2r(plan_cache().get(FFTW_REDFT01, n), in.data(), out.data());
  return out;
}

}  // namespace vpwave
