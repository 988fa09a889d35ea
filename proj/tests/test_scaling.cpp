#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "vpwave/chebgrid.hpp"
#include "vpwave/scaling.hpp"

using namespace vpwave;

namespace {

std::vector<double> samples(int n, auto&& f) {
  std::vector<double> v;
  for (int k = 1; k <= n; ++k) v.push_back(f(oracle::node(n, k)));
  return v;
}

std::vector<VpParams> param_sweep() {
  std::vector<VpParams> out;
  for (int n : {4, 9, 27}) {
    for (int m : {1, (n + 1) / 3, n - 1}) out.emplace_back(n, m);
  }
  return out;
}

}  // namespace

TEST_CASE("eval_scaling delta property") {
  for (const auto& p : param_sweep()) {
    const int n = p.n();
    for (int k = 1; k <= n; ++k) {
      for (int h = 1; h <= n; ++h) {
        CHECK(std::abs(eval_scaling(p, k, oracle::node(n, h)) - (h == k ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("eval_scaling against the naive kernel") {
  CHECK(eval_scaling(VpParams(4, 2), 1, 0.0) == doctest::Approx(oracle::kPi / 4 * oracle::kernel(4, 2, oracle::node(4, 1), 0.0)).epsilon(1e-13));
  oracle::Rng rng(21);
  for (const auto& p : param_sweep()) {
    for (int i = 0; i < 30; ++i) {
      const double x = rng.uniform();
      const int k = 1 + static_cast<int>(rng.uniform(0, p.n() - 1e-9));
      CHECK(std::abs(eval_scaling(p, k, x) - oracle::scaling(p.n(), p.m(), k, x)) <= 1e-11);
    }
  }
  const VpParams p(4, 2);
  CHECK_THROWS_AS(eval_scaling(p, 0, 0.0), std::out_of_range);
  CHECK_THROWS_AS(eval_scaling(p, 5, 0.0), std::out_of_range);
  CHECK_THROWS_AS(eval_scaling(p, 1, 1.5), std::domain_error);
}

TEST_CASE("uniform bound: max |Phi_k| is 1") {
  for (const auto& p : {VpParams(4, 2), VpParams(9, 4), VpParams(9, 1), VpParams(27, 18)}) {
    for (int k = 1; k <= p.n(); ++k) {
      double mx = 0.0;
      for (int i = 0; i <= 4000; ++i) mx = std::max(mx, std::abs(eval_scaling(p, k, std::cos(oracle::kPi * i / 4000))));
      mx = std::max(mx, std::abs(eval_scaling(p, k, oracle::node(p.n(), k))));
      CHECK(mx >= 1.0 - 1e-10);
      CHECK(mx <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("moments and polynomial reproduction") {
  oracle::Rng rng(23);
  for (const auto& p : param_sweep()) {
    const int n = p.n();
    for (int s = 0; s <= p.low_degree(); ++s) {
      for (int k = 1; k <= n; k += std::max(1, n / 5)) {
        const double q = gauss_cheb_quadrature([&](double x) { return std::pow(x, s) * eval_scaling(p, k, x); }, n + p.m() + s);
        CHECK(std::abs(q - oracle::kPi / n * std::pow(oracle::node(n, k), s)) <= 1e-10);
      }
      for (int i = 0; i < 10; ++i) {
        const double x = rng.uniform();
        double sum = 0.0;
        for (int k = 1; k <= n; ++k) sum += std::pow(oracle::node(n, k), s) * eval_scaling(p, k, x);
        CHECK(std::abs(sum - std::pow(x, s)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("vp_interpolant and eval_coeffs") {
  oracle::Rng rng(29);
  const VpParams p62(6, 2);
  const auto cubic = vp_interpolant(samples(6, [](double x) { return x * x * x; }), p62);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform();
    CHECK(std::abs(eval_coeffs(cubic, x) - x * x * x) <= 1e-10);
  }
  const auto one = vp_interpolant(std::vector<double>(9, 1.0), VpParams(9, 4));
  for (int i = 0; i < 20; ++i) CHECK(std::abs(eval_coeffs(one, rng.uniform()) - 1.0) <= 1e-12);

  std::vector<double> e1(9, 0.0);
  e1[0] = 1.0;
  const auto delta = vp_interpolant(e1, VpParams(9, 4));
  for (int i = 0; i < 20; ++i) {
    const double x = rng.uniform();
    CHECK(std::abs(eval_coeffs(delta, x) - eval_scaling(VpParams(9, 4), 1, x)) <= 1e-14);
  }

  const auto sq = vp_interpolant(samples(8, [](double x) { return x * x; }), VpParams(8, 4));
  CHECK(eval_coeffs(sq, 0.123) == doctest::Approx(0.015129).epsilon(1e-10));
  const ScalingCoeffs zero{VpParams(8, 4), std::vector<double>(8, 0.0)};
  for (double v : eval_coeffs(zero, rng.vec(10))) CHECK(v == 0.0);

  for (int k = 1; k <= 8; ++k) {
    std::vector<double> ek(8, 0.0);
    ek[static_cast<std::size_t>(k - 1)] = 1.0;
    CHECK(eval_coeffs(ScalingCoeffs{VpParams(8, 4), ek}, oracle::node(8, k)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(vp_interpolant(std::vector<double>(5, 0.0), p62), std::invalid_argument);
  CHECK_THROWS_AS(eval_coeffs(ScalingCoeffs{p62, std::vector<double>(5, 0.0)}, std::vector<double>{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_coeffs(cubic, 2.0), std::domain_error);
}

TEST_CASE("orthogonal scaling basis") {
  const VpParams p(4, 2);
  CHECK(nu(p, 1) == 1.0);
  CHECK(nu(p, 3) == 0.625);
  for (int n : {5, 9, 27}) {
    for (int m : {1, 3, n - 1}) {
      if (m >= n) continue;
      CHECK(nu(VpParams(n, m), n - 1) == doctest::Approx((m * m + 1.0) / (2.0 * m * m)).epsilon(1e-15));
    }
  }
  CHECK(eval_ortho_scaling(p, 3, 0.5) == doctest::Approx(0.75 * oracle::p(3, 0.5) - 0.25 * oracle::p(5, 0.5)).epsilon(1e-14));
  for (int r = 0; r <= 2; ++r) CHECK(eval_ortho_scaling(p, r, 0.37) == doctest::Approx(cheb_p(r, 0.37)).epsilon(1e-15));
  CHECK_THROWS_AS(nu(p, 4), std::out_of_range);
  CHECK_THROWS_AS(eval_ortho_scaling(p, -1, 0.0), std::out_of_range);

  for (const auto& q : {VpParams(4, 2), VpParams(9, 4), VpParams(9, 8), VpParams(27, 1)}) {
    const int n = q.n();
    const int order = n + q.m() + 1;
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        const double g = gauss_cheb_quadrature([&](double x) { return eval_ortho_scaling(q, r, x) * eval_ortho_scaling(q, s, x); }, order);
        CHECK(std::abs(g - (r == s ? nu(q, r) : 0.0)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("to_ortho / from_ortho") {
  for (int n : {4, 9, 27}) {
    const VpParams p(n, (n + 1) / 3);
    const auto c1 = to_ortho(ScalingCoeffs{p, std::vector<double>(static_cast<std::size_t>(n), 1.0)});
    CHECK(c1.c[0] == doctest::Approx(std::sqrt(oracle::kPi)).epsilon(1e-14));
    for (int r = 1; r < n; ++r) CHECK(std::abs(c1.c[static_cast<std::size_t>(r)]) <= 1e-14);

    const auto cp1 = to_ortho(ScalingCoeffs{p, samples(n, [](double x) { return oracle::p(1, x); })});
    for (int r = 0; r < n; ++r) CHECK(std::abs(cp1.c[static_cast<std::size_t>(r)] - (r == 1 ? 1.0 : 0.0)) <= 1e-13);

    std::vector<double> top(static_cast<std::size_t>(n), 0.0);
    top.back() = 1.0;
    const auto a_top = from_ortho(OrthoScalingCoeffs{p, top});
    for (int k = 1; k <= n; ++k) CHECK(std::abs(a_top.a[static_cast<std::size_t>(k - 1)] - oracle::p(n - 1, oracle::node(n, k))) <= 1e-13);
  }

  oracle::Rng rng(31);
  const VpParams p(27, 9);
  const auto c = rng.vec(27);
  CHECK(oracle::rel_diff(to_ortho(from_ortho(OrthoScalingCoeffs{p, c})).c, c) <= 1e-12);
  const auto a = rng.vec(27);
  const ScalingCoeffs sc{p, a};
  CHECK(oracle::rel_diff(from_ortho(to_ortho(sc)).a, a) <= 1e-12);

  const auto xs = rng.vec(25);
  CHECK(oracle::max_diff(eval_ortho_coeffs(to_ortho(sc), xs), eval_coeffs(sc, xs)) <= 1e-10);
}

TEST_CASE("low-degree polynomials have no high modes") {
  oracle::Rng rng(37);
  for (const auto& p : {VpParams(9, 3), VpParams(27, 10)}) {
    const int deg = p.low_degree();
    std::vector<double> coeffs = rng.vec(static_cast<std::size_t>(deg + 1));
    auto poly = [&](double x) {
      double s = 0.0;
      for (int j = 0; j <= deg; ++j) s += coeffs[static_cast<std::size_t>(j)] * oracle::p(j, x);
      return s;
    };
    const auto c = to_ortho(ScalingCoeffs{p, samples(p.n(), poly)});
    for (int r = 0; r < p.n(); ++r) {
      const double expect = r <= deg ? coeffs[static_cast<std::size_t>(r)] : 0.0;
      CHECK(std::abs(c.c[static_cast<std::size_t>(r)] - expect) <= 1e-10);
    }
  }
}
