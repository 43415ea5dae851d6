#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "tv_clip.hpp"

using namespace tvd;

namespace {

std::vector<double> random_vec(std::mt19937& gen, std::size_t n, double lo = 0.0,
                               double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

}  // namespace

TEST_CASE("denoise_exact trivial cases") {
  std::mt19937 gen(11);
  const Signal y(random_vec(gen, 12, -2, 2));
  CHECK(denoise_exact(y, 0.0).samples == y.samples);

  // N=2 analytic: shift both ends toward each other by min(lambda/2, gap/2)
  const Signal x = denoise_exact(Signal({0, 4}), 2.0);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(3.0));
}

TEST_CASE("denoise_exact collapses to the mean at lambda >= lambda_max") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial;
    const Signal y(random_vec(gen, n, -1, 3));
    const double lmax = lambda_max(y);
    const double mean = signal_mean(y);
    const Signal x = denoise_exact(y, lmax);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(x[i] == doctest::Approx(mean).epsilon(1e-9));
    // just below the threshold the solution still has structure
    if (lmax > 0.0) CHECK(tv_seminorm(denoise_exact(y, 0.99 * lmax)) > 0.0);
  }
}

TEST_CASE("denoise_exact certificate residuals vanish") {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const Signal y(random_vec(gen, n, -2, 2));
    const double lmax = lambda_max(y);
    for (const double f : {0.05, 0.3, 0.8, 1.5}) {
      const double lam = f * std::max(lmax, 1e-3);
      const Signal x = denoise_exact(y, lam);
      const OptimalityCertificate c = check_optimality(y, x, lam);
      const double scale = std::max(peak_to_peak(y), 1.0);
      CHECK(c.max_feasibility_violation <= 1e-9 * scale);
      CHECK(c.max_complementarity_violation <= 1e-9 * scale);
      CHECK(std::abs(c.balance_residual) <= 1e-9 * scale * static_cast<double>(n));
    }
  }
}

TEST_CASE("denoise_bruteforce examples") {
  CHECK(denoise_bruteforce(Signal({2, 2}), 1.0, 0.0, 4.0, 5).samples ==
        std::vector<double>{2, 2});

  const Signal x = denoise_bruteforce(Signal({0, 4}), 2.0, -1.0, 5.0, 601);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-9));

  // lambda >= lambda_max pushes toward the constant mean 1/3
  const Signal z = denoise_bruteforce(Signal({0, 1, 0}), 10.0, 0.0, 1.0, 101);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(z[i] - 1.0 / 3.0) <= 0.005 + 1e-12);
}

TEST_CASE("denoise_bruteforce refuses large or degenerate inputs") {
  const Signal big({1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(denoise_bruteforce(big, 1.0, 0, 1, 10), unsupported_error);
  const Signal ok({1, 2});
  CHECK_THROWS_AS(denoise_bruteforce(ok, 1.0, 1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(denoise_bruteforce(ok, 1.0, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("oracle agreement: brute force vs taut string on tiny instances") {
  std::mt19937 gen(77);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;  // 2..4
    const Signal y(random_vec(gen, n, 0.0, 1.0));
    const double lmax = lambda_max(y);
    for (const double f : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      const double lam = f * lmax;
      const double h = 0.01;
      double lo = y[0], hi = y[0];
      for (double v : y.samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
      const Signal bf = denoise_bruteforce(y, lam, lo, lo + h * static_cast<double>(steps - 1),
                                           steps);
      const Signal ex = denoise_exact(y, lam);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(bf[i] - ex[i]) <= std::sqrt(static_cast<double>(n)) * h);
    }
  }
}

TEST_CASE("optimality dominance over random candidates") {
  std::mt19937 gen(123);
  const Signal y(random_vec(gen, 12, -1, 1));
  const double lam = 0.4 * lambda_max(y);
  const Signal best = denoise_exact(y, lam);
  const double c_best = cost(y, best, lam);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    Signal cand = y;
    for (double& v : cand.samples) v = dist(gen);
    CHECK(cost(y, cand, lam) >= c_best - 1e-12);
  }
}

TEST_CASE("perturbing the exact solution strictly increases cost") {
  std::mt19937 gen(321);
  const Signal y(random_vec(gen, 20, -1, 1));
  const double lam = 0.3 * lambda_max(y);
  const Signal best = denoise_exact(y, lam);
  const double c_best = cost(y, best, lam);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    Signal cand = best;
    for (double& v : cand.samples) v += 1e-3 * dir(gen);
    CHECK(cost(y, cand, lam) > c_best);
  }
}

TEST_CASE("residual norm is non-decreasing in lambda") {
  std::mt19937 gen(55);
  const Signal y(random_vec(gen, 40, -2, 2));
  const double lmax = lambda_max(y);
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double lam = lmax * static_cast<double>(i) / 20.0;
    const Signal x = denoise_exact(y, lam);
    double r = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) r += (y[j] - x[j]) * (y[j] - x[j]);
    r = std::sqrt(r);
    CHECK(r >= prev - 1e-9);
    prev = r;
  }
}

TEST_CASE("denoise_exact preserves the mean") {
  std::mt19937 gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Signal y(random_vec(gen, 3 + trial, -4, 4));
    const double lam = 0.5 * std::max(lambda_max(y), 1e-6);
    const Signal x = denoise_exact(y, lam);
    CHECK(signal_mean(x) ==
          doctest::Approx(signal_mean(y)).epsilon(1e-12).scale(std::max(1.0, std::abs(signal_mean(y)))));
  }
}

TEST_CASE("lambda_max cross-check against the exact solver") {
  CHECK(denoise_exact(Signal({0, 4}), 4.0).samples[0] == doctest::Approx(2.0));
  CHECK(denoise_exact(Signal({0, 4}), 4.0).samples[1] == doctest::Approx(2.0));

  std::mt19937 gen(9);
  const Signal y(random_vec(gen, 16, -1, 1));
  const double lmax = lambda_max(y);
  const Signal at = denoise_exact(y, lmax);
  const double mean = signal_mean(y);
  for (std::size_t i = 0; i < y.size(); ++i)
    CHECK(at[i] == doctest::Approx(mean).epsilon(1e-9));
  CHECK(tv_seminorm(denoise_exact(y, 0.99 * lmax)) > 0.0);
}
