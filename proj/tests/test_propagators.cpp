#include <doctest.h>

#include <cmath>
#include <r3s2/operators.hpp>
#include <r3s2/propagators.hpp>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"

using namespace r3s2;

namespace {

SphCoeffVector random_block(int m, int lmax, oracle::Rng& rng) {
  SphCoeffVector u(m, lmax);
  for (auto& v : u.values) v = Complex{rng.range(-1, 1), rng.range(-1, 1)};
  return u;
}

double diff(const SphCoeffVector& a, const SphCoeffVector& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

ProcessParams diffusion_params(double t) {
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = t;
  return p;
}

ProcessParams completion_params(double t) {
  ProcessParams p;
  p.process = ProcessKind::Completion;
  p.D44 = 0.5;
  p.t = t;
  return p;
}

}  // namespace

TEST_CASE("diffusion at r=0: pure spherical decay") {
  oracle::Rng rng(3);
  const auto p = diffusion_params(2.0);
  const SphCoeffVector u = random_block(1, 8, rng);
  const SphCoeffVector w = evolve_diffusion(u, 0.0, p);
  for (int l = 1; l <= 8; ++l) {
    const Complex expect = u.at_l(l) * std::exp(-p.D44 * l * (l + 1) * p.t);
    CHECK(std::abs(w.at_l(l) - expect) < 1e-12);
  }
}

TEST_CASE("diffusion t=0 is the identity") {
  oracle::Rng rng(5);
  const SphCoeffVector u = random_block(0, 6, rng);
  CHECK(diff(evolve_diffusion(u, 1.7, diffusion_params(0.0)), u) < 1e-12);
}

TEST_CASE("diffusion semigroup property") {
  oracle::Rng rng(7);
  const SphCoeffVector u = random_block(2, 8, rng);
  const double r = 1.3;
  const SphCoeffVector two_step =
      evolve_diffusion(evolve_diffusion(u, r, diffusion_params(0.4)), r, diffusion_params(0.9));
  const SphCoeffVector one_step = evolve_diffusion(u, r, diffusion_params(1.3));
  CHECK(diff(two_step, one_step) < 1e-10);
}

TEST_CASE("diffusion propagator vs dense matrix exponential oracle") {
  const auto p = diffusion_params(1.5);
  for (int m : {0, 3}) {
    const int lmax = 8;
    const double r = 2.0;
    const Eigen::MatrixXd a = -(p.D33 * r * r * build_m1(m, lmax).dense() +
                                p.D44 * build_lambda(m, lmax).dense()) *
                              p.t;
    const Eigen::MatrixXd expm = a.exp();
    const Eigen::MatrixXcd lib = propagator_matrix(m, lmax, r, p, EvolutionOp::Evolve);
    CHECK((lib - expm.cast<Complex>()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("diffusion resolvent closed form at r=0 and large-alpha limit") {
  oracle::Rng rng(9);
  auto p = diffusion_params(0.0);
  p.alpha = 0.7;
  const SphCoeffVector u = random_block(0, 6, rng);
  const SphCoeffVector w = resolvent_diffusion(u, 0.0, p);
  for (int l = 0; l <= 6; ++l) {
    const Complex expect = u.at_l(l) * (p.alpha / (p.alpha + p.D44 * l * (l + 1)));
    CHECK(std::abs(w.at_l(l) - expect) < 1e-12);
  }
  p.alpha = 1e9;
  CHECK(diff(resolvent_diffusion(u, 2.0, p), u) < 1e-7);
}

TEST_CASE("resolvent equals the Laplace transform of the evolution") {
  // alpha int_0^inf e^{-alpha t} K_t dt via 256-point Gauss-Laguerre.
  static const auto q = oracle::gauss_laguerre(256);
  oracle::Rng rng(11);
  for (bool completion : {false, true}) {
    ProcessParams p = completion ? completion_params(0.0) : diffusion_params(0.0);
    p.alpha = 0.8;
    const int m = 1;
    const SphCoeffVector u = random_block(m, 8, rng);
    for (double r : {0.0, 1.0, 4.0}) {
      SphCoeffVector acc(m, 8);
      for (size_t i = 0; i < q.nodes.size(); ++i) {
        ProcessParams pe = p;
        pe.t = q.nodes[i] / p.alpha;
        const SphCoeffVector k =
            completion ? evolve_completion(u, r, pe) : evolve_diffusion(u, r, pe);
        for (size_t j = 0; j < acc.values.size(); ++j) {
          acc.values[j] += q.weights[i] * k.values[j];
        }
      }
      const SphCoeffVector res =
          completion ? resolvent_completion(u, r, p) : resolvent_diffusion(u, r, p);
      CHECK(diff(acc, res) < 1e-8);
    }
  }
}

TEST_CASE("completion r=0 matches the diffusion spherical decay") {
  oracle::Rng rng(13);
  const auto p = completion_params(1.0);
  const SphCoeffVector u = random_block(0, 8, rng);
  const SphCoeffVector w = evolve_completion(u, 0.0, p);
  for (int l = 0; l <= 8; ++l) {
    const Complex expect = u.at_l(l) * std::exp(-p.D44 * l * (l + 1) * p.t);
    CHECK(std::abs(w.at_l(l) - expect) < 1e-10);
  }
}

TEST_CASE("completion evolution is a contraction with the semigroup property") {
  oracle::Rng rng(15);
  const SphCoeffVector u = random_block(1, 8, rng);
  const double r = 2.5;
  double nu = 0.0, nw = 0.0;
  for (const auto& v : u.values) nu += std::norm(v);
  const SphCoeffVector w = evolve_completion(u, r, completion_params(0.8));
  for (const auto& v : w.values) nw += std::norm(v);
  CHECK(nw <= nu + 1e-12);
  const SphCoeffVector two = evolve_completion(
      evolve_completion(u, r, completion_params(0.3)), r, completion_params(0.5));
  CHECK(diff(two, w) < 1e-10);
}

TEST_CASE("completion resolvent: banded solve vs eigen-expansion") {
  oracle::Rng rng(17);
  ProcessParams p = completion_params(0.0);
  p.alpha = 0.4;
  const SphCoeffVector u = random_block(0, 10, rng);
  for (double r : {0.2, 0.9, 2.0}) {
    const SphCoeffVector direct = resolvent_completion(u, r, p);
    const SphCoeffVector eig = resolvent_completion_eigen(u, r, p);
    CHECK(diff(direct, eig) < 1e-8);
  }
}

TEST_CASE("elliptic propagator") {
  oracle::Rng rng(19);
  ProcessParams p;
  p.process = ProcessKind::Elliptic;
  p.D33 = 1.0;
  p.D44 = 0.2;
  p.D11 = 0.3;
  p.t = 1.2;
  const int m = 0, lmax = 8;
  const SphCoeffVector u = random_block(m, lmax, rng);

  SUBCASE("dense operator-exponential oracle") {
    // Generator: -D33 r^2 x^2 - D11 r^2 (1 - x^2) - D44 Lambda.
    const double r = 1.7;
    const Eigen::MatrixXd m1 = build_m1(m, lmax).dense();
    const Eigen::MatrixXd lam = build_lambda(m, lmax).dense();
    const Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(lmax + 1, lmax + 1);
    const Eigen::MatrixXd a =
        -(p.D33 * r * r * m1 + p.D11 * r * r * (ident - m1) + p.D44 * lam) * p.t;
    const Eigen::MatrixXd expm = a.exp();
    const SphCoeffVector w = evolve_elliptic(u, r, p);
    Eigen::VectorXcd uv(lmax + 1);
    for (int l = 0; l <= lmax; ++l) uv(l) = u.at_l(l);
    const Eigen::VectorXcd expect = expm.cast<Complex>() * uv;
    for (int l = 0; l <= lmax; ++l) CHECK(std::abs(w.at_l(l) - expect(l)) < 1e-10);
  }

  SUBCASE("D11 -> 0 recovers hypo-elliptic diffusion") {
    ProcessParams small = p;
    small.D11 = 1e-12;
    ProcessParams d = p;
    d.process = ProcessKind::Diffusion;
    d.D11 = 0.0;
    CHECK(diff(evolve_elliptic(u, 1.7, small), evolve_diffusion(u, 1.7, d)) < 1e-10);
  }

  SUBCASE("r = 0 identical to diffusion") {
    ProcessParams d = p;
    d.process = ProcessKind::Diffusion;
    d.D11 = 0.0;
    CHECK(diff(evolve_elliptic(u, 0.0, p), evolve_diffusion(u, 0.0, d)) < 1e-12);
  }

  SUBCASE("parameter validation") {
    ProcessParams bad = p;
    bad.D11 = 2.0;  // >= D33
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
}

TEST_CASE("gamma resolvent") {
  oracle::Rng rng(21);
  ProcessParams p = completion_params(0.0);
  p.alpha = 0.6;
  const SphCoeffVector u = random_block(0, 8, rng);

  SUBCASE("k = 1 is the plain resolvent") {
    p.gamma_k = 1;
    CHECK(diff(gamma_resolvent(u, 1.1, p), resolvent_completion(u, 1.1, p)) < 1e-12);
  }

  SUBCASE("k = 2 at r = 0: squared factors") {
    p.gamma_k = 2;
    const SphCoeffVector w = gamma_resolvent(u, 0.0, p);
    for (int l = 0; l <= 8; ++l) {
      const double f = p.alpha / (p.alpha + p.D44 * l * (l + 1));
      CHECK(std::abs(w.at_l(l) - u.at_l(l) * f * f) < 1e-12);
    }
  }

  SUBCASE("matches the Gamma-weighted time integral") {
    // int_0^inf K_t Gamma(t; k, alpha) dt with Gamma(t;k,a) =
    // a^k t^{k-1} e^{-at}/(k-1)!; substitute s = alpha t and use
    // Gauss-Laguerre with the s^{k-1}/(k-1)! factor in the integrand.
    static const auto q = oracle::gauss_laguerre(256);
    p.gamma_k = 3;
    const double r = 1.4;
    SphCoeffVector acc(0, 8);
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      ProcessParams pe = p;
      pe.t = q.nodes[i] / p.alpha;
      const double weight =
          q.weights[i] * std::pow(q.nodes[i], p.gamma_k - 1) / 2.0;  // (k-1)! = 2
      const SphCoeffVector k = evolve_completion(u, r, pe);
      for (size_t j = 0; j < acc.values.size(); ++j) acc.values[j] += weight * k.values[j];
    }
    CHECK(diff(acc, gamma_resolvent(u, r, p)) < 1e-7);
  }
}

TEST_CASE("mass conservation and linearity") {
  oracle::Rng rng(23);
  auto p = diffusion_params(1.0);
  p.alpha = 0.9;
  SphCoeffVector u = random_block(0, 6, rng);
  const Complex c00 = u.at_l(0);
  CHECK(std::abs(evolve_diffusion(u, 0.0, p).at_l(0) - c00) < 1e-12);
  CHECK(std::abs(resolvent_diffusion(u, 0.0, p).at_l(0) - c00) < 1e-12);

  const SphCoeffVector v = random_block(0, 6, rng);
  SphCoeffVector lin(0, 6);
  for (size_t i = 0; i < lin.values.size(); ++i) {
    lin.values[i] = 2.0 * u.values[i] - 0.5 * v.values[i];
  }
  const SphCoeffVector a = evolve_diffusion(lin, 1.5, p);
  const SphCoeffVector b1 = evolve_diffusion(u, 1.5, p);
  const SphCoeffVector b2 = evolve_diffusion(v, 1.5, p);
  for (size_t i = 0; i < lin.values.size(); ++i) {
    CHECK(std::abs(a.values[i] - (2.0 * b1.values[i] - 0.5 * b2.values[i])) < 1e-12);
  }
}
