#include "specdim/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace specdim {

namespace {

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

// log of y^a z^b at angle t (y = cos t, z = sin t); -inf at a vanishing factor.
double log_g(std::int64_t a, std::int64_t b, double t) {
  double y = std::cos(t), z = std::sin(t);
  double v = 0;
  if (a > 0) {
    if (y <= 0) return -std::numeric_limits<double>::infinity();
    v += a * std::log(y);
  }
  if (b > 0) {
    if (z <= 0) return -std::numeric_limits<double>::infinity();
    v += b * std::log(z);
  }
  return v;
}

}  // namespace

double log_monomial_sup(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  return 0.5 * (xlogx(double(a)) + xlogx(double(b)) - xlogx(double(a + b)));
}

double monomial_sup(std::int64_t a, std::int64_t b) {
  return std::exp(log_monomial_sup(a, b));
}

double monomial_sup_oracle(std::int64_t a, std::int64_t b, int grid_size) {
  if (grid_size < 100) throw std::invalid_argument("grid_size must be >= 100");
  if (a == 0 && b == 0) return 1.0;
  const double pi2 = std::acos(0.0);  // pi/2

  // dense sweep
  int best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  std::vector<double> ts(grid_size + 1);
  for (int i = 0; i <= grid_size; ++i) {
    ts[i] = pi2 * i / grid_size;
    double v = log_g(a, b, ts[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }

  // golden-section refinement on the bracketing interval
  double lo = ts[std::max(0, best - 1)];
  double hi = ts[std::min(grid_size, best + 1)];
  const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
  double c = hi - (hi - lo) / gr;
  double d = lo + (hi - lo) / gr;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (log_g(a, b, c) > log_g(a, b, d))
      hi = d;
    else
      lo = c;
    c = hi - (hi - lo) / gr;
    d = lo + (hi - lo) / gr;
  }
  double t = (lo + hi) / 2;
  return std::exp(std::max(best_v, log_g(a, b, t)));
}

Rational l2_monomial_norm_sq(const SphereFamily& fam, const SpectrumIndex& g) {
  auto factorial = [](std::int64_t k) {
    BigInt f = 1;
    for (std::int64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (fam.family == Family::OddA) {
    // int_{S^{2n+1}} |z_1|^{2a} |z_{n+1}|^{2b} dsigma = n! a! b! / (n+a+b)!
    Rational num = Rational(factorial(fam.n)) * Rational(factorial(g.g1)) *
                   Rational(factorial(g.g2));
    return num / Rational(factorial(fam.n + g.g1 + g.g2));
  }
  // Real sphere S^{d-1}: moment of |first Witt coordinate|^2 = (x_1^2+x_2^2)/2
  // to the k-th power equals k! / prod_{j<k} (d + 2j).
  const std::int64_t d = fam.sphere_dim() + 1;
  Rational den = 1;
  for (std::int64_t j = 0; j < g.g1; ++j) den *= (d + 2 * j);
  return Rational(factorial(g.g1)) / den;
}

MonteCarloEstimate mc_l2_monomial_norm_sq(const SphereFamily& fam, const SpectrumIndex& g,
                                          int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sum = 0, sumsq = 0;
  if (fam.family == Family::OddA) {
    const int m = fam.n + 1;
    for (int s = 0; s < samples; ++s) {
      double nrm = 0;
      std::vector<double> re(m), im(m);
      for (int i = 0; i < m; ++i) {
        re[i] = gauss(rng);
        im[i] = gauss(rng);
        nrm += re[i] * re[i] + im[i] * im[i];
      }
      double z1 = (re[0] * re[0] + im[0] * im[0]) / nrm;
      double zl = (re[m - 1] * re[m - 1] + im[m - 1] * im[m - 1]) / nrm;
      double v = std::pow(z1, double(g.g1)) * std::pow(zl, double(g.g2));
      sum += v;
      sumsq += v * v;
    }
  } else {
    const int d = fam.sphere_dim() + 1;
    for (int s = 0; s < samples; ++s) {
      double nrm = 0;
      std::vector<double> x(d);
      for (int i = 0; i < d; ++i) {
        x[i] = gauss(rng);
        nrm += x[i] * x[i];
      }
      double u = (x[0] * x[0] + x[1] * x[1]) / (2 * nrm);
      double v = std::pow(u, double(g.g1));
      sum += v;
      sumsq += v * v;
    }
  }
  double mean = sum / samples;
  double var = std::max(0.0, sumsq / samples - mean * mean);
  return {mean, std::sqrt(var / samples)};
}

double log_hwv_norm(const SphereFamily& fam, const SpectrumIndex& g, NormKind kind) {
  if (kind == NormKind::Sup) {
    if (fam.family == Family::OddA) return log_monomial_sup(g.g1, g.g2);
    return 0.0;  // B/D highest-weight monomials have sup norm 1
  }
  if (fam.family == Family::OddA) {
    return 0.5 * (std::lgamma(double(fam.n + 1)) + std::lgamma(double(g.g1 + 1)) +
                  std::lgamma(double(g.g2 + 1)) -
                  std::lgamma(double(fam.n + g.g1 + g.g2 + 1)));
  }
  const double d = fam.sphere_dim() + 1;
  double v = std::lgamma(double(g.g1 + 1));
  for (std::int64_t j = 0; j < g.g1; ++j) v -= std::log(d + 2 * j);
  return 0.5 * v;
}

double hwv_norm(const SphereFamily& fam, const SpectrumIndex& g, NormKind kind) {
  return std::exp(log_hwv_norm(fam, g, kind));
}

RatioBoundReport ratio_bound_check(MonomialExponents f, MonomialExponents h, int m_max) {
  if (h.a == 0 && h.b == 0) throw std::invalid_argument("h must be nonconstant");
  double max_ratio = 0;
  for (int m = 0; m <= m_max; ++m) {
    double num = log_monomial_sup(f.a + m * h.a, f.b + m * h.b);
    double den = log_monomial_sup(f.a + (m + 1) * h.a, f.b + (m + 1) * h.b);
    max_ratio = std::max(max_ratio, std::exp(num - den));
  }
  // x0 maximizes f; for constant f any point works and the maximizer of h
  // gives the sharpest admissible bound.
  std::int64_t xa = f.a, xb = f.b;
  if (xa == 0 && xb == 0) {
    xa = h.a;
    xb = h.b;
  }
  double s = double(xa + xb);
  double y0 = std::sqrt(double(xa) / s), z0 = std::sqrt(double(xb) / s);
  double h_at_x0 = std::pow(y0, double(h.a)) * std::pow(z0, double(h.b));
  double bound = 1.0 / h_at_x0;
  return {max_ratio, bound, max_ratio <= bound + 1e-12};
}

}  // namespace specdim
