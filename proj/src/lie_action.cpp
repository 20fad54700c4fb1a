#include "specdim/lie_action.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace specdim {

CoordinatePolynomial CoordinatePolynomial::constant(int nvars, GaussianRational c) {
  CoordinatePolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

CoordinatePolynomial CoordinatePolynomial::variable(int nvars, int var, int power) {
  CoordinatePolynomial p(nvars);
  Exponents e(nvars, 0);
  e[var] = std::uint16_t(power);
  p.add_term(e, {1, 0});
  return p;
}

void CoordinatePolynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoordinatePolynomial CoordinatePolynomial::operator+(const CoordinatePolynomial& o) const {
  CoordinatePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CoordinatePolynomial CoordinatePolynomial::operator-(const CoordinatePolynomial& o) const {
  CoordinatePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, GaussianRational{-c.re, -c.im});
  return r;
}

CoordinatePolynomial CoordinatePolynomial::operator*(const CoordinatePolynomial& o) const {
  CoordinatePolynomial r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

CoordinatePolynomial CoordinatePolynomial::scaled(const GaussianRational& c) const {
  CoordinatePolynomial r(nvars_);
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

bool CoordinatePolynomial::proportional_to(const CoordinatePolynomial& other,
                                           GaussianRational& s) const {
  if (other.is_zero()) return is_zero();
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  // s = this / other on the first term, then verify the rest
  if (it->first != jt->first) return false;
  // divide Gaussian rationals
  Rational den = jt->second.re * jt->second.re + jt->second.im * jt->second.im;
  GaussianRational conj{jt->second.re, -jt->second.im};
  GaussianRational num = it->second * conj;
  s = {num.re / den, num.im / den};
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second == jt->second * s)) return false;
  }
  return true;
}

std::complex<double> CoordinatePolynomial::eval(
    const std::vector<std::complex<double>>& values) const {
  std::complex<double> r = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    r += t;
  }
  return r;
}

namespace {

// Matrix size of the defining representation.
int matrix_dim(const SphereFamily& fam) {
  switch (fam.family) {
    case Family::OddA: return fam.n + 1;
    case Family::EvenB: return 2 * fam.n + 1;
    case Family::OddD: return 2 * fam.n;
  }
  return 0;
}

// Witt-basis position of a label in {1..n} u {0} u {-1..-n} (0 only for B).
int witt_pos(const SphereFamily& fam, int label) {
  const int n = fam.n;
  if (label > 0) return label - 1;
  if (label == 0) return n;  // B only
  return matrix_dim(fam) + label;  // -1 -> last, -n -> n (D) / n+1 (B)
}

using RatMat = std::vector<std::vector<Rational>>;

// Defining-rep matrix of a Chevalley generator; real entries in all cases.
RatMat generator_matrix(const SphereFamily& fam, const ChevalleyGenerator& gen) {
  const int m = matrix_dim(fam);
  const int n = fam.n;
  if (gen.index < 1 || gen.index > n) throw std::invalid_argument("generator index out of range");
  RatMat X(m, std::vector<Rational>(m, 0));
  const int i = gen.index;

  if (fam.family == Family::OddA) {
    switch (gen.type) {
      case GenType::E: X[i - 1][i] = 1; break;
      case GenType::F: X[i][i - 1] = 1; break;
      case GenType::H:
        X[i - 1][i - 1] = 1;
        X[i][i] = -1;
        break;
    }
    return X;
  }

  auto P = [&](int lab) { return witt_pos(fam, lab); };
  const bool typeB = fam.family == Family::EvenB;
  if (i < n) {
    switch (gen.type) {
      case GenType::E:
        X[P(i)][P(i + 1)] = 1;
        X[P(-(i + 1))][P(-i)] = -1;
        break;
      case GenType::F:
        X[P(i + 1)][P(i)] = 1;
        X[P(-i)][P(-(i + 1))] = -1;
        break;
      case GenType::H:
        X[P(i)][P(i)] = 1;
        X[P(i + 1)][P(i + 1)] = -1;
        X[P(-i)][P(-i)] = -1;
        X[P(-(i + 1))][P(-(i + 1))] = 1;
        break;
    }
    return X;
  }
  if (typeB) {  // i == n, short simple root
    switch (gen.type) {
      case GenType::E:
        X[P(n)][P(0)] = 1;
        X[P(0)][P(-n)] = -1;
        break;
      case GenType::F:
        X[P(0)][P(n)] = 1;
        X[P(-n)][P(0)] = -1;
        break;
      case GenType::H:
        X[P(n)][P(n)] = 1;
        X[P(-n)][P(-n)] = -1;
        break;
    }
    return X;
  }
  // D, i == n: fork node e_n = E_{n-1,-n} - E_{n,-(n-1)}
  switch (gen.type) {
    case GenType::E:
      X[P(n - 1)][P(-n)] = 1;
      X[P(n)][P(-(n - 1))] = -1;
      break;
    case GenType::F:
      X[P(-n)][P(n - 1)] = 1;
      X[P(-(n - 1))][P(n)] = -1;
      break;
    case GenType::H:
      X[P(n - 1)][P(n - 1)] = 1;
      X[P(n)][P(n)] = 1;
      X[P(-(n - 1))][P(-(n - 1))] = -1;
      X[P(-n)][P(-n)] = -1;
      break;
  }
  return X;
}

// Derivative of a single coordinate variable under the generator.
CoordinatePolynomial variable_derivative(const SphereFamily& fam, const RatMat& X, int var,
                                         const ActionConvention& conv) {
  const int m = matrix_dim(fam);
  const int nvars = coordinate_count(fam);
  CoordinatePolynomial out(nvars);
  if (fam.family != Family::OddA || var < m) {
    // X(v_j) = sum_k v_k X_{kj}, with v running over z's (complex case) or
    // Witt coordinates (real case)
    for (int k = 0; k < m; ++k)
      if (X[k][var] != 0)
        out = out + CoordinatePolynomial::variable(nvars, k).scaled({X[k][var], 0});
    return out;
  }
  // conjugate variable w_j, j = var - m
  const int j = var - m;
  switch (conv.star_rule) {
    case StarRule::MinusTranspose:
      for (int k = 0; k < m; ++k)
        if (X[j][k] != 0)
          out = out + CoordinatePolynomial::variable(nvars, m + k).scaled({-X[j][k], 0});
      return out;
    case StarRule::Conjugate:
      for (int k = 0; k < m; ++k)
        if (X[k][j] != 0)
          out = out + CoordinatePolynomial::variable(nvars, m + k).scaled({X[k][j], 0});
      return out;
    case StarRule::Unset:
      throw ConventionUnset("star rule not set");
  }
  return out;
}

}  // namespace

int coordinate_count(const SphereFamily& fam) {
  return fam.family == Family::OddA ? 2 * (fam.n + 1) : matrix_dim(fam);
}

CoordinatePolynomial act(const SphereFamily& fam, const ChevalleyGenerator& gen,
                         const CoordinatePolynomial& p, const ActionConvention& conv) {
  if (conv.star_rule == StarRule::Unset) throw ConventionUnset("star rule not set");
  const int nvars = coordinate_count(fam);
  if (p.nvars() != nvars) throw RankMismatch("polynomial/family variable count mismatch");
  RatMat X = generator_matrix(fam, gen);

  std::vector<CoordinatePolynomial> dvar(nvars);
  for (int v = 0; v < nvars; ++v) dvar[v] = variable_derivative(fam, X, v, conv);

  CoordinatePolynomial out(nvars);
  for (const auto& [e, c] : p.terms()) {
    for (int v = 0; v < nvars; ++v) {
      if (e[v] == 0 || dvar[v].is_zero()) continue;
      CoordinatePolynomial rest(nvars);
      auto re = e;
      re[v] -= 1;
      rest.add_term(re, c * GaussianRational{Rational(int(e[v])), 0});
      out = out + rest * dvar[v];
    }
  }
  return out;
}

CoordinatePolynomial hwv_monomial(const SphereFamily& fam, const SpectrumIndex& g) {
  const int nvars = coordinate_count(fam);
  CoordinatePolynomial::Exponents e(nvars, 0);
  if (fam.family == Family::OddA) {
    e[0] = std::uint16_t(g.g1);                  // y = z_1
    e[nvars - 1] = std::uint16_t(g.g2);          // z = conj(z_{n+1}) = w_{n+1}
  } else {
    e[0] = std::uint16_t(g.g1);                  // first Witt coordinate
  }
  CoordinatePolynomial p(nvars);
  p.add_term(e, {1, 0});
  return p;
}

HwvReport hwv_check_symbolic(const SphereFamily& fam, const SpectrumIndex& g,
                             const ActionConvention& conv) {
  CoordinatePolynomial b = hwv_monomial(fam, g);
  HwvReport rep{{}, {}, true, true};
  for (int i = 1; i <= fam.n; ++i) {
    bool zero = act(fam, {GenType::E, i}, b, conv).is_zero();
    rep.e_annihilated.push_back(zero);
    if (!zero) rep.all_annihilated = false;
  }
  for (int i = 1; i <= fam.n; ++i) {
    auto hb = act(fam, {GenType::H, i}, b, conv);
    if (hb.is_zero()) {
      rep.h_eigenvalues.push_back(0);
      continue;
    }
    GaussianRational s;
    if (hb.proportional_to(b, s) && s.im == 0) {
      rep.h_eigenvalues.push_back(s.re);
    } else {
      rep.h_eigenvector = false;
      rep.h_eigenvalues.push_back(0);
    }
  }
  return rep;
}

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

MatrixXcd taylor_exp(const MatrixXcd& A) {
  MatrixXcd r = MatrixXcd::Identity(A.rows(), A.cols());
  MatrixXcd t = r;
  for (int k = 1; k <= 6; ++k) {
    t = (t * A) / double(k);
    r += t;
  }
  return r;
}

MatrixXcd haar_su(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  MatrixXcd A(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<MatrixXcd> qr(A);
  MatrixXcd Q = qr.householderQ();
  MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) Q.col(j) *= R(j, j) / std::abs(R(j, j));
  std::complex<double> det = Q.determinant();
  Q *= std::exp(std::complex<double>(0, -std::arg(det) / m));
  return Q;
}

MatrixXd haar_so(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  MatrixXd A(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A(i, j) = gauss(rng);
  Eigen::HouseholderQR<MatrixXd> qr(A);
  MatrixXd Q = qr.householderQ();
  MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  if (Q.determinant() < 0) Q.col(m - 1) = -Q.col(m - 1);
  return Q;
}

// Witt change of basis: coords = U * x.
MatrixXcd witt_basis_matrix(const SphereFamily& fam) {
  const int m = matrix_dim(fam);
  const int n = fam.n;
  if (fam.family == Family::OddA) return MatrixXcd::Identity(m, m);
  MatrixXcd U = MatrixXcd::Zero(m, m);
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 1; a <= n; ++a) {
    U(witt_pos(fam, a), 2 * a - 2) = s;
    U(witt_pos(fam, a), 2 * a - 1) = std::complex<double>(0, -s);
    U(witt_pos(fam, -a), 2 * a - 2) = s;
    U(witt_pos(fam, -a), 2 * a - 1) = std::complex<double>(0, s);
  }
  if (fam.family == Family::EvenB) U(witt_pos(fam, 0), m - 1) = 1.0;
  return U;
}

std::vector<std::complex<double>> coords_at(const SphereFamily& fam, const MatrixXcd& g,
                                            const MatrixXcd& U) {
  const int m = matrix_dim(fam);
  std::vector<std::complex<double>> vals(coordinate_count(fam));
  if (fam.family == Family::OddA) {
    for (int j = 0; j < m; ++j) {
      vals[j] = g(m - 1, j);
      vals[m + j] = std::conj(g(m - 1, j));
    }
  } else {
    Eigen::VectorXcd x = g.row(0).transpose();
    Eigen::VectorXcd c = U * x;
    for (int j = 0; j < m; ++j) vals[j] = c(j);
  }
  return vals;
}

}  // namespace

std::vector<OracleSample> directional_derivative_samples(const SphereFamily& fam,
                                                         const CoordinatePolynomial& p,
                                                         const ChevalleyGenerator& gen,
                                                         int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int m = matrix_dim(fam);
  RatMat Xr = generator_matrix(fam, gen);
  MatrixXcd X = MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) X(i, j) = to_double(Xr[i][j]);

  MatrixXcd U = witt_basis_matrix(fam);
  MatrixXcd A = X;
  if (fam.family != Family::OddA) {
    // transport the Witt-basis generator into the real coordinate basis
    A = U.transpose() * X * U.conjugate();
  }
  // split the complexified generator into one-parameter directions
  MatrixXcd P = (A - A.adjoint()) / 2.0;
  MatrixXcd Q = (A + A.adjoint()) / (2.0 * std::complex<double>(0, 1));

  const double h = 1e-5;
  MatrixXcd expPp = taylor_exp(h * P), expPm = taylor_exp(-h * P);
  MatrixXcd expQp = taylor_exp(h * Q), expQm = taylor_exp(-h * Q);

  std::vector<OracleSample> out;
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(s + 1)));
    MatrixXcd g;
    if (fam.family == Family::OddA)
      g = haar_su(m, rng);
    else
      g = haar_so(m, rng).cast<std::complex<double>>();

    auto F = [&](const MatrixXcd& e) { return p.eval(coords_at(fam, g * e, U)); };
    std::complex<double> dP = (F(expPp) - F(expPm)) / (2 * h);
    std::complex<double> dQ = (F(expQp) - F(expQm)) / (2 * h);
    out.push_back({coords_at(fam, g, U), dP + std::complex<double>(0, 1) * dQ});
  }
  return out;
}

double directional_derivative_oracle(const SphereFamily& fam, const CoordinatePolynomial& p,
                                     const ChevalleyGenerator& gen, int samples,
                                     std::uint64_t seed) {
  double mx = 0;
  for (const auto& s : directional_derivative_samples(fam, p, gen, samples, seed))
    mx = std::max(mx, std::abs(s.derivative));
  return mx;
}

}  // namespace specdim
