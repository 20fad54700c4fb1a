#include "specdim/length_operator.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "specdim/growth_graph.hpp"
#include "specdim/tensor_branching.hpp"

namespace specdim {

namespace {

// Shell sum without the root-vertex correction; polynomial in k for k >= 0.
BigInt raw_shell_sum(const SphereFamily& fam, const RootSystem& rs, std::int64_t k) {
  if (fam.index_arity() == 1)
    return weyl_dimension(rs, index_to_weight(fam, SpectrumIndex::single(k)));
  BigInt s = 0;
  for (std::int64_t j = 0; j <= k; ++j)
    s += weyl_dimension(rs, index_to_weight(fam, SpectrumIndex(k, j)));
  for (std::int64_t j = 0; j < k; ++j)
    s += weyl_dimension(rs, index_to_weight(fam, SpectrumIndex(j, k)));
  return s;
}

// Exact Newton interpolation through (x_i, y_i), returned as ascending
// monomial coefficients.
std::vector<Rational> interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  const std::size_t m = pts.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = pts[i].second;
  for (std::size_t lvl = 1; lvl < m; ++lvl)
    for (std::size_t i = m - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - lvl].first);

  // expand Newton form sum dd[i] * prod_{j<i} (x - x_j)
  std::vector<Rational> coeffs{dd[0]};
  std::vector<Rational> basis{1};
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<Rational> nb(basis.size() + 1, 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      nb[j + 1] += basis[j];
      nb[j] -= pts[i - 1].first * basis[j];
    }
    basis = std::move(nb);
    coeffs.resize(basis.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

int degree_bound(const SphereFamily& fam) {
  switch (fam.family) {
    case Family::OddA: return 2 * fam.n;      // bidegree 2n-1 of N plus shell sum
    case Family::EvenB: return 2 * fam.n - 1;
    case Family::OddD: return 2 * fam.n - 2;
  }
  return 0;
}

}  // namespace

BigInt shell_multiplicity(const SphereFamily& fam, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("shells start at k = 1");
  RootSystem rs = make_root_system(fam.big_kind(), fam.big_rank());
  BigInt s = raw_shell_sum(fam, rs, k);
  if (k == 1) s += 1;  // root vertex (N = 1) merged into eigenvalue 1
  return s;
}

ShellSpectrum shell_spectrum(const SphereFamily& fam, std::int64_t cutoff) {
  ShellSpectrum sp{fam, {}};
  RootSystem rs = make_root_system(fam.big_kind(), fam.big_rank());
  for (std::int64_t k = 1; k <= cutoff; ++k) {
    BigInt s = raw_shell_sum(fam, rs, k);
    if (k == 1) s += 1;
    sp.s.push_back(std::move(s));
  }
  return sp;
}

Rational ShellPolynomial::eval(std::int64_t k) const {
  Rational v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * k + coeffs[j];
  return v;
}

double ShellPolynomial::eval_double(double k) const {
  double v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * k + to_double(coeffs[j]);
  return v;
}

ShellPolynomial shell_polynomial(const SphereFamily& fam) {
  RootSystem rs = make_root_system(fam.big_kind(), fam.big_rank());
  const int d_max = degree_bound(fam) + 2;  // safety margin

  // sample k = 2 .. d_max+3 (d_max+2 points), skipping the irregular root shell
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::int64_t k = 2; k <= d_max + 3; ++k)
    pts.emplace_back(Rational(k), Rational(raw_shell_sum(fam, rs, k)));
  ShellPolynomial poly;
  poly.coeffs = interpolate(pts);
  poly.degree = int(poly.coeffs.size()) - 1;

  // held-out validation on 5 further shells
  for (std::int64_t k = d_max + 4; k <= d_max + 8; ++k) {
    if (poly.eval(k) != Rational(raw_shell_sum(fam, rs, k)))
      throw NotPolynomial("shell sums are not polynomial on held-out shells");
    poly.validated_shells.push_back(k);
  }
  return poly;
}

int exact_summability(const SphereFamily& fam) { return shell_polynomial(fam).degree + 1; }

ZetaEstimate zeta_partial_sum(const SphereFamily& fam, double p, std::int64_t cutoff) {
  if (p <= 0 || cutoff < 2) throw std::invalid_argument("need p > 0 and cutoff >= 2");
  ShellPolynomial poly = shell_polynomial(fam);

  // S_1 exactly (root bookkeeping), then the polynomial shells; compensated
  // (Kahan) accumulation in fixed shell order.
  double sum = to_double(Rational(shell_multiplicity(fam, 1)));
  double comp = 0;
  for (std::int64_t k = 2; k <= cutoff; ++k) {
    double lk = std::log(double(k));
    double term = 0;
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j)
      term += to_double(poly.coeffs[j]) * std::exp((double(j) - p) * lk);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  // integral-test tail: sum_j |c_j| K^{j+1-p} / (p-j-1), finite iff p > deg+1
  bool converged = p > double(poly.degree) + 1.0;
  double tail = std::numeric_limits<double>::infinity();
  if (converged) {
    tail = 0;
    double lK = std::log(double(cutoff));
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
      double cj = std::abs(to_double(poly.coeffs[j]));
      tail += cj * std::exp((double(j) + 1.0 - p) * lK) / (p - double(j) - 1.0);
    }
  }
  return {p, cutoff, sum, tail, converged};
}

double fit_summability(const SphereFamily& fam, std::int64_t cutoff, std::int64_t window_lo,
                       std::int64_t window_hi) {
  if (cutoff < 50) throw std::invalid_argument("cutoff must be >= 50");
  if (window_lo < cutoff / 2 || window_hi > cutoff || window_hi - window_lo < 1)
    throw InsufficientData("window must contain >= 2 points inside [cutoff/2, cutoff]");
  ShellPolynomial poly = shell_polynomial(fam);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::int64_t m = 0;
  for (std::int64_t k = window_lo; k <= window_hi; ++k, ++m) {
    double x = std::log(double(k));
    double y = std::log(poly.eval_double(double(k)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return slope + 1.0;
}

std::string DimensionCertificate::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = fam.name();
  j["n"] = fam.n;
  j["sphere_dim"] = fam.sphere_dim();
  j["dimension"] = dimension;
  auto& cs = j["shell_polynomial"] = nlohmann::json::array();
  for (const auto& ccoef : poly.coeffs) {
    std::ostringstream os;
    os << ccoef;
    cs.push_back(os.str());
  }
  j["degree"] = poly.degree;
  j["root_found"] = root_found;
  j["root"] = root_found ? root.to_string(fam) : "";
  j["c"] = c;
  j["norm"] = norm;
  j["max_leap"] = max_leap;
  j["validated_shells"] = poly.validated_shells;
  j["complete"] = complete;
  return j.dump(2) + "\n";
}

DimensionCertificate spectral_dimension(const SphereFamily& fam, const DimensionOptions& opts) {
  NormKind nk = opts.norm_kind == 0 ? NormKind::Sup : NormKind::L2;
  double c = opts.c > 0 ? opts.c : default_ratio_bound(fam, nk);

  DimensionCertificate cert{fam, 0, {}, false, {}, c,
                            nk == NormKind::Sup ? "sup" : "l2", 0, false};
  cert.poly = shell_polynomial(fam);  // throws NotPolynomial on validation failure
  cert.dimension = cert.poly.degree + 1;

  auto graph = build_graph(fam, default_generators(fam), c, opts.graph_cutoff, nk);
  auto root = find_root(graph);
  if (root) {
    cert.root_found = true;
    cert.root = *root;
  }

  for (std::int64_t a = 0; a <= opts.leap_max_gamma; ++a) {
    if (fam.index_arity() == 2) {
      for (std::int64_t b = 0; b <= opts.leap_max_gamma; ++b)
        cert.max_leap = std::max(cert.max_leap,
                                 bounded_leap_check(fam, {a, b}).max_abs_shift);
    } else {
      cert.max_leap = std::max(
          cert.max_leap, bounded_leap_check(fam, SpectrumIndex::single(a)).max_abs_shift);
    }
  }

  cert.complete = cert.root_found && cert.max_leap <= 1;
  if (!cert.complete) throw CertificateIncomplete("certificate sub-check failed");
  return cert;
}

}  // namespace specdim
