#ifndef SPECDIM_LENGTH_OPERATOR_HPP
#define SPECDIM_LENGTH_OPERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "specdim/spherical_spectrum.hpp"

namespace specdim {

// Multiplicity S_k of eigenvalue k of the length operator: the total isotypic
// dimension of the shell l(gamma) = k; k = 1 absorbs the root vertex.
BigInt shell_multiplicity(const SphereFamily& fam, std::int64_t k);

// Exact eigenvalue-multiplicity profile k -> S_k for 1 <= k <= cutoff.
struct ShellSpectrum {
  SphereFamily fam;
  std::vector<BigInt> s;  // s[k-1] = S_k
};
ShellSpectrum shell_spectrum(const SphereFamily& fam, std::int64_t cutoff);

// S_k as an exact polynomial in k, valid for k >= 2 (the root shell carries a
// +1 constant handled separately). Coefficients ascending in k.
struct ShellPolynomial {
  std::vector<Rational> coeffs;
  int degree;
  std::vector<std::int64_t> validated_shells;

  Rational eval(std::int64_t k) const;
  double eval_double(double k) const;
};
ShellPolynomial shell_polynomial(const SphereFamily& fam);

// Summability exponent of the length operator: degree(S_k) + 1.
int exact_summability(const SphereFamily& fam);

struct ZetaEstimate {
  double p;
  std::int64_t cutoff;
  double partial_sum;
  double tail_upper_bound;  // integral-test bound on the omitted tail
  bool converged;
};
ZetaEstimate zeta_partial_sum(const SphereFamily& fam, double p, std::int64_t cutoff);

// log-log least-squares slope of S_k over [window_lo, window_hi], plus one.
double fit_summability(const SphereFamily& fam, std::int64_t cutoff, std::int64_t window_lo,
                       std::int64_t window_hi);

struct DimensionOptions {
  std::int64_t graph_cutoff = 12;
  std::int64_t leap_max_gamma = 10;
  double c = -1;  // < 0: family default
  int norm_kind = 0;  // 0 sup, 1 l2
};

struct DimensionCertificate {
  SphereFamily fam;
  int dimension;
  ShellPolynomial poly;
  bool root_found;
  SpectrumIndex root;
  double c;
  std::string norm;
  std::int64_t max_leap;
  bool complete;

  std::string to_json() const;
};

// Bundles the exact summability with root existence, bounded leaps and
// held-out shell validation. Throws CertificateIncomplete on any failure.
DimensionCertificate spectral_dimension(const SphereFamily& fam,
                                        const DimensionOptions& opts = {});

}  // namespace specdim

#endif
