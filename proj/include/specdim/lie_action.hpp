#ifndef SPECDIM_LIE_ACTION_HPP
#define SPECDIM_LIE_ACTION_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "specdim/spherical_spectrum.hpp"

namespace specdim {

// Exact Gaussian-rational scalar a + b i.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational& o) const = default;
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// Sparse polynomial over the sphere coordinate variables. For the complex
// sphere the variables are z_1..z_{n+1}, w_1..w_{n+1} (w = conjugate); for the
// real spheres they are the Witt-basis coordinates of the defining rep.
class CoordinatePolynomial {
 public:
  using Exponents = std::vector<std::uint16_t>;

  CoordinatePolynomial() = default;
  explicit CoordinatePolynomial(int nvars) : nvars_(nvars) {}
  static CoordinatePolynomial constant(int nvars, GaussianRational c);
  static CoordinatePolynomial variable(int nvars, int var, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const GaussianRational& c);
  CoordinatePolynomial operator+(const CoordinatePolynomial& o) const;
  CoordinatePolynomial operator-(const CoordinatePolynomial& o) const;
  CoordinatePolynomial operator*(const CoordinatePolynomial& o) const;
  CoordinatePolynomial scaled(const GaussianRational& c) const;
  bool operator==(const CoordinatePolynomial& o) const = default;

  // If this == s * other for a scalar s, report it.
  bool proportional_to(const CoordinatePolynomial& other, GaussianRational& s) const;

  std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, GaussianRational> terms_;
};

enum class GenType { E, F, H };

struct ChevalleyGenerator {
  GenType type;
  int index;  // 1-based, <= rank
};

// How starred (conjugate) variables transform under a complexified generator.
// MinusTranspose is the rule derived from right-invariant differentiation and
// is validated against the numerical oracle; Conjugate is the plausible
// alternative kept so the ambiguity stays testable.
enum class StarRule { Unset, MinusTranspose, Conjugate };

struct ActionConvention {
  StarRule star_rule = StarRule::MinusTranspose;
};

// Number of coordinate variables of the family's coordinate algebra.
int coordinate_count(const SphereFamily& fam);

// Chevalley generator action as a derivation; exact.
CoordinatePolynomial act(const SphereFamily& fam, const ChevalleyGenerator& gen,
                         const CoordinatePolynomial& p,
                         const ActionConvention& conv = {});

// The paper-style highest-weight monomial b^gamma.
CoordinatePolynomial hwv_monomial(const SphereFamily& fam, const SpectrumIndex& g);

struct HwvReport {
  std::vector<bool> e_annihilated;      // per simple index
  std::vector<Rational> h_eigenvalues;  // per Cartan index (when eigenvector)
  bool all_annihilated;
  bool h_eigenvector;
};
HwvReport hwv_check_symbolic(const SphereFamily& fam, const SpectrumIndex& g,
                             const ActionConvention& conv = {});

// One random group-element sample: variable values at the base point and the
// central-difference derivative of p along the complexified generator.
struct OracleSample {
  std::vector<std::complex<double>> coords;
  std::complex<double> derivative;
};
std::vector<OracleSample> directional_derivative_samples(const SphereFamily& fam,
                                                         const CoordinatePolynomial& p,
                                                         const ChevalleyGenerator& gen,
                                                         int samples, std::uint64_t seed);

// Max |derivative| over the samples.
double directional_derivative_oracle(const SphereFamily& fam, const CoordinatePolynomial& p,
                                     const ChevalleyGenerator& gen, int samples,
                                     std::uint64_t seed);

}  // namespace specdim

#endif
