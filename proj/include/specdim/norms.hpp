#ifndef SPECDIM_NORMS_HPP
#define SPECDIM_NORMS_HPP

#include <cstdint>

#include "specdim/spherical_spectrum.hpp"

namespace specdim {

// Exponent pair of a highest-weight monomial y^a z^b; (0,0) is the constant 1.
struct MonomialExponents {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

enum class NormKind { Sup, L2 };

// Exact constrained maximum of y^a z^b on {y,z >= 0, y^2+z^2 = 1}:
// sqrt(a^a b^b / (a+b)^(a+b)), with 0^0 = 1.
double monomial_sup(std::int64_t a, std::int64_t b);

// log of the above, safe for large exponents.
double log_monomial_sup(std::int64_t a, std::int64_t b);

// Independent numerical maximum: dense sweep over the quarter circle refined
// by golden-section search. grid_size >= 100.
double monomial_sup_oracle(std::int64_t a, std::int64_t b, int grid_size);

// Squared L2 norm of the highest-weight monomial over the sphere, as an exact
// rational moment (Beta-integral closed forms).
Rational l2_monomial_norm_sq(const SphereFamily& fam, const SpectrumIndex& g);

// Monte Carlo estimate of l2_monomial_norm_sq; returns (mean, standard error).
struct MonteCarloEstimate {
  double mean;
  double std_error;
};
MonteCarloEstimate mc_l2_monomial_norm_sq(const SphereFamily& fam, const SpectrumIndex& g,
                                          int samples, std::uint64_t seed);

double hwv_norm(const SphereFamily& fam, const SpectrumIndex& g, NormKind kind);
double log_hwv_norm(const SphereFamily& fam, const SpectrumIndex& g, NormKind kind);

// Prop-style ratio bound: max over m <= m_max of ||h^m f|| / ||h^(m+1) f||
// (sup norms) against 1/|h(x0)| at a maximizer x0 of f.
struct RatioBoundReport {
  double max_ratio;
  double bound;
  bool within_bound;
};
RatioBoundReport ratio_bound_check(MonomialExponents f, MonomialExponents h, int m_max);

}  // namespace specdim

#endif
