#ifndef SPECDIM_TENSOR_BRANCHING_HPP
#define SPECDIM_TENSOR_BRANCHING_HPP

#include <map>
#include <vector>

#include "specdim/spherical_spectrum.hpp"

namespace specdim {

// Decomposition of defining-rep tensor lambda as (weight, multiplicity) pairs,
// canonically sorted by the weight tuple.
using WeightMultiset = std::map<std::vector<Rational>, BigInt>;

// Explicit one-box rules: A adds e_i; B/D add or subtract e_i, B keeps lambda
// itself when the zero weight survives (lambda_n > 0).
WeightMultiset fundamental_tensor(RootKind kind, int rank, const Weight& lambda);

// rho-shifted dominant reflection over the weights of the defining rep, with
// sign tracking and cancellation. rank <= 6.
WeightMultiset brauer_klimyk_oracle(RootKind kind, int rank, const Weight& lambda);

struct LeapReport {
  std::vector<SpectrumIndex> reachable;   // spherical components, sorted
  std::int64_t max_abs_shift;             // per-coordinate maximum
  bool two_sided_ok;                      // max_abs_shift <= 1
  bool one_sided_discrepancy;             // a negative shift appeared (OddA)
};

LeapReport bounded_leap_check(const SphereFamily& fam, const SpectrumIndex& g);

}  // namespace specdim

#endif
