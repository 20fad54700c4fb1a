#ifndef SPECDIM_ROOT_SYSTEMS_HPP
#define SPECDIM_ROOT_SYSTEMS_HPP

#include <vector>

#include "specdim/numeric.hpp"

namespace specdim {

enum class RootKind { A, B, D };

// Dominant integral weight in e-coordinates. For A_n the weight is stored as
// an (n+1)-tuple; tuples differing by a constant shift describe the same
// su(n+1) weight, and canonical() picks the representative whose entry sum
// lies in {0,...,n} (which forces the last entry <= 0).
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t len) { return Weight(std::vector<Rational>(len, 0)); }

  std::size_t size() const { return coords.size(); }
  bool operator==(const Weight& o) const { return coords == o.coords; }

  std::string to_string() const;
};

// Root data in the standard e-basis: the vectors span an n-dimensional space
// for B_n/D_n and live in R^{n+1} for A_n.
struct RootSystem {
  RootKind kind;
  int rank;
  std::vector<std::vector<int>> positive_roots;
  std::vector<Rational> weyl_vector;  // half-sum of positive roots

  // coordinate length of weights for this system
  int ambient_dim() const { return kind == RootKind::A ? rank + 1 : rank; }
};

RootSystem make_root_system(RootKind kind, int rank);

std::vector<std::vector<int>> positive_roots(RootKind kind, int rank);

bool is_dominant(RootKind kind, const Weight& w);

// A_n only: shift-equivalent representative with coordinate sum in {0,...,n}.
Weight canonical_a_weight(const Weight& w);

// Weyl dimension formula, prod <lambda+rho,alpha> / <rho,alpha> over positive
// roots, in exact rational arithmetic. Throws NotDominant / NonIntegerResult.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace specdim

#endif
