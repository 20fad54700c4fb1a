#ifndef SPECDIM_SPHERICAL_SPECTRUM_HPP
#define SPECDIM_SPHERICAL_SPECTRUM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specdim/root_systems.hpp"

namespace specdim {

// The three sphere realizations: SU(n+1)/SU(n) (dim 2n+1), SO(2n+1)/SO(2n)
// (dim 2n), SO(2n)/SO(2n-1) (dim 2n-1).
enum class Family { OddA, EvenB, OddD };

struct SphereFamily {
  Family family;
  int n;

  SphereFamily(Family f, int n_) : family(f), n(n_) {
    if (n < 1 || (family == Family::OddD && n < 2))
      throw UnsupportedRank("invalid rank for sphere family");
  }

  int sphere_dim() const {
    switch (family) {
      case Family::OddA: return 2 * n + 1;
      case Family::EvenB: return 2 * n;
      case Family::OddD: return 2 * n - 1;
    }
    return 0;
  }
  // rank of the big group's root system
  int big_rank() const { return n; }
  RootKind big_kind() const {
    return family == Family::OddA ? RootKind::A
         : family == Family::EvenB ? RootKind::B
                                   : RootKind::D;
  }
  std::string name() const {
    switch (family) {
      case Family::OddA: return "odd-a";
      case Family::EvenB: return "even-b";
      case Family::OddD: return "odd-d";
    }
    return "?";
  }
  int index_arity() const { return family == Family::OddA ? 2 : 1; }
};

// gamma in Gamma: a pair for OddA, a single natural for B/D (second slot 0).
struct SpectrumIndex {
  std::int64_t g1 = 0;
  std::int64_t g2 = 0;

  SpectrumIndex() = default;
  SpectrumIndex(std::int64_t a, std::int64_t b) : g1(a), g2(b) {}
  static SpectrumIndex single(std::int64_t k) { return {k, 0}; }

  auto operator<=>(const SpectrumIndex&) const = default;
  std::string to_string(const SphereFamily& fam) const;
};

enum class BranchingPair { AdownA, BdownD, DdownB };

// I_lambda in {0,1}: does lambda appear in the spherical spectrum.
int spherical_multiplicity(const SphereFamily& fam, const Weight& lambda);

// Classical one-step interlacing branching pattern, reimplemented directly
// from the inequality chains; independent of spherical_multiplicity.
int interlacing_branching_oracle(BranchingPair pair, const Weight& lambda, const Weight& mu);

Weight index_to_weight(const SphereFamily& fam, const SpectrumIndex& g);

// Inverse of index_to_weight on spherical classes; false if not spherical.
bool weight_to_index(const SphereFamily& fam, const Weight& lambda, SpectrumIndex& out);

BigInt isotypic_dimension(const SphereFamily& fam, const SpectrumIndex& g);

// All gamma with canonical length <= cutoff, lexicographic, paired with N_gamma.
std::vector<std::pair<SpectrumIndex, BigInt>> enumerate_spectrum(const SphereFamily& fam,
                                                                 std::int64_t cutoff);

}  // namespace specdim

#endif
