#include "specdim/spherical_spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace specdim {

namespace {

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

bool chain_ok(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
              bool last_abs_lower, bool last_abs_upper) {
  // upper_1 >= lower_1 >= upper_2 >= ... with optional |.| on the trailing entry
  // of either tuple.
  const std::size_t m = upper.size();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    Rational lo = lower[i];
    if (last_abs_lower && i + 1 == lower.size() && lo < 0) lo = -lo;
    if (upper[i] < lo) return false;
    if (i + 1 < m) {
      Rational up = upper[i + 1];
      if (last_abs_upper && i + 2 == m && up < 0) up = -up;
      if (lo < up) return false;
    }
  }
  return true;
}

}  // namespace

std::string SpectrumIndex::to_string(const SphereFamily& fam) const {
  std::ostringstream os;
  if (fam.index_arity() == 2)
    os << "(" << g1 << "," << g2 << ")";
  else
    os << g1;
  return os.str();
}

int spherical_multiplicity(const SphereFamily& fam, const Weight& lambda) {
  const RootKind kind = fam.big_kind();
  if (static_cast<int>(lambda.size()) != (kind == RootKind::A ? fam.n + 1 : fam.n))
    throw RankMismatch("weight length does not match family");
  if (!is_dominant(kind, lambda)) throw NotDominant("weight not dominant: " + lambda.to_string());

  for (const auto& c : lambda.coords)
    if (!is_integer(c)) return 0;

  if (fam.family == Family::OddA) {
    // 1 iff lambda is shift-equivalent to (a,0,...,0,-b), i.e. all middle
    // entries coincide; subtracting their common value exposes that form.
    for (std::size_t i = 2; i + 1 < lambda.size(); ++i)
      if (lambda.coords[1] != lambda.coords[i]) return 0;
    return 1;
  }
  // B/D: lambda = (k,0,...,0), k a natural number.
  if (lambda.coords[0] < 0) return 0;
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda.coords[i] != 0) return 0;
  return 1;
}

int interlacing_branching_oracle(BranchingPair pair, const Weight& lambda, const Weight& mu) {
  const std::size_t m = lambda.size();
  switch (pair) {
    case BranchingPair::AdownA: {
      if (mu.size() + 1 != m) throw RankMismatch("A branching needs |mu| = |lambda| - 1");
      // su weights are tuples modulo constant shift: accept mu + s for any
      // integer s making the Gelfand-Tsetlin chain hold.
      // Feasible s satisfy lambda_m - mu_{m-1} <= s <= lambda_1 - mu_1.
      Rational lo = lambda.coords[m - 1] - mu.coords[mu.size() - 1];
      Rational hi = lambda.coords[0] - mu.coords[0];
      BigInt lo_num = boost::multiprecision::numerator(lo);
      BigInt lo_den = boost::multiprecision::denominator(lo);
      BigInt lo_ceil = lo_num / lo_den;
      if (lo_ceil * lo_den < lo_num) lo_ceil += 1;  // ceil for exact rationals
      for (Rational s = Rational(lo_ceil); s <= hi; s += 1) {
        std::vector<Rational> shifted = mu.coords;
        for (auto& c : shifted) c += s;
        if (chain_ok(lambda.coords, shifted, false, false)) return 1;
      }
      return 0;
    }
    case BranchingPair::BdownD:
      if (mu.size() != m) throw RankMismatch("B->D branching needs |mu| = |lambda|");
      return chain_ok(lambda.coords, mu.coords, /*last_abs_lower=*/true,
                      /*last_abs_upper=*/false)
                 ? 1
                 : 0;
    case BranchingPair::DdownB:
      if (mu.size() + 1 != m) throw RankMismatch("D->B branching needs |mu| = |lambda| - 1");
      return chain_ok(lambda.coords, mu.coords, /*last_abs_lower=*/false,
                      /*last_abs_upper=*/true)
                 ? 1
                 : 0;
  }
  return 0;
}

Weight index_to_weight(const SphereFamily& fam, const SpectrumIndex& g) {
  if (fam.family == Family::OddA) {
    std::vector<Rational> c(fam.n + 1, 0);
    c.front() = g.g1;
    c.back() = c.back() - g.g2;
    if (fam.n == 1) c = {Rational(g.g1), Rational(-g.g2)};
    return Weight(std::move(c));
  }
  std::vector<Rational> c(fam.n, 0);
  c.front() = g.g1;
  return Weight(std::move(c));
}

bool weight_to_index(const SphereFamily& fam, const Weight& lambda, SpectrumIndex& out) {
  if (spherical_multiplicity(fam, lambda) != 1) return false;
  if (fam.family == Family::OddA) {
    const auto& c = lambda.coords;
    Rational mid = fam.n >= 2 ? c[1] : Rational(0);
    // n = 1 has no middle entry pinning the shift; pick the representative
    // with first entry >= 0 >= last, closest to the tuple as given.
    if (fam.n == 1) {
      if (c[1] > 0)
        mid = c[1];
      else if (c[0] < 0)
        mid = c[0];
    }
    Rational a = c.front() - mid, b = mid - c.back();
    out = SpectrumIndex(a.convert_to<std::int64_t>(), b.convert_to<std::int64_t>());
    return true;
  }
  out = SpectrumIndex::single(lambda.coords.front().convert_to<std::int64_t>());
  return true;
}

BigInt isotypic_dimension(const SphereFamily& fam, const SpectrumIndex& g) {
  RootSystem rs = make_root_system(fam.big_kind(), fam.big_rank());
  return weyl_dimension(rs, index_to_weight(fam, g));
}

std::vector<std::pair<SpectrumIndex, BigInt>> enumerate_spectrum(const SphereFamily& fam,
                                                                 std::int64_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  constexpr std::int64_t kMaxEntries = 4'000'000;
  const std::int64_t count =
      fam.index_arity() == 2 ? (cutoff + 1) * (cutoff + 1) : cutoff + 1;
  if (count > kMaxEntries) throw CutoffTooLarge("spectrum enumeration exceeds memory budget");

  RootSystem rs = make_root_system(fam.big_kind(), fam.big_rank());
  std::vector<std::pair<SpectrumIndex, BigInt>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (fam.index_arity() == 2) {
    for (std::int64_t a = 0; a <= cutoff; ++a)
      for (std::int64_t b = 0; b <= cutoff; ++b) {
        SpectrumIndex g(a, b);
        out.emplace_back(g, weyl_dimension(rs, index_to_weight(fam, g)));
      }
  } else {
    for (std::int64_t k = 0; k <= cutoff; ++k) {
      SpectrumIndex g = SpectrumIndex::single(k);
      out.emplace_back(g, weyl_dimension(rs, index_to_weight(fam, g)));
    }
  }
  return out;
}

}  // namespace specdim
