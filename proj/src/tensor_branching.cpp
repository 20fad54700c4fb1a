#include "specdim/tensor_branching.hpp"

#include <algorithm>
#include <numeric>

namespace specdim {

namespace {

std::vector<std::vector<Rational>> defining_weights(RootKind kind, int rank) {
  const int dim = kind == RootKind::A ? rank + 1 : rank;
  std::vector<std::vector<Rational>> ws;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rational> v(dim, 0);
    v[i] = 1;
    ws.push_back(v);
    if (kind != RootKind::A) {
      v[i] = -1;
      ws.push_back(v);
    }
  }
  if (kind == RootKind::B) ws.push_back(std::vector<Rational>(dim, 0));
  return ws;
}

}  // namespace

WeightMultiset fundamental_tensor(RootKind kind, int rank, const Weight& lambda) {
  if (!is_dominant(kind, lambda)) throw NotDominant("lambda not dominant");
  const int dim = kind == RootKind::A ? rank + 1 : rank;
  if (int(lambda.size()) != dim) throw RankMismatch("weight length mismatch");

  WeightMultiset out;
  auto try_add = [&](std::vector<Rational> mu) {
    if (is_dominant(kind, Weight(mu))) out[std::move(mu)] += 1;
  };
  for (int i = 0; i < dim; ++i) {
    auto mu = lambda.coords;
    mu[i] += 1;
    try_add(mu);
    if (kind != RootKind::A) {
      mu[i] -= 2;
      try_add(mu);
    }
  }
  if (kind == RootKind::B && lambda.coords[dim - 1] > 0) try_add(lambda.coords);
  return out;
}

WeightMultiset brauer_klimyk_oracle(RootKind kind, int rank, const Weight& lambda) {
  if (rank > 6) throw RankLimit("oracle limited to rank <= 6");
  if (!is_dominant(kind, lambda)) throw NotDominant("lambda not dominant");
  const int dim = kind == RootKind::A ? rank + 1 : rank;
  if (int(lambda.size()) != dim) throw RankMismatch("weight length mismatch");

  // rho in e-coordinates; for A an integer shift-equivalent works since only
  // entry differences matter.
  std::vector<Rational> rho(dim);
  for (int i = 0; i < dim; ++i) {
    if (kind == RootKind::A)
      rho[i] = dim - 1 - i;
    else if (kind == RootKind::B)
      rho[i] = Rational(2 * (dim - i) - 1, 2);
    else
      rho[i] = dim - 1 - i;
  }

  std::map<std::vector<Rational>, BigInt> acc;
  for (const auto& nu : defining_weights(kind, rank)) {
    std::vector<Rational> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = lambda.coords[i] + rho[i] + nu[i];

    int sign = 1;
    bool singular = false;
    if (kind == RootKind::A) {
      // sort descending, tracking permutation parity; ties are singular
      for (int i = 0; i < dim && !singular; ++i)
        for (int j = 0; j + 1 < dim - i; ++j) {
          if (v[j] == v[j + 1]) {
            singular = true;
            break;
          }
          if (v[j] < v[j + 1]) {
            std::swap(v[j], v[j + 1]);
            sign = -sign;
          }
        }
    } else if (kind == RootKind::B) {
      for (auto& x : v) {
        if (x == 0) {
          singular = true;
          break;
        }
        if (x < 0) {
          x = -x;
          sign = -sign;  // each single sign flip is one reflection
        }
      }
      for (int i = 0; i < dim && !singular; ++i)
        for (int j = 0; j + 1 < dim - i; ++j) {
          if (v[j] == v[j + 1]) {
            singular = true;
            break;
          }
          if (v[j] < v[j + 1]) {
            std::swap(v[j], v[j + 1]);
            sign = -sign;
          }
        }
    } else {  // D: sign flips come in pairs (determinant +1), only the
              // permutation contributes to the sign
      int flips = 0;
      for (auto& x : v)
        if (x < 0) {
          x = -x;
          ++flips;
        }
      for (int i = 0; i < dim && !singular; ++i)
        for (int j = 0; j + 1 < dim - i; ++j) {
          if (v[j] == v[j + 1]) {
            singular = true;
            break;
          }
          if (v[j] < v[j + 1]) {
            std::swap(v[j], v[j + 1]);
            sign = -sign;
          }
        }
      if (!singular && (flips % 2) != 0) v[dim - 1] = -v[dim - 1];
    }
    if (singular) continue;

    for (int i = 0; i < dim; ++i) v[i] -= rho[i];
    acc[std::move(v)] += sign;
  }

  WeightMultiset out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("negative multiplicity in dominant reflection");
    if (m > 0) out[w] = m;
  }
  return out;
}

LeapReport bounded_leap_check(const SphereFamily& fam, const SpectrumIndex& g) {
  const Weight w = index_to_weight(fam, g);
  auto parts = fundamental_tensor(fam.big_kind(), fam.big_rank(), w);

  LeapReport rep{{}, 0, true, false};
  for (const auto& [mu, mult] : parts) {
    (void)mult;
    SpectrumIndex beta;
    if (!weight_to_index(fam, Weight(mu), beta)) continue;
    rep.reachable.push_back(beta);
    std::int64_t s1 = beta.g1 - g.g1, s2 = beta.g2 - g.g2;
    rep.max_abs_shift = std::max({rep.max_abs_shift, std::abs(s1), std::abs(s2)});
    if (fam.family == Family::OddA && (s1 < 0 || s2 < 0)) rep.one_sided_discrepancy = true;
  }
  std::sort(rep.reachable.begin(), rep.reachable.end());
  rep.two_sided_ok = rep.max_abs_shift <= 1;
  return rep;
}

}  // namespace specdim
