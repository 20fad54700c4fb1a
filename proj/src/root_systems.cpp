#include "specdim/root_systems.hpp"

#include <sstream>

namespace specdim {

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

std::vector<std::vector<int>> positive_roots(RootKind kind, int rank) {
  if (rank < 1) throw UnsupportedRank("rank must be >= 1");
  if (kind == RootKind::D && rank < 2) throw UnsupportedRank("D_n needs rank >= 2");

  std::vector<std::vector<int>> roots;
  const int dim = (kind == RootKind::A) ? rank + 1 : rank;
  auto vec = [dim]() { return std::vector<int>(dim, 0); };

  switch (kind) {
    case RootKind::A:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          auto r = vec();
          r[i] = 1;
          r[j] = -1;
          roots.push_back(std::move(r));
        }
      break;
    case RootKind::B:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          auto r = vec();
          r[i] = 1;
          r[j] = -1;
          roots.push_back(r);
          r[j] = 1;
          roots.push_back(std::move(r));
        }
      for (int i = 0; i < dim; ++i) {
        auto r = vec();
        r[i] = 1;
        roots.push_back(std::move(r));
      }
      break;
    case RootKind::D:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          auto r = vec();
          r[i] = 1;
          r[j] = -1;
          roots.push_back(r);
          r[j] = 1;
          roots.push_back(std::move(r));
        }
      break;
  }
  return roots;
}

RootSystem make_root_system(RootKind kind, int rank) {
  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.positive_roots = positive_roots(kind, rank);
  const int dim = rs.ambient_dim();
  rs.weyl_vector.assign(dim, 0);
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < dim; ++i) rs.weyl_vector[i] += Rational(r[i], 2);
  return rs;
}

bool is_dominant(RootKind kind, const Weight& w) {
  const auto& c = w.coords;
  const std::size_t m = c.size();
  if (m == 0) return false;
  switch (kind) {
    case RootKind::A:
      for (std::size_t i = 0; i + 1 < m; ++i)
        if (c[i] < c[i + 1]) return false;
      return true;
    case RootKind::B:
      for (std::size_t i = 0; i + 1 < m; ++i)
        if (c[i] < c[i + 1]) return false;
      return c[m - 1] >= 0;
    case RootKind::D: {
      for (std::size_t i = 0; i + 2 < m; ++i)
        if (c[i] < c[i + 1]) return false;
      Rational last = c[m - 1] < 0 ? Rational(-c[m - 1]) : c[m - 1];
      return m >= 2 && c[m - 2] >= last;
    }
  }
  return false;
}

Weight canonical_a_weight(const Weight& w) {
  // Integer entries assumed; shift by a constant so the entry sum lands in
  // {0,...,n} where n+1 is the tuple length.
  Rational sum = 0;
  for (const auto& c : w.coords) sum += c;
  const int len = static_cast<int>(w.coords.size());
  Rational shift = sum / len;
  // floor(sum/len) as an integer shift
  BigInt num = boost::multiprecision::numerator(Rational(sum));
  BigInt s = num / len;
  if (num < 0 && num % len != 0) s -= 1;
  Weight out = w;
  for (auto& c : out.coords) c -= Rational(s);
  return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.ambient_dim())
    throw RankMismatch("weight length does not match root system");
  if (!is_dominant(rs.kind, lambda)) throw NotDominant("weight not dominant: " + lambda.to_string());

  // Work with 2*(lambda+rho) and 2*rho so every pairing is an integer when
  // lambda is (half-)integral; the factors of two cancel in the quotient.
  const int dim = rs.ambient_dim();
  std::vector<BigInt> two_shifted(dim), two_rho(dim);
  bool integral = true;
  for (int i = 0; i < dim; ++i) {
    Rational ts = 2 * (lambda.coords[i] + rs.weyl_vector[i]);
    Rational tr = 2 * rs.weyl_vector[i];
    if (boost::multiprecision::denominator(ts) != 1) {
      integral = false;
      break;
    }
    two_shifted[i] = boost::multiprecision::numerator(ts);
    two_rho[i] = boost::multiprecision::numerator(tr);
  }

  Rational q;
  if (integral) {
    BigInt num = 1, den = 1;
    for (const auto& alpha : rs.positive_roots) {
      BigInt pn = 0, pd = 0;
      for (int i = 0; i < dim; ++i) {
        if (alpha[i] == 0) continue;
        pn += alpha[i] * two_shifted[i];
        pd += alpha[i] * two_rho[i];
      }
      num *= pn;
      den *= pd;
    }
    q = Rational(num, den);
  } else {
    Rational num = 1, den = 1;
    for (const auto& alpha : rs.positive_roots) {
      Rational pn = 0, pd = 0;
      for (int i = 0; i < dim; ++i) {
        if (alpha[i] == 0) continue;
        pn += alpha[i] * (lambda.coords[i] + rs.weyl_vector[i]);
        pd += alpha[i] * rs.weyl_vector[i];
      }
      num *= pn;
      den *= pd;
    }
    q = num / den;
  }
  if (boost::multiprecision::denominator(q) != 1 || q <= 0)
    throw NonIntegerResult("Weyl dimension is not a positive integer");
  return boost::multiprecision::numerator(q);
}

}  // namespace specdim
