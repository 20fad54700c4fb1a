#ifndef SPECDIM_NUMERIC_HPP
#define SPECDIM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace specdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonIntegerResult : std::logic_error {
  using std::logic_error::logic_error;
};
struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RankLimit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CutoffTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotARoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CertificateIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConventionUnset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace specdim

#endif
