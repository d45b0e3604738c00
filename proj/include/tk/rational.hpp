#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace tk {

/// Exact rational scalar. Expression templates are disabled so that the type
/// composes cleanly with Eigen's own expression machinery.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = Vec<Rat>;
using MatQ = Mat<Rat>;

template <typename Scalar>
inline int sign_of(const Scalar& x) {
  return (x > Scalar(0)) - (x < Scalar(0));
}

/// Parses "p", "-p", "p/q" (q != 0). Whitespace is not accepted.
Rat parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rat& value);

double to_double(const Rat& value);

template <typename Scalar>
Vec<Scalar> make_vec(std::initializer_list<Scalar> values) {
  Vec<Scalar> v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

/// Shorthand for rational literals in code and tests: q(3, 4) == 3/4.
inline Rat q(long num, long den = 1) { return Rat(num, den); }

inline VecQ vq(std::initializer_list<Rat> values) { return make_vec<Rat>(values); }

}  // namespace tk
