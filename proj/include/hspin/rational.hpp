#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace hspin {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using WeightOf = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using WeightVector = WeightOf<Rational>;

inline Rational half(long p) { return Rational(p, 2); }

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }
inline bool is_half_odd(const Rational& q) { return denom(q) == 2; }

// "p/q", or "p" when q == 1
std::string to_string(const Rational& q);

// accepts "3", "-3", "5/2", " 1/2 "; throws ParseError
Rational parse_rational(std::string_view text);

// comma separated list of rationals
WeightVector parse_weight(std::string_view text);

std::string weight_to_string(const WeightVector& w, char sep = ',');

// exact conversion; throws InternalNonInteger when q is not a machine integer
std::int64_t to_int64(const Rational& q);

}  // namespace hspin
