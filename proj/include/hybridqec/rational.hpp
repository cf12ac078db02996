#pragma once

#include <string>

#include <boost/rational.hpp>

namespace hqec {

using Rational = boost::rational<long long>;

/// "a" when integral, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hqec
