#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qgrass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Conversion into a floating carrier (R = double or ExtendedReal), exact
/// whenever the carrier's current precision covers the integer. convert_to
/// would build the result below the runtime default precision; the
/// converting constructor honors it.
template <class R>
R to_real(const BigInt& x) {
  return static_cast<R>(x);
}

}  // namespace qgrass
