#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace blf {

// Exact arbitrary-precision integers. Hyperbolic words grow matrix entries
// exponentially and a silent overflow corrupts the trace classification, so
// fixed-width arithmetic is not an option anywhere the group acts.
// Expression templates are off: every operation yields a plain value.
using Int =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

}  // namespace blf
