#ifndef SPHEREC_NUMERIC_HPP
#define SPHEREC_NUMERIC_HPP

#include <gmpxx.h>

namespace spherec {

/// Arbitrary-precision integer and rational scalars.
using Int = mpz_class;
using Rat = mpq_class;

} // namespace spherec

#endif
