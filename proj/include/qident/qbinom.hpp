#pragma once

#include <qident/intpoly.hpp>

namespace qident {

/// Argument bundle for a Gaussian binomial in the base q^dilation.
struct QBinomArgs {
    int upper = 0;     // must be >= 0
    int lower = 0;     // out-of-range values give the zero polynomial
    int dilation = 1;  // must be >= 1
};

/// Gaussian binomial [n choose k]_q: the zero polynomial when k < 0 or
/// k > n, otherwise a degree k*(n-k) polynomial with positive coefficients.
/// Requires n >= 0. Values are memoized process-wide.
IntPoly gauss_binomial(int n, int k);

/// gauss_binomial(n, k) with q replaced by q^r. Requires r >= 1.
IntPoly gauss_binomial_dilated(int n, int k, int r);

IntPoly gauss_binomial(const QBinomArgs& args);

/// a*(a-1)/2 for a >= 0.
long choose2(long a);

}  // namespace qident
