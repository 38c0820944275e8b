#pragma once

#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// Truncated Taylor series sum a[k] x^k, k = 0..(size-1), exact coefficients.
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, std::size_t terms);
Series series_inverse(const Series& a, std::size_t terms);   // a[0] != 0
Series series_log(const Series& a, std::size_t terms);       // a[0] == 1
Series series_exp_of(const Series& a, std::size_t terms);    // a[0] == 0

/// exp(x) = sum x^k / k!.
Series exponential_series(std::size_t terms);

/// x/(1 - e^{-x}), the Todd generating series.
Series todd_series(std::size_t terms);

/// sqrt(z)/tanh(sqrt(z)) as a series in z (the L-genus characteristic series).
Series l_genus_series(std::size_t terms);

}  // namespace cobord
