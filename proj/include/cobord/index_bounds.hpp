#pragma once

#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// I_{d,N} = gcd{ d/delta : delta in 1..N, delta | d }, the bound on the
/// index of a degree-d hypersurface in P^N.
Int index_bound(long d, long N);

/// chi_{d,n} = 1 - (-1)^n C(d-1, n), the Euler characteristic of the
/// structure sheaf of a degree-d hypersurface in P^n.
Int chi_hypersurface(long d, long n);

/// The gcd identity I_{d,N} = gcd{ chi_{d,n} : 1 <= n <= N }.
bool verify_gcd_lemma(long d, long N);

/// Smallest N with I_{d,N} = 1: the largest prime-power factor of d.
long unit_index_threshold(long d);

/// p-adic valuation of n != 0.
int p_adic_valuation(const Int& n, const Int& p);

/// Largest divisor of n coprime to q (n != 0, q >= 1).
Int prime_to_part(const Int& n, const Int& q);

/// Prime factorization of n >= 1 as (prime, exponent) pairs.
std::vector<std::pair<long, int>> factorize(long n);

/// Valuation certificate for the twisted Fermat hypersurface
/// x_0^d = sum pi^i x_i^d: the iteration that bumps the unique minimizer of
/// i*e + d*a_i until the minimum exceeds N*e, proving no closed point of
/// degree e exists when I_{d,N} does not divide e.
struct FermatCertificate {
    long d = 0, N = 0, e = 0;
    std::vector<std::vector<long>> trace;  // successive states, first is 0
    long final_m = 0;

    const std::vector<long>& final_state() const { return trace.back(); }
};

/// Runs the iteration; requires I_{d,N} not dividing e (rejected with the
/// divisor otherwise).  A tie in the minimizer is an internal error.
FermatCertificate fermat_certificate(long d, long N, long e);

/// m(a) = min_i (i e + d a_i).
long fermat_min(const std::vector<long>& a, long d, long e);

}  // namespace cobord
