#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cobord {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Floor division (GMP's fdiv), used to reduce entries above HNF pivots.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& n) {
    return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; throws if d does not divide n.
inline Int exact_div(const Int& n, const Int& d) {
    if (!divides(d, n))
        throw std::domain_error("exact_div: " + d.get_str() + " does not divide " + n.get_str());
    return Int(n / d);
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Numerator of an integral rational; throws otherwise.
inline Int to_integer(const Rat& q) {
    if (!is_integer(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace cobord
