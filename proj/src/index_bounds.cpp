#include "cobord/index_bounds.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobord {

Int index_bound(long d, long N) {
    if (d < 1 || N < 1) throw std::invalid_argument("index_bound: d, N must be >= 1");
    Int g(0);
    for (long delta = 1; delta <= N; ++delta) {
        if (d % delta != 0) continue;
        g = gcd(g, Int(d / delta));
        if (g == 1) break;
    }
    return g;
}

Int chi_hypersurface(long d, long n) {
    if (d < 1 || n < 1) throw std::invalid_argument("chi_hypersurface: d, n must be >= 1");
    Int b = binomial(Int(d - 1), static_cast<unsigned long>(n));
    return n % 2 == 0 ? Int(1 - b) : Int(1 + b);
}

bool verify_gcd_lemma(long d, long N) {
    Int g(0);
    for (long n = 1; n <= N; ++n) g = gcd(g, chi_hypersurface(d, n));
    return g == index_bound(d, N);
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long unit_index_threshold(long d) {
    if (d < 1) throw std::invalid_argument("unit_index_threshold: d must be >= 1");
    long n0 = 1;
    for (auto [p, e] : factorize(d)) {
        long power = 1;
        for (int k = 0; k < e; ++k) power *= p;
        n0 = std::max(n0, power);
    }
    return n0;
}

int p_adic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be nonzero");
    if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be >= 2");
    Int m = abs(n);
    int v = 0;
    while (divides(p, m)) {
        m /= p;
        ++v;
    }
    return v;
}

Int prime_to_part(const Int& n, const Int& q) {
    if (n == 0) throw std::invalid_argument("prime_to_part: n must be nonzero");
    if (q < 1) throw std::invalid_argument("prime_to_part: q must be >= 1");
    Int m = abs(n);
    for (Int g = gcd(m, q); g > 1; g = gcd(m, q)) m /= g;
    return m;
}

long fermat_min(const std::vector<long>& a, long d, long e) {
    long m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long v = static_cast<long>(i) * e + d * a[i];
        if (i == 0 || v < m) m = v;
    }
    return m;
}

FermatCertificate fermat_certificate(long d, long N, long e) {
    if (d < 1 || N < 1 || e < 1)
        throw std::invalid_argument("fermat_certificate: d, N, e must be >= 1");
    Int bound = index_bound(d, N);
    if (divides(bound, Int(e)))
        throw std::domain_error("fermat_certificate: I_{d,N} = " + bound.get_str() +
                                " divides e = " + std::to_string(e));
    FermatCertificate cert;
    cert.d = d;
    cert.N = N;
    cert.e = e;
    std::vector<long> a(static_cast<std::size_t>(N) + 1, 0);
    cert.trace.push_back(a);
    while (true) {
        long m = fermat_min(a, d, e);
        if (m > N * e) {
            cert.final_m = m;
            break;
        }
        std::size_t argmin = a.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            long v = static_cast<long>(i) * e + d * a[i];
            if (v != m) continue;
            if (argmin != a.size())
                throw internal_error("fermat_certificate: minimizer tie at m = " +
                                       std::to_string(m));
            argmin = i;
        }
        ++a[argmin];
        cert.trace.push_back(a);
    }
    for (long x : a)
        if (x < 1)
            throw internal_error("fermat_certificate: final state has a zero coordinate");
    return cert;
}

}  // namespace cobord
