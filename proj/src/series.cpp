#include "cobord/series.hpp"

#include <stdexcept>

namespace cobord {

Series series_mul(const Series& a, const Series& b, std::size_t terms) {
    Series out(terms, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_inverse(const Series& a, std::size_t terms) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series_inverse: zero constant term");
    Series out(terms, Rat(0));
    Rat lead = 1 / a[0];
    out[0] = lead;
    for (std::size_t k = 1; k < terms; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
        out[k] = -lead * acc;
    }
    return out;
}

Series series_log(const Series& a, std::size_t terms) {
    if (a.empty() || a[0] != 1) throw std::domain_error("series_log: constant term must be 1");
    // log(1+u) = sum (-1)^{k+1} u^k / k with u = a - 1.
    Series u(a.begin(), a.end());
    u[0] = 0;
    Series out(terms, Rat(0)), upow{Rat(1)};
    for (std::size_t k = 1; k < terms; ++k) {
        upow = series_mul(upow, u, terms);
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        for (std::size_t j = 0; j < terms; ++j) out[j] += sign * upow[j] / Rat(static_cast<long>(k));
    }
    return out;
}

Series series_exp_of(const Series& a, std::size_t terms) {
    if (!a.empty() && a[0] != 0) throw std::domain_error("series_exp_of: constant term must be 0");
    Series out(terms, Rat(0)), apow{Rat(1)};
    Rat invfac(1);
    out[0] = 1;
    for (std::size_t k = 1; k < terms; ++k) {
        apow = series_mul(apow, a, terms);
        invfac /= Rat(static_cast<long>(k));
        for (std::size_t j = 0; j < terms; ++j) out[j] += invfac * apow[j];
    }
    return out;
}

Series exponential_series(std::size_t terms) {
    Series out(terms, Rat(0));
    Rat c(1);
    for (std::size_t k = 0; k < terms; ++k) {
        out[k] = c;
        c /= Rat(static_cast<long>(k + 1));
    }
    return out;
}

Series todd_series(std::size_t terms) {
    // (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k / (k+1)!.
    Series denom(terms, Rat(0));
    Rat c(1);
    for (std::size_t k = 0; k < terms; ++k) {
        c /= Rat(static_cast<long>(k + 1));
        denom[k] = (k % 2 == 0) ? c : -c;
    }
    return series_inverse(denom, terms);
}

Series l_genus_series(std::size_t terms) {
    // tanh(sqrt z)/sqrt z = (sum z^k/(2k+1)!) / (sum z^k/(2k)!); invert the ratio.
    Series sh(terms, Rat(0)), ch(terms, Rat(0));
    Rat fac(1);
    for (std::size_t k = 0; k < terms; ++k) {
        // fac enters as 1/(2k)! here.
        ch[k] = fac;
        sh[k] = fac / Rat(static_cast<long>(2 * k + 1));
        fac /= Rat(static_cast<long>((2 * k + 1) * (2 * k + 2)));
    }
    return series_mul(ch, series_inverse(sh, terms), terms);
}

}  // namespace cobord
