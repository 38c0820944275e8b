#include "cobord/multivariate.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cobord/chern_poly.hpp"

namespace cobord {

namespace {

int total_degree(const MultiPoly::Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t vars, int bound, const Rat& value) {
    MultiPoly p(vars, bound);
    p.add_term(Expo(vars, 0), value);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t vars, int bound, std::size_t index) {
    MultiPoly p(vars, bound);
    Expo e(vars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Expo& e, const Rat& coeff) {
    if (coeff == 0 || total_degree(e) > bound_) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MultiPoly::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    MultiPoly out(vars_, bound_);
    Expo e(vars_);
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : other.terms_) {
            if (da + total_degree(eb) > bound_) continue;
            for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly out(vars_, bound_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::from_series(std::size_t vars, int bound, std::size_t index,
                                 const Series& s) {
    MultiPoly p(vars, bound);
    Expo e(vars, 0);
    for (std::size_t k = 0; k < s.size() && static_cast<int>(k) <= bound; ++k) {
        e[index] = static_cast<int>(k);
        p.add_term(e, s[k]);
    }
    return p;
}

std::vector<MultiPoly> elementary_symmetric(const std::vector<MultiPoly>& values, int e_max) {
    if (values.empty()) throw std::invalid_argument("elementary_symmetric: no values");
    std::size_t vars = values[0].vars();
    int bound = values[0].bound();
    // Coefficients of prod_j (1 + t v_j) in t, accumulated value by value.
    std::vector<MultiPoly> e(static_cast<std::size_t>(e_max) + 1,
                             MultiPoly(vars, bound));
    e[0] = MultiPoly::constant(vars, bound, 1);
    for (std::size_t j = 0; j < values.size(); ++j) {
        int top = std::min<int>(e_max, static_cast<int>(j) + 1);
        for (int k = top; k >= 1; --k) {
            MultiPoly t = e[static_cast<std::size_t>(k - 1)] * values[j];
            e[static_cast<std::size_t>(k)] += t;
        }
    }
    return e;
}

ChernPolynomial symmetric_to_elementary(const MultiPoly& p) {
    const std::size_t n = p.vars();
    // Elementary symmetric polynomials of the plain indeterminates.
    std::vector<MultiPoly> xi;
    xi.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        xi.push_back(MultiPoly::variable(n, p.bound(), i));
    auto elem = elementary_symmetric(xi, static_cast<int>(n));

    MultiPoly work = p;
    ChernPolynomial result;
    while (!work.is_zero()) {
        // Lex-leading term (map keys are lex-ordered, so it is the last one).
        auto lead = std::prev(work.terms().end());
        const auto expo = lead->first;
        const Rat coeff = lead->second;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (expo[i] < expo[i + 1])
                throw internal_error("symmetric_to_elementary: input is not symmetric");

        // Leading exponent (l_1 >= ... >= l_n) comes from e_1^{l_1-l_2} ... e_n^{l_n}.
        std::map<int, int> alpha;
        MultiPoly prod = MultiPoly::constant(n, p.bound(), coeff);
        for (std::size_t i = 0; i < n; ++i) {
            int next = (i + 1 < n) ? expo[i + 1] : 0;
            int mult = expo[i] - next;
            if (mult == 0) continue;
            alpha[static_cast<int>(i) + 1] += mult;
            for (int k = 0; k < mult; ++k) prod = prod * elem[i + 1];
        }
        result.add_term(Partition::from_alpha(alpha), coeff);
        work -= prod;
    }
    return result;
}

}  // namespace cobord
