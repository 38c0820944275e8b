#include "cobord/chern_poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cobord/multivariate.hpp"

namespace cobord {

ChernPolynomial ChernPolynomial::constant(const Rat& value) {
    ChernPolynomial p;
    p.add_term(Partition(), value);
    return p;
}

ChernPolynomial ChernPolynomial::variable(int i) {
    ChernPolynomial p;
    p.add_term(Partition::single(i), 1);
    return p;
}

Rat ChernPolynomial::coefficient(const Partition& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ChernPolynomial::add_term(const Partition& monomial, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int ChernPolynomial::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weight());
    return d;
}

bool ChernPolynomial::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != d) return false;
    return true;
}

ChernPolynomial ChernPolynomial::homogeneous_part(int d) const {
    ChernPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.weight() == d) out.add_term(m, c);
    return out;
}

ChernPolynomial ChernPolynomial::truncated(int bound) const {
    ChernPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.weight() <= bound) out.add_term(m, c);
    return out;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

ChernPolynomial ChernPolynomial::operator-() const {
    ChernPolynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

ChernPolynomial ChernPolynomial::mul(const ChernPolynomial& other, int bound) const {
    ChernPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            if (bound >= 0 && ma.weight() + mb.weight() > bound) continue;
            out.add_term(ma.merged(mb), ca * cb);
        }
    }
    return out;
}

ChernPolynomial ChernPolynomial::compose(const std::vector<ChernPolynomial>& values,
                                         int bound) const {
    ChernPolynomial out;
    for (const auto& [m, c] : terms_) {
        ChernPolynomial prod = ChernPolynomial::constant(c);
        for (int part : m.parts()) {
            if (part > static_cast<int>(values.size()))
                throw std::invalid_argument("compose: no value supplied for c_" +
                                            std::to_string(part));
            prod = prod.mul(values[static_cast<std::size_t>(part) - 1], bound);
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

std::string ChernPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && !m.empty();
        if (!unit) os << a.get_str();
        bool leading = unit;
        for (auto [j, mult] : m.alpha()) {
            if (!leading) os << "*";
            leading = false;
            os << "c" << j;
            if (mult > 1) os << "^" << mult;
        }
    }
    return os.str();
}

namespace {

// sigma_I in `nvars` indeterminates: all distinct permutations of the part
// multiset padded with zeros.
MultiPoly monomial_symmetric(const Partition& I, int nvars) {
    if (static_cast<int>(I.length()) > nvars)
        throw std::invalid_argument("monomial_symmetric: needs at least |parts| indeterminates");
    std::vector<int> expo(static_cast<std::size_t>(nvars), 0);
    std::copy(I.parts().begin(), I.parts().end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    MultiPoly p(static_cast<std::size_t>(nvars), I.weight());
    do {
        p.add_term(expo, 1);
    } while (std::next_permutation(expo.begin(), expo.end()));
    return p;
}

}  // namespace

ChernPolynomial conner_floyd_polynomial_with_vars(const Partition& I, int nvars) {
    if (I.empty()) return ChernPolynomial::constant(1);
    return symmetric_to_elementary(monomial_symmetric(I, nvars));
}

const ChernPolynomial& conner_floyd_polynomial(const Partition& I) {
    static std::map<Partition, ChernPolynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(I);
    if (it == cache.end())
        it = cache.emplace(I, conner_floyd_polynomial_with_vars(I, std::max(I.weight(), 1)))
                 .first;
    return it->second;
}

ChernPolynomial newton_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("newton_polynomial: d must be >= 1");
    // p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
    std::vector<ChernPolynomial> p(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d; ++k) {
        ChernPolynomial acc;
        for (int i = 1; i < k; ++i) {
            ChernPolynomial t = ChernPolynomial::variable(i) * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0) t *= Rat(-1);
            acc += t;
        }
        ChernPolynomial top = ChernPolynomial::variable(k);
        top *= Rat((k % 2 == 1) ? k : -k);
        acc += top;
        p[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return p[static_cast<std::size_t>(d)];
}

ChernPolynomial dual_chern(const ChernPolynomial& total) {
    ChernPolynomial out;
    for (const auto& [m, c] : total.terms())
        out.add_term(m, m.weight() % 2 == 0 ? c : -c);
    return out;
}

std::vector<ChernPolynomial> exterior_power_chern(int r, int i, int bound) {
    if (r < 0 || i < 0 || i > r)
        throw std::invalid_argument("exterior_power_chern: need 0 <= i <= r");
    if (bound < 1) throw std::invalid_argument("exterior_power_chern: bound must be >= 1");
    std::vector<ChernPolynomial> out(static_cast<std::size_t>(bound));
    if (i == 0 || r == 0) return out;  // trivial class: all positive-degree parts vanish

    const auto n = static_cast<std::size_t>(r);
    MultiPoly total = MultiPoly::constant(n, bound, 1);
    // Roots of Lambda^i are the i-element subset sums of the roots of E.
    std::vector<std::size_t> subset(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < subset.size(); ++k) subset[k] = k;
    while (true) {
        MultiPoly factor = MultiPoly::constant(n, bound, 1);
        for (std::size_t k : subset) factor += MultiPoly::variable(n, bound, k);
        total = total * factor;
        // Next i-element subset of {0..r-1} in lexicographic order.
        int pos = i - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] ==
                               n - static_cast<std::size_t>(i - pos))
            --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (std::size_t k = static_cast<std::size_t>(pos) + 1; k < subset.size(); ++k)
            subset[k] = subset[k - 1] + 1;
    }
    for (int d = 1; d <= bound; ++d)
        out[static_cast<std::size_t>(d) - 1] = symmetric_to_elementary(total.homogeneous_part(d));
    return out;
}

}  // namespace cobord
