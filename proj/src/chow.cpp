#include "cobord/chow.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cobord/series.hpp"

namespace cobord {

std::string Atom::to_string() const {
    if (kind == Kind::Proj) return "P" + std::to_string(n);
    return "H" + std::to_string(m) + "," + std::to_string(n);
}

GradedClass GradedClass::one(std::shared_ptr<const RingShape> shape) {
    GradedClass g(std::move(shape));
    g.add_term(std::vector<int>(g.shape_->caps.size(), 0), 1);
    return g;
}

Rat GradedClass::coefficient(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GradedClass::add_term(const std::vector<int>& expo, const Rat& coeff) {
    if (coeff == 0) return;
    int total = 0;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] > shape_->caps[i]) return;
        total += expo[i];
    }
    if (total > shape_->top_degree) return;
    for (const auto& block : shape_->blocks) {
        int block_degree = 0;
        for (std::size_t i = 0; i < block.width; ++i) block_degree += expo[block.offset + i];
        if (block_degree > block.degree_cap) return;
    }
    auto [it, inserted] = terms_.emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

GradedClass& GradedClass::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

GradedClass GradedClass::operator*(const GradedClass& other) const {
    GradedClass out(shape_);
    const std::size_t nvars = shape_->caps.size();
    std::vector<int> e(nvars);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

GradedClass GradedClass::homogeneous_part(int d) const {
    GradedClass out(shape_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) out.add_term(e, c);
    return out;
}

Rat GradedClass::constant_term() const {
    return coefficient(std::vector<int>(shape_->caps.size(), 0));
}

GradedClass GradedClass::inverse() const {
    if (constant_term() != 1)
        throw std::domain_error("virtual_negative: total class must have constant term 1");
    GradedClass u = *this;
    u.add_term(std::vector<int>(shape_->caps.size(), 0), -1);  // u = total - 1
    // (1+u)^{-1} = sum (-u)^k, truncated at the ring's top degree.
    GradedClass out = one(shape_), pow = one(shape_);
    for (int k = 1; k <= shape_->top_degree; ++k) {
        pow = pow * u;
        if (pow.is_zero()) break;
        if (k % 2 == 1)
            out -= pow;
        else
            out += pow;
    }
    return out;
}

GradedClass GradedClass::exp() const {
    if (constant_term() != 0)
        throw std::domain_error("exp: class must have zero constant term");
    GradedClass out = one(shape_), pow = one(shape_);
    Rat invfac(1);
    for (int k = 1; k <= shape_->top_degree; ++k) {
        pow = pow * (*this);
        if (pow.is_zero()) break;
        invfac /= Rat(k);
        GradedClass term = pow;
        term *= invfac;
        out += term;
    }
    return out;
}

namespace {

void validate_atom(const Atom& a) {
    if (a.kind == Atom::Kind::Proj) {
        if (a.n < 1) throw std::invalid_argument("Proj atom needs n >= 1");
    } else {
        if (a.m < 2 || a.m > a.n)
            throw std::invalid_argument("Milnor atom needs 2 <= m <= n");
    }
}

}  // namespace

VarietyModel::VarietyModel(std::vector<Atom> factors) : factors_(std::move(factors)) {
    auto shape = std::make_shared<RingShape>();
    for (const auto& a : factors_) {
        validate_atom(a);
        std::size_t offset = shape->caps.size();
        var_offset_.push_back(offset);
        dimension_ += a.dimension();
        if (a.kind == Atom::Kind::Proj) {
            shape->caps.push_back(a.n);
        } else {
            shape->caps.push_back(a.m);
            shape->caps.push_back(a.n);
            shape->blocks.push_back({offset, 2, a.dimension()});
        }
    }
    shape->top_degree = dimension_;
    shape_ = std::move(shape);

    // Whitney product of factor tangent classes.
    GradedClass tangent = one();
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const Atom& a = factors_[f];
        std::size_t off = var_offset_[f];
        std::vector<int> e(shape_->caps.size(), 0);
        if (a.kind == Atom::Kind::Proj) {
            // (1+h)^{n+1}, truncated by the cap h^{n+1} = 0.
            GradedClass factor(shape_);
            for (int k = 0; k <= a.n; ++k) {
                e[off] = k;
                factor.add_term(e, binomial(a.n + 1, static_cast<unsigned long>(k)));
            }
            tangent = tangent * factor;
        } else {
            // (1+x)^{m+1} (1+y)^{n+1} / (1+x+y) in the ambient ring.
            GradedClass fx(shape_), fy(shape_), hyper(shape_);
            for (int k = 0; k <= a.m; ++k) {
                e[off] = k;
                fx.add_term(e, binomial(a.m + 1, static_cast<unsigned long>(k)));
            }
            e[off] = 0;
            for (int k = 0; k <= a.n; ++k) {
                e[off + 1] = k;
                fy.add_term(e, binomial(a.n + 1, static_cast<unsigned long>(k)));
            }
            e[off + 1] = 0;
            hyper.add_term(e, 1);
            e[off] = 1;
            hyper.add_term(e, 1);
            e[off] = 0;
            e[off + 1] = 1;
            hyper.add_term(e, 1);
            tangent = tangent * fx * fy * hyper.inverse();
        }
    }
    tangent_total_ = std::move(tangent);
}

std::string VarietyModel::to_string() const {
    if (factors_.empty()) return "point";
    std::string s;
    for (const auto& a : factors_) {
        if (!s.empty()) s += "x";
        s += a.to_string();
    }
    return s;
}

GradedClass VarietyModel::hyperplane(std::size_t index) const {
    if (index >= factors_.size())
        throw std::invalid_argument("hyperplane: factor index out of range");
    if (factors_[index].kind != Atom::Kind::Proj)
        throw std::invalid_argument("hyperplane: line twists only apply to Proj factors");
    GradedClass g(shape_);
    std::vector<int> e(shape_->caps.size(), 0);
    e[var_offset_[index]] = 1;
    g.add_term(e, 1);
    return g;
}

Rat VarietyModel::degree(const GradedClass& cls) const {
    // Per factor: Proj(n) wants exponent exactly n; a Milnor block (a,b) with
    // a+b = m+n-1 contributes iff (a,b) is (m-1,n) or (m,n-1), the coefficient
    // of x^m y^n in x^a y^b (x+y).
    Rat out(0);
    for (const auto& [e, c] : cls.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) != dimension_) continue;
        bool keep = true;
        for (std::size_t f = 0; f < factors_.size() && keep; ++f) {
            const Atom& a = factors_[f];
            std::size_t off = var_offset_[f];
            if (a.kind == Atom::Kind::Proj) {
                keep = e[off] == a.n;
            } else {
                keep = (e[off] == a.m - 1 && e[off + 1] == a.n) ||
                       (e[off] == a.m && e[off + 1] == a.n - 1);
            }
        }
        if (keep) out += c;
    }
    return out;
}

std::vector<GradedClass> VarietyModel::components(const GradedClass& total) const {
    std::vector<GradedClass> out;
    out.reserve(static_cast<std::size_t>(dimension_));
    for (int d = 1; d <= std::max(dimension_, 1); ++d)
        out.push_back(total.homogeneous_part(d));
    return out;
}

GradedClass VarietyModel::evaluate(const ChernPolynomial& poly,
                                   const std::vector<GradedClass>& values) const {
    GradedClass out(shape_);
    for (const auto& [mono, coeff] : poly.terms()) {
        GradedClass prod = one();
        prod *= coeff;
        for (int part : mono.parts()) {
            if (part > static_cast<int>(values.size())) {
                prod = zero();  // classes above the dimension vanish
                break;
            }
            prod = prod * values[static_cast<std::size_t>(part) - 1];
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

VarietyModel build_variety(const std::vector<Atom>& atoms) { return VarietyModel(atoms); }

std::vector<Atom> parse_variety_spec(const std::string& text) {
    std::string s;
    std::vector<std::size_t> pos_map;  // position in `text` for each kept char
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s += text[i];
            pos_map.push_back(i);
        }
    auto fail = [&](std::size_t i, const std::string& what) -> void {
        std::size_t at = i < pos_map.size() ? pos_map[i] : text.size();
        throw std::invalid_argument("variety-spec parse error at position " +
                                    std::to_string(at) + ": " + what);
    };
    auto parse_int = [&](std::size_t& i) -> int {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(start, "expected a number");
        try {
            return std::stoi(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            fail(start, "number out of range");
            return 0;  // unreachable
        }
    };

    std::vector<Atom> atoms;
    std::size_t i = 0;
    if (s.empty()) fail(0, "empty variety spec");
    while (true) {
        if (i >= s.size()) fail(i, "expected 'P' or 'H'");
        char head = s[i];
        if (head == 'P') {
            ++i;
            atoms.push_back(Atom::proj(parse_int(i)));
        } else if (head == 'H') {
            ++i;
            int m = parse_int(i);
            if (i >= s.size() || s[i] != ',') fail(i, "expected ',' in Milnor atom");
            ++i;
            int n = parse_int(i);
            atoms.push_back(Atom::milnor(m, n));
        } else {
            fail(i, std::string("expected 'P' or 'H', got '") + head + "'");
        }
        if (i == s.size()) break;
        if (s[i] != 'x') fail(i, std::string("expected 'x' between factors, got '") + s[i] + "'");
        ++i;
    }
    return atoms;
}

GradedClass virtual_negative(const GradedClass& total) { return total.inverse(); }

GradedClass conner_floyd_class(const VarietyModel& X, const Partition& I,
                               const GradedClass& total) {
    return X.evaluate(conner_floyd_polynomial(I), X.components(total));
}

namespace {

void check_denominators(const GradedClass& cls, const Int& bound, const char* what) {
    for (const auto& [e, c] : cls.terms())
        if (!divides(c.get_den(), bound))
            throw internal_error(std::string(what) +
                                   ": denominator bound violated (coefficient " + c.get_str() +
                                   ")");
}

// Membership in Z[1/bound]: every prime factor of the denominator divides
// `bound` (the denominator may exceed the bound itself, e.g. 720 over 5!).
void check_denominator_support(const GradedClass& cls, const Int& bound, const char* what) {
    for (const auto& [e, c] : cls.terms()) {
        Int den = c.get_den();
        for (Int g = gcd(den, bound); g > 1; g = gcd(den, bound)) den /= g;
        if (den != 1)
            throw internal_error(std::string(what) + ": denominator " + c.get_den().get_str() +
                                 " has a prime factor outside the bound " + bound.get_str());
    }
}

}  // namespace

GradedClass chern_character(const VarietyModel& X, const GradedClass& total, const Rat& rank,
                            int d) {
    auto values = X.components(total);
    GradedClass ch = X.one();
    ch *= rank;
    Rat invfac(1);
    for (int k = 1; k <= d; ++k) {
        invfac /= Rat(k);
        GradedClass newton = X.evaluate(newton_polynomial(k), values);
        newton *= invfac;
        ch += newton;
    }
    check_denominators(ch, factorial(static_cast<unsigned long>(std::max(d, 1))), "chern_character");
    return ch;
}

GradedClass todd_class(const VarietyModel& X, const GradedClass& total, int d) {
    auto values = X.components(total);
    // log td = sum_k a_k p_k with a_k the log of the Todd series.
    Series log_td = series_log(todd_series(static_cast<std::size_t>(d) + 1),
                               static_cast<std::size_t>(d) + 1);
    GradedClass acc = X.zero();
    for (int k = 1; k <= d; ++k) {
        if (log_td[static_cast<std::size_t>(k)] == 0) continue;
        GradedClass newton = X.evaluate(newton_polynomial(k), values);
        newton *= log_td[static_cast<std::size_t>(k)];
        acc += newton;
    }
    GradedClass td = acc.exp();
    // Lemma bound: td lives in CH ⊗ Z[1/(d+1)!]; the literal (d+1)! does not
    // clear the denominators (td_4 already carries 1/720 against 5! = 120).
    check_denominator_support(td, factorial(static_cast<unsigned long>(d) + 1), "todd_class");
    return td;
}

}  // namespace cobord
