#include "cobord/charclass.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cobord/multivariate.hpp"
#include "cobord/series.hpp"

namespace cobord {

namespace {

// Rows of the change-of-basis matrix: row i is c_{I_i} in monomial coordinates
// over partitions_of(d); cached together with its inverse transpose.
struct BasisData {
    std::vector<Partition> partitions;
    std::vector<RatVec> inverse_transpose;  // solves monomial coords -> c_I coords
};

const BasisData& basis_data(int d) {
    static std::map<int, BasisData> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    BasisData data;
    data.partitions = partitions_of(d);
    const std::size_t n = data.partitions.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t j = 0; j < n; ++j) index.emplace(data.partitions[j], j);

    // aug = [M^T | Id] reduced to [Id | (M^T)^{-1}], M[i][j] = coeff of
    // monomial j in c_{I_i}.
    std::vector<RatVec> aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [mono, coeff] : conner_floyd_polynomial(data.partitions[i]).terms())
            aug[index.at(mono)][i] = coeff;
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw internal_error("c_I basis matrix is singular");
        std::swap(aug[c], aug[p]);
        Rat inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    data.inverse_transpose.assign(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) data.inverse_transpose[i][j] = aug[i][n + j];
    return cache.emplace(d, std::move(data)).first->second;
}

}  // namespace

Rat CharClassPoly::coord(const Partition& I) const {
    auto it = coords_.find(I);
    return it == coords_.end() ? Rat(0) : it->second;
}

void CharClassPoly::add_coord(const Partition& I, const Rat& value) {
    if (I.weight() != degree_)
        throw std::invalid_argument("CharClassPoly: partition weight != degree");
    if (value == 0) return;
    auto [it, inserted] = coords_.emplace(I, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coords_.erase(it);
    }
}

RatVec CharClassPoly::coord_vector() const {
    auto parts = partitions_of(degree_);
    RatVec v(parts.size(), Rat(0));
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = coord(parts[i]);
    return v;
}

CharClassPoly CharClassPoly::from_coord_vector(int degree, const RatVec& coords) {
    auto parts = partitions_of(degree);
    if (coords.size() != parts.size())
        throw std::invalid_argument("from_coord_vector: wrong length");
    CharClassPoly out(degree);
    for (std::size_t i = 0; i < parts.size(); ++i) out.add_coord(parts[i], coords[i]);
    return out;
}

ChernPolynomial CharClassPoly::to_monomial() const {
    ChernPolynomial out;
    for (const auto& [I, coeff] : coords_) {
        ChernPolynomial term = conner_floyd_polynomial(I);
        term *= coeff;
        out += term;
    }
    return out;
}

CharClassPoly CharClassPoly::from_monomial(const ChernPolynomial& p) {
    int d = p.max_degree();
    if (p.is_zero()) d = 0;
    if (!p.is_homogeneous(d))
        throw std::invalid_argument("CharClassPoly::from_monomial: not homogeneous");
    const auto& data = basis_data(d);
    const std::size_t n = data.partitions.size();
    RatVec mono(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) mono[j] = p.coefficient(data.partitions[j]);
    RatVec coords(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (data.inverse_transpose[i][j] != 0 && mono[j] != 0)
                coords[i] += data.inverse_transpose[i][j] * mono[j];
    return from_coord_vector(d, coords);
}

CharClassPoly& CharClassPoly::operator+=(const CharClassPoly& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("CharClassPoly: degree mismatch in addition");
    for (const auto& [I, c] : other.coords_) add_coord(I, c);
    return *this;
}

CharClassPoly& CharClassPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coords_.clear();
        return *this;
    }
    for (auto& [I, c] : coords_) c *= scalar;
    return *this;
}

std::vector<ChernPolynomial> segre_polynomials(int d) {
    if (d < 1) throw std::invalid_argument("segre_polynomials: d must be >= 1");
    std::vector<ChernPolynomial> s;
    s.reserve(static_cast<std::size_t>(d) + 1);
    s.push_back(ChernPolynomial::constant(1));
    for (int k = 1; k <= d; ++k) {
        ChernPolynomial acc;
        for (int j = 1; j <= k; ++j)
            acc += ChernPolynomial::variable(j) * s[static_cast<std::size_t>(k - j)];
        s.push_back(-acc);
    }
    return std::vector<ChernPolynomial>(s.begin() + 1, s.end());
}

CharClassPoly segre_substitute(const CharClassPoly& p) {
    int d = p.degree();
    if (d == 0) return p;
    return CharClassPoly::from_monomial(
        p.to_monomial().compose(segre_polynomials(d), d));
}

namespace {

// Reads the c_I coordinates of a homogeneous symmetric polynomial of degree d
// in d indeterminates off the coefficients at weakly decreasing exponents.
CharClassPoly symmetric_part_coords(const MultiPoly& p, int d) {
    CharClassPoly out(d);
    for (const auto& [expo, coeff] : p.terms()) {
        bool descending = true;
        for (std::size_t i = 0; i + 1 < expo.size() && descending; ++i)
            descending = expo[i] >= expo[i + 1];
        if (!descending) continue;
        std::vector<int> parts;
        for (int e : expo)
            if (e > 0) parts.push_back(e);
        out.add_coord(Partition(std::move(parts)), coeff);
    }
    return out;
}

}  // namespace

CharClassPoly build_Rf(const std::vector<int>& exponents, int d) {
    if (d < 0) throw std::invalid_argument("build_Rf: negative degree");
    for (int m : exponents)
        if (m < 0) throw std::invalid_argument("build_Rf: negative exponent");
    if (static_cast<int>(exponents.size()) > d)
        throw std::invalid_argument("build_Rf: more exponents than indeterminates");
    if (d == 0) {
        CharClassPoly unit(0);
        unit.add_coord(Partition(), 1);
        return unit;
    }
    const auto n = static_cast<std::size_t>(d);
    std::vector<MultiPoly> exps;
    exps.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        exps.push_back(MultiPoly::from_series(n, d, j, exponential_series(n + 1)));
    auto elem = elementary_symmetric(exps, d);

    MultiPoly acc = MultiPoly::constant(n, d, 1);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (int k = 0; k < exponents[i]; ++k) acc = acc * elem[i + 1];
    Series td = todd_series(n + 1);
    for (std::size_t j = 0; j < n; ++j)
        acc = acc * MultiPoly::from_series(n, d, j, td);
    return symmetric_part_coords(acc.homogeneous_part(d), d);
}

CharClassPoly build_Sf(const std::vector<int>& exponents, int d) {
    return segre_substitute(build_Rf(exponents, d));
}

CharClassPoly hirzebruch_signature_polynomial(int d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("hirzebruch_signature_polynomial: d must be even and >= 2");
    const int k = d / 2;
    // L = exp(sum_j g_j Q_j(p)) in Pontryagin variables, g = log of the
    // characteristic series sqrt(z)/tanh(sqrt z).
    Series g = series_log(l_genus_series(static_cast<std::size_t>(k) + 1),
                          static_cast<std::size_t>(k) + 1);
    ChernPolynomial arg;
    for (int j = 1; j <= k; ++j) {
        if (g[static_cast<std::size_t>(j)] == 0) continue;
        ChernPolynomial t = newton_polynomial(j);
        t *= g[static_cast<std::size_t>(j)];
        arg += t;
    }
    ChernPolynomial lpoly = ChernPolynomial::constant(1), power = ChernPolynomial::constant(1);
    Rat invfac(1);
    for (int t = 1; t <= k; ++t) {
        power = power.mul(arg, k);
        invfac /= Rat(t);
        ChernPolynomial term = power;
        term *= invfac;
        lpoly += term;
    }
    ChernPolynomial lk = lpoly.homogeneous_part(k);

    // p_i = sum_{j=0}^{2i} (-1)^{i+j} c_j c_{2i-j} with c_0 = 1.
    std::vector<ChernPolynomial> pontryagin;
    for (int i = 1; i <= k; ++i) {
        ChernPolynomial pi;
        for (int j = 0; j <= 2 * i; ++j) {
            ChernPolynomial term =
                (j == 0 ? ChernPolynomial::constant(1) : ChernPolynomial::variable(j));
            if (j < 2 * i) term = term * (2 * i - j == 0 ? ChernPolynomial::constant(1)
                                                         : ChernPolynomial::variable(2 * i - j));
            if ((i + j) % 2 == 1) term *= Rat(-1);
            pi += term;
        }
        pontryagin.push_back(pi);
    }
    return CharClassPoly::from_monomial(lk.compose(pontryagin, d));
}

namespace {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

bool is_power_of_minus_one(long part, long q) {
    // part == q^n - 1 for some n >= 1?
    long v = q - 1;
    while (v < part) v = v * q + (q - 1);
    return v == part;
}

long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("catalogue_class: bad ") + what + " '" + s + "'");
    }
}

void expect_params(const std::string& name, const std::vector<std::string>& params,
                   std::size_t count) {
    if (params.size() != count)
        throw std::invalid_argument("catalogue_class: " + name + " expects " +
                                    std::to_string(count) + " parameter(s)");
}

}  // namespace

CharClassPoly catalogue_class(const std::string& name, const std::vector<std::string>& params) {
    if (name == "half_euler" || name == "half_c1_power") {
        expect_params(name, params, 1);
        long d = parse_long(params[0], "degree");
        if (d < 1 || d % 2 == 0)
            throw std::invalid_argument("catalogue_class: " + name + " requires odd d");
        if (name == "half_euler") {
            CharClassPoly out(static_cast<int>(d));
            out.add_coord(Partition::single(1, static_cast<int>(d)), Rat(1, 2));
            return out;
        }
        ChernPolynomial c1d = ChernPolynomial::constant(Rat(1, 2));
        for (long i = 0; i < d; ++i) c1d = c1d * ChernPolynomial::variable(1);
        return CharClassPoly::from_monomial(c1d);
    }
    if (name == "half_segre") {
        expect_params(name, params, 1);
        long d = parse_long(params[0], "degree");
        if (d < 1) throw std::invalid_argument("catalogue_class: half_segre requires d >= 1");
        ChernPolynomial sd = segre_polynomials(static_cast<int>(d)).back();
        sd *= Rat(1, 2);
        return CharClassPoly::from_monomial(sd);
    }
    if (name == "steenrod" || name == "newton_over_q") {
        expect_params(name, params, 2);
        long q = parse_long(params[0], "prime");
        if (!is_prime(q)) throw std::invalid_argument("catalogue_class: q must be prime");
        Partition I;
        if (name == "steenrod") {
            I = Partition::parse(params[1]);
        } else {
            long d = parse_long(params[1], "degree");
            if (d < 1) throw std::invalid_argument("catalogue_class: newton_over_q needs d >= 1");
            I = Partition::single(static_cast<int>(d));
        }
        for (int part : I.parts())
            if (!is_power_of_minus_one(part, q))
                throw std::invalid_argument("catalogue_class: " + name + " requires parts q^n - 1, got " +
                                            std::to_string(part));
        int d = I.weight();
        if (d == 0) throw std::invalid_argument("catalogue_class: empty multi-index");
        CharClassPoly cI(d);
        cI.add_coord(I, 1);
        CharClassPoly out = segre_substitute(cI);
        out *= Rat(1, q);
        return out;
    }
    if (name == "signature") {
        expect_params(name, params, 1);
        long d = parse_long(params[0], "degree");
        return hirzebruch_signature_polynomial(static_cast<int>(d));
    }
    throw std::invalid_argument("catalogue_class: unknown class '" + name + "'");
}

}  // namespace cobord
