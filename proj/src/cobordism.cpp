#include "cobord/cobordism.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cobord/multivariate.hpp"
#include "cobord/series.hpp"

namespace cobord {

Int FundamentalVector::coord(const Partition& I) const {
    auto it = coords_.find(I);
    return it == coords_.end() ? Int(0) : it->second;
}

void FundamentalVector::add_coord(const Partition& I, const Int& value) {
    if (I.weight() != degree_)
        throw std::invalid_argument("FundamentalVector: partition weight != degree");
    if (value == 0) return;
    auto [it, inserted] = coords_.emplace(I, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coords_.erase(it);
    }
}

RatVec FundamentalVector::coord_vector() const {
    auto parts = partitions_of(degree_);
    RatVec v(parts.size(), Rat(0));
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = Rat(coord(parts[i]));
    return v;
}

FundamentalVector FundamentalVector::from_coord_vector(int degree, const IntVec& coords) {
    auto parts = partitions_of(degree);
    if (coords.size() != parts.size())
        throw std::invalid_argument("FundamentalVector: wrong coordinate length");
    FundamentalVector out(degree);
    for (std::size_t i = 0; i < parts.size(); ++i) out.add_coord(parts[i], coords[i]);
    return out;
}

FundamentalVector FundamentalVector::operator*(const FundamentalVector& other) const {
    FundamentalVector out(degree_ + other.degree_);
    for (const auto& [I, a] : coords_)
        for (const auto& [J, b] : other.coords_) out.add_coord(I.merged(J), a * b);
    return out;
}

FundamentalVector& FundamentalVector::operator+=(const FundamentalVector& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("FundamentalVector: degree mismatch");
    for (const auto& [I, c] : other.coords_) add_coord(I, c);
    return *this;
}

FundamentalVector& FundamentalVector::operator*=(const Int& scalar) {
    if (scalar == 0) {
        coords_.clear();
        return *this;
    }
    for (auto& [I, c] : coords_) c *= scalar;
    return *this;
}

FundamentalVector fundamental_polynomial(const VarietyModel& X) {
    const int d = X.dimension();
    FundamentalVector out(d);
    GradedClass negative = virtual_negative(X.tangent_total());
    for (const auto& I : partitions_of(d)) {
        Rat value = X.degree(conner_floyd_class(X, I, negative));
        out.add_coord(I, to_integer(value));
    }
    return out;
}

Rat pairing(const CharClassPoly& P, const FundamentalVector& v) {
    if (P.degree() != v.degree())
        throw std::invalid_argument("pairing: degree mismatch");
    Rat acc(0);
    for (const auto& [I, c] : P.coords()) acc += c * Rat(v.coord(I));
    return acc;
}

namespace {

// Generator atoms of each dimension: P^k, and H_{m,n} with m+n-1 = k.
std::vector<Atom> atoms_of_dimension(int k) {
    std::vector<Atom> out;
    if (k >= 1) out.push_back(Atom::proj(k));
    for (int m = 2; 2 * m <= k + 1; ++m) out.push_back(Atom::milnor(m, k + 1 - m));
    return out;
}

const FundamentalVector& atom_vector(const Atom& a) {
    static std::map<Atom, FundamentalVector> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(a);
    if (it == cache.end())
        it = cache.emplace(a, fundamental_polynomial(build_variety({a}))).first;
    return it->second;
}

void enumerate_products(int remaining, int max_dim, std::vector<Atom>& acc,
                        std::vector<std::vector<Atom>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int k = std::min(remaining, max_dim); k >= 1; --k) {
        for (const Atom& a : atoms_of_dimension(k)) {
            // Keep multisets canonical: weakly decreasing dimension, and
            // within one dimension never place an atom after a later one.
            if (!acc.empty()) {
                const Atom& prev = acc.back();
                if (prev.dimension() == k && a < prev) continue;
            }
            acc.push_back(a);
            enumerate_products(remaining - k, k, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

const std::vector<GeneratorProduct>& generator_products(int d) {
    static std::map<int, std::vector<GeneratorProduct>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    if (d < 0) throw std::invalid_argument("generator_products: negative dimension");
    std::vector<std::vector<Atom>> multisets;
    std::vector<Atom> acc;
    enumerate_products(d, d, acc, multisets);

    std::vector<GeneratorProduct> out;
    out.reserve(multisets.size());
    for (auto& atoms : multisets) {
        FundamentalVector v(0);
        v.add_coord(Partition(), 1);
        for (const Atom& a : atoms) v = v * atom_vector(a);
        out.push_back(GeneratorProduct{std::move(atoms), std::move(v)});
    }
    return cache.emplace(d, std::move(out)).first->second;
}

const IntegerLattice& lattice_L(int d) {
    static std::map<int, IntegerLattice> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    const auto& gens = generator_products(d);
    std::vector<IntVec> rows;
    rows.reserve(gens.size());
    auto parts = partitions_of(d);
    for (const auto& g : gens) {
        IntVec row(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) row[i] = g.vector.coord(parts[i]);
        rows.push_back(std::move(row));
    }
    IntegerLattice lattice = hermite_normal_form(parts.size(), rows);
    if (!lattice.full_rank())
        throw internal_error("lattice_L: generators do not span Q[b]_" + std::to_string(d));
    return cache.emplace(d, std::move(lattice)).first->second;
}

namespace {

// Shared state of one I'_d(B) enumeration: prefix products of the series
// e_i(e^{xi})^{m_i} over the odometer of exponent vectors.
struct IprimeBuilder {
    int d;
    int bound;
    std::vector<MultiPoly> elem;  // e_1..e_d of the root exponentials
    MultiPoly todd;
    std::vector<RatVec> rows;

    IprimeBuilder(int d_, int bound_)
        : d(d_), bound(bound_), todd(static_cast<std::size_t>(d_), d_) {
        const auto n = static_cast<std::size_t>(d);
        std::vector<MultiPoly> exps;
        exps.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            exps.push_back(MultiPoly::from_series(n, d, j, exponential_series(n + 1)));
        elem = elementary_symmetric(exps, d);
        todd = MultiPoly::constant(n, d, 1);
        Series td = todd_series(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            todd = todd * MultiPoly::from_series(n, d, j, td);
    }

    void emit(const MultiPoly& partial) {
        MultiPoly full = partial * todd;
        // c_I coordinates of the degree-d part: coefficients at weakly
        // decreasing exponents.
        CharClassPoly rf(d);
        for (const auto& [expo, coeff] : full.terms()) {
            int total = 0;
            bool descending = true;
            for (std::size_t i = 0; i < expo.size(); ++i) {
                total += expo[i];
                if (i + 1 < expo.size() && expo[i] < expo[i + 1]) descending = false;
            }
            if (total != d || !descending) continue;
            std::vector<int> parts;
            for (int e : expo)
                if (e > 0) parts.push_back(e);
            rf.add_coord(Partition(std::move(parts)), coeff);
        }
        rows.push_back(segre_substitute(rf).coord_vector());
    }

    void walk(std::size_t i, const MultiPoly& partial) {
        if (i > static_cast<std::size_t>(d)) {
            emit(partial);
            return;
        }
        MultiPoly current = partial;
        for (int m = 0; m <= bound; ++m) {
            walk(i + 1, current);
            if (m < bound) current = current * elem[i];
        }
    }
};

}  // namespace

IntegerLattice lattice_Iprime(int d, int exponent_bound) {
    if (d < 0 || exponent_bound < 0)
        throw std::invalid_argument("lattice_Iprime: negative argument");
    if (d == 0)
        return IntegerLattice::from_integer_rows(1, {{Int(1)}});
    IprimeBuilder builder(d, exponent_bound);
    builder.walk(1, MultiPoly::constant(static_cast<std::size_t>(d), d, 1));
    return IntegerLattice::from_rational_rows(partition_count(d), builder.rows);
}

HattoriStongReport hattori_stong_verify(int d, int max_b) {
    HattoriStongReport report;
    report.degree = d;
    report.dual = lattice_L(d).dual();
    IntegerLattice prev = lattice_Iprime(d, 0);
    if (!report.dual.contains(prev))
        throw internal_error("hattori_stong_verify: I'(0) not contained in I");
    for (int b = 0; b < max_b; ++b) {
        IntegerLattice next = lattice_Iprime(d, b + 1);
        if (!report.dual.contains(next))
            throw internal_error("hattori_stong_verify: I'(" + std::to_string(b + 1) +
                                   ") not contained in I");
        if (next == prev) {
            report.conclusive = true;
            report.b_stable = b;
            report.iprime = std::move(next);
            report.holds = report.iprime == report.dual;
            return report;
        }
        prev = std::move(next);
    }
    report.conclusive = false;
    report.holds = false;
    report.iprime = std::move(prev);
    return report;
}

IntegralityVerdict check_integral_class(const CharClassPoly& P) {
    const int d = P.degree();
    IntegralityVerdict verdict;
    CharClassPoly Q = segre_substitute(P);
    const IntegerLattice dual = lattice_L(d).dual();
    auto coords = dual.membership(Q.coord_vector());
    if (coords) {
        verdict.integral = true;
        verdict.coordinates = std::move(coords);
        return verdict;
    }
    verdict.integral = false;
    for (const auto& g : generator_products(d)) {
        Rat value = pairing(Q, g.vector);
        if (!is_integer(value)) {
            verdict.witness_variety = build_variety(g.atoms).to_string();
            verdict.witness_value = value;
            return verdict;
        }
    }
    throw internal_error("check_integral_class: non-member without witness");
}

Int divisibility_bound(const FundamentalVector& v) {
    return lattice_L(v.degree()).divisibility_factor(v.coord_vector());
}

}  // namespace cobord
