#include "cobord/lattice.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobord {

namespace {

// In-place row HNF. Returns the nonzero rows, pivots positive, entries above
// each pivot reduced into [0, pivot).
std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        // Gather the column gcd into row r by repeated reduction.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][c]), abs(rows[best][c])) < 0)
                    best = i;
            }
            if (best == rows.size()) break;  // column is zero below r
            std::swap(rows[r], rows[best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = fdiv(rows[i][c], rows[r][c]);
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(rows[i][c], rows[r][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

Int content(const std::vector<IntVec>& rows, const Int& seed) {
    Int g = seed;
    for (const auto& row : rows)
        for (const auto& x : row) {
            g = gcd(g, x);
            if (g == 1) return g;
        }
    return g;
}

}  // namespace

IntegerLattice hermite_normal_form(std::size_t ambient_rank, const std::vector<IntVec>& rows) {
    if (ambient_rank == 0) throw std::invalid_argument("hermite_normal_form: ambient rank 0");
    for (const auto& row : rows)
        if (row.size() != ambient_rank)
            throw std::invalid_argument("hermite_normal_form: row length mismatch");
    return IntegerLattice::from_integer_rows(ambient_rank, rows);
}

IntegerLattice IntegerLattice::from_integer_rows(std::size_t ambient_rank,
                                                 const std::vector<IntVec>& rows) {
    return IntegerLattice(ambient_rank, hnf_rows(rows, ambient_rank), 1);
}

IntegerLattice IntegerLattice::from_rational_rows(std::size_t ambient_rank,
                                                  const std::vector<RatVec>& rows) {
    Int den = 1;
    for (const auto& row : rows) {
        if (row.size() != ambient_rank)
            throw std::invalid_argument("lattice: row length mismatch");
        for (const auto& q : row) den = lcm(den, q.get_den());
    }
    std::vector<IntVec> scaled;
    scaled.reserve(rows.size());
    for (const auto& row : rows) {
        IntVec r(ambient_rank);
        for (std::size_t j = 0; j < ambient_rank; ++j) r[j] = to_integer(Rat(den) * row[j]);
        scaled.push_back(std::move(r));
    }
    auto basis = hnf_rows(std::move(scaled), ambient_rank);
    Int g = content(basis, den);
    if (g > 1) {
        for (auto& row : basis)
            for (auto& x : row) x /= g;
        den /= g;
    }
    return IntegerLattice(ambient_rank, std::move(basis), std::move(den));
}

RatVec IntegerLattice::basis_row(std::size_t i) const {
    RatVec row(ambient_rank_);
    for (std::size_t j = 0; j < ambient_rank_; ++j) {
        row[j] = Rat(basis_[i][j], denominator_);
        row[j].canonicalize();
    }
    return row;
}

std::optional<IntVec> IntegerLattice::membership(const RatVec& v) const {
    if (v.size() != ambient_rank_)
        throw std::invalid_argument("membership: dimension mismatch");
    // v in L iff denominator*v is integral and lies in the row span of basis.
    RatVec w(ambient_rank_);
    for (std::size_t j = 0; j < ambient_rank_; ++j) w[j] = Rat(denominator_) * v[j];
    IntVec scaled(ambient_rank_);
    for (std::size_t j = 0; j < ambient_rank_; ++j) {
        w[j].canonicalize();
        if (!is_integer(w[j])) return std::nullopt;
        scaled[j] = w[j].get_num();
    }
    // Forward substitution along the echelon structure.
    IntVec coords(basis_.size());
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient_rank_ && row <= basis_.size(); ++c) {
        bool is_pivot = row < basis_.size() && basis_[row][c] != 0;
        // Columns left of the current pivot must already be exhausted.
        if (!is_pivot) {
            if (scaled[c] != 0) return std::nullopt;
            continue;
        }
        if (!divides(basis_[row][c], scaled[c])) return std::nullopt;
        coords[row] = scaled[c] / basis_[row][c];
        if (coords[row] != 0)
            for (std::size_t j = c; j < ambient_rank_; ++j)
                scaled[j] -= coords[row] * basis_[row][j];
        ++row;
    }
    for (std::size_t j = 0; j < ambient_rank_; ++j)
        if (scaled[j] != 0) return std::nullopt;
    return coords;
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
    if (other.ambient_rank_ != ambient_rank_)
        throw std::invalid_argument("contains: dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

IntegerLattice IntegerLattice::dual() const {
    if (!full_rank())
        throw std::domain_error("dual_lattice: lattice is not of full rank");
    const std::size_t n = ambient_rank_;
    // Invert basis over Q by Gauss-Jordan; dual rows are denominator * B^{-T}.
    std::vector<RatVec> aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(basis_[i][j]);
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw internal_error("dual_lattice: singular HNF basis");
        std::swap(aug[c], aug[p]);
        Rat inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<RatVec> dual_rows(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            dual_rows[i][j] = Rat(denominator_) * aug[j][n + i];
            dual_rows[i][j].canonicalize();
        }
    return from_rational_rows(n, dual_rows);
}

Int IntegerLattice::divisibility_factor(const RatVec& v) const {
    auto coords = membership(v);
    if (!coords) throw std::domain_error("divisibility_factor: vector is not in the lattice");
    Int g = 0;
    for (const auto& x : *coords) g = gcd(g, x);
    if (g == 0) throw std::domain_error("divisibility_factor: zero vector");
    return g;
}

}  // namespace cobord
