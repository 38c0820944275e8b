#pragma once

#include <optional>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// A finitely generated subgroup of Q^n, stored as (1/denominator) times the
/// integer row lattice spanned by `basis`.  After construction the basis is in
/// row Hermite normal form (pivots positive, entries above a pivot reduced to
/// [0, pivot)) and the pair (basis, denominator) has no common integer factor,
/// so two lattices are equal iff their representations are identical.
class IntegerLattice {
public:
    /// Empty placeholder (ambient rank 0); real lattices come from the
    /// factory functions below.
    IntegerLattice() = default;

    /// Lattice spanned by integer rows (denominator 1).
    static IntegerLattice from_integer_rows(std::size_t ambient_rank,
                                            const std::vector<IntVec>& rows);

    /// Lattice spanned by rational rows.
    static IntegerLattice from_rational_rows(std::size_t ambient_rank,
                                             const std::vector<RatVec>& rows);

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t rank() const { return basis_.size(); }
    bool full_rank() const { return rank() == ambient_rank_; }
    const std::vector<IntVec>& basis() const { return basis_; }
    const Int& denominator() const { return denominator_; }

    /// Basis row i as a vector of rationals.
    RatVec basis_row(std::size_t i) const;

    /// Integer coordinates of v in the basis, or nullopt if v is not a member.
    std::optional<IntVec> membership(const RatVec& v) const;
    bool contains(const RatVec& v) const { return membership(v).has_value(); }
    bool contains(const IntegerLattice& other) const;

    /// Dual lattice {c : <c,v> in Z for all v in L}; requires full rank.
    IntegerLattice dual() const;

    /// Largest n >= 1 with v/n still in the lattice; requires v in L, v != 0.
    Int divisibility_factor(const RatVec& v) const;

    bool operator==(const IntegerLattice& other) const = default;

private:
    IntegerLattice(std::size_t ambient_rank, std::vector<IntVec> basis, Int denominator)
        : ambient_rank_(ambient_rank), basis_(std::move(basis)),
          denominator_(std::move(denominator)) {}

    std::size_t ambient_rank_ = 0;
    std::vector<IntVec> basis_;
    Int denominator_ = 1;
};

/// Row Hermite normal form of the span of `rows` (all of length ambient_rank).
/// Output is canonical: independent of row order and of redundant generators.
IntegerLattice hermite_normal_form(std::size_t ambient_rank, const std::vector<IntVec>& rows);

}  // namespace cobord
