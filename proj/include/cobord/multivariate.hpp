#pragma once

#include <map>
#include <vector>

#include "cobord/rational.hpp"
#include "cobord/series.hpp"

namespace cobord {

class ChernPolynomial;

/// Polynomial in a fixed number of indeterminates over Q, truncated above a
/// total-degree bound.  All arithmetic silently drops terms above the bound.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly(std::size_t vars, int bound) : vars_(vars), bound_(bound) {}
    static MultiPoly constant(std::size_t vars, int bound, const Rat& value);
    static MultiPoly variable(std::size_t vars, int bound, std::size_t index);

    std::size_t vars() const { return vars_; }
    int bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& coeff);
    Rat coefficient(const Expo& e) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly& operator*=(const Rat& scalar);

    /// Terms of total degree exactly d.
    MultiPoly homogeneous_part(int d) const;

    /// Substitute a one-variable series evaluated at indeterminate `index`.
    static MultiPoly from_series(std::size_t vars, int bound, std::size_t index,
                                 const Series& s);

private:
    std::size_t vars_;
    int bound_;
    std::map<Expo, Rat> terms_;
};

/// Elementary symmetric polynomials e_0..e_max of the given values
/// (generating-product recursion; values need not be linear).
std::vector<MultiPoly> elementary_symmetric(const std::vector<MultiPoly>& values, int e_max);

/// Expresses a symmetric polynomial through the elementary symmetric
/// polynomials of its indeterminates: returns Q with
/// P(xi) = Q(e_1(xi), ..., e_n(xi)), deg(e_i) = i.  Throws if P is not
/// symmetric (detected by a non-descending leading exponent).
ChernPolynomial symmetric_to_elementary(const MultiPoly& p);

}  // namespace cobord
