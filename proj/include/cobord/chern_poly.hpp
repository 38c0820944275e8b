#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobord/partition.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Element of Q[c_1, c_2, ...] with deg(c_i) = i.  Monomials are keyed by the
/// exponent multi-index (c^alpha <-> Partition with parts j of multiplicity
/// alpha_j); only nonzero coefficients are stored.
class ChernPolynomial {
public:
    ChernPolynomial() = default;
    static ChernPolynomial constant(const Rat& value);
    static ChernPolynomial variable(int i);  // c_i

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coefficient(const Partition& monomial) const;
    void add_term(const Partition& monomial, const Rat& coeff);

    int max_degree() const;
    bool is_homogeneous(int d) const;
    ChernPolynomial homogeneous_part(int d) const;
    ChernPolynomial truncated(int bound) const;

    ChernPolynomial& operator+=(const ChernPolynomial& other);
    ChernPolynomial& operator-=(const ChernPolynomial& other);
    ChernPolynomial operator-() const;
    ChernPolynomial& operator*=(const Rat& scalar);
    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
    friend ChernPolynomial operator*(const Rat& s, ChernPolynomial p) { return p *= s; }
    ChernPolynomial operator*(const ChernPolynomial& other) const { return mul(other, -1); }

    /// Product truncated above total degree `bound` (no truncation if < 0).
    ChernPolynomial mul(const ChernPolynomial& other, int bound) const;

    /// Substitute c_i -> values[i-1]; monomial products truncated at `bound`.
    ChernPolynomial compose(const std::vector<ChernPolynomial>& values, int bound) const;

    bool operator==(const ChernPolynomial&) const = default;

    /// Human-readable form, e.g. "c1^2 - 2*c2".
    std::string to_string() const;

private:
    std::map<Partition, Rat> terms_;
};

/// The unique integer polynomial with sigma_I = c_I(sigma_1, ..., sigma_n),
/// computed with n = max(|I|, 1) indeterminates (result is independent of
/// n >= |I|).  Cached.
const ChernPolynomial& conner_floyd_polynomial(const Partition& I);

/// Same computation forced to use `nvars` indeterminates (stability checks).
ChernPolynomial conner_floyd_polynomial_with_vars(const Partition& I, int nvars);

/// Newton power-sum polynomial Q_d: Q_d(sigma_1,...,sigma_d) = sum xi_i^d.
ChernPolynomial newton_polynomial(int d);

/// Total Chern class of the dual bundle: c_i -> (-1)^i c_i.
ChernPolynomial dual_chern(const ChernPolynomial& total);

/// Chern classes c_1..bound of Lambda^i(E) for E of rank r, as polynomials in
/// c_1..c_bound of E (splitting principle over i-element subsets of roots).
std::vector<ChernPolynomial> exterior_power_chern(int r, int i, int bound);

}  // namespace cobord
