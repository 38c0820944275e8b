#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobord/chern_poly.hpp"
#include "cobord/partition.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Homogeneous element of Q[c]_d stored in the basis {c_I : |I| = d} of
/// Conner-Floyd polynomials (the pairing with fundamental vectors is diagonal
/// in this basis).
class CharClassPoly {
public:
    explicit CharClassPoly(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Rat>& coords() const { return coords_; }
    Rat coord(const Partition& I) const;
    void add_coord(const Partition& I, const Rat& value);

    /// Coordinates in the canonical partitions_of(degree) order.
    RatVec coord_vector() const;
    static CharClassPoly from_coord_vector(int degree, const RatVec& coords);

    /// Exact change of basis to/from the monomial basis of Q[c]_d.
    ChernPolynomial to_monomial() const;
    static CharClassPoly from_monomial(const ChernPolynomial& p);

    CharClassPoly& operator+=(const CharClassPoly& other);
    CharClassPoly& operator*=(const Rat& scalar);
    bool operator==(const CharClassPoly&) const = default;

    std::string to_string() const { return to_monomial().to_string(); }

private:
    int degree_;
    std::map<Partition, Rat> coords_;
};

/// Segre polynomials s_1..s_d: coefficients of the inverse of 1 + sum c_i t^i.
std::vector<ChernPolynomial> segre_polynomials(int d);

/// Substitutes c_i -> s_i and re-expresses in the c_I basis (an involution).
CharClassPoly segre_substitute(const CharClassPoly& p);

/// R_f for f = prod tau_i^{m_i}: the degree-d symmetric part of
/// f(e^{xi_1},...,e^{xi_d}) * prod xi_j/(1-e^{-xi_j}) in d indeterminates,
/// in the c_I basis.  `exponents` lists m_1..m_d (shorter vectors are padded).
CharClassPoly build_Rf(const std::vector<int>& exponents, int d);

/// S_f = R_f(s_1,...,s_d).
CharClassPoly build_Sf(const std::vector<int>& exponents, int d);

/// Hirzebruch L-genus in Chern variables: L_{d/2} at
/// p_i = sum_{j=0}^{2i} (-1)^{i+j} c_j c_{2i-j}, c_0 = 1.  Requires even d.
CharClassPoly hirzebruch_signature_polynomial(int d);

/// The catalogue of integral rational characteristic classes, by name:
///   half_euler d        (1/2) c_d, d odd
///   half_c1_power d     (1/2) c_1^d, d odd
///   half_segre d        (1/2) s_d
///   steenrod q I        (1/q) c_I(s_1..s_d), q prime, parts of I = q^n - 1
///   newton_over_q q d   (1/q) Q_d(s_1..s_d), d = q^n - 1
///   signature d         hirzebruch_signature_polynomial(d), d even
/// Parameters arrive as strings (ints, or a partition like "1+2").
CharClassPoly catalogue_class(const std::string& name, const std::vector<std::string>& params);

}  // namespace cobord
