#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobord/charclass.hpp"
#include "cobord/chow.hpp"
#include "cobord/lattice.hpp"
#include "cobord/partition.hpp"

namespace cobord {

/// Homogeneous element of Z[b]_d: integer coefficients of the monomials b^I
/// over partitions I of d.  Fundamental polynomials of d-dimensional
/// varieties live here.
class FundamentalVector {
public:
    explicit FundamentalVector(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Int>& coords() const { return coords_; }
    Int coord(const Partition& I) const;
    void add_coord(const Partition& I, const Int& value);

    RatVec coord_vector() const;  // partitions_of(degree) order
    static FundamentalVector from_coord_vector(int degree, const IntVec& coords);

    /// Polynomial multiplication in the b-variables (b^I b^J = b^{I+J}).
    FundamentalVector operator*(const FundamentalVector& other) const;
    FundamentalVector& operator+=(const FundamentalVector& other);
    FundamentalVector& operator*=(const Int& scalar);
    bool operator==(const FundamentalVector&) const = default;

private:
    int degree_;
    std::map<Partition, Int> coords_;
};

/// b(X) = sum_{|I|=dim X} deg(c_I(-T_X)) b^I.
FundamentalVector fundamental_polynomial(const VarietyModel& X);

/// <P, v> = sum_I P_I v_I (the bases (c_I) and (b^I) are dual).
Rat pairing(const CharClassPoly& P, const FundamentalVector& v);

/// All products of generator atoms of total dimension exactly d, with their
/// fundamental vectors (atom vectors multiplied together).
struct GeneratorProduct {
    std::vector<Atom> atoms;
    FundamentalVector vector;
};
const std::vector<GeneratorProduct>& generator_products(int d);

/// The degree-d cobordism lattice spanned by the generator products; full
/// rank p(d) is asserted.
const IntegerLattice& lattice_L(int d);

/// Lattice spanned by S_f over f = prod tau_i^{m_i} with 0 <= m_i <= B,
/// in c_I coordinates.
IntegerLattice lattice_Iprime(int d, int exponent_bound);

struct HattoriStongReport {
    int degree = 0;
    bool conclusive = false;  // stabilized below the ceiling
    bool holds = false;       // stabilized I' equals dual(L)
    int b_stable = -1;
    IntegerLattice dual;      // I_d
    IntegerLattice iprime;    // last computed I'_d(B)
};

/// Computes I_d = dual(L_d), raises B until I'(B) = I'(B+1), and compares.
/// The inclusion I'(B) <= I_d is asserted at every step.
HattoriStongReport hattori_stong_verify(int d, int max_b = 6);

struct IntegralityVerdict {
    bool integral = false;
    // Witness for a non-integral class: a generator product with fractional
    // characteristic number.
    std::string witness_variety;
    Rat witness_value;
    // Coordinates of the Segre image in the HNF basis of I_d when integral.
    std::optional<IntVec> coordinates;
};

/// Tests deg(P(T_X)) in Z for all d-dimensional generator products via
/// membership of P(s_1..s_d) in the dual lattice I_d.
IntegralityVerdict check_integral_class(const CharClassPoly& P);

/// Largest n >= 1 with v/n still in L_d; requires v in L_d.
Int divisibility_bound(const FundamentalVector& v);

}  // namespace cobord
