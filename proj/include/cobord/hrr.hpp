#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cobord/chow.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Virtual-bundle expression over a variety: atoms are the tangent bundle,
/// trivial bundles and line-bundle twists of Proj factors; constructors are
/// dual, exterior power, tensor, direct sum and negation.
class BundleExpr {
public:
    enum class Kind { Tangent, Trivial, Line, Dual, Exterior, Tensor, Sum, Negate };

    static BundleExpr tangent();
    static BundleExpr trivial(int rank);
    static BundleExpr line(int factor, int twist);
    static BundleExpr dual(BundleExpr e);
    static BundleExpr exterior(int power, BundleExpr e);
    static BundleExpr tensor(BundleExpr a, BundleExpr b);
    static BundleExpr sum(BundleExpr a, BundleExpr b);
    static BundleExpr negate(BundleExpr e);

    Kind kind() const { return kind_; }
    int arg0() const { return arg0_; }  // rank / factor / power
    int arg1() const { return arg1_; }  // twist
    const BundleExpr& child(std::size_t i) const { return *children_.at(i); }

    std::string to_string() const;

private:
    Kind kind_ = Kind::Trivial;
    int arg0_ = 0;
    int arg1_ = 0;
    std::vector<std::shared_ptr<const BundleExpr>> children_;
};

/// Rank and total Chern class of a (virtual) bundle expression on X.
struct BundleValue {
    Int rank;
    GradedClass total;
};
BundleValue evaluate_bundle(const VarietyModel& X, const BundleExpr& expr);

/// chi(X, E) = deg(ch(E) td(T_X)); integrality of the result is asserted.
Int euler_characteristic(const VarietyModel& X, const BundleExpr& expr);

/// Both sides of <S_f, b(X)> = chi(X, tensor of exterior powers of T_X).
struct CobordSfCheck {
    Rat lhs;
    Int rhs;
    bool equal = false;
};
CobordSfCheck verify_cobord_sf(const VarietyModel& X, const std::vector<int>& exponents);

/// deg(P_d(T_X)) for even-dimensional X, cross-checked against the Hodge sum
/// sum_i chi(X, Omega^i); disagreement is an internal error.
Int signature(const VarietyModel& X);

/// Odd-dimensional check of e(X)/2 = chi(X, rho(T_X)) with
/// rho(V) = sum_{i<=(d-1)/2} (-1)^i Lambda^i V*.
struct HalfEulerReport {
    Int e;
    Int half;
    Int rho_value;
    bool equal = false;
};
HalfEulerReport half_euler_check(const VarietyModel& X);

/// Parses the bundle-expression grammar.  Atoms: `T` (tangent), `O` (trivial
/// line), `O(k)@f` (twist k on Proj factor f).  Operators, tightest first:
/// postfix `^i` (exterior power), prefix `~` (dual) and `-` (negate), `*`
/// (tensor), then `+`/binary `-` (sum/difference).  Parentheses group.
/// Whitespace-insensitive; errors report the byte position.
BundleExpr parse_bundle_expr(const std::string& text);

}  // namespace cobord
