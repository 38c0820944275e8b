#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cobord/chern_poly.hpp"
#include "cobord/partition.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Generator atom: a projective space P^n (n >= 1) or a Milnor hypersurface
/// H_{m,n} (2 <= m <= n), the bidegree-(1,1) hypersurface in P^m x P^n.
struct Atom {
    enum class Kind { Proj, Milnor };
    Kind kind = Kind::Proj;
    int m = 0;  // Proj: unused; Milnor: first exponent cap
    int n = 0;  // Proj: dimension; Milnor: second exponent cap

    static Atom proj(int n) { return {Kind::Proj, 0, n}; }
    static Atom milnor(int m, int n) { return {Kind::Milnor, m, n}; }

    int dimension() const { return kind == Kind::Proj ? n : m + n - 1; }
    std::string to_string() const;
    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

/// Exponent caps and truncation degrees of a presented graded ring.  Milnor
/// atoms are presented in their ambient ring Z[x,y]/(x^{m+1}, y^{n+1}); the
/// hypersurface itself only enters through the degree functional.  Each
/// factor's variable block is additionally truncated at the factor dimension
/// (classes above it vanish on the factor).
struct RingShape {
    std::vector<int> caps;
    int top_degree = 0;
    struct Block {
        std::size_t offset = 0;
        std::size_t width = 0;
        int degree_cap = 0;
    };
    std::vector<Block> blocks;
};

/// Element of a VarietyModel's ring: exact rational coefficients over the
/// monomial basis, truncated above the variety dimension.
class GradedClass {
public:
    explicit GradedClass(std::shared_ptr<const RingShape> shape) : shape_(std::move(shape)) {}
    static GradedClass one(std::shared_ptr<const RingShape> shape);

    const std::shared_ptr<const RingShape>& shape() const { return shape_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const std::vector<int>& expo) const;
    void add_term(const std::vector<int>& expo, const Rat& coeff);

    GradedClass& operator+=(const GradedClass& other);
    GradedClass& operator-=(const GradedClass& other);
    GradedClass& operator*=(const Rat& scalar);
    GradedClass operator*(const GradedClass& other) const;
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    bool operator==(const GradedClass& other) const { return terms_ == other.terms_; }

    GradedClass homogeneous_part(int d) const;
    Rat constant_term() const;

    /// Multiplicative inverse of a total class with constant term 1, truncated
    /// (total Chern class of the negated virtual bundle).
    GradedClass inverse() const;

    /// exp of a class with zero constant term, truncated at top degree.
    GradedClass exp() const;

private:
    std::shared_ptr<const RingShape> shape_;
    std::map<std::vector<int>, Rat> terms_;
};

/// A product of generator atoms with its Chow presentation, total tangent
/// Chern class and degree functional.
class VarietyModel {
public:
    explicit VarietyModel(std::vector<Atom> factors);

    const std::vector<Atom>& factors() const { return factors_; }
    int dimension() const { return dimension_; }
    const std::shared_ptr<const RingShape>& shape() const { return shape_; }
    const GradedClass& tangent_total() const { return tangent_total_; }
    std::string to_string() const;

    GradedClass zero() const { return GradedClass(shape_); }
    GradedClass one() const { return GradedClass::one(shape_); }

    /// Hyperplane class of factor `index` (Proj factors only).
    GradedClass hyperplane(std::size_t index) const;

    /// Degree functional: coefficient of the fundamental monomial in the top
    /// component (after the (x+y) push for every Milnor factor).
    Rat degree(const GradedClass& cls) const;

    /// Graded components cls_1..cls_top of a total class (index k = degree k).
    std::vector<GradedClass> components(const GradedClass& total) const;

    /// Ring homomorphism Q[c] -> ring sending c_i to values[i-1].
    GradedClass evaluate(const ChernPolynomial& poly,
                         const std::vector<GradedClass>& values) const;

private:
    std::vector<Atom> factors_;
    std::vector<std::size_t> var_offset_;  // first variable index per factor
    int dimension_ = 0;
    std::shared_ptr<const RingShape> shape_;
    GradedClass tangent_total_{nullptr};
};

VarietyModel build_variety(const std::vector<Atom>& atoms);

/// Parses the variety-spec grammar: `P<n>` or `H<m>,<n>`, factors joined by
/// `x`, whitespace-insensitive (e.g. "P2xH2,3xP1").  Reports the byte
/// position of the first offending character on failure.
std::vector<Atom> parse_variety_spec(const std::string& text);

/// Total Chern class of -E for a total class with constant term 1.
GradedClass virtual_negative(const GradedClass& total);

/// Conner-Floyd class c_I(E) for a total Chern class of E on X.
GradedClass conner_floyd_class(const VarietyModel& X, const Partition& I,
                               const GradedClass& total);

/// Chern character of a rank-r bundle with the given total Chern class,
/// truncated at degree d; coefficients are checked against the d! bound.
GradedClass chern_character(const VarietyModel& X, const GradedClass& total, const Rat& rank,
                            int d);

/// Todd class with the (d+1)! denominator check.
GradedClass todd_class(const VarietyModel& X, const GradedClass& total, int d);

}  // namespace cobord
