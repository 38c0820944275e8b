#include <doctest.h>

#include "cobord/charclass.hpp"
#include "cobord/multivariate.hpp"
#include "cobord/series.hpp"

using namespace cobord;

namespace {

ChernPolynomial c(int i) { return ChernPolynomial::variable(i); }

ChernPolynomial term(const Rat& coeff, std::initializer_list<int> parts) {
    ChernPolynomial p;
    p.add_term(Partition(std::vector<int>(parts)), coeff);
    return p;
}

CharClassPoly unit_class(const Partition& I) {
    CharClassPoly p(I.weight());
    p.add_coord(I, 1);
    return p;
}

// The Todd polynomial in Chern variables through a second code path:
// exp(sum_k a_k Q_k) with a_k the log-Todd series coefficients.
ChernPolynomial universal_todd(int d) {
    Series a = series_log(todd_series(static_cast<std::size_t>(d) + 1),
                          static_cast<std::size_t>(d) + 1);
    ChernPolynomial arg;
    for (int k = 1; k <= d; ++k) {
        ChernPolynomial t = newton_polynomial(k);
        t *= a[static_cast<std::size_t>(k)];
        arg += t;
    }
    ChernPolynomial out = ChernPolynomial::constant(1), power = ChernPolynomial::constant(1);
    Rat invfac(1);
    for (int t = 1; t <= d; ++t) {
        power = power.mul(arg, d);
        invfac /= Rat(t);
        ChernPolynomial x = power;
        x *= invfac;
        out += x;
    }
    return out.homogeneous_part(d);
}

}  // namespace

TEST_CASE("Segre polynomials from the inverse series") {
    auto s = segre_polynomials(3);
    CHECK(s[0] == -c(1));
    CHECK(s[1] == term(1, {1, 1}) + term(-1, {2}));
    CHECK(s[2] == term(-1, {1, 1, 1}) + term(2, {2, 1}) + term(-1, {3}));
}

TEST_CASE("Segre substitution on basis elements") {
    CHECK(segre_substitute(CharClassPoly::from_monomial(c(1))).to_monomial() == -c(1));
    CHECK(segre_substitute(CharClassPoly::from_monomial(c(2))).to_monomial() ==
          term(1, {1, 1}) + term(-1, {2}));

    ChernPolynomial c1c2 = term(1, {2, 1});
    auto twice = segre_substitute(segre_substitute(CharClassPoly::from_monomial(c1c2)));
    CHECK(twice.to_monomial() == c1c2);
}

TEST_CASE("Segre substitution is an involution for d <= 8") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& I : partitions_of(d)) {
            auto p = unit_class(I);
            CHECK(segre_substitute(segre_substitute(p)) == p);
        }
}

TEST_CASE("coordinate vector round trip") {
    for (int d = 0; d <= 6; ++d)
        for (const auto& I : partitions_of(d)) {
            auto p = unit_class(I);
            CHECK(CharClassPoly::from_coord_vector(d, p.coord_vector()) == p);
            CHECK(CharClassPoly::from_monomial(p.to_monomial()) == p);
        }
}

TEST_CASE("R_1 is the Todd polynomial (two code paths)") {
    for (int d = 1; d <= 6; ++d) {
        CharClassPoly r1 = build_Rf({}, d);
        CHECK(r1.to_monomial() == universal_todd(d));
    }
    // Frozen degree-2 value (c_1^2 + c_2)/12 in c_I coordinates.
    CharClassPoly r2 = build_Rf({}, 2);
    CHECK(r2.coord(Partition({2})) == Rat(1, 12));
    CHECK(r2.coord(Partition({1, 1})) == Rat(1, 4));
}

TEST_CASE("R_f and S_f for f = tau_1 in degree 1") {
    CharClassPoly r = build_Rf({1}, 1);
    CHECK(r.to_monomial() == Rat(3, 2) * c(1));
    CharClassPoly s = build_Sf({1}, 1);
    CHECK(s.to_monomial() == Rat(-3, 2) * c(1));

    // f = 1 at d = 1: the Todd half.
    CHECK(build_Sf({}, 1).to_monomial() == Rat(-1, 2) * c(1));
}

TEST_CASE("degree-0 classes are scalars") {
    CharClassPoly r = build_Rf({}, 0);
    CHECK(r.coord(Partition()) == 1);
    CHECK(build_Sf({}, 0) == r);
}

TEST_CASE("R_f is linear in f") {
    // Test-side computation of R_{tau_1 + tau_2} from the defining series.
    const int d = 3;
    const auto n = static_cast<std::size_t>(d);
    std::vector<MultiPoly> exps;
    for (std::size_t j = 0; j < n; ++j)
        exps.push_back(MultiPoly::from_series(n, d, j, exponential_series(n + 1)));
    auto elem = elementary_symmetric(exps, d);
    MultiPoly f = elem[1];
    f += elem[2];
    Series td = todd_series(n + 1);
    for (std::size_t j = 0; j < n; ++j)
        f = f * MultiPoly::from_series(n, d, j, td);
    // Read coordinates off the descending exponents, as the library does.
    CharClassPoly expected(d);
    MultiPoly top = f.homogeneous_part(d);
    for (const auto& [expo, coeff] : top.terms()) {
        bool descending = true;
        for (std::size_t i = 0; i + 1 < expo.size(); ++i)
            if (expo[i] < expo[i + 1]) descending = false;
        if (!descending) continue;
        std::vector<int> parts;
        for (int e : expo)
            if (e > 0) parts.push_back(e);
        expected.add_coord(Partition(std::move(parts)), coeff);
    }

    CharClassPoly sum = build_Rf({1}, d);
    sum += build_Rf({0, 1}, d);
    CHECK(sum == expected);
}

TEST_CASE("signature polynomials match the printed values") {
    CharClassPoly p2 = hirzebruch_signature_polynomial(2);
    CHECK(p2.to_monomial() == Rat(1, 3) * term(1, {1, 1}) + Rat(-2, 3) * c(2));

    CharClassPoly p4 = hirzebruch_signature_polynomial(4);
    ChernPolynomial expected = Rat(14, 45) * c(4) + Rat(-14, 45) * term(1, {3, 1}) +
                               Rat(1, 15) * term(1, {2, 2}) + Rat(4, 45) * term(1, {2, 1, 1}) +
                               Rat(-1, 45) * term(1, {1, 1, 1, 1});
    CHECK(p4.to_monomial() == expected);

    CHECK_THROWS_AS((void)hirzebruch_signature_polynomial(3), std::invalid_argument);
}

TEST_CASE("catalogue classes") {
    CHECK(catalogue_class("half_euler", {"3"}).to_monomial() == Rat(1, 2) * c(3));
    CHECK(catalogue_class("half_c1_power", {"3"}).to_monomial() ==
          Rat(1, 2) * term(1, {1, 1, 1}));
    CHECK(catalogue_class("half_segre", {"2"}).to_monomial() ==
          Rat(1, 2) * (term(1, {1, 1}) + term(-1, {2})));

    // steenrod(2, (alpha_1 = d)) coincides with half_segre(d).
    for (int d = 1; d <= 4; ++d)
        CHECK(catalogue_class("steenrod", {"2", Partition::single(1, d).to_string()}) ==
              catalogue_class("half_segre", {std::to_string(d)}));

    // steenrod(3, (alpha_2 = 1)) = (1/3)(s_1^2 - 2 s_2) = (1/3)(-c_1^2 + 2 c_2).
    CHECK(catalogue_class("steenrod", {"3", "2"}).to_monomial() ==
          Rat(-1, 3) * term(1, {1, 1}) + Rat(2, 3) * c(2));

    // newton_over_q(q, d) is steenrod at the single part d.
    CHECK(catalogue_class("newton_over_q", {"2", "3"}) ==
          catalogue_class("steenrod", {"2", "3"}));

    CHECK(catalogue_class("signature", {"2"}) == hirzebruch_signature_polynomial(2));
}

TEST_CASE("catalogue constraint violations") {
    CHECK_THROWS_AS((void)catalogue_class("half_euler", {"2"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("half_c1_power", {"4"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("steenrod", {"4", "3"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("steenrod", {"3", "3"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("newton_over_q", {"3", "4"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("signature", {"3"}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("nonsense", {}), std::invalid_argument);
    CHECK_THROWS_AS((void)catalogue_class("half_euler", {}), std::invalid_argument);
}
