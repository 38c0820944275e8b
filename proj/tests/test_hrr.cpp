#include <doctest.h>

#include <random>

#include "cobord/cobordism.hpp"
#include "cobord/errors.hpp"
#include "cobord/hrr.hpp"

using namespace cobord;

namespace {

VarietyModel variety(const std::string& spec) {
    return build_variety(parse_variety_spec(spec));
}

BundleExpr omega(int i) { return BundleExpr::exterior(i, BundleExpr::dual(BundleExpr::tangent())); }

}  // namespace

TEST_CASE("chi of the structure sheaf is 1 on projective spaces") {
    for (int n = 1; n <= 5; ++n)
        CHECK(euler_characteristic(variety("P" + std::to_string(n)), BundleExpr::trivial(1)) == 1);
}

TEST_CASE("chi of line bundles and twists") {
    VarietyModel p1 = variety("P1");
    CHECK(euler_characteristic(p1, BundleExpr::line(0, 2)) == 3);  // T_{P^1}
    for (int k = -3; k <= 3; ++k)
        CHECK(euler_characteristic(p1, BundleExpr::line(0, k)) == k + 1);
}

TEST_CASE("chi of the cotangent powers on P^3") {
    VarietyModel p3 = variety("P3");
    // chi(Omega^p) = (-1)^p on P^n.
    CHECK(euler_characteristic(p3, omega(1)) == -1);
    CHECK(euler_characteristic(p3, omega(2)) == 1);
    CHECK(euler_characteristic(p3, omega(3)) == -1);
}

TEST_CASE("chi is additive and tensoring with O is the identity") {
    VarietyModel x = variety("P2");
    BundleExpr t = BundleExpr::tangent();
    BundleExpr o2 = BundleExpr::line(0, 2);
    Int chi_t = euler_characteristic(x, t);
    Int chi_o2 = euler_characteristic(x, o2);
    CHECK(euler_characteristic(x, BundleExpr::sum(t, o2)) == chi_t + chi_o2);
    CHECK(euler_characteristic(x, BundleExpr::tensor(t, BundleExpr::trivial(1))) == chi_t);
    CHECK(euler_characteristic(x, BundleExpr::negate(t)) == -chi_t);
}

TEST_CASE("exterior power ranks and classes agree with the tensor route") {
    // Lambda^2 T on P^3 coincides with Omega^1(4) (Euler-sequence duality).
    VarietyModel p3 = variety("P3");
    BundleExpr lambda2 = BundleExpr::exterior(2, BundleExpr::tangent());
    BundleValue direct = evaluate_bundle(p3, lambda2);
    CHECK(direct.rank == 3);
    BundleExpr twisted = BundleExpr::tensor(omega(1), BundleExpr::line(0, 4));
    BundleValue via_tensor = evaluate_bundle(p3, twisted);
    CHECK(direct.total == via_tensor.total);
    CHECK(euler_characteristic(p3, lambda2) == euler_characteristic(p3, twisted));
}

TEST_CASE("verify_cobord_sf on the worked examples") {
    CobordSfCheck a = verify_cobord_sf(variety("P2"), {0, 0});
    CHECK(a.lhs == 1);
    CHECK(a.rhs == 1);
    CHECK(a.equal);

    CobordSfCheck b = verify_cobord_sf(variety("P1"), {1});
    CHECK(b.lhs == 3);
    CHECK(b.rhs == 3);
    CHECK(b.equal);

    CobordSfCheck c = verify_cobord_sf(variety("H2,2"), {0, 0, 1});
    CHECK(c.equal);
}

TEST_CASE("signature of small even-dimensional varieties") {
    CHECK(signature(variety("P2")) == 1);
    CHECK(signature(variety("P1xP1")) == 0);
    CHECK(signature(variety("P4")) == 1);
    CHECK(signature(variety("P2xP2")) == 1);
    CHECK_THROWS_AS((void)signature(variety("P3")), std::domain_error);
}

TEST_CASE("signature degree-6 pipeline against evaluation oracles") {
    CHECK(signature(variety("P6")) == 1);
    CHECK(signature(variety("P2xP2xP2")) == 1);
}

TEST_CASE("half Euler characteristic identity") {
    HalfEulerReport p3 = half_euler_check(variety("P3"));
    CHECK(p3.e == 4);
    CHECK(p3.half == 2);
    CHECK(p3.rho_value == 2);
    CHECK(p3.equal);

    HalfEulerReport p1 = half_euler_check(variety("P1"));
    CHECK(p1.e == 2);
    CHECK(p1.half == 1);
    CHECK(p1.rho_value == 1);
    CHECK(p1.equal);

    HalfEulerReport h22 = half_euler_check(variety("H2,2"));
    CHECK(h22.e == 6);
    CHECK(h22.equal);

    CHECK_THROWS_AS((void)half_euler_check(variety("P2")), std::domain_error);
}

TEST_CASE("Serre-duality symmetry of the Hodge terms") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& g : generator_products(d)) {
            VarietyModel x = build_variety(g.atoms);
            for (int i = 0; i <= d; ++i) {
                Int lhs = euler_characteristic(x, omega(i));
                Int rhs = euler_characteristic(x, omega(d - i));
                Int sign = ((d - i) - i) % 2 == 0 ? 1 : -1;
                CHECK(lhs == sign * rhs);
            }
        }
}

TEST_CASE("top Chern number equals the alternating Hodge sum") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& g : generator_products(d)) {
            VarietyModel x = build_variety(g.atoms);
            GradedClass top = x.tangent_total().homogeneous_part(d);
            Int alternating(0);
            for (int i = 0; i <= d; ++i) {
                Int chi = euler_characteristic(x, omega(i));
                alternating += (i % 2 == 0) ? chi : -chi;
            }
            CHECK(x.degree(top) == alternating);
        }
}

TEST_CASE("random bundle expressions have integral Euler characteristics") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> twist(-3, 3);

    // euler_characteristic throws on a non-integral degree, so evaluating is
    // itself the assertion.
    for (const std::string& spec : {"P1", "P2", "P3", "H2,2"}) {
        VarietyModel x = variety(spec);
        std::function<BundleExpr(int)> gen = [&](int depth) -> BundleExpr {
            int choice = depth <= 0 ? pick(rng) % 3 : pick(rng);
            switch (choice) {
                case 0: return BundleExpr::tangent();
                case 1: return BundleExpr::trivial(1 + pick(rng) % 3);
                case 2:
                    if (x.factors()[0].kind == Atom::Kind::Proj)
                        return BundleExpr::line(0, twist(rng));
                    return BundleExpr::tangent();
                case 3: return BundleExpr::dual(gen(depth - 1));
                case 4: {
                    BundleExpr inner = gen(depth - 1);
                    BundleValue v = evaluate_bundle(x, inner);
                    if (v.rank < 0) return inner;
                    int max_i = static_cast<int>(std::min<long>(v.rank.get_si(), 4));
                    return BundleExpr::exterior(pick(rng) % (max_i + 1), std::move(inner));
                }
                case 5: return BundleExpr::tensor(gen(depth - 1), gen(depth - 1));
                default: return BundleExpr::sum(gen(depth - 1), gen(depth - 1));
            }
        };
        for (int trial = 0; trial < 1000; ++trial) (void)euler_characteristic(x, gen(3));
    }
}

TEST_CASE("bundle expression parsing") {
    VarietyModel p3 = variety("P3");
    CHECK(euler_characteristic(p3, parse_bundle_expr("O")) == 1);
    CHECK(euler_characteristic(p3, parse_bundle_expr("(~T)^1")) == -1);
    CHECK(euler_characteristic(p3, parse_bundle_expr("T + O(2)@0 - O")) ==
          euler_characteristic(p3, BundleExpr::tangent()) +
              euler_characteristic(p3, BundleExpr::line(0, 2)) - 1);
    CHECK(euler_characteristic(p3, parse_bundle_expr("T*T")) ==
          euler_characteristic(p3, BundleExpr::tensor(BundleExpr::tangent(),
                                                      BundleExpr::tangent())));
    // Precedence: ^ binds tighter than ~, which binds tighter than *.
    CHECK(evaluate_bundle(p3, parse_bundle_expr("~T^2")).total ==
          evaluate_bundle(p3, BundleExpr::dual(BundleExpr::exterior(2, BundleExpr::tangent())))
              .total);

    auto check_position = [](const std::string& text, std::size_t expected) {
        try {
            (void)parse_bundle_expr(text);
            FAIL("expected a parse error for ", text);
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            CHECK_MESSAGE(what.find("position " + std::to_string(expected)) != std::string::npos,
                          what);
        }
    };
    check_position("", 0);
    check_position("T+", 2);
    check_position("O(2@0", 3);
    check_position("T)", 1);
    check_position("X", 0);
}

TEST_CASE("domain errors in bundle evaluation") {
    VarietyModel p2 = variety("P2");
    // Exterior power above the rank.
    CHECK_THROWS_AS((void)euler_characteristic(p2, parse_bundle_expr("T^3")),
                    std::domain_error);
    // Line twists need a Proj factor.
    VarietyModel h = variety("H2,2");
    CHECK_THROWS_AS((void)euler_characteristic(h, parse_bundle_expr("O(1)@0")),
                    std::invalid_argument);
    // Exterior power of a virtual bundle.
    CHECK_THROWS_AS((void)euler_characteristic(p2, parse_bundle_expr("(-T)^2")),
                    std::domain_error);
}
