#include "cobord/hrr.hpp"

#include "cobord/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cobord/charclass.hpp"
#include "cobord/cobordism.hpp"

namespace cobord {

namespace {

std::shared_ptr<const BundleExpr> box(BundleExpr e) {
    return std::make_shared<const BundleExpr>(std::move(e));
}

}  // namespace

BundleExpr BundleExpr::tangent() {
    BundleExpr e;
    e.kind_ = Kind::Tangent;
    return e;
}

BundleExpr BundleExpr::trivial(int rank) {
    if (rank < 0) throw std::invalid_argument("trivial bundle rank must be >= 0");
    BundleExpr e;
    e.kind_ = Kind::Trivial;
    e.arg0_ = rank;
    return e;
}

BundleExpr BundleExpr::line(int factor, int twist) {
    BundleExpr e;
    e.kind_ = Kind::Line;
    e.arg0_ = factor;
    e.arg1_ = twist;
    return e;
}

BundleExpr BundleExpr::dual(BundleExpr inner) {
    BundleExpr e;
    e.kind_ = Kind::Dual;
    e.children_.push_back(box(std::move(inner)));
    return e;
}

BundleExpr BundleExpr::exterior(int power, BundleExpr inner) {
    if (power < 0) throw std::invalid_argument("exterior power must be >= 0");
    BundleExpr e;
    e.kind_ = Kind::Exterior;
    e.arg0_ = power;
    e.children_.push_back(box(std::move(inner)));
    return e;
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.kind_ = Kind::Tensor;
    e.children_.push_back(box(std::move(a)));
    e.children_.push_back(box(std::move(b)));
    return e;
}

BundleExpr BundleExpr::sum(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.kind_ = Kind::Sum;
    e.children_.push_back(box(std::move(a)));
    e.children_.push_back(box(std::move(b)));
    return e;
}

BundleExpr BundleExpr::negate(BundleExpr inner) {
    BundleExpr e;
    e.kind_ = Kind::Negate;
    e.children_.push_back(box(std::move(inner)));
    return e;
}

std::string BundleExpr::to_string() const {
    switch (kind_) {
        case Kind::Tangent: return "T";
        case Kind::Trivial: return arg0_ == 1 ? "O" : "O+...(" + std::to_string(arg0_) + ")";
        case Kind::Line: return "O(" + std::to_string(arg1_) + ")@" + std::to_string(arg0_);
        case Kind::Dual: return "~(" + child(0).to_string() + ")";
        case Kind::Exterior:
            return "(" + child(0).to_string() + ")^" + std::to_string(arg0_);
        case Kind::Tensor:
            return "(" + child(0).to_string() + ")*(" + child(1).to_string() + ")";
        case Kind::Sum:
            return "(" + child(0).to_string() + ")+(" + child(1).to_string() + ")";
        case Kind::Negate: return "-(" + child(0).to_string() + ")";
    }
    return "?";
}

namespace {

GradedClass dual_total(const GradedClass& total) {
    GradedClass out(total.shape());
    for (const auto& [e, c] : total.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        out.add_term(e, deg % 2 == 0 ? c : -c);
    }
    return out;
}

// Total Chern class from a Chern character: p_k = k! ch_k, then the inverse
// Newton recursion k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
GradedClass total_from_character(const VarietyModel& X, const GradedClass& ch) {
    const int top = X.dimension();
    std::vector<GradedClass> e;
    e.push_back(X.one());
    Int fac(1);
    std::vector<GradedClass> p;
    p.push_back(X.zero());
    for (int k = 1; k <= top; ++k) {
        fac *= k;
        GradedClass pk = ch.homogeneous_part(k);
        pk *= Rat(fac);
        p.push_back(std::move(pk));
    }
    for (int k = 1; k <= top; ++k) {
        GradedClass acc = X.zero();
        for (int i = 1; i <= k; ++i) {
            GradedClass term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            if (i % 2 == 0) term *= Rat(-1);
            acc += term;
        }
        acc *= Rat(1, k);
        e.push_back(std::move(acc));
    }
    GradedClass total = X.one();
    for (int k = 1; k <= top; ++k) total += e[static_cast<std::size_t>(k)];
    return total;
}

GradedClass character_of(const VarietyModel& X, const BundleValue& value) {
    return chern_character(X, value.total, Rat(value.rank), X.dimension());
}

Int checked_long_rank(const Int& r, const char* what) {
    if (r < 0) throw std::domain_error(std::string(what) + ": needs an honest bundle, got virtual rank " + r.get_str());
    return r;
}

}  // namespace

BundleValue evaluate_bundle(const VarietyModel& X, const BundleExpr& expr) {
    switch (expr.kind()) {
        case BundleExpr::Kind::Tangent:
            return {Int(X.dimension()), X.tangent_total()};
        case BundleExpr::Kind::Trivial:
            return {Int(expr.arg0()), X.one()};
        case BundleExpr::Kind::Line: {
            GradedClass total = X.one();
            GradedClass h = X.hyperplane(static_cast<std::size_t>(expr.arg0()));
            h *= Rat(expr.arg1());
            total += h;
            return {Int(1), total};
        }
        case BundleExpr::Kind::Dual: {
            BundleValue v = evaluate_bundle(X, expr.child(0));
            return {v.rank, dual_total(v.total)};
        }
        case BundleExpr::Kind::Exterior: {
            BundleValue v = evaluate_bundle(X, expr.child(0));
            Int rank = checked_long_rank(v.rank, "exterior power");
            if (Int(expr.arg0()) > rank)
                throw std::domain_error("exterior power " + std::to_string(expr.arg0()) +
                                        " exceeds rank " + rank.get_str());
            const int r = static_cast<int>(rank.get_si());
            const int i = expr.arg0();
            GradedClass total = X.one();
            if (i > 0 && X.dimension() > 0) {
                auto classes = exterior_power_chern(r, i, X.dimension());
                auto values = X.components(v.total);
                for (const auto& cls : classes) total += X.evaluate(cls, values);
            }
            return {binomial(rank, static_cast<unsigned long>(i)), total};
        }
        case BundleExpr::Kind::Tensor: {
            BundleValue a = evaluate_bundle(X, expr.child(0));
            BundleValue b = evaluate_bundle(X, expr.child(1));
            GradedClass ch = character_of(X, a) * character_of(X, b);
            return {a.rank * b.rank, total_from_character(X, ch)};
        }
        case BundleExpr::Kind::Sum: {
            BundleValue a = evaluate_bundle(X, expr.child(0));
            BundleValue b = evaluate_bundle(X, expr.child(1));
            return {a.rank + b.rank, a.total * b.total};
        }
        case BundleExpr::Kind::Negate: {
            BundleValue v = evaluate_bundle(X, expr.child(0));
            return {-v.rank, v.total.inverse()};
        }
    }
    throw internal_error("evaluate_bundle: unhandled node");
}

Int euler_characteristic(const VarietyModel& X, const BundleExpr& expr) {
    BundleValue v = evaluate_bundle(X, expr);
    GradedClass ch = character_of(X, v);
    GradedClass td = todd_class(X, X.tangent_total(), X.dimension());
    Rat chi = X.degree(ch * td);
    if (!is_integer(chi))
        throw internal_error("euler_characteristic: non-integral value " + chi.get_str());
    return chi.get_num();
}

CobordSfCheck verify_cobord_sf(const VarietyModel& X, const std::vector<int>& exponents) {
    const int d = X.dimension();
    if (static_cast<int>(exponents.size()) > d)
        throw std::invalid_argument("verify_cobord_sf: exponent vector longer than dim(X)");
    CobordSfCheck check;
    check.lhs = pairing(build_Sf(exponents, d), fundamental_polynomial(X));
    BundleExpr bundle = BundleExpr::trivial(1);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (int k = 0; k < exponents[i]; ++k)
            bundle = BundleExpr::tensor(std::move(bundle),
                                        BundleExpr::exterior(static_cast<int>(i) + 1,
                                                             BundleExpr::tangent()));
    check.rhs = euler_characteristic(X, bundle);
    check.equal = check.lhs == Rat(check.rhs);
    return check;
}

namespace {

BundleExpr omega(int i) {
    return BundleExpr::exterior(i, BundleExpr::dual(BundleExpr::tangent()));
}

}  // namespace

Int signature(const VarietyModel& X) {
    const int d = X.dimension();
    if (d % 2 != 0) throw std::domain_error("signature: dimension must be even");
    Int hodge(0);
    for (int i = 0; i <= d; ++i) hodge += euler_characteristic(X, omega(i));
    Rat lgenus;
    if (d == 0) {
        lgenus = X.degree(X.one());
    } else {
        ChernPolynomial pd = hirzebruch_signature_polynomial(d).to_monomial();
        lgenus = X.degree(X.evaluate(pd, X.components(X.tangent_total())));
    }
    if (lgenus != Rat(hodge))
        throw internal_error("signature: L-genus value " + lgenus.get_str() +
                               " disagrees with Hodge sum " + hodge.get_str());
    return hodge;
}

HalfEulerReport half_euler_check(const VarietyModel& X) {
    const int d = X.dimension();
    if (d % 2 != 1) throw std::domain_error("half_euler_check: dimension must be odd");
    HalfEulerReport report;
    // e(X) both as the top Chern number and as the alternating Hodge sum.
    GradedClass top = X.tangent_total().homogeneous_part(d);
    Rat chern_number = X.degree(top);
    Int hodge(0);
    for (int i = 0; i <= d; ++i) {
        Int chi = euler_characteristic(X, omega(i));
        if (i % 2 == 0)
            hodge += chi;
        else
            hodge -= chi;
    }
    if (chern_number != Rat(hodge))
        throw internal_error("half_euler_check: deg c_d(T_X) disagrees with Hodge sum");
    report.e = hodge;
    if (report.e % 2 != 0)
        throw internal_error("half_euler_check: odd Euler characteristic in odd dimension");
    report.half = report.e / 2;
    report.rho_value = 0;
    for (int i = 0; i <= (d - 1) / 2; ++i) {
        Int chi = euler_characteristic(X, omega(i));
        if (i % 2 == 0)
            report.rho_value += chi;
        else
            report.rho_value -= chi;
    }
    report.equal = report.half == report.rho_value;
    return report;
}

namespace {

struct BundleParser {
    const std::string& text;
    std::string s;
    std::vector<std::size_t> pos_map;
    std::size_t i = 0;

    explicit BundleParser(const std::string& t) : text(t) {
        for (std::size_t k = 0; k < text.size(); ++k)
            if (!std::isspace(static_cast<unsigned char>(text[k]))) {
                s += text[k];
                pos_map.push_back(k);
            }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::size_t at = i < pos_map.size() ? pos_map[i] : text.size();
        throw std::invalid_argument("bundle-expr parse error at position " +
                                    std::to_string(at) + ": " + what);
    }

    bool peek(char c) const { return i < s.size() && s[i] == c; }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }

    int integer(bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && (peek('-') || peek('+'))) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected a number");
        try {
            return std::stoi(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            i = start;
            fail("number out of range");
        }
    }

    BundleExpr expr() {
        BundleExpr acc = term();
        while (peek('+') || peek('-')) {
            bool minus = s[i] == '-';
            ++i;
            BundleExpr rhs = term();
            if (minus) rhs = BundleExpr::negate(std::move(rhs));
            acc = BundleExpr::sum(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    BundleExpr term() {
        BundleExpr acc = factor();
        while (eat('*')) acc = BundleExpr::tensor(std::move(acc), factor());
        return acc;
    }

    BundleExpr factor() {
        if (eat('~')) return BundleExpr::dual(factor());
        if (eat('-')) return BundleExpr::negate(factor());
        return postfix();
    }

    BundleExpr postfix() {
        BundleExpr acc = atom();
        while (eat('^')) {
            int power = integer(false);
            acc = BundleExpr::exterior(power, std::move(acc));
        }
        return acc;
    }

    BundleExpr atom() {
        if (eat('T')) return BundleExpr::tangent();
        if (eat('O')) {
            if (!eat('(')) return BundleExpr::trivial(1);
            int twist = integer(true);
            if (!eat(')')) fail("expected ')' after twist");
            if (!eat('@')) fail("expected '@' and a factor index after the twist");
            int factor_index = integer(false);
            return BundleExpr::line(factor_index, twist);
        }
        if (eat('(')) {
            BundleExpr inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail("expected 'T', 'O' or '('");
    }

    BundleExpr parse() {
        if (s.empty()) fail("empty bundle expression");
        BundleExpr e = expr();
        if (i != s.size()) fail("unexpected trailing input");
        return e;
    }
};

}  // namespace

BundleExpr parse_bundle_expr(const std::string& text) { return BundleParser(text).parse(); }

}  // namespace cobord
