#include "cobord/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cobord/chow.hpp"
#include "cobord/hrr.hpp"

namespace cobord {

Json json_int(const Int& n) {
    if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(n.get_str());
}

Json json_rat(const Rat& q) {
    return Json{{"num", json_int(q.get_num())}, {"den", json_int(q.get_den())}};
}

namespace {

// Coordinate maps are keyed by the partition strings, sorted as strings for
// byte-stable output.
template <typename Map, typename Render>
Json json_coords(const Map& coords, Render render) {
    std::map<std::string, Json> sorted;
    for (const auto& [I, value] : coords) sorted.emplace(I.to_string(), render(value));
    Json out = Json::object();
    for (const auto& [key, value] : sorted) out[key] = value;
    return out;
}

}  // namespace

Json json_lattice(const IntegerLattice& lattice) {
    Json basis = Json::array();
    for (const auto& row : lattice.basis()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(json_int(x));
        basis.push_back(std::move(r));
    }
    return Json{{"ambient_rank", lattice.ambient_rank()},
                {"rank", lattice.rank()},
                {"denominator", json_int(lattice.denominator())},
                {"basis", std::move(basis)}};
}

Json json_char_class(const CharClassPoly& p) {
    return Json{{"degree", p.degree()},
                {"coords", json_coords(p.coords(), [](const Rat& q) { return json_rat(q); })},
                {"monomial", p.to_string()}};
}

Json json_fundamental(const FundamentalVector& v) {
    return Json{{"degree", v.degree()},
                {"coords", json_coords(v.coords(), [](const Int& n) { return json_int(n); })}};
}

Int parse_json_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Rat parse_json_rat(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return Rat(parse_json_int(j));
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        Rat q(parse_json_int(j.at("num")), parse_json_int(j.at("den")));
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("expected a rational ({num, den} or integer)");
}

CharClassPoly parse_json_char_class(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coords"))
        throw std::invalid_argument("class file must contain {\"degree\", \"coords\"}");
    CharClassPoly out(j.at("degree").get<int>());
    for (const auto& [key, value] : j.at("coords").items())
        out.add_coord(Partition::parse(key), parse_json_rat(value));
    return out;
}

Json op_index_bound(long d, long N) { return Json{{"value", json_int(index_bound(d, N))}}; }

Json op_chi(long d, long n) { return Json{{"value", json_int(chi_hypersurface(d, n))}}; }

Json op_gcd_lemma(long d, long N) {
    Int bound = index_bound(d, N);
    Int g(0);
    for (long n = 1; n <= N; ++n) g = gcd(g, chi_hypersurface(d, n));
    return Json{{"holds", g == bound},
                {"index_bound", json_int(bound)},
                {"chi_gcd", json_int(g)}};
}

Json op_threshold(long d) { return Json{{"value", unit_index_threshold(d)}}; }

Json op_fermat(long d, long N, long e) {
    FermatCertificate cert = fermat_certificate(d, N, e);
    Json trace = Json::array();
    for (const auto& state : cert.trace) trace.push_back(state);
    return Json{{"d", cert.d},
                {"N", cert.N},
                {"e", cert.e},
                {"index_bound", json_int(index_bound(d, N))},
                {"steps", cert.trace.size() - 1},
                {"final_m", cert.final_m},
                {"trace", std::move(trace)}};
}

Json op_fund_poly(const std::string& variety_spec) {
    VarietyModel X = build_variety(parse_variety_spec(variety_spec));
    Json out = json_fundamental(fundamental_polynomial(X));
    out["variety"] = X.to_string();
    return out;
}

namespace {

Json lattice_with_partitions(int d, const IntegerLattice& lattice) {
    Json partitions = Json::array();
    for (const auto& I : partitions_of(d)) partitions.push_back(I.to_string());
    Json out = json_lattice(lattice);
    out["degree"] = d;
    out["partitions"] = std::move(partitions);
    return out;
}

}  // namespace

Json op_lattice(int d) { return lattice_with_partitions(d, lattice_L(d)); }

Json op_dual_lattice(int d) { return lattice_with_partitions(d, lattice_L(d).dual()); }

Json op_hattori_stong(int d, int max_b) {
    HattoriStongReport report = hattori_stong_verify(d, max_b);
    return Json{{"degree", report.degree},
                {"conclusive", report.conclusive},
                {"holds", report.holds},
                {"B_stable", report.b_stable},
                {"I_prime", json_lattice(report.iprime)},
                {"I", json_lattice(report.dual)}};
}

Json op_check_class(const CharClassPoly& cls) {
    IntegralityVerdict verdict = check_integral_class(cls);
    Json out{{"class", json_char_class(cls)}, {"integral", verdict.integral}};
    if (verdict.integral) {
        Json coords = Json::array();
        for (const auto& x : *verdict.coordinates) coords.push_back(json_int(x));
        out["dual_basis_coordinates"] = std::move(coords);
        out["witness"] = nullptr;
    } else {
        out["witness"] = Json{{"variety", verdict.witness_variety},
                              {"value", json_rat(verdict.witness_value)}};
    }
    return out;
}

Json op_pair(const CharClassPoly& cls, const std::string& variety_spec) {
    VarietyModel X = build_variety(parse_variety_spec(variety_spec));
    if (X.dimension() != cls.degree())
        throw std::domain_error("pair: class degree " + std::to_string(cls.degree()) +
                                " != dim " + X.to_string());
    Rat value = pairing(cls, fundamental_polynomial(X));
    return Json{{"value", json_rat(value)}};
}

Json op_chi_bundle(const std::string& variety_spec, const std::string& bundle_expr) {
    VarietyModel X = build_variety(parse_variety_spec(variety_spec));
    BundleExpr expr = parse_bundle_expr(bundle_expr);
    return Json{{"value", json_int(euler_characteristic(X, expr))}};
}

Json op_signature(const std::string& variety_spec) {
    VarietyModel X = build_variety(parse_variety_spec(variety_spec));
    return Json{{"value", json_int(signature(X))}};
}

Json op_half_euler(const std::string& variety_spec) {
    VarietyModel X = build_variety(parse_variety_spec(variety_spec));
    HalfEulerReport report = half_euler_check(X);
    return Json{{"e", json_int(report.e)},
                {"half", json_int(report.half)},
                {"rho_value", json_int(report.rho_value)},
                {"equal", report.equal}};
}

CharClassPoly resolve_class_argument(const std::string& name_or_file,
                                     const std::vector<std::string>& params) {
    static const char* names[] = {"half_euler", "half_c1_power", "half_segre",
                                  "steenrod",   "newton_over_q", "signature"};
    for (const char* name : names)
        if (name_or_file == name) return catalogue_class(name_or_file, params);
    if (!params.empty())
        throw std::invalid_argument("unknown catalogue class '" + name_or_file + "'");
    std::ifstream in(name_or_file);
    if (!in)
        throw std::invalid_argument("'" + name_or_file +
                                    "' is neither a catalogue class nor a readable file");
    Json j;
    in >> j;
    return parse_json_char_class(j);
}

namespace {

void flatten(const std::string& prefix, const Json& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(prefix.empty() ? key : prefix + "." + key, value, rows);
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

}  // namespace

std::string render_table(const Json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", j, rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows)
        os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    return os.str();
}

}  // namespace cobord
