#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobord/errors.hpp"
#include "cobord/json_io.hpp"

namespace {

struct Output {
    std::string format = "json";
    std::string out_path;

    void emit(const cobord::Json& j) const {
        std::string text = format == "table" ? cobord::render_table(j) : j.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
            f << text;
        }
    }
};

int hattori_stong_ceiling() {
    if (const char* env = std::getenv("COBORD_MAX_B")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid COBORD_MAX_B\n";
    }
    return 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact index bounds for hypersurfaces and the degree-d algebraic-cobordism "
                 "lattice with its integral characteristic-class dual"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", output.out_path, "Write output to a file instead of stdout");

    std::function<cobord::Json()> run;

    long d = 0, N = 0, n = 0, e = 0;
    int degree = 0;
    int max_b = hattori_stong_ceiling();
    std::string variety, bundle, class_name;
    std::vector<std::string> class_params;

    auto* cmd_index = app.add_subcommand("index-bound", "I_{d,N} for degree-d hypersurfaces in P^N");
    cmd_index->add_option("d", d, "hypersurface degree")->required();
    cmd_index->add_option("N", N, "ambient projective dimension")->required();
    cmd_index->callback([&] { run = [&] { return cobord::op_index_bound(d, N); }; });

    auto* cmd_chi = app.add_subcommand("chi", "chi_{d,n} = 1 - (-1)^n C(d-1,n)");
    cmd_chi->add_option("d", d, "hypersurface degree")->required();
    cmd_chi->add_option("n", n, "linear-section dimension")->required();
    cmd_chi->callback([&] { run = [&] { return cobord::op_chi(d, n); }; });

    auto* cmd_gcd = app.add_subcommand("gcd-lemma", "check I_{d,N} = gcd of chi_{d,n}, n <= N");
    cmd_gcd->add_option("d", d)->required();
    cmd_gcd->add_option("N", N)->required();
    cmd_gcd->callback([&] { run = [&] { return cobord::op_gcd_lemma(d, N); }; });

    auto* cmd_thr = app.add_subcommand("threshold", "smallest N with I_{d,N} = 1");
    cmd_thr->add_option("d", d)->required();
    cmd_thr->callback([&] { run = [&] { return cobord::op_threshold(d); }; });

    auto* cmd_fermat = app.add_subcommand("fermat", "twisted-Fermat valuation certificate");
    cmd_fermat->add_option("d", d)->required();
    cmd_fermat->add_option("N", N)->required();
    cmd_fermat->add_option("e", e, "candidate point degree")->required();
    cmd_fermat->callback([&] { run = [&] { return cobord::op_fermat(d, N, e); }; });

    auto* cmd_fund = app.add_subcommand("fund-poly", "fundamental polynomial of a variety");
    cmd_fund->add_option("variety", variety, "e.g. P2xH2,3")->required();
    cmd_fund->callback([&] { run = [&] { return cobord::op_fund_poly(variety); }; });

    auto* cmd_lat = app.add_subcommand("lattice", "degree-d cobordism lattice L_d");
    cmd_lat->add_option("d", degree)->required();
    cmd_lat->callback([&] { run = [&] { return cobord::op_lattice(degree); }; });

    auto* cmd_dual = app.add_subcommand("dual-lattice", "dual lattice I_d of L_d");
    cmd_dual->add_option("d", degree)->required();
    cmd_dual->callback([&] { run = [&] { return cobord::op_dual_lattice(degree); }; });

    auto* cmd_hs = app.add_subcommand("hattori-stong", "verify stabilized I'_d = I_d");
    cmd_hs->add_option("d", degree)->required();
    cmd_hs->add_option("--max-B", max_b, "exponent-bound ceiling (default COBORD_MAX_B or 6)");
    cmd_hs->callback([&] { run = [&] { return cobord::op_hattori_stong(degree, max_b); }; });

    auto* cmd_check = app.add_subcommand("check-class",
                                         "integrality of a class (catalogue name or JSON file)");
    cmd_check->add_option("class", class_name, "catalogue name or file path")->required();
    cmd_check->add_option("params", class_params, "catalogue parameters");
    cmd_check->callback([&] {
        run = [&] {
            return cobord::op_check_class(cobord::resolve_class_argument(class_name, class_params));
        };
    });

    auto* cmd_pair = app.add_subcommand("pair", "pairing of a class with b(X)");
    cmd_pair->add_option("class", class_name, "catalogue name or file path")->required();
    cmd_pair->add_option("variety", variety)->required();
    cmd_pair->add_option("params", class_params, "catalogue parameters");
    cmd_pair->callback([&] {
        run = [&] {
            return cobord::op_pair(cobord::resolve_class_argument(class_name, class_params),
                                   variety);
        };
    });

    auto* cmd_chib = app.add_subcommand("chi-bundle", "Euler characteristic of a bundle expression");
    cmd_chib->add_option("variety", variety)->required();
    cmd_chib->add_option("bundle", bundle, "e.g. (~T)^2 or O(2)@0")->required();
    cmd_chib->callback([&] { run = [&] { return cobord::op_chi_bundle(variety, bundle); }; });

    auto* cmd_sig = app.add_subcommand("signature", "signature via L-genus and Hodge sum");
    cmd_sig->add_option("variety", variety)->required();
    cmd_sig->callback([&] { run = [&] { return cobord::op_signature(variety); }; });

    auto* cmd_he = app.add_subcommand("half-euler", "half Euler characteristic identity");
    cmd_he->add_option("variety", variety)->required();
    cmd_he->callback([&] { run = [&] { return cobord::op_half_euler(variety); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        app.exit(help);
        return 0;
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }

    try {
        output.emit(run());
    } catch (const cobord::internal_error& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
