// Command line front end: generation of weighted isobaric polynomials,
// operator application, string and lattice decompositions, kernel grid scans
// and the verification suites. Polynomials travel as JSON (see json_io.hpp);
// exit codes are 0 on success, 1 on a failed verification or a nonzero
// --check-zero result, 2 on usage errors or malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isobaric/isobaric.hpp"
#include "isobaric/verify.hpp"

using namespace isobaric;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& tok : split_list(s)) out.push_back(Rational::from_string(tok));
    return out;
}

ExponentVector parse_monomial(const std::string& s) {
    std::vector<int> e;
    for (const auto& tok : split_list(s)) e.push_back(std::stoi(tok));
    return ExponentVector(std::move(e));
}

struct GenOptions {
    std::string seq;
    int n = 0;
    int k = 0;
    int r = -1;
    std::string omega;
};

Polynomial generate(const GenOptions& o) {
    if (o.seq == "F") {
        if (o.r >= 0 || !o.omega.empty())
            throw std::invalid_argument("--r and --omega only apply to hook/custom sequences");
        return fibonacci_poly(o.n, o.k);
    }
    if (o.seq == "G") {
        if (o.r >= 0 || !o.omega.empty())
            throw std::invalid_argument("--r and --omega only apply to hook/custom sequences");
        return lucas_poly(o.n, o.k);
    }
    if (o.seq == "hook") {
        if (o.r < 0) throw std::invalid_argument("hook sequence needs --r");
        if (!o.omega.empty()) throw std::invalid_argument("--omega does not apply to hook");
        return hook_reflect(o.n, o.r, o.k);
    }
    if (o.seq == "custom") {
        if (o.omega.empty()) throw std::invalid_argument("custom sequence needs --omega");
        if (o.r >= 0) throw std::invalid_argument("--r does not apply to custom");
        return wip(o.n, o.k, WeightVector(parse_rationals(o.omega)));
    }
    throw std::invalid_argument("unknown sequence: " + o.seq);
}

Polynomial read_polynomial(const std::string& in_file, const GenOptions& gen_opts) {
    if (!gen_opts.seq.empty()) return generate(gen_opts);
    std::string text;
    if (!in_file.empty()) {
        std::ifstream f(in_file);
        if (!f) throw std::invalid_argument("cannot open " + in_file);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    } else {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    return polynomial_from_json(json::parse(text));
}

void print_polynomial(const Polynomial& p, const std::string& format) {
    if (format == "latex")
        std::cout << to_latex(p) << "\n";
    else
        std::cout << to_json(p).dump(2) << "\n";
}

void add_gen_flags(CLI::App* cmd, GenOptions& o, bool required) {
    auto* seq = cmd->add_option("--seq", o.seq, "sequence: F, G, hook or custom")
                    ->check(CLI::IsMember({"F", "G", "hook", "custom"}));
    auto* n = cmd->add_option("--n", o.n, "isobaric degree");
    auto* k = cmd->add_option("--k", o.k, "number of variables");
    if (required) {
        seq->required();
        n->required();
        k->required();
    } else {
        n->needs(seq);
        k->needs(seq);
        seq->needs(n);
        seq->needs(k);
    }
    cmd->add_option("--r", o.r, "hook arm length (hook sequence only)");
    cmd->add_option("--omega", o.omega, "comma separated weights, e.g. 1,2,-1/2 (custom only)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for isobaric polynomials, their operators and strings"};
    app.require_subcommand(1);

    // gen
    GenOptions gen_opts;
    std::string gen_format = "json";
    auto* gen = app.add_subcommand("gen", "generate a weighted isobaric polynomial");
    add_gen_flags(gen, gen_opts, true);
    gen->add_option("--format", gen_format, "json or latex")
        ->check(CLI::IsMember({"json", "latex"}));

    // apply
    GenOptions apply_gen;
    std::string apply_m, apply_a, apply_in, apply_format = "json";
    bool check_zero = false;
    auto* apply = app.add_subcommand("apply", "apply the operator to a polynomial");
    apply->add_option("--m", apply_m, "coefficient of the first-order term")->required();
    apply->add_option("--a", apply_a, "comma separated per-variable coefficients (default 1s)");
    apply->add_option("--in", apply_in, "input polynomial JSON file (default: stdin)");
    add_gen_flags(apply, apply_gen, false);
    apply->add_flag("--check-zero", check_zero, "exit 0 iff the image is the zero polynomial");
    apply->add_option("--format", apply_format, "json or latex")
        ->check(CLI::IsMember({"json", "latex"}));

    // strings
    GenOptions strings_gen;
    std::string strings_in;
    auto* strings_cmd = app.add_subcommand("strings", "decompose a polynomial into its strings");
    strings_cmd->add_option("--in", strings_in, "input polynomial JSON file (default: stdin)");
    add_gen_flags(strings_cmd, strings_gen, false);

    // lattice
    std::string lattice_monomial, lattice_format = "json";
    bool lattice_intersections = false;
    auto* lattice_cmd = app.add_subcommand("lattice", "differential lattice of a monomial");
    lattice_cmd->add_option("--monomial", lattice_monomial, "exponent vector, e.g. 0,2,1")
        ->required();
    lattice_cmd->add_flag("--intersections", lattice_intersections,
                          "emit the intersection nodes of the monomial's string instead");
    lattice_cmd->add_option("--format", lattice_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // scan
    std::string scan_a, scan_m;
    int scan_k = 4, scan_N = 8;
    auto* scan_cmd = app.add_subcommand("scan", "grid scan for operators with nonzero kernel");
    scan_cmd->add_option("--a-grid", scan_a, "comma separated values tried for every a_j")
        ->required();
    scan_cmd->add_option("--m-grid", scan_m, "comma separated values tried for m")->required();
    scan_cmd->add_option("--k", scan_k, "number of variables (default 4)");
    scan_cmd->add_option("--N", scan_N, "maximum degree of the truncated system (default 8)");

    // verify
    std::string suite = "all";
    int n_max = 12;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--suite", suite, "thm31|thm32|thm22|prop41|thm43|thm45|lattice|all")
        ->check(CLI::IsMember(
            {"thm31", "thm32", "thm22", "prop41", "thm43", "thm45", "lattice", "all"}));
    verify_cmd->add_option("--n-max", n_max, "degree bound for the degree-parameterized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(gen)) {
            print_polynomial(generate(gen_opts), gen_format);
            return 0;
        }

        if (app.got_subcommand(apply)) {
            Polynomial p = read_polynomial(apply_in, apply_gen);
            OperatorSpec spec;
            spec.m = Rational::from_string(apply_m);
            if (apply_a.empty())
                spec.a.assign(p.var_count(), Rational(1));
            else
                spec.a = parse_rationals(apply_a);
            Polynomial image = apply_operator(spec, p);
            print_polynomial(image, apply_format);
            return check_zero ? (image.is_zero() ? 0 : 1) : 0;
        }

        if (app.got_subcommand(strings_cmd)) {
            Polynomial p = read_polynomial(strings_in, strings_gen);
            json out = json::array();
            for (const auto& ws : decompose(p)) out.push_back(to_json(ws));
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(lattice_cmd)) {
            ExponentVector monomial = parse_monomial(lattice_monomial);
            if (lattice_intersections) {
                auto nodes = intersection_nodes(expand_string(generator_of(monomial)));
                json out = json::array();
                for (const auto& nd : nodes) out.push_back(to_json(nd));
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            DiffLattice lat = build_lattice(monomial);
            if (lattice_format == "dot")
                std::cout << to_dot(lat);
            else
                std::cout << to_json(lat).dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(scan_cmd)) {
            std::vector<std::vector<Rational>> a_grids(scan_k, parse_rationals(scan_a));
            auto hits = scan(a_grids, parse_rationals(scan_m), scan_k, scan_N);
            json out = json::array();
            for (const auto& rep : hits) out.push_back(to_json(rep));
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            int failed = 0;
            for (const auto& r : verify::run_suite(suite, n_max)) {
                std::printf("[%s] %2d. %s (%.1f ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.ms);
                if (!r.pass) {
                    ++failed;
                    std::printf("       %s\n", r.detail.c_str());
                }
            }
            return failed == 0 ? 0 : 1;
        }
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
