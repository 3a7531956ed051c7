#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlax/commands.hpp"
#include "qlax/error.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw qlax::ValidationError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<qlax::Rational> parse_q_list(const std::string& list) {
    std::vector<qlax::Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(qlax::Rational::parse(trim(item)));
    }
    return out;
}

// Operators such as "-d^2 + u" start with '-'. There are no short options
// besides -h, so any other single-dash token is shielded from the option
// parser with a leading space, which the expression lexer ignores.
std::vector<std::string> shielded_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") {
            a.insert(a.begin(), ' ');
        }
        args.push_back(std::move(a));
    }
    return args;  // CLI11 consumes the vector form back to front
}

int emit(const qlax::CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlax: q-deformed Lax equations in exact arithmetic"};
    app.fallthrough();
    app.require_subcommand(1);

    int qorder = 2;
    int depth = 0;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string probe_set;
    auto* qorder_opt = app.add_option("--qorder", qorder, "q-truncation order N (overrides problem files)");
    auto* depth_opt = app.add_option("--depth", depth, "truncate symbol inputs below order -M")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "output format (env QLAX_FORMAT overrides)")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "default seed for random matrix values");
    auto* probe_opt = app.add_option("--probe-set", probe_set, "JSON file of extra probe operators");

    auto* commutator = app.add_subcommand("commutator", "commutator [A, B] of two differential operators");
    std::string expr_a;
    std::string expr_b;
    commutator->add_option("A", expr_a)->required();
    commutator->add_option("B", expr_b)->required();

    auto* kdv = app.add_subcommand("kdv-verify", "check [P, L] = 6 u u_1 - u_3 for the KdV Lax pair");
    std::string perturb = "1";
    auto* perturb_opt = kdv->add_option("--perturb", perturb, "add EPS*u to P (negative control)")->expected(0, 1);

    auto* solve = app.add_subcommand("lax-solve", "solve the deformed Lax equation from a problem file");
    std::string solve_file;
    solve->add_option("problem", solve_file)->required();

    auto* symmetry = app.add_subcommand("symmetry", "transport S0 along ad(P_q) and check the symmetry equations");
    std::string sym_file;
    symmetry->add_option("problem", sym_file)->required();

    auto* convergence = app.add_subcommand("convergence", "truncation-error study (matrix backend)");
    std::string conv_file;
    std::string q_list = "1/8,1/16";
    int ref_n = 0;
    convergence->add_option("problem", conv_file)->required();
    convergence->add_option("--q", q_list, "comma-separated q values");
    auto* ref_opt = convergence->add_option("--refN", ref_n, "reference truncation order (default N + 6)");

    try {
        app.name(argc > 0 ? argv[0] : "qlax");
        auto args = shielded_args(argc, argv);
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qlax::kExitInputError;
    }

    qlax::CommonOptions opts;
    try {
        opts.format = qlax::resolve_format(format, std::getenv("QLAX_FORMAT"));
        opts.seed = seed;
        if (*qorder_opt) {
            opts.qorder = qorder;
        }
        if (*depth_opt) {
            opts.depth = depth;
        }
        if (*probe_opt) {
            opts.probe_set = read_file(probe_set);
        }

        if (*commutator) {
            return emit(qlax::cmd_commutator(expr_a, expr_b, opts));
        }
        if (*kdv) {
            std::optional<qlax::Rational> eps;
            if (*perturb_opt) {
                eps = qlax::Rational::parse(perturb.empty() ? std::string("1") : trim(perturb));
            }
            return emit(qlax::cmd_kdv_verify(eps, opts));
        }
        if (*solve) {
            return emit(qlax::cmd_lax_solve(read_file(solve_file), opts));
        }
        if (*symmetry) {
            return emit(qlax::cmd_symmetry(read_file(sym_file), opts));
        }
        if (*convergence) {
            std::optional<int> ref;
            if (*ref_opt) {
                ref = ref_n;
            }
            return emit(qlax::cmd_convergence(read_file(conv_file), parse_q_list(q_list), ref, opts));
        }
    } catch (const qlax::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qlax::kExitInputError;
    }
    return qlax::kExitInputError;
}
