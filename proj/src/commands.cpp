#include "qlax/commands.hpp"

#include <sstream>
#include <variant>

#include "qlax/convergence.hpp"
#include "qlax/error.hpp"
#include "qlax/expr.hpp"
#include "qlax/probes.hpp"
#include "qlax/problem.hpp"
#include "qlax/render.hpp"
#include "qlax/symops.hpp"

namespace qlax {

namespace {

template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {kExitInputError, "", std::string("error: ") + e.what() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {kExitInputError, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::vector<RatMatrix> extra_probes(const MatrixProblemInput& in, const CommonOptions& opts) {
    std::vector<RatMatrix> out;
    if (opts.probe_set) {
        const auto doc = nlohmann::json::parse(*opts.probe_set);
        for (const auto& p : doc.at("probes")) {
            out.push_back(parse_matrix_value(p, opts.seed).expanded(in.n));
        }
    }
    return out;
}

std::vector<PsdoSymbol> extra_probes(const PsdoProblemInput&, const CommonOptions& opts) {
    std::vector<PsdoSymbol> out;
    if (opts.probe_set) {
        const auto doc = nlohmann::json::parse(*opts.probe_set);
        for (const auto& p : doc.at("probes")) {
            out.push_back(parse_operator(p.get<std::string>()));
        }
    }
    return out;
}

MatrixRenderer renderer_for(const MatrixProblemInput& in) { return MatrixRenderer{in.n}; }
PsdoRenderer renderer_for(const PsdoProblemInput&) { return PsdoRenderer{}; }
const char* backend_name(const MatrixProblemInput&) { return "matrix"; }
const char* backend_name(const PsdoProblemInput&) { return "psdo"; }

LoadOptions load_options(const CommonOptions& opts) { return LoadOptions{opts.qorder, opts.depth, opts.seed}; }

} // namespace

Format resolve_format(std::string_view flag, const char* env) {
    std::string_view choice = (env != nullptr && *env != '\0') ? std::string_view(env) : flag;
    if (choice == "text") {
        return Format::Text;
    }
    if (choice == "json") {
        return Format::Json;
    }
    throw ValidationError("unknown format '" + std::string(choice) + "' (expected text or json)");
}

CommandResult cmd_commutator(const std::string& a, const std::string& b, const CommonOptions& opts) {
    return guarded([&] {
        PsdoSymbol A = parse_operator(a);
        PsdoSymbol B = parse_operator(b);
        if (opts.depth) {
            A = A.truncated(-*opts.depth);
            B = B.truncated(-*opts.depth);
        }
        const PsdoSymbol c = psdo_commutator(A, B);
        if (opts.format == Format::Json) {
            return CommandResult{kExitPass,
                                 dump(Json{{"schema", "qlax.commutator/1"},
                                           {"a", A.to_string()},
                                           {"b", B.to_string()},
                                           {"commutator", symbol_json(c)}}),
                                 ""};
        }
        return CommandResult{kExitPass, "[" + A.to_string() + ", " + B.to_string() + "] = " + c.to_string() + "\n", ""};
    });
}

CommandResult cmd_kdv_verify(const std::optional<Rational>& perturb, const CommonOptions& opts) {
    return guarded([&] {
        auto [L, P] = kdv_pair();
        if (perturb) {
            P = P + PsdoSymbol::multiplication(*perturb * DiffPoly::u(0));
        }
        const PsdoSymbol c = psdo_commutator(P, L);
        const PsdoSymbol expected = kdv_flow_rhs();
        const PsdoSymbol diff = c - expected;
        const bool pass = c == expected;
        const int code = pass ? kExitPass : kExitFail;
        if (opts.format == Format::Json) {
            return CommandResult{code,
                                 dump(Json{{"schema", "qlax.kdv_verify/1"},
                                           {"pass", pass},
                                           {"L", L.to_string()},
                                           {"P", P.to_string()},
                                           {"commutator", c.to_string()},
                                           {"expected", expected.to_string()},
                                           {"difference", diff.to_string()}}),
                                 ""};
        }
        std::ostringstream os;
        os << "KdV Lax pair\n"
           << "  L      = " << L.to_string() << "\n"
           << "  P      = " << P.to_string() << "\n"
           << "  [P, L] = " << c.to_string() << "\n"
           << "  u_t    = " << expected.to_string() << "\n";
        if (!pass) {
            os << "  difference = " << diff.to_string() << "\n";
        }
        os << verdict(pass) << "\n";
        return CommandResult{code, os.str(), ""};
    });
}

CommandResult cmd_lax_solve(const std::string& problem_text, const CommonOptions& opts) {
    return guarded([&] {
        const ProblemInput input = load_problem_text(problem_text, load_options(opts));
        return std::visit(
            [&](const auto& in) {
                const auto& prob = in.problem;
                const auto r = renderer_for(in);
                const auto sol = lax_solve(prob);
                const auto residual = lax_residual(sol.Lq, sol.Pq);
                const bool pass = residual.is_zero();
                const int code = pass ? kExitPass : kExitFail;
                if (opts.format == Format::Json) {
                    return CommandResult{code,
                                         dump(Json{{"schema", "qlax.lax_solve/1"},
                                                   {"backend", backend_name(in)},
                                                   {"N", prob.N},
                                                   {"pass", pass},
                                                   {"Pq", path_series_json(r, sol.Pq)},
                                                   {"W", path_series_json(r, sol.W)},
                                                   {"Lq", path_series_json(r, sol.Lq)},
                                                   {"residual", residual_json(r, residual, sol.Lq, sol.lossy)}}),
                                         ""};
                }
                std::ostringstream os;
                os << "deformed Lax equation (backend " << backend_name(in) << ", N = " << prob.N << ")\n"
                   << "P_q:\n" << path_series_text(r, sol.Pq) << "W = texp(P_q):\n" << path_series_text(r, sol.W)
                   << "L_q = W L0 W^-1:\n" << path_series_text(r, sol.Lq)
                   << "residual dL_q/dt - [P_q, L_q]: " << (pass ? "zero" : "NONZERO") << "\n";
                if (!pass) {
                    os << path_series_text(r, residual);
                }
                os << verdict(pass) << "\n";
                return CommandResult{code, os.str(), ""};
            },
            input);
    });
}

CommandResult cmd_symmetry(const std::string& problem_text, const CommonOptions& opts) {
    return guarded([&] {
        const ProblemInput input = load_problem_text(problem_text, load_options(opts));
        return std::visit(
            [&](const auto& in) {
                if (!in.S0) {
                    throw ValidationError("problem file: missing field 'S0' (required by the symmetry command)");
                }
                const auto& prob = in.problem;
                const auto r = renderer_for(in);
                auto probes = default_probes(prob);
                for (auto& p : extra_probes(in, opts)) {
                    probes.push_back(std::move(p));
                }
                const auto sol = lax_solve(prob);
                const auto check = transported_solution_details(*in.S0, prob);
                const bool s3 = vanishes_on(symmetry3_residual(check.Sq, sol.Pq), probes);
                const bool s2 = symmetry2_residual(check.Sq, sol.Pq, sol.Lq).is_zero();
                const bool tc = check.ok();
                const bool pass = s3 && s2 && tc;
                const int code = pass ? kExitPass : kExitFail;
                if (opts.format == Format::Json) {
                    return CommandResult{code,
                                         dump(Json{{"schema", "qlax.symmetry/1"},
                                                   {"backend", backend_name(in)},
                                                   {"N", prob.N},
                                                   {"probes", probes.size()},
                                                   {"symmetry3_residual_zero", s3},
                                                   {"symmetry2_residual_zero", s2},
                                                   {"transported_solution", tc},
                                                   {"pass", pass},
                                                   {"Sq", op_series_json(r, check.Sq)},
                                                   {"Mq", path_series_json(r, check.Mq)}}),
                                         ""};
                }
                std::ostringstream os;
                os << "symmetry transport (backend " << backend_name(in) << ", N = " << prob.N << ", "
                   << probes.size() << " probes)\n"
                   << "  dS_q/dt = [ad P_q, S_q]            " << verdict(s3) << "\n"
                   << "  (dS_q/dt - [ad P_q, S_q]).L_q = 0  " << verdict(s2) << "\n"
                   << "  S_q(t).L_q(t) solves the equation  " << verdict(tc) << "\n"
                   << "S_q(t).L_q(t):\n" << path_series_text(r, check.Mq) << verdict(pass) << "\n";
                return CommandResult{code, os.str(), ""};
            },
            input);
    });
}

CommandResult cmd_convergence(const std::string& problem_text, const std::vector<Rational>& qs,
                              std::optional<int> refN, const CommonOptions& opts) {
    return guarded([&] {
        const ProblemInput input = load_problem_text(problem_text, load_options(opts));
        const auto* in = std::get_if<MatrixProblemInput>(&input);
        if (in == nullptr) {
            throw ValidationError("convergence needs the matrix backend (problem file declares \"psdo\")");
        }
        const std::vector<Rational> points = qs.empty() ? std::vector<Rational>{Rational(1, 8), Rational(1, 16)} : qs;
        const ConvergenceReport rep = convergence_study(in->problem, points, refN.value_or(in->problem.N + 6));
        if (opts.format == Format::Json) {
            Json pts = Json::array();
            for (const auto& p : rep.points) {
                pts.push_back(Json{{"q", p.q.to_string()},
                                   {"error", p.error.to_double()},
                                   {"error_exact", p.error.to_string()},
                                   {"ratio_to_prev", p.ratio_to_prev ? Json(*p.ratio_to_prev) : Json(nullptr)}});
            }
            return CommandResult{
                kExitPass, dump(Json{{"schema", "qlax.convergence/1"}, {"N", rep.N}, {"refN", rep.refN}, {"points", pts}}),
                ""};
        }
        std::ostringstream os;
        os << "truncation error at t = 1 (N = " << rep.N << ", reference N = " << rep.refN
           << ", expected ratio 2^" << rep.N + 1 << " = " << (1 << (rep.N + 1)) << " per halving)\n";
        for (const auto& p : rep.points) {
            os << "  q = " << p.q << "  error = " << p.error.to_double();
            if (p.ratio_to_prev) {
                os << "  ratio = " << *p.ratio_to_prev;
            }
            os << "\n";
        }
        return CommandResult{kExitPass, os.str(), ""};
    });
}

} // namespace qlax
