#include "qlax/convergence.hpp"

#include "qlax/error.hpp"

namespace qlax {

RatMatrix evaluate_solution(const PathSeries<RatMatrix>& lq, const Rational& t, const Rational& q) {
    return q_eval(series_at_time(lq, t), q);
}

ConvergenceReport convergence_study(const LaxProblem<RatMatrix>& prob, const std::vector<Rational>& qs, int refN) {
    if (refN < prob.N + 2) {
        throw ValidationError("refN must be at least N + 2 (N = " + std::to_string(prob.N) + ", refN = " +
                              std::to_string(refN) + ")");
    }
    const auto approx = lax_solve(prob).Lq;
    const auto reference = lax_solve(make_problem(prob.P, prob.L0, refN)).Lq;

    ConvergenceReport report{prob.N, refN, {}};
    const Rational t(1);
    for (const auto& q : qs) {
        ConvergencePoint pt{q, (evaluate_solution(approx, t, q) - evaluate_solution(reference, t, q)).max_abs_entry(), {}};
        if (!report.points.empty() && !pt.error.is_zero()) {
            pt.ratio_to_prev = (report.points.back().error / pt.error).to_double();
        }
        report.points.push_back(std::move(pt));
    }
    return report;
}

} // namespace qlax
