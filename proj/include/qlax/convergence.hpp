#pragma once

#include <optional>
#include <vector>

#include "qlax/laxflow.hpp"
#include "qlax/matrix.hpp"

namespace qlax {

struct ConvergencePoint {
    Rational q;
    Rational error;                       // max |entry| of L_N - L_ref at (t = 1, q)
    std::optional<double> ratio_to_prev;  // previous error / this error
};

struct ConvergenceReport {
    int N = 0;
    int refN = 0;
    std::vector<ConvergencePoint> points;
};

/// Compares the order-N solution with the order-refN one at t = 1 for each q
/// in qs. Both sides are exact; the error is O(q^(N+1)), so halving q should
/// divide it by about 2^(N+1). Requires refN >= N + 2.
ConvergenceReport convergence_study(const LaxProblem<RatMatrix>& prob, const std::vector<Rational>& qs, int refN);

/// Evaluates a solution series at concrete (t, q).
RatMatrix evaluate_solution(const PathSeries<RatMatrix>& lq, const Rational& t, const Rational& q);

} // namespace qlax
