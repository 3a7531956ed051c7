#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlax/error.hpp"
#include "qlax/qseries.hpp"
#include "qlax/tpoly.hpp"

namespace qlax {

/// Elements of A[[q]] whose coefficients are t-polynomials: the working
/// algebra for deformed time paths.
template <Algebra A>
using PathSeries = QSeries<TPoly<A>>;

// Time calculus on path coefficients. BiOp paths provide their own overloads.
template <Algebra A>
TPoly<A> time_derivative(const TPoly<A>& p) {
    return tpoly_dt(p);
}

template <Algebra A>
TPoly<A> time_integral(const TPoly<A>& p) {
    return tpoly_integrate(p);
}

template <class Path>
concept TimePath = Algebra<Path> && requires(const Path& p) {
    { time_derivative(p) } -> std::same_as<Path>;
    { time_integral(p) } -> std::same_as<Path>;
};

template <TimePath Path>
QSeries<Path> series_dt(const QSeries<Path>& s) {
    return map_coeffs(s, [](const Path& p) { return time_derivative(p); });
}

template <TimePath Path>
QSeries<Path> series_integrate(const QSeries<Path>& s) {
    return map_coeffs(s, [](const Path& p) { return time_integral(p); });
}

/// Evaluates every q-coefficient at t = t0.
template <Algebra A>
QSeries<A> series_at_time(const PathSeries<A>& s, const Rational& t0) {
    return map_coeffs(s, [&](const TPoly<A>& p) { return tpoly_eval(p, t0); });
}

/// Embeds a constant as a t- and q-constant path series.
template <Algebra A>
PathSeries<A> constant_path(const A& a, int trunc) {
    return PathSeries<A>::constant(TPoly<A>::constant(a), trunc);
}

template <Algebra A>
struct LaxProblem {
    TPoly<A> P;  // undeformed path P(t)
    A L0;        // initial value L(0)
    int N = 1;   // q-truncation order
};

/// Builds a problem and enforces N >= 1 and deg_t P <= N - 1 (so the time
/// scaling drops nothing). Throws ValidationError.
template <Algebra A>
LaxProblem<A> make_problem(TPoly<A> P, A L0, int N) {
    if (N < 1) {
        throw ValidationError("truncation order N must be >= 1 (got " + std::to_string(N) + ")");
    }
    if (P.degree() > N - 1) {
        throw ValidationError("t-degree of P (" + std::to_string(P.degree()) + ") exceeds N - 1 = " +
                              std::to_string(N - 1));
    }
    return LaxProblem<A>{std::move(P), std::move(L0), N};
}

template <Algebra A>
struct Deformed {
    PathSeries<A> Pq;
    bool lossy = false;  // some t^k term of P landed above q^N and was dropped
};

/// P_q(t) = q P(qt): the t^k coefficient of P moves to q^(k+1) t^k.
template <Algebra A>
Deformed<A> deform(const TPoly<A>& P, int N) {
    Deformed<A> out{PathSeries<A>::zero(N), false};
    const auto& c = P.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) {
            continue;
        }
        const int q_order = static_cast<int>(k) + 1;
        if (q_order > N) {
            out.lossy = true;
            continue;
        }
        out.Pq[q_order] = TPoly<A>::monomial(c[k], static_cast<int>(k));
    }
    return out;
}

/// Iterated integrals a_0 = 1, a_i(t) = int_0^t Pq(s) a_{i-1}(s) ds, i = 0..N.
/// a_i is the integral of Pq(s_1)...Pq(s_i) over the ordered simplex
/// t >= s_1 >= ... >= s_i >= 0, and has q-valuation >= i.
template <TimePath Path>
std::vector<QSeries<Path>> texp_terms(const QSeries<Path>& Pq) {
    if (!Pq[0].is_zero()) {
        throw ValuationError("time-ordered exponential needs a path of positive q-valuation");
    }
    const int n = Pq.trunc();
    std::vector<QSeries<Path>> terms;
    terms.push_back(QSeries<Path>::one(n));
    for (int i = 1; i <= n; ++i) {
        terms.push_back(series_integrate(Pq * terms.back()));
    }
    return terms;
}

/// Time-ordered exponential W with W(0) = 1 and dW/dt = Pq W (mod q^(N+1)).
template <TimePath Path>
QSeries<Path> texp(const QSeries<Path>& Pq) {
    auto terms = texp_terms(Pq);
    QSeries<Path> w = QSeries<Path>::zero(Pq.trunc());
    for (const auto& a : terms) {
        w += a;
    }
    return w;
}

template <Algebra A>
struct LaxSolution {
    PathSeries<A> Pq;
    PathSeries<A> W;
    PathSeries<A> Lq;
    bool lossy = false;
};

/// Lq = W L0 W^-1 with W = texp(deform(P, N)).
template <Algebra A>
LaxSolution<A> lax_solve(const LaxProblem<A>& prob) {
    auto [Pq, lossy] = deform(prob.P, prob.N);
    PathSeries<A> W = texp(Pq);
    PathSeries<A> Lq = W * constant_path(prob.L0, prob.N) * q_invert_unipotent(W);
    return {std::move(Pq), std::move(W), std::move(Lq), lossy};
}

/// dLq/dt - [Pq, Lq]; identically zero for solutions of the deformed equation.
template <Algebra A>
PathSeries<A> lax_residual(const PathSeries<A>& Lq, const PathSeries<A>& Pq) {
    Lq.check(Pq);
    return series_dt(Lq) - (Pq * Lq - Lq * Pq);
}

} // namespace qlax
