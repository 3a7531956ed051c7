#pragma once

#include <utility>
#include <vector>

#include "qlax/biop.hpp"
#include "qlax/laxflow.hpp"

namespace qlax {

/// Series in q whose coefficients are t-dependent BiOps: the setting of
/// In_q(A) and of deformed symmetries S_q(t).
template <Algebra A>
using OpSeries = QSeries<BiOp<TPoly<A>>>;

template <Algebra A>
BiOp<TPoly<A>> lift_biop(const BiOp<A>& s) {
    std::vector<typename BiOp<TPoly<A>>::Term> t;
    for (const auto& [l, r] : s.terms()) {
        t.emplace_back(TPoly<A>::constant(l), TPoly<A>::constant(r));
    }
    return BiOp<TPoly<A>>(std::move(t));
}

/// S0 as a constant (in t and q) operator series.
template <Algebra A>
OpSeries<A> constant_op(const BiOp<A>& s, int trunc) {
    return OpSeries<A>::constant(lift_biop(s), trunc);
}

/// ad applied coefficientwise: q^k P_k(t) -> q^k ad(P_k(t)).
template <Algebra A>
OpSeries<A> ad_series(const PathSeries<A>& pq) {
    return map_coeffs(pq, [](const TPoly<A>& p) { return ad(p); });
}

/// Action of an operator series on a path series, truncated at the common order.
template <Algebra A>
PathSeries<A> apply_series(const OpSeries<A>& s, const PathSeries<A>& x) {
    if (s.trunc() != x.trunc()) {
        throw TruncationMismatch(s.trunc(), x.trunc());
    }
    const int n = s.trunc();
    PathSeries<A> out(n);
    for (int i = 0; i <= n; ++i) {
        if (s[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!x[j].is_zero()) {
                out[i + j] = out[i + j] + s[i].apply(x[j]);
            }
        }
    }
    return out;
}

/// Time-ordered exponential of ad(Pq) in QSeries<BiOp<TPoly<A>>>: the parallel
/// transport of the connection d + ad(Pq) from 0 to t.
template <Algebra A>
OpSeries<A> exp_ad(const PathSeries<A>& pq) {
    if (!pq[0].is_zero()) {
        throw ValuationError("exp_ad needs a path of positive q-valuation");
    }
    return texp(ad_series(pq));
}

/// S_q(t) = E(t) S0 E(t)^-1 with E = exp_ad(Pq).
template <Algebra A>
OpSeries<A> transport(const BiOp<A>& s0, const PathSeries<A>& pq) {
    OpSeries<A> e = exp_ad(pq);
    return e * constant_op(s0, pq.trunc()) * q_invert_unipotent(e);
}

/// dS_q/dt - [ad(Pq), S_q].
template <Algebra A>
OpSeries<A> symmetry3_residual(const OpSeries<A>& sq, const PathSeries<A>& pq) {
    if (sq.trunc() != pq.trunc()) {
        throw TruncationMismatch(sq.trunc(), pq.trunc());
    }
    const OpSeries<A> adp = ad_series(pq);
    return series_dt(sq) - (adp * sq - sq * adp);
}

/// (dS_q/dt - [ad(Pq), S_q]) applied to Lq.
template <Algebra A>
PathSeries<A> symmetry2_residual(const OpSeries<A>& sq, const PathSeries<A>& pq, const PathSeries<A>& lq) {
    lq.check(pq);
    return apply_series(symmetry3_residual(sq, pq), lq);
}

/// True if every coefficient of s annihilates every probe (lifted to constant paths).
template <Algebra A>
bool vanishes_on(const OpSeries<A>& s, const std::vector<A>& probes) {
    for (const auto& c : s.coeffs()) {
        if (c.is_zero()) {
            continue;
        }
        for (const auto& x : probes) {
            if (!c.apply(TPoly<A>::constant(x)).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

template <Algebra A>
bool equal_on(const OpSeries<A>& s, const OpSeries<A>& u, const std::vector<A>& probes) {
    return vanishes_on(s - u, probes);
}

/// Extensional equality of two plain BiOps on a probe set.
template <Algebra A>
bool equal_on(const BiOp<A>& s, const BiOp<A>& u, const std::vector<A>& probes) {
    for (const auto& x : probes) {
        if (!(s.apply(x) == u.apply(x))) {
            return false;
        }
    }
    return true;
}

template <Algebra A>
struct TransportCheck {
    OpSeries<A> Sq;
    PathSeries<A> Mq;               // S_q(t).L_q(t)
    bool solves_lax = false;        // lax_residual(Mq, Pq) == 0
    bool matches_conjugated = false;  // Mq == lax_solve with L0 -> S0(L0)
    bool ok() const { return solves_lax && matches_conjugated; }
};

/// Transports S0, applies S_q(t) to the solution L_q(t), and checks that the
/// result solves the deformed Lax equation with initial value S0(L0).
template <Algebra A>
TransportCheck<A> transported_solution_details(const BiOp<A>& s0, const LaxProblem<A>& prob) {
    const LaxSolution<A> sol = lax_solve(prob);
    TransportCheck<A> out{transport(s0, sol.Pq), PathSeries<A>::zero(prob.N)};
    out.Mq = apply_series(out.Sq, sol.Lq);
    out.solves_lax = lax_residual(out.Mq, sol.Pq).is_zero();
    const LaxProblem<A> moved{prob.P, s0.apply(prob.L0), prob.N};
    out.matches_conjugated = out.Mq == lax_solve(moved).Lq;
    return out;
}

template <Algebra A>
bool transported_solution_check(const BiOp<A>& s0, const LaxProblem<A>& prob) {
    return transported_solution_details(s0, prob).ok();
}

} // namespace qlax
