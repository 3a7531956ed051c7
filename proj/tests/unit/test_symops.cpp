#include <doctest.h>

#include "qlax/probes.hpp"
#include "qlax/symops.hpp"
#include "support/generators.hpp"

using namespace qlax;
using qlax::testing::Gen;

namespace {

using TM = TPoly<RatMatrix>;
using PS = PathSeries<RatMatrix>;
using BM = BiOp<RatMatrix>;

RatMatrix m2(long a, long b, long c, long d) {
    return RatMatrix::from_rows({{Rational(a), Rational(b)}, {Rational(c), Rational(d)}});
}

const RatMatrix E12 = m2(0, 1, 0, 0);
const RatMatrix H = m2(1, 0, 0, -1);

BM random_biop(Gen& g, int n) {
    std::vector<BM::Term> t;
    const int terms = g.integer(1, 3);
    for (int i = 0; i < terms; ++i) {
        t.emplace_back(g.matrix(n, 2), g.matrix(n, 2));
    }
    return BM(std::move(t));
}

} // namespace

TEST_CASE("biop_apply and ad") {
    const RatMatrix X = m2(1, 2, 3, 4);
    const RatMatrix a = m2(0, 1, 1, 0);
    const RatMatrix b = m2(2, 0, 1, 1);
    CHECK(biop_apply(BM::one(), X) == X);
    CHECK(biop_apply(ad(a), X) == a * X - X * a);
    CHECK(biop_apply(BM::pair(a, b), RatMatrix::one()) == a * b);
    CHECK(ad(RatMatrix::zero()).is_zero());
    CHECK(biop_apply(ad(a), a).is_zero());

    const auto [L, P] = kdv_pair();
    CHECK(biop_apply(ad(P), L) == kdv_flow_rhs());
}

TEST_CASE("structural simplification") {
    const RatMatrix a = m2(0, 1, 1, 0);
    const RatMatrix b = m2(2, 0, 1, 1);
    const BM s = BM::pair(a, b) + BM::pair(a, a);
    CHECK(s.terms().size() == 1);  // identical lefts merge
    CHECK((BM::pair(a, b) - BM::pair(a, b)).is_zero());
    CHECK(BM::pair(RatMatrix::zero(), b).is_zero());
}

TEST_CASE("property: representation, Lie homomorphism, derivation") {
    Gen g(51);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = g.integer(1, 3);
        const auto probes = matrix_probes(n);
        const BM S = random_biop(g, n);
        const BM T = random_biop(g, n);
        const RatMatrix X = g.matrix(n);
        const RatMatrix Y = g.matrix(n);
        CHECK(biop_apply(S * T, X) == biop_apply(S, biop_apply(T, X)));

        const RatMatrix P = g.matrix(n);
        const RatMatrix Q = g.matrix(n);
        CHECK(equal_on(ad(commutator(P, Q)), ad(P) * ad(Q) - ad(Q) * ad(P), probes));
        CHECK(biop_apply(ad(P), X * Y) == biop_apply(ad(P), X) * Y + X * biop_apply(ad(P), Y));
    }
}

TEST_CASE("exp_ad") {
    SUBCASE("zero path gives the identity") {
        const auto e = exp_ad(PS::zero(3));
        CHECK(vanishes_on(e - OpSeries<RatMatrix>::one(3), matrix_probes(2)));
    }
    SUBCASE("constant path q a: q^2 t^2 coefficient is ad_a^2 / 2") {
        const RatMatrix a = m2(1, 2, 3, 4);
        const RatMatrix X = m2(0, 1, 5, 2);
        const auto e = exp_ad(deform(TM::constant(a), 3).Pq);
        const TM applied = e[2].apply(TM::constant(X));
        CHECK(applied == TM::monomial(Rational(1, 2) * commutator(a, commutator(a, X)), 2));
    }
    SUBCASE("property: Ad-exp identity against W X W^-1") {
        Gen g(61);
        for (int trial = 0; trial < 20; ++trial) {
            const int N = g.integer(1, 4);
            const int n = g.integer(1, 3);
            const auto prob = qlax::testing::random_matrix_problem(g, n, N);
            const auto pq = deform(prob.P, N).Pq;
            const auto e = exp_ad(pq);
            const PS w = texp(pq);
            const PS winv = q_invert_unipotent(w);
            for (const auto& X : matrix_probes(n)) {
                CHECK(apply_series(e, constant_path(X, N)) == w * constant_path(X, N) * winv);
            }
            CHECK(equal_on(series_dt(e), ad_series(pq) * e, matrix_probes(n)));
        }
    }
    SUBCASE("valuation error") { CHECK_THROWS_AS(exp_ad(PS::one(2)), ValuationError); }
}

TEST_CASE("transport and symmetry residuals") {
    const auto prob = make_problem(TM::constant(E12), H, 3);
    const auto sol = lax_solve(prob);
    const auto probes = default_probes(prob);

    SUBCASE("identity transports to the identity") {
        const auto sq = transport(BM::one(), sol.Pq);
        CHECK(vanishes_on(sq - OpSeries<RatMatrix>::one(3), probes));
        CHECK(vanishes_on(symmetry3_residual(sq, sol.Pq), probes));
        CHECK(symmetry2_residual(OpSeries<RatMatrix>::one(3), sol.Pq, sol.Lq).is_zero());
    }
    SUBCASE("S0 = ad(L0)") {
        const auto sq = transport(ad(H), sol.Pq);
        CHECK(vanishes_on(symmetry3_residual(sq, sol.Pq), probes));
        CHECK(symmetry2_residual(sq, sol.Pq, sol.Lq).is_zero());
    }
    SUBCASE("conjugation S0 = (g, g^-1) reproduces the conjugated solution") {
        const RatMatrix g = m2(2, 1, 1, 1);
        const BM s0 = BM::pair(g, inverse(g));
        const auto sq = transport(s0, sol.Pq);
        const auto moved = lax_solve(make_problem(prob.P, g * H * inverse(g), prob.N));
        CHECK(apply_series(sq, sol.Lq) == moved.Lq);
        CHECK(transported_solution_check(s0, prob));
    }
    SUBCASE("constant non-commuting S0 is not a solution") {
        const auto sq = constant_op(BM::left_mul(H), 3);
        const auto r = symmetry3_residual(sq, sol.Pq);
        CHECK_FALSE(vanishes_on(r, probes));
        CHECK(vanishes_on(QSeries<BiOp<TM>>(std::vector<BiOp<TM>>{r[0]}), probes));
    }
    SUBCASE("mismatched truncations") {
        CHECK_THROWS_AS(symmetry3_residual(OpSeries<RatMatrix>::one(2), sol.Pq), TruncationMismatch);
    }
}

TEST_CASE("symmetry2 is strictly weaker than symmetry3: kernel search") {
    // Search constant single-pair S = (C, D) with entries in {-1, 0, 1} for one that
    // fails the strong equation but whose residual annihilates L_q.
    const auto prob = make_problem(TM::constant(E12), H, 2);
    const auto sol = lax_solve(prob);
    const auto probes = default_probes(prob);
    bool found = false;
    for (int code = 0; code < 6561 && !found; ++code) {
        int c = code;
        std::vector<Rational> e(8);
        for (auto& x : e) {
            x = Rational(c % 3 - 1);
            c /= 3;
        }
        const RatMatrix C = RatMatrix::from_rows({{e[0], e[1]}, {e[2], e[3]}});
        const RatMatrix D = RatMatrix::from_rows({{e[4], e[5]}, {e[6], e[7]}});
        const auto sq = constant_op(BM::pair(C, D), 2);
        if (vanishes_on(symmetry3_residual(sq, sol.Pq), probes)) {
            continue;
        }
        found = symmetry2_residual(sq, sol.Pq, sol.Lq).is_zero();
    }
    CHECK(found);
}

TEST_CASE("property: transported solutions on random matrix instances") {
    Gen g(71);
    for (int trial = 0; trial < 15; ++trial) {
        const int N = g.integer(1, 4);
        const int n = g.integer(1, 3);
        const auto prob = qlax::testing::random_matrix_problem(g, n, N);
        const BM s0 = random_biop(g, n);
        const auto details = transported_solution_details(s0, prob);
        CHECK(details.solves_lax);
        CHECK(details.matches_conjugated);
        const auto pq = deform(prob.P, N).Pq;
        CHECK(vanishes_on(symmetry3_residual(details.Sq, pq), matrix_probes(n)));

        // adding q^k M (left multiplication) adds -q^(k+1) [P_0, M] to the residual
        if (N >= 2) {
            const int k = g.integer(1, N - 1);
            const RatMatrix M = g.matrix(n);
            auto perturbed = details.Sq;
            perturbed[k] = perturbed[k] + lift_biop(BM::left_mul(M));
            const bool detectable = !commutator(prob.P.coeff(0), M).is_zero();
            CHECK(vanishes_on(symmetry3_residual(perturbed, pq), matrix_probes(n)) == !detectable);
        }
    }
}

TEST_CASE("KdV symmetry transport") {
    const auto [L, P] = kdv_pair();
    for (int N = 1; N <= 2; ++N) {
        const auto prob = make_problem(TPoly<PsdoSymbol>::constant(P), L, N);
        const auto sol = lax_solve(prob);
        const auto probes = default_probes(prob);
        for (const auto& s0 : {BiOp<PsdoSymbol>::one(), BiOp<PsdoSymbol>::pair(L, PsdoSymbol::one())}) {
            const auto sq = transport(s0, sol.Pq);
            CHECK(vanishes_on(symmetry3_residual(sq, sol.Pq), probes));
            CHECK(transported_solution_check(s0, prob));
        }
    }
}
