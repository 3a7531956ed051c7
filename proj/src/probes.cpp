#include "qlax/probes.hpp"

#include <algorithm>

#include "qlax/error.hpp"

namespace qlax {

std::vector<RatMatrix> matrix_probes(int n) {
    std::vector<RatMatrix> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.push_back(RatMatrix::unit(n, i, j));
        }
    }
    return out;
}

std::vector<PsdoSymbol> psdo_probes(const PsdoSymbol& L0, const PsdoSymbol& P) {
    const PsdoSymbol u = PsdoSymbol::multiplication(DiffPoly::u(0));
    return {PsdoSymbol::one(), u, PsdoSymbol::xi(1), PsdoSymbol::term(1, DiffPoly::u(0)), PsdoSymbol::xi(2), L0, P};
}

int problem_dim(const LaxProblem<RatMatrix>& prob) {
    int n = prob.L0.dim();
    for (const auto& c : prob.P.coeffs()) {
        n = std::max(n, c.dim());
    }
    if (n == 0) {
        throw ValidationError("matrix problem has no full-dimension matrix to fix n");
    }
    return n;
}

} // namespace qlax
