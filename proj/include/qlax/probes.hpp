#pragma once

#include <vector>

#include "qlax/laxflow.hpp"
#include "qlax/matrix.hpp"
#include "qlax/psdo.hpp"

namespace qlax {

/// The n^2 matrix units: a basis, so agreement on them is operator equality.
std::vector<RatMatrix> matrix_probes(int n);

/// {1, u, d, u*d, d^2, L0, P(0)}.
std::vector<PsdoSymbol> psdo_probes(const PsdoSymbol& L0, const PsdoSymbol& P);

/// Dimension of a matrix problem (largest full-matrix dimension among P and L0).
int problem_dim(const LaxProblem<RatMatrix>& prob);

inline std::vector<RatMatrix> default_probes(const LaxProblem<RatMatrix>& prob) {
    return matrix_probes(problem_dim(prob));
}

inline std::vector<PsdoSymbol> default_probes(const LaxProblem<PsdoSymbol>& prob) {
    return psdo_probes(prob.L0, prob.P.coeff(0));
}

} // namespace qlax
