#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qlax/biop.hpp"
#include "qlax/laxflow.hpp"
#include "qlax/matrix.hpp"
#include "qlax/psdo.hpp"

namespace qlax {

/// Problem file, schema "qlax.problem/1":
///
///   {
///     "schema": "qlax.problem/1",
///     "backend": "psdo" | "matrix",
///     "N": 2,                                    (optional, see LoadOptions)
///     "L0": <value>,
///     "P": [{"degree": 0, "value": <value>}, ...],
///     "S0": [{"left": <value>, "right": <value>} | {"conjugate_by": <matrix>}, ...]   (optional)
///   }
///
/// psdo values are DSL strings. Matrix values are arrays of rows of rational
/// strings ("3/7"), the string "identity", or {"random": {"n", "bound", "seed"}}.
struct LoadOptions {
    std::optional<int> qorder;  // overrides the file's N when set
    std::optional<int> depth;   // psdo: truncate inputs below order -depth
    std::uint64_t seed = 0;     // default seed for random matrix values
};

struct MatrixProblemInput {
    LaxProblem<RatMatrix> problem;
    std::optional<BiOp<RatMatrix>> S0;
    int n = 1;
};

struct PsdoProblemInput {
    LaxProblem<PsdoSymbol> problem;
    std::optional<BiOp<PsdoSymbol>> S0;
};

using ProblemInput = std::variant<MatrixProblemInput, PsdoProblemInput>;

constexpr int kDefaultQOrder = 2;

/// Throws ValidationError (or SyntaxError from the DSL) on malformed input.
ProblemInput load_problem(const nlohmann::json& doc, const LoadOptions& opts = {});
ProblemInput load_problem_text(const std::string& text, const LoadOptions& opts = {});

RatMatrix parse_matrix_value(const nlohmann::json& v, std::uint64_t default_seed);

} // namespace qlax
