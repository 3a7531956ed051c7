#include "qlax/problem.hpp"

#include <algorithm>

#include "qlax/error.hpp"
#include "qlax/expr.hpp"

namespace qlax {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
    if (!doc.is_object() || !doc.contains(field)) {
        throw ValidationError(std::string("problem file: missing field '") + field + "'");
    }
    return doc.at(field);
}

Rational parse_entry(const json& v) {
    if (v.is_string()) {
        return Rational::parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    throw ValidationError("matrix entries must be rational strings such as \"3/7\"");
}

PsdoSymbol parse_psdo_value(const json& v, const LoadOptions& opts) {
    if (!v.is_string()) {
        throw ValidationError("psdo values must be operator expression strings");
    }
    PsdoSymbol s = parse_operator(v.get<std::string>());
    return opts.depth ? s.truncated(-*opts.depth) : s;
}

int resolve_order(const json& doc, const LoadOptions& opts) {
    if (opts.qorder) {
        return *opts.qorder;
    }
    if (doc.contains("N")) {
        if (!doc.at("N").is_number_integer()) {
            throw ValidationError("problem file: 'N' must be an integer");
        }
        return doc.at("N").get<int>();
    }
    return kDefaultQOrder;
}

template <class Value, class Parse>
TPoly<Value> parse_path(const json& doc, const Parse& parse) {
    const json& entries = require(doc, "P");
    if (!entries.is_array()) {
        throw ValidationError("problem file: 'P' must be an array of {degree, value}");
    }
    std::vector<Value> coeffs;
    for (const auto& e : entries) {
        const int deg = require(e, "degree").get<int>();
        if (deg < 0) {
            throw ValidationError("problem file: P degree must be non-negative");
        }
        if (static_cast<int>(coeffs.size()) <= deg) {
            coeffs.resize(deg + 1, Value::zero());
        }
        coeffs[deg] = coeffs[deg] + parse(require(e, "value"));
    }
    return TPoly<Value>(std::move(coeffs));
}

template <class Value, class Parse>
std::optional<BiOp<Value>> parse_s0(const json& doc, const Parse& parse) {
    if (!doc.contains("S0")) {
        return std::nullopt;
    }
    const json& s0 = doc.at("S0");
    if (!s0.is_array()) {
        throw ValidationError("problem file: 'S0' must be an array of {left, right} pairs");
    }
    std::vector<typename BiOp<Value>::Term> terms;
    for (const auto& t : s0) {
        if (t.is_object() && t.contains("conjugate_by")) {
            if constexpr (InvertibleAlgebra<Value>) {
                Value g = parse(t.at("conjugate_by"));
                terms.emplace_back(g, inverse(g));
                continue;
            }
        }
        terms.emplace_back(parse(require(t, "left")), parse(require(t, "right")));
    }
    return BiOp<Value>(std::move(terms));
}

int problem_dim_checked(const LaxProblem<RatMatrix>& prob, const std::optional<BiOp<RatMatrix>>& s0) {
    int n = 0;
    auto see = [&](const RatMatrix& m) {
        if (m.dim() == 0) {
            return;
        }
        if (n != 0 && n != m.dim()) {
            throw ValidationError("problem file mixes " + std::to_string(n) + "x" + std::to_string(n) + " and " +
                                  std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " matrices");
        }
        n = m.dim();
    };
    see(prob.L0);
    for (const auto& c : prob.P.coeffs()) {
        see(c);
    }
    if (s0) {
        for (const auto& [l, r] : s0->terms()) {
            see(l);
            see(r);
        }
    }
    if (n == 0) {
        throw ValidationError("matrix problem needs at least one explicit matrix to fix the dimension");
    }
    return n;
}

} // namespace

RatMatrix parse_matrix_value(const json& v, std::uint64_t default_seed) {
    if (v.is_string()) {
        if (v.get<std::string>() == "identity") {
            return RatMatrix::one();
        }
        throw ValidationError("matrix value must be an array of rows, \"identity\" or {\"random\": ...}");
    }
    if (v.is_object()) {
        const json& r = require(v, "random");
        const int n = require(r, "n").get<int>();
        const int bound = r.value("bound", 2);
        const auto seed = r.contains("seed") ? r.at("seed").get<std::uint64_t>() : default_seed;
        return mat_random(n, seed, bound);
    }
    if (!v.is_array() || v.empty()) {
        throw ValidationError("matrix literal must be a non-empty array of rows");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) {
            throw ValidationError("matrix literal rows must be arrays");
        }
        std::vector<Rational> out;
        for (const auto& e : row) {
            out.push_back(parse_entry(e));
        }
        rows.push_back(std::move(out));
    }
    try {
        return RatMatrix::from_rows(rows);
    } catch (const DimensionMismatch& e) {
        throw ValidationError(e.what());
    }
}

ProblemInput load_problem(const json& doc, const LoadOptions& opts) {
    if (!doc.is_object()) {
        throw ValidationError("problem file must be a JSON object");
    }
    if (doc.contains("schema") && doc.at("schema") != "qlax.problem/1") {
        throw ValidationError("unsupported problem schema " + doc.at("schema").dump());
    }
    const std::string backend = require(doc, "backend").get<std::string>();
    const int N = resolve_order(doc, opts);

    if (backend == "psdo") {
        auto parse = [&](const json& v) { return parse_psdo_value(v, opts); };
        PsdoProblemInput in{make_problem(parse_path<PsdoSymbol>(doc, parse), parse(require(doc, "L0")), N),
                            parse_s0<PsdoSymbol>(doc, parse)};
        return in;
    }
    if (backend == "matrix") {
        // Random values without an explicit seed draw seed, seed+1, ... in file order.
        std::uint64_t next_seed = opts.seed;
        auto parse = [&](const json& v) { return parse_matrix_value(v, next_seed++); };
        try {
            RatMatrix L0 = parse(require(doc, "L0"));
            TPoly<RatMatrix> P = parse_path<RatMatrix>(doc, parse);
            auto S0 = parse_s0<RatMatrix>(doc, parse);
            MatrixProblemInput in{make_problem(std::move(P), std::move(L0), N), std::move(S0), 0};
            in.n = problem_dim_checked(in.problem, in.S0);
            return in;
        } catch (const DimensionMismatch& e) {
            throw ValidationError(std::string("problem file: ") + e.what());
        } catch (const Singular& e) {
            throw ValidationError(std::string("problem file: conjugate_by matrix is singular"));
        }
    }
    throw ValidationError("unknown backend '" + backend + "' (expected \"psdo\" or \"matrix\")");
}

ProblemInput load_problem_text(const std::string& text, const LoadOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("problem file is not valid JSON: ") + e.what());
    }
    try {
        return load_problem(doc, opts);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("problem file: ") + e.what());
    }
}

} // namespace qlax
