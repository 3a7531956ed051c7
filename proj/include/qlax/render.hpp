#pragma once

#include <string>

#include <json.hpp>

#include "qlax/biop.hpp"
#include "qlax/laxflow.hpp"
#include "qlax/matrix.hpp"
#include "qlax/psdo.hpp"

namespace qlax {

using Json = nlohmann::ordered_json;

/// Backend element renderers. Matrices render as rows of rational strings
/// (scalar-form matrices are expanded to dimension n).
struct MatrixRenderer {
    int n = 1;
    Json json(const RatMatrix& m) const;
    std::string text(const RatMatrix& m) const;
    Rational norm(const RatMatrix& m) const { return m.max_abs_entry(); }
};

struct PsdoRenderer {
    Json json(const PsdoSymbol& s) const;
    std::string text(const PsdoSymbol& s) const { return s.to_string(); }
    /// Largest |coefficient| over all orders and monomials.
    Rational norm(const PsdoSymbol& s) const;
};

/// {"schema": "qlax.symbol/1", "terms": [{"order", "coeff"}], "floor": "exact" | int},
/// terms in descending order.
Json symbol_json(const PsdoSymbol& s);

template <class R, Algebra A>
Json tpoly_json(const R& r, const TPoly<A>& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(r.json(c));
    }
    return out;
}

template <class R, Algebra A>
std::string tpoly_text(const R& r, const TPoly<A>& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const A& c = p.coeffs()[k];
        if (c.is_zero()) {
            continue;
        }
        std::string tk = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
        std::string body = tk.empty() ? r.text(c) : tk + "*(" + r.text(c) + ")";
        out += out.empty() ? body : " + " + body;
    }
    return out;
}

/// {"schema": "qlax.qseries/1", "trunc": N, "coeffs": [c_0 .. c_N]} where each
/// c_k is an array indexed by t-degree.
template <class R, Algebra A>
Json path_series_json(const R& r, const PathSeries<A>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(tpoly_json(r, c));
    }
    return Json{{"schema", "qlax.qseries/1"}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

template <class R, Algebra A>
std::string path_series_text(const R& r, const PathSeries<A>& s) {
    std::string out;
    for (int k = 0; k <= s.trunc(); ++k) {
        out += "  q^" + std::to_string(k) + ": " + tpoly_text(r, s[k]) + "\n";
    }
    return out;
}

template <class R, Algebra A>
Json biop_json(const R& r, const BiOp<TPoly<A>>& s) {
    Json out = Json::array();
    for (const auto& [l, rt] : s.terms()) {
        out.push_back(Json{{"left", tpoly_json(r, l)}, {"right", tpoly_json(r, rt)}});
    }
    return out;
}

template <class R, Algebra A>
Json op_series_json(const R& r, const QSeries<BiOp<TPoly<A>>>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(biop_json(r, c));
    }
    return Json{{"schema", "qlax.opseries/1"}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

/// Per q-order, per t-degree norms of a residual. t-degrees run up to the
/// larger of the residual's and the reference series' degree at that order.
template <class R, Algebra A>
Json residual_json(const R& r, const PathSeries<A>& residual, const PathSeries<A>& reference, bool lossy) {
    Json orders = Json::array();
    for (int k = 0; k <= residual.trunc(); ++k) {
        const int deg = std::max(residual[k].degree(), reference[k].degree());
        Json norms = Json::array();
        for (int d = 0; d <= deg; ++d) {
            norms.push_back(Json{{"t", d}, {"norm", r.norm(residual[k].coeff(d)).to_string()}});
        }
        orders.push_back(Json{{"q", k}, {"norms", norms}});
    }
    return Json{{"schema", "qlax.residual/1"},
                {"trunc", residual.trunc()},
                {"zero", residual.is_zero()},
                {"lossy", lossy},
                {"orders", orders}};
}

} // namespace qlax
