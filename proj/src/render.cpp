#include "qlax/render.hpp"

#include <algorithm>

namespace qlax {

Json MatrixRenderer::json(const RatMatrix& m) const { return Json(m.to_strings(n)); }

std::string MatrixRenderer::text(const RatMatrix& m) const { return m.is_scalar() ? m.expanded(n).to_string() : m.to_string(); }

Json PsdoRenderer::json(const PsdoSymbol& s) const { return symbol_json(s); }

Rational PsdoRenderer::norm(const PsdoSymbol& s) const {
    Rational m;
    for (const auto& [k, c] : s.coeffs()) {
        m = std::max(m, c.max_abs_coeff());
    }
    return m;
}

Json symbol_json(const PsdoSymbol& s) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.coeffs()) {
        terms.push_back(Json{{"order", k}, {"coeff", c.to_string()}});
    }
    Json floor = s.floor() ? Json(*s.floor()) : Json("exact");
    return Json{{"schema", "qlax.symbol/1"}, {"terms", terms}, {"floor", floor}};
}

} // namespace qlax
