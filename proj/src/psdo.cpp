#include "qlax/psdo.hpp"

#include <algorithm>

#include "qlax/error.hpp"

namespace qlax {

namespace {

// Combined floor of two symbols: nullopt acts as -infinity.
std::optional<int> max_floor(std::optional<int> a, std::optional<int> b) {
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::max(*a, *b);
}

} // namespace

PsdoSymbol::PsdoSymbol(Coeffs coeffs, std::optional<int> floor) : coeffs_(std::move(coeffs)), floor_(floor) {
    std::erase_if(coeffs_, [&](const auto& kv) { return kv.second.is_zero() || (floor_ && kv.first < *floor_); });
}

PsdoSymbol PsdoSymbol::term(int k, DiffPoly a) {
    PsdoSymbol s;
    if (!a.is_zero()) {
        s.coeffs_.emplace(k, std::move(a));
    }
    return s;
}

std::optional<int> PsdoSymbol::order() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.begin()->first;
}

bool PsdoSymbol::is_differential() const { return !floor_ && (coeffs_.empty() || coeffs_.rbegin()->first >= 0); }

DiffPoly PsdoSymbol::coeff(int k) const {
    if (floor_ && k < *floor_) {
        throw PrecisionExhausted("order " + std::to_string(k) + " lies below the precision floor " +
                                 std::to_string(*floor_));
    }
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? DiffPoly() : it->second;
}

PsdoSymbol PsdoSymbol::truncated(int floor) const { return PsdoSymbol(coeffs_, max_floor(floor_, floor)); }

PsdoSymbol& PsdoSymbol::operator+=(const PsdoSymbol& o) {
    floor_ = max_floor(floor_, o.floor_);
    for (const auto& [k, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
        }
    }
    std::erase_if(coeffs_, [&](const auto& kv) { return kv.second.is_zero() || (floor_ && kv.first < *floor_); });
    return *this;
}

PsdoSymbol operator-(const PsdoSymbol& a) {
    PsdoSymbol r = a;
    for (auto& [k, c] : r.coeffs_) {
        c = -c;
    }
    return r;
}

PsdoSymbol operator*(const Rational& r, const PsdoSymbol& a) {
    PsdoSymbol out = a;
    for (auto& [k, c] : out.coeffs_) {
        c = r * c;
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

PsdoSymbol operator*(const PsdoSymbol& a, const PsdoSymbol& b) { return psdo_compose(a, b); }

PsdoSymbol psdo_compose(const PsdoSymbol& a, const PsdoSymbol& b) {
    // The unknown tail of A (orders < floor_A) meets B at most at floor_A + ord(B),
    // and symmetrically for B's tail; orders are known only above both bounds.
    // An exact zero factor annihilates the other side's unknown tail.
    auto tail_bound = [](const PsdoSymbol& truncated, const PsdoSymbol& other) -> std::optional<int> {
        if (!truncated.floor()) {
            return std::nullopt;
        }
        if (other.order()) {
            return *truncated.floor() + *other.order();
        }
        if (other.floor()) {
            return *truncated.floor() + *other.floor();
        }
        return std::nullopt;
    };
    std::optional<int> floor = max_floor(tail_bound(a, b), tail_bound(b, a));

    PsdoSymbol::Coeffs out;
    for (const auto& [k, ak] : a.coeffs()) {
        for (const auto& [m, bm] : b.coeffs()) {
            DiffPoly deriv = bm;
            for (long j = 0;; ++j) {
                const int ord = k + m - static_cast<int>(j);
                if (floor && ord < *floor) {
                    break;
                }
                if (deriv.is_zero()) {
                    break;
                }
                if (k >= 0 && j > k) {
                    break;
                }
                if (!floor && k < 0 && j > 0 && !bm.is_constant()) {
                    // infinitely many nonzero j-terms, and no floor to stop at
                    throw PrecisionExhausted("composition with negative order " + std::to_string(k) +
                                             " needs a precision floor");
                }
                Rational c = binomial(k, j);
                if (!c.is_zero()) {
                    out[ord] += c * (ak * deriv);
                }
                deriv = deriv.dx();
            }
        }
    }
    return PsdoSymbol(std::move(out), floor);
}

PsdoSymbol psdo_commutator(const PsdoSymbol& a, const PsdoSymbol& b) { return psdo_compose(a, b) - psdo_compose(b, a); }

PsdoSymbol inverse(const PsdoSymbol& a) {
    if (a.coeffs().size() == 1 && a.coeffs().begin()->first == 0 && a.coeffs().begin()->second.is_constant()) {
        Rational c = a.coeffs().begin()->second.constant_term();
        return PsdoSymbol(PsdoSymbol::Coeffs{{0, DiffPoly(c.inverse())}}, a.floor());
    }
    throw NotAUnit("only nonzero scalar order-0 symbols are invertible");
}

std::string PsdoSymbol::to_string() const {
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        std::string xi;
        if (k == 1) {
            xi = "d";
        } else if (k > 1) {
            xi = "d^" + std::to_string(k);
        } else if (k < 0) {
            xi = "d^(" + std::to_string(k) + ")";
        }
        std::string body;
        if (xi.empty()) {
            body = c.to_string();
        } else if (c.terms().size() > 1) {
            body = "(" + c.to_string() + ")*" + xi;
        } else {
            const Rational& lead = c.terms().begin()->second;
            std::string mag = (lead.sign() < 0 ? -c : c).to_string();
            body = (lead.sign() < 0 ? "-" : "") + (mag == "1" ? xi : mag + "*" + xi);
        }
        if (out.empty()) {
            out = body;
        } else if (body.front() == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out.empty() ? "0" : out;
}

KdvPair kdv_pair() {
    PsdoSymbol L(PsdoSymbol::Coeffs{{2, DiffPoly(Rational(-1))}, {0, DiffPoly::u(0)}});
    PsdoSymbol P(PsdoSymbol::Coeffs{{3, DiffPoly(Rational(-4))}, {1, Rational(6) * DiffPoly::u(0)}, {0, Rational(3) * DiffPoly::u(1)}});
    return {std::move(L), std::move(P)};
}

PsdoSymbol kdv_flow_rhs() { return PsdoSymbol::multiplication(Rational(6) * DiffPoly::u(0) * DiffPoly::u(1) - DiffPoly::u(3)); }

} // namespace qlax
