#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qlax/diffpoly.hpp"

namespace qlax {

/// Formal pseudo-differential symbol sum_k a_k(u) xi^k over DiffPoly.
///
/// floor() == nullopt means the symbol is exact. floor() == f means every
/// coefficient of order < f is unknown; stored orders are always >= f.
class PsdoSymbol {
public:
    using Coeffs = std::map<int, DiffPoly, std::greater<>>;

    PsdoSymbol() = default;
    explicit PsdoSymbol(Coeffs coeffs, std::optional<int> floor = std::nullopt);

    static PsdoSymbol zero() { return PsdoSymbol(); }
    static PsdoSymbol one() { return multiplication(DiffPoly::one()); }
    static PsdoSymbol xi(int k = 1) { return term(k, DiffPoly::one()); }
    static PsdoSymbol term(int k, DiffPoly a);
    static PsdoSymbol multiplication(DiffPoly a) { return term(0, std::move(a)); }

    /// Largest order with a nonzero coefficient; nullopt (-infinity) for zero.
    std::optional<int> order() const;
    std::optional<int> floor() const { return floor_; }
    bool is_exact() const { return !floor_; }
    /// Exact with no negative orders.
    bool is_differential() const;
    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs& coeffs() const { return coeffs_; }

    /// Coefficient of xi^k. Throws PrecisionExhausted below the floor.
    DiffPoly coeff(int k) const;

    /// Forgets every order below `floor` (no-op if already coarser).
    PsdoSymbol truncated(int floor) const;

    PsdoSymbol& operator+=(const PsdoSymbol& o);
    PsdoSymbol& operator-=(const PsdoSymbol& o) { return *this += -o; }
    friend PsdoSymbol operator+(PsdoSymbol a, const PsdoSymbol& b) { return a += b; }
    friend PsdoSymbol operator-(PsdoSymbol a, const PsdoSymbol& b) { return a -= b; }
    friend PsdoSymbol operator-(const PsdoSymbol& a);
    friend PsdoSymbol operator*(const Rational& r, const PsdoSymbol& a);
    /// Symbol composition, see psdo_compose.
    friend PsdoSymbol operator*(const PsdoSymbol& a, const PsdoSymbol& b);
    friend bool operator==(const PsdoSymbol& a, const PsdoSymbol& b) = default;

    /// DSL rendering, e.g. "-4*d^3 + 6*u*d + 3*u_1". Orders below zero render
    /// as "d^(-k)", which the DSL does not accept.
    std::string to_string() const;

private:
    Coeffs coeffs_;
    std::optional<int> floor_;
};

/// sigma(A o B) = sum_{j>=0} binom(k, j) a_k D_x^j(b_m) xi^(k+m-j).
///
/// An exact result needs a finite j-sum for every pair of terms; when A has a
/// negative order acting on a non-constant coefficient of B, one of the inputs
/// must carry a floor or PrecisionExhausted is thrown.
PsdoSymbol psdo_compose(const PsdoSymbol& a, const PsdoSymbol& b);
PsdoSymbol psdo_commutator(const PsdoSymbol& a, const PsdoSymbol& b);
inline std::optional<int> psdo_order(const PsdoSymbol& a) { return a.order(); }

/// Only scalar order-0 symbols are invertible here; everything else throws NotAUnit.
PsdoSymbol inverse(const PsdoSymbol& a);

struct KdvPair {
    PsdoSymbol L;
    PsdoSymbol P;
};

/// L = -d^2 + u, P = -4 d^3 + 6 u d + 3 u_1.
KdvPair kdv_pair();

/// 6 u u_1 - u_3 as an order-0 symbol.
PsdoSymbol kdv_flow_rhs();

} // namespace qlax
