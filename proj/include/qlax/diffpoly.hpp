#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qlax/rational.hpp"

namespace qlax {

/// Product of jet variables u_j = d^j u / dx^j. exps()[j] is the exponent of
/// u_j; trailing zeros are stripped, so the empty monomial is 1.
class JetMonomial {
public:
    JetMonomial() = default;
    explicit JetMonomial(std::vector<int> exps);

    static JetMonomial jet(int j, int power = 1);

    const std::vector<int>& exps() const { return exps_; }
    int exponent(int j) const { return j < static_cast<int>(exps_.size()) ? exps_[j] : 0; }
    int degree() const { return degree_; }
    int weight() const;
    bool is_one() const { return exps_.empty(); }

    JetMonomial operator*(const JetMonomial& o) const;

    /// Graded lexicographic: total degree first, then the exponent vector by
    /// ascending jet index.
    friend std::strong_ordering operator<=>(const JetMonomial& a, const JetMonomial& b);
    friend bool operator==(const JetMonomial& a, const JetMonomial& b) = default;

    std::string to_string() const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Differential polynomial in u, u_1, u_2, ... with rational coefficients.
class DiffPoly {
public:
    using Terms = std::map<JetMonomial, Rational>;

    DiffPoly() = default;
    DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit DiffPoly(Terms terms);

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly one() { return DiffPoly(Rational(1)); }
    static DiffPoly u(int j = 0, int power = 1);
    static DiffPoly term(const Rational& c, JetMonomial m);

    /// Parses the operator DSL restricted to jet variables (no `d`).
    static DiffPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the monomial 1).
    Rational constant_term() const;
    Rational max_abs_coeff() const;

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator-(const DiffPoly& a);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const Rational& r, const DiffPoly& a);
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) = default;

    /// Total x-derivative (u_j -> u_{j+1}, Leibniz rule).
    DiffPoly dx() const;
    DiffPoly dx(int times) const;

    /// Highest-order terms first, e.g. "6*u*u_1 - u_3"; re-parses to itself.
    std::string to_string() const;

private:
    void add_term(JetMonomial m, const Rational& c);

    Terms terms_;
};

inline DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b) { return a * b; }
inline DiffPoly dp_dx(const DiffPoly& a) { return a.dx(); }
inline DiffPoly dp_parse(std::string_view text) { return DiffPoly::parse(text); }

} // namespace qlax
