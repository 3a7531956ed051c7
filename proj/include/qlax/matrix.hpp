#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlax/rational.hpp"

namespace qlax {

/// Square matrix over the rationals.
///
/// dim() == 0 is the dimension-free scalar form c*I, which is what the static
/// zero()/one() return; it promotes to the other operand's dimension in mixed
/// arithmetic. Full matrices of different dimensions never mix.
class RatMatrix {
public:
    RatMatrix() = default;  // scalar 0
    RatMatrix(int n, std::vector<Rational> entries);

    static RatMatrix zero() { return RatMatrix(); }
    static RatMatrix one() { return scalar(Rational(1)); }
    static RatMatrix scalar(Rational c);
    static RatMatrix identity(int n) { return scalar(Rational(1)).expanded(n); }
    static RatMatrix zeros(int n) { return RatMatrix(n, std::vector<Rational>(static_cast<std::size_t>(n) * n)); }
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// The matrix unit E_ij.
    static RatMatrix unit(int n, int i, int j);

    int dim() const { return n_; }
    bool is_scalar() const { return n_ == 0; }
    Rational at(int i, int j) const;
    /// Full n x n form (a full matrix must already have dimension n).
    RatMatrix expanded(int n) const;

    bool is_zero() const;
    Rational trace() const;
    Rational determinant() const;
    Rational max_abs_entry() const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& r, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

    /// Rows of exact rational strings.
    std::vector<std::vector<std::string>> to_strings(int n = 0) const;
    std::string to_string() const;

private:
    static int common_dim(const RatMatrix& a, const RatMatrix& b);

    int n_ = 0;
    std::vector<Rational> e_{Rational()};  // row-major; one entry in scalar form
};

/// Exact inverse by Gauss-Jordan elimination. Throws Singular.
RatMatrix inverse(const RatMatrix& m);
inline RatMatrix mat_invert(const RatMatrix& m) { return inverse(m); }

/// Deterministic integer matrix with entries in [-bound, bound]. Entries are
/// taken from the raw std::mt19937_64 stream (fully specified by the C++
/// standard) reduced modulo 2*bound+1, so results match across platforms.
RatMatrix mat_random(int n, std::uint64_t seed, int bound);

} // namespace qlax
