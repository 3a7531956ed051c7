#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qlax {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "3", "-3", "3/7", "-3/7". Throws ValidationError.
    static Rational parse(std::string_view text);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }

    Rational abs() const { return Rational(::abs(value_)); }
    Rational inverse() const;
    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

inline Rational inverse(const Rational& r) { return r.inverse(); }

/// Generalized binomial coefficient k(k-1)...(k-j+1)/j!, valid for negative k.
Rational binomial(long k, long j);

Rational factorial(long n);

} // namespace qlax
