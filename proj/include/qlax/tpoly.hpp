#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qlax/algebra.hpp"

namespace qlax {

/// Polynomial in the time variable t with coefficients in A; c[k] multiplies t^k.
/// Trailing zero coefficients are stripped, so the zero polynomial is empty.
template <Algebra A>
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<A> coeffs) : c_(std::move(coeffs)) { strip(); }

    static TPoly zero() { return TPoly(); }
    static TPoly one() { return constant(A::one()); }
    static TPoly constant(A a) { return TPoly(std::vector<A>{std::move(a)}); }
    static TPoly monomial(A a, int k) {
        std::vector<A> c(static_cast<std::size_t>(k) + 1, A::zero());
        c.back() = std::move(a);
        return TPoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<A>& coeffs() const { return c_; }
    A coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : A::zero(); }

    TPoly& operator+=(const TPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), A::zero());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] = c_[k] + o.c_[k];
        }
        strip();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) { return *this += -o; }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator-(const TPoly& a) {
        std::vector<A> c;
        c.reserve(a.c_.size());
        for (const auto& x : a.c_) {
            c.push_back(-x);
        }
        return TPoly(std::move(c));
    }
    friend TPoly operator*(const Rational& r, const TPoly& a) {
        if (r.is_zero()) {
            return TPoly();
        }
        std::vector<A> c;
        c.reserve(a.c_.size());
        for (const auto& x : a.c_) {
            c.push_back(r * x);
        }
        return TPoly(std::move(c));
    }

    /// Cauchy product; the left factor's coefficients stay on the left.
    friend TPoly operator*(const TPoly& p, const TPoly& r) {
        if (p.is_zero() || r.is_zero()) {
            return TPoly();
        }
        std::vector<A> c(p.c_.size() + r.c_.size() - 1, A::zero());
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < r.c_.size(); ++j) {
                c[i + j] = c[i + j] + p.c_[i] * r.c_[j];
            }
        }
        return TPoly(std::move(c));
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<A> c_;
};

template <Algebra A>
TPoly<A> tpoly_mul(const TPoly<A>& p, const TPoly<A>& r) {
    return p * r;
}

/// Exact d/dt.
template <Algebra A>
TPoly<A> tpoly_dt(const TPoly<A>& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) {
        return TPoly<A>();
    }
    std::vector<A> d;
    d.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        d.push_back(Rational(static_cast<long>(k)) * c[k]);
    }
    return TPoly<A>(std::move(d));
}

/// The primitive vanishing at t = 0, i.e. the integral of p(s) ds over [0, t].
template <Algebra A>
TPoly<A> tpoly_integrate(const TPoly<A>& p) {
    const auto& c = p.coeffs();
    if (c.empty()) {
        return TPoly<A>();
    }
    std::vector<A> d;
    d.reserve(c.size() + 1);
    d.push_back(A::zero());
    for (std::size_t k = 0; k < c.size(); ++k) {
        d.push_back(Rational(1, static_cast<long>(k) + 1) * c[k]);
    }
    return TPoly<A>(std::move(d));
}

/// Horner evaluation at t = t0.
template <Algebra A>
A tpoly_eval(const TPoly<A>& p, const Rational& t0) {
    const auto& c = p.coeffs();
    A acc = A::zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = t0 * acc + *it;
    }
    return acc;
}

} // namespace qlax
