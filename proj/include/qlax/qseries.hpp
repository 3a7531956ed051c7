#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qlax/algebra.hpp"
#include "qlax/error.hpp"

namespace qlax {

/// Power series in q with coefficients in A, truncated modulo q^(N+1).
///
/// Exactly N+1 coefficients are stored. Combining two series with different
/// N throws TruncationMismatch; nothing re-truncates implicitly.
template <Algebra A>
class QSeries {
public:
    explicit QSeries(int trunc) : c_(checked_size(trunc), A::zero()) {}
    explicit QSeries(std::vector<A> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) {
            throw ValidationError("q-series needs at least one coefficient");
        }
    }

    static QSeries zero(int trunc) { return QSeries(trunc); }
    static QSeries one(int trunc) { return constant(A::one(), trunc); }
    static QSeries constant(A a, int trunc) {
        QSeries s(trunc);
        s.c_[0] = std::move(a);
        return s;
    }
    /// q^k * a (dropped if k > trunc).
    static QSeries monomial(A a, int k, int trunc) {
        QSeries s(trunc);
        if (k <= trunc) {
            s.c_[k] = std::move(a);
        }
        return s;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const A& operator[](int k) const { return c_[k]; }
    A& operator[](int k) { return c_[k]; }
    const std::vector<A>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    /// Smallest k with a nonzero coefficient; nullopt stands for +infinity.
    std::optional<int> valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero()) {
                return static_cast<int>(k);
            }
        }
        return std::nullopt;
    }

    /// Re-truncates to a smaller order.
    QSeries truncated(int trunc) const {
        if (trunc > this->trunc()) {
            throw TruncationMismatch(this->trunc(), trunc);
        }
        return QSeries(std::vector<A>(c_.begin(), c_.begin() + trunc + 1));
    }

    QSeries& operator+=(const QSeries& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] = c_[k] + o.c_[k];
        }
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] = c_[k] - o.c_[k];
        }
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator-(QSeries a) {
        for (auto& x : a.c_) {
            x = -x;
        }
        return a;
    }
    friend QSeries operator*(const Rational& r, QSeries a) {
        for (auto& x : a.c_) {
            x = r * x;
        }
        return a;
    }

    /// Truncated Cauchy product; factor order is preserved in every term.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.check(b);
        const int n = a.trunc();
        QSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!b.c_[j].is_zero()) {
                    r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
                }
            }
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

    void check(const QSeries& o) const {
        if (o.trunc() != trunc()) {
            throw TruncationMismatch(trunc(), o.trunc());
        }
    }

private:
    static std::size_t checked_size(int trunc) {
        if (trunc < 0) {
            throw ValidationError("truncation order must be non-negative");
        }
        return static_cast<std::size_t>(trunc) + 1;
    }

    std::vector<A> c_;
};

template <Algebra A>
std::optional<int> q_val(const QSeries<A>& s) {
    return s.valuation();
}

template <Algebra A>
QSeries<A> q_mul(const QSeries<A>& s, const QSeries<A>& r) {
    return s * r;
}

/// Applies f to every coefficient.
template <Algebra A, class F>
auto map_coeffs(const QSeries<A>& s, F&& f) {
    using B = std::invoke_result_t<F&, const A&>;
    std::vector<B> out;
    out.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) {
        out.push_back(f(c));
    }
    return QSeries<B>(std::move(out));
}

/// Sum of c_k q0^k.
template <Algebra A>
A q_eval(const QSeries<A>& s, const Rational& q0) {
    A acc = A::zero();
    for (int k = s.trunc(); k >= 0; --k) {
        acc = q0 * acc + s[k];
    }
    return acc;
}

/// Group exponential from {val >= 1} to 1 + {val >= 1}; the series terminates
/// because s^i has valuation >= i.
template <Algebra A>
QSeries<A> q_exp(const QSeries<A>& s) {
    if (!s[0].is_zero()) {
        throw ValuationError("q_exp needs a series of positive q-valuation");
    }
    const int n = s.trunc();
    QSeries<A> result = QSeries<A>::one(n);
    QSeries<A> power = QSeries<A>::one(n);
    for (int i = 1; i <= n; ++i) {
        power = Rational(1, i) * (power * s);  // s^i / i!
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    return result;
}

/// Inverse of q_exp on 1 + {val >= 1}.
template <Algebra A>
QSeries<A> q_log(const QSeries<A>& s) {
    if (!(s[0] == A::one())) {
        throw ValuationError("q_log needs constant term 1");
    }
    const int n = s.trunc();
    QSeries<A> x = s - QSeries<A>::one(n);
    QSeries<A> result = QSeries<A>::zero(n);
    QSeries<A> power = QSeries<A>::one(n);
    for (int i = 1; i <= n; ++i) {
        power = power * x;
        if (power.is_zero()) {
            break;
        }
        result += Rational(i % 2 == 1 ? 1 : -1, i) * power;
    }
    return result;
}

/// Inverse of 1 + x (val x >= 1) by the finite geometric series sum (-x)^i.
template <Algebra A>
QSeries<A> q_invert_unipotent(const QSeries<A>& s) {
    if (!(s[0] == A::one())) {
        throw ValuationError("q_invert_unipotent needs constant term 1");
    }
    const int n = s.trunc();
    QSeries<A> y = QSeries<A>::one(n) - s;
    QSeries<A> result = QSeries<A>::one(n);
    QSeries<A> power = QSeries<A>::one(n);
    for (int i = 1; i <= n; ++i) {
        power = power * y;
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    return result;
}

/// Inverse of a series whose constant term c_0 has the caller-supplied inverse inv0.
template <Algebra A>
QSeries<A> q_invert_unit(const QSeries<A>& s, const A& inv0) {
    if (!(inv0 * s[0] == A::one()) || !(s[0] * inv0 == A::one())) {
        throw NotAUnit("supplied inverse does not invert the constant term");
    }
    const auto inv0_series = QSeries<A>::constant(inv0, s.trunc());
    return q_invert_unipotent(inv0_series * s) * inv0_series;
}

} // namespace qlax
