#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qlax/algebra.hpp"
#include "qlax/tpoly.hpp"

namespace qlax {

/// Linear map X -> sum_i left_i X right_i on A, i.e. an element of A (x) A^op.
///
/// Simplification is structural only: pairs with identical left (or right)
/// parts are merged and zero pairs pruned. Two BiOps can act identically yet
/// differ structurally, so operator equality should be tested extensionally
/// (see equal_on / vanishes_on in symops.hpp).
template <Algebra A>
class BiOp {
public:
    using Term = std::pair<A, A>;

    BiOp() = default;
    explicit BiOp(std::vector<Term> terms) : t_(std::move(terms)) { simplify(); }

    static BiOp zero() { return BiOp(); }
    static BiOp one() { return pair(A::one(), A::one()); }
    static BiOp pair(A left, A right) { return BiOp(std::vector<Term>{{std::move(left), std::move(right)}}); }
    static BiOp left_mul(A a) { return pair(std::move(a), A::one()); }
    static BiOp right_mul(A a) { return pair(A::one(), std::move(a)); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    A apply(const A& x) const {
        A acc = A::zero();
        for (const auto& [l, r] : t_) {
            acc = acc + l * x * r;
        }
        return acc;
    }

    friend BiOp operator+(const BiOp& a, const BiOp& b) {
        std::vector<Term> t = a.t_;
        t.insert(t.end(), b.t_.begin(), b.t_.end());
        return BiOp(std::move(t));
    }
    friend BiOp operator-(const BiOp& a) {
        BiOp r = a;
        for (auto& [l, rt] : r.t_) {
            l = -l;
        }
        return r;
    }
    friend BiOp operator-(const BiOp& a, const BiOp& b) { return a + (-b); }
    friend BiOp operator*(const Rational& r, const BiOp& a) {
        std::vector<Term> t;
        t.reserve(a.t_.size());
        for (const auto& [l, rt] : a.t_) {
            t.emplace_back(r * l, rt);
        }
        return BiOp(std::move(t));
    }

    /// Composition: (a, b) o (c, d) = (a c, d b), i.e. X -> a c X d b.
    friend BiOp operator*(const BiOp& s, const BiOp& u) {
        std::vector<Term> t;
        t.reserve(s.t_.size() * u.t_.size());
        for (const auto& [a, b] : s.t_) {
            for (const auto& [c, d] : u.t_) {
                t.emplace_back(a * c, d * b);
            }
        }
        return BiOp(std::move(t));
    }

    /// Structural equality of simplified forms.
    friend bool operator==(const BiOp& a, const BiOp& b) { return a.t_ == b.t_; }

private:
    void prune() {
        std::erase_if(t_, [](const Term& p) { return p.first.is_zero() || p.second.is_zero(); });
    }

    template <bool ByLeft>
    bool merge() {
        std::vector<Term> out;
        out.reserve(t_.size());
        bool merged = false;
        for (auto& term : t_) {
            auto& key = ByLeft ? term.first : term.second;
            auto it = std::find_if(out.begin(), out.end(), [&](const Term& o) { return (ByLeft ? o.first : o.second) == key; });
            if (it == out.end()) {
                out.push_back(std::move(term));
            } else if constexpr (ByLeft) {
                it->second = it->second + term.second;
                merged = true;
            } else {
                it->first = it->first + term.first;
                merged = true;
            }
        }
        t_ = std::move(out);
        prune();
        return merged;
    }

    void simplify() {
        prune();
        bool changed = true;
        while (changed) {
            changed = merge<true>();
            changed = merge<false>() || changed;
        }
    }

    std::vector<Term> t_;
};

template <Algebra A>
A biop_apply(const BiOp<A>& s, const A& x) {
    return s.apply(x);
}

/// Inner derivation X -> P X - X P.
template <Algebra A>
BiOp<A> ad(const A& p) {
    return BiOp<A>(std::vector<typename BiOp<A>::Term>{{p, A::one()}, {-A::one(), p}});
}

/// Rewrites every pair (a(t), b(t)) as sum_j (t^j a(t), b_j) so that right
/// factors are t-constant; t-calculus then acts on the left factors alone.
template <Algebra A>
std::vector<std::pair<TPoly<A>, A>> split_time(const BiOp<TPoly<A>>& s) {
    std::vector<std::pair<TPoly<A>, A>> out;
    for (const auto& [l, r] : s.terms()) {
        const auto& rc = r.coeffs();
        for (std::size_t j = 0; j < rc.size(); ++j) {
            if (!rc[j].is_zero()) {
                out.emplace_back(TPoly<A>::monomial(A::one(), static_cast<int>(j)) * l, rc[j]);
            }
        }
    }
    return out;
}

template <Algebra A, class F>
BiOp<TPoly<A>> map_time_left(const BiOp<TPoly<A>>& s, F&& f) {
    std::vector<typename BiOp<TPoly<A>>::Term> t;
    for (auto& [l, r] : split_time(s)) {
        t.emplace_back(f(l), TPoly<A>::constant(r));
    }
    return BiOp<TPoly<A>>(std::move(t));
}

template <Algebra A>
BiOp<TPoly<A>> time_derivative(const BiOp<TPoly<A>>& s) {
    return map_time_left(s, [](const TPoly<A>& p) { return tpoly_dt(p); });
}

template <Algebra A>
BiOp<TPoly<A>> time_integral(const BiOp<TPoly<A>>& s) {
    return map_time_left(s, [](const TPoly<A>& p) { return tpoly_integrate(p); });
}

} // namespace qlax
