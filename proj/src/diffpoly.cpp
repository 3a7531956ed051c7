#include "qlax/diffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qlax/expr.hpp"

namespace qlax {

JetMonomial::JetMonomial(std::vector<int> exps) : exps_(std::move(exps)) {
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

JetMonomial JetMonomial::jet(int j, int power) {
    std::vector<int> e(static_cast<std::size_t>(j) + 1, 0);
    e[j] = power;
    return JetMonomial(std::move(e));
}

int JetMonomial::weight() const {
    int w = 0;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        w += static_cast<int>(j) * exps_[j];
    }
    return w;
}

JetMonomial JetMonomial::operator*(const JetMonomial& o) const {
    std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t j = 0; j < e.size(); ++j) {
        e[j] = exponent(static_cast<int>(j)) + o.exponent(static_cast<int>(j));
    }
    return JetMonomial(std::move(e));
}

std::strong_ordering operator<=>(const JetMonomial& a, const JetMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    return a.exps_ <=> b.exps_;
}

std::string JetMonomial::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += j == 0 ? std::string("u") : "u_" + std::to_string(j);
        if (exps_[j] > 1) {
            out += '^' + std::to_string(exps_[j]);
        }
    }
    return out.empty() ? "1" : out;
}

DiffPoly::DiffPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.emplace(JetMonomial(), c);
    }
}

DiffPoly::DiffPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

DiffPoly DiffPoly::u(int j, int power) { return term(Rational(1), JetMonomial::jet(j, power)); }

DiffPoly DiffPoly::term(const Rational& c, JetMonomial m) {
    DiffPoly p;
    if (!c.is_zero()) {
        p.terms_.emplace(std::move(m), c);
    }
    return p;
}

DiffPoly DiffPoly::parse(std::string_view text) { return elaborate_diffpoly(parse_expr(text)); }

bool DiffPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational DiffPoly::constant_term() const {
    auto it = terms_.find(JetMonomial());
    return it == terms_.end() ? Rational() : it->second;
}

Rational DiffPoly::max_abs_coeff() const {
    Rational m;
    for (const auto& [mono, c] : terms_) {
        m = std::max(m, c.abs());
    }
    return m;
}

void DiffPoly::add_term(JetMonomial m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [mono, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) { return *this += -o; }

DiffPoly operator-(const DiffPoly& a) {
    DiffPoly r = a;
    for (auto& [mono, c] : r.terms_) {
        c = -c;
    }
    return r;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

DiffPoly operator*(const Rational& r, const DiffPoly& a) {
    if (r.is_zero()) {
        return DiffPoly();
    }
    DiffPoly out = a;
    for (auto& [mono, c] : out.terms_) {
        c *= r;
    }
    return out;
}

DiffPoly DiffPoly::dx() const {
    DiffPoly r;
    for (const auto& [mono, c] : terms_) {
        const auto& e = mono.exps();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) {
                continue;
            }
            std::vector<int> ne = e;
            ne.resize(std::max(ne.size(), j + 2), 0);
            ne[j] -= 1;
            ne[j + 1] += 1;
            r.add_term(JetMonomial(std::move(ne)), c * Rational(e[j]));
        }
    }
    return r;
}

DiffPoly DiffPoly::dx(int times) const {
    DiffPoly r = *this;
    for (int i = 0; i < times && !r.is_zero(); ++i) {
        r = r.dx();
    }
    return r;
}

std::string DiffPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        Rational mag = c.abs();
        std::string body;
        if (mono.is_one()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = mono.to_string();
        } else {
            body = mag.to_string() + "*" + mono.to_string();
        }
        if (out.empty()) {
            out = c.sign() < 0 ? "-" + body : body;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace qlax
