#include "qlax/rational.hpp"

#include <ostream>

#include "qlax/error.hpp"

namespace qlax {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw Singular("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ValidationError("malformed rational '" + s + "'"); };
    if (s.empty()) {
        throw bad();
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) {
            return false;
        }
        for (std::size_t k = from; k < to; ++k) {
            if (s[k] < '0' || s[k] > '9') {
                return false;
            }
        }
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(i, s.size())) {
            throw bad();
        }
    } else if (!digits(i, slash) || !digits(slash + 1, s.size())) {
        throw bad();
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0 || v.get_den() == 0) {
        throw bad();
    }
    v.canonicalize();
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw Singular("division by zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Singular("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(long k, long j) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (long i = 0; i < j; ++i) {
        num *= (k - i);
        den *= (i + 1);
    }
    return Rational(mpq_class(num, den));
}

Rational factorial(long n) {
    mpz_class f = 1;
    for (long i = 2; i <= n; ++i) {
        f *= i;
    }
    return Rational(mpq_class(f));
}

} // namespace qlax
