#include "qlax/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qlax/error.hpp"

namespace qlax {

RatMatrix::RatMatrix(int n, std::vector<Rational> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1 || e_.size() != static_cast<std::size_t>(n) * n) {
        throw DimensionMismatch("matrix needs n >= 1 and n*n entries");
    }
}

RatMatrix RatMatrix::scalar(Rational c) {
    RatMatrix m;
    m.e_[0] = std::move(c);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionMismatch("matrix literal is not square");
        }
        e.insert(e.end(), row.begin(), row.end());
    }
    return RatMatrix(n, std::move(e));
}

RatMatrix RatMatrix::unit(int n, int i, int j) {
    RatMatrix m = zeros(n);
    m.e_[static_cast<std::size_t>(i) * n + j] = Rational(1);
    return m;
}

Rational RatMatrix::at(int i, int j) const {
    if (n_ == 0) {
        return i == j ? e_[0] : Rational();
    }
    return e_[static_cast<std::size_t>(i) * n_ + j];
}

RatMatrix RatMatrix::expanded(int n) const {
    if (n_ == n) {
        return *this;
    }
    if (n_ != 0) {
        throw DimensionMismatch("cannot resize a " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix to " +
                                std::to_string(n));
    }
    RatMatrix m = zeros(n);
    for (int i = 0; i < n; ++i) {
        m.e_[static_cast<std::size_t>(i) * n + i] = e_[0];
    }
    return m;
}

int RatMatrix::common_dim(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ != 0 && b.n_ != 0 && a.n_ != b.n_) {
        throw DimensionMismatch("matrix dimensions " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
    }
    return std::max(a.n_, b.n_);
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational RatMatrix::trace() const {
    if (n_ == 0) {
        throw DimensionMismatch("trace of a dimension-free scalar matrix");
    }
    Rational t;
    for (int i = 0; i < n_; ++i) {
        t += at(i, i);
    }
    return t;
}

Rational RatMatrix::determinant() const {
    if (n_ == 0) {
        throw DimensionMismatch("determinant of a dimension-free scalar matrix");
    }
    std::vector<Rational> a = e_;
    const int n = n_;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[static_cast<std::size_t>(pivot) * n + col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational();
        }
        if (pivot != col) {
            for (int k = 0; k < n; ++k) {
                std::swap(a[static_cast<std::size_t>(pivot) * n + k], a[static_cast<std::size_t>(col) * n + k]);
            }
            det = -det;
        }
        const Rational p = a[static_cast<std::size_t>(col) * n + col];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const Rational f = a[static_cast<std::size_t>(r) * n + col] / p;
            if (f.is_zero()) {
                continue;
            }
            for (int k = col; k < n; ++k) {
                a[static_cast<std::size_t>(r) * n + k] -= f * a[static_cast<std::size_t>(col) * n + k];
            }
        }
    }
    return det;
}

Rational RatMatrix::max_abs_entry() const {
    Rational m;
    for (const auto& x : e_) {
        m = std::max(m, x.abs());
    }
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    const int n = RatMatrix::common_dim(a, b);
    if (n == 0) {
        return RatMatrix::scalar(a.e_[0] + b.e_[0]);
    }
    RatMatrix x = a.expanded(n);
    const RatMatrix y = b.expanded(n);
    for (std::size_t k = 0; k < x.e_.size(); ++k) {
        x.e_[k] += y.e_[k];
    }
    return x;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix r = a;
    for (auto& x : r.e_) {
        x = -x;
    }
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const Rational& r, const RatMatrix& a) {
    RatMatrix out = a;
    for (auto& x : out.e_) {
        x *= r;
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    const int n = RatMatrix::common_dim(a, b);
    if (a.n_ == 0) {
        return a.e_[0] * b;
    }
    if (b.n_ == 0) {
        return b.e_[0] * a;
    }
    RatMatrix c = RatMatrix::zeros(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.e_[static_cast<std::size_t>(i) * n + k];
            if (aik.is_zero()) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                c.e_[static_cast<std::size_t>(i) * n + j] += aik * b.e_[static_cast<std::size_t>(k) * n + j];
            }
        }
    }
    return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ == b.n_) {
        return a.e_ == b.e_;
    }
    if (a.n_ != 0 && b.n_ != 0) {
        return false;
    }
    const int n = std::max(a.n_, b.n_);
    return a.expanded(n).e_ == b.expanded(n).e_;
}

std::vector<std::vector<std::string>> RatMatrix::to_strings(int n) const {
    const RatMatrix full = expanded(n_ != 0 ? n_ : std::max(n, 1));
    std::vector<std::vector<std::string>> rows(full.n_);
    for (int i = 0; i < full.n_; ++i) {
        for (int j = 0; j < full.n_; ++j) {
            rows[i].push_back(full.at(i, j).to_string());
        }
    }
    return rows;
}

std::string RatMatrix::to_string() const {
    if (n_ == 0) {
        return e_[0].to_string() + "*I";
    }
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) {
            os << (j ? ", " : "") << at(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.is_scalar()) {
        if (m.at(0, 0).is_zero()) {
            throw Singular("singular matrix");
        }
        return RatMatrix::scalar(m.at(0, 0).inverse());
    }
    const int n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = m.at(i, j);
        }
        a[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw Singular("singular matrix");
        }
        std::swap(a[pivot], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) {
            x /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) {
                continue;
            }
            const Rational f = a[r][col];
            for (int k = 0; k < 2 * n; ++k) {
                a[r][k] -= f * a[col][k];
            }
        }
    }
    std::vector<std::vector<Rational>> inv(n);
    for (int i = 0; i < n; ++i) {
        inv[i].assign(a[i].begin() + n, a[i].end());
    }
    return RatMatrix::from_rows(inv);
}

RatMatrix mat_random(int n, std::uint64_t seed, int bound) {
    if (n < 1 || bound < 0) {
        throw ValidationError("mat_random needs n >= 1 and bound >= 0");
    }
    std::mt19937_64 gen(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n * n; ++k) {
        e.emplace_back(static_cast<long>(gen() % span) - bound);
    }
    return RatMatrix(n, std::move(e));
}

} // namespace qlax
