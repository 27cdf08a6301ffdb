#include "cdvwall/integer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdvwall {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

Integer gcd(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const IntVec& a, const Integer& k) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

IntVec negate(const IntVec& a) { return scale(a, -1); }

Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec divide_exact(const IntVec& a, const Integer& d) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] % d != 0) throw std::domain_error("divide_exact: " + to_string(a) + " not divisible");
        r[i] = a[i] / d;
    }
    return r;
}

IntVec primitive(const IntVec& v) {
    Integer g = gcd(v);
    if (g == 0) throw std::domain_error("primitive: zero vector");
    return divide_exact(v, g);
}

IntVec sign_normalized_primitive(const IntVec& v) {
    IntVec p = primitive(v);
    for (const auto& x : p) {
        if (x == 0) continue;
        if (x < 0) p = negate(p);
        break;
    }
    return p;
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

IntVec ray_primitive(const RatVec& v) {
    Integer l = 1;
    for (const auto& q : v) {
        Integer d = denominator(q);
        l = l / gcd(l, d) * d;
    }
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = numerator(Rational(v[i] * l));
    return primitive(r);
}

RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

bool is_integer_multiple(const IntVec& v, const IntVec& u, Integer* k) {
    if (is_zero(u)) {
        if (k) *k = 0;
        return is_zero(v);
    }
    std::size_t p = 0;
    while (u[p] == 0) ++p;
    if (v[p] % u[p] != 0) return false;
    Integer m = v[p] / u[p];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (v[i] != m * u[i]) return false;
    if (k) *k = m;
    return true;
}

bool colinear(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

IntVec from_ints(const std::vector<long long>& v) {
    IntVec r;
    r.reserve(v.size());
    for (long long x : v) r.emplace_back(x);
    return r;
}

std::vector<long long> to_ints(const IntVec& v) {
    std::vector<long long> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.convert_to<long long>());
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
    std::size_t r = cols.empty() ? 0 : cols.front().size();
    IntMatrix m(r, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < r; ++i) m(i, c) = cols[c][i];
    return m;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

IntVec IntMatrix::row(std::size_t r) const {
    return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    IntVec r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
}

// fraction-free Bareiss elimination
Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return s * m(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    Integer d = determinant();
    return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
    if (!is_unimodular()) throw std::domain_error("inverse: matrix is not unimodular");
    std::size_t n = rows_;
    IntMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RatVec e(n, Rational(0));
        e[c] = 1;
        RatVec x = solve(*this, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, c) = numerator(x[i]);
    }
    return inv;
}

std::size_t IntMatrix::rank() const {
    std::vector<RatVec> m(rows_, RatVec(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[i][j] = Rational((*this)(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m[p][c] == 0) ++p;
        if (p == rows_) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

RatVec solve(const IntMatrix& a, const RatVec& b) {
    std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("solve: singular matrix");
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

// signed maximal minors give the kernel of a corank-one matrix
IntVec kernel_ray(const IntMatrix& a) {
    std::size_t n = a.cols();
    if (a.rows() + 1 != n) throw std::invalid_argument("kernel_ray: expected (n-1) x n matrix");
    IntVec k(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i, cc++) = a(i, c);
            }
        Integer d = minor.determinant();
        k[j] = (j % 2 == 0) ? d : Integer(-d);
    }
    if (is_zero(k)) throw std::domain_error("kernel_ray: matrix rank is deficient");
    return primitive(k);
}

}  // namespace cdvwall
