#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cdvwall {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

Integer gcd(const Integer& a, const Integer& b);
// gcd of absolute values; 0 only for the zero vector
Integer gcd(const IntVec& v);

bool is_zero(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Integer& k);
IntVec negate(const IntVec& a);
Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const IntVec& b);
IntVec divide_exact(const IntVec& a, const Integer& d);

// divide by gcd, then flip so that the first nonzero entry is positive
IntVec primitive(const IntVec& v);
IntVec sign_normalized_primitive(const IntVec& v);
int sign(const Integer& x);
int sign(const Rational& x);

// clears denominators, returns the primitive integer vector on the same ray
IntVec ray_primitive(const RatVec& v);
RatVec to_rational(const IntVec& v);

// v = k*u for some integer k; k written to *k when non-null
bool is_integer_multiple(const IntVec& v, const IntVec& u, Integer* k = nullptr);
bool colinear(const IntVec& a, const IntVec& b);

std::string to_string(const IntVec& v);
std::string to_string(const Rational& q);
IntVec from_ints(const std::vector<long long>& v);
std::vector<long long> to_ints(const IntVec& v);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec column(std::size_t c) const;
    IntVec row(std::size_t r) const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& o) const = default;
    bool operator<(const IntMatrix& o) const;

    Integer determinant() const;
    bool is_unimodular() const;
    // exact inverse; throws std::domain_error unless unimodular
    IntMatrix inverse() const;
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// rational solve A x = b for square nonsingular A
RatVec solve(const IntMatrix& a, const RatVec& b);
// generator of the kernel of a (n-1) x n integer matrix of full rank
IntVec kernel_ray(const IntMatrix& a);

}  // namespace cdvwall
