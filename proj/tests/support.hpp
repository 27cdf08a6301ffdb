#pragma once

// Brute-force helpers shared by the unit tests.  They use only the Cartan
// matrix and plain integers so that expected values do not come from the
// code under test.

#include "cdvwall/dynkin.hpp"
#include "cdvwall/restriction.hpp"

#include <set>
#include <vector>

namespace cdvwall::testing {

using Ints = std::vector<long long>;

inline long long norm(const IntMatrix& a, const Ints& v) {
    long long q = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) q += v[i] * static_cast<long long>(a(i, j)) * v[j];
    return q;
}

// every nonzero v with 0 <= v_i <= bound and v^T A v = 2; for a finite
// simply laced Cartan matrix these are exactly the positive roots once bound
// exceeds the largest coefficient of the highest root
inline std::set<Ints> box_positive_roots(const IntMatrix& a, long long bound) {
    std::set<Ints> out;
    Ints v(a.rows(), 0);
    while (true) {
        std::size_t k = v.size();
        while (k > 0 && v[k - 1] == bound) v[--k] = 0;
        if (k == 0) break;
        ++v[k - 1];
        if (norm(a, v) == 2) out.insert(v);
    }
    return out;
}

inline std::set<Ints> box_roots(const IntMatrix& a, long long bound) {
    std::set<Ints> out = box_positive_roots(a, bound);
    std::set<Ints> neg;
    for (auto v : out) {
        for (auto& x : v) x = -x;
        neg.insert(v);
    }
    out.insert(neg.begin(), neg.end());
    return out;
}

inline Ints keep(const Ints& v, const std::vector<std::size_t>& idx) {
    Ints out;
    for (auto i : idx) out.push_back(v[i]);
    return out;
}

// nonzero projections of the finite roots onto the kept coordinates
inline std::set<Ints> box_restricted(const Diagram& finite, const NodeSet& contracted, long long bound = 6) {
    std::vector<std::size_t> idx;
    for (int n : finite.nodes())
        if (!contains(contracted, n)) idx.push_back(finite.index(n));
    std::set<Ints> out;
    for (const auto& r : box_roots(finite.cartan(), bound)) {
        Ints p = keep(r, idx);
        bool zero = true;
        for (auto x : p) zero = zero && x == 0;
        if (!zero) out.insert(p);
    }
    return out;
}

inline long long gcd_of(const Ints& v) {
    long long g = 0;
    for (auto x : v) {
        long long a = x < 0 ? -x : x;
        while (a) {
            long long t = g % a;
            g = a;
            a = t;
        }
    }
    return g;
}

}  // namespace cdvwall::testing
