#include "cdvwall/dynkin.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cdvwall;
using cdvwall::testing::box_positive_roots;
using cdvwall::testing::Ints;

TEST(Diagram, FiniteA3IsAPath) {
    auto d = build_diagram(Family::A, 3, false);
    EXPECT_EQ(d->size(), 3u);
    EXPECT_EQ(d->edges().size(), 2u);
    EXPECT_EQ(d->degree(2), 2);
}

TEST(Diagram, AffineD4IsAStar) {
    auto d = build_diagram(Family::D, 4, true);
    EXPECT_EQ(d->size(), 5u);
    EXPECT_EQ(d->degree(2), 4);
    for (int leaf : {0, 1, 3, 4}) EXPECT_EQ(d->degree(leaf), 1);
}

TEST(Diagram, AffineE8ExtendsTheLongArm) {
    auto d = build_diagram(Family::E, 8, true);
    EXPECT_EQ(d->size(), 9u);
    EXPECT_EQ(d->degree(0), 1);
    // node 0 hangs off the end of the longest arm of the tree
    int neighbour = -1;
    for (const auto& e : d->edges())
        if (e.a == 0 || e.b == 0) neighbour = e.a == 0 ? e.b : e.a;
    ASSERT_NE(neighbour, -1);
    EXPECT_EQ(d->degree(neighbour), 2);
}

TEST(Diagram, CartanIsSymmetricWithTwoOnTheDiagonal) {
    for (Family f : {Family::A, Family::D, Family::E})
        for (int n = 1; n <= 8; ++n) {
            if ((f == Family::D && n < 4) || (f == Family::E && n < 6)) continue;
            for (bool aff : {false, true}) {
                auto d = build_diagram(f, n, aff);
                const auto& a = d->cartan();
                for (std::size_t i = 0; i < a.rows(); ++i) {
                    EXPECT_EQ(a(i, i), 2);
                    for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_EQ(a(i, j), a(j, i));
                }
            }
        }
}

TEST(Diagram, RejectsUnsupportedRanks) {
    EXPECT_THROW(build_diagram(Family::D, 3, false), std::invalid_argument);
    EXPECT_THROW(build_diagram(Family::E, 9, false), std::invalid_argument);
    EXPECT_THROW(build_diagram(Family::A, 0, false), std::invalid_argument);
    EXPECT_THROW(parse_family("F"), std::invalid_argument);
}

TEST(Roots, A2HasThreePositiveRoots) {
    auto rs = enumerate_roots(build_diagram(Family::A, 2, false));
    std::set<IntVec> want{from_ints({1, 0}), from_ints({0, 1}), from_ints({1, 1})};
    EXPECT_EQ(std::set<IntVec>(rs.positive_roots.begin(), rs.positive_roots.end()), want);
    EXPECT_EQ(rs.positive_roots.size(), 3u);
}

TEST(Roots, D5HighestRootMatchesBoxSearch) {
    auto d = build_diagram(Family::D, 5, false);
    auto rs = enumerate_roots(d);
    auto box = box_positive_roots(d->cartan(), 3);
    EXPECT_EQ(rs.positive_roots.size(), box.size());
    // the highest root is the unique box root of maximal height
    Ints best;
    for (const auto& v : box)
        if (best.empty() || std::accumulate(v.begin(), v.end(), 0LL) > std::accumulate(best.begin(), best.end(), 0LL))
            best = v;
    EXPECT_EQ(rs.highest_root, from_ints(best));
    EXPECT_EQ(rs.highest_root, from_ints({1, 2, 2, 1, 1}));
}

TEST(Roots, PositiveCountsAgreeWithNormTwoVectors) {
    struct Case {
        Family f;
        int n;
        long long bound;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 8; ++n) cases.push_back({Family::A, n, 1});
    for (int n = 4; n <= 8; ++n) cases.push_back({Family::D, n, 2});
    cases.push_back({Family::E, 6, 3});
    cases.push_back({Family::E, 7, 4});
    for (const auto& c : cases) {
        auto d = build_diagram(c.f, c.n, false);
        auto rs = enumerate_roots(d);
        auto box = box_positive_roots(d->cartan(), c.bound);
        std::set<IntVec> got(rs.positive_roots.begin(), rs.positive_roots.end());
        std::set<IntVec> want;
        for (const auto& v : box) want.insert(from_ints(v));
        EXPECT_EQ(got, want) << d->name();
    }
}

TEST(Roots, CountFormulas) {
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(enumerate_roots(build_diagram(Family::A, n, false)).positive_roots.size(),
                  static_cast<std::size_t>(n * (n + 1) / 2));
    for (int n = 4; n <= 8; ++n)
        EXPECT_EQ(enumerate_roots(build_diagram(Family::D, n, false)).positive_roots.size(),
                  static_cast<std::size_t>(n * (n - 1)));
    EXPECT_EQ(enumerate_roots(build_diagram(Family::E, 6, false)).positive_roots.size(), 36u);
    EXPECT_EQ(enumerate_roots(build_diagram(Family::E, 7, false)).positive_roots.size(), 63u);
    EXPECT_EQ(enumerate_roots(build_diagram(Family::E, 8, false)).positive_roots.size(), 120u);
}

TEST(Roots, ClosedUnderSimpleReflections) {
    for (auto [f, n] : {std::pair{Family::D, 6}, std::pair{Family::E, 7}}) {
        auto rs = enumerate_roots(build_diagram(f, n, false));
        auto all = rs.all_roots();
        std::set<IntVec> s(all.begin(), all.end());
        for (const auto& r : all)
            for (std::size_t i = 0; i < rs.cartan.rows(); ++i) EXPECT_TRUE(s.count(reflect(rs.cartan, r, i)));
    }
}

TEST(Roots, OrderedByHeightThenLex) {
    auto rs = enumerate_roots(build_diagram(Family::E, 6, false));
    for (std::size_t k = 1; k < rs.positive_roots.size(); ++k) {
        const auto& a = rs.positive_roots[k - 1];
        const auto& b = rs.positive_roots[k];
        EXPECT_TRUE(height(a) < height(b) || (height(a) == height(b) && a < b));
    }
}

TEST(Imaginary, A1Affine) { EXPECT_EQ(imaginary_root(*build_diagram(Family::A, 1, true)), from_ints({1, 1})); }

TEST(Imaginary, D4AffineMatchesHighestRoot) {
    auto d = build_diagram(Family::D, 4, true);
    IntVec rim = imaginary_root(*d);
    EXPECT_EQ(rim, from_ints({1, 1, 2, 1, 1}));
    IntVec top = enumerate_roots(finite_part(*d)).highest_root;
    for (std::size_t i = 0; i < top.size(); ++i) EXPECT_EQ(rim[i + 1], top[i]);
}

TEST(Imaginary, E6AffineHasHeightTwelve) {
    IntVec rim = imaginary_root(*build_diagram(Family::E, 6, true));
    EXPECT_EQ(rim[0], 1);
    EXPECT_EQ(height(rim), 12);
}

TEST(Imaginary, InKernelOfCartan) {
    for (auto [f, n] : {std::pair{Family::A, 5}, std::pair{Family::D, 7}, std::pair{Family::E, 8}}) {
        auto d = build_diagram(f, n, true);
        EXPECT_TRUE(is_zero(d->cartan() * imaginary_root(*d))) << d->name();
    }
}

TEST(Imaginary, RejectsFiniteInput) {
    EXPECT_THROW(imaginary_root(*build_diagram(Family::A, 3, false)), std::invalid_argument);
}

TEST(RealWindow, LevelZeroIsTheFiniteRoots) {
    auto d = build_diagram(Family::D, 5, true);
    auto w = real_roots_window(*d, 0);
    EXPECT_EQ(w.size(), 40u);
    for (const auto& r : w) EXPECT_EQ(r.level, 0);
}

TEST(RealWindow, Counts) {
    EXPECT_EQ(real_roots_window(*build_diagram(Family::A, 1, true), 1).size(), 6u);
    EXPECT_EQ(real_roots_window(*build_diagram(Family::D, 4, true), 2).size(), 120u);
}

TEST(RealWindow, TranslationAgreesWithReflectionClosure) {
    for (auto [f, n] : {std::pair{Family::A, 3}, std::pair{Family::D, 5}, std::pair{Family::E, 6}}) {
        auto d = build_diagram(f, n, true);
        IntVec rim = imaginary_root(*d);
        std::set<IntVec> a, b;
        for (const auto& r : real_roots_window(*d, 2)) a.insert(affine_vector(r, rim));
        for (const auto& r : affine_real_roots_closure(*d, 2)) b.insert(r);
        EXPECT_EQ(a, b) << d->name();
    }
}
