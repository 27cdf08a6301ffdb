#include "cdvwall/weyl.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <set>

using namespace cdvwall;

namespace {

WeylElement power(const WeylElement& w, int k) {
    WeylElement out = identity(w.diagram());
    for (int i = 0; i < k; ++i) out = multiply(out, w);
    return out;
}

// all elements by breadth-first search on words, keyed by matrix
std::vector<WeylElement> all_elements(const DiagramPtr& d) {
    std::set<IntMatrix> seen;
    std::vector<WeylElement> out{identity(d)};
    seen.insert(out.front().matrix());
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int n : d->nodes()) {
            WeylElement w = times_reflection(out[head], n);
            if (seen.insert(w.matrix()).second) out.push_back(w);
        }
    return out;
}

}  // namespace

TEST(Reflection, IsAnInvolution) {
    auto d = build_diagram(Family::E, 6, true);
    for (int n : d->nodes()) {
        WeylElement s = simple_reflection(d, n);
        EXPECT_TRUE(multiply(s, s).is_identity());
        EXPECT_EQ(cdvwall::apply(s, d->simple_root(n)), negate(d->simple_root(n)));
    }
}

TEST(Reflection, A2BraidHasOrderThree) {
    auto d = build_diagram(Family::A, 2, false);
    WeylElement w = multiply(simple_reflection(d, 1), simple_reflection(d, 2));
    EXPECT_FALSE(power(w, 1).is_identity());
    EXPECT_FALSE(power(w, 2).is_identity());
    EXPECT_TRUE(power(w, 3).is_identity());
}

TEST(Reflection, CoxeterRelations) {
    auto d = build_diagram(Family::D, 5, true);
    for (int i : d->nodes())
        for (int j : d->nodes()) {
            if (i >= j) continue;
            WeylElement w = multiply(simple_reflection(d, i), simple_reflection(d, j));
            Integer a = d->cartan()(d->index(i), d->index(j));
            int order = a == 0 ? 2 : 3;
            EXPECT_TRUE(power(w, order).is_identity()) << i << "," << j;
            EXPECT_FALSE(power(w, order - 1).is_identity()) << i << "," << j;
        }
}

TEST(Action, IdentityActsTrivially) {
    auto d = build_diagram(Family::D, 4, false);
    IntVec v = from_ints({3, -1, 4, 1});
    EXPECT_EQ(cdvwall::apply(identity(d), v), v);
}

TEST(Action, DualPairingIsInvariant) {
    auto d = build_diagram(Family::E, 7, false);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> word;
        for (int k = 0; k < 12; ++k) word.push_back(static_cast<int>(rng() % 7) + 1);
        WeylElement w = from_word(d, word);
        IntVec v(7);
        RatVec theta(7);
        for (std::size_t i = 0; i < 7; ++i) {
            v[i] = static_cast<long long>(rng() % 9) - 4;
            theta[i] = Rational(static_cast<long long>(rng() % 11) - 5) / Rational(static_cast<long long>(rng() % 4) + 1);
        }
        EXPECT_EQ(dot(apply_dual(w, theta), cdvwall::apply(w, v)), dot(theta, v));
    }
}

TEST(Action, AffineElementsFixTheImaginaryRoot) {
    auto d = build_diagram(Family::D, 6, true);
    IntVec rim = imaginary_root(*d);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> word;
        for (int k = 0; k < 15; ++k) word.push_back(static_cast<int>(rng() % 7));
        EXPECT_EQ(cdvwall::apply(from_word(d, word), rim), rim);
    }
}

TEST(Length, ChangesByOneAndFollowsDescents) {
    auto d = build_diagram(Family::A, 3, true);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> word;
        for (int k = 0; k < 8; ++k) word.push_back(static_cast<int>(rng() % 4));
        WeylElement w = from_word(d, word);
        for (int n : d->nodes()) {
            WeylElement ws = times_reflection(w, n);
            bool up = is_positive(w.image_of_simple(n));
            EXPECT_EQ(ws.length(), up ? w.length() + 1 : w.length() - 1);
            EXPECT_EQ(w.has_descent(n), !up);
        }
    }
}

TEST(Longest, SingleNode) {
    auto d = build_diagram(Family::E, 6, false);
    WeylElement w = longest_element(d, {3});
    EXPECT_EQ(w, simple_reflection(d, 3));
    EXPECT_EQ(w.length(), 1u);
}

TEST(Longest, A2HasLengthThree) {
    auto d = build_diagram(Family::A, 4, false);
    EXPECT_EQ(longest_element(d, {2, 3}).length(), 3u);
}

TEST(Longest, D4HasLengthTwelve) {
    auto d = build_diagram(Family::D, 4, true);
    NodeSet s{1, 2, 3, 4};
    WeylElement w = longest_element(d, s);
    EXPECT_EQ(w.length(), 12u);
    // -w0 permutes the simple roots of S
    std::set<IntVec> simple, image;
    for (int n : s) {
        simple.insert(d->simple_root(n));
        image.insert(negate(cdvwall::apply(w, d->simple_root(n))));
    }
    EXPECT_EQ(simple, image);
}

TEST(Longest, SendsPositiveRootsOfSToNegative) {
    auto d = build_diagram(Family::E, 7, true);
    NodeSet s{0, 1, 3, 4};
    WeylElement w = longest_element(d, s);
    for (int n : s) EXPECT_TRUE(is_negative(cdvwall::apply(w, d->simple_root(n))));
}

TEST(Longest, MatchesBruteForceMaximum) {
    auto d = build_diagram(Family::A, 3, false);
    std::size_t best = 0;
    for (const auto& w : all_elements(d)) best = std::max(best, w.length());
    EXPECT_EQ(longest_element(d, {1, 2, 3}).length(), best);
}

TEST(CosetMinimal, ElementsOfTheSubgroup) {
    auto d = build_diagram(Family::D, 5, false);
    NodeSet s{2, 3, 4};
    EXPECT_TRUE(coset_minimal(longest_element(d, s), s).is_identity());
    EXPECT_TRUE(coset_minimal(from_word(d, {3, 2, 4}), s).is_identity());
}

TEST(CosetMinimal, BruteForceOverA3) {
    auto d = build_diagram(Family::A, 3, false);
    auto all = all_elements(d);
    ASSERT_EQ(all.size(), 24u);
    NodeSet s{1};
    WeylElement s1 = simple_reflection(d, 1);
    for (const auto& w : all) {
        WeylElement m = coset_minimal(w, s);
        // the coset {w, w s1}; the minimal one is the shorter
        WeylElement other = multiply(w, s1);
        const WeylElement& want = w.length() < other.length() ? w : other;
        EXPECT_EQ(m, want);
        EXPECT_FALSE(m.has_descent(1));
    }
}

TEST(GroupOrder, TypeAIsFactorial) {
    std::size_t f = 1;
    for (int n = 1; n <= 5; ++n) {
        f *= static_cast<std::size_t>(n + 1);
        auto d = build_diagram(Family::A, n, false);
        NodeSet all(d->nodes().begin(), d->nodes().end());
        EXPECT_EQ(group_order(d, all), f);
    }
}

TEST(GroupOrder, D4) {
    auto d = build_diagram(Family::D, 4, false);
    EXPECT_EQ(group_order(d, {1, 2, 3, 4}), 192u);
    EXPECT_EQ(all_elements(d).size(), 192u);
}
