#include "cdvwall/dihedral.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cdvwall;
using cdvwall::testing::box_restricted;
using cdvwall::testing::box_roots;
using cdvwall::testing::Ints;

namespace {

// 2(alpha_i + ... + alpha_{n-1}) + alpha_n + alpha_{n+1} and negatives, i = 2..n
std::set<Ints> compounds(int n) {
    std::set<Ints> out;
    for (int i = 2; i <= n; ++i) {
        Ints v(n + 1, 0);
        for (int k = i; k <= n - 1; ++k) v[k - 1] = 2;
        v[n - 1] = v[n] = 1;
        out.insert(v);
        for (auto& x : v) x = -x;
        out.insert(v);
    }
    return out;
}

std::set<Ints> as_set(const std::vector<IntVec>& vs) {
    std::set<Ints> out;
    for (const auto& v : vs) out.insert(to_ints(v));
    return out;
}

}  // namespace

TEST(Dihedral, IsomorphismSendsSimpleRootsToSimpleRoots) {
    for (int n = 2; n <= 5; ++n) {
        DihedralCase dc = dihedral_case(n);
        EXPECT_EQ(dc.source.dim(), static_cast<std::size_t>(n + 1));
        std::set<Ints> images;
        for (std::size_t k = 0; k < dc.source.dim(); ++k) {
            IntVec e(dc.source.dim(), 0);
            e[k] = 1;
            IntVec m = dc.map(e);
            EXPECT_EQ(gcd(m), 1);
            EXPECT_EQ(std::count(m.begin(), m.end(), Integer(0)), static_cast<long>(n));
            images.insert(to_ints(m));
        }
        EXPECT_EQ(images.size(), static_cast<std::size_t>(n + 1));
    }
}

TEST(Dihedral, CompoundsMatchTheFormula) {
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(as_set(dihedral_compounds(n)), compounds(n)) << n;
}

TEST(Dihedral, BruteForceRestrictionSplitsIntoRootsAndCompounds) {
    for (int n = 2; n <= 5; ++n) {
        DihedralCase dc = dihedral_case(n);
        std::set<Ints> mapped;
        for (const auto& v : box_restricted(*dc.source.diagram(), dc.source.contracted(), 2))
            mapped.insert(to_ints(dc.map(from_ints(v))));
        std::set<Ints> want = box_roots(dc.target->cartan(), 2);
        std::size_t roots = want.size();
        auto comp = compounds(n);
        for (const auto& c : comp) EXPECT_FALSE(want.count(c)) << "compound is a root";
        want.insert(comp.begin(), comp.end());
        EXPECT_EQ(mapped, want) << n;
        EXPECT_EQ(roots, n == 2 ? 12u : static_cast<std::size_t>(2 * (n + 1) * n)) << n;
    }
}

TEST(Dihedral, ClassifyIsExact) {
    for (int n = 2; n <= 5; ++n) {
        ClassifyReport r = classify_restricted(n);
        EXPECT_TRUE(r.ok()) << n;
        EXPECT_TRUE(r.unclassified.empty());
        DihedralCase dc = dihedral_case(n);
        EXPECT_EQ(as_set(r.roots_part), box_roots(dc.target->cartan(), 2)) << n;
        EXPECT_EQ(as_set(r.compound_part), compounds(n)) << n;
    }
}

TEST(Dihedral, N3HasTwentyFourRootsAndFourCompounds) {
    ClassifyReport r = classify_restricted(3);
    EXPECT_EQ(r.roots_part.size(), 24u);
    EXPECT_EQ(r.compound_part.size(), 4u);
}

TEST(Dihedral, ParityCheck) {
    for (int n = 2; n <= 5; ++n) {
        ParityReport p = mozgovoy_reineke_check(n);
        EXPECT_TRUE(p.displayed_pair) << n;
        EXPECT_TRUE(p.ok()) << n;
        EXPECT_GT(p.odd_roots, 0u);
        EXPECT_GT(p.even_roots, 0u);
    }
}

TEST(Dihedral, VanishingOnTheAffineTarget) {
    for (int n = 2; n <= 4; ++n) {
        PropositionReport p = proposition_check(n, n <= 3 ? 3 : 2);
        EXPECT_TRUE(p.ok()) << n;
        EXPECT_GT(p.checked, p.forced_zero);
        EXPECT_GT(p.forced_zero, 0u);
    }
}

TEST(Dihedral, ImaginaryAndCompoundPlusImaginaryAreCandidates) {
    DihedralCase dc = dihedral_case(3);
    DynkinType t = dc.affine_source;
    IntVec rim = t.restricted_imaginary();
    EXPECT_FALSE(vanishing_verdict(t, rim).forced_zero());
    for (const auto& c : dihedral_compounds(3)) {
        // lift to ~D4 by a zero alpha_0 coefficient, then add r^im
        IntVec lifted(c.size() + 1, 0);
        std::copy(c.begin(), c.end(), lifted.begin() + 1);
        IntVec delta = add(dc.unmap_affine(lifted), rim);
        if (std::any_of(delta.begin(), delta.end(), [](const Integer& x) { return x < 0; })) continue;
        EXPECT_FALSE(vanishing_verdict(t, delta).forced_zero()) << to_string(delta);
    }
}
