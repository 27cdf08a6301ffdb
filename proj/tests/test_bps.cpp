#include "cdvwall/bps.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cdvwall;

namespace {

DynkinType d4(NodeSet j) { return DynkinType(build_diagram(Family::D, 4, true), std::move(j)); }

bool nonneg(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

const Generator& find(const std::vector<Generator>& gens, const std::string& name) {
    for (const auto& g : gens)
        if (g.name == name) return g;
    throw std::runtime_error("no generator " + name);
}

}  // namespace

TEST(Classes, RoundTrip) {
    DynkinType t = d4({1});
    CurveClass c{3, from_ints({-1, 2, 0})};
    IntVec delta = associated_vector(t, c);
    EXPECT_EQ(delta, add(from_ints({0, -1, 2, 0}), scale(t.restricted_imaginary(), 3)));
    EXPECT_EQ(class_of(t, delta), c);
}

TEST(Vanishing, ImaginaryRootIsACandidate) {
    DynkinType t = d4({1, 3});
    Verdict v = vanishing_verdict(t, t.restricted_imaginary());
    EXPECT_FALSE(v.forced_zero());
    EXPECT_EQ(v.candidate, CandidateKind::Imaginary);
    EXPECT_EQ(v.d, 1);
    EXPECT_EQ(v.paper_ref, "bps-vanishing");
}

TEST(Vanishing, NonRootIsForcedZero) {
    DynkinType t = d4({});
    RestrictedRootIndex index(t);
    // 2 alpha_1 + alpha_2: gcd 1, norm 6, so not a root
    IntVec delta = from_ints({0, 2, 1, 0, 0});
    ASSERT_FALSE(index.contains(delta));
    Verdict v = vanishing_verdict(index, delta);
    EXPECT_TRUE(v.forced_zero());
    EXPECT_EQ(v.paper_ref, "bps-vanishing");
}

TEST(Vanishing, MultipleOfARootUsesTheBase) {
    DynkinType t = d4({});
    Verdict v = vanishing_verdict(t, from_ints({0, 2, 2, 0, 0}));
    EXPECT_FALSE(v.forced_zero());
    EXPECT_EQ(v.d, 2);
    EXPECT_EQ(v.base, from_ints({0, 1, 1, 0, 0}));
}

TEST(Vanishing, WeightedHomogeneousAlsoLabelsTheGlobalInvariant) {
    DynkinType t = d4({1});
    IntVec delta = from_ints({1, 1, 0, 0});
    Verdict a = vanishing_verdict(t, delta, false), b = vanishing_verdict(t, delta, true);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_FALSE(a.global);
    EXPECT_TRUE(b.global);
}

TEST(Vanishing, RejectsBadInput) {
    DynkinType t = d4({1});
    EXPECT_THROW(vanishing_verdict(t, from_ints({0, 0, 0, 0})), std::invalid_argument);
    EXPECT_THROW(vanishing_verdict(t, from_ints({1, -1, 0, 0})), std::invalid_argument);
}

TEST(Geometric, PointClassIsImaginary) {
    DynkinType fin(build_diagram(Family::D, 4, false), {1});
    Verdict v = geometric_verdict(fin, {1, from_ints({0, 0, 0})});
    EXPECT_FALSE(v.forced_zero());
    EXPECT_EQ(v.candidate, CandidateKind::Imaginary);
    EXPECT_EQ(v.paper_ref, "geometric-vanishing");
}

TEST(Geometric, NonRootDirectionIsForcedZero) {
    DynkinType fin(build_diagram(Family::D, 4, false), {1});
    RestrictedRootIndex index(fin);
    IntVec beta = from_ints({1, 2, 0});
    ASSERT_FALSE(index.contains(beta));
    Verdict v = geometric_verdict(fin, {1, beta});
    EXPECT_TRUE(v.forced_zero());
    // the genus zero invariant of an effective non-root class vanishes too
    EXPECT_TRUE(gv_verdict(fin, beta).forced_zero());
    EXPECT_EQ(gv_verdict(fin, beta).paper_ref, "gv-vanishing");
}

TEST(Geometric, AgreesWithTheAffineVerdict) {
    DynkinType fin(build_diagram(Family::D, 5, false), {2, 4});
    DynkinType aff = affine_of(fin);
    RestrictedRootIndex index(aff);
    for (long long chi = 0; chi <= 3; ++chi)
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b)
                for (long long c = -2; c <= 2; ++c) {
                    CurveClass cls{chi, from_ints({a, b, c})};
                    IntVec delta = associated_vector(aff, cls);
                    if (is_zero(delta) || !nonneg(delta)) continue;
                    EXPECT_EQ(geometric_verdict(fin, cls).forced_zero(), vanishing_verdict(index, delta).forced_zero())
                        << to_string(cls);
                }
}

TEST(Generators, Twist) {
    DynkinType t = d4({1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.numeric_relations = false;
    auto gens = symmetry_generators(t, cfg);
    const Generator& twist = find(gens, "twist");
    EXPECT_EQ(twist.paper_ref, "bps-twist");
    EXPECT_EQ(twist.strength, Strength::Motivic);
    CurveClass c{1, from_ints({2, 0, 4})};
    auto app = twist.apply(c);
    ASSERT_TRUE(app);
    EXPECT_EQ(app->image, (CurveClass{3, from_ints({2, 0, 4})}));
}

TEST(Generators, DualityPicksTheSmallestN) {
    DynkinType t = d4({1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    auto gens = symmetry_generators(t, cfg);
    const Generator& dual = find(gens, "duality");
    EXPECT_EQ(dual.paper_ref, "bps-duality");
    for (long long chi = 0; chi <= 4; ++chi)
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b) {
                CurveClass c{chi, from_ints({a, b, 1})};
                if (!nonneg(associated_vector(t, c))) continue;
                auto app = dual.apply(c);
                ASSERT_TRUE(app);
                Integer d = beta_multiplicity(c);
                long long n = 0;
                while (!nonneg(associated_vector(t, {n * d - chi, negate(c.beta)}))) ++n;
                EXPECT_EQ(app->n, n);
                EXPECT_EQ(app->image, (CurveClass{n * d - chi, negate(c.beta)}));
            }
}

TEST(Generators, MutationOutsideItsDomain) {
    DynkinType t = d4({1});
    SymmetryConfig cfg;
    cfg.non_flop = {3};
    auto gens = symmetry_generators(t, cfg);
    const Generator& mut = find(gens, "mutation[3]");
    EXPECT_EQ(mut.strength, Strength::Numeric);
    // delta colinear with alpha_3
    EXPECT_FALSE(mut.apply(class_of(t, t.simple_restricted(3))));
    // delta on the imaginary line
    EXPECT_FALSE(mut.apply(class_of(t, t.restricted_imaginary())));
}

TEST(Generators, InadmissibleNonFlopNodeIsRejected) {
    SymmetryConfig cfg;
    cfg.non_flop = {2};
    EXPECT_THROW(symmetry_generators(d4({1}), cfg), std::invalid_argument);
    cfg.non_flop = {1};
    EXPECT_THROW(symmetry_generators(d4({1}), cfg), std::invalid_argument);
}

TEST(Generators, PreserveGcdAndVerdict) {
    DynkinType t = d4({});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.non_flop = {0, 1, 2, 3, 4};
    cfg.window = {4, 2};
    auto gens = symmetry_generators(t, cfg);
    RestrictedRootIndex index(t);
    for (const auto& c : window_classes(t, cfg.window))
        for (const auto& g : gens) {
            auto app = g.apply(c);
            if (!app) continue;
            IntVec a = associated_vector(t, c), b = associated_vector(t, app->image);
            ASSERT_TRUE(nonneg(b)) << g.name;
            EXPECT_EQ(vanishing_verdict(index, a).forced_zero(), vanishing_verdict(index, b).forced_zero())
                << g.name << " " << to_string(c);
            EXPECT_EQ(gcd(a), gcd(b)) << g.name;
        }
}

TEST(Orbits, NoGeneratorsGiveSingletons) {
    SymmetryConfig cfg;
    cfg.numeric_relations = false;
    cfg.window = {3, 2};
    DynkinType t = d4({1});
    auto p = orbit_partition(t, cfg);
    EXPECT_EQ(p.orbits.size(), p.classes);
    EXPECT_EQ(p.edges, 0u);
}

TEST(Orbits, TwistShiftsChiByTheBetaMultiplicity) {
    DynkinType t = d4({1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.numeric_relations = false;
    cfg.window = {6, 2};
    const Generator& twist = find(symmetry_generators(t, cfg), "twist");
    for (const auto& c : window_classes(t, cfg.window)) {
        auto app = twist.apply(c);
        if (!app) continue;
        Integer d = beta_multiplicity(c);
        EXPECT_EQ(app->image.chi - c.chi, d);
        EXPECT_EQ(app->image.beta, c.beta);
    }
}

TEST(Orbits, RepresentativeIsTheSmallestMember) {
    DynkinType t = d4({1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.non_flop = {0, 3, 4};
    cfg.window = {4, 2};
    auto p = orbit_partition(t, cfg);
    std::size_t members = 0;
    for (const auto& o : p.orbits) {
        members += o.members.size();
        EXPECT_EQ(o.representative, *std::min_element(o.members.begin(), o.members.end()));
        EXPECT_EQ(o.chain.size() + 1, o.members.size());
        EXPECT_TRUE(o.verdict_constant);
        for (const auto& c : o.chain) {
            EXPECT_FALSE(c.paper_ref.empty());
            EXPECT_EQ(c.n >= 0, c.generator == "duality");
        }
    }
    EXPECT_EQ(members, p.classes);
    EXPECT_EQ(p.incompatible_edges, 0u);
}

TEST(GvTransport, OrthogonalRootIsFixed) {
    // D5 with J = {}: alpha_1 is orthogonal to alpha_3
    DynkinType fin(build_diagram(Family::D, 5, false), {});
    GvTransport g = gv_transport(fin, fin.simple_restricted(1), 3, false);
    EXPECT_EQ(g.image, fin.simple_restricted(1));
    EXPECT_EQ(g.target, "same space");
    EXPECT_EQ(g.paper_ref, "gv-mutation");
}

TEST(GvTransport, ColinearClassIsRejected) {
    DynkinType fin(build_diagram(Family::D, 4, false), {1});
    EXPECT_THROW(gv_transport(fin, scale(fin.simple_restricted(3), 2), 3, true), std::invalid_argument);
}

TEST(GvTransport, ImageIsARestrictedRootOfTheTarget) {
    DynkinType fin(build_diagram(Family::E, 6, false), {2, 4});
    for (const auto& [v, r] : restricted_roots(fin).elements) {
        if (!r.positive || !nonneg(v)) continue;
        for (int i : fin.kept()) {
            if (colinear(v, fin.simple_restricted(i))) continue;
            GvTransport g = gv_transport(fin, v, i, true);
            EXPECT_EQ(g.target, "flopped space");
            EXPECT_TRUE(restricted_roots(DynkinType(fin.diagram(), g.target_subset)).contains(g.image));
            EXPECT_TRUE(g.in_target_rr);
        }
    }
}
