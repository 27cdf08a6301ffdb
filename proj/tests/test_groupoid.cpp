#include "cdvwall/groupoid.hpp"

#include <gtest/gtest.h>

using namespace cdvwall;

TEST(MutationStep, EmptySubset) {
    auto d = build_diagram(Family::A, 3, true);
    for (int i : d->nodes()) {
        MutationStep m = mutation_step(d, {}, i);
        EXPECT_EQ(m.omega, simple_reflection(d, i));
        EXPECT_EQ(m.iota_of_node(), i);
        EXPECT_TRUE(m.target.empty());
    }
}

TEST(MutationStep, AdjacentPairSwaps) {
    auto d = build_diagram(Family::A, 4, true);
    MutationStep m = mutation_step(d, {2}, 3);
    EXPECT_EQ(m.iota_of_node(), 2);
    EXPECT_EQ(m.target, (NodeSet{3}));
}

TEST(MutationStep, DisjointPairIsFixed) {
    auto d = build_diagram(Family::A, 4, true);
    MutationStep m = mutation_step(d, {1}, 3);
    EXPECT_EQ(m.iota_of_node(), 3);
    EXPECT_EQ(m.target, (NodeSet{1}));
}

TEST(MutationStep, RejectsContractedNodeAndFullComplement) {
    auto d = build_diagram(Family::D, 4, true);
    EXPECT_THROW(mutation_step(d, {1}, 1), std::invalid_argument);
    EXPECT_THROW(mutation_step(d, {0, 1, 2, 3}, 4), std::invalid_argument);
}

TEST(Arrow, EmptyPath) {
    auto d = build_diagram(Family::A, 2, true);
    GroupoidArrow a = compose_path(d, {}, {});
    EXPECT_TRUE(a.weyl.is_identity());
    EXPECT_EQ(a.length(), 0u);
    EXPECT_EQ(path_to_gallery(DynkinType(d, {}), a).length(), 0u);
}

TEST(Arrow, SingleStepCrossesTheSimpleWall) {
    auto d = build_diagram(Family::D, 4, true);
    DynkinType t(d, {1, 3});
    for (int i : t.kept()) {
        Gallery g = path_to_gallery(t, compose_path(d, {1, 3}, {i}));
        ASSERT_EQ(g.length(), 1u);
        EXPECT_EQ(g.walls[0], make_hyperplane(t.simple_restricted(i)));
    }
}

TEST(Arrow, StepThenReverseIsTheIdentity) {
    auto d = build_diagram(Family::E, 6, true);
    NodeSet j{1, 3};
    for (int i : NodeSet{0, 2, 4, 5, 6}) {
        GroupoidArrow a = compose_path(d, j, {i});
        GroupoidArrow back = compose(a, reverse(a));
        EXPECT_TRUE(back.weyl.is_identity());
        EXPECT_EQ(back.target, j);
    }
}

TEST(Arrow, ComposeRejectsMismatchedEnds) {
    auto d = build_diagram(Family::A, 3, true);
    GroupoidArrow a = compose_path(d, {1}, {2});
    GroupoidArrow b = compose_path(d, {1}, {3});
    ASSERT_NE(a.target, b.source);
    EXPECT_THROW(compose(a, b), std::invalid_argument);
}

TEST(Arrow, GalleryWallsFollowPartialProducts) {
    auto d = build_diagram(Family::A, 2, true);
    DynkinType t(d, {});
    std::vector<int> path{0, 1, 2, 0};
    GroupoidArrow a = compose_path(d, {}, path);
    Gallery g = path_to_gallery(t, a);
    ASSERT_EQ(g.length(), path.size());
    WeylElement w = identity(d);
    for (std::size_t k = 0; k < path.size(); ++k) {
        EXPECT_EQ(g.walls[k], make_hyperplane(t.restrict(cdvwall::apply(w, d->simple_root(path[k])))));
        w = multiply(w, simple_reflection(d, path[k]));
    }
    EXPECT_TRUE(verify_gallery(t, g));
}

TEST(InducedMap, IdentityArrow) {
    auto d = build_diagram(Family::D, 5, true);
    InducedRootMap m = induced_root_map(identity_arrow(d, {2, 4}));
    EXPECT_EQ(m.matrix, IntMatrix::identity(4));
}

TEST(InducedMap, FixesTheImaginaryRoot) {
    auto d = build_diagram(Family::D, 4, true);
    NodeSet j{1};
    for (const auto& path : std::vector<std::vector<int>>{{0}, {2}, {3, 0}, {2, 4, 0}}) {
        GroupoidArrow a = compose_path(d, j, path);
        InducedRootMap m = induced_root_map(a);
        DynkinType src(d, a.source), dst(d, a.target);
        EXPECT_EQ(m.matrix * dst.restricted_imaginary(), src.restricted_imaginary());
        EXPECT_TRUE(m.matrix.is_unimodular());
        std::string why;
        EXPECT_TRUE(bijective_on_window(m, 3, &why)) << why;
    }
}

TEST(InducedMap, WindowImageStaysInsideALargerWindow) {
    auto d = build_diagram(Family::A, 3, true);
    GroupoidArrow a = compose_path(d, {1}, {2, 3});
    InducedRootMap m = induced_root_map(a);
    DynkinType src(d, a.source), dst(d, a.target);
    auto wide = restricted_roots(src, 4);
    for (const auto& [v, r] : restricted_roots(dst, 3).elements) EXPECT_TRUE(wide.contains(m.matrix * v)) << to_string(v);
}

TEST(SelfIdentification, DisjointStepIsTheReflection) {
    auto d = build_diagram(Family::A, 4, true);
    NodeSet j{1};
    int i = 3;
    GroupoidArrow a = compose_path(d, j, {i});
    ASSERT_EQ(a.target, j);
    DynkinType t(d, j);
    // sigma_i on restricted coordinates: pi(alpha_k) -> pi(sigma_i alpha_k)
    std::vector<IntVec> cols;
    for (int k : t.kept()) cols.push_back(t.restrict(reflect(d->cartan(), d->simple_root(k), d->index(i))));
    EXPECT_EQ(self_mutation_identification(a), IntMatrix::from_columns(cols));
}
