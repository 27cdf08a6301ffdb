// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "cdvwall/arrangement.hpp"
#include "cdvwall/bps.hpp"
#include "cdvwall/dihedral.hpp"
#include "cdvwall/groupoid.hpp"
#include "cdvwall/oracle.hpp"
#include "cdvwall/restriction.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace cdvwall;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::set<IntVec> primitive_rays(const std::vector<IntVec>& rays) {
    std::set<IntVec> out;
    for (const auto& r : rays) out.insert(primitive(r));
    return out;
}

Outcome criterion1() {
    std::size_t subsets = 0, violations = 0;
    for (int n : {6, 7, 8}) {
        auto d = build_diagram(Family::E, n, false);
        for (const auto& j : proper_subsets(*d)) {
            ++subsets;
            violations += check_gcd_closure(DynkinType(d, j)).violations.size();
        }
    }
    return {violations == 0, std::to_string(subsets) + " subsets of E6, E7, E8, " + std::to_string(violations) + " violations"};
}

Outcome criterion2() {
    Outcome o;
    std::size_t types = 0;
    auto check = [&](Family f, int n, std::size_t want) {
        auto d = build_diagram(f, n, false);
        ++types;
        std::size_t engine = enumerate_roots(d).positive_roots.size(), oracle = oracle_positive_roots(*d).size();
        if (engine != want || oracle != want) {
            o.pass = false;
            o.detail += d->name() + " engine " + std::to_string(engine) + " oracle " + std::to_string(oracle) + "; ";
        }
    };
    for (int n = 1; n <= 8; ++n) check(Family::A, n, static_cast<std::size_t>(n * (n + 1) / 2));
    for (int n = 4; n <= 8; ++n) check(Family::D, n, static_cast<std::size_t>(n * (n - 1)));
    check(Family::E, 6, 36);
    check(Family::E, 7, 63);
    check(Family::E, 8, 120);
    o.detail = std::to_string(types) + " types checked against engine and oracle" + (o.detail.empty() ? "" : ": " + o.detail);
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t cases = 0, unequal = 0;
    auto sweep = [&](Family f, int n) {
        auto d = build_diagram(f, n, true);
        for (const auto& j : proper_subsets(*d)) {
            ++cases;
            if (!real_restricted_two_ways(DynkinType(d, j), 3).equal) {
                ++unequal;
                if (o.detail.size() < 200) o.detail += d->name() + " " + to_string(j) + "; ";
            }
        }
    };
    for (int n = 1; n <= 8; ++n) sweep(Family::A, n);
    for (int n = 4; n <= 8; ++n) sweep(Family::D, n);
    for (int n : {6, 7, 8}) sweep(Family::E, n);
    o.pass = unequal == 0;
    o.detail = std::to_string(cases) + " (type, subset) pairs at k_max 3, " + std::to_string(unequal) + " unequal" +
               (o.detail.empty() ? "" : ": " + o.detail);
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        ClassifyReport c = classify_restricted(n);
        ParityReport p = mozgovoy_reineke_check(n);
        if (!c.ok() || !p.ok()) {
            o.pass = false;
            o.detail += "n=" + std::to_string(n) + (c.ok() ? "" : " classify") + (p.ok() ? "" : " parity") + "; ";
        }
    }
    if (o.pass) o.detail = "n = 2..5 classified exactly, parity check agrees";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t paths = 0, bad = 0;
    auto note = [&](const std::string& s) {
        ++bad;
        if (o.detail.size() < 300) o.detail += s + "; ";
    };
    struct Case {
        Family f;
        int n;
        NodeSet j;
    };
    for (const Case& cs : {Case{Family::A, 2, {}}, Case{Family::D, 4, {1, 3}}, Case{Family::A, 3, {1}}}) {
        auto d = build_diagram(cs.f, cs.n, true);
        DynkinType t(d, cs.j);
        std::vector<int> path;
        std::function<void(const Chamber&)> dfs = [&](const Chamber& c) {
            ++paths;
            GroupoidArrow a = compose_path(d, cs.j, path);
            if (!(a.weyl == c.label.w) || a.target != c.label.subset) note(d->name() + " arrow differs from the label");
            Gallery g = path_to_gallery(t, a);
            std::string why;
            if (!verify_gallery(t, g, &why)) note(d->name() + " gallery: " + why);
            InducedRootMap m = induced_root_map(a);
            if (!m.matrix.is_unimodular()) note(d->name() + " induced map not unimodular");
            if (!bijective_on_window(m, 3, &why)) note(d->name() + " not bijective: " + why);
            if (path.size() == 6) return;
            for (int i : c.facets) {
                Label l = mutate(c.label, i);
                std::set<IntVec> geo = primitive_rays(geometric_cross(t, c, i));
                Chamber next = make_chamber(t, c.sign, l);
                if (primitive_rays(next.rays) != geo) note(d->name() + " label and geometric crossing differ");
                path.push_back(i);
                dfs(next);
                path.pop_back();
            }
        };
        dfs(fundamental_chamber(t));
    }
    o.pass = bad == 0;
    o.detail = std::to_string(paths) + " mutation paths of length <= 6 on ~A2 {}, ~D4 {1,3}, ~A3 {1}, " +
               std::to_string(bad) + " failures" + (o.detail.empty() ? "" : ": " + o.detail);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t pairs = 0, through = 0, excluded = 0, bad = 0;
    auto note = [&](const std::string& s) {
        ++bad;
        if (o.detail.size() < 300) o.detail += s + "; ";
    };
    std::mt19937_64 rng(6);
    for (const DynkinType& t : {DynkinType(build_diagram(Family::A, 2, true), {}),
                                DynkinType(build_diagram(Family::D, 4, true), {1, 3}),
                                DynkinType(build_diagram(Family::A, 3, true), {1})}) {
        auto graph = enumerate_chambers(t, 6);
        std::uniform_int_distribution<std::size_t> pick(0, graph.chambers.size() - 1);
        for (int k = 0; k < 100; ++k) {
            ++pairs;
            const Chamber& a = graph.chambers[pick(rng)];
            const Chamber& b = graph.chambers[pick(rng)];
            Gallery g = minimal_gallery(t, a, b);
            std::size_t sep = separating_hyperplanes(t, a.interior(), b.interior()).size();
            if (g.length() != sep) note(t.diagram()->name() + " gallery length " + std::to_string(g.length()) + " vs " + std::to_string(sep));
            if (!walls_distinct(g)) note(t.diagram()->name() + " repeated wall");
            if (!verify_gallery(t, g)) note(t.diagram()->name() + " invalid gallery");
        }
        std::vector<IntVec> real;
        for (const auto& [v, r] : restricted_roots(t, 2).elements)
            if (r.positive && r.reality == Reality::Real) real.push_back(v);
        std::uniform_int_distribution<std::size_t> pr(0, real.size() - 1), pn(0, t.kept().size() - 1);
        for (int k = 0; k < 100; ++k) {
            IntVec v = real[pr(rng)];
            int i = t.kept()[pn(rng)];
            if (colinear(v, t.simple_restricted(i))) {
                ++excluded;
                continue;
            }
            Gallery g;
            try {
                g = gallery_through_wall(t, i, v);
            } catch (const std::invalid_argument&) {
                ++excluded;
                continue;
            }
            ++through;
            if (!(g.walls.front() == make_hyperplane(t.simple_restricted(i))) || !(g.walls.back() == make_hyperplane(v)))
                note(t.diagram()->name() + " through-wall gallery ends on the wrong walls");
            if (!verify_gallery(t, g)) note(t.diagram()->name() + " invalid through-wall gallery");
        }
    }
    o.pass = bad == 0 && through > 0;
    o.detail = std::to_string(pairs) + " minimal galleries, " + std::to_string(through) + " through-wall galleries (" +
               std::to_string(excluded) + " inputs outside the construction), " + std::to_string(bad) + " failures" +
               (o.detail.empty() ? "" : ": " + o.detail);
    return o;
}

Outcome criterion7() {
    Outcome o;
    const std::set<std::string> refs{"bps-twist", "bps-duality", "stability-twist", "mutation-numeric"};
    DynkinType t(build_diagram(Family::D, 4, true), {1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.weighted_homogeneous = true;
    cfg.non_flop = {0, 3, 4};
    cfg.window = {6, 3};
    OrbitPartition p = orbit_partition(t, cfg);
    std::size_t nonconstant = 0, bad_cert = 0, certs = 0;
    for (const auto& orbit : p.orbits) {
        if (!orbit.verdict_constant) ++nonconstant;
        for (const auto& c : orbit.chain) {
            ++certs;
            if (!refs.count(c.paper_ref)) ++bad_cert;
            if (c.generator == "duality" && c.n < 0) ++bad_cert;
        }
    }
    o.pass = nonconstant == 0 && p.incompatible_edges == 0 && bad_cert == 0;
    std::ostringstream s;
    s << p.type << " window chi<=6 |beta_i|<=3: " << p.classes << " classes, " << p.orbits.size() << " orbits, "
      << p.generators.size() << " generators, " << nonconstant << " non-constant, " << p.incompatible_edges
      << " incompatible edges, " << certs << " certificates, " << bad_cert << " malformed";
    o.detail = s.str();
    return o;
}

Outcome criterion8() {
    SelftestReport r = run_selftest(10000);
    std::size_t checked = 0, mismatches = 0;
    for (const auto& l : r.lines) {
        checked += l.checked;
        mismatches += l.mismatches;
    }
    return {r.ok(), std::to_string(r.lines.size()) + " selftest groups, " + std::to_string(checked) + " checks, " +
                        std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
    std::vector<std::function<Outcome()>> all{criterion1, criterion2, criterion3, criterion4,
                                              criterion5, criterion6, criterion7, criterion8};
    int failed = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[k]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << k + 1 << (o.pass ? " PASS: " : " FAIL: ") << o.detail << " (" << std::fixed
                  << std::setprecision(1) << secs << "s)" << std::endl;
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
