#include "cdvwall/dihedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cdvwall {

namespace {

// D_{n+1} with the usual labelling; D_3 is not produced by build_diagram, so
// it is assembled here as A_3 centred at node 1
DiagramPtr target_diagram(int n, bool affine) {
    if (n >= 3) return build_diagram(Family::D, n + 1, affine);
    std::vector<Edge> e{{1, 2, 1}, {1, 3, 1}};
    if (affine) {
        e.push_back({0, 2, 1});
        e.push_back({0, 3, 1});
    }
    return std::make_shared<const Diagram>(Family::D, 3, affine, e);
}

// positive kernel vector of the affine Cartan matrix with entry 1 at node 0
IntVec kernel_imaginary(const Diagram& affine) {
    const IntMatrix& a = affine.cartan();
    IntMatrix rows(a.rows() - 1, a.cols());
    for (std::size_t r = 1; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) rows(r - 1, c) = a(r, c);
    IntVec k = primitive(kernel_ray(rows));
    if (k[0] < 0) k = negate(k);
    if (k[0] != 1) throw std::logic_error("imaginary root has node-0 coefficient " + k[0].str());
    return k;
}

IntVec sigma(const IntVec& v, int n) {
    IntVec s = v;
    std::swap(s[0], s[1]);
    std::swap(s[static_cast<std::size_t>(n)], s[static_cast<std::size_t>(n) + 1]);
    return s;
}

std::set<IntVec> all_roots_of(const DiagramPtr& d) {
    RootSystem rs = enumerate_roots(d);
    auto all = rs.all_roots();
    return {all.begin(), all.end()};
}

IntVec drop_first(const IntVec& v) { return IntVec(v.begin() + 1, v.end()); }

}  // namespace

IntVec DihedralCase::map(const IntVec& kept) const {
    if (kept.size() != iso.size()) throw std::invalid_argument("dihedral: vector length mismatch");
    IntVec out(target->size());
    for (std::size_t k = 0; k < kept.size(); ++k) out[target->index(iso[k])] = kept[k];
    return out;
}

IntVec DihedralCase::map_affine(const IntVec& kept) const {
    if (kept.size() != iso.size() + 1) throw std::invalid_argument("dihedral: vector length mismatch");
    IntVec out(affine_target->size());
    out[0] = kept[0];
    for (std::size_t k = 0; k < iso.size(); ++k) out[affine_target->index(iso[k])] = kept[k + 1];
    return out;
}

IntVec DihedralCase::unmap_affine(const IntVec& v) const {
    IntVec out(iso.size() + 1);
    out[0] = v[0];
    for (std::size_t k = 0; k < iso.size(); ++k) out[k + 1] = v[affine_target->index(iso[k])];
    return out;
}

DihedralCase dihedral_case(int n) {
    if (n < 2) throw std::invalid_argument("dihedral: n must be at least 2");
    NodeSet j;
    for (int i = 2; i <= 2 * n - 2; i += 2) j.push_back(i);
    DihedralCase c{n,
                   DynkinType(build_diagram(Family::D, 2 * n, false), j),
                   DynkinType(build_diagram(Family::D, 2 * n, true), j),
                   target_diagram(n, false),
                   target_diagram(n, true),
                   {}};
    for (int node : c.source.kept()) c.iso.push_back(node == 2 * n ? n + 1 : (node + 1) / 2);
    return c;
}

std::vector<IntVec> dihedral_compounds(int n) {
    std::vector<IntVec> out;
    for (int i = 2; i <= n; ++i) {
        IntVec c(static_cast<std::size_t>(n) + 1);
        for (int j = i; j <= n - 1; ++j) c[static_cast<std::size_t>(j) - 1] = 2;
        c[static_cast<std::size_t>(n) - 1] = 1;
        c[static_cast<std::size_t>(n)] = 1;
        out.push_back(c);
        out.push_back(negate(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassifyReport classify_restricted(int n) {
    DihedralCase c = dihedral_case(n);
    std::set<IntVec> roots = all_roots_of(c.target);
    std::vector<IntVec> comp = dihedral_compounds(n);
    std::set<IntVec> compounds(comp.begin(), comp.end());
    ClassifyReport rep;
    rep.n = n;
    for (const auto& [v, r] : restricted_roots(c.source).elements) {
        IntVec m = c.map(v);
        bool is_root = roots.count(m) > 0, is_comp = compounds.count(m) > 0;
        if (is_root && is_comp) throw std::logic_error("dihedral: a compound is a root");
        if (is_root) rep.roots_part.push_back(m);
        else if (is_comp) rep.compound_part.push_back(m);
        else rep.unclassified.push_back(m);
    }
    std::sort(rep.roots_part.begin(), rep.roots_part.end());
    std::sort(rep.compound_part.begin(), rep.compound_part.end());
    rep.covers_roots = std::vector<IntVec>(roots.begin(), roots.end()) == rep.roots_part;
    rep.covers_compounds = std::vector<IntVec>(compounds.begin(), compounds.end()) == rep.compound_part;
    return rep;
}

PropositionReport proposition_check(int n, long long bound) {
    DihedralCase c = dihedral_case(n);
    IntVec rim = kernel_imaginary(*c.affine_target);
    std::set<IntVec> allowed = all_roots_of(c.target);
    for (const auto& v : dihedral_compounds(n)) allowed.insert(v);
    allowed.insert(IntVec(static_cast<std::size_t>(n) + 1));

    auto of_form = [&](const IntVec& delta) {
        Integer g = gcd(delta);
        for (Integer d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            IntVec v = divide_exact(delta, d);
            IntVec r = sub(v, scale(rim, v[0]));
            if (allowed.count(drop_first(r))) return true;
        }
        return false;
    };

    RestrictedRootIndex index(c.affine_source);
    PropositionReport rep;
    rep.n = n;
    rep.bound = bound;
    std::size_t dim = c.affine_target->size();
    std::vector<long long> x(dim, 0);
    while (true) {
        std::size_t k = dim;
        while (k > 0 && x[k - 1] == bound) x[--k] = 0;
        if (k == 0) break;
        ++x[k - 1];
        IntVec delta = from_ints(x);
        Verdict v = vanishing_verdict(index, c.unmap_affine(delta));
        ++rep.checked;
        if (v.forced_zero()) ++rep.forced_zero;
        if (v.forced_zero() == of_form(delta)) rep.counterexamples.push_back(delta);
    }
    return rep;
}

ParityReport mozgovoy_reineke_check(int n, long long k_max) {
    DihedralCase c = dihedral_case(n);
    const Diagram& d = *c.affine_target;
    IntVec rim = kernel_imaginary(d);
    std::vector<IntVec> comp = dihedral_compounds(n);
    std::set<IntVec> compounds(comp.begin(), comp.end());
    auto reduce = [&](const IntVec& v) { return drop_first(sub(v, scale(rim, v[0]))); };

    ParityReport rep;
    rep.n = n;
    rep.k_max = k_max;
    // alpha_2 + ... + alpha_n and alpha_2 + ... + alpha_{n-1} + alpha_{n+1}
    IntVec a(d.size()), b(d.size());
    for (int j = 2; j <= n - 1; ++j) a[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)] = 1;
    a[static_cast<std::size_t>(n)] = 1;
    b[static_cast<std::size_t>(n) + 1] = 1;
    std::set<IntVec> roots;
    for (auto& r : affine_real_roots_closure(d, k_max)) roots.insert(r);
    rep.displayed_pair = roots.count(a) && roots.count(b) && sigma(a, n) == b && compounds.count(reduce(add(a, b)));

    std::set<IntVec> hit;
    for (const auto& r : roots) {
        Integer p = r[0] + r[1] + r[static_cast<std::size_t>(n)] + r[static_cast<std::size_t>(n) + 1];
        bool odd = p % 2 != 0;
        IntVec s = reduce(add(r, sigma(r, n)));
        bool is_comp = compounds.count(s) > 0;
        if (odd) {
            ++rep.odd_roots;
            if (is_comp) hit.insert(s);
            else rep.odd_not_compound.push_back(r);
        } else {
            ++rep.even_roots;
            if (is_comp) rep.even_compound.push_back(r);
        }
    }
    for (const auto& v : comp)
        if (!hit.count(v)) rep.compounds_missed.push_back(v);
    return rep;
}

}  // namespace cdvwall
