#include "cdvwall/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdvwall {

namespace {

NodeSet complement(const Diagram& d, const NodeSet& s) {
    NodeSet out;
    for (int v : d.nodes())
        if (!contains(s, v)) out.push_back(v);
    return out;
}

}  // namespace

GroupoidArrow identity_arrow(const DiagramPtr& d, const NodeSet& subset) {
    GroupoidArrow a;
    a.diagram = d;
    a.source = normalize(subset);
    a.target = a.source;
    a.weyl = identity(d);
    for (int v : complement(*d, a.source)) a.relabel[v] = v;
    return a;
}

GroupoidArrow compose_path(const DiagramPtr& d, const NodeSet& source, const std::vector<int>& nodes) {
    GroupoidArrow a = identity_arrow(d, source);
    for (int i : nodes) {
        MutationStep st = mutation_step(d, a.target, i);
        a.word.push_back({a.target, i});
        a.weyl = multiply(a.weyl, st.omega);
        int moved = st.iota_of_node();
        for (auto& [from, to] : a.relabel)
            if (to == i) to = moved;
        a.target = st.target;
    }
    return a;
}

GroupoidArrow compose(const GroupoidArrow& a, const GroupoidArrow& b) {
    if (a.diagram != b.diagram && a.diagram->name() != b.diagram->name())
        throw std::invalid_argument("compose: arrows live on different diagrams");
    if (a.target != b.source)
        throw std::invalid_argument("compose: target " + to_string(a.target) + " is not the source " + to_string(b.source));
    GroupoidArrow c = a;
    c.target = b.target;
    c.weyl = multiply(a.weyl, b.weyl);
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    for (auto& [from, to] : c.relabel) to = b.relabel.at(to);
    return c;
}

GroupoidArrow reverse(const GroupoidArrow& a) {
    std::vector<int> nodes;
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
        nodes.push_back(mutation_step(a.diagram, it->subset, it->node).iota_of_node());
    return compose_path(a.diagram, a.target, nodes);
}

Gallery path_to_gallery(const DynkinType& t, const GroupoidArrow& a) {
    if (t.contracted() != a.source)
        throw std::invalid_argument("path_to_gallery: arrow starts at " + to_string(a.source) + ", type contracts " +
                                    to_string(t.contracted()));
    Gallery g;
    g.chambers.push_back(fundamental_chamber(t));
    WeylElement w = identity(a.diagram);
    for (const auto& step : a.word) {
        const Chamber& c = g.chambers.back();
        Crossing x = cross_wall(t, c, step.node);
        MutationStep st = mutation_step(a.diagram, step.subset, step.node);
        w = multiply(w, st.omega);
        if (!(x.chamber.label.w == w) || x.chamber.label.subset != st.target)
            throw std::logic_error("path_to_gallery: chamber label differs from the partial product");
        g.walls.push_back(x.wall);
        g.nodes.push_back(step.node);
        g.chambers.push_back(x.chamber);
    }
    return g;
}

InducedRootMap induced_root_map(const GroupoidArrow& a) {
    DynkinType src(a.diagram, a.source);
    InducedRootMap m;
    m.arrow = a;
    m.source_kept = src.kept();
    m.target_kept = complement(*a.diagram, a.target);
    std::vector<IntVec> cols;
    for (int j : m.target_kept) cols.push_back(src.restrict(a.weyl.image_of_simple(j)));
    m.matrix = IntMatrix::from_columns(cols);
    // w maps Z calJ' into Z calJ, so the map is well defined on the quotient
    for (int j : a.target)
        if (!is_zero(src.restrict(a.weyl.image_of_simple(j))))
            throw std::logic_error("induced_root_map: w does not carry calJ' into calJ");
    if (!m.matrix.is_unimodular()) throw std::logic_error("induced_root_map: matrix is not unimodular");
    return m;
}

bool bijective_on_window(const InducedRootMap& m, long long k_max, std::string* why) {
    DynkinType src(m.arrow.diagram, m.arrow.source);
    DynkinType tgt(m.arrow.diagram, m.arrow.target);
    RestrictedRootIndex src_index(src), tgt_index(tgt);
    IntMatrix inv = m.matrix.inverse();
    for (const auto& [v, r] : restricted_roots(tgt, k_max).elements) {
        if (!src_index.contains(m.matrix * v)) {
            if (why) *why = "image of " + to_string(v) + " is not a restricted root of " + src.name();
            return false;
        }
    }
    for (const auto& [u, r] : restricted_roots(src, k_max).elements) {
        if (!tgt_index.contains(inv * u)) {
            if (why) *why = "preimage of " + to_string(u) + " is not a restricted root of " + tgt.name();
            return false;
        }
    }
    if (src.affine() && m.matrix * tgt.restricted_imaginary() != src.restricted_imaginary()) {
        if (why) *why = "imaginary root not preserved";
        return false;
    }
    return true;
}

IntMatrix self_mutation_identification(const GroupoidArrow& a) {
    InducedRootMap m = induced_root_map(a);
    IntMatrix inv = m.matrix.inverse();  // Z calJ^c -> Z calJ'^c
    std::map<int, int> back;
    for (const auto& [from, to] : a.relabel) back[to] = from;
    if (back.size() != m.target_kept.size())
        throw std::invalid_argument("self_mutation_identification: relabelling is not a bijection");
    std::size_t n = m.source_kept.size();
    IntMatrix phi(n, n);
    for (std::size_t c = 0; c < m.target_kept.size(); ++c) {
        auto it = back.find(m.target_kept[c]);
        if (it == back.end()) throw std::invalid_argument("self_mutation_identification: node outside the relabelling");
        auto pos = std::find(m.source_kept.begin(), m.source_kept.end(), it->second);
        phi(static_cast<std::size_t>(pos - m.source_kept.begin()), c) = 1;
    }
    return phi * inv;
}

}  // namespace cdvwall
