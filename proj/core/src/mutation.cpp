#include "cdvwall/mutation.hpp"

#include <stdexcept>

namespace cdvwall {

MutationStep mutation_step(const DiagramPtr& d, const NodeSet& subset, int node) {
    if (!d->has_node(node)) throw std::invalid_argument("mutation: node " + std::to_string(node) + " not in " + d->name());
    if (contains(subset, node))
        throw std::invalid_argument("mutation: node " + std::to_string(node) + " lies in the subset " + to_string(subset));
    NodeSet bigger = set_union(subset, {node});
    if (d->affine() && bigger.size() >= d->size())
        throw std::invalid_argument("mutation: |J^c| >= 2 required, got J = " + to_string(subset) + " in " + d->name());
    MutationStep st;
    st.source = subset;
    st.node = node;
    WeylElement w0big = longest_element(d, bigger);
    WeylElement w0 = longest_element(d, subset);
    st.omega = multiply(w0, w0big);
    for (int j : bigger) {
        IntVec img = negate(w0big.image_of_simple(j));
        int hit = -1;
        for (int k : bigger)
            if (img == d->simple_root(k)) hit = k;
        if (hit < 0) throw std::logic_error("mutation: -w0 does not permute the simple roots of " + to_string(bigger));
        st.iota[j] = hit;
    }
    st.target = set_minus(bigger, {st.iota.at(node)});
    return st;
}

Label fundamental_label(const DiagramPtr& d, const NodeSet& subset) { return {identity(d), normalize(subset)}; }

Label mutate(const Label& label, int node) {
    MutationStep st = mutation_step(label.w.diagram(), label.subset, node);
    WeylElement w = multiply(label.w, st.omega);
    WeylElement m = coset_minimal(w, st.target);
    if (!(m == w))
        throw std::logic_error("mutation: w*omega is not coset-minimal for " + to_string(st.target));
    return {w, st.target};
}

}  // namespace cdvwall
