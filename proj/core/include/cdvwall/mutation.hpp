#pragma once

#include "cdvwall/restriction.hpp"
#include "cdvwall/weyl.hpp"

#include <map>

namespace cdvwall {

// chamber label (w, K) with w minimal in w W_K
struct Label {
    WeylElement w;
    NodeSet subset;

    bool operator==(const Label& o) const { return subset == o.subset && w == o.w; }
    bool operator<(const Label& o) const {
        if (subset != o.subset) return subset < o.subset;
        return w < o.w;
    }
};

// omega_{J,i} = w0(J) w0(J+i) and the involution iota of J+i given by
// w0(J+i) alpha_j = -alpha_{iota(j)}.  With chambers w C_K spanned by the
// w.alpha_k^*, this is the order that maps C_J to its neighbour across
// H_{alpha_i}; the reverse product lands on a coset that is not a chamber.
struct MutationStep {
    NodeSet source;
    int node = 0;
    NodeSet target;  // J + i - iota(i)
    WeylElement omega;
    std::map<int, int> iota;

    int iota_of_node() const { return iota.at(node); }
};

// rejects i in J and, for affine diagrams, |J^c| < 2
MutationStep mutation_step(const DiagramPtr& d, const NodeSet& subset, int node);
Label fundamental_label(const DiagramPtr& d, const NodeSet& subset);
// (w, J) -> (w omega_{J,i}, J + i - iota(i)); throws std::logic_error if the
// product is not already coset-minimal
Label mutate(const Label& label, int node);

}  // namespace cdvwall
