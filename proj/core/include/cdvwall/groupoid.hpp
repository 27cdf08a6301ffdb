#pragma once

#include "cdvwall/arrangement.hpp"
#include "cdvwall/mutation.hpp"

#include <map>
#include <string>
#include <vector>

namespace cdvwall {

struct ArrowStep {
    NodeSet subset;
    int node = 0;

    bool operator==(const ArrowStep&) const = default;
};

// A composite of mutations calJ -> calJ'.  relabel sends each node of
// calJ^c to the node of calJ'^c it becomes: every step at i moves i to
// iota(i) and fixes the other kept nodes.
struct GroupoidArrow {
    DiagramPtr diagram;
    NodeSet source;
    NodeSet target;
    WeylElement weyl;
    std::vector<ArrowStep> word;
    std::map<int, int> relabel;

    std::size_t length() const { return word.size(); }
};

GroupoidArrow identity_arrow(const DiagramPtr& d, const NodeSet& subset);
// mutate at each node in turn, starting from source
GroupoidArrow compose_path(const DiagramPtr& d, const NodeSet& source, const std::vector<int>& nodes);
// a followed by b; throws std::invalid_argument unless a.target == b.source
GroupoidArrow compose(const GroupoidArrow& a, const GroupoidArrow& b);
// mutate back along the reversed path at the relabelled nodes
GroupoidArrow reverse(const GroupoidArrow& a);

// crosses the walls of C_calJ along the arrow; every intermediate chamber
// label is checked against the partial products of the arrow
Gallery path_to_gallery(const DynkinType& t, const GroupoidArrow& a);

// pi_calJ'(r) -> pi_calJ(w r): columns pi_calJ(w alpha_j), j in calJ'^c
struct InducedRootMap {
    GroupoidArrow arrow;
    NodeSet source_kept;  // rows
    NodeSet target_kept;  // columns
    IntMatrix matrix;
};

InducedRootMap induced_root_map(const GroupoidArrow& a);

// exact: every restricted root of calJ' in the window maps into RR(calJ)
// and every one of calJ in the window pulls back into RR(calJ')
bool bijective_on_window(const InducedRootMap& m, long long k_max, std::string* why = nullptr);

// automorphism of Z calJ^c: pull back along the induced map to Z calJ'^c,
// then identify iota(i) with i.  For a single step at i with calJ' = calJ
// and iota(i) = i this is s_i on restricted coordinates.
IntMatrix self_mutation_identification(const GroupoidArrow& a);

}  // namespace cdvwall
