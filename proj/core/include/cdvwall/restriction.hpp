#pragma once

#include "cdvwall/dynkin.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cdvwall {

using NodeSet = std::vector<int>;  // sorted node labels

NodeSet normalize(NodeSet s);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_minus(const NodeSet& a, const NodeSet& b);
bool contains(const NodeSet& s, int x);
std::string to_string(const NodeSet& s);

// (Delta, J) or (Delta_aff, calJ): a diagram with a proper contracted subset
class DynkinType {
public:
    DynkinType(DiagramPtr diagram, NodeSet contracted);

    const DiagramPtr& diagram() const { return diagram_; }
    const NodeSet& contracted() const { return contracted_; }
    const NodeSet& kept() const { return kept_; }
    bool affine() const { return diagram_->affine(); }
    std::size_t dim() const { return kept_.size(); }
    std::size_t kept_index(int label) const;
    bool zero_contracted() const { return affine() && contains(contracted_, 0); }
    std::string name() const;

    // roots of the finite part, in finite-node coordinates
    const RootSystem& finite_roots() const { return *finite_roots_; }
    // r^im in diagram coordinates (affine only)
    const IntVec& imaginary() const { return imaginary_; }
    const IntVec& restricted_imaginary() const { return restricted_imaginary_; }

    // pi: diagram coordinates -> kept coordinates
    IntVec restrict(const IntVec& v) const;
    IntVec simple_restricted(int label) const;
    // finite-node vector lifted to diagram coordinates (0 at node 0)
    IntVec lift_finite(const IntVec& finite) const;
    // the finite type (Delta, J) underlying an affine type, J = calJ \ {0}
    DynkinType finite_type() const;

private:
    DiagramPtr diagram_;
    NodeSet contracted_;
    NodeSet kept_;
    std::shared_ptr<const RootSystem> finite_roots_;
    IntVec imaginary_;
    IntVec restricted_imaginary_;
};

enum class Reality { Real, Imaginary };

struct RestrictedRoot {
    IntVec coeffs;
    bool positive = false;  // restriction of a positive root
    bool negative = false;  // restriction of a negative root
    Reality reality = Reality::Real;
    Integer multiplicity;
    IntVec witness;  // a root (diagram coordinates) restricting to coeffs
};

struct RestrictedRootSet {
    std::map<IntVec, RestrictedRoot> elements;
    long long k_max = 0;

    bool contains(const IntVec& v) const { return elements.count(v) > 0; }
    std::size_t size() const { return elements.size(); }
};

IntVec restrict(const DynkinType& t, const IntVec& root);

// finite: all nonzero restrictions of roots.  affine: real roots r + k r^im
// and imaginary multiples k r^im with |k| <= k_max.
RestrictedRootSet restricted_roots(const DynkinType& t, long long k_max = 3);

// Exact membership in the (infinite, when affine) set of restricted roots.
class RestrictedRootIndex {
public:
    explicit RestrictedRootIndex(const DynkinType& t);

    bool contains(const IntVec& v) const;
    bool contains_real(const IntVec& v) const;
    bool on_imaginary_line(const IntVec& v) const;
    bool positive(const IntVec& v) const;
    const DynkinType& type() const { return type_; }

private:
    DynkinType type_;
    std::map<IntVec, bool> finite_;  // kept-coordinate restrictions of finite roots -> positive
};

struct GcdViolation {
    IntVec root;
    Integer multiplicity;
    IntVec missing;
};

struct GcdReport {
    std::string type;
    std::size_t checked = 0;
    std::size_t divisible = 0;
    std::vector<GcdViolation> violations;
    // affine only: fractions that are restricted roots only via the imaginary line
    std::vector<GcdViolation> imaginary_only;
};

// finite: every element of multiplicity d has (k/d) r in RR, k = 1..d-1.
// affine: the same for the real elements of the k_max window, membership
// tested exactly; fractions landing on Z r^im are listed separately.
GcdReport check_gcd_closure(const DynkinType& t, long long k_max = 3);

struct TwoWayResult {
    std::vector<IntVec> set_a;
    std::vector<IntVec> set_b;
    bool equal = false;
};

TwoWayResult real_restricted_two_ways(const DynkinType& t, long long k_max);

// all proper subsets of the node set, in binary counting order
std::vector<NodeSet> proper_subsets(const Diagram& d);

}  // namespace cdvwall
