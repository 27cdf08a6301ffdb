#pragma once

#include "cdvwall/dynkin.hpp"
#include "cdvwall/restriction.hpp"

#include <vector>

namespace cdvwall {

// An element of the Weyl group acting on the root lattice in the alpha-basis:
// column j of the matrix is w(alpha_j).  The matrix is the identity of the
// element; the reduced word is recomputed from it by descent stripping.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(DiagramPtr diagram, IntMatrix matrix);

    const DiagramPtr& diagram() const { return diagram_; }
    const IntMatrix& matrix() const { return matrix_; }
    // w = s_{word[0]} s_{word[1]} ... in node labels
    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool is_identity() const;

    // w(alpha_i) is a negative root
    bool has_descent(int label) const;
    IntVec image_of_simple(int label) const { return matrix_.column(diagram_->index(label)); }

    bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }
    bool operator<(const WeylElement& o) const { return matrix_ < o.matrix_; }

private:
    DiagramPtr diagram_;
    IntMatrix matrix_;
    std::vector<int> word_;
};

WeylElement identity(const DiagramPtr& d);
WeylElement simple_reflection(const DiagramPtr& d, int label);
WeylElement from_word(const DiagramPtr& d, const std::vector<int>& word);
WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
// w * s_i, computed by column operations
WeylElement times_reflection(const WeylElement& w, int label);

IntVec apply(const WeylElement& w, const IntVec& v);
// (w.theta)(v) = theta(w^{-1} v); theta as coefficients on the alpha-basis
RatVec apply_dual(const WeylElement& w, const RatVec& theta);

// longest element of the parabolic subgroup generated by S; S must be of
// finite type (any proper subset of an affine diagram)
WeylElement longest_element(const DiagramPtr& d, const NodeSet& s);
// minimal length representative of w W_S
WeylElement coset_minimal(const WeylElement& w, const NodeSet& s);

// order of the group by breadth-first search over matrices (finite types)
std::size_t group_order(const DiagramPtr& d, const NodeSet& s);

}  // namespace cdvwall
