#include "cdvwall/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cdvwall {

namespace {

bool column_negative(const IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, j) > 0) return false;
    return true;
}

void right_reflect(IntMatrix& m, const IntMatrix& cartan, std::size_t i) {
    std::size_t n = m.rows();
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan(i, j) == 0) continue;
        const Integer& a = cartan(i, j);
        for (std::size_t r = 0; r < n; ++r) m(r, j) -= a * m(r, i);
    }
    for (std::size_t r = 0; r < n; ++r) m(r, i) = -m(r, i);
}

}  // namespace

WeylElement::WeylElement(DiagramPtr diagram, IntMatrix matrix)
    : diagram_(std::move(diagram)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != diagram_->size() || matrix_.cols() != diagram_->size())
        throw std::invalid_argument("WeylElement: matrix does not match the diagram");
    // strip descents, smallest node first: w s_{i1} ... s_{ik} = 1
    IntMatrix m = matrix_;
    std::vector<int> stripped;
    const IntMatrix& a = diagram_->cartan();
    for (;;) {
        std::size_t j = 0;
        while (j < m.cols() && !column_negative(m, j)) ++j;
        if (j == m.cols()) break;
        right_reflect(m, a, j);
        stripped.push_back(diagram_->label(j));
        if (stripped.size() > 100000) throw std::logic_error("WeylElement: descent stripping does not terminate");
    }
    if (!(m == IntMatrix::identity(m.rows()))) throw std::logic_error("WeylElement: matrix is not a Weyl group element");
    word_.assign(stripped.rbegin(), stripped.rend());
}

bool WeylElement::is_identity() const { return word_.empty(); }

bool WeylElement::has_descent(int label) const { return column_negative(matrix_, diagram_->index(label)); }

WeylElement identity(const DiagramPtr& d) { return WeylElement(d, IntMatrix::identity(d->size())); }

WeylElement simple_reflection(const DiagramPtr& d, int label) {
    IntMatrix m = IntMatrix::identity(d->size());
    right_reflect(m, d->cartan(), d->index(label));
    return WeylElement(d, std::move(m));
}

WeylElement from_word(const DiagramPtr& d, const std::vector<int>& word) {
    IntMatrix m = IntMatrix::identity(d->size());
    for (int l : word) right_reflect(m, d->cartan(), d->index(l));
    return WeylElement(d, std::move(m));
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.diagram(), a.matrix() * b.matrix());
}

WeylElement inverse(const WeylElement& w) {
    std::vector<int> rev(w.word().rbegin(), w.word().rend());
    return from_word(w.diagram(), rev);
}

WeylElement times_reflection(const WeylElement& w, int label) {
    IntMatrix m = w.matrix();
    right_reflect(m, w.diagram()->cartan(), w.diagram()->index(label));
    return WeylElement(w.diagram(), std::move(m));
}

IntVec apply(const WeylElement& w, const IntVec& v) { return w.matrix() * v; }

RatVec apply_dual(const WeylElement& w, const RatVec& theta) {
    const IntMatrix inv = inverse(w).matrix();
    RatVec out(theta.size(), Rational(0));
    for (std::size_t j = 0; j < theta.size(); ++j)
        for (std::size_t i = 0; i < theta.size(); ++i) out[j] += theta[i] * inv(i, j);
    return out;
}

WeylElement longest_element(const DiagramPtr& d, const NodeSet& s) {
    if (d->affine() && s.size() >= d->size())
        throw std::invalid_argument("longest_element: the full affine diagram generates an infinite group");
    IntMatrix m = IntMatrix::identity(d->size());
    const IntMatrix& a = d->cartan();
    for (std::size_t guard = 0;; ++guard) {
        auto it = std::find_if(s.begin(), s.end(), [&](int l) { return !column_negative(m, d->index(l)); });
        if (it == s.end()) break;
        right_reflect(m, a, d->index(*it));
        if (guard > 100000) throw std::logic_error("longest_element: parabolic subgroup is not finite");
    }
    return WeylElement(d, std::move(m));
}

WeylElement coset_minimal(const WeylElement& w, const NodeSet& s) {
    const DiagramPtr& d = w.diagram();
    IntMatrix m = w.matrix();
    for (;;) {
        auto it = std::find_if(s.begin(), s.end(), [&](int l) { return column_negative(m, d->index(l)); });
        if (it == s.end()) break;
        right_reflect(m, d->cartan(), d->index(*it));
    }
    return WeylElement(d, std::move(m));
}

std::size_t group_order(const DiagramPtr& d, const NodeSet& s) {
    if (d->affine() && s.size() >= d->size()) throw std::invalid_argument("group_order: infinite group");
    std::set<IntMatrix> seen{IntMatrix::identity(d->size())};
    std::vector<IntMatrix> frontier{IntMatrix::identity(d->size())};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (int l : s) {
                IntMatrix x = m;
                right_reflect(x, d->cartan(), d->index(l));
                if (seen.insert(x).second) next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace cdvwall
