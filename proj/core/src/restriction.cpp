#include "cdvwall/restriction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cdvwall {

NodeSet normalize(NodeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet r = a;
    r.insert(r.end(), b.begin(), b.end());
    return normalize(std::move(r));
}

NodeSet set_minus(const NodeSet& a, const NodeSet& b) {
    NodeSet r;
    for (int x : a)
        if (!contains(b, x)) r.push_back(x);
    return r;
}

bool contains(const NodeSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::string to_string(const NodeSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

DynkinType::DynkinType(DiagramPtr diagram, NodeSet contracted)
    : diagram_(std::move(diagram)), contracted_(normalize(std::move(contracted))) {
    for (int j : contracted_)
        if (!diagram_->has_node(j))
            throw std::invalid_argument("contracted node " + std::to_string(j) + " not in " + diagram_->name());
    kept_ = set_minus(diagram_->nodes(), contracted_);
    if (kept_.empty()) throw std::invalid_argument("contracted subset must be proper in " + diagram_->name());
    DiagramPtr fin = diagram_->affine() ? finite_part(*diagram_) : diagram_;
    finite_roots_ = std::make_shared<const RootSystem>(enumerate_roots(fin));
    if (affine()) {
        imaginary_ = IntVec(diagram_->size());
        imaginary_[0] = 1;
        for (std::size_t i = 0; i < finite_roots_->highest_root.size(); ++i)
            imaginary_[i + 1] = finite_roots_->highest_root[i];
        restricted_imaginary_ = restrict(imaginary_);
        if (is_zero(restricted_imaginary_)) throw std::logic_error("restricted imaginary root vanished");
    }
}

std::size_t DynkinType::kept_index(int label) const {
    auto it = std::lower_bound(kept_.begin(), kept_.end(), label);
    if (it == kept_.end() || *it != label)
        throw std::out_of_range("node " + std::to_string(label) + " is not in the kept set " + to_string(kept_));
    return static_cast<std::size_t>(it - kept_.begin());
}

std::string DynkinType::name() const { return "(" + diagram_->name() + ", " + to_string(contracted_) + ")"; }

IntVec DynkinType::restrict(const IntVec& v) const {
    if (v.size() != diagram_->size()) throw std::invalid_argument("restrict: vector length mismatch");
    IntVec r(kept_.size());
    for (std::size_t i = 0; i < kept_.size(); ++i) r[i] = v[diagram_->index(kept_[i])];
    return r;
}

IntVec DynkinType::simple_restricted(int label) const { return restrict(diagram_->simple_root(label)); }

IntVec DynkinType::lift_finite(const IntVec& finite) const {
    if (!affine()) return finite;
    IntVec v(diagram_->size());
    v[0] = 0;
    for (std::size_t i = 0; i < finite.size(); ++i) v[i + 1] = finite[i];
    return v;
}

DynkinType DynkinType::finite_type() const {
    if (!affine()) return *this;
    return DynkinType(finite_part(*diagram_), set_minus(contracted_, {0}));
}

IntVec restrict(const DynkinType& t, const IntVec& root) { return t.restrict(root); }

namespace {

void record(RestrictedRootSet& set, const IntVec& v, const IntVec& witness, bool positive, Reality reality) {
    auto [it, fresh] = set.elements.try_emplace(v);
    RestrictedRoot& e = it->second;
    if (fresh) {
        e.coeffs = v;
        e.multiplicity = gcd(v);
        e.witness = witness;
        e.reality = reality;
    } else if (reality == Reality::Imaginary) {
        e.reality = Reality::Imaginary;
    }
    (positive ? e.positive : e.negative) = true;
}

}  // namespace

RestrictedRootSet restricted_roots(const DynkinType& t, long long k_max) {
    RestrictedRootSet set;
    set.k_max = t.affine() ? k_max : 0;
    const auto roots = t.finite_roots().all_roots();
    if (!t.affine()) {
        for (const auto& r : roots) {
            IntVec v = t.restrict(r);
            if (!is_zero(v)) record(set, v, r, is_positive(r), Reality::Real);
        }
        return set;
    }
    if (k_max < 0) throw std::invalid_argument("restricted_roots: k_max must be non-negative");
    const IntVec& im = t.imaginary();
    const IntVec& rim = t.restricted_imaginary();
    for (long long k = -k_max; k <= k_max; ++k) {
        for (const auto& r : roots) {
            IntVec root = add(t.lift_finite(r), scale(im, k));
            IntVec v = t.restrict(root);
            if (is_zero(v)) continue;
            bool imag = is_integer_multiple(v, rim);
            record(set, v, root, k > 0 || (k == 0 && is_positive(r)), imag ? Reality::Imaginary : Reality::Real);
        }
        if (k != 0) record(set, scale(rim, k), scale(im, k), k > 0, Reality::Imaginary);
    }
    return set;
}

RestrictedRootIndex::RestrictedRootIndex(const DynkinType& t) : type_(t) {
    for (const auto& r : t.finite_roots().all_roots()) {
        IntVec v = t.restrict(t.lift_finite(r));
        if (!is_zero(v)) finite_[v] = is_positive(r);
    }
}

bool RestrictedRootIndex::on_imaginary_line(const IntVec& v) const {
    return type_.affine() && is_integer_multiple(v, type_.restricted_imaginary());
}

bool RestrictedRootIndex::contains_real(const IntVec& v) const {
    if (v.size() != type_.dim()) throw std::invalid_argument("membership: vector length mismatch");
    if (is_zero(v)) return false;
    if (!type_.affine()) return finite_.count(v) > 0;
    if (on_imaginary_line(v)) return false;
    const IntVec& rim = type_.restricted_imaginary();
    if (!type_.zero_contracted()) {
        // node 0 is kept at position 0 and r^im has coefficient 1 there
        IntVec u = sub(v, scale(rim, v[0]));
        return finite_.count(u) > 0;
    }
    for (const auto& [f, pos] : finite_)
        if (is_integer_multiple(sub(v, f), rim)) return true;
    return false;
}

bool RestrictedRootIndex::contains(const IntVec& v) const {
    if (is_zero(v)) return false;
    return on_imaginary_line(v) || contains_real(v);
}

bool RestrictedRootIndex::positive(const IntVec& v) const {
    return contains(v) && std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

GcdReport check_gcd_closure(const DynkinType& t, long long k_max) {
    GcdReport rep;
    rep.type = t.name();
    RestrictedRootSet set = restricted_roots(t, k_max);
    RestrictedRootIndex index(t);
    for (const auto& [v, e] : set.elements) {
        if (e.reality != Reality::Real) continue;
        ++rep.checked;
        if (e.multiplicity <= 1) continue;
        ++rep.divisible;
        IntVec base = divide_exact(v, e.multiplicity);
        for (Integer k = 1; k < e.multiplicity; ++k) {
            IntVec w = scale(base, k);
            if (!t.affine()) {
                if (!set.contains(w)) rep.violations.push_back({v, e.multiplicity, w});
            } else if (!index.contains(w)) {
                rep.violations.push_back({v, e.multiplicity, w});
            } else if (!index.contains_real(w)) {
                rep.imaginary_only.push_back({v, e.multiplicity, w});
            }
        }
    }
    return rep;
}

TwoWayResult real_restricted_two_ways(const DynkinType& t, long long k_max) {
    if (!t.affine()) throw std::invalid_argument("real_restricted_two_ways: type must be affine");
    const IntVec& rim = t.restricted_imaginary();
    std::set<IntVec> a, b;
    for (const auto& root : affine_real_roots_closure(*t.diagram(), k_max)) {
        IntVec v = t.restrict(root);
        if (!is_integer_multiple(v, rim)) a.insert(v);
    }
    IntVec rmax = t.restrict(t.lift_finite(t.finite_roots().highest_root));
    std::set<IntVec> finite;
    for (const auto& r : t.finite_roots().all_roots()) {
        IntVec v = t.restrict(t.lift_finite(r));
        if (is_zero(v)) continue;
        if (t.zero_contracted() && (v == rmax || v == negate(rmax))) continue;
        finite.insert(v);
    }
    for (const auto& f : finite)
        for (long long k = -k_max; k <= k_max; ++k) b.insert(add(f, scale(rim, k)));
    TwoWayResult res;
    res.set_a.assign(a.begin(), a.end());
    res.set_b.assign(b.begin(), b.end());
    res.equal = a == b;
    return res;
}

std::vector<NodeSet> proper_subsets(const Diagram& d) {
    std::size_t n = d.size();
    std::vector<NodeSet> out;
    for (unsigned long mask = 0; mask + 1 < (1UL << n); ++mask) {
        NodeSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1UL << i)) s.push_back(d.label(i));
        out.push_back(s);
    }
    return out;
}

}  // namespace cdvwall
