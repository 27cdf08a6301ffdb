#include "cdvwall/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cdvwall {

char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    return '?';
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "D" || s == "d") return Family::D;
    if (s == "E" || s == "e") return Family::E;
    throw std::invalid_argument("unknown family '" + s + "' (expected A, D or E)");
}

Diagram::Diagram(Family family, int rank, bool affine, std::vector<Edge> edges)
    : family_(family), rank_(rank), affine_(affine), edges_(std::move(edges)) {
    for (int l = affine ? 0 : 1; l <= rank; ++l) nodes_.push_back(l);
    for (auto& e : edges_)
        if (e.a > e.b) std::swap(e.a, e.b);
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    cartan_ = IntMatrix(nodes_.size(), nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) cartan_(i, i) = 2;
    for (const auto& e : edges_) {
        std::size_t a = index(e.a), b = index(e.b);
        if (a == b || cartan_(a, b) != 0) throw std::invalid_argument("diagram: loop or repeated edge");
        cartan_(a, b) = -e.multiplicity;
        cartan_(b, a) = -e.multiplicity;
    }
}

std::size_t Diagram::index(int label) const {
    if (!has_node(label)) throw std::out_of_range("node " + std::to_string(label) + " not in " + name());
    return static_cast<std::size_t>(affine_ ? label : label - 1);
}

bool Diagram::has_node(int label) const { return label >= (affine_ ? 0 : 1) && label <= rank_; }

int Diagram::degree(int label) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.a == label || e.b == label) ++d;
    return d;
}

std::string Diagram::name() const {
    return std::string(affine_ ? "~" : "") + family_char(family_) + std::to_string(rank_);
}

IntVec Diagram::simple_root(int label) const {
    IntVec v(size(), Integer(0));
    v[index(label)] = 1;
    return v;
}

std::vector<IntVec> RootSystem::all_roots() const {
    std::vector<IntVec> r = positive_roots;
    for (const auto& p : positive_roots) r.push_back(negate(p));
    return r;
}

namespace {

std::vector<Edge> finite_edges(Family family, int rank) {
    std::vector<Edge> e;
    auto chain = [&](int len) {
        for (int i = 1; i < len; ++i) e.push_back({i, i + 1, 1});
    };
    switch (family) {
        case Family::A:
            if (rank < 1) break;
            chain(rank);
            return e;
        case Family::D:
            if (rank < 4) break;
            chain(rank - 2);
            e.push_back({rank - 2, rank - 1, 1});
            e.push_back({rank - 2, rank, 1});
            return e;
        case Family::E:
            if (rank == 6) { chain(5); e.push_back({3, 6, 1}); return e; }
            if (rank == 7) { chain(6); e.push_back({3, 7, 1}); return e; }
            if (rank == 8) { chain(7); e.push_back({5, 8, 1}); return e; }
            break;
    }
    throw std::invalid_argument(std::string("unsupported Dynkin type ") + family_char(family) + std::to_string(rank));
}

// where the extended vertex must attach, per the standard affine pictures
std::vector<int> expected_affine_neighbours(Family family, int rank) {
    switch (family) {
        case Family::A: return rank == 1 ? std::vector<int>{1} : std::vector<int>{1, rank};
        case Family::D: return {2};
        case Family::E: return rank == 6 ? std::vector<int>{6} : std::vector<int>{1};
    }
    return {};
}

void check_connected(const Diagram& d) {
    std::vector<int> parent(d.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : d.edges()) parent[find(static_cast<int>(d.index(e.a)))] = find(static_cast<int>(d.index(e.b)));
    for (std::size_t i = 0; i < d.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) throw std::logic_error("diagram " + d.name() + " is disconnected");
}

}  // namespace

DiagramPtr build_diagram(Family family, int rank, bool affine) {
    auto finite = std::make_shared<const Diagram>(family, rank, false, finite_edges(family, rank));
    check_connected(*finite);
    if (finite->edges().size() + 1 != finite->size()) throw std::logic_error("finite diagram is not a tree");
    int branch = 0;
    for (int l : finite->nodes()) {
        if (finite->degree(l) > 3) throw std::logic_error("finite diagram has a node of degree > 3");
        if (finite->degree(l) == 3) ++branch;
    }
    if (branch > 1) throw std::logic_error("finite diagram has more than one branch node");
    if (!affine) return finite;

    // the extended vertex is joined to i with multiplicity <r^max, alpha_i>
    RootSystem rs = enumerate_roots(finite);
    IntVec pairing = finite->cartan() * rs.highest_root;
    std::vector<Edge> edges = finite->edges();
    std::vector<int> attached;
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        if (pairing[i] == 0) continue;
        edges.push_back({0, finite->label(i), pairing[i].convert_to<int>()});
        attached.push_back(finite->label(i));
    }
    if (attached != expected_affine_neighbours(family, rank))
        throw std::logic_error("extended vertex of " + finite->name() + " attached at an unexpected node");
    auto d = std::make_shared<const Diagram>(family, rank, true, std::move(edges));
    check_connected(*d);
    return d;
}

DiagramPtr finite_part(const Diagram& affine) {
    if (!affine.affine()) throw std::invalid_argument("finite_part: diagram " + affine.name() + " is not affine");
    return build_diagram(affine.family(), affine.rank(), false);
}

IntVec reflect(const IntMatrix& cartan, const IntVec& v, std::size_t i) {
    Integer p = 0;
    for (std::size_t j = 0; j < v.size(); ++j) p += cartan(i, j) * v[j];
    IntVec r = v;
    r[i] -= p;
    return r;
}

bool is_positive(const IntVec& v) {
    return !is_zero(v) && std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

bool is_negative(const IntVec& v) {
    return !is_zero(v) && std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
}

Integer height(const IntVec& v) {
    Integer h = 0;
    for (const auto& x : v) h += x;
    return h;
}

namespace {

bool height_lex_less(const IntVec& a, const IntVec& b) {
    Integer ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace

RootSystem enumerate_roots(const DiagramPtr& finite) {
    if (finite->affine()) throw std::invalid_argument("enumerate_roots: " + finite->name() + " is affine");
    const IntMatrix& a = finite->cartan();
    std::set<IntVec> seen;
    std::vector<IntVec> frontier;
    for (int l : finite->nodes()) {
        frontier.push_back(finite->simple_root(l));
        seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& r : frontier)
            for (std::size_t i = 0; i < finite->size(); ++i) {
                IntVec s = reflect(a, r, i);
                if (is_positive(s) && seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    RootSystem rs;
    rs.diagram = finite;
    rs.cartan = a;
    rs.positive_roots.assign(seen.begin(), seen.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), height_lex_less);
    rs.highest_root = rs.positive_roots.back();
    for (const auto& r : rs.positive_roots)
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] > rs.highest_root[i]) throw std::logic_error("highest root is not dominant over all roots");
    return rs;
}

IntVec imaginary_root(const Diagram& affine) {
    RootSystem rs = enumerate_roots(finite_part(affine));
    IntVec v(affine.size());
    v[0] = 1;
    for (std::size_t i = 0; i < rs.highest_root.size(); ++i) v[i + 1] = rs.highest_root[i];
    return v;
}

std::vector<AffineRealRoot> real_roots_window(const Diagram& affine, long long k_max) {
    if (k_max < 0) throw std::invalid_argument("real_roots_window: k_max must be non-negative");
    RootSystem rs = enumerate_roots(finite_part(affine));
    std::vector<AffineRealRoot> out;
    for (long long k = -k_max; k <= k_max; ++k)
        for (const auto& r : rs.all_roots()) out.push_back({r, k});
    return out;
}

IntVec affine_vector(const AffineRealRoot& r, const IntVec& imaginary) {
    IntVec v(imaginary.size());
    v[0] = 0;
    for (std::size_t i = 0; i < r.finite_part.size(); ++i) v[i + 1] = r.finite_part[i];
    return add(v, scale(imaginary, r.level));
}

std::vector<IntVec> affine_real_roots_closure(const Diagram& affine, long long k_max) {
    if (!affine.affine()) throw std::invalid_argument("affine_real_roots_closure: finite diagram");
    const IntMatrix& a = affine.cartan();
    std::set<IntVec> seen;
    std::vector<IntVec> frontier;
    for (int l : affine.nodes()) {
        IntVec s = affine.simple_root(l);
        if (s[0] > k_max) continue;
        seen.insert(s);
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& r : frontier)
            for (std::size_t i = 0; i < affine.size(); ++i) {
                IntVec s = reflect(a, r, i);
                if (!is_positive(s) || s[0] > k_max) continue;
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    std::vector<IntVec> out(seen.begin(), seen.end());
    for (const auto& r : seen) out.push_back(negate(r));
    return out;
}

}  // namespace cdvwall
