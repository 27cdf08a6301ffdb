#include "cdvwall/bps.hpp"

#include "cdvwall/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cdvwall {

namespace {

bool non_negative(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

void require_zero_kept(const DynkinType& t, const char* what) {
    if (!t.affine() || t.zero_contracted())
        throw std::invalid_argument(std::string(what) + ": needs an affine type with node 0 kept, got " + t.name());
}

Integer ceil_div(const Integer& a, const Integer& b) {
    // b > 0
    Integer q = a / b;
    if (q * b < a) ++q;
    return q;
}

// delta in Z alpha_i + Z r^im (restricted coordinates)
bool in_node_imaginary_span(const IntVec& delta, std::size_t pos, const IntVec& rim) {
    for (std::size_t p = 0; p < delta.size(); ++p) {
        if (p == pos || rim[p] == 0) continue;
        if (delta[p] % rim[p] != 0) return false;
        IntVec rest = sub(delta, scale(rim, delta[p] / rim[p]));
        for (std::size_t q = 0; q < rest.size(); ++q)
            if (q != pos && rest[q] != 0) return false;
        return true;
    }
    return true;  // one-dimensional lattice
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::string to_string(const CurveClass& c) { return "(" + c.chi.str() + ", " + to_string(c.beta) + ")"; }

Integer multiplicity(const CurveClass& c) { return gcd(c.chi, gcd(c.beta)); }
Integer beta_multiplicity(const CurveClass& c) { return gcd(c.beta); }

IntVec associated_vector(const DynkinType& affine, const CurveClass& c) {
    require_zero_kept(affine, "associated_vector");
    if (c.beta.size() + 1 != affine.dim()) throw std::invalid_argument("curve class: beta has the wrong length");
    IntVec delta(affine.dim());
    for (std::size_t i = 0; i < c.beta.size(); ++i) delta[i + 1] = c.beta[i];
    return add(delta, scale(affine.restricted_imaginary(), c.chi));
}

CurveClass class_of(const DynkinType& affine, const IntVec& delta) {
    require_zero_kept(affine, "class_of");
    CurveClass c;
    c.chi = delta[0];
    IntVec rest = sub(delta, scale(affine.restricted_imaginary(), c.chi));
    c.beta.assign(rest.begin() + 1, rest.end());
    return c;
}

DynkinType affine_of(const DynkinType& finite) {
    if (finite.affine()) throw std::invalid_argument("affine_of: type is already affine");
    const Diagram& d = *finite.diagram();
    return DynkinType(build_diagram(d.family(), d.rank(), true), finite.contracted());
}

std::string describe(const Verdict& v) {
    if (v.forced_zero()) return "ForcedZero";
    return v.candidate == CandidateKind::Imaginary ? "Candidate(imaginary)" : "Candidate(real)";
}

Verdict vanishing_verdict(const RestrictedRootIndex& index, const IntVec& delta, bool weighted_homogeneous) {
    const DynkinType& t = index.type();
    if (!t.affine()) throw std::invalid_argument("vanishing_verdict: type must be affine");
    if (delta.size() != t.dim()) throw std::invalid_argument("vanishing_verdict: vector length mismatch");
    if (is_zero(delta)) throw std::invalid_argument("vanishing_verdict: zero dimension vector");
    if (!non_negative(delta)) throw std::invalid_argument("vanishing_verdict: dimension vector " + to_string(delta) + " has a negative entry");
    Verdict v;
    v.d = gcd(delta);
    v.base = divide_exact(delta, v.d);
    v.global = weighted_homogeneous;
    v.paper_ref = "bps-vanishing";
    if (index.on_imaginary_line(v.base)) {
        v.candidate = CandidateKind::Imaginary;
    } else if (index.contains_real(v.base)) {
        v.candidate = CandidateKind::Real;
    } else {
        v.kind = VerdictKind::ForcedZero;
    }
    return v;
}

Verdict vanishing_verdict(const DynkinType& affine, const IntVec& delta, bool weighted_homogeneous) {
    return vanishing_verdict(RestrictedRootIndex(affine), delta, weighted_homogeneous);
}

Verdict geometric_verdict(const DynkinType& finite, const CurveClass& c) {
    if (finite.affine()) throw std::invalid_argument("geometric_verdict: type must be finite");
    DynkinType aff = affine_of(finite);
    IntVec delta = associated_vector(aff, c);
    if (!non_negative(delta)) throw std::invalid_argument("geometric_verdict: " + to_string(c) + " does not map into N Q_0");
    if (is_zero(delta)) throw std::invalid_argument("geometric_verdict: zero class");
    Verdict v;
    v.paper_ref = "geometric-vanishing";
    v.d = multiplicity(c);
    if (is_zero(c.beta)) {
        v.candidate = CandidateKind::Imaginary;
        v.base = c.beta;
        return v;
    }
    v.base = divide_exact(c.beta, v.d);
    RestrictedRootIndex index(finite);
    if (!index.contains(v.base)) v.kind = VerdictKind::ForcedZero;
    return v;
}

Verdict gv_verdict(const DynkinType& finite, const IntVec& beta) {
    if (finite.affine()) throw std::invalid_argument("gv_verdict: type must be finite");
    if (is_zero(beta) || !non_negative(beta)) throw std::invalid_argument("gv_verdict: " + to_string(beta) + " is not effective");
    Verdict v;
    v.paper_ref = "gv-vanishing";
    v.d = 1;
    v.base = beta;
    if (!RestrictedRootIndex(finite).positive(beta)) v.kind = VerdictKind::ForcedZero;
    return v;
}

const char* to_string(Strength s) { return s == Strength::Motivic ? "motivic" : "numeric"; }

IntMatrix mutation_symmetry(const DynkinType& affine, int node, long long k_max) {
    if (!affine.affine()) throw std::invalid_argument("mutation_symmetry: type must be affine");
    if (!contains(affine.kept(), node))
        throw std::invalid_argument("mutation_symmetry: node " + std::to_string(node) + " is contracted in " + affine.name());
    GroupoidArrow a = compose_path(affine.diagram(), affine.contracted(), {node});
    IntMatrix m = self_mutation_identification(a);
    const IntVec& rim = affine.restricted_imaginary();
    std::string why;
    if (m * rim != rim) why = "does not fix pi(r^im)";
    if (why.empty()) {
        RestrictedRootIndex index(affine);
        IntMatrix inv = m.inverse();
        for (const auto& [v, r] : restricted_roots(affine, k_max).elements) {
            if (!index.contains(m * v) || !index.contains(inv * v)) {
                why = "moves the restricted root " + to_string(v) + " off RR";
                break;
            }
        }
    }
    if (!why.empty())
        throw std::invalid_argument("non-flop node " + std::to_string(node) + " of " + affine.name() + ": mutation to " +
                                    to_string(a.target) + " " + why);
    return m;
}

std::vector<Generator> symmetry_generators(const DynkinType& affine, const SymmetryConfig& config) {
    require_zero_kept(affine, "symmetry_generators");
    for (int i : config.non_flop)
        if (!contains(affine.kept(), i))
            throw std::invalid_argument("non-flop node " + std::to_string(i) + " is not in the kept set " + to_string(affine.kept()));
    std::vector<Generator> out;
    const IntVec rim = affine.restricted_imaginary();
    auto in_nq0 = [affine](const CurveClass& c) { return non_negative(associated_vector(affine, c)); };

    if (config.rigidified) {
        out.push_back({"twist", "bps-twist", Strength::Motivic, "(chi, beta) in N Q_0, beta != 0",
                       [](const CurveClass& c) -> std::optional<Application> {
                           Integer d = beta_multiplicity(c);
                           if (d == 0) return std::nullopt;
                           return Application{{c.chi + d, c.beta}, -1};
                       }});
        out.push_back({"duality", "bps-duality", Strength::Motivic,
                       "(chi, beta) in N Q_0, beta != 0; n minimal with (nd - chi, -beta) in N Q_0",
                       [rim](const CurveClass& c) -> std::optional<Application> {
                           Integer d = beta_multiplicity(c);
                           if (d == 0) return std::nullopt;
                           // (nd - chi) r_j >= beta_j on every kept node j (beta_0 = 0, r_0 = 1)
                           Integer need = c.chi;
                           for (std::size_t j = 0; j < c.beta.size(); ++j)
                               need = std::max(need, c.chi + ceil_div(c.beta[j], rim[j + 1]));
                           Integer n = need <= 0 ? Integer(0) : ceil_div(need, d);
                           return Application{{n * d - c.chi, negate(c.beta)}, static_cast<long long>(n)};
                       }});
    }
    if (config.numeric_relations) {
        DynkinType fin = affine.finite_type();
        auto index = std::make_shared<RestrictedRootIndex>(fin);
        for (std::size_t j = 0; j < fin.dim(); ++j) {
            int node = fin.kept()[j];
            out.push_back({"stability-twist[" + std::to_string(node) + "]", "stability-twist", Strength::Numeric,
                           "gcd(chi, beta) = 1; beta in RR+ with chi >= 0, or beta in RR- with chi > 0",
                           [index, j](const CurveClass& c) -> std::optional<Application> {
                               if (multiplicity(c) != 1 || c.beta[j] == 0) return std::nullopt;
                               if (!index->contains(c.beta)) return std::nullopt;
                               bool pos = non_negative(c.beta);
                               if (pos && c.chi >= 0) return Application{{c.chi + c.beta[j], c.beta}, -1};
                               if (!pos && c.chi > 0) return Application{{c.chi - c.beta[j], c.beta}, -1};
                               return std::nullopt;
                           }});
        }
        for (int i : config.non_flop) {
            IntMatrix m = mutation_symmetry(affine, i);
            std::size_t pos = affine.kept_index(i);
            out.push_back({"mutation[" + std::to_string(i) + "]", "mutation-numeric", Strength::Numeric,
                           "delta indivisible, not in Z alpha_i + Z r^im, image in N Q_0",
                           [affine, m, pos, rim, in_nq0](const CurveClass& c) -> std::optional<Application> {
                               IntVec delta = associated_vector(affine, c);
                               if (gcd(delta) != 1 || in_node_imaginary_span(delta, pos, rim)) return std::nullopt;
                               IntVec img = m * delta;
                               if (!non_negative(img)) return std::nullopt;
                               CurveClass out = class_of(affine, img);
                               if (!in_nq0(out)) return std::nullopt;
                               return Application{out, -1};
                           }});
        }
    }
    return out;
}

std::vector<CurveClass> window_classes(const DynkinType& affine, const SymmetryWindow& w) {
    require_zero_kept(affine, "window_classes");
    std::size_t m = affine.dim() - 1;
    std::vector<CurveClass> out;
    std::vector<long long> beta(m, -w.beta_max);
    for (long long chi = 0; chi <= w.chi_max; ++chi) {
        std::fill(beta.begin(), beta.end(), -w.beta_max);
        while (true) {
            CurveClass c{chi, from_ints(beta)};
            if (!(chi == 0 && is_zero(c.beta)) && non_negative(associated_vector(affine, c))) out.push_back(c);
            std::size_t k = m;
            while (k > 0 && beta[k - 1] == w.beta_max) beta[--k] = -w.beta_max;
            if (k == 0) break;
            ++beta[k - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrbitPartition orbit_partition(const DynkinType& affine, const SymmetryConfig& config) {
    std::vector<Generator> gens = symmetry_generators(affine, config);
    std::vector<CurveClass> classes = window_classes(affine, config.window);
    std::map<CurveClass, std::size_t> pos;
    for (std::size_t i = 0; i < classes.size(); ++i) pos[classes[i]] = i;

    RestrictedRootIndex index(affine);
    std::vector<Verdict> verdicts(classes.size());
    std::vector<std::vector<Certificate>> found(classes.size());
    parallel_for(classes.size(), [&](std::size_t i) {
        verdicts[i] = vanishing_verdict(index, associated_vector(affine, classes[i]), config.weighted_homogeneous);
        for (const auto& g : gens) {
            auto app = g.apply(classes[i]);
            if (!app || app->image == classes[i] || !pos.count(app->image)) continue;
            found[i].push_back({classes[i], app->image, g.name, g.paper_ref, g.strength, app->n});
        }
    });

    OrbitPartition part;
    part.type = affine.name();
    for (const auto& g : gens) part.generators.push_back(g.name);
    part.classes = classes.size();
    UnionFind all(classes.size()), motivic(classes.size());
    // adjacency: (neighbour, certificate index, numeric)
    std::vector<Certificate> certs;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (auto& c : found[i]) {
            std::size_t j = pos.at(c.to);
            if (verdicts[i].forced_zero() != verdicts[j].forced_zero()) ++part.incompatible_edges;
            all.unite(i, j);
            if (c.strength == Strength::Motivic) motivic.unite(i, j);
            adj[i].push_back({j, certs.size()});
            adj[j].push_back({i, certs.size()});
            certs.push_back(std::move(c));
        }
    }
    part.edges = certs.size();

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < classes.size(); ++i) groups[all.find(i)].push_back(i);
    std::vector<int> seen(classes.size(), 0);
    for (auto& [root, members] : groups) {
        Orbit o;
        std::size_t rep = members.front();  // classes are sorted, so this is the lexicographic minimum
        o.representative = classes[rep];
        o.verdict = verdicts[rep];
        std::size_t mroot = motivic.find(rep);
        for (std::size_t m : members) {
            o.members.push_back(classes[m]);
            if (verdicts[m].forced_zero() != o.verdict.forced_zero()) o.verdict_constant = false;
            if (motivic.find(m) != mroot) o.numeric_only = true;
        }
        // 0-1 BFS: motivic certificates cost nothing, so tree paths use as few numeric steps as possible
        std::deque<std::size_t> queue{rep};
        std::map<std::size_t, std::size_t> parent_cert;
        std::map<std::size_t, std::size_t> dist{{rep, 0}};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            if (seen[u]) continue;
            seen[u] = 1;
            for (auto [v, ci] : adj[u]) {
                std::size_t w = certs[ci].strength == Strength::Numeric ? 1 : 0;
                auto it = dist.find(v);
                if (it != dist.end() && it->second <= dist[u] + w) continue;
                dist[v] = dist[u] + w;
                parent_cert[v] = ci;
                if (w == 0) queue.push_front(v);
                else queue.push_back(v);
            }
        }
        for (std::size_t m : members)
            if (m != rep) o.chain.push_back(certs[parent_cert.at(m)]);
        part.orbits.push_back(std::move(o));
    }
    std::sort(part.orbits.begin(), part.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    return part;
}

GvTransport gv_transport(const DynkinType& finite, const IntVec& beta, int node, bool flop) {
    if (finite.affine()) throw std::invalid_argument("gv_transport: type must be finite");
    if (!contains(finite.kept(), node))
        throw std::invalid_argument("gv_transport: node " + std::to_string(node) + " is contracted");
    if (beta.size() != finite.dim() || is_zero(beta) || !non_negative(beta))
        throw std::invalid_argument("gv_transport: " + to_string(beta) + " is not an effective class");
    IntVec ci = finite.simple_restricted(node);
    if (colinear(beta, ci))
        throw std::invalid_argument("gv_transport: " + to_string(beta) + " is colinear to [C_" + std::to_string(node) +
                                    "], outside the hypothesis of the mutation relation");
    GroupoidArrow a = compose_path(finite.diagram(), finite.contracted(), {node});
    InducedRootMap m = induced_root_map(a);
    GvTransport out;
    out.beta = beta;
    out.node = node;
    out.flop = flop;
    out.paper_ref = "gv-mutation";
    if (flop) {
        out.image = m.matrix.inverse() * beta;
        out.target_subset = a.target;
        out.target = "flopped space";
    } else {
        out.image = self_mutation_identification(a) * beta;
        out.target_subset = finite.contracted();
        out.target = "same space";
    }
    out.effective = non_negative(out.image);
    out.in_target_rr = RestrictedRootIndex(DynkinType(finite.diagram(), out.target_subset)).positive(out.image);
    if (flop && RestrictedRootIndex(finite).positive(beta) && !(out.effective && out.in_target_rr))
        throw std::logic_error("gv_transport: image of the effective root " + to_string(beta) + " is not an effective root");
    return out;
}

}  // namespace cdvwall
