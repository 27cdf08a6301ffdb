#include "cdvwall/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cdvwall {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

namespace {

// smallest integer strictly greater than q
Integer floor_plus_one(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f + 1;
}

Rational ratio(const Integer& a, const Integer& b) { return Rational(a) / Rational(b); }

bool integer_strictly_between(const Rational& lo, const Rational& hi) { return Rational(floor_plus_one(lo)) < hi; }

IntVec sum(const std::vector<IntVec>& vs, std::size_t n) {
    IntVec s(n, Integer(0));
    for (const auto& v : vs) s = add(s, v);
    return s;
}

std::vector<IntVec> positive_restricted(const DynkinType& t) {
    std::vector<IntVec> out;
    for (const auto& r : t.finite_roots().positive_roots) out.push_back(t.restrict(t.lift_finite(r)));
    return out;
}

}  // namespace

Hyperplane make_hyperplane(const IntVec& v, const Rational& offset) {
    Integer g = gcd(v);
    if (g == 0) throw std::domain_error("hyperplane: zero normal");
    IntVec p = sign_normalized_primitive(v);
    Integer factor = (p == divide_exact(v, g)) ? g : Integer(-g);
    return {p, offset / Rational(factor)};
}

std::string to_string(const Hyperplane& h) {
    std::ostringstream os;
    os << "H" << to_string(h.normal);
    if (h.offset != 0) os << "=" << to_string(h.offset);
    return os.str();
}

IntVec Chamber::interior() const { return sum(rays, rays.empty() ? 0 : rays.front().size()); }

std::size_t Chamber::facet_position(int node) const {
    auto it = std::lower_bound(facets.begin(), facets.end(), node);
    if (it == facets.end() || *it != node)
        throw std::invalid_argument("node " + std::to_string(node) + " is not a facet of the chamber (facets " +
                                    to_string(facets) + ")");
    return static_cast<std::size_t>(it - facets.begin());
}

ChamberKey key_of(const Chamber& c) { return {c.sign, c.label}; }

Chamber make_chamber(const DynkinType& t, int sign, const Label& label) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("chamber sign must be +1 or -1");
    if (!t.affine() && sign != 1) throw std::invalid_argument("finite arrangements have no negative chambers");
    const Diagram& d = *t.diagram();
    if (label.subset.size() != t.contracted().size())
        throw std::invalid_argument("label subset " + to_string(label.subset) + " has the wrong size for " + t.name());
    Chamber c;
    c.sign = sign;
    c.label = label;
    c.facets = set_minus(d.nodes(), label.subset);
    IntMatrix winv = inverse(label.w).matrix();
    for (int k : c.facets) {
        std::size_t row = d.index(k);
        for (int j : t.contracted())
            if (winv(row, d.index(j)) != 0)
                throw std::logic_error("label does not give a chamber of " + t.name() + ": ray leaves the subspace");
        IntVec ray(t.dim());
        for (std::size_t i = 0; i < t.dim(); ++i) ray[i] = sign * winv(row, d.index(t.kept()[i]));
        c.rays.push_back(std::move(ray));
        c.normals.push_back(scale(t.restrict(label.w.image_of_simple(k)), sign));
    }
    return c;
}

Chamber fundamental_chamber(const DynkinType& t, int sign) {
    return make_chamber(t, sign, fundamental_label(t.diagram(), t.contracted()));
}

int sign_class(const DynkinType& t, const RatVec& p) {
    if (!t.affine()) return 1;
    return sign(dot(p, t.restricted_imaginary()));
}

Crossing cross_wall(const DynkinType& t, const Chamber& c, int facet_node) {
    std::size_t pos = c.facet_position(facet_node);
    if (t.affine() && c.facets.size() < 2)
        throw SignCrossing("facet of " + to_string(c.facets) + " lies in the imaginary hyperplane");
    Label next = mutate(c.label, facet_node);
    Chamber nc = make_chamber(t, c.sign, next);
    const IntVec& n = c.normals[pos];
    std::vector<IntVec> shared;
    for (std::size_t m = 0; m < c.rays.size(); ++m) {
        if (m == pos) continue;
        if (std::find(nc.rays.begin(), nc.rays.end(), c.rays[m]) == nc.rays.end())
            throw std::logic_error("cross_wall: mutated chamber does not contain the shared facet");
        if (dot(n, c.rays[m]) != 0) throw std::logic_error("cross_wall: facet ray off the wall");
        shared.push_back(c.rays[m]);
    }
    if (!shared.empty() && IntMatrix::from_columns(shared).rank() != shared.size())
        throw std::logic_error("cross_wall: shared facet is degenerate");
    std::size_t fresh = 0;
    for (const auto& r : nc.rays) {
        if (std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end()) continue;
        ++fresh;
        if (dot(n, r) >= 0) throw std::logic_error("cross_wall: new ray is not across the wall");
    }
    if (fresh != 1) throw std::logic_error("cross_wall: chambers do not share exactly one facet");
    return {nc, make_hyperplane(n)};
}

std::set<IntVec> hyperplanes_through(const DynkinType& t, const std::vector<IntVec>& points) {
    std::set<IntVec> out;
    auto vanishes = [&](const IntVec& h) {
        return std::all_of(points.begin(), points.end(), [&](const IntVec& g) { return dot(h, g) == 0; });
    };
    if (!t.affine()) {
        for (const auto& a : positive_restricted(t))
            if (!is_zero(a) && vanishes(a)) out.insert(sign_normalized_primitive(a));
        return out;
    }
    if (points.empty()) throw std::invalid_argument("hyperplanes_through: infinitely many hyperplanes contain 0");
    const IntVec& b = t.restricted_imaginary();
    Integer bg = dot(b, points.front());
    if (bg == 0) throw std::domain_error("hyperplanes_through: point on the imaginary hyperplane");
    for (const auto& a : positive_restricted(t)) {
        Integer num = -dot(a, points.front());
        if (num % bg != 0) continue;
        IntVec h = add(a, scale(b, num / bg));
        if (!is_zero(h) && vanishes(h)) out.insert(sign_normalized_primitive(h));
    }
    return out;
}

std::vector<IntVec> geometric_cross(const DynkinType& t, const Chamber& c, int facet_node) {
    std::size_t j = c.facet_position(facet_node);
    std::size_t n = c.rays.size();
    std::vector<IntVec> out;
    for (const auto& r : c.rays) out.push_back(primitive(r));
    if (n == 1) {
        if (t.affine()) throw SignCrossing("geometric_cross: facet lies in the imaginary hyperplane");
        out[0] = negate(out[0]);
        return out;
    }
    if (t.affine() && n < 3) throw std::invalid_argument("geometric_cross: needs |calJ^c| >= 3 on affine types");
    IntMatrix walls(n - 1, n);
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        std::vector<IntVec> face;
        for (std::size_t m = 0; m < n; ++m)
            if (m != j && m != k) face.push_back(c.rays[m]);
        // among hyperplanes through the codimension-two face, the first one met
        // when turning from r_k away from r_j maximises h(r_j)/h(r_k)
        std::optional<Rational> best;
        IntVec chosen;
        for (const auto& h : hyperplanes_through(t, face)) {
            Integer hk = dot(h, c.rays[k]);
            if (hk == 0) continue;
            Rational q = ratio(dot(h, c.rays[j]), hk);
            if (!best || q > *best) {
                best = q;
                chosen = h;
            }
        }
        if (!best) throw std::logic_error("geometric_cross: no wall bounds the adjacent chamber");
        for (std::size_t col = 0; col < n; ++col) walls(row, col) = chosen[col];
        ++row;
    }
    IntVec r = kernel_ray(walls);
    Integer side = dot(c.normals[j], r);
    if (side == 0) throw std::logic_error("geometric_cross: new ray lies on the crossed wall");
    if (side > 0) r = negate(r);
    out[j] = r;
    return out;
}

bool is_chamber(const DynkinType& t, const std::vector<IntVec>& rays) {
    std::size_t n = t.dim();
    if (rays.size() != n || IntMatrix::from_columns(rays).rank() != n) return false;
    const IntVec& b = t.restricted_imaginary();
    int s = 0;
    if (t.affine()) {
        for (const auto& r : rays) {
            int x = sign(dot(b, r));
            if (x == 0 || (s != 0 && x != s)) return false;
            s = x;
        }
    }
    for (const auto& a : positive_restricted(t)) {
        if (!t.affine()) {
            if (is_zero(a)) continue;
            bool pos = false, neg = false;
            for (const auto& r : rays) {
                int x = sign(dot(a, r));
                pos |= x > 0;
                neg |= x < 0;
            }
            if (pos && neg) return false;
            continue;
        }
        std::optional<Rational> lo, hi;
        for (const auto& r : rays) {
            Rational k = ratio(-dot(a, r), dot(b, r));
            if (!lo || k < *lo) lo = k;
            if (!hi || k > *hi) hi = k;
        }
        if (integer_strictly_between(*lo, *hi)) return false;
    }
    if (n == 1) return true;
    IntMatrix rt = IntMatrix::from_columns(rays).transpose();
    for (std::size_t l = 0; l < n; ++l) {
        RatVec e(n, Rational(0));
        e[l] = 1;
        IntVec normal = sign_normalized_primitive(ray_primitive(solve(rt, e)));
        std::vector<IntVec> face;
        for (std::size_t m = 0; m < n; ++m)
            if (m != l) face.push_back(rays[m]);
        if (!hyperplanes_through(t, face).count(normal)) return false;
    }
    return true;
}

std::optional<std::size_t> ChamberGraph::find(const Chamber& c) const {
    auto it = index.find(key_of(c));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

ChamberGraph enumerate_chambers(const DynkinType& t, std::size_t max_len, int sign) {
    ChamberGraph g;
    auto add_arc = [&](std::size_t from, std::size_t to, int node, const Hyperplane& wall) {
        for (const auto& a : g.arcs[from])
            if (a.to == to) return;
        g.arcs[from].push_back({to, node, wall});
    };
    Chamber start = fundamental_chamber(t, sign);
    g.index[key_of(start)] = 0;
    g.chambers.push_back(start);
    g.depth.push_back(0);
    g.arcs.emplace_back();
    for (std::size_t head = 0; head < g.chambers.size(); ++head) {
        if (g.depth[head] >= max_len) continue;
        const NodeSet facets = g.chambers[head].facets;
        for (int node : facets) {
            Crossing x;
            try {
                x = cross_wall(t, g.chambers[head], node);
            } catch (const SignCrossing&) {
                continue;
            }
            auto [it, fresh] = g.index.try_emplace(key_of(x.chamber), g.chambers.size());
            if (fresh) {
                g.chambers.push_back(x.chamber);
                g.depth.push_back(g.depth[head] + 1);
                g.arcs.emplace_back();
            }
            add_arc(head, it->second, node, x.wall);
            int back = x.chamber.facets[0];
            for (std::size_t m = 0; m < x.chamber.normals.size(); ++m)
                if (make_hyperplane(x.chamber.normals[m]) == x.wall) back = x.chamber.facets[m];
            add_arc(it->second, head, back, x.wall);
        }
    }
    return g;
}

std::set<IntVec> separating_hyperplanes(const DynkinType& t, const IntVec& p, const IntVec& q) {
    std::set<IntVec> out;
    if (!t.affine()) {
        for (const auto& a : positive_restricted(t)) {
            if (is_zero(a)) continue;
            if (sign(dot(a, p)) != sign(dot(a, q))) out.insert(sign_normalized_primitive(a));
        }
        return out;
    }
    const IntVec& b = t.restricted_imaginary();
    Integer bp = dot(b, p), bq = dot(b, q);
    if (bp == 0 || bq == 0 || sign(bp) != sign(bq))
        throw std::invalid_argument("separating_hyperplanes: points in different sign classes");
    for (const auto& a : positive_restricted(t)) {
        Rational kp = ratio(-dot(a, p), bp), kq = ratio(-dot(a, q), bq);
        Rational lo = std::min(kp, kq), hi = std::max(kp, kq);
        for (Integer k = floor_plus_one(lo); Rational(k) < hi; ++k) {
            IntVec h = add(a, scale(b, k));
            if (is_zero(h) || colinear(h, b)) continue;
            out.insert(sign_normalized_primitive(h));
        }
    }
    return out;
}

Gallery minimal_gallery(const DynkinType& t, const Chamber& source, const Chamber& target, std::size_t bound) {
    if (source.sign != target.sign) throw std::invalid_argument("minimal_gallery: chambers in different sign classes");
    IntVec q = target.interior();
    Gallery g;
    g.chambers.push_back(source);
    ChamberKey goal = key_of(target);
    auto differs = [&](const Chamber& c) { return key_of(c) < goal || goal < key_of(c); };
    while (differs(g.chambers.back())) {
        if (g.walls.size() >= bound)
            throw std::runtime_error("minimal_gallery: target unreachable within bound " + std::to_string(bound));
        const Chamber& cur = g.chambers.back();
        std::size_t m = 0;
        while (m < cur.normals.size() && dot(cur.normals[m], q) >= 0) ++m;
        if (m == cur.normals.size())
            throw std::logic_error("minimal_gallery: no separating facet but chambers differ");
        int node = cur.facets[m];
        Crossing x = cross_wall(t, cur, node);
        g.nodes.push_back(node);
        g.walls.push_back(x.wall);
        g.chambers.push_back(std::move(x.chamber));
    }
    return g;
}

Gallery gallery_through_wall(const DynkinType& t, int node, const IntVec& root, std::size_t bound) {
    RestrictedRootIndex index(t);
    if (!contains(t.kept(), node)) throw std::invalid_argument("gallery_through_wall: node must be kept");
    if (!index.positive(root)) throw std::invalid_argument("gallery_through_wall: " + to_string(root) + " is not in RR+");
    IntVec ai = t.simple_restricted(node);
    if (colinear(root, ai))
        throw std::invalid_argument("gallery_through_wall: " + to_string(root) + " is colinear to the simple root of node " +
                                    std::to_string(node));
    if (t.affine() && colinear(root, t.restricted_imaginary()))
        throw std::invalid_argument("gallery_through_wall: " + to_string(root) + " is colinear to the imaginary root");
    if (t.affine()) {
        // root = a ai + b r^im with a < 0: H_root is parallel to H_ai on the
        // level slices and lies behind C, so no gallery starting across H_ai meets it
        const IntVec& rim = t.restricted_imaginary();
        auto behind = [&] {
            for (std::size_t p = 0; p < ai.size(); ++p)
                for (std::size_t q = p + 1; q < ai.size(); ++q) {
                    Integer det = ai[p] * rim[q] - ai[q] * rim[p];
                    if (det != 0) return sign(root[p] * rim[q] - root[q] * rim[p]) * sign(det) < 0;
                }
            return false;
        };
        if (IntMatrix::from_columns({ai, rim, root}).rank() == 2 && behind())
            throw std::invalid_argument("gallery_through_wall: H_" + to_string(root) +
                                        " is parallel to H_ai and not reachable across it");
    }
    Chamber c = fundamental_chamber(t);
    Crossing first = cross_wall(t, c, node);
    const IntVec target = sign_normalized_primitive(root);
    auto usable = [&](const Chamber& ch) {
        IntVec p = ch.interior();
        return dot(ai, p) < 0 && dot(root, p) > 0;
    };
    std::map<ChamberKey, bool> seen;
    std::deque<Chamber> queue{first.chamber};
    seen[key_of(first.chamber)] = true;
    while (!queue.empty()) {
        if (seen.size() > bound)
            throw std::runtime_error("gallery_through_wall: no wall found within " + std::to_string(bound) + " chambers");
        Chamber y = queue.front();
        queue.pop_front();
        for (std::size_t m = 0; m < y.facets.size(); ++m) {
            Crossing x;
            try {
                x = cross_wall(t, y, y.facets[m]);
            } catch (const SignCrossing&) {
                continue;
            }
            IntVec p = x.chamber.interior();
            if (x.wall.normal == target) {
                if (dot(ai, p) >= 0) continue;
                Gallery tail = minimal_gallery(t, first.chamber, y);
                Gallery g;
                g.chambers.push_back(c);
                g.chambers.insert(g.chambers.end(), tail.chambers.begin(), tail.chambers.end());
                g.walls.push_back(first.wall);
                g.nodes.push_back(node);
                g.walls.insert(g.walls.end(), tail.walls.begin(), tail.walls.end());
                g.nodes.insert(g.nodes.end(), tail.nodes.begin(), tail.nodes.end());
                g.walls.push_back(x.wall);
                g.nodes.push_back(y.facets[m]);
                g.chambers.push_back(x.chamber);
                if (!walls_distinct(g)) throw std::logic_error("gallery_through_wall: a hyperplane is crossed twice");
                return g;
            }
            if (usable(x.chamber) && seen.emplace(key_of(x.chamber), true).second) queue.push_back(x.chamber);
        }
    }
    throw std::runtime_error("gallery_through_wall: search exhausted without reaching the wall");
}

bool walls_distinct(const Gallery& g) {
    std::set<Hyperplane> s(g.walls.begin(), g.walls.end());
    return s.size() == g.walls.size();
}

bool verify_gallery(const DynkinType& t, const Gallery& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (g.chambers.size() != g.walls.size() + 1) return fail("chamber/wall count mismatch");
    for (std::size_t s = 0; s < g.walls.size(); ++s) {
        const Chamber& a = g.chambers[s];
        const Chamber& b = g.chambers[s + 1];
        std::vector<IntVec> shared;
        for (const auto& r : a.rays)
            if (std::find(b.rays.begin(), b.rays.end(), r) != b.rays.end()) shared.push_back(r);
        if (shared.size() + 1 != t.dim()) return fail("step " + std::to_string(s) + ": chambers do not share a facet");
        for (const auto& r : shared)
            if (dot(g.walls[s].normal, r) != 0) return fail("step " + std::to_string(s) + ": facet not on the wall");
        Integer pa = dot(g.walls[s].normal, a.interior()), pb = dot(g.walls[s].normal, b.interior());
        if (sign(pa) * sign(pb) != -1) return fail("step " + std::to_string(s) + ": chambers on the same side");
    }
    return true;
}

Chamber locate_chamber(const DynkinType& t, const RatVec& p, std::size_t bound) {
    int s = sign_class(t, p);
    if (s == 0) throw std::domain_error("locate_chamber: point on the imaginary hyperplane");
    Chamber cur = fundamental_chamber(t, s);
    for (std::size_t step = 0;; ++step) {
        if (step > bound) throw std::runtime_error("locate_chamber: walk exceeded " + std::to_string(bound) + " crossings");
        std::size_t m = 0;
        while (m < cur.normals.size() && dot(p, cur.normals[m]) > 0) ++m;
        if (m == cur.normals.size()) return cur;
        if (dot(p, cur.normals[m]) == 0) {
            std::size_t k = m + 1;
            while (k < cur.normals.size() && dot(p, cur.normals[k]) >= 0) ++k;
            if (k == cur.normals.size()) throw std::domain_error("locate_chamber: point lies on a wall");
            m = k;
        }
        cur = cross_wall(t, cur, cur.facets[m]).chamber;
    }
}

LevelPoint level_slice_point(const DynkinType& t, const RatVec& theta, int sign) {
    if (!t.affine()) throw std::invalid_argument("level_slice_point: type must be affine");
    if (sign != 1 && sign != -1) throw std::invalid_argument("level_slice_point: sign must be +1 or -1");
    LevelPoint lp;
    lp.coordinates = theta;
    lp.sign = sign;
    if (t.zero_contracted()) {
        if (theta.size() != t.dim()) throw std::invalid_argument("level_slice_point: expected calJ^c coordinates");
        if (dot(theta, t.restricted_imaginary()) != sign)
            throw std::invalid_argument("level_slice_point: point does not pair to the level");
        lp.image = theta;
        return lp;
    }
    if (theta.size() + 1 != t.dim()) throw std::invalid_argument("level_slice_point: expected J^c coordinates");
    Rational at_max = 0;
    for (std::size_t i = 1; i < t.dim(); ++i) at_max += theta[i - 1] * t.restricted_imaginary()[i];
    lp.image.push_back(Rational(sign) - at_max);
    lp.image.insert(lp.image.end(), theta.begin(), theta.end());
    return lp;
}

std::vector<Hyperplane> arrangement_hyperplanes(const DynkinType& t, long long k_max) {
    std::set<Hyperplane> out;
    if (!t.affine() || t.zero_contracted()) {
        for (const auto& [v, e] : restricted_roots(t, k_max).elements) out.insert(make_hyperplane(v));
        return {out.begin(), out.end()};
    }
    for (const auto& a : positive_restricted(t)) {
        IntVec u(a.begin() + 1, a.end());
        if (is_zero(u)) continue;
        for (long long c = -k_max; c <= k_max; ++c) out.insert(make_hyperplane(u, Rational(c)));
    }
    return {out.begin(), out.end()};
}

}  // namespace cdvwall
