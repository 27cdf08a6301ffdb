#include "cdvwall/oracle.hpp"

#include "cdvwall/arrangement.hpp"
#include "cdvwall/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace cdvwall {

namespace {

using SmallMat = std::vector<SmallVec>;

SmallMat cartan_of(const Diagram& d, std::size_t from = 0) {
    SmallMat a;
    for (std::size_t i = from; i < d.size(); ++i) {
        SmallVec row;
        for (std::size_t j = from; j < d.size(); ++j) row.push_back(static_cast<long long>(d.cartan()(i, j)));
        a.push_back(row);
    }
    return a;
}

long long norm(const SmallMat& a, const SmallVec& v) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * a[i][j] * v[j];
    return s;
}

std::vector<SmallVec> positive_roots_of(const SmallMat& a) {
    std::size_t n = a.size();
    std::set<SmallVec> seen;
    std::vector<SmallVec> stack;
    for (std::size_t i = 0; i < n; ++i) {
        SmallVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        SmallVec v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            SmallVec w = v;
            ++w[i];
            if (norm(a, w) == 2 && seen.insert(w).second) stack.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

long long small_gcd(const SmallVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

SmallVec project(const SmallVec& v, const std::vector<std::size_t>& keep) {
    SmallVec out;
    for (std::size_t k : keep) out.push_back(v[k]);
    return out;
}

long long pair(const SmallVec& a, const SmallVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational pair(const RatVec& a, const SmallVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// x with sum_m x_m cols[m] = p, by Gaussian elimination over Q
std::optional<RatVec> coefficients(const std::vector<SmallVec>& cols, const RatVec& p) {
    std::size_t n = p.size();
    if (cols.size() != n) return std::nullopt;
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = cols[c][r];
        m[r][n] = p[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    RatVec x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = m[c][n] / m[c][c];
    return x;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer floor_of(const Rational& q) {
    Integer f = numerator(q) / denominator(q);
    if (q < 0 && Rational(f) != q) --f;
    return f;
}

}  // namespace

std::vector<SmallVec> oracle_positive_roots(const Diagram& finite) {
    if (finite.affine()) throw std::invalid_argument("oracle: finite diagram expected");
    return positive_roots_of(cartan_of(finite));
}

std::set<SmallVec> oracle_restricted_roots(const Diagram& finite, const NodeSet& contracted) {
    std::vector<std::size_t> keep;
    for (int l : finite.nodes())
        if (!contains(contracted, l)) keep.push_back(finite.index(l));
    std::set<SmallVec> out;
    for (const auto& r : oracle_positive_roots(finite)) {
        for (long long s : {1LL, -1LL}) {
            SmallVec v = project(r, keep);
            for (auto& x : v) x *= s;
            if (small_gcd(v) != 0) out.insert(v);
        }
    }
    return out;
}

bool oracle_gcd_check(const Diagram& finite, const NodeSet& contracted, std::string* why) {
    std::set<SmallVec> rr = oracle_restricted_roots(finite, contracted);
    for (const auto& r : rr) {
        long long d = small_gcd(r);
        long long found = 0;
        for (long long i = 1; i <= d; ++i) {
            SmallVec w = r;
            for (auto& x : w) x = x / d * i;
            if (rr.count(w)) ++found;
        }
        if (found < d) {
            if (why) *why = "multiplicity list of " + to_string(from_ints(r)) + " is shorter than " + std::to_string(d);
            return false;
        }
    }
    return true;
}

ProbeReport oracle_chamber_probe(const DynkinType& t, std::size_t samples, long long box, std::uint64_t seed) {
    if (!t.affine()) throw std::invalid_argument("oracle_chamber_probe: affine type expected");
    const Diagram& d = *t.diagram();
    ProbeReport rep;
    rep.type = t.name();

    // finite roots and r^im = alpha_0 + highest root, recomputed here
    std::vector<SmallVec> fin = positive_roots_of(cartan_of(d, 1));
    auto height = [](const SmallVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
    SmallVec top = *std::max_element(fin.begin(), fin.end(),
                                     [&](const SmallVec& a, const SmallVec& b) { return height(a) < height(b); });
    SmallVec rim{1};
    rim.insert(rim.end(), top.begin(), top.end());
    std::vector<std::size_t> keep;
    for (int l : d.nodes())
        if (!contains(t.contracted(), l)) keep.push_back(d.index(l));
    SmallVec rim_bar = project(rim, keep);
    std::vector<SmallVec> normals;  // pi(r) for every finite root r (both signs)
    for (const auto& r : fin) {
        SmallVec lifted{0};
        lifted.insert(lifted.end(), r.begin(), r.end());
        SmallVec v = project(lifted, keep);
        normals.push_back(v);
        for (auto& x : v) x = -x;
        normals.push_back(v);
    }
    SmallMat a = cartan_of(d);
    bool fold = t.contracted().empty();

    std::mt19937_64 rng(seed);
    const long long den = 97;
    std::uniform_int_distribution<long long> pick(-box * den, box * den);
    auto fail = [&](const std::string& s) {
        ++rep.mismatches;
        if (rep.failures.size() < 5) rep.failures.push_back(s);
    };

    for (std::size_t s = 0; s < samples; ++s) {
        ++rep.samples;
        RatVec theta(keep.size());
        for (auto& x : theta) x = Rational(pick(rng)) / Rational(den);
        Rational level = pair(theta, rim_bar);
        if (level == 0) {
            ++rep.skipped;
            continue;
        }
        int sgn = level > 0 ? 1 : -1;
        for (auto& x : theta) x /= (sgn * level);
        // on H_{pi(r) + k pi(r^im)}: theta(pi r) + k sgn = 0 with a nonzero normal
        bool on_wall = false;
        for (const auto& n : normals) {
            Rational v = pair(theta, n);
            if (!is_integral(v)) continue;
            long long k = -static_cast<long long>(numerator(v)) * sgn;
            SmallVec h = n;
            for (std::size_t i = 0; i < h.size(); ++i) h[i] += k * rim_bar[i];
            if (small_gcd(h) != 0) on_wall = true;
        }
        if (on_wall) {
            ++rep.skipped;
            continue;
        }
        Chamber c;
        try {
            c = locate_chamber(t, theta);
        } catch (const std::exception& e) {
            fail(std::string("locate_chamber threw: ") + e.what());
            continue;
        }
        ++rep.located;
        std::vector<SmallVec> rays;
        for (const auto& r : c.rays) rays.push_back(to_ints(r));
        auto lambda = coefficients(rays, theta);
        if (!lambda || std::any_of(lambda->begin(), lambda->end(), [](const Rational& q) { return q <= 0; })) {
            fail("point is not inside the located cone");
            continue;
        }
        bool cut = false;
        for (const auto& n : normals) {
            Rational lo, hi;
            for (std::size_t m = 0; m < rays.size(); ++m) {
                long long b = pair(rays[m], rim_bar);
                if (b * sgn <= 0) {
                    cut = true;
                    break;
                }
                Rational q = Rational(pair(rays[m], n)) / Rational(b);
                if (m == 0 || q < lo) lo = q;
                if (m == 0 || q > hi) hi = q;
            }
            if (cut) break;
            if (Rational(floor_of(lo) + 1) < hi) {
                cut = true;
                break;
            }
        }
        if (cut) {
            fail("a real hyperplane meets the located cone");
            continue;
        }
        if (fold) {
            // theta over all nodes here; fold sgn*theta into C
            RatVec f = theta;
            for (auto& x : f) x *= sgn;
            std::vector<std::size_t> word;
            for (std::size_t guard = 0; guard < 100000; ++guard) {
                std::size_t i = 0;
                while (i < f.size() && f[i] > 0) ++i;
                if (i == f.size()) break;
                Rational fi = f[i];
                for (std::size_t j = 0; j < f.size(); ++j) f[j] -= a[i][j] * fi;
                word.push_back(i);
            }
            std::size_t n = a.size();
            SmallMat w(n, SmallVec(n, 0));  // w[row][col], column j = w(alpha_j)
            for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
            for (std::size_t i : word) {
                // w s_i: column j becomes w(alpha_j) - A_ij w(alpha_i)
                SmallVec ci(n);
                for (std::size_t r = 0; r < n; ++r) ci[r] = w[r][i];
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t r = 0; r < n; ++r) w[r][j] -= a[i][j] * ci[r];
            }
            bool same = true;
            const IntMatrix& e = c.label.w.matrix();
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t col = 0; col < n; ++col)
                    if (e(r, col) != w[r][col]) same = false;
            ++rep.label_checked;
            if (!same) fail("folded Weyl element differs from the chamber label");
        }
    }
    return rep;
}

bool SelftestReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const SelftestLine& l) { return l.mismatches == 0; });
}

SelftestReport run_selftest(std::size_t probes) {
    SelftestReport rep;

    {
        SelftestLine l{"root counts", 0, 0, ""};
        struct T {
            Family f;
            int n;
            std::size_t expect;
        };
        std::vector<T> types;
        for (int n = 1; n <= 8; ++n) types.push_back({Family::A, n, static_cast<std::size_t>(n * (n + 1) / 2)});
        for (int n = 4; n <= 8; ++n) types.push_back({Family::D, n, static_cast<std::size_t>(n * (n - 1))});
        types.push_back({Family::E, 6, 36});
        types.push_back({Family::E, 7, 63});
        types.push_back({Family::E, 8, 120});
        for (const auto& ty : types) {
            DiagramPtr d = build_diagram(ty.f, ty.n, false);
            std::size_t engine = enumerate_roots(d).positive_roots.size();
            std::size_t oracle = oracle_positive_roots(*d).size();
            ++l.checked;
            if (engine != ty.expect || oracle != ty.expect) {
                ++l.mismatches;
                l.detail += d->name() + " ";
            }
        }
        rep.lines.push_back(l);
    }

    auto rr_sweep = [&](const std::string& name, const DiagramPtr& d, std::vector<NodeSet> subsets) {
        SelftestLine l{name, subsets.size(), 0, ""};
        std::vector<int> bad(subsets.size(), 0);
        parallel_for(subsets.size(), [&](std::size_t k) {
            DynkinType t(d, subsets[k]);
            std::set<SmallVec> engine;
            for (const auto& [v, r] : restricted_roots(t).elements) engine.insert(to_ints(v));
            bad[k] = engine != oracle_restricted_roots(*d, subsets[k]);
        });
        for (std::size_t k = 0; k < subsets.size(); ++k)
            if (bad[k]) {
                ++l.mismatches;
                if (l.detail.size() < 200) l.detail += to_string(subsets[k]) + " ";
            }
        rep.lines.push_back(l);
    };
    {
        DiagramPtr e6 = build_diagram(Family::E, 6, false), d5 = build_diagram(Family::D, 5, false),
                   a7 = build_diagram(Family::A, 7, false);
        rr_sweep("restricted roots E6 (all subsets)", e6, proper_subsets(*e6));
        rr_sweep("restricted roots D5 (all subsets)", d5, proper_subsets(*d5));
        std::vector<NodeSet> all = proper_subsets(*a7), pick;
        std::mt19937_64 rng(7);
        std::shuffle(all.begin(), all.end(), rng);
        pick.assign(all.begin(), all.begin() + 50);
        std::sort(pick.begin(), pick.end());
        rr_sweep("restricted roots A7 (50 random subsets)", a7, pick);
    }

    auto gcd_sweep = [&](const std::string& name, const std::vector<DiagramPtr>& ds) {
        SelftestLine l{name, 0, 0, ""};
        for (const auto& d : ds) {
            std::vector<NodeSet> subsets = proper_subsets(*d);
            std::vector<std::string> why(subsets.size());
            parallel_for(subsets.size(), [&](std::size_t k) {
                std::string w;
                bool oracle = oracle_gcd_check(*d, subsets[k], &w);
                bool engine = check_gcd_closure(DynkinType(d, subsets[k])).violations.empty();
                if (!oracle || !engine) why[k] = d->name() + " " + to_string(subsets[k]) + (oracle ? "" : ": " + w);
            });
            l.checked += subsets.size();
            for (const auto& w : why)
                if (!w.empty()) {
                    ++l.mismatches;
                    if (l.detail.size() < 200) l.detail += w + "; ";
                }
        }
        rep.lines.push_back(l);
    };
    gcd_sweep("gcd closure E6 E7 E8 (all subsets)", {build_diagram(Family::E, 6, false), build_diagram(Family::E, 7, false),
                                                     build_diagram(Family::E, 8, false)});
    {
        std::vector<DiagramPtr> as;
        for (int n = 1; n <= 8; ++n) as.push_back(build_diagram(Family::A, n, false));
        gcd_sweep("gcd closure A1..A8 (all subsets)", as);
    }
    gcd_sweep("gcd closure D8 (all subsets)", {build_diagram(Family::D, 8, false)});

    auto probe = [&](const std::string& name, const DynkinType& t, std::size_t n, long long box) {
        ProbeReport p = oracle_chamber_probe(t, n, box);
        SelftestLine l{name, p.located, p.mismatches,
                       std::to_string(p.skipped) + " on a hyperplane, " + std::to_string(p.label_checked) + " labels folded"};
        for (const auto& f : p.failures) l.detail += "; " + f;
        rep.lines.push_back(l);
    };
    probe("chamber probes ~A2 {}", DynkinType(build_diagram(Family::A, 2, true), {}), probes, 3);
    probe("chamber probes ~A3 {1}", DynkinType(build_diagram(Family::A, 3, true), {1}), probes / 20, 2);
    probe("chamber probes ~D4 {1,3}", DynkinType(build_diagram(Family::D, 4, true), {1, 3}), probes / 20, 2);
    return rep;
}

}  // namespace cdvwall
