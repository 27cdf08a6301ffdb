#include "cdvwall/cli.hpp"
#include "cdvwall/dihedral.hpp"
#include "cdvwall/oracle.hpp"
#include "cdvwall/parallel.hpp"
#include "render.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cdvwall::cli {

namespace {

struct Context {
    std::string command;
    JobConfig cfg;
    Json doc;
    int status = 0;
    std::string summary;
};

void require_format(const Context& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.cfg.format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("--format: '" + c.cfg.format + "' is not available for " + c.command + " (use " + list + ")");
}

void require_nonnegative(long long v, const char* flag) {
    if (v < 0) throw UsageError(std::string(flag) + " must be non-negative");
}

Artifact finish(Context& c) {
    Json out;
    out["metadata"] = Json::parse(to_json(c.cfg, c.command));
    out["result"] = std::move(c.doc);
    return {out.dump(2) + "\n", c.status, c.summary};
}

Artifact text(const Context& c, std::string body) { return {std::move(body), c.status, c.summary}; }

struct Csv {
    std::ostringstream s;
    Csv& row(const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) s << (k ? "," : "") << cells[k];
        s << "\n";
        return *this;
    }
};

// every vector with entries in [lo, hi], lexicographic
void for_box(std::size_t dim, long long lo, long long hi, const std::function<void(const IntVec&)>& f) {
    std::vector<long long> x(dim, lo);
    while (true) {
        f(from_ints(x));
        std::size_t k = dim;
        while (k > 0 && x[k - 1] == hi) x[--k] = lo;
        if (k == 0) return;
        ++x[k - 1];
    }
}

bool non_negative(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

// ---------------------------------------------------------------- roots

Artifact cmd_roots(Context& c) {
    require_format(c, {"json", "csv", "dot"});
    DiagramPtr d = config_diagram(c.cfg);
    require_nonnegative(c.cfg.kmax, "--kmax");
    DynkinType t(d, {});
    if (c.cfg.format == "dot") return text(c, diagram_dot(t));
    Csv csv;
    csv.row({"coeffs", "height"});
    if (!d->affine()) {
        RootSystem rs = enumerate_roots(d);
        std::size_t oracle = oracle_positive_roots(*d).size();
        Json roots = Json::array();
        for (const auto& r : rs.positive_roots) {
            roots.push_back(jvec(r));
            csv.row({csv_vec(r), height(r).str()});
        }
        c.doc = Json{{"diagram", jdiagram(*d)},
                     {"positive_count", rs.positive_roots.size()},
                     {"oracle_count", oracle},
                     {"highest_root", jvec(rs.highest_root)},
                     {"positive_roots", roots}};
        if (oracle != rs.positive_roots.size()) c.status = 1;
        c.summary = std::to_string(rs.positive_roots.size()) + " positive roots";
    } else {
        IntVec rim = imaginary_root(*d);
        std::vector<IntVec> closure = affine_real_roots_closure(*d, c.cfg.kmax);
        std::sort(closure.begin(), closure.end(), [](const IntVec& a, const IntVec& b) {
            if (a[0] != b[0]) return a[0] < b[0];
            return a < b;
        });
        std::set<IntVec> translated;
        for (const auto& r : real_roots_window(*d, c.cfg.kmax)) translated.insert(affine_vector(r, rim));
        bool agree = translated == std::set<IntVec>(closure.begin(), closure.end());
        Json roots = Json::array();
        for (const auto& r : closure) {
            roots.push_back(jvec(r));
            csv.row({csv_vec(r), height(r).str()});
        }
        c.doc = Json{{"diagram", jdiagram(*d)},
                     {"imaginary_root", jvec(rim)},
                     {"k_max", c.cfg.kmax},
                     {"real_count", closure.size()},
                     {"closure_matches_translation", agree},
                     {"real_roots", roots}};
        if (!agree) c.status = 1;
        c.summary = std::to_string(closure.size()) + " real roots with |c_0| <= " + std::to_string(c.cfg.kmax);
    }
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- restricted-roots

Artifact cmd_restricted(Context& c) {
    require_format(c, {"json", "csv"});
    require_nonnegative(c.cfg.kmax, "--kmax");
    DynkinType t = config_type(c.cfg);
    RestrictedRootSet rr = restricted_roots(t, c.cfg.kmax);
    Json roots = Json::array();
    Csv csv;
    csv.row({"coeffs", "mult", "sign", "reality", "witness"});
    std::size_t bad = 0;
    for (const auto& [v, r] : rr.elements) {
        if (restrict(t, r.witness) != v || gcd(v) != r.multiplicity) ++bad;
        std::string sign = r.positive && r.negative ? "both" : (r.positive ? "positive" : "negative");
        std::string reality = r.reality == Reality::Real ? "real" : "imaginary";
        roots.push_back(Json{{"coeffs", jvec(v)},
                             {"mult", jint(r.multiplicity)},
                             {"witness", jvec(r.witness)},
                             {"sign", sign},
                             {"reality", reality}});
        csv.row({csv_vec(v), r.multiplicity.str(), sign, reality, csv_vec(r.witness)});
    }
    c.doc = Json{{"type", jtype(t)}, {"kept", jnodes(t.kept())}, {"count", rr.size()}, {"roots", roots}};
    if (t.affine()) c.doc["k_max"] = c.cfg.kmax;
    if (bad) c.status = 1;
    c.summary = std::to_string(rr.size()) + " restricted roots";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- check-gcd

Artifact cmd_check_gcd(Context& c) {
    require_format(c, {"json", "csv"});
    require_nonnegative(c.cfg.kmax, "--kmax");
    DiagramPtr d = config_diagram(c.cfg);
    std::vector<NodeSet> subsets;
    if (c.cfg.contracted) subsets.push_back(config_type(c.cfg).contracted());
    else subsets = proper_subsets(*d);
    std::vector<GcdReport> reports(subsets.size());
    parallel_for(subsets.size(), [&](std::size_t k) { reports[k] = check_gcd_closure(DynkinType(d, subsets[k]), c.cfg.kmax); });

    std::size_t checked = 0, divisible = 0, violations = 0, imaginary_only = 0;
    Json rows = Json::array();
    Csv csv;
    csv.row({"contracted", "checked", "divisible", "violations", "imaginary_only"});
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        const GcdReport& r = reports[k];
        checked += r.checked;
        divisible += r.divisible;
        violations += r.violations.size();
        imaginary_only += r.imaginary_only.size();
        Json vs = Json::array();
        for (const auto& v : r.violations)
            vs.push_back(Json{{"coeffs", jvec(v.root)}, {"mult", jint(v.multiplicity)}, {"missing", jvec(v.missing)}});
        Json row{{"contracted", jnodes(subsets[k])},
                 {"checked", r.checked},
                 {"divisible", r.divisible},
                 {"violations", vs}};
        if (d->affine()) row["imaginary_only"] = r.imaginary_only.size();
        rows.push_back(row);
        csv.row({csv_nodes(subsets[k]), std::to_string(r.checked), std::to_string(r.divisible),
                 std::to_string(r.violations.size()), std::to_string(r.imaginary_only.size())});
    }
    c.doc = Json{{"diagram", d->name()},
                 {"subsets", subsets.size()},
                 {"checked", checked},
                 {"divisible", divisible},
                 {"violation_count", violations}};
    if (d->affine()) {
        c.doc["k_max"] = c.cfg.kmax;
        c.doc["imaginary_only"] = imaginary_only;
    }
    c.doc["reports"] = rows;
    if (violations) c.status = 1;
    c.summary = std::to_string(violations) + " violations";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- chambers

std::vector<ChamberGraph> chamber_graphs(const DynkinType& t, long long maxlen) {
    std::vector<ChamberGraph> out;
    out.push_back(enumerate_chambers(t, static_cast<std::size_t>(maxlen), 1));
    if (t.affine()) out.push_back(enumerate_chambers(t, static_cast<std::size_t>(maxlen), -1));
    return out;
}

Artifact cmd_chambers(Context& c) {
    require_format(c, {"json", "csv", "dot", "svg"});
    require_nonnegative(c.cfg.maxlen, "--maxlen");
    DynkinType t = config_type(c.cfg);
    if (c.cfg.format == "svg") {
        if (!level_svg_available(t))
            throw UsageError("--format svg needs an affine type with node 0 kept and |J^c| = 2; use --format dot");
        ChamberGraph g = enumerate_chambers(t, static_cast<std::size_t>(c.cfg.maxlen), 1);
        c.summary = std::to_string(g.chambers.size()) + " chambers on Level+";
        return text(c, level_svg(t, g));
    }
    std::vector<ChamberGraph> graphs = chamber_graphs(t, c.cfg.maxlen);
    std::size_t total = 0;
    for (const auto& g : graphs) total += g.chambers.size();
    c.summary = std::to_string(total) + " chambers within word length " + std::to_string(c.cfg.maxlen);
    if (c.cfg.format == "dot") return text(c, chamber_dot(t, graphs));
    Csv csv;
    csv.row({"sign", "index", "depth", "word", "subset", "rays"});
    Json sides = Json::array();
    for (const auto& g : graphs) {
        Json chambers = Json::array(), arcs = Json::array();
        for (std::size_t k = 0; k < g.chambers.size(); ++k) {
            Json j = jchamber(g.chambers[k]);
            j["index"] = k;
            j["depth"] = g.depth[k];
            chambers.push_back(j);
            std::string rays, word;
            for (const auto& r : g.chambers[k].rays) rays += (rays.empty() ? "" : ";") + csv_vec(r);
            for (int x : g.chambers[k].label.w.word()) word += (word.empty() ? "" : " ") + std::to_string(x);
            csv.row({std::to_string(g.chambers[k].sign), std::to_string(k), std::to_string(g.depth[k]), word,
                     csv_nodes(g.chambers[k].label.subset),
                     rays});
            for (const auto& a : g.arcs[k])
                if (k < a.to) arcs.push_back(Json{{"from", k}, {"to", a.to}, {"node", a.node}, {"wall", jhyperplane(a.wall)}});
        }
        sides.push_back(Json{{"sign", g.chambers.front().sign}, {"count", g.chambers.size()}, {"chambers", chambers}, {"walls", arcs}});
    }
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    c.doc = Json{{"type", jtype(t)}, {"maxlen", c.cfg.maxlen}, {"sides", sides}};
    return finish(c);
}

// ---------------------------------------------------------------- gallery

Json jgallery(const Gallery& g) {
    Json labels = Json::array(), walls = Json::array(), nodes = Json::array();
    for (const auto& ch : g.chambers) labels.push_back(jlabel(ch.label));
    for (const auto& w : g.walls) walls.push_back(jhyperplane(w));
    for (int n : g.nodes) nodes.push_back(n);
    return Json{{"length", g.length()}, {"labels", labels}, {"walls", walls}, {"nodes", nodes}};
}

Artifact cmd_gallery(Context& c) {
    require_format(c, {"json"});
    require_nonnegative(c.cfg.maxlen, "--maxlen");
    require_nonnegative(c.cfg.kmax, "--kmax");
    DynkinType t = config_type(c.cfg);
    ChamberGraph g = enumerate_chambers(t, static_cast<std::size_t>(c.cfg.maxlen), 1);
    const Chamber& start = g.chambers.front();
    std::vector<Json> minimal(g.chambers.size());
    std::vector<int> failed(g.chambers.size(), 0);
    parallel_for(g.chambers.size(), [&](std::size_t k) {
        Gallery gal = minimal_gallery(t, start, g.chambers[k]);
        std::size_t sep = separating_hyperplanes(t, start.interior(), g.chambers[k].interior()).size();
        std::string why;
        bool ok = verify_gallery(t, gal, &why) && walls_distinct(gal) && gal.length() == sep;
        failed[k] = ok ? 0 : 1;
        Json j{{"target", jlabel(g.chambers[k].label)}, {"separating", sep}, {"ok", ok}};
        if (!why.empty()) j["error"] = why;
        j["gallery"] = jgallery(gal);
        minimal[k] = j;
    });

    // through-wall galleries for real positive restricted roots in the window
    std::vector<std::pair<int, IntVec>> jobs;
    RestrictedRootSet rr = restricted_roots(t, t.affine() ? c.cfg.kmax : 0);
    for (const auto& [v, r] : rr.elements) {
        if (!r.positive || r.reality != Reality::Real) continue;
        if (t.affine() && colinear(v, t.restricted_imaginary())) continue;
        for (int node : t.kept())
            if (!colinear(v, t.simple_restricted(node))) jobs.emplace_back(node, v);
    }
    std::vector<Json> through(jobs.size());
    std::vector<int> through_failed(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t k) {
        const auto& [node, root] = jobs[k];
        Json j{{"node", node}, {"root", jvec(root)}};
        try {
            Gallery gal = gallery_through_wall(t, node, root);
            bool starts = !gal.walls.empty() && gal.walls.front() == make_hyperplane(t.simple_restricted(node));
            bool ends = !gal.walls.empty() && gal.walls.back() == make_hyperplane(root);
            std::string why;
            bool ok = starts && ends && verify_gallery(t, gal, &why);
            j["ok"] = ok;
            if (!why.empty()) j["error"] = why;
            j["gallery"] = jgallery(gal);
            through_failed[k] = ok ? 0 : 1;
        } catch (const std::invalid_argument& e) {
            // no such gallery: the wall is parallel to H_ai and behind C
            j["ok"] = nullptr;
            j["excluded"] = e.what();
        }
        through[k] = j;
    });
    std::size_t bad = 0;
    for (int f : failed) bad += static_cast<std::size_t>(f);
    for (int f : through_failed) bad += static_cast<std::size_t>(f);
    c.doc = Json{{"type", jtype(t)},
                 {"maxlen", c.cfg.maxlen},
                 {"minimal", Json(minimal)},
                 {"through_wall", Json(through)},
                 {"failures", bad}};
    if (bad) c.status = 1;
    c.summary = std::to_string(minimal.size()) + " minimal galleries, " + std::to_string(through.size()) +
                " through-wall galleries, " + std::to_string(bad) + " failures";
    return finish(c);
}

// ---------------------------------------------------------------- mutate

Artifact cmd_mutate(Context& c) {
    require_format(c, {"json", "dot"});
    require_nonnegative(c.cfg.maxlen, "--maxlen");
    require_nonnegative(c.cfg.kmax, "--kmax");
    DynkinType t = config_type(c.cfg);
    const DiagramPtr& d = t.diagram();
    auto allowed = [&](const NodeSet& s, int node) {
        try {
            mutation_step(d, s, node);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    };

    if (c.cfg.format == "dot") {
        // the groupoid component reachable within maxlen single steps
        std::map<NodeSet, std::size_t> depth{{t.contracted(), 0}};
        std::deque<NodeSet> queue{t.contracted()};
        std::vector<std::tuple<NodeSet, int, NodeSet>> arrows;
        while (!queue.empty()) {
            NodeSet s = queue.front();
            queue.pop_front();
            if (depth[s] >= static_cast<std::size_t>(c.cfg.maxlen)) continue;
            for (int node : set_minus(NodeSet(d->nodes().begin(), d->nodes().end()), s)) {
                if (!allowed(s, node)) continue;
                MutationStep m = mutation_step(d, s, node);
                arrows.emplace_back(s, node, m.target);
                if (depth.try_emplace(m.target, depth[s] + 1).second) queue.push_back(m.target);
            }
        }
        std::ostringstream o;
        o << "digraph \"groupoid " << t.name() << "\" {\n";
        for (const auto& [s, k] : depth) o << "  \"" << to_string(s) << "\" [label=\"" << to_string(s) << "\"];\n";
        std::sort(arrows.begin(), arrows.end());
        for (const auto& [s, node, target] : arrows)
            o << "  \"" << to_string(s) << "\" -> \"" << to_string(target) << "\" [label=\"" << node << "\"];\n";
        o << "}\n";
        c.summary = std::to_string(depth.size()) + " objects, " + std::to_string(arrows.size()) + " arrows";
        return text(c, o.str());
    }

    Json steps = Json::array();
    std::size_t bad = 0;
    for (int node : t.kept()) {
        Json j{{"node", node}};
        if (!allowed(t.contracted(), node)) {
            j["allowed"] = false;
            steps.push_back(j);
            continue;
        }
        MutationStep m = mutation_step(d, t.contracted(), node);
        GroupoidArrow a = compose_path(d, t.contracted(), {node});
        InducedRootMap map = induced_root_map(a);
        std::string why;
        bool bij = bijective_on_window(map, c.cfg.kmax, &why);
        Json omega = Json::array(), iota = Json::array();
        for (int x : m.omega.word()) omega.push_back(x);
        for (const auto& [from, to] : m.iota) iota.push_back(Json::array({from, to}));
        j["allowed"] = true;
        j["arrow"] = jarrow(a);
        j["omega"] = omega;
        j["iota"] = iota;
        j["iota_of_node"] = m.iota_of_node();
        j["label"] = jlabel(mutate(fundamental_label(d, t.contracted()), node));
        j["induced_map"] = Json{{"rows", jnodes(map.source_kept)},
                                {"columns", jnodes(map.target_kept)},
                                {"matrix", jmatrix(map.matrix)},
                                {"unimodular", map.matrix.is_unimodular()}};
        j["bijective_on_window"] = bij;
        if (!why.empty()) j["error"] = why;
        j["self_identification"] = jmatrix(self_mutation_identification(a));
        if (!bij || !map.matrix.is_unimodular()) ++bad;
        steps.push_back(j);
    }
    c.doc = Json{{"type", jtype(t)}, {"k_max", c.cfg.kmax}, {"steps", steps}, {"failures", bad}};
    if (bad) c.status = 1;
    c.summary = std::to_string(steps.size()) + " nodes, " + std::to_string(bad) + " failures";
    return finish(c);
}

// ---------------------------------------------------------------- vanishing-table

Artifact cmd_vanishing(Context& c) {
    require_format(c, {"json", "csv"});
    DynkinType t = config_type(c.cfg);
    if (t.zero_contracted())
        throw UsageError("vanishing-table: node 0 must be kept so that classes are (chi, beta)");
    const bool affine = t.affine();
    DynkinType aff = affine ? t : affine_of(t);
    std::optional<DynkinType> finite;
    if (!affine) finite = t;
    else finite = t.finite_type();
    RestrictedRootIndex index(aff);
    const SymmetryWindow& w = c.cfg.window;
    const std::size_t dim = aff.dim() - 1;

    Json rows = Json::array();
    Csv csv;
    csv.row({"chi", "beta", "verdict", "d", "base", "paper_ref"});
    std::size_t cells = 0, forced = 0, disagreements = 0, all_zero_rows = 0;
    for_box(dim, -w.beta_max, w.beta_max, [&](const IntVec& beta) {
        Json row{{"beta", jvec(beta)}};
        Json rcells = Json::array();
        bool any = false, all_zero = true;
        for (long long chi = 0; chi <= w.chi_max; ++chi) {
            CurveClass cls{chi, beta};
            IntVec delta = associated_vector(aff, cls);
            if (is_zero(delta) || !non_negative(delta)) continue;
            Verdict v = affine ? vanishing_verdict(index, delta, c.cfg.weighted_homogeneous) : geometric_verdict(*finite, cls);
            if (!affine) {
                // both statements must agree through delta = beta + chi pi(r^im)
                Verdict u = vanishing_verdict(index, delta);
                if (u.forced_zero() != v.forced_zero()) ++disagreements;
            }
            any = true;
            all_zero = all_zero && v.forced_zero();
            ++cells;
            if (v.forced_zero()) ++forced;
            Json cell{{"chi", chi}, {"delta", jvec(delta)}};
            cell.update(jverdict(v));
            rcells.push_back(cell);
            csv.row({std::to_string(chi), csv_vec(beta), describe(v), v.d.str(), csv_vec(v.base), v.paper_ref});
        }
        if (!any) return;
        row["all_forced_zero"] = all_zero;
        if (all_zero) ++all_zero_rows;
        if (!affine && !is_zero(beta) && non_negative(beta)) row["gv"] = jverdict(gv_verdict(*finite, beta));
        row["cells"] = rcells;
        rows.push_back(row);
    });
    c.doc = Json{{"type", jtype(t)},
                 {"window", Json{{"chi", w.chi_max}, {"beta", w.beta_max}}},
                 {"cells", cells},
                 {"forced_zero", forced},
                 {"all_forced_zero_rows", all_zero_rows}};
    if (!affine) c.doc["disagreements"] = disagreements;
    c.doc["rows"] = rows;
    if (disagreements) c.status = 1;
    c.summary = std::to_string(cells) + " classes, " + std::to_string(forced) + " forced to vanish";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- orbits

SymmetryConfig symmetry_config(const JobConfig& cfg) {
    SymmetryConfig s;
    s.rigidified = cfg.rigidified;
    s.weighted_homogeneous = cfg.weighted_homogeneous;
    s.non_flop = cfg.non_flop;
    s.window = cfg.window;
    return s;
}

Json jcertificate(const Certificate& k) {
    Json j{{"from", jclass(k.from)},
           {"to", jclass(k.to)},
           {"generator", k.generator},
           {"paper_ref", k.paper_ref},
           {"strength", to_string(k.strength)}};
    if (k.n >= 0) j["n"] = k.n;
    return j;
}

Artifact cmd_orbits(Context& c) {
    require_format(c, {"json", "csv"});
    DynkinType t = config_type(c.cfg);
    DynkinType aff = t.affine() ? t : affine_of(t);
    if (aff.zero_contracted()) throw UsageError("orbits: node 0 must be kept so that classes are (chi, beta)");
    OrbitPartition p;
    try {
        p = orbit_partition(aff, symmetry_config(c.cfg));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--non-flop: ") + e.what());
    }
    Json orbits = Json::array(), gens = Json::array();
    Csv csv;
    csv.row({"orbit", "chi", "beta", "verdict", "representative"});
    std::size_t inconsistent = 0;
    for (std::size_t k = 0; k < p.orbits.size(); ++k) {
        const Orbit& o = p.orbits[k];
        if (!o.verdict_constant) ++inconsistent;
        Json members = Json::array(), chain = Json::array();
        for (const auto& m : o.members) {
            members.push_back(jclass(m));
            csv.row({std::to_string(k), m.chi.str(), csv_vec(m.beta), describe(o.verdict), m == o.representative ? "1" : "0"});
        }
        for (const auto& cert : o.chain) chain.push_back(jcertificate(cert));
        orbits.push_back(Json{{"representative", jclass(o.representative)},
                              {"size", o.members.size()},
                              {"verdict", jverdict(o.verdict)},
                              {"verdict_constant", o.verdict_constant},
                              {"numeric_only", o.numeric_only},
                              {"members", members},
                              {"chain", chain}});
    }
    for (const auto& g : p.generators) gens.push_back(g);
    c.doc = Json{{"type", jtype(aff)},
                 {"window", Json{{"chi", c.cfg.window.chi_max}, {"beta", c.cfg.window.beta_max}}},
                 {"generators", gens},
                 {"classes", p.classes},
                 {"edges", p.edges},
                 {"incompatible_edges", p.incompatible_edges},
                 {"orbit_count", p.orbits.size()},
                 {"orbits", orbits}};
    if (inconsistent || p.incompatible_edges) c.status = 1;
    c.summary = std::to_string(p.orbits.size()) + " orbits over " + std::to_string(p.classes) + " classes, " +
                std::to_string(inconsistent) + " with a non-constant verdict";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- gv-map

Artifact cmd_gv_map(Context& c) {
    require_format(c, {"json", "csv"});
    DynkinType given = config_type(c.cfg);
    if (given.zero_contracted()) throw UsageError("gv-map: node 0 must be kept");
    DynkinType t = given.affine() ? given.finite_type() : given;
    for (int n : c.cfg.non_flop)
        if (!contains(t.kept(), n)) throw UsageError("--non-flop: node " + std::to_string(n) + " is not a kept finite node");
    Json entries = Json::array();
    Csv csv;
    csv.row({"beta", "node", "flop", "image", "target", "effective", "in_target_rr", "paper_ref"});
    std::size_t count = 0, errors = 0;
    for_box(t.dim(), 0, c.cfg.window.beta_max, [&](const IntVec& beta) {
        if (is_zero(beta)) return;
        for (int node : t.kept()) {
            if (colinear(beta, t.simple_restricted(node))) continue;
            bool flop = !contains(c.cfg.non_flop, node);
            Json j{{"beta", jvec(beta)}, {"node", node}, {"flop", flop}};
            try {
                GvTransport g = gv_transport(t, beta, node, flop);
                j["image"] = jvec(g.image);
                j["target_subset"] = jnodes(g.target_subset);
                j["target"] = g.target;
                j["effective"] = g.effective;
                j["in_target_rr"] = g.in_target_rr;
                j["paper_ref"] = g.paper_ref;
                csv.row({csv_vec(beta), std::to_string(node), flop ? "1" : "0", csv_vec(g.image), g.target,
                         g.effective ? "1" : "0", g.in_target_rr ? "1" : "0", g.paper_ref});
            } catch (const std::logic_error& e) {
                if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
                j["error"] = e.what();
                ++errors;
            }
            ++count;
            entries.push_back(j);
        }
    });
    c.doc = Json{{"type", jtype(t)}, {"beta_max", c.cfg.window.beta_max}, {"non_flop", jnodes(c.cfg.non_flop)},
                 {"count", count}, {"errors", errors}, {"entries", entries}};
    if (errors) c.status = 1;
    c.summary = std::to_string(count) + " transports, " + std::to_string(errors) + " errors";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- dihedral-check

Json jvecs(const std::vector<IntVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(jvec(v));
    return a;
}

Artifact cmd_dihedral(Context& c) {
    require_format(c, {"json"});
    require_nonnegative(c.cfg.kmax, "--kmax");
    std::vector<int> ns;
    if (c.cfg.n) {
        if (*c.cfg.n < 2 || *c.cfg.n > 6) throw UsageError("--n must lie in 2..6");
        ns.push_back(*c.cfg.n);
    } else {
        ns = {2, 3, 4, 5};
    }
    Json reports = Json::array();
    std::size_t failed = 0;
    for (int n : ns) {
        ClassifyReport cl = classify_restricted(n);
        ParityReport mr = mozgovoy_reineke_check(n, c.cfg.kmax);
        PropositionReport pr = proposition_check(n, n <= 3 ? 3 : 2);
        bool ok = cl.ok() && mr.ok() && pr.ok();
        if (!ok) ++failed;
        reports.push_back(Json{
            {"n", n},
            {"pass", ok},
            {"classify", Json{{"pass", cl.ok()},
                              {"roots", cl.roots_part.size()},
                              {"compounds", jvecs(cl.compound_part)},
                              {"covers_roots", cl.covers_roots},
                              {"covers_compounds", cl.covers_compounds},
                              {"unclassified", jvecs(cl.unclassified)}}},
            {"parity", Json{{"pass", mr.ok()},
                            {"k_max", mr.k_max},
                            {"odd_roots", mr.odd_roots},
                            {"even_roots", mr.even_roots},
                            {"displayed_pair", mr.displayed_pair},
                            {"odd_not_compound", jvecs(mr.odd_not_compound)},
                            {"even_compound", jvecs(mr.even_compound)},
                            {"compounds_missed", jvecs(mr.compounds_missed)}}},
            {"vanishing", Json{{"pass", pr.ok()},
                               {"bound", pr.bound},
                               {"checked", pr.checked},
                               {"forced_zero", pr.forced_zero},
                               {"paper_ref", "bps-vanishing"},
                               {"counterexamples", jvecs(pr.counterexamples)}}}});
    }
    c.doc = Json{{"reports", reports}, {"failed", failed}};
    if (failed) c.status = 1;
    c.summary = std::to_string(ns.size() - failed) + "/" + std::to_string(ns.size()) + " dihedral cases pass";
    return finish(c);
}

// ---------------------------------------------------------------- selftest

Artifact cmd_selftest(Context& c) {
    require_format(c, {"json", "csv"});
    SelftestReport r = run_selftest(10000);
    Json lines = Json::array();
    Csv csv;
    csv.row({"check", "checked", "mismatches"});
    std::size_t mismatches = 0;
    for (const auto& l : r.lines) {
        mismatches += l.mismatches;
        Json j{{"check", l.name}, {"checked", l.checked}, {"mismatches", l.mismatches}};
        if (!l.detail.empty()) j["detail"] = l.detail;
        lines.push_back(j);
        csv.row({l.name, std::to_string(l.checked), std::to_string(l.mismatches)});
    }
    c.doc = Json{{"pass", r.ok()}, {"mismatches", mismatches}, {"checks", lines}};
    if (!r.ok()) c.status = 1;
    c.summary = std::string(r.ok() ? "selftest passed" : "selftest FAILED") + ", " + std::to_string(mismatches) + " mismatches";
    if (c.cfg.format == "csv") return text(c, csv.s.str());
    return finish(c);
}

// ---------------------------------------------------------------- export

Artifact cmd_export(Context& c) {
    require_format(c, {"json", "dot", "svg"});
    require_nonnegative(c.cfg.kmax, "--kmax");
    DynkinType t = config_type(c.cfg);
    if (c.cfg.format == "dot") return text(c, diagram_dot(t));
    if (c.cfg.format == "svg") return cmd_chambers(c);
    RestrictedRootSet rr = restricted_roots(t, c.cfg.kmax);
    Json roots = Json::array(), restricted = Json::array(), planes = Json::array();
    for (const auto& r : t.finite_roots().positive_roots) roots.push_back(jvec(r));
    for (const auto& [v, r] : rr.elements) restricted.push_back(Json{{"coeffs", jvec(v)}, {"mult", jint(r.multiplicity)}});
    for (const auto& h : arrangement_hyperplanes(t, c.cfg.kmax)) planes.push_back(jhyperplane(h));
    c.doc = Json{{"type", jtype(t)}, {"diagram", jdiagram(*t.diagram())}, {"kept", jnodes(t.kept())}};
    if (t.affine()) {
        c.doc["imaginary_root"] = jvec(t.imaginary());
        c.doc["restricted_imaginary"] = jvec(t.restricted_imaginary());
    }
    c.doc["finite_positive_roots"] = roots;
    c.doc["restricted_roots"] = restricted;
    c.doc["hyperplanes"] = planes;
    c.summary = std::to_string(rr.size()) + " restricted roots, " + std::to_string(planes.size()) + " hyperplanes";
    return finish(c);
}

}  // namespace

Artifact execute(const std::string& command, const JobConfig& config) {
    static const std::map<std::string, Artifact (*)(Context&)> table{
        {"roots", cmd_roots},         {"restricted-roots", cmd_restricted}, {"check-gcd", cmd_check_gcd},
        {"chambers", cmd_chambers},   {"gallery", cmd_gallery},             {"mutate", cmd_mutate},
        {"vanishing-table", cmd_vanishing}, {"orbits", cmd_orbits},         {"gv-map", cmd_gv_map},
        {"dihedral-check", cmd_dihedral},   {"selftest", cmd_selftest},     {"export", cmd_export}};
    auto it = table.find(command);
    if (it == table.end()) throw UsageError("unknown command '" + command + "'");
    Context c{command, config, Json::object(), 0, ""};
    return it->second(c);
}

int run(const std::string& command, const JobConfig& config, std::ostream& out, std::ostream& err) {
    Artifact a = execute(command, config);
    if (config.out.empty()) {
        out << a.body;
    } else {
        std::ofstream f(config.out, std::ios::binary);
        if (!f) throw UsageError("--out: cannot open '" + config.out + "'");
        f << a.body;
        if (!f) throw std::runtime_error("write to '" + config.out + "' failed");
    }
    if (!a.summary.empty()) err << a.summary << "\n";
    return a.status;
}

}  // namespace cdvwall::cli
