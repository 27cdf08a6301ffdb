#include "render.hpp"

#include <climits>
#include <sstream>

namespace cdvwall::cli {

Json jint(const Integer& x) {
    if (x >= LLONG_MIN && x <= LLONG_MAX) return Json(static_cast<long long>(x));
    return Json(x.str());
}

Json jvec(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

Json jrational(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return jint(boost::multiprecision::numerator(q));
    return Json(to_string(q));
}

Json jmatrix(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(jvec(m.row(r)));
    return a;
}

Json jnodes(const NodeSet& s) {
    Json a = Json::array();
    for (int x : s) a.push_back(x);
    return a;
}

Json jtype(const DynkinType& t) {
    const Diagram& d = *t.diagram();
    return Json{{"family", std::string(1, family_char(d.family()))},
                {"rank", d.rank()},
                {"affine", d.affine()},
                {"contracted", jnodes(t.contracted())},
                {"name", t.name()}};
}

Json jdiagram(const Diagram& d) {
    Json edges = Json::array();
    for (const auto& e : d.edges()) edges.push_back(Json::array({e.a, e.b, e.multiplicity}));
    Json nodes = Json::array();
    for (int n : d.nodes()) nodes.push_back(n);
    return Json{{"name", d.name()}, {"nodes", nodes}, {"edges", edges}, {"cartan", jmatrix(d.cartan())}};
}

Json jlabel(const Label& l) {
    Json word = Json::array();
    for (int x : l.w.word()) word.push_back(x);
    return Json{{"word", word}, {"subset", jnodes(l.subset)}};
}

Json jchamber(const Chamber& c) {
    Json rays = Json::array(), normals = Json::array();
    for (const auto& r : c.rays) rays.push_back(jvec(r));
    for (const auto& n : c.normals) normals.push_back(jvec(n));
    Json j = jlabel(c.label);
    j["sign"] = c.sign;
    j["facets"] = jnodes(c.facets);
    j["rays"] = rays;
    j["normals"] = normals;
    return j;
}

Json jhyperplane(const Hyperplane& h) { return Json{{"normal", jvec(h.normal)}, {"offset", jrational(h.offset)}}; }

Json jclass(const CurveClass& c) { return Json{{"chi", jint(c.chi)}, {"beta", jvec(c.beta)}}; }

Json jverdict(const Verdict& v) {
    Json j{{"verdict", v.forced_zero() ? "ForcedZero" : "Candidate"}};
    if (!v.forced_zero()) j["candidate"] = v.candidate == CandidateKind::Imaginary ? "imaginary" : "real";
    j["d"] = jint(v.d);
    j["base"] = jvec(v.base);
    j["global"] = v.global;
    j["paper_ref"] = v.paper_ref;
    return j;
}

Json jarrow(const GroupoidArrow& a) {
    Json word = Json::array();
    for (const auto& s : a.word) word.push_back(Json::array({jnodes(s.subset), s.node}));
    return Json{{"source", jnodes(a.source)}, {"target", jnodes(a.target)}, {"word", word}};
}

std::string label_text(const Label& l) {
    std::ostringstream s;
    s << "w=";
    if (l.w.word().empty()) s << "e";
    for (std::size_t k = 0; k < l.w.word().size(); ++k) s << (k ? "." : "") << "s" << l.w.word()[k];
    s << " K=" << to_string(l.subset);
    return s.str();
}

std::string csv_vec(const IntVec& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + v[k].str();
    return s;
}

std::string csv_nodes(const NodeSet& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + std::to_string(s[k]);
    return out;
}

std::string diagram_dot(const DynkinType& t) {
    const Diagram& d = *t.diagram();
    std::ostringstream s;
    s << "graph \"" << t.name() << "\" {\n  node [shape=circle];\n";
    for (int n : d.nodes()) {
        s << "  n" << n << " [label=\"" << n << "\"";
        if (contains(t.contracted(), n)) s << ", style=filled, fillcolor=black, fontcolor=white";
        s << "];\n";
    }
    for (const auto& e : d.edges()) {
        s << "  n" << e.a << " -- n" << e.b;
        if (e.multiplicity > 1) s << " [label=\"" << e.multiplicity << "\"]";
        s << ";\n";
    }
    s << "}\n";
    return s.str();
}

std::string chamber_dot(const DynkinType& t, const std::vector<ChamberGraph>& graphs) {
    std::ostringstream s;
    s << "graph \"chambers " << t.name() << "\" {\n  node [shape=box];\n";
    for (const auto& g : graphs) {
        std::string prefix = g.chambers.front().sign > 0 ? "p" : "m";
        for (std::size_t k = 0; k < g.chambers.size(); ++k) {
            const Chamber& c = g.chambers[k];
            s << "  " << prefix << k << " [label=\"" << (c.sign > 0 ? "+" : "-") << " " << label_text(c.label) << "\"];\n";
        }
        for (std::size_t k = 0; k < g.chambers.size(); ++k)
            for (const auto& a : g.arcs[k])
                if (k < a.to)
                    s << "  " << prefix << k << " -- " << prefix << a.to << " [label=\"" << to_string(a.wall) << "\"];\n";
    }
    s << "}\n";
    return s.str();
}

bool level_svg_available(const DynkinType& t) { return t.affine() && !t.zero_contracted() && t.dim() == 3; }

namespace {

Integer floor_of(const Rational& q) {
    Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

// three decimals, rounded half up
std::string fixed3(const Rational& q) {
    Integer m = floor_of(q * 1000 + Rational(1) / Rational(2));
    std::string sign = m < 0 ? "-" : "";
    if (m < 0) m = -m;
    Integer whole = m / 1000, frac = m % 1000;
    std::string f = frac.str();
    while (f.size() < 3) f = "0" + f;
    return sign + whole.str() + "." + f;
}

}  // namespace

std::string level_svg(const DynkinType& t, const ChamberGraph& g) {
    const IntVec& rim = t.restricted_imaginary();
    struct Poly {
        std::vector<std::pair<Rational, Rational>> pts;
        std::string title;
        std::size_t depth;
    };
    std::vector<Poly> polys;
    Rational xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (std::size_t k = 0; k < g.chambers.size(); ++k) {
        const Chamber& c = g.chambers[k];
        Poly p{{}, label_text(c.label), g.depth[k]};
        bool bounded = true;
        for (const auto& r : c.rays) {
            Integer pairing = dot(r, rim) * c.sign;
            if (pairing <= 0) {
                bounded = false;
                break;
            }
            // vertex r / pairing, shown in the J^c coordinates
            Rational x = Rational(r[1]) / Rational(pairing), y = Rational(r[2]) / Rational(pairing);
            p.pts.emplace_back(x, y);
            if (first || x < xmin) xmin = x;
            if (first || x > xmax) xmax = x;
            if (first || y < ymin) ymin = y;
            if (first || y > ymax) ymax = y;
            first = false;
        }
        if (bounded) polys.push_back(std::move(p));
    }
    const Rational size = 760, margin = 20;
    Rational span = std::max(xmax - xmin, ymax - ymin);
    if (span == 0) span = 1;
    Rational scale = size / span;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
    s << "  <title>Level" << (g.chambers.front().sign > 0 ? "+" : "-") << " slice of " << t.name() << "</title>\n";
    for (const auto& p : polys) {
        int shade = 255 - static_cast<int>(std::min<std::size_t>(p.depth, 10) * 16);
        s << "  <polygon points=\"";
        for (std::size_t k = 0; k < p.pts.size(); ++k) {
            Rational x = margin + (p.pts[k].first - xmin) * scale;
            Rational y = margin + (ymax - p.pts[k].second) * scale;
            s << (k ? " " : "") << fixed3(x) << "," << fixed3(y);
        }
        s << "\" fill=\"rgb(" << shade << "," << shade << ",255)\" stroke=\"black\" stroke-width=\"1\">"
          << "<title>" << p.title << "</title></polygon>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace cdvwall::cli
