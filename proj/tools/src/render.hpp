#pragma once

#include "cdvwall/arrangement.hpp"
#include "cdvwall/bps.hpp"
#include "cdvwall/groupoid.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cdvwall::cli {

// insertion-ordered so that every document has a fixed key layout
using Json = nlohmann::ordered_json;

// number when it fits in 64 bits, decimal string otherwise
Json jint(const Integer& x);
Json jvec(const IntVec& v);
Json jrational(const Rational& q);
Json jmatrix(const IntMatrix& m);
Json jnodes(const NodeSet& s);
Json jtype(const DynkinType& t);
Json jdiagram(const Diagram& d);
Json jlabel(const Label& l);
Json jchamber(const Chamber& c);
Json jhyperplane(const Hyperplane& h);
Json jclass(const CurveClass& c);
Json jverdict(const Verdict& v);
Json jarrow(const GroupoidArrow& a);

std::string label_text(const Label& l);
std::string csv_vec(const IntVec& v);  // "1 0 2", safe inside a CSV field
std::string csv_nodes(const NodeSet& s);

// Dynkin diagram; contracted nodes drawn filled
std::string diagram_dot(const DynkinType& t);
std::string chamber_dot(const DynkinType& t, const std::vector<ChamberGraph>& graphs);
// Level+ slice of an affine type with 0 kept and |J^c| = 2
std::string level_svg(const DynkinType& t, const ChamberGraph& g);
bool level_svg_available(const DynkinType& t);

}  // namespace cdvwall::cli
