#pragma once

#include "cdvwall/dynkin.hpp"
#include "cdvwall/restriction.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cdvwall {

// Brute-force re-derivations used to cross-check the engine.  They take only
// the Diagram (its node set and Cartan matrix) and recompute everything else
// with machine integers.

using SmallVec = std::vector<long long>;

// positive roots: simple roots closed under "add alpha_i while v^T A v = 2"
std::vector<SmallVec> oracle_positive_roots(const Diagram& finite);

// double loop over all roots: project away J, drop zeros
std::set<SmallVec> oracle_restricted_roots(const Diagram& finite, const NodeSet& contracted);

// for every restricted root r with d = gcd, all (i/d) r (i = 1..d) are again
// restricted roots; a failure is described in *why
bool oracle_gcd_check(const Diagram& finite, const NodeSet& contracted, std::string* why = nullptr);

struct ProbeReport {
    std::string type;
    std::size_t samples = 0;
    std::size_t skipped = 0;  // on a hyperplane
    std::size_t located = 0;
    std::size_t label_checked = 0;  // calJ empty: label recomputed by folding
    std::size_t mismatches = 0;
    std::vector<std::string> failures;  // first few
};

// deterministic rational points scaled to Level+-; each is located by the
// engine and the resulting cone is checked independently: the point is a
// positive combination of its rays and no real hyperplane meets its interior.
// For calJ empty the Weyl element is also recomputed by folding the point
// into C with simple reflections.
ProbeReport oracle_chamber_probe(const DynkinType& t, std::size_t samples, long long box, std::uint64_t seed = 20240601);

struct SelftestLine {
    std::string name;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestLine> lines;
    bool ok() const;
};

// oracle vs engine: root counts, restricted roots, gcd closure, chamber probes
SelftestReport run_selftest(std::size_t probes = 10000);

}  // namespace cdvwall
