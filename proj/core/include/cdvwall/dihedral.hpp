#pragma once

#include "cdvwall/bps.hpp"
#include "cdvwall/restriction.hpp"

#include <string>
#include <vector>

namespace cdvwall {

// (D_2n, J = {2, 4, ..., 2n-2}) and the lattice isomorphism
// Z J^c -> Z D_{n+1}: alpha_{2i-1} -> alpha_i, alpha_{2n} -> alpha_{n+1}.
// The affine version extends it by alpha_0 -> alpha_0.
struct DihedralCase {
    int n = 2;
    DynkinType source;         // (D_2n, J)
    DynkinType affine_source;  // (~D_2n, J)
    DiagramPtr target;         // D_{n+1}; for n = 2 this is A_3 with centre 1 and tips 2, 3
    DiagramPtr affine_target;  // ~D_{n+1}; for n = 2 the 4-cycle 0-2-1-3-0
    std::vector<int> iso;      // iso[k] = target node of the k-th kept source node

    IntVec map(const IntVec& kept) const;         // Z J^c -> Z D_{n+1}
    IntVec map_affine(const IntVec& kept) const;  // Z calJ^c -> Z ~D_{n+1}
    IntVec unmap_affine(const IntVec& v) const;
};

DihedralCase dihedral_case(int n);

// +-(2(alpha_i + ... + alpha_{n-1}) + alpha_n + alpha_{n+1}), i = 2..n, over D_{n+1}
std::vector<IntVec> dihedral_compounds(int n);

struct ClassifyReport {
    int n = 0;
    std::vector<IntVec> roots_part;
    std::vector<IntVec> compound_part;
    std::vector<IntVec> unclassified;  // in neither part
    bool covers_roots = false;         // roots_part = Rts D_{n+1}
    bool covers_compounds = false;     // compound_part = all signed compounds
    bool ok() const { return unclassified.empty() && covers_roots && covers_compounds; }
};

ClassifyReport classify_restricted(int n);

struct PropositionReport {
    int n = 0;
    long long bound = 0;
    std::size_t checked = 0;
    std::size_t forced_zero = 0;
    std::vector<IntVec> counterexamples;  // over ~D_{n+1}
    bool ok() const { return counterexamples.empty(); }
};

// every delta over ~D_{n+1} with entries in [0, bound]: ForcedZero exactly
// when delta is not d (r + k r^im) with r in {0} + Rts D_{n+1} + compounds
PropositionReport proposition_check(int n, long long bound = 3);

struct ParityReport {
    int n = 0;
    long long k_max = 0;
    std::size_t odd_roots = 0;
    std::size_t even_roots = 0;
    bool displayed_pair = false;  // the two displayed roots are swapped by Sigma and sum to the compound
    std::vector<IntVec> odd_not_compound;
    std::vector<IntVec> even_compound;
    std::vector<IntVec> compounds_missed;
    bool ok() const {
        return displayed_pair && odd_not_compound.empty() && even_compound.empty() && compounds_missed.empty();
    }
};

// Sigma swaps alpha_0 <-> alpha_1 and alpha_n <-> alpha_{n+1} on ~D_{n+1}.
// Real roots r with r_0 + r_1 + r_n + r_{n+1} odd are exactly those for which
// r + Sigma r is a signed compound modulo Z r^im.
ParityReport mozgovoy_reineke_check(int n, long long k_max = 3);

}  // namespace cdvwall
