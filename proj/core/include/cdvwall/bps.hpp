#pragma once

#include "cdvwall/groupoid.hpp"
#include "cdvwall/restriction.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cdvwall {

// (chi, beta) in H_0 + H_2 with beta over J^c.  Associated dimension vector
// delta = beta + chi * pi(r^im) over calJ^c = {0} + J^c.
struct CurveClass {
    Integer chi;
    IntVec beta;

    bool operator==(const CurveClass&) const = default;
    bool operator<(const CurveClass& o) const {
        if (chi != o.chi) return chi < o.chi;
        return beta < o.beta;
    }
};

std::string to_string(const CurveClass& c);
Integer multiplicity(const CurveClass& c);  // gcd(chi, beta)
Integer beta_multiplicity(const CurveClass& c);  // gcd(beta)

// affine type with 0 kept, so that calJ = J
IntVec associated_vector(const DynkinType& affine, const CurveClass& c);
CurveClass class_of(const DynkinType& affine, const IntVec& delta);
// (Delta_aff, J) for a finite type (Delta, J)
DynkinType affine_of(const DynkinType& finite);

enum class VerdictKind { ForcedZero, Candidate };
enum class CandidateKind { Real, Imaginary };

// ForcedZero cites the vanishing statement used; Candidate means "not forced
// to vanish", never "nonzero".
struct Verdict {
    VerdictKind kind = VerdictKind::Candidate;
    CandidateKind candidate = CandidateKind::Real;
    IntVec base;  // delta/d (or beta/d for the geometric form)
    Integer d;
    std::string paper_ref;
    bool global = false;  // also labels the global invariant

    bool forced_zero() const { return kind == VerdictKind::ForcedZero; }
};

std::string describe(const Verdict& v);

// delta over calJ^c, non-negative and nonzero
Verdict vanishing_verdict(const RestrictedRootIndex& index, const IntVec& delta, bool weighted_homogeneous = false);
Verdict vanishing_verdict(const DynkinType& affine, const IntVec& delta, bool weighted_homogeneous = false);
// finite (Delta, J); beta + chi pi(r^im) must be non-negative
Verdict geometric_verdict(const DynkinType& finite, const CurveClass& c);
// genus zero GV: n_beta forced to vanish unless beta in RR^+(Delta, J)
Verdict gv_verdict(const DynkinType& finite, const IntVec& beta);

struct SymmetryWindow {
    long long chi_max = 6;
    long long beta_max = 3;

    bool operator==(const SymmetryWindow&) const = default;
};

struct SymmetryConfig {
    bool rigidified = false;
    bool weighted_homogeneous = false;
    // stability twists and mutation symmetries hold for numerical invariants only
    bool numeric_relations = true;
    NodeSet non_flop;
    SymmetryWindow window;
};

enum class Strength { Motivic, Numeric };
const char* to_string(Strength s);

struct Application {
    CurveClass image;
    long long n = -1;  // duality only
};

struct Generator {
    std::string name;
    std::string paper_ref;
    Strength strength = Strength::Motivic;
    std::string domain;
    std::function<std::optional<Application>(const CurveClass&)> apply;
};

// mutation at a non-flop node: the identification of the mutated lattice with
// Z calJ^c must fix pi(r^im) and carry RR onto RR, otherwise the node is
// rejected with std::invalid_argument
IntMatrix mutation_symmetry(const DynkinType& affine, int node, long long k_max = 3);

std::vector<Generator> symmetry_generators(const DynkinType& affine, const SymmetryConfig& config);

struct Certificate {
    CurveClass from;
    CurveClass to;
    std::string generator;
    std::string paper_ref;
    Strength strength = Strength::Motivic;
    long long n = -1;
};

struct Orbit {
    CurveClass representative;
    std::vector<CurveClass> members;
    Verdict verdict;  // of the representative
    bool verdict_constant = true;
    bool numeric_only = false;  // some tree certificate is numeric
    // spanning tree rooted at the representative: one certificate per other member
    std::vector<Certificate> chain;
};

struct OrbitPartition {
    std::string type;
    std::vector<std::string> generators;
    std::vector<Orbit> orbits;
    std::size_t classes = 0;
    std::size_t edges = 0;
    std::size_t incompatible_edges = 0;  // verdict differs across one generator edge
};

// classes: 0 <= chi <= chi_max, |beta_i| <= beta_max, beta + chi pi(r^im) >= 0,
// (chi, beta) != 0
std::vector<CurveClass> window_classes(const DynkinType& affine, const SymmetryWindow& w);
OrbitPartition orbit_partition(const DynkinType& affine, const SymmetryConfig& config);

struct GvTransport {
    IntVec beta;
    int node = 0;
    bool flop = false;
    IntVec image;  // over J'^c when flopping, identified with J^c otherwise
    NodeSet target_subset;
    std::string target;  // "flopped space" or "same space"
    bool effective = false;
    bool in_target_rr = false;
    std::string paper_ref;
};

// n_beta = n^+_{omega_i beta} (flop) or n_{omega_i beta} (no flop)
GvTransport gv_transport(const DynkinType& finite, const IntVec& beta, int node, bool flop);

}  // namespace cdvwall
