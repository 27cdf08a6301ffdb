#pragma once

#include "cdvwall/integer.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cdvwall {

enum class Family { A, D, E };

char family_char(Family f);
Family parse_family(const std::string& s);

struct Edge {
    int a = 0;
    int b = 0;
    int multiplicity = 1;  // 2 only for the affine A_1 double edge
};

// Node labels: finite nodes 1..rank, extended vertex 0.  Vectors over the
// diagram are indexed by node position: label for affine diagrams, label-1
// for finite ones.
class Diagram {
public:
    Diagram(Family family, int rank, bool affine, std::vector<Edge> edges);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    bool affine() const { return affine_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<int>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const IntMatrix& cartan() const { return cartan_; }

    std::size_t index(int label) const;
    int label(std::size_t index) const { return nodes_[index]; }
    bool has_node(int label) const;
    int degree(int label) const;
    std::string name() const;

    IntVec simple_root(int label) const;

private:
    Family family_;
    int rank_;
    bool affine_;
    std::vector<int> nodes_;
    std::vector<Edge> edges_;
    IntMatrix cartan_;
};

using DiagramPtr = std::shared_ptr<const Diagram>;

struct RootSystem {
    DiagramPtr diagram;
    std::vector<IntVec> positive_roots;  // sorted by height, then lexicographically
    IntVec highest_root;
    IntMatrix cartan;

    std::size_t size() const { return 2 * positive_roots.size(); }
    std::vector<IntVec> all_roots() const;  // positives, then their negatives
};

struct AffineRealRoot {
    IntVec finite_part;  // over the finite nodes 1..rank
    long long level = 0;

    bool operator==(const AffineRealRoot&) const = default;
};

// throws std::invalid_argument for unsupported (family, rank)
DiagramPtr build_diagram(Family family, int rank, bool affine);
DiagramPtr finite_part(const Diagram& affine);

RootSystem enumerate_roots(const DiagramPtr& finite);
IntVec imaginary_root(const Diagram& affine);
std::vector<AffineRealRoot> real_roots_window(const Diagram& affine, long long k_max);

// affine coordinates of r + k r^im
IntVec affine_vector(const AffineRealRoot& r, const IntVec& imaginary);

// Positive and negative real roots with |c_0| <= k_max, by reflection closure
// on the affine Cartan matrix (no use of the finite root system).
std::vector<IntVec> affine_real_roots_closure(const Diagram& affine, long long k_max);

// sigma_i(v) = v - <v, alpha_i> alpha_i
IntVec reflect(const IntMatrix& cartan, const IntVec& v, std::size_t i);
bool is_positive(const IntVec& v);
bool is_negative(const IntVec& v);
Integer height(const IntVec& v);

}  // namespace cdvwall
