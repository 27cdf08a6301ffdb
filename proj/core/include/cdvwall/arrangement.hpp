#pragma once

#include "cdvwall/mutation.hpp"
#include "cdvwall/restriction.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdvwall {

// {theta : theta(normal) = offset}; normal primitive with first nonzero
// coefficient positive.  Offsets are rational: a slice H_{d n, k} becomes
// (n, k/d).
struct Hyperplane {
    IntVec normal;
    Rational offset = 0;

    bool operator==(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Hyperplane& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

Hyperplane make_hyperplane(const IntVec& v, const Rational& offset = 0);
std::string to_string(const Hyperplane& h);

// sign * w C_K inside R^{calJ^c}; rays and inward facet normals are indexed
// by the facet nodes K^c (ascending)
struct Chamber {
    int sign = 1;
    Label label;
    NodeSet facets;
    std::vector<IntVec> rays;
    std::vector<IntVec> normals;

    IntVec interior() const;
    std::size_t facet_position(int node) const;
    bool operator==(const Chamber& o) const { return sign == o.sign && label == o.label; }
};

struct ChamberKey {
    int sign;
    Label label;
    bool operator<(const ChamberKey& o) const {
        if (sign != o.sign) return sign < o.sign;
        return label < o.label;
    }
};
ChamberKey key_of(const Chamber& c);

class SignCrossing : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Chamber make_chamber(const DynkinType& t, int sign, const Label& label);
Chamber fundamental_chamber(const DynkinType& t, int sign = 1);

struct Crossing {
    Chamber chamber;
    Hyperplane wall;
};

// label from mutation, checked against the shared facet; SignCrossing when
// the facet lies in H_{pi(r^im)}
Crossing cross_wall(const DynkinType& t, const Chamber& c, int facet_node);

// purely geometric: the chamber across the facet, found by rotating each
// codimension-two face to the next arrangement hyperplane.  Returns
// primitive rays ordered like c.rays with the crossed one replaced.
std::vector<IntVec> geometric_cross(const DynkinType& t, const Chamber& c, int facet_node);

// simplicial cone with facets on arrangement hyperplanes and no hyperplane
// meeting its interior
bool is_chamber(const DynkinType& t, const std::vector<IntVec>& rays);

// arrangement hyperplanes (primitive normals) containing all the given vectors
std::set<IntVec> hyperplanes_through(const DynkinType& t, const std::vector<IntVec>& points);

struct ChamberGraph {
    std::vector<Chamber> chambers;
    std::vector<std::size_t> depth;
    std::map<ChamberKey, std::size_t> index;
    struct Arc {
        std::size_t to;
        int node;
        Hyperplane wall;
    };
    std::vector<std::vector<Arc>> arcs;

    std::optional<std::size_t> find(const Chamber& c) const;
};

ChamberGraph enumerate_chambers(const DynkinType& t, std::size_t max_len, int sign = 1);

struct Gallery {
    std::vector<Chamber> chambers;
    std::vector<Hyperplane> walls;
    std::vector<int> nodes;  // facet node crossed at each step

    std::size_t length() const { return walls.size(); }
};

std::set<IntVec> separating_hyperplanes(const DynkinType& t, const IntVec& p, const IntVec& q);

Gallery minimal_gallery(const DynkinType& t, const Chamber& source, const Chamber& target, std::size_t bound = 10000);
Gallery gallery_through_wall(const DynkinType& t, int node, const IntVec& root, std::size_t bound = 20000);
// consecutive chambers share a facet on the recorded wall and lie on opposite sides
bool verify_gallery(const DynkinType& t, const Gallery& g, std::string* why = nullptr);
bool walls_distinct(const Gallery& g);

// the chamber whose interior contains p; throws for points on a hyperplane
Chamber locate_chamber(const DynkinType& t, const RatVec& p, std::size_t bound = 100000);

// pairing of p with pi(r^im): the sign class of a point (affine only)
int sign_class(const DynkinType& t, const RatVec& p);

struct LevelPoint {
    RatVec coordinates;  // over J^c, or over calJ^c when 0 is contracted
    int sign = 1;
    RatVec image;  // over calJ^c
};

LevelPoint level_slice_point(const DynkinType& t, const RatVec& theta, int sign);

// Affine with 0 kept: slices {theta(r̄) = c} in R^{J^c} of the real
// hyperplanes within the window.  Otherwise the linear hyperplanes over
// calJ^c (offset 0) within the window.
std::vector<Hyperplane> arrangement_hyperplanes(const DynkinType& t, long long k_max);

}  // namespace cdvwall
