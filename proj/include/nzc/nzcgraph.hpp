// Non-zero component graph of GF(q)^n with respect to a basis.
//
// Vertices are the q^n - 1 non-zero vectors; two distinct vertices are
// adjacent when their coordinate supports intersect.  Two representations:
//
//  * ExplicitGraph: one node per vector, dense bit-matrix adjacency.
//    Bounded by Caps::explicit_cap vertices.
//  * ClassGraph: one node per non-empty support mask S, carrying the
//    weight (q-1)^|S| of vectors sharing that support.  Adjacency is mask
//    intersection, every class is internally a clique for weight >= 2.
//    Bounded by kClassDimCap dimensions.
//
// Vertex ids follow the lexicographic enumeration of coordinate tuples
// (coordinate 0 most significant): id(v) = sum v_i * q^(n-1-i) - 1.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nzc/ffield.hpp"
#include "nzc/vspace.hpp"

namespace nzc {

struct Caps {
    std::uint64_t explicit_cap = 4096; // max vertices for explicit construction
    int aut_cap = 16;                  // max vertices for automorphism search
    int domination_cap = 16;           // max vertices for dominating-set enumeration
};

inline constexpr int kClassDimCap = 24;          // masks must fit comfortably in 32 bits
inline constexpr int kIndependenceSearchCap = 255; // branch-and-bound bitset width - 1
inline constexpr int kIndependentEnumCap = 64;   // independent-set enumeration vertex cap

struct ClassEntry {
    Mask mask = 0;             // support, bit i = coordinate i is non-zero
    std::uint64_t weight = 0;  // (q-1)^popcount(mask)
};

// Support-class compression of the graph: entries are ordered by increasing
// mask value, which is also the order induced by vertex ids of class minima.
struct ClassGraph {
    int q = 0;
    int n = 0;
    std::vector<ClassEntry> entries;

    std::uint64_t vertex_count() const;
    static bool adjacent(Mask a, Mask b) { return (a & b) != 0; }
};

struct ExplicitGraph {
    int q = 0;
    int n = 0;
    std::uint64_t vcount = 0;
    std::vector<Vec> coords;          // coords[id] = coordinate tuple of vertex id
    std::vector<std::string> labels;  // labels[id] = comma-joined element names
    std::uint64_t edges = 0;

    bool adjacent(std::uint64_t u, std::uint64_t v) const {
        return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1;
    }
    std::uint64_t degree(std::uint64_t u) const;
    bool operator==(const ExplicitGraph& other) const;

    // construction only via explicit_graph()/expand()
    std::vector<std::uint64_t> bits_;
    std::uint64_t stride_ = 0;
    void set_edge(std::uint64_t u, std::uint64_t v);
};

// Adjacency of two vectors given by their coordinate tuples.
bool adjacent(const Vec& a, const Vec& b);

ClassGraph class_graph(const FiniteField& f, int n);

// Explicit graph over the canonical basis; coordinates are read off directly.
ExplicitGraph explicit_graph(const FiniteField& f, int n, const Caps& caps);

// Explicit graph with respect to an arbitrary basis: vertex v keeps its id in
// the ambient enumeration, adjacency uses the coordinates of v in the basis.
ExplicitGraph explicit_graph(const FiniteField& f, int n, const Caps& caps, const Basis& basis);

// Expand a class graph to an explicit one (adjacency via mask intersection;
// an independent cross-check of the coordinate-scanning route).
ExplicitGraph expand(const FiniteField& f, const ClassGraph& cg, const Caps& caps);

// Degree of a vertex with support size k, by the closed formula
// (q^k - 1) * q^(n-k) - 1.
std::uint64_t degree_formula(int q, int n, int k);

// Brute degree of the vertex holding coordinate tuple v (row scan).
std::uint64_t degree_of(const ExplicitGraph& g, const Vec& v);

// Class-route degree of a vertex with support S: sum of weights of classes
// meeting S, minus the vertex itself.  Direct summation, no transform.
std::uint64_t degree_of(const ClassGraph& cg, const Vec& v);

// Degree of every class, computed from the class weights alone: the number
// of vectors whose support meets S, minus the vertex itself.  Returned in
// entry order.  Uses a subset-sum (zeta) transform over masks.
std::vector<std::uint64_t> class_degrees(const ClassGraph& cg);

std::uint64_t edge_count_from_classes(const ClassGraph& cg);

// DOT serialization: numeric ids, label attribute, edges sorted by (u, v).
std::string to_dot(const ExplicitGraph& g);

} // namespace nzc
