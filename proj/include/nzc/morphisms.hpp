// Isomorphism and automorphism machinery: the dimension criterion for
// isomorphism, edge-by-edge verification of basis-change maps, exhaustive
// automorphism enumeration at small scale, the coordinate-permutation form
// of automorphisms, and the linearity test that separates graph maps from
// vector-space maps.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nzc/invariants.hpp"
#include "nzc/nzcgraph.hpp"

namespace nzc {

struct IsoResult {
    bool isomorphic = false;  // the dimension criterion n1 == n2
    bool searched = false;    // brute-force witness search ran
    bool search_found = false;
    std::vector<std::uint64_t> witness; // g1 id -> g2 id when found
};

// Decides by dimension, and cross-checks with a backtracking bijection
// search whenever both graphs fit within search_cap vertices.
// Throws FieldMismatch when the graphs live over different field orders.
IsoResult are_isomorphic(const ExplicitGraph& g1, const ExplicitGraph& g2, int search_cap);

struct BasisIsoResult {
    bool pass = false;
    std::uint64_t witness_u = 0; // offending pair when the map breaks an edge
    std::uint64_t witness_v = 0;
};

// Builds T: sum a_i e_i -> sum a_i b_i and verifies, pair by pair, that it
// maps the canonical graph onto the graph built over basis b.
BasisIsoResult basis_change_iso_check(const FiniteField& f, int n, const Basis& b, const Caps& caps);

struct AutomorphismRecord {
    std::vector<std::uint64_t> mapping; // vertex id -> vertex id
    bool has_sigma = false;
    std::vector<int> sigma; // coordinate permutation, 0-based, when the form holds
    bool is_linear = false;
};

// All adjacency-preserving bijections in lexicographic order of the mapping
// arrays.  Throws CapExceeded above aut_cap vertices.  The graph must carry
// canonical coordinates (coords[id] = tuple with that id).
std::vector<AutomorphismRecord> automorphisms(const FiniteField& f, const ExplicitGraph& g,
                                              int aut_cap);

struct FormCheckResult {
    bool ok = false;
    bool has_sigma = false;
    std::vector<int> sigma;
    std::uint64_t witness = 0; // vertex violating the support form
};

// (i) singleton-support vertices map to singleton-support vertices and the
// coordinates they occupy define a permutation sigma; (ii) every vertex v
// satisfies support(image(v)) == sigma(support(v)).
FormCheckResult check_automorphism_form(const ExplicitGraph& g,
                                        const std::vector<std::uint64_t>& mapping);

// True iff the map extended by zero -> zero is additive on every vertex pair
// and homogeneous for every non-zero scalar.
bool is_linear_map(const FiniteField& f, const ExplicitGraph& g,
                   const std::vector<std::uint64_t>& mapping);

struct TransitivityResult {
    bool transitive = false;
    std::string reason; // orbit witness or enumeration summary
};

// n >= 2: two support sizes give two distinct (brute-counted) degrees, which
// split the vertex orbits.  n = 1: orbit of vertex 0 under the enumerated
// automorphism group.  Throws CapExceeded when neither route is feasible.
TransitivityResult vertex_transitivity(const FiniteField& f, int n, const Caps& caps);

nlohmann::ordered_json automorphisms_json(const std::vector<AutomorphismRecord>& records);

} // namespace nzc
