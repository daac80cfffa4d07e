// Graph invariants with the closed-form claims they are checked against:
// diameter, completeness, independence number, domination number, maximum
// minimal dominating set size, and the independent-implies-linearly-
// independent property.  Every computation here is exact; the functions
// return witnesses wherever a claim could fail.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nzc/nzcgraph.hpp"

namespace nzc {

enum class CheckStatus { pass, fail, not_applicable, skipped };
const char* to_string(CheckStatus s);

struct TheoremCheck {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail; // witness or short reason
};

struct Diameter {
    std::uint64_t value = 0;
    bool infinite = false; // some vertex pair unreachable
};

Diameter diameter(const ExplicitGraph& g);

// Class-route diameter: BFS over support classes; two distinct vertices of
// one class are at distance 1 (weight >= 2).  Eccentricity depends only on
// the support size, so one representative mask per popcount suffices.
Diameter diameter(const ClassGraph& cg);

bool is_complete(const ExplicitGraph& g);
bool is_complete(const ClassGraph& cg);

// Exact maximum independent set size by branch and bound over the dense
// adjacency rows; deterministic lowest-id-first order.
int independence_number(const ExplicitGraph& g); // CapExceeded above kIndependenceSearchCap

// Pairwise-disjoint non-empty supports each consume at least one coordinate
// and the n singletons realize the bound, so the class route is a count.
int independence_number_classes(const ClassGraph& cg);

struct DominationResult {
    int number = 0;
    std::uint64_t witness = 0;   // dominating vertex id (the all-ones tuple)
    bool ok = false;             // witness verified against every other vertex
    std::uint64_t failed_at = 0; // vertex (or class mask) missed by the witness
};

DominationResult domination_number(const ExplicitGraph& g);
DominationResult domination_number(const ClassGraph& cg);

struct MinimalDominatingResult {
    int max_size = 0;
    std::vector<std::uint64_t> witness; // one maximum minimal dominating set
};

// Full subset enumeration; CapExceeded above `cap` vertices.
MinimalDominatingResult max_minimal_dominating_size(const ExplicitGraph& g, int cap);

// All independent sets (the empty set included) in depth-first pre-order,
// extending by ascending vertex id; max_size < 0 means unbounded.
std::vector<std::vector<std::uint64_t>> enumerate_independent_sets(const ExplicitGraph& g,
                                                                   int max_size = -1);

struct LinIndResult {
    bool pass = false;
    std::vector<std::uint64_t> witness; // first independent set of deficient rank
};

// Every graph-independent set must be linearly independent (rank = size).
LinIndResult verify_independence_implies_linear(const FiniteField& f, const ExplicitGraph& g);

struct InvariantReport {
    int q = 0;
    int n = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    Diameter diam;
    bool complete = false;
    std::uint64_t independence = 0;
    int domination = 0;
    bool has_max_minimal = false;
    int max_minimal = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> degree_histogram; // degree -> count, ascending
    std::vector<TheoremCheck> checks;

    bool any_failure() const;
};

// Full report over either representation (explicit within caps.explicit_cap,
// class otherwise).  basis, when given, re-expresses coordinates before
// adjacency; it requires the explicit route.
InvariantReport analyze(const FiniteField& f, int n, const Caps& caps, const Basis* basis = nullptr);

nlohmann::ordered_json report_json(const InvariantReport& r);

} // namespace nzc
