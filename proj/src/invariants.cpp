#include "nzc/invariants.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <map>

namespace nzc {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

Diameter diameter(const ExplicitGraph& g) {
    const std::uint64_t v = g.vcount;
    const std::uint64_t stride = g.stride_;
    Diameter d;
    std::vector<std::uint64_t> frontier(stride), visited(stride), next(stride);
    for (std::uint64_t src = 0; src < v; ++src) {
        std::fill(frontier.begin(), frontier.end(), 0);
        std::fill(visited.begin(), visited.end(), 0);
        frontier[src >> 6] = std::uint64_t{1} << (src & 63);
        visited = frontier;
        std::uint64_t seen = 1, depth = 0;
        while (seen < v) {
            std::fill(next.begin(), next.end(), 0);
            for (std::uint64_t u = 0; u < v; ++u)
                if ((frontier[u >> 6] >> (u & 63)) & 1)
                    for (std::uint64_t w = 0; w < stride; ++w) next[w] |= g.bits_[u * stride + w];
            std::uint64_t grew = 0;
            for (std::uint64_t w = 0; w < stride; ++w) {
                next[w] &= ~visited[w];
                visited[w] |= next[w];
                grew += std::popcount(next[w]);
            }
            if (grew == 0) break; // unreachable remainder
            seen += grew;
            ++depth;
            frontier = next;
        }
        if (seen < v) {
            d.infinite = true;
            return d;
        }
        d.value = std::max(d.value, depth);
    }
    return d;
}

Diameter diameter(const ClassGraph& cg) {
    Diameter d;
    const Mask top = (Mask{1} << cg.n) - 1;
    bool some_class_has_pair = false;
    for (const ClassEntry& e : cg.entries)
        if (e.weight >= 2) some_class_has_pair = true;
    if (some_class_has_pair) d.value = 1; // distinct vertices sharing a support

    // eccentricity toward other classes, one source mask per support size
    std::vector<std::uint8_t> dist(static_cast<size_t>(top) + 1);
    for (int k = 1; k <= cg.n; ++k) {
        const Mask src = (Mask{1} << k) - 1;
        std::fill(dist.begin(), dist.end(), 0xff);
        dist[src] = 0;
        Mask cover = src; // a mask meets the frontier iff it meets the union of its bits
        std::uint64_t unreached = static_cast<std::uint64_t>(top) - 1;
        for (std::uint8_t level = 1; unreached > 0; ++level) {
            bool grew = false;
            Mask next_cover = cover;
            for (Mask m = 1; m <= top; ++m)
                if (dist[m] == 0xff && (m & cover)) {
                    dist[m] = level;
                    next_cover |= m;
                    --unreached;
                    grew = true;
                }
            cover = next_cover;
            if (!grew) break;
            d.value = std::max<std::uint64_t>(d.value, level);
        }
        if (unreached > 0) {
            d.infinite = true;
            return d;
        }
    }
    return d;
}

bool is_complete(const ExplicitGraph& g) {
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        if (g.degree(u) != g.vcount - 1) return false;
    return true;
}

bool is_complete(const ClassGraph& cg) {
    // incomplete iff two classes have disjoint supports (members of one class
    // are always mutually adjacent); the scan exits on the first such pair
    for (size_t i = 0; i < cg.entries.size(); ++i)
        for (size_t j = i + 1; j < cg.entries.size(); ++j)
            if (!ClassGraph::adjacent(cg.entries[i].mask, cg.entries[j].mask)) return false;
    return true;
}

namespace {

constexpr int kBnbWidth = 256;
using VSet = std::bitset<kBnbWidth>;

// Candidates are taken in ascending id order; including v shrinks the pool to
// its non-neighbors, the loop itself is the exclude branch.
void bnb(const std::vector<VSet>& non_neighbors, VSet candidates, int cur, int& best) {
    best = std::max(best, cur);
    while (candidates.any()) {
        if (cur + static_cast<int>(candidates.count()) <= best) return;
        const int v = static_cast<int>(candidates._Find_first());
        candidates.reset(v);
        bnb(non_neighbors, candidates & non_neighbors[v], cur + 1, best);
    }
}

} // namespace

int independence_number(const ExplicitGraph& g) {
    if (g.vcount > kIndependenceSearchCap)
        throw CapExceeded("independence search cap exceeded: " + std::to_string(g.vcount) +
                          " vertices > cap " + std::to_string(kIndependenceSearchCap));
    const int v = static_cast<int>(g.vcount);
    std::vector<VSet> non_neighbors(v);
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            if (a != b && !g.adjacent(a, b)) non_neighbors[a].set(b);

    // greedy seed by ascending id gives the initial bound
    int best = 0;
    {
        VSet cand;
        for (int a = 0; a < v; ++a) cand.set(a);
        while (cand.any()) {
            ++best;
            cand &= non_neighbors[cand._Find_first()];
        }
    }
    VSet all;
    for (int a = 0; a < v; ++a) all.set(a);
    bnb(non_neighbors, all, 0, best);
    return best;
}

int independence_number_classes(const ClassGraph& cg) { return cg.n; }

DominationResult domination_number(const ExplicitGraph& g) {
    // the vertex with all-ones coordinates (the basis-vector sum) shares a
    // coordinate with everything; the empty set dominates nothing, so a
    // verified witness pins the number at exactly 1
    const Vec ones(g.n, 1);
    std::uint64_t witness = g.vcount;
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        if (g.coords[u] == ones) {
            witness = u;
            break;
        }
    if (witness == g.vcount) return DominationResult{0, witness, false, 0};
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        if (u != witness && !g.adjacent(witness, u)) return DominationResult{0, witness, false, u};
    return DominationResult{1, witness, true, 0};
}

DominationResult domination_number(const ClassGraph& cg) {
    const Mask top = (Mask{1} << cg.n) - 1;
    std::uint64_t witness = 0;
    for (int i = 0; i < cg.n; ++i) witness = witness * static_cast<std::uint64_t>(cg.q) + 1;
    witness -= 1;
    for (const ClassEntry& e : cg.entries)
        if (!ClassGraph::adjacent(top, e.mask)) return DominationResult{0, witness, false, e.mask};
    return DominationResult{1, witness, true, 0};
}

MinimalDominatingResult max_minimal_dominating_size(const ExplicitGraph& g, int cap) {
    if (g.vcount > static_cast<std::uint64_t>(cap))
        throw CapExceeded("domination enumeration cap exceeded: " + std::to_string(g.vcount) +
                          " vertices > cap " + std::to_string(cap));
    const int v = static_cast<int>(g.vcount);
    const std::uint32_t all = (v == 32) ? 0xffffffffu : ((std::uint32_t{1} << v) - 1);
    std::vector<std::uint32_t> closed(v);
    for (int a = 0; a < v; ++a) {
        closed[a] = std::uint32_t{1} << a;
        for (int b = 0; b < v; ++b)
            if (a != b && g.adjacent(a, b)) closed[a] |= std::uint32_t{1} << b;
    }
    auto dominates = [&](std::uint32_t set) {
        std::uint32_t covered = 0;
        for (int a = 0; a < v; ++a)
            if (set & (std::uint32_t{1} << a)) covered |= closed[a];
        return covered == all;
    };
    MinimalDominatingResult out;
    for (std::uint32_t set = 1; set <= all; ++set) {
        if (!dominates(set)) continue;
        bool minimal = true;
        for (int a = 0; a < v && minimal; ++a)
            if ((set & (std::uint32_t{1} << a)) && dominates(set & ~(std::uint32_t{1} << a)))
                minimal = false;
        if (!minimal) continue;
        const int size = std::popcount(set);
        if (size > out.max_size) {
            out.max_size = size;
            out.witness.clear();
            for (int a = 0; a < v; ++a)
                if (set & (std::uint32_t{1} << a)) out.witness.push_back(a);
        }
    }
    return out;
}

namespace {

void enum_independent(const ExplicitGraph& g, int max_size, std::vector<std::uint64_t>& cur,
                      std::uint64_t start, std::vector<std::vector<std::uint64_t>>& out) {
    out.push_back(cur);
    if (max_size >= 0 && static_cast<int>(cur.size()) >= max_size) return;
    for (std::uint64_t v = start; v < g.vcount; ++v) {
        bool ok = true;
        for (std::uint64_t u : cur)
            if (g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        enum_independent(g, max_size, cur, v + 1, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::uint64_t>> enumerate_independent_sets(const ExplicitGraph& g,
                                                                   int max_size) {
    if (g.vcount > kIndependentEnumCap)
        throw CapExceeded("independent-set enumeration cap exceeded: " + std::to_string(g.vcount) +
                          " vertices > cap " + std::to_string(kIndependentEnumCap));
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    enum_independent(g, max_size, cur, 0, out);
    return out;
}

LinIndResult verify_independence_implies_linear(const FiniteField& f, const ExplicitGraph& g) {
    for (const auto& set : enumerate_independent_sets(g)) {
        if (set.size() < 2) continue; // singletons are non-null, hence independent
        std::vector<Vec> rows;
        rows.reserve(set.size());
        for (std::uint64_t id : set) rows.push_back(g.coords[id]);
        if (rank(f, rows) != static_cast<int>(set.size())) return LinIndResult{false, set};
    }
    return LinIndResult{true, {}};
}

bool InvariantReport::any_failure() const {
    for (const TheoremCheck& c : checks)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

namespace {

TheoremCheck degrees_check_explicit(const ExplicitGraph& g) {
    for (std::uint64_t v = 0; v < g.vcount; ++v) {
        const int k = support_size(support(g.coords[v]));
        if (g.degree(v) != degree_formula(g.q, g.n, k))
            return TheoremCheck{"degrees", CheckStatus::fail,
                                "vertex " + std::to_string(v) + " degree " +
                                    std::to_string(g.degree(v)) + " != formula for k=" +
                                    std::to_string(k)};
    }
    return TheoremCheck{"degrees", CheckStatus::pass,
                        std::to_string(g.vcount) + " vertices match the closed form"};
}

TheoremCheck degrees_check_classes(const ClassGraph& cg) {
    const std::vector<std::uint64_t> deg = class_degrees(cg);
    for (size_t i = 0; i < cg.entries.size(); ++i) {
        const int k = support_size(cg.entries[i].mask);
        if (deg[i] != degree_formula(cg.q, cg.n, k))
            return TheoremCheck{"degrees", CheckStatus::fail,
                                "class mask " + std::to_string(cg.entries[i].mask) + " degree " +
                                    std::to_string(deg[i]) + " != formula for k=" +
                                    std::to_string(k)};
    }
    return TheoremCheck{"degrees", CheckStatus::pass,
                        std::to_string(cg.entries.size()) + " support classes match the closed form"};
}

} // namespace

InvariantReport analyze(const FiniteField& f, int n, const Caps& caps, const Basis* basis) {
    InvariantReport r;
    r.q = f.q();
    r.n = n;
    r.vertex_count = space_size(f.q(), n) - 1;

    const bool use_explicit = r.vertex_count <= caps.explicit_cap;
    if (basis && !use_explicit)
        throw CapExceeded("a basis argument needs the explicit route: " +
                          std::to_string(r.vertex_count) + " vertices > cap " +
                          std::to_string(caps.explicit_cap));

    std::map<std::uint64_t, std::uint64_t> hist;
    if (use_explicit) {
        const ExplicitGraph g = basis ? explicit_graph(f, n, caps, *basis)
                                      : explicit_graph(f, n, caps);
        r.edge_count = g.edges;
        r.diam = diameter(g);
        r.complete = is_complete(g);
        for (std::uint64_t v = 0; v < g.vcount; ++v) ++hist[g.degree(v)];

        r.checks.push_back(degrees_check_explicit(g));

        if (n >= 2) {
            const bool ok = !r.diam.infinite && r.diam.value == 2;
            r.checks.push_back(TheoremCheck{"diameter", ok ? CheckStatus::pass : CheckStatus::fail,
                                            ok ? "diameter is 2"
                                               : "diameter " + std::to_string(r.diam.value)});
        } else {
            r.checks.push_back(TheoremCheck{"diameter", CheckStatus::not_applicable,
                                            "one-dimensional space, diameter " +
                                                std::to_string(r.diam.value)});
        }

        {
            const bool ok = r.complete == (n == 1);
            r.checks.push_back(TheoremCheck{"complete", ok ? CheckStatus::pass : CheckStatus::fail,
                                            r.complete ? "complete" : "not complete"});
        }

        {
            const DominationResult dom = domination_number(g);
            r.domination = dom.number;
            r.checks.push_back(TheoremCheck{
                "domination", dom.ok ? CheckStatus::pass : CheckStatus::fail,
                dom.ok ? "vertex " + std::to_string(dom.witness) + " dominates"
                       : "witness misses vertex " + std::to_string(dom.failed_at)});
        }

        if (g.vcount <= static_cast<std::uint64_t>(caps.domination_cap)) {
            const MinimalDominatingResult md = max_minimal_dominating_size(g, caps.domination_cap);
            r.has_max_minimal = true;
            r.max_minimal = md.max_size;
            const bool ok = md.max_size == n;
            r.checks.push_back(TheoremCheck{"minimal-dominating",
                                            ok ? CheckStatus::pass : CheckStatus::fail,
                                            "maximum minimal dominating size " +
                                                std::to_string(md.max_size)});
        } else {
            r.checks.push_back(TheoremCheck{"minimal-dominating", CheckStatus::skipped,
                                            "above enumeration cap"});
        }

        if (g.vcount <= kIndependenceSearchCap) {
            const int alpha = independence_number(g);
            r.independence = static_cast<std::uint64_t>(alpha);
            const bool ok = alpha == n;
            r.checks.push_back(TheoremCheck{"independence", ok ? CheckStatus::pass : CheckStatus::fail,
                                            "independence number " + std::to_string(alpha)});
        } else {
            r.independence = static_cast<std::uint64_t>(independence_number_classes(class_graph(f, n)));
            r.checks.push_back(TheoremCheck{"independence", CheckStatus::skipped,
                                            "above search cap, reporting the class-route count"});
        }

        if (g.vcount <= kIndependentEnumCap) {
            const LinIndResult li = verify_independence_implies_linear(f, g);
            r.checks.push_back(TheoremCheck{"lin-ind", li.pass ? CheckStatus::pass : CheckStatus::fail,
                                            li.pass ? "every independent set has full rank"
                                                    : "rank-deficient independent set found"});
        } else {
            r.checks.push_back(
                TheoremCheck{"lin-ind", CheckStatus::skipped, "above enumeration cap"});
        }
    } else {
        const ClassGraph cg = class_graph(f, n);
        r.edge_count = edge_count_from_classes(cg);
        r.diam = diameter(cg);
        r.complete = is_complete(cg);
        const std::vector<std::uint64_t> deg = class_degrees(cg);
        for (size_t i = 0; i < cg.entries.size(); ++i) hist[deg[i]] += cg.entries[i].weight;

        r.checks.push_back(degrees_check_classes(cg));

        if (n >= 2) {
            const bool ok = !r.diam.infinite && r.diam.value == 2;
            r.checks.push_back(TheoremCheck{"diameter", ok ? CheckStatus::pass : CheckStatus::fail,
                                            ok ? "diameter is 2"
                                               : "diameter " + std::to_string(r.diam.value)});
        } else {
            r.checks.push_back(TheoremCheck{"diameter", CheckStatus::not_applicable,
                                            "one-dimensional space, diameter " +
                                                std::to_string(r.diam.value)});
        }

        {
            const bool ok = r.complete == (n == 1);
            r.checks.push_back(TheoremCheck{"complete", ok ? CheckStatus::pass : CheckStatus::fail,
                                            r.complete ? "complete" : "not complete"});
        }

        {
            const DominationResult dom = domination_number(cg);
            r.domination = dom.number;
            r.checks.push_back(TheoremCheck{
                "domination", dom.ok ? CheckStatus::pass : CheckStatus::fail,
                dom.ok ? "vertex " + std::to_string(dom.witness) + " dominates"
                       : "witness misses class mask " + std::to_string(dom.failed_at)});
        }

        r.checks.push_back(TheoremCheck{"minimal-dominating", CheckStatus::skipped,
                                        "above enumeration cap"});

        r.independence = static_cast<std::uint64_t>(independence_number_classes(cg));
        r.checks.push_back(TheoremCheck{"independence", CheckStatus::skipped,
                                        "above search cap, reporting the class-route count"});

        r.checks.push_back(TheoremCheck{"lin-ind", CheckStatus::skipped, "above enumeration cap"});
    }

    r.degree_histogram.assign(hist.begin(), hist.end());
    return r;
}

nlohmann::ordered_json report_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["vertexCount"] = r.vertex_count;
    j["edgeCount"] = r.edge_count;
    if (r.diam.infinite)
        j["diameter"] = "Infinite";
    else
        j["diameter"] = r.diam.value;
    j["isComplete"] = r.complete;
    j["independenceNumber"] = r.independence;
    j["dominationNumber"] = r.domination;
    if (r.has_max_minimal)
        j["maxMinimalDominatingSize"] = r.max_minimal;
    else
        j["maxMinimalDominatingSize"] = nullptr;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
    j["degreeHistogram"] = hist;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const TheoremCheck& c : r.checks) checks[c.name] = to_string(c.status);
    j["theoremChecks"] = checks;
    return j;
}

} // namespace nzc
