#include "nzc/morphisms.hpp"

#include <algorithm>
#include <bit>

namespace nzc {

namespace {

// Backtracking bijection search g1 -> g2: image candidates in ascending id,
// pruned by degree equality and adjacency consistency with mapped vertices.
bool iso_search(const ExplicitGraph& g1, const ExplicitGraph& g2, std::uint64_t pos,
                std::vector<std::uint64_t>& map, std::vector<char>& used) {
    if (pos == g1.vcount) return true;
    for (std::uint64_t cand = 0; cand < g2.vcount; ++cand) {
        if (used[cand] || g1.degree(pos) != g2.degree(cand)) continue;
        bool ok = true;
        for (std::uint64_t prev = 0; prev < pos; ++prev)
            if (g1.adjacent(prev, pos) != g2.adjacent(map[prev], cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[pos] = cand;
        used[cand] = 1;
        if (iso_search(g1, g2, pos + 1, map, used)) return true;
        used[cand] = 0;
    }
    return false;
}

} // namespace

IsoResult are_isomorphic(const ExplicitGraph& g1, const ExplicitGraph& g2, int search_cap) {
    if (g1.q != g2.q)
        throw FieldMismatch("graphs over different field orders: " + std::to_string(g1.q) +
                            " vs " + std::to_string(g2.q));
    IsoResult r;
    r.isomorphic = g1.n == g2.n;
    if (g1.vcount <= static_cast<std::uint64_t>(search_cap) &&
        g2.vcount <= static_cast<std::uint64_t>(search_cap)) {
        r.searched = true;
        if (g1.vcount == g2.vcount) {
            std::vector<std::uint64_t> map(g1.vcount, 0);
            std::vector<char> used(g2.vcount, 0);
            if (iso_search(g1, g2, 0, map, used)) {
                r.search_found = true;
                r.witness = std::move(map);
            }
        }
    }
    return r;
}

BasisIsoResult basis_change_iso_check(const FiniteField& f, int n, const Basis& b,
                                      const Caps& caps) {
    const ExplicitGraph ga = explicit_graph(f, n, caps);
    const ExplicitGraph gb = explicit_graph(f, n, caps, b);
    // T sends the vector with canonical coordinates a to sum a_i b_i; in gb
    // that image sits at its ambient id and its basis coordinates are a again
    std::vector<std::uint64_t> image(ga.vcount);
    std::vector<char> hit(ga.vcount, 0);
    for (std::uint64_t v = 0; v < ga.vcount; ++v) {
        const Vec t = expand_in_basis(f, ga.coords[v], b);
        image[v] = vertex_id(f, t);
        if (hit[image[v]]) return BasisIsoResult{false, v, image[v]}; // not a bijection
        hit[image[v]] = 1;
    }
    for (std::uint64_t u = 0; u < ga.vcount; ++u)
        for (std::uint64_t v = u + 1; v < ga.vcount; ++v)
            if (ga.adjacent(u, v) != gb.adjacent(image[u], image[v]))
                return BasisIsoResult{false, u, v};
    return BasisIsoResult{true, 0, 0};
}

namespace {

void aut_search(const ExplicitGraph& g, std::uint64_t pos, std::vector<std::uint64_t>& map,
                std::vector<char>& used, std::vector<AutomorphismRecord>& out) {
    if (pos == g.vcount) {
        AutomorphismRecord rec;
        rec.mapping = map;
        out.push_back(std::move(rec));
        return;
    }
    for (std::uint64_t cand = 0; cand < g.vcount; ++cand) {
        if (used[cand] || g.degree(pos) != g.degree(cand)) continue;
        bool ok = true;
        for (std::uint64_t prev = 0; prev < pos; ++prev)
            if (g.adjacent(prev, pos) != g.adjacent(map[prev], cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[pos] = cand;
        used[cand] = 1;
        aut_search(g, pos + 1, map, used, out);
        used[cand] = 0;
    }
}

} // namespace

std::vector<AutomorphismRecord> automorphisms(const FiniteField& f, const ExplicitGraph& g,
                                              int aut_cap) {
    if (g.vcount > static_cast<std::uint64_t>(aut_cap))
        throw CapExceeded("automorphism cap exceeded: " + std::to_string(g.vcount) +
                          " vertices > cap " + std::to_string(aut_cap));
    std::vector<AutomorphismRecord> out;
    std::vector<std::uint64_t> map(g.vcount, 0);
    std::vector<char> used(g.vcount, 0);
    aut_search(g, 0, map, used, out);
    for (AutomorphismRecord& rec : out) {
        const FormCheckResult form = check_automorphism_form(g, rec.mapping);
        rec.has_sigma = form.has_sigma && form.ok;
        rec.sigma = form.sigma;
        rec.is_linear = is_linear_map(f, g, rec.mapping);
    }
    return out;
}

FormCheckResult check_automorphism_form(const ExplicitGraph& g,
                                        const std::vector<std::uint64_t>& mapping) {
    FormCheckResult r;
    std::vector<int> sigma(g.n, -1);
    // singleton supports first: they must land on singleton supports and
    // agree, coordinate by coordinate, on a single permutation
    for (std::uint64_t v = 0; v < g.vcount; ++v) {
        const Mask s = support(g.coords[v]);
        if (support_size(s) != 1) continue;
        const Mask t = support(g.coords[mapping[v]]);
        if (support_size(t) != 1) {
            r.witness = v;
            return r;
        }
        const int from = std::countr_zero(s);
        const int to = std::countr_zero(t);
        if (sigma[from] >= 0 && sigma[from] != to) {
            r.witness = v;
            return r;
        }
        sigma[from] = to;
    }
    std::vector<char> seen(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        if (sigma[i] < 0 || seen[sigma[i]]) {
            r.witness = 0;
            return r;
        }
        seen[sigma[i]] = 1;
    }
    r.has_sigma = true;
    r.sigma = sigma;
    // every vertex must carry its support along sigma
    for (std::uint64_t v = 0; v < g.vcount; ++v) {
        const Mask s = support(g.coords[v]);
        Mask expect = 0;
        for (int i = 0; i < g.n; ++i)
            if (s & (Mask{1} << i)) expect |= Mask{1} << sigma[i];
        if (support(g.coords[mapping[v]]) != expect) {
            r.witness = v;
            return r;
        }
    }
    r.ok = true;
    return r;
}

bool is_linear_map(const FiniteField& f, const ExplicitGraph& g,
                   const std::vector<std::uint64_t>& mapping) {
    const Vec zero(g.n, 0);
    auto image = [&](const Vec& v) -> Vec {
        if (is_null(v)) return zero;
        return g.coords[mapping[vertex_id(f, v)]];
    };
    // additivity over all vertex pairs, sums through zero included
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        for (std::uint64_t v = u; v < g.vcount; ++v) {
            const Vec sum = vec_add(f, g.coords[u], g.coords[v]);
            const Vec lhs = image(sum);
            const Vec rhs = vec_add(f, g.coords[mapping[u]], g.coords[mapping[v]]);
            if (lhs != rhs) return false;
        }
    // homogeneity for every non-zero scalar
    for (int c = 2; c < f.q(); ++c)
        for (std::uint64_t v = 0; v < g.vcount; ++v) {
            const Vec lhs = image(vec_scale(f, c, g.coords[v]));
            const Vec rhs = vec_scale(f, c, g.coords[mapping[v]]);
            if (lhs != rhs) return false;
        }
    return true;
}

TransitivityResult vertex_transitivity(const FiniteField& f, int n, const Caps& caps) {
    const std::uint64_t vcount = space_size(f.q(), n) - 1;
    // count degrees honestly, then split orbits by degree value
    std::vector<std::uint64_t> degrees;
    if (vcount <= caps.explicit_cap) {
        const ExplicitGraph g = explicit_graph(f, n, caps);
        degrees.reserve(g.vcount);
        for (std::uint64_t v = 0; v < g.vcount; ++v) degrees.push_back(g.degree(v));
    } else {
        const ClassGraph cg = class_graph(f, n);
        degrees = class_degrees(cg);
    }
    std::uint64_t lo = degrees[0], hi = degrees[0];
    for (std::uint64_t d : degrees) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (lo != hi)
        return TransitivityResult{false, "degrees " + std::to_string(lo) + " and " +
                                             std::to_string(hi) +
                                             " split the vertices into distinct orbits"};

    // regular graph: fall back to the automorphism orbit of vertex 0
    if (vcount > static_cast<std::uint64_t>(caps.aut_cap))
        throw CapExceeded("regular graph above the automorphism cap: " + std::to_string(vcount) +
                          " vertices > cap " + std::to_string(caps.aut_cap));
    const ExplicitGraph g = explicit_graph(f, n, caps);
    std::vector<char> orbit(g.vcount, 0);
    std::uint64_t reached = 0;
    for (const AutomorphismRecord& rec : automorphisms(f, g, caps.aut_cap))
        if (!orbit[rec.mapping[0]]) {
            orbit[rec.mapping[0]] = 1;
            ++reached;
        }
    if (reached == g.vcount)
        return TransitivityResult{true, "the automorphism group moves vertex 0 onto all " +
                                            std::to_string(g.vcount) + " vertices"};
    return TransitivityResult{false, "orbit of vertex 0 has size " + std::to_string(reached) +
                                         " of " + std::to_string(g.vcount)};
}

nlohmann::ordered_json automorphisms_json(const std::vector<AutomorphismRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AutomorphismRecord& rec : records) {
        nlohmann::ordered_json item;
        item["mapping"] = rec.mapping;
        if (rec.has_sigma) {
            std::vector<int> one_based(rec.sigma.size());
            for (size_t i = 0; i < rec.sigma.size(); ++i) one_based[i] = rec.sigma[i] + 1;
            item["sigma"] = one_based;
        } else {
            item["sigma"] = nullptr;
        }
        item["isLinear"] = rec.is_linear;
        arr.push_back(std::move(item));
    }
    return arr;
}

} // namespace nzc
