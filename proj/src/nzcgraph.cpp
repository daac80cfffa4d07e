#include "nzc/nzcgraph.hpp"

#include <bit>
#include <sstream>

namespace nzc {

std::uint64_t ClassGraph::vertex_count() const {
    std::uint64_t total = 0;
    for (const ClassEntry& e : entries) {
        if (total > UINT64_MAX - e.weight) throw CapExceeded("vertex count overflows 64 bits");
        total += e.weight;
    }
    return total;
}

std::uint64_t ExplicitGraph::degree(std::uint64_t u) const {
    std::uint64_t d = 0;
    for (std::uint64_t w = 0; w < stride_; ++w) d += std::popcount(bits_[u * stride_ + w]);
    return d;
}

void ExplicitGraph::set_edge(std::uint64_t u, std::uint64_t v) {
    bits_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[v * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

bool ExplicitGraph::operator==(const ExplicitGraph& other) const {
    return q == other.q && n == other.n && vcount == other.vcount && bits_ == other.bits_;
}

bool adjacent(const Vec& a, const Vec& b) {
    if (is_null(a) || is_null(b)) throw NullVector("the null vector is not a graph vertex");
    if (a == b) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return true;
    return false;
}

ClassGraph class_graph(const FiniteField& f, int n) {
    if (n < 1) throw Error("dimension must be at least 1");
    if (n > kClassDimCap)
        throw DimensionCap("dimension " + std::to_string(n) + " exceeds class cap " +
                           std::to_string(kClassDimCap));
    ClassGraph cg;
    cg.q = f.q();
    cg.n = n;
    const Mask top = (Mask{1} << n) - 1;
    cg.entries.reserve(top);
    for (Mask m = 1; m <= top; ++m) {
        std::uint64_t w = 1;
        for (int i = 0; i < std::popcount(m); ++i) {
            const auto factor = static_cast<std::uint64_t>(f.q() - 1);
            if (w > UINT64_MAX / factor) throw CapExceeded("class weight overflows 64 bits");
            w *= factor;
        }
        cg.entries.push_back(ClassEntry{m, w});
    }
    return cg;
}

namespace {

ExplicitGraph graph_from_adjacency_coords(const FiniteField& f, int n, const Caps& caps,
                                          const std::vector<Vec>& adjacency_coords) {
    ExplicitGraph g;
    g.q = f.q();
    g.n = n;
    g.vcount = adjacency_coords.size();
    g.coords = adjacency_coords;
    g.stride_ = (g.vcount + 63) / 64;
    g.bits_.assign(g.vcount * g.stride_, 0);
    (void)caps;
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        for (std::uint64_t v = u + 1; v < g.vcount; ++v)
            if (adjacent(adjacency_coords[u], adjacency_coords[v])) {
                g.set_edge(u, v);
                ++g.edges;
            }
    g.labels.reserve(g.vcount);
    for (const Vec& v : adjacency_coords) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += f.name(v[i]);
        }
        g.labels.push_back(std::move(s));
    }
    return g;
}

} // namespace

ExplicitGraph explicit_graph(const FiniteField& f, int n, const Caps& caps) {
    return graph_from_adjacency_coords(f, n, caps, enumerate_vectors(f, n, caps.explicit_cap));
}

ExplicitGraph explicit_graph(const FiniteField& f, int n, const Caps& caps, const Basis& basis) {
    const std::vector<Vec> ambient = enumerate_vectors(f, n, caps.explicit_cap);
    std::vector<Vec> in_basis;
    in_basis.reserve(ambient.size());
    for (const Vec& v : ambient) in_basis.push_back(coords_in_basis(f, v, basis));
    ExplicitGraph g = graph_from_adjacency_coords(f, n, caps, in_basis);
    // labels show the ambient vectors so ids and labels stay in step
    g.labels.clear();
    for (const Vec& v : ambient) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += f.name(v[i]);
        }
        g.labels.push_back(std::move(s));
    }
    return g;
}

ExplicitGraph expand(const FiniteField& f, const ClassGraph& cg, const Caps& caps) {
    const std::uint64_t count = cg.vertex_count();
    if (count > caps.explicit_cap)
        throw CapExceeded("explicit cap exceeded: " + std::to_string(count) + " vertices > cap " +
                          std::to_string(caps.explicit_cap));
    const std::vector<Vec> vecs = enumerate_vectors(f, cg.n, caps.explicit_cap);

    ExplicitGraph g;
    g.q = cg.q;
    g.n = cg.n;
    g.vcount = count;
    g.coords = vecs;
    g.stride_ = (count + 63) / 64;
    g.bits_.assign(count * g.stride_, 0);

    std::vector<Mask> masks;
    masks.reserve(count);
    for (const Vec& v : vecs) masks.push_back(support(v));

    for (std::uint64_t u = 0; u < count; ++u)
        for (std::uint64_t v = u + 1; v < count; ++v)
            if (ClassGraph::adjacent(masks[u], masks[v])) {
                g.set_edge(u, v);
                ++g.edges;
            }

    g.labels.reserve(count);
    for (const Vec& v : vecs) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += f.name(v[i]);
        }
        g.labels.push_back(std::move(s));
    }
    return g;
}

std::uint64_t degree_formula(int q, int n, int k) {
    if (k < 1 || k > n)
        throw BadSupportSize("support size " + std::to_string(k) + " outside 1.." +
                             std::to_string(n));
    // (q^k - 1) * q^(n-k) - 1, checked
    const std::uint64_t qk = space_size(q, k);
    const std::uint64_t rest = space_size(q, n - k);
    const std::uint64_t lhs = qk - 1;
    if (lhs != 0 && rest > UINT64_MAX / lhs) throw CapExceeded("degree overflows 64 bits");
    return lhs * rest - 1;
}

std::uint64_t degree_of(const ExplicitGraph& g, const Vec& v) {
    std::uint64_t value = 0;
    for (int c : v) value = value * static_cast<std::uint64_t>(g.q) + static_cast<std::uint64_t>(c);
    if (value == 0) throw NullVector("the null vector is not a graph vertex");
    return g.degree(value - 1);
}

std::uint64_t degree_of(const ClassGraph& cg, const Vec& v) {
    const Mask s = support(v);
    std::uint64_t total = 0;
    for (const ClassEntry& e : cg.entries)
        if (e.mask & s) total += e.weight;
    return total - 1;
}

std::vector<std::uint64_t> class_degrees(const ClassGraph& cg) {
    const Mask top = (Mask{1} << cg.n) - 1;
    // f[m] = total weight of classes whose mask is a subset of m
    std::vector<std::uint64_t> f(static_cast<size_t>(top) + 1, 0);
    for (const ClassEntry& e : cg.entries) f[e.mask] = e.weight;
    for (int i = 0; i < cg.n; ++i)
        for (Mask m = 0; m <= top; ++m)
            if (m & (Mask{1} << i)) f[m] += f[m ^ (Mask{1} << i)];
    const std::uint64_t total = cg.vertex_count();
    std::vector<std::uint64_t> deg;
    deg.reserve(cg.entries.size());
    // vectors meeting S = all non-zero vectors minus those living inside ~S,
    // minus the vertex itself
    for (const ClassEntry& e : cg.entries) deg.push_back(total - f[top & ~e.mask] - 1);
    return deg;
}

std::uint64_t edge_count_from_classes(const ClassGraph& cg) {
    const std::vector<std::uint64_t> deg = class_degrees(cg);
    std::uint64_t twice = 0;
    for (size_t i = 0; i < cg.entries.size(); ++i) {
        if (cg.entries[i].weight != 0 && deg[i] > UINT64_MAX / cg.entries[i].weight)
            throw CapExceeded("edge count overflows 64 bits");
        const std::uint64_t add = cg.entries[i].weight * deg[i];
        if (twice > UINT64_MAX - add) throw CapExceeded("edge count overflows 64 bits");
        twice += add;
    }
    return twice / 2;
}

std::string to_dot(const ExplicitGraph& g) {
    std::ostringstream out;
    out << "graph nzc {\n";
    for (std::uint64_t v = 0; v < g.vcount; ++v)
        out << "  " << v << " [label=\"" << g.labels[v] << "\"];\n";
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        for (std::uint64_t v = u + 1; v < g.vcount; ++v)
            if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace nzc
