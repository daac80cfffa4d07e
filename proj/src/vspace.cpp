#include "nzc/vspace.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace nzc {

std::uint64_t space_size(int q, int n) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > UINT64_MAX / static_cast<std::uint64_t>(q))
            throw CapExceeded("q^n overflows 64 bits: q=" + std::to_string(q) + " n=" + std::to_string(n));
        size *= static_cast<std::uint64_t>(q);
    }
    return size;
}

std::vector<Vec> enumerate_vectors(const FiniteField& f, int n, std::uint64_t explicit_cap) {
    if (n < 1) throw Error("dimension must be at least 1");
    const std::uint64_t count = space_size(f.q(), n) - 1;
    if (count > explicit_cap)
        throw CapExceeded("explicit cap exceeded: " + std::to_string(count) + " vertices > cap " +
                          std::to_string(explicit_cap));
    std::vector<Vec> out;
    out.reserve(count);
    Vec v(n, 0);
    for (std::uint64_t id = 0; id < count; ++id) {
        // odometer increment on the least significant (last) coordinate
        for (int i = n - 1; i >= 0; --i) {
            if (++v[i] < f.q()) break;
            v[i] = 0;
        }
        out.push_back(v);
    }
    return out;
}

std::uint64_t vertex_id(const FiniteField& f, const Vec& v) {
    std::uint64_t value = 0;
    for (int c : v) value = value * static_cast<std::uint64_t>(f.q()) + static_cast<std::uint64_t>(c);
    if (value == 0) throw NullVector("the null vector is not a graph vertex");
    return value - 1;
}

Mask support(const Vec& v) {
    Mask m = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) m |= Mask{1} << i;
    if (m == 0) throw NullVector("the null vector has empty support");
    return m;
}

int support_size(Mask m) { return std::popcount(m); }

bool is_null(const Vec& v) {
    for (int c : v)
        if (c != 0) return false;
    return true;
}

int rank(const FiniteField& f, std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const int n = static_cast<int>(rows[0].size());
    const int r = static_cast<int>(rows.size());
    int pivots = 0;
    for (int col = 0; col < n && pivots < r; ++col) {
        int pivot = -1;
        for (int i = pivots; i < r; ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivots], rows[pivot]);
        const int factor = f.inv(rows[pivots][col]);
        for (int i = pivots + 1; i < r; ++i) {
            if (rows[i][col] == 0) continue;
            const int scale = f.mul(rows[i][col], factor);
            for (int j = col; j < n; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(scale, rows[pivots][j]));
        }
        ++pivots;
    }
    return pivots;
}

Basis make_basis(const FiniteField& f, std::vector<Vec> rows) {
    const int n = static_cast<int>(rows.size());
    for (const Vec& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw SingularBasis("basis must be square: expected " + std::to_string(n) + " coordinates per row");

    // Gauss-Jordan on [B | I].
    std::vector<Vec> a = rows;
    std::vector<Vec> inv(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularBasis("basis rows are linearly dependent (rank < n)");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const int scale = f.inv(a[col][col]);
        for (int j = 0; j < n; ++j) {
            a[col][j] = f.mul(a[col][j], scale);
            inv[col][j] = f.mul(inv[col][j], scale);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const int factor = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[col][j]));
                inv[i][j] = f.sub(inv[i][j], f.mul(factor, inv[col][j]));
            }
        }
    }
    return Basis{std::move(rows), std::move(inv)};
}

Basis identity_basis(const FiniteField& f, int n) {
    (void)f;
    std::vector<Vec> rows(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    std::vector<Vec> inv = rows;
    return Basis{std::move(rows), std::move(inv)};
}

Basis read_basis_file(const FiniteField& f, int n, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open basis file " + path);
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // skip pure whitespace lines
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        Vec row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const size_t b = tok.find_first_not_of(" \t");
            const size_t e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw Error("empty entry in basis file " + path);
            row.push_back(f.parse(tok.substr(b, e - b + 1)));
        }
        if (static_cast<int>(row.size()) != n)
            throw Error("basis row has " + std::to_string(row.size()) + " entries, expected " +
                        std::to_string(n));
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != n)
        throw Error("basis file has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    return make_basis(f, std::move(rows));
}

Basis random_invertible_basis(const FiniteField& f, int n, Lcg& rng) {
    for (;;) {
        std::vector<Vec> rows(n, Vec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[i][j] = rng.below(f.q());
        if (rank(f, rows) == n) return make_basis(f, std::move(rows));
    }
}

Vec coords_in_basis(const FiniteField& f, const Vec& v, const Basis& b) {
    const int n = static_cast<int>(b.rows.size());
    Vec c(n, 0);
    for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int i = 0; i < n; ++i) acc = f.add(acc, f.mul(v[i], b.inv[i][j]));
        c[j] = acc;
    }
    return c;
}

Vec expand_in_basis(const FiniteField& f, const Vec& coords, const Basis& b) {
    const int n = static_cast<int>(b.rows.size());
    Vec v(n, 0);
    for (int j = 0; j < n; ++j) {
        if (coords[j] == 0) continue;
        for (int i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(coords[j], b.rows[j][i]));
    }
    return v;
}

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_scale(const FiniteField& f, int c, const Vec& a) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

} // namespace nzc
