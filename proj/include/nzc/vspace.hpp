#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nzc/ffield.hpp"
#include "nzc/rng.hpp"

namespace nzc {

// A vector is its coordinate tuple in the active basis, each coordinate a
// field element index. The null vector never appears as a graph vertex.
using Vec = std::vector<int>;

// Support of a vector as a bitmask: bit i set iff coordinate i is non-zero.
// The set-bit count is the support size k.
using Mask = std::uint32_t;

// q^n with overflow guard.
std::uint64_t space_size(int q, int n);

// All q^n - 1 non-zero vectors in lexicographic order of coordinate tuples
// under the field's canonical element order (coordinate 0 most significant).
// The position in this sequence is the vertex id everywhere downstream.
std::vector<Vec> enumerate_vectors(const FiniteField& f, int n, std::uint64_t explicit_cap);

// Enumeration index of a non-zero vector; inverse of enumerate_vectors.
std::uint64_t vertex_id(const FiniteField& f, const Vec& v);

Mask support(const Vec& v); // throws NullVector
int support_size(Mask m);

bool is_null(const Vec& v);

// Rank of the spanned subspace, Gaussian elimination with first-non-zero
// pivoting in fixed column order.
int rank(const FiniteField& f, std::vector<Vec> rows);

// n basis vectors expressed in the canonical basis, plus the precomputed
// matrix inverse used to re-express vectors. Constructed only through
// make_basis, which enforces invertibility.
struct Basis {
    std::vector<Vec> rows;
    std::vector<Vec> inv; // inv[i][j] = (B^-1)_{ij}
};

Basis make_basis(const FiniteField& f, std::vector<Vec> rows); // throws SingularBasis
Basis identity_basis(const FiniteField& f, int n);

// Plain-text basis file: one row per line, canonical element strings
// separated by commas; exactly n lines of n entries.
Basis read_basis_file(const FiniteField& f, int n, const std::string& path);

Basis random_invertible_basis(const FiniteField& f, int n, Lcg& rng);

// Coordinates c with v = sum c_i * rows_i (v given in the canonical basis).
Vec coords_in_basis(const FiniteField& f, const Vec& v, const Basis& b);

// sum coords_i * rows_i, back to canonical coordinates.
Vec expand_in_basis(const FiniteField& f, const Vec& coords, const Basis& b);

// Coordinate-wise vector operations.
Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b);
Vec vec_scale(const FiniteField& f, int c, const Vec& a);

} // namespace nzc
