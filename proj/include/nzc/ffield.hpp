#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nzc/errors.hpp"

namespace nzc {

// Exact arithmetic for small finite fields GF(q), q = p^m, via full lookup
// tables.
//
// Element representation and order:
//   - Elements are indices in [0, q). Index 0 is the zero element, index 1
//     the unit.
//   - Prime fields: index == residue; arithmetic mod p.
//   - Extension fields: the index, written in base p, gives the coefficient
//     tuple of the element polynomial, coefficient of x^j at the p^j digit.
//     Index order is therefore lexicographic on (c_{m-1}, ..., c_1, c_0).
//   - The index order is the canonical element order used for all vector
//     enumeration and tie-breaking downstream.
//
// Extension fields reduce modulo the lexicographically smallest monic
// irreducible polynomial of degree m over GF(p) (coefficients compared
// high-degree-first), found by exhaustive search, so two constructions of
// GF(q) always produce identical tables.
//
// Textual element form: decimal value for prime fields; for extensions a
// fixed-width string of m coefficient digits, high degree first, digits
// 0-9 then a-z (e.g. "10" for x in GF(4)).
class FiniteField {
public:
    static constexpr int kOrderCap = 256;

    explicit FiniteField(int q, int order_cap = kOrderCap);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return m_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;

    const std::string& name(int a) const { return names_[a]; }
    // Inverse of name(); throws Error on malformed input.
    int parse(const std::string& text) const;

    // Modulus polynomial coefficients, constant term first; empty for m == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const FiniteField& other) const {
        return q_ == other.q_ && add_ == other.add_ && mul_ == other.mul_;
    }

private:
    int q_ = 0;
    int p_ = 0;
    int m_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_; // inv_[0] unused
    std::vector<std::string> names_;
    std::vector<int> modulus_;
};

} // namespace nzc
