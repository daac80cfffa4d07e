#include "nzc/ffield.hpp"

#include <cctype>

namespace nzc {
namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros.

void trim(std::vector<int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f mod g, g monic.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, int p) {
    trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        int shift = static_cast<int>(f.size()) - 1 - dg;
        int lead = f.back();
        for (int i = 0; i <= dg; ++i) {
            int& c = f[shift + i];
            c = ((c - lead * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    // No monic divisor of degree 1..m/2 exists.
    for (int d = 1; 2 * d <= m; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> g(d + 1, 0);
            int v = low;
            for (int i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// candidates ordered by their coefficient tuple read high-degree-first.
std::vector<int> smallest_irreducible(int p, int m) {
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        // Base-p digit j of `low` is the x^j coefficient, so ascending `low`
        // visits the tuples (c_{m-1},...,c_0) in lexicographic order.
        std::vector<int> f(m + 1, 0);
        int v = low;
        for (int i = 0; i < m; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

char digit_char(int d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

} // namespace

FiniteField::FiniteField(int q, int order_cap) {
    if (q < 2) throw NotPrimePower("field order must be at least 2, got " + std::to_string(q));
    if (q > order_cap)
        throw CapExceeded("field order cap exceeded: q=" + std::to_string(q) + " > cap " +
                          std::to_string(order_cap));

    int p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw NotPrimePower(std::to_string(q) + " is not a prime power");

    q_ = q;
    p_ = p;
    m_ = m;
    add_.resize(static_cast<size_t>(q) * q);
    mul_.resize(static_cast<size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    names_.resize(q);

    if (m == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[a] = (q - a) % q;
            names_[a] = std::to_string(a);
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = (a + b) % q;
                mul_[a * q + b] = (a * b) % q;
            }
        }
    } else {
        modulus_ = smallest_irreducible(p, m);

        // digits[a][j] = coefficient of x^j in element a
        std::vector<std::vector<int>> digits(q, std::vector<int>(m, 0));
        for (int a = 0; a < q; ++a) {
            int v = a;
            for (int j = 0; j < m; ++j) {
                digits[a][j] = v % p;
                v /= p;
            }
            std::string s(m, '0');
            for (int j = 0; j < m; ++j) s[m - 1 - j] = digit_char(digits[a][j]);
            names_[a] = s;
        }
        auto to_index = [&](const std::vector<int>& f) {
            int idx = 0;
            for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) idx = idx * p + f[j];
            return idx;
        };
        for (int a = 0; a < q; ++a) {
            std::vector<int> na(m);
            for (int j = 0; j < m; ++j) na[j] = (p - digits[a][j]) % p;
            neg_[a] = to_index(na);
            for (int b = 0; b < q; ++b) {
                std::vector<int> s(m);
                for (int j = 0; j < m; ++j) s[j] = (digits[a][j] + digits[b][j]) % p;
                add_[a * q + b] = to_index(s);

                std::vector<int> prod(2 * m - 1, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
                std::vector<int> r = poly_rem(std::move(prod), modulus_, p);
                r.resize(m, 0);
                mul_[a * q + b] = to_index(r);
            }
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = b;
                break;
            }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw ZeroInverse("zero has no multiplicative inverse in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

int FiniteField::parse(const std::string& text) const {
    if (text.empty()) throw Error("empty field element");
    if (m_ == 1) {
        int v = 0;
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("bad field element '" + text + "' for GF(" + std::to_string(q_) + ")");
            v = v * 10 + (c - '0');
            if (v >= q_)
                throw Error("field element '" + text + "' out of range for GF(" + std::to_string(q_) + ")");
        }
        return v;
    }
    if (static_cast<int>(text.size()) != m_)
        throw Error("field element '" + text + "' must have " + std::to_string(m_) +
                    " coefficient digits in GF(" + std::to_string(q_) + ")");
    int idx = 0;
    for (char c : text) {
        int d = digit_value(c);
        if (d < 0 || d >= p_)
            throw Error("bad coefficient digit '" + std::string(1, c) + "' in GF(" + std::to_string(q_) + ")");
        idx = idx * p_ + d;
    }
    return idx;
}

} // namespace nzc
