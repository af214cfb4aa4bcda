#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace a4diff {

using Elem = std::uint32_t;

class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// GF(2^m) in polynomial basis, m even, m <= 32.
class Field {
public:
    // Interned instance; the reference stays valid for the life of the process.
    // modulus == 0 selects the smallest irreducible polynomial of degree m.
    static const Field& get(int m, std::uint64_t modulus = 0);

    int m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t size() const { return std::uint64_t(1) << m_; }
    Elem zeta() const { return zeta_; }
    Elem zeta2() const { return zeta2_; }

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const {
        if (table_.empty()) return mul_slow(a, b);
        return table_[(a << 8) | b];
    }
    Elem sqr(Elem a) const { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem sqrt(Elem a) const;
    // Absolute trace to GF(2).
    int trace(Elem a) const;
    // Powers of zeta with any integer exponent.
    Elem zeta_pow(long long e) const;
    // x with x^2 + x = c, if one exists.
    bool solve_as(Elem c, Elem& x) const;

    // dst[k] ^= c * src[k]
    void axpy(Elem* dst, const Elem* src, Elem c, std::size_t len) const;
    void scale(Elem* v, Elem c, std::size_t len) const;

    std::vector<Elem> cube_roots(Elem a) const;

    static bool irreducible(std::uint64_t poly);

private:
    Field(int m, std::uint64_t modulus);
    Elem mul_slow(Elem a, Elem b) const;

    int m_;
    std::uint64_t modulus_;
    Elem zeta_ = 0, zeta2_ = 0;
    std::vector<std::uint8_t> table_;
};

}  // namespace a4diff
