#include "a4diff/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace a4diff {

namespace {

int degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        p >>= 1;
        ++d;
    }
    return d;
}

// Carry-less product reduced modulo `mod` of degree m.
std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int m) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1) a ^= mod;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = degree(b);
    for (int d = degree(a); d >= db; d = degree(a)) a ^= b << (d - db);
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

bool Field::irreducible(std::uint64_t poly) {
    int n = degree(poly);
    if (n < 1) return false;
    if (n == 1) return true;
    // Ben-Or: gcd(x^(2^i) - x, f) = 1 for i <= n/2.
    std::uint64_t x = 2, xp = 2;
    for (int i = 1; i <= n / 2; ++i) {
        xp = clmul_mod(xp, xp, poly, n);
        if (poly_gcd(poly, xp ^ x) != 1) return false;
    }
    return true;
}

const Field& Field::get(int m, std::uint64_t modulus) {
    if (m <= 0 || m > 32) throw MathError("unsupported field: m must lie in [2, 32]");
    if (m % 2) throw MathError("unsupported field: m must be even so that a primitive cube root of unity exists");
    if (modulus == 0) {
        for (std::uint64_t p = (std::uint64_t(1) << m) | 1;; p += 2)
            if (irreducible(p)) {
                modulus = p;
                break;
            }
    }
    if (degree(modulus) != m) throw MathError("unsupported field: modulus degree differs from m");
    if (!irreducible(modulus)) throw MathError("unsupported field: modulus is reducible over GF(2)");

    static std::mutex mu;
    static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{m, modulus}];
    if (!slot) slot.reset(new Field(m, modulus));
    return *slot;
}

Field::Field(int m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
    if (m <= 8) {
        table_.resize(1u << 16);
        for (Elem a = 0; a < (1u << m); ++a)
            for (Elem b = 0; b < (1u << m); ++b) table_[(a << 8) | b] = std::uint8_t(mul_slow(a, b));
    }
    // zeta^2 + zeta + 1 = 0; the smaller root is zeta.
    Elem e = pow(2, (size() - 1) / 3);
    if (e == 1) {
        for (Elem g = 2;; ++g) {
            e = pow(g, (size() - 1) / 3);
            if (e != 1) break;
        }
    }
    Elem other = mul(e, e);
    zeta_ = e < other ? e : other;
    zeta2_ = e < other ? other : e;
}

Elem Field::mul_slow(Elem a, Elem b) const { return Elem(clmul_mod(a, b, modulus_, m_)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw MathError("division by zero in GF(2^m)");
    return pow(a, size() - 2);
}

Elem Field::sqrt(Elem a) const {
    for (int i = 0; i < m_ - 1; ++i) a = mul(a, a);
    return a;
}

int Field::trace(Elem a) const {
    Elem t = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        t ^= x;
        x = mul(x, x);
    }
    return int(t & 1);
}

Elem Field::zeta_pow(long long e) const {
    long long r = ((e % 3) + 3) % 3;
    return r == 0 ? 1 : (r == 1 ? zeta_ : zeta2_);
}

bool Field::solve_as(Elem c, Elem& x) const {
    if (trace(c)) return false;
    // Echelon basis over GF(2) of the image of x -> x^2 + x, tagged with preimages.
    std::vector<std::uint64_t> val(m_, 0), tag(m_, 0);
    std::vector<bool> have(m_, false);
    for (int i = 0; i < m_; ++i) {
        Elem b = Elem(1) << i;
        std::uint64_t v = mul(b, b) ^ b, t = b;
        for (int bit = m_ - 1; bit >= 0 && v; --bit) {
            if (!(v >> bit & 1)) continue;
            if (have[bit]) {
                v ^= val[bit];
                t ^= tag[bit];
            } else {
                have[bit] = true;
                val[bit] = v;
                tag[bit] = t;
                break;
            }
        }
    }
    std::uint64_t target = c, combo = 0;
    for (int bit = m_ - 1; bit >= 0; --bit) {
        if (!(target >> bit & 1)) continue;
        if (!have[bit]) return false;
        target ^= val[bit];
        combo ^= tag[bit];
    }
    x = Elem(combo);
    return true;
}

void Field::axpy(Elem* dst, const Elem* src, Elem c, std::size_t len) const {
    if (c == 0) return;
    if (c == 1) {
        for (std::size_t k = 0; k < len; ++k) dst[k] ^= src[k];
        return;
    }
    if (!table_.empty()) {
        const std::uint8_t* t = &table_[c << 8];
        for (std::size_t k = 0; k < len; ++k) dst[k] ^= t[src[k]];
        return;
    }
    for (std::size_t k = 0; k < len; ++k)
        if (src[k]) dst[k] ^= mul_slow(c, src[k]);
}

void Field::scale(Elem* v, Elem c, std::size_t len) const {
    if (c == 1) return;
    for (std::size_t k = 0; k < len; ++k) v[k] = mul(c, v[k]);
}

std::vector<Elem> Field::cube_roots(Elem a) const {
    if (m_ > 20) throw MathError("cube root search limited to m <= 20");
    std::vector<Elem> out;
    for (std::uint64_t x = 0; x < size(); ++x)
        if (mul(mul(Elem(x), Elem(x)), Elem(x)) == a) out.push_back(Elem(x));
    return out;
}

}  // namespace a4diff
