#include "a4diff/poly.hpp"

#include <algorithm>

namespace a4diff::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly constant(Elem c) { return c ? Poly{c} : Poly{}; }

Poly monomial(Elem c, int e) {
    if (!c) return {};
    Poly p(e + 1, 0);
    p[e] = c;
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    trim(r);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) F.axpy(r.data() + i, b.data(), a[i], b.size());
    trim(r);
    return r;
}

Poly scale(const Field& F, const Poly& a, Elem c) {
    if (!c) return {};
    Poly r = a;
    F.scale(r.data(), c, r.size());
    return r;
}

Poly shift_up(const Poly& a, int e) {
    if (a.empty()) return {};
    Poly r(e, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw MathError("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    Elem li = F.inv(b.back());
    for (int d = deg(r); d >= deg(b); --d) {
        Elem c = F.mul(r[d], li);
        if (!c) continue;
        q[d - deg(b)] = c;
        F.axpy(r.data() + (d - deg(b)), b.data(), c, b.size());
    }
    trim(q);
    trim(r);
}

Poly mod(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(F, a, b, q, r);
    return r;
}

Poly monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly pow(const Field& F, const Poly& a, unsigned e) {
    Poly r{1}, base = a;
    while (e) {
        if (e & 1) r = mul(F, r, base);
        e >>= 1;
        if (e) base = mul(F, base, base);
    }
    return r;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
    Elem r = 0;
    for (int i = deg(a); i >= 0; --i) r = F.mul(r, x) ^ a[i];
    return r;
}

Poly derivative(const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(i % 2 ? a[i] : 0);
    trim(r);
    return r;
}

Poly taylor_shift(const Field& F, const Poly& p, Elem c) {
    Poly r = p;
    if (c == 0) return r;
    // Repeated synthetic division by (s - c).
    int n = deg(r);
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) r[j] ^= F.mul(c, r[j + 1]);
    trim(r);
    return r;
}

Poly scale_var(const Field& F, const Poly& p, Elem c) {
    Poly r = p;
    Elem f = 1;
    for (auto& x : r) {
        x = F.mul(x, f);
        f = F.mul(f, c);
    }
    trim(r);
    return r;
}

Poly reverse(const Poly& p, int n) {
    Poly r(n + 1, 0);
    for (int i = 0; i <= deg(p); ++i) r[n - i] = p[i];
    trim(r);
    return r;
}

int low_order(const Poly& p) {
    int v = 0;
    while (v < int(p.size()) && p[v] == 0) ++v;
    return v;
}

std::vector<Elem> series_div(const Field& F, const Poly& num, const Poly& den, int count) {
    if (den.empty() || den[0] == 0) throw MathError("series division by a non-unit");
    Elem d0i = F.inv(den[0]);
    std::vector<Elem> q(count, 0);
    std::vector<Elem> rem(count, 0);
    for (int i = 0; i < count && i < int(num.size()); ++i) rem[i] = num[i];
    for (int i = 0; i < count; ++i) {
        Elem c = F.mul(rem[i], d0i);
        q[i] = c;
        if (!c) continue;
        int len = std::min<int>(int(den.size()), count - i);
        F.axpy(rem.data() + i, den.data(), c, len);
    }
    return q;
}

namespace {

// x^(2^k) mod f, iterated squaring.
Poly frobenius_power(const Field& F, const Poly& f, int k) {
    Poly x{0, 1};
    Poly r = mod(F, x, f);
    for (int i = 0; i < k; ++i) r = mod(F, mul(F, r, r), f);
    return r;
}

void split_squarefree_split(const Field& F, const Poly& g, std::vector<Elem>& out) {
    // g is monic, squarefree, and a product of distinct linear factors.
    if (deg(g) <= 0) return;
    if (deg(g) == 1) {
        out.push_back(g[0]);
        return;
    }
    // Trace maps Tr(beta s) for beta over the polynomial basis separate distinct roots.
    for (int b = 0; b < F.m(); ++b) {
        Poly t{}, term = mod(F, Poly{0, Elem(1) << b}, g);
        for (int i = 0; i < F.m(); ++i) {
            t = add(t, term);
            term = mod(F, mul(F, term, term), g);
        }
        Poly h = gcd(F, g, t);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            Poly q, r;
            divmod(F, g, h, q, r);
            split_squarefree_split(F, h, out);
            split_squarefree_split(F, monic(F, q), out);
            return;
        }
    }
    throw MathError("root splitting failed");
}

}  // namespace

std::vector<Elem> roots(const Field& F, const Poly& p) {
    if (p.empty()) throw MathError("roots of the zero polynomial");
    Poly f = monic(F, p);
    if (deg(f) == 0) return {};
    Poly xq = frobenius_power(F, f, F.m());
    Poly g = gcd(F, f, add(xq, Poly{0, 1}));
    std::vector<Elem> out;
    split_squarefree_split(F, g, out);
    std::sort(out.begin(), out.end());
    return out;
}

Factorization split(const Field& F, const Poly& p) {
    Factorization fac;
    Poly f = monic(F, p);
    for (Elem c : roots(F, f)) {
        int mult = 0;
        Poly lin{c, 1};
        for (;;) {
            Poly q, r;
            divmod(F, f, lin, q, r);
            if (!r.empty()) break;
            f = q;
            ++mult;
        }
        fac.roots.push_back({c, mult});
    }
    fac.unsplit = f;
    return fac;
}

Poly interpolate(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!ys[i]) continue;
        Poly basis{1};
        Elem denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(F, basis, Poly{xs[j], 1});
            denom = F.mul(denom, xs[i] ^ xs[j]);
        }
        result = add(result, scale(F, basis, F.div(ys[i], denom)));
    }
    return result;
}

}  // namespace a4diff::poly
