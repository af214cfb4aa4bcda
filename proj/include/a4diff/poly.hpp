#pragma once

#include <utility>
#include <vector>

#include "a4diff/gf.hpp"

namespace a4diff {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& p);
inline int deg(const Poly& p) { return int(p.size()) - 1; }
inline Elem lead(const Poly& p) { return p.empty() ? 0 : p.back(); }

Poly constant(Elem c);
Poly monomial(Elem c, int e);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
Poly shift_up(const Poly& a, int e);  // a * s^e
void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
Poly pow(const Field& F, const Poly& a, unsigned e);
Elem eval(const Field& F, const Poly& a, Elem x);
Poly derivative(const Poly& a);

// p(s + c)
Poly taylor_shift(const Field& F, const Poly& p, Elem c);
// p(c * s)
Poly scale_var(const Field& F, const Poly& p, Elem c);
// s^n p(1/s), with n >= deg p
Poly reverse(const Poly& p, int n);
// Number of trailing zero coefficients (the s-adic valuation); p nonzero.
int low_order(const Poly& p);

// First `count` coefficients of num/den as a power series; den(0) != 0.
std::vector<Elem> series_div(const Field& F, const Poly& num, const Poly& den, int count);

struct Factorization {
    std::vector<std::pair<Elem, int>> roots;  // distinct roots with multiplicity, ascending
    Poly unsplit;                             // monic cofactor without roots in the field
};

// Roots of p in the working field with multiplicities.
Factorization split(const Field& F, const Poly& p);

// Distinct roots of p in the field (p nonzero).
std::vector<Elem> roots(const Field& F, const Poly& p);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys);

}  // namespace poly
}  // namespace a4diff
