#pragma once

#include <climits>
#include <string>
#include <vector>

#include "a4diff/poly.hpp"

namespace a4diff {

// A rational point of the projective line: s = c or s = infinity.
struct Place {
    bool inf = false;
    Elem c = 0;

    static Place finite(Elem c) { return {false, c}; }
    static Place infinity() { return {true, 0}; }
    bool operator==(const Place& o) const { return inf == o.inf && (inf || c == o.c); }
    bool operator<(const Place& o) const { return inf != o.inf ? o.inf : (!inf && c < o.c); }
    std::string key() const;
};

// num/den with gcd 1 and monic den.
class RatFunc {
public:
    RatFunc() : den_{1} {}
    RatFunc(const Field& F, Poly num, Poly den);
    static RatFunc from_poly(const Field& F, Poly p) { return RatFunc(F, std::move(p), Poly{1}); }
    static RatFunc constant(const Field& F, Elem c) { return from_poly(F, poly::constant(c)); }
    static RatFunc s_power(const Field& F, int e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return den_.size() == 1 && num_.size() <= 1; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    Poly num_, den_;
};

namespace rf {

RatFunc add(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc mul(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc div(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc scale(const Field& F, const RatFunc& a, Elem c);
RatFunc sqr(const Field& F, const RatFunc& a);
RatFunc pow(const Field& F, const RatFunc& a, int e);
// f(1/s)
RatFunc invert_var(const Field& F, const RatFunc& f);
// Value at a finite point where f has no pole.
Elem eval(const Field& F, const RatFunc& f, Elem x);

}  // namespace rf

constexpr int ORD_INF = INT_MAX;

// Valuation at y; ORD_INF for f = 0.
int ord_at(const Field& F, const RatFunc& f, const Place& y);

struct LaurentChunk {
    Place place;
    int ord = ORD_INF;
    std::vector<Elem> coeffs;  // coefficients of pi^ord, pi^(ord+1), ...
};

LaurentChunk laurent_at(const Field& F, const RatFunc& f, const Place& y, int count);

// f(zeta^power * s)
RatFunc rho_pullback(const Field& F, const RatFunc& f, int power);

// f + f(zeta s) + f(zeta^2 s)
RatFunc trace_K_over_J(const Field& F, const RatFunc& f);

// Finite poles with their orders; throws "pole not split" if den does not split.
std::vector<std::pair<Elem, int>> finite_poles(const Field& F, const RatFunc& f);

std::string to_string(const RatFunc& f);

}  // namespace a4diff
