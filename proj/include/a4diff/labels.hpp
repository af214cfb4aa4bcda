#pragma once

#include <map>
#include <string>
#include <vector>

#include "a4diff/proj.hpp"

namespace a4diff {

enum class Side { H, G };

// Isomorphism class of a non-projective indecomposable module.
//   H: Simple = k, OddString = M_{2n+1,x}, EvenString = N_{2n,lambda} with lambda in k u {inf}
//      (all in (A,B) coordinates; lambda = 0, inf are strings, the rest bands).
//   G: Simple = S_i, OddString = M_{2n+1,x,i}, EvenString = N_{2n,*,i} with * in {0, inf},
//      Band = B_{6n,mu} with mu in k^x.
struct Label {
    Side side = Side::G;
    enum Kind { Simple, OddString, EvenString, Band } kind = Simple;
    int n = 0;
    int x = 0;
    int i = 0;
    Proj param;

    static Label k();
    static Label h_odd(int n, int x);
    static Label h_even(int n, Proj lambda);
    static Label g_simple(int i);
    static Label g_odd(int n, int x, int i);
    static Label g_even(int n, Proj star, int i);
    static Label g_band(int n, Elem mu);

    int dim() const;
    // Machine-readable name, e.g. "N[2n=4,*=0,i=2]".
    std::string name() const;
    // Name in the usual notation, e.g. "N_{4,0,2}"; scalars printed as 0, 1, zeta, zeta^2 or masks.
    std::string pretty(const Field& F) const;

    bool operator==(const Label& o) const;
    bool operator<(const Label& o) const;
};

std::string elem_pretty(const Field& F, Proj v);

struct Decomposition {
    Side side = Side::G;
    std::map<Label, long> entries;  // multiplicities, all positive

    void add(const Label& l, long mult);
    long total_dim() const;
    bool operator==(const Decomposition& o) const { return side == o.side && entries == o.entries; }
    bool operator!=(const Decomposition& o) const { return !(*this == o); }
    std::string pretty(const Field& F) const;
};

// Relabelling under the automorphism rho -> rho^-1, sigma -> sigma, tau -> sigma tau,
// which is what the substitution s -> 1/s does to the group action. It is an involution.
Label twist_label(const Field& F, const Label& l);
Decomposition twist(const Field& F, const Decomposition& d);

}  // namespace a4diff
