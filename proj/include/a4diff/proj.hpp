#pragma once

#include <string>

#include "a4diff/gf.hpp"

namespace a4diff {

// Point of the projective line over the working field.
struct Proj {
    bool inf = false;
    Elem v = 0;

    static Proj at(Elem v) { return {false, v}; }
    static Proj infinity() { return {true, 0}; }
    bool operator==(const Proj& o) const { return inf == o.inf && (inf || v == o.v); }
    bool operator!=(const Proj& o) const { return !(*this == o); }
    bool operator<(const Proj& o) const { return inf != o.inf ? o.inf : (!inf && v < o.v); }
    std::string str() const { return inf ? "inf" : std::to_string(v); }
};

// x -> (a x + b) / (c x + d)
Proj mobius(const Field& F, Elem a, Elem b, Elem c, Elem d, Proj x);

// lambda(phi) = zeta (1 + zeta phi) / (1 + phi)
Proj lambda_of_phi(const Field& F, Proj phi);
// phi(lambda) = (zeta + lambda) / (zeta^2 + lambda)
Proj phi_of_lambda(const Field& F, Proj lambda);
// (1 + lambda) / lambda
Proj lambda_prime(const Field& F, Proj lambda);
// 1 / (1 + lambda)
Proj lambda_second(const Field& F, Proj lambda);

}  // namespace a4diff
