#include "a4diff/proj.hpp"

namespace a4diff {

Proj mobius(const Field& F, Elem a, Elem b, Elem c, Elem d, Proj x) {
    Elem num, den;
    if (x.inf) {
        num = a;
        den = c;
    } else {
        num = F.mul(a, x.v) ^ b;
        den = F.mul(c, x.v) ^ d;
    }
    if (den == 0) return Proj::infinity();
    return Proj::at(F.div(num, den));
}

Proj lambda_of_phi(const Field& F, Proj phi) {
    Elem z = F.zeta();
    return mobius(F, F.mul(z, z), z, 1, 1, phi);
}

Proj phi_of_lambda(const Field& F, Proj lambda) { return mobius(F, 1, F.zeta(), 1, F.zeta2(), lambda); }

Proj lambda_prime(const Field& F, Proj lambda) { return mobius(F, 1, 1, 1, 0, lambda); }

Proj lambda_second(const Field& F, Proj lambda) { return mobius(F, 0, 1, 1, 1, lambda); }

}  // namespace a4diff
