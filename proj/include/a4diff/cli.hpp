#pragma once

#include <iosfwd>

#include "a4diff/ratfunc.hpp"

namespace a4diff {

// n mod 3.
inline int example_r(int n) { return n % 3; }

// Example 1: s^((32n - 2r_n + 4)x - 3) (s^(16x) + 1)  (uses n, x).
// Example 2: zeta s^(12n+2) / ((s-1)^(4n-1) (s-zeta)^(4n-3) (s-zeta^2)^(4n-1))  (uses n).
// Example 3: psi^(3(4n+1)) s^(12n+2) (s^2+1) / (s^3 - psi^3)^(4n+1)  (uses n, psi).
RatFunc example_alpha(const Field& F, int which, int n, int x, Elem psi);

// Exit codes: 0 success, 1 usage error, 2 mathematical precondition failure,
// 3 verification mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace a4diff
