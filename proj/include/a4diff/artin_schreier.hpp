#pragma once

#include <map>

#include "a4diff/ratfunc.hpp"

namespace a4diff {

// alpha_input = alpha_reduced + h^2 + h + dropped_constant.
struct ASForm {
    RatFunc alpha_input;
    RatFunc alpha_reduced;
    RatFunc h;
    std::map<Place, int> pole_table;  // pole orders of alpha_reduced, all odd
    // A constant c with x^2 + x = c unsolvable in the working field; trivial over the closure.
    Elem dropped_constant = 0;
    bool trace_zero_mode = false;
};

struct A4Report {
    bool trace_zero = false;
    bool nontrivial_alpha = false;
    bool nontrivial_rho_alpha = false;
    bool nontrivial_sum = false;
    bool verdict = false;
};

ASForm as_reduce(const Field& F, const RatFunc& alpha);
ASForm symmetrize_h(const Field& F, const RatFunc& alpha);
bool is_as_trivial(const Field& F, const RatFunc& alpha);
A4Report check_a4_conditions(const Field& F, const RatFunc& alpha);

}  // namespace a4diff
