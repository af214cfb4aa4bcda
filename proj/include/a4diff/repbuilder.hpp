#pragma once

#include <string>
#include <vector>

#include "a4diff/decomp.hpp"
#include "a4diff/modulezoo.hpp"

namespace a4diff {

// One basis differential f_{y,family,index} ds.
struct BasisLabel {
    PointRef ref;
    std::string point;  // "inf", "0", "y1", "y1'", "y1''", ...
    int family = 1;     // 1, 2, 3
    int index = 0;
};

struct BlockPlan {
    std::string point;
    std::string kind;  // "special", "orbit", "dagger"
    int offset = 0, dim = 0;
    int n = 0;      // n_y = mu_2 - mu_1
    int delta = 0;
    Proj lambda;
    // Banded theta matrix on the family-3 indices above mu_1 + k; theta1/theta2 are set only
    // when lambda is zeta or zeta^2.
    Matrix theta, theta1, theta2;
    std::vector<std::string> notes;
};

struct GlobalRep {
    GroupRep rep;
    std::vector<BasisLabel> labels;
    std::vector<BlockPlan> block_plan;
};

// Matrices of sigma, tau, rho on the basis of holomorphic differentials, in the original
// coordinate s. Throws "theta range exceeded" or "unsupported configuration".
GlobalRep build_global_rep(const RamData& data);

}  // namespace a4diff
