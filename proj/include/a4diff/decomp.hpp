#pragma once

#include <string>
#include <vector>

#include "a4diff/labels.hpp"
#include "a4diff/ramification.hpp"

namespace a4diff {

struct MuNu {
    int mu1 = 0, mu2 = 0, mu3 = 0;
    int nu = 0;
    int a = 0, b = 0;  // a(y), b(y)
    int k = 0;         // k_y
};

// Position of a branch point inside RamData: special index or (orbit, point).
struct PointRef {
    bool special = true;
    int index = 0;
    int point = 0;
};

MuNu mu_nu(const RamData& data, const PointRef& ref);
const BranchPoint& point_at(const RamData& data, const PointRef& ref);
std::vector<PointRef> point_refs(const RamData& data);

// l_y, a_{y,1}, a_{y,2} of the kH-decomposition.
struct KHBlock {
    int l = 0, a1 = 0, a2 = 0;
};
KHBlock kh_block(const BranchPoint& bp, const MuNu& mn);

// Per special point splits used by the kG-decomposition (multiplicities indexed by i).
struct SpecialSplit {
    int b[3] = {0, 0, 0};
    int c[3] = {0, 0, 0};
    int a1[3] = {0, 0, 0};
    int a2[3] = {0, 0, 0};
};
SpecialSplit special_split(const RamData& data, int special_index);

// All decompositions are expressed for the original coordinate s (the twist is applied
// when the analysis ran on s -> 1/s).
Decomposition kH_decomposition(const RamData& data);
Decomposition kG_decomposition(const RamData& data);
Decomposition hkg_decomposition(const RamData& data);
Decomposition restrict_decomposition(const Field& F, const Decomposition& d);

// Human-readable notes about the bookkeeping (e.g. when b(y) = 1 somewhere).
std::vector<std::string> decomposition_notes(const RamData& data);

}  // namespace a4diff
