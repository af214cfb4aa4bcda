#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "a4diff/artin_schreier.hpp"
#include "a4diff/proj.hpp"

namespace a4diff {

struct BranchPoint {
    Place place;
    int p_alpha = 0, p_rho_alpha = 0, p_rho2_alpha = 0;
    int m = 0, M = 0;
    // Which of alpha, rho alpha, rho^2 alpha has the small order m (-1 when m == M).
    int min_index = -1;
    Proj lambda;
    int delta = 0;
    int epsilon = 0;  // -1 at infinity, +1 at 0, 0 otherwise
    std::vector<Elem> theta;
    int different = 0;
    int jump1 = 0, jump2 = -1;
};

enum class OrbitClass { Zeta, ZetaSq, Generic, Degenerate };

struct Orbit {
    Elem psi = 0;
    std::array<BranchPoint, 3> points;  // at psi, zeta psi, zeta^2 psi
    Proj lambda;                        // lambda at the representative
    Proj phi;
    OrbitClass klass = OrbitClass::Generic;
};

struct RamData {
    const Field* field = nullptr;
    ASForm form;                       // the form actually analysed (after normalization)
    bool inverted = false;             // s -> 1/s applied so that infinity is special
    std::vector<BranchPoint> special;  // infinity first, then 0
    std::vector<Orbit> orbits;
    int r = 0;
    long genus = 0;

    std::vector<const BranchPoint*> all_points() const;
};

std::vector<Elem> theta_coefficients(const Field& F, const LaurentChunk& alpha_chunk, const LaurentChunk& beta_chunk,
                                     int m, bool equal_orders = true);

// Fills lambda and delta from m, M, min_index and theta.
void lambda_delta(const Field& F, BranchPoint& bp);

void genus_and_differents(RamData& data);

RamData analyze_branch_data(const Field& F, const ASForm& form);

std::string klass_name(OrbitClass k);

}  // namespace a4diff
