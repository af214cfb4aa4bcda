#include <algorithm>
#include <random>

#include "doctest.h"

#include "a4diff/ramification.hpp"
#include "random_data.hpp"

using namespace a4diff;

namespace {

const Field& F = Field::get(8);

struct PointSummary {
    int m, M, delta, different;
    std::array<int, 3> p;
    bool operator<(const PointSummary& o) const {
        return std::tie(m, M, delta, different, p) < std::tie(o.m, o.M, o.delta, o.different, o.p);
    }
    bool operator==(const PointSummary& o) const {
        return std::tie(m, M, delta, different, p) == std::tie(o.m, o.M, o.delta, o.different, o.p);
    }
};

PointSummary summary(const BranchPoint& bp) {
    std::array<int, 3> p{bp.p_alpha, bp.p_rho_alpha, bp.p_rho2_alpha};
    std::sort(p.begin(), p.end());
    return {bp.m, bp.M, bp.delta, bp.different, p};
}

std::vector<PointSummary> summaries(const RamData& d) {
    std::vector<PointSummary> out;
    for (const BranchPoint* bp : d.all_points()) out.push_back(summary(*bp));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("s^5") {
    RamData d = analyze_branch_data(F, symmetrize_h(F, RatFunc::s_power(F, 5)));
    CHECK(d.genus == 6);
    CHECK(d.r == 1);
    REQUIRE(d.special.size() == 1);
    const BranchPoint& inf = d.special[0];
    CHECK(inf.place.inf);
    CHECK(inf.m == 5);
    CHECK(inf.M == 5);
    CHECK(inf.lambda == Proj::at(F.zeta()));
    CHECK(inf.epsilon == -1);
    CHECK(inf.different == 18);
}

TEST_CASE("random data: orders, lambda and phi dictionaries") {
    std::mt19937 rng(31);
    int tried = 0;
    for (int t = 0; t < 150; ++t) {
        auto d = testing::next_datum(F, rng, 400, tried);
        REQUIRE(d);
        for (const BranchPoint* bp : d->all_points()) {
            CHECK(bp->m % 2 == 1);
            CHECK(bp->M % 2 == 1);
            CHECK(bp->m <= bp->M);
            CHECK(bp->different > 0);
        }
        for (const BranchPoint& bp : d->special) {
            CHECK((bp.lambda == Proj::at(F.zeta()) || bp.lambda == Proj::at(F.zeta2())));
            CHECK(bp.epsilon == (bp.place.inf ? -1 : 1));
        }
        for (const Orbit& o : d->orbits) {
            const auto& p = o.points;
            CHECK(p[1].lambda == lambda_prime(F, p[0].lambda));
            CHECK(p[2].lambda == lambda_second(F, p[0].lambda));
            CHECK(p[0].m == p[1].m);
            CHECK(p[0].M == p[2].M);
            CHECK(o.lambda == p[0].lambda);
            CHECK(o.phi == phi_of_lambda(F, o.lambda));
            bool cube_one = !o.phi.inf && F.pow(o.phi.v, 3) == 1;
            bool degenerate_lambda = o.lambda == Proj::at(0) || o.lambda == Proj::at(1) || o.lambda.inf;
            CHECK(cube_one == degenerate_lambda);
            CHECK((o.lambda == Proj::at(F.zeta())) == (o.phi == Proj::at(0)));
            CHECK((o.lambda == Proj::at(F.zeta2())) == o.phi.inf);
        }
        long different_sum = 0;
        for (const BranchPoint* bp : d->all_points()) {
            // Hilbert's formula for the filtration K4 = G_0 = ... = G_j1 > G_j1+1 = ... = G_j2 > 1.
            int hilbert = 3 * (bp->jump1 + 1) + (bp->jump2 < 0 ? 0 : bp->jump2 - bp->jump1);
            CHECK(bp->different == hilbert);
            different_sum += bp->different;
        }
        // Riemann-Hurwitz for the degree-4 cover of the s-line.
        CHECK(2 * d->genus - 2 == 4 * -2 + different_sum);
    }
}

TEST_CASE("pre-composition with s -> zeta s only relabels") {
    std::mt19937 rng(32);
    int tried = 0;
    for (int t = 0; t < 60; ++t) {
        RatFunc a;
        auto d = testing::next_datum(F, rng, 400, tried, &a);
        REQUIRE(d);
        RatFunc b = rho_pullback(F, a, 1);
        RamData e = analyze_branch_data(F, symmetrize_h(F, b));
        CHECK(e.genus == d->genus);
        CHECK(e.r == d->r);
        CHECK(e.orbits.size() == d->orbits.size());
        CHECK(summaries(e) == summaries(*d));
    }
}

TEST_CASE("non-split poles are rejected") {
    // s^2 + s + c irreducible for trace(c) = 1: poles outside the working field.
    Elem c = 1;
    while (F.trace(c) == 0) ++c;
    RatFunc g = rf::div(F, RatFunc::constant(F, 1), RatFunc::from_poly(F, Poly{c, 1, 1}));
    RatFunc a = rf::add(F, g, rho_pullback(F, g, 1));
    CHECK_THROWS_AS(analyze_branch_data(F, symmetrize_h(F, a)), MathError);
}
