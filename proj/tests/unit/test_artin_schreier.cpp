#include <random>
#include <set>

#include "doctest.h"

#include "a4diff/artin_schreier.hpp"
#include "random_data.hpp"

using namespace a4diff;

namespace {

const Field& F = Field::get(8);

RatFunc random_alpha(std::mt19937& rng) {
    RatFunc f;
    int terms = 1 + int(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Elem c = Elem(1 + rng() % 255);
        if (rng() % 2) {
            f = rf::add(F, f, rf::scale(F, RatFunc::s_power(F, int(rng() % 25) - 12), c));
        } else {
            RatFunc pole = rf::div(F, RatFunc::constant(F, 1), RatFunc::from_poly(F, Poly{Elem(rng() % 256), 1}));
            f = rf::add(F, f, rf::scale(F, rf::pow(F, pole, 1 + int(rng() % 8)), c));
        }
    }
    return f;
}

RatFunc as_part(const RatFunc& h) { return rf::add(F, rf::sqr(F, h), h); }

}  // namespace

TEST_CASE("reduction round-trips and leaves odd pole orders") {
    std::mt19937 rng(21);
    for (int t = 0; t < 300; ++t) {
        RatFunc a = random_alpha(rng);
        ASForm f = as_reduce(F, a);
        RatFunc back = rf::add(F, rf::add(F, f.alpha_reduced, as_part(f.h)), RatFunc::constant(F, f.dropped_constant));
        CHECK(back == a);
        for (const auto& [y, k] : f.pole_table) {
            CHECK(k % 2 == 1);
            CHECK(ord_at(F, f.alpha_reduced, y) == -k);
        }
        ASForm again = as_reduce(F, f.alpha_reduced);
        CHECK(again.alpha_reduced == f.alpha_reduced);
        CHECK(again.pole_table == f.pole_table);
    }
}

TEST_CASE("triviality test") {
    std::mt19937 rng(22);
    for (int t = 0; t < 100; ++t) {
        RatFunc h = random_alpha(rng);
        CHECK(is_as_trivial(F, as_part(h)));
    }
    CHECK_FALSE(is_as_trivial(F, RatFunc::s_power(F, 5)));
    CHECK_FALSE(is_as_trivial(F, RatFunc::s_power(F, 1)));
}

TEST_CASE("A4 condition checker") {
    RatFunc s5 = RatFunc::s_power(F, 5);
    A4Report r = check_a4_conditions(F, s5);
    CHECK(r.trace_zero);
    CHECK(r.verdict);
    RatFunc s2s = rf::add(F, RatFunc::s_power(F, 2), RatFunc::s_power(F, 1));
    A4Report t = check_a4_conditions(F, s2s);
    CHECK_FALSE(t.nontrivial_alpha);
    CHECK_FALSE(t.verdict);
    CHECK_FALSE(check_a4_conditions(F, RatFunc::s_power(F, 3)).trace_zero);
}

TEST_CASE("symmetrized form of random trace-zero data") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 120; ++t) {
        RatFunc a = testing::random_trace_zero(F, rng, t % 3);
        if (!check_a4_conditions(F, a).verdict) continue;
        ASForm f = symmetrize_h(F, a);
        ++checked;
        CHECK(trace_K_over_J(F, f.h).is_zero());
        CHECK(trace_K_over_J(F, f.alpha_reduced).is_zero());
        RatFunc back = rf::add(F, rf::add(F, f.alpha_reduced, as_part(f.h)), RatFunc::constant(F, f.dropped_constant));
        CHECK(back == a);
        // Branch locus: poles of any conjugate of alpha~.
        std::set<Place> locus;
        for (int j = 0; j < 3; ++j) {
            ASForm c = as_reduce(F, rho_pullback(F, f.alpha_reduced, j));
            for (const auto& [y, k] : c.pole_table) locus.insert(y);
        }
        int specials = 0, finite = 0;
        for (const Place& y : locus) {
            if (y.inf || y.c == 0) {
                ++specials;
                int k = -ord_at(F, f.alpha_reduced, y);
                CHECK(k % 2 == 1);
                CHECK(k % 3 != 0);
                continue;
            }
            ++finite;
            for (int j = 1; j < 3; ++j) CHECK(locus.count(Place::finite(F.mul(y.c, F.zeta_pow(j)))) == 1);
        }
        for (const auto& [y, k] : f.pole_table) CHECK(k % 2 == 1);
        CHECK(finite % 3 == 0);
        CHECK(specials <= 2);
    }
    CHECK(checked >= 100);
}
