#include <random>

#include "doctest.h"

#include "a4diff/ratfunc.hpp"

using namespace a4diff;

namespace {

const Field& F = Field::get(8);

// Product of random linear factors over the field, so every zero and pole is rational.
RatFunc random_split(std::mt19937& rng) {
    RatFunc f = RatFunc::constant(F, Elem(1 + rng() % 255));
    int factors = 1 + int(rng() % 5);
    for (int t = 0; t < factors; ++t) {
        RatFunc lin = RatFunc::from_poly(F, Poly{Elem(rng() % 256), 1});
        f = rng() % 2 ? rf::mul(F, f, lin) : rf::div(F, f, lin);
    }
    return rf::mul(F, f, RatFunc::s_power(F, int(rng() % 7) - 3));
}

Place random_place(std::mt19937& rng) {
    if (rng() % 8 == 0) return Place::infinity();
    return Place::finite(Elem(rng() % 256));
}

}  // namespace

TEST_CASE("valuation is additive") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        RatFunc f = random_split(rng), g = random_split(rng);
        Place y = random_place(rng);
        CHECK(ord_at(F, rf::mul(F, f, g), y) == ord_at(F, f, y) + ord_at(F, g, y));
    }
}

TEST_CASE("principal divisors have degree zero") {
    std::mt19937 rng(8);
    for (int t = 0; t < 200; ++t) {
        RatFunc f = random_split(rng);
        long total = ord_at(F, f, Place::infinity());
        for (Elem c = 0; c < 256; ++c) total += ord_at(F, f, Place::finite(c));
        CHECK(total == 0);
    }
}

TEST_CASE("trace is rho-invariant") {
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        RatFunc f = random_split(rng);
        RatFunc tr = trace_K_over_J(F, f);
        CHECK(trace_K_over_J(F, rho_pullback(F, f, 1)) == tr);
        CHECK(rho_pullback(F, tr, 1) == tr);
        CHECK(rho_pullback(F, rho_pullback(F, f, 1), 2) == f);
    }
}

TEST_CASE("Laurent expansion reproduces the function") {
    std::mt19937 rng(10);
    const int count = 12;
    for (int t = 0; t < 200; ++t) {
        RatFunc f = random_split(rng);
        if (f.is_zero()) continue;
        Place y = random_place(rng);
        LaurentChunk c = laurent_at(F, f, y, count);
        REQUIRE(c.ord == ord_at(F, f, y));
        // Move y to 0: g(pi) = f(y + pi) or f(1/pi).
        RatFunc g = y.inf ? rf::invert_var(F, f) : RatFunc(F, poly::taylor_shift(F, f.num(), y.c),
                                                          poly::taylor_shift(F, f.den(), y.c));
        // series(pi) * den(pi) = num(pi) * pi^-ord, exact below pi^count.
        Poly lhs = poly::mul(F, c.coeffs, g.den());
        const Poly& num = g.num();
        for (int k = 0; k < count; ++k) {
            Elem a = k < int(lhs.size()) ? lhs[k] : 0;
            int idx = k + c.ord;
            Elem b = idx >= 0 && idx < int(num.size()) ? num[idx] : 0;
            CHECK(a == b);
        }
    }
}

TEST_CASE("pole listing") {
    const Field& G = Field::get(8);
    RatFunc f = rf::div(G, RatFunc::constant(G, 1),
                        rf::mul(G, rf::pow(G, RatFunc::from_poly(G, Poly{1, 1}), 3), RatFunc::s_power(G, 2)));
    auto poles = finite_poles(G, f);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == std::pair<Elem, int>{0, 2});
    CHECK(poles[1] == std::pair<Elem, int>{1, 3});
    CHECK(to_string(RatFunc::s_power(G, 3)) == "s^3");
}
