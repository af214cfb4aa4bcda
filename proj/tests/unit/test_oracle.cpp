#include <random>

#include "doctest.h"

#include "a4diff/oracle.hpp"
#include "zoo_labels.hpp"

using namespace a4diff;

namespace {

const Field& F = Field::get(8);

Matrix random_matrix(std::mt19937& rng, int r, int c, int density) {
    Matrix A(r, c);
    for (auto& x : A.a)
        if (int(rng() % 100) < density) x = Elem(rng() % 256);
    return A;
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
    return v[rng() % v.size()];
}

}  // namespace

TEST_CASE("rank bounds and elimination order") {
    std::mt19937 rng(61);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + int(rng() % 9), k = 1 + int(rng() % 9), c = 1 + int(rng() % 9);
        Matrix A = random_matrix(rng, r, k, 40), B = random_matrix(rng, k, c, 40);
        int ra = mat::rank(F, A), rb = mat::rank(F, B);
        CHECK(mat::rank(F, mat::mul(F, A, B)) <= std::min(ra, rb));
        CHECK(mat::rank(F, mat::transpose(A)) == ra);
        CHECK(mat::nullspace(F, A).rows == k - ra);
        // Reversed row and column order eliminates along a different path.
        Matrix R(r, k);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < k; ++j) R(i, j) = A(r - 1 - i, k - 1 - j);
        CHECK(mat::rank(F, R) == ra);
    }
}

TEST_CASE("hom dimensions: DP against naive intertwiners") {
    std::mt19937 rng(62);
    for (Side side : {Side::H, Side::G}) {
        auto labels = testing::zoo_labels(side, 12, {1, F.zeta(), 9});
        for (int t = 0; t < 150; ++t) {
            const Label& X = pick(rng, labels);
            const Label& Y = pick(rng, labels);
            CAPTURE(X.name());
            CAPTURE(Y.name());
            GroupRep gx = label_rep(F, X), gy = label_rep(F, Y);
            long naive = hom_dim_group_naive(F, gx, gy);
            CHECK(hom_dim(F, gx, gy) == naive);
            CHECK(hom_dim_qrep(F, label_qrep(F, X), label_qrep(F, Y)) == naive);
            CHECK(hom_dim_label(HomTarget(F, label_qrep(F, Y)), X) == naive);
        }
    }
}

TEST_CASE("hom additivity") {
    std::mt19937 rng(63);
    auto labels = testing::zoo_labels(Side::G, 14, {1, 4});
    for (int t = 0; t < 100; ++t) {
        GroupRep x = label_rep(F, pick(rng, labels)), y = label_rep(F, pick(rng, labels));
        GroupRep z = label_rep(F, pick(rng, labels));
        CHECK(hom_dim(F, direct_sum({x, y}), z) == hom_dim(F, x, z) + hom_dim(F, y, z));
        CHECK(hom_dim(F, z, direct_sum({x, y})) == hom_dim(F, z, x) + hom_dim(F, z, y));
    }
}

TEST_CASE("graph-map counts match the DP") {
    for (Side side : {Side::H, Side::G}) {
        int nv = num_vertices(side);
        for (int p = 0; p < 3; ++p)
            for (int v = 0; v < nv; ++v)
                for (int len = 0; len < 16; ++len) {
                    Label T;
                    if (!string_label(side, p, v, len, T)) continue;
                    CAPTURE(T.name());
                    HomTarget M(F, label_qrep(F, T));
                    for (int p2 = 0; p2 < 3; ++p2)
                        for (int v2 = 0; v2 < nv; ++v2)
                            CHECK(prefix_homs(M, p2, v2, 16) == string_homs_into(T, p2, v2, 16));
                    for (Elem mu : {Elem(1), F.zeta(), Elem(7)}) {
                        auto dp = band_homs(M, band_word(side), 0, mu, 4);
                        auto comb = band_homs_into(T, side, band_word(side), 0, 4);
                        for (int k = 1; k <= 4; ++k) CHECK(dp[k] == comb[k]);
                    }
                }
        for (int n = 1; n <= 3; ++n)
            for (Elem mu : {Elem(1), F.zeta(), Elem(7)}) {
                Label T = side == Side::G ? Label::g_band(n, mu) : Label::h_even(n, Proj::at(mu));
                CAPTURE(T.name());
                HomTarget M(F, label_qrep(F, T));
                for (int p = 0; p < 3; ++p)
                    for (int v = 0; v < nv; ++v) CHECK(prefix_homs(M, p, v, 16) == string_homs_into_band(T, p, v, 16));
            }
    }
}

TEST_CASE("End of a band does not depend on its parameter") {
    for (Side side : {Side::H, Side::G})
        for (int n = 1; n <= 3; ++n) {
            long first = -1;
            for (Elem mu : {Elem(1), Elem(2), F.zeta(), Elem(77), Elem(200)}) {
                if (side == Side::H && (mu == 0)) continue;
                Label T = side == Side::G ? Label::g_band(n, mu) : Label::h_even(n, Proj::at(mu));
                GroupRep g = label_rep(F, T);
                long e = hom_dim(F, g, g);
                if (first < 0) first = e;
                CHECK(e == first);
            }
        }
}

TEST_CASE("band parameters") {
    for (Elem mu : {Elem(1), Elem(5), F.zeta2()}) {
        auto params = band_parameters(F, label_qrep(F, Label::g_band(2, mu)));
        CHECK(params == std::vector<Elem>{mu});
    }
}

TEST_CASE("decomposition recovers random direct sums") {
    std::mt19937 rng(64);
    for (Side side : {Side::H, Side::G}) {
        auto labels = testing::zoo_labels(side, 18, {1, F.zeta(), 33});
        for (int t = 0; t < 30; ++t) {
            Decomposition d;
            d.side = side;
            int budget = 60;
            while (true) {
                const Label& l = pick(rng, labels);
                if (l.dim() > budget) break;
                d.add(l, 1);
                budget -= l.dim();
            }
            GroupRep g = decomposition_rep(F, d);
            MultiplicitySolution s = decompose_rep(F, g);
            CAPTURE(d.pretty(F));
            REQUIRE(s.ok);
            CHECK(s.decomposition == d);
        }
    }
}

TEST_CASE("Frobenius reciprocity on random pairs") {
    std::mt19937 rng(65);
    auto hs = testing::zoo_labels(Side::H, 16, {1, F.zeta(), 40});
    auto gs = testing::zoo_labels(Side::G, 16, {1, 40});
    for (int t = 0; t < 120; ++t) {
        const Label& X = pick(rng, hs);
        const Label& Y = pick(rng, gs);
        CAPTURE(X.name());
        CAPTURE(Y.name());
        GroupRep x = label_rep(F, X), y = label_rep(F, Y);
        CHECK(hom_dim(F, induce_to_G(F, x), y) == hom_dim(F, x, restrict_to_H(y)));
        CHECK(hom_dim(F, y, induce_to_G(F, x)) == hom_dim(F, restrict_to_H(y), x));
    }
}
