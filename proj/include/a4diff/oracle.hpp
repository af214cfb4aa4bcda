#pragma once

#include <string>
#include <vector>

#include "a4diff/labels.hpp"
#include "a4diff/modulezoo.hpp"

namespace a4diff {

// Row-basis subspace helpers (all results in reduced row echelon form).
namespace sub {
// Rows of S mapped by x -> x * mapT.
Matrix image(const Field& F, const Matrix& S, const Matrix& mapT);
// {x in span S : x * mapT in span T}; T has mapT.cols columns.
Matrix pull(const Field& F, const Matrix& S, const Matrix& mapT, const Matrix& T);
Matrix intersect(const Field& F, const Matrix& S, const Matrix& T);
}  // namespace sub

// A QRep split into vertex spaces, ready for hom computations.
class HomTarget {
public:
    HomTarget(const Field& F, const QRep& q);

    const Field& field() const { return *F_; }
    Side side() const { return side_; }
    int dim() const { return dim_; }
    int vdim(int v) const { return int(idx_[v].size()); }
    // Transposed block of `arrow` leaving vertex v (row-vector convention).
    const Matrix& arrowT(int arrow, int v) const { return arrT_[arrow][v]; }
    // {x in M_v : beta x = 0 for each arrow beta not in the mask}; bit a = arrow a allowed.
    const Matrix& kill(int v, int mask) const { return kill_[v][mask]; }

private:
    const Field* F_;
    Side side_;
    int dim_;
    std::vector<std::vector<int>> idx_;
    Matrix arrT_[2][3];
    Matrix kill_[3][4];
};

// dim Hom of each prefix of a letter pattern starting at v1 into the target, lengths 0..maxlen.
std::vector<long> prefix_homs(const HomTarget& M, int pattern, int v1, int maxlen);
// dim Hom(band(w, v1, n, mu), target) for n = 1..nmax (index 0 unused).
std::vector<long> band_homs(const HomTarget& M, const Word& w, int v1, Elem mu, int nmax);
long hom_dim_label(const HomTarget& M, const Label& X);
// Same as prefix_homs into a zoo string module, by counting graph maps (no linear algebra).
std::vector<long> string_homs_into(const Label& target, int pattern, int v1, int maxlen);
std::vector<long> string_homs_into_band(const Label& target, int pattern, int v1, int maxlen);
// Same as band_homs into a zoo string module, by counting graph maps.
std::vector<long> band_homs_into(const Label& target, Side side, const Word& w, int v1, int nmax);

// Direct linear-algebra hom dimensions (intertwiner systems), independent of the above.
long hom_dim_qrep(const Field& F, const QRep& X, const QRep& Y);
long hom_dim_group_naive(const Field& F, const GroupRep& X, const GroupRep& Y);
long hom_dim(const Field& F, const GroupRep& X, const GroupRep& Y);

// Band parameters: nonzero t where D + tC (H; t = lambda) or D + C_t (G; C_t scales the arrow
// leaving vertex 0, t = mu) drops rank.
std::vector<Elem> band_parameters(const Field& F, const QRep& q);

struct MultiplicitySolution {
    bool ok = false;
    std::string error;  // empty when ok
    Decomposition decomposition;
    std::vector<Label> candidates;
    std::vector<int> unknowns;             // candidate indices allowed as summands
    std::vector<long> hom_vector;          // dim Hom(candidate, M)
    std::vector<std::vector<long>> gram;   // gram[j][u] = dim Hom(candidate j, candidate unknowns[u])
    std::vector<long> solution;            // per unknown
};

// Multiplicities of the indecomposable summands of M. `extra_params` adds band parameters
// (mu on G, lambda on H) to the candidate list.
MultiplicitySolution decompose_rep(const Field& F, const GroupRep& M, const std::vector<Elem>& extra_params = {});

}  // namespace a4diff
