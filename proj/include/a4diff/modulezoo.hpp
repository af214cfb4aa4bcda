#pragma once

#include <string>
#include <vector>

#include "a4diff/labels.hpp"
#include "a4diff/matrix.hpp"

namespace a4diff {

// Letters over the two-arrow quivers. Arrow 0 is C (gamma arrows, v -> v+1) on the A4 quiver
// and the loop A on the Klein-four quiver; arrow 1 is D (delta arrows, v -> v-1) resp. B.
// A direct letter alpha at position j means alpha b_{j+1} = b_j, an inverse letter
// alpha^-1 means alpha b_j = b_{j+1}.
struct Letter {
    int arrow = 0;
    bool inverse = false;
    bool operator==(const Letter& o) const { return arrow == o.arrow && inverse == o.inverse; }
};
using Word = std::vector<Letter>;

int num_vertices(Side side);
int arrow_target(Side side, int arrow, int v);
// Vertex of b_{j+1} given the vertex of b_j and the letter between them.
int next_vertex(Side side, int v, Letter l);
std::string word_string(Side side, const Word& w);

void validate_string(Side side, const Word& w);
void validate_band(Side side, const Word& w, int v1);

// Representation of the quiver (with relations) on a single space: `vertex` assigns a vertex
// to each basis vector, C and D are the summed arrow actions (A and B on the H side).
struct QRep {
    Side side = Side::G;
    std::vector<int> vertex;
    Matrix C, D;
    int dim() const { return int(vertex.size()); }
};

QRep string_module_matrices(Side side, const Word& w, int v1);
// Jordan block J_n(mu) sits on the first letter, which must be direct.
QRep band_module_matrices(const Field& F, Side side, const Word& w, int v1, int n, Elem mu);
// C^2 = D^2 = 0, CD = DC and arrows respect vertices; throws "relation violation ...".
void check_quiver_relations(const Field& F, const QRep& q);

struct GroupRep {
    Side side = Side::G;
    Matrix sigma, tau, rho;  // rho unused on H
    int dim() const { return sigma.rows; }
};

// Throws "relation violation <name>".
void validate_group_rep(const Field& F, const GroupRep& g);

// G: rho = zeta^vertex, A = zeta C + zeta D + zeta^2 CD, B = zeta^2 C + D + zeta^2 CD.
// H: sigma = 1 + C, tau = 1 + D.
GroupRep kG_group_matrices(const Field& F, const QRep& q);
// kH-module from the actions of C, D in rad(kH).
GroupRep h_rep_from_CD(const Field& F, const Matrix& C, const Matrix& D);
// Inverse of kG_group_matrices up to a change of basis (vertex blocks in order 0, 1, 2).
QRep to_qrep(const Field& F, const GroupRep& g);

GroupRep restrict_to_H(const GroupRep& g);
GroupRep induce_to_G(const Field& F, const GroupRep& h);
GroupRep direct_sum(const std::vector<GroupRep>& parts);
// P^-1 g P for every generator.
GroupRep conjugate(const Field& F, const GroupRep& g, const Matrix& P);
// rho -> rho^-1, sigma -> sigma, tau -> sigma tau.
GroupRep twist_rep(const Field& F, const GroupRep& g);

// The three periodic letter patterns whose prefixes give every string up to inversion:
// 0 = (D^-1 C)^inf, 1 = (C D^-1)^inf, 2 = (C^-1 D)^inf.
Letter pattern_letter(int pattern, int j);
Word pattern_word(int pattern, int length);
Word band_word(Side side);

// Zoo address of a label: pattern + start vertex + length for strings, band otherwise.
struct ZooWord {
    bool band = false;
    int pattern = 0, v1 = 0, length = 0;  // strings
    int n = 0;                            // bands
    Elem param = 0;
};
ZooWord zoo_word(const Label& l);
// Label of the string with the given address, or false if the address is a duplicate.
bool string_label(Side side, int pattern, int v1, int length, Label& out);

QRep label_qrep(const Field& F, const Label& l);
GroupRep label_rep(const Field& F, const Label& l);
GroupRep decomposition_rep(const Field& F, const Decomposition& d);

enum class Direction { Restrict, Induce };
// Res_H^G of a kG label (in (A,B) coordinates) or Ind_H^G of a kH label.
Decomposition induce_restrict_label(const Field& F, const Label& l, Direction dir);

}  // namespace a4diff
