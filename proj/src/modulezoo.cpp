#include "a4diff/modulezoo.hpp"

#include "a4diff/proj.hpp"

namespace a4diff {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

const char* arrow_name(Side side, int arrow) {
    if (side == Side::H) return arrow == 0 ? "A" : "B";
    return arrow == 0 ? "C" : "D";
}

// Alternation conditions between letters a and b = the letter after a.
void check_pair(const Letter& a, const Letter& b, const std::string& what) {
    if (a.arrow == b.arrow && a.inverse != b.inverse) throw MathError(what + ": letter followed by its inverse");
    if (a.inverse == b.inverse) throw MathError(what + ": subword is a path of length 2 (lies in the relation ideal)");
}

Matrix identity_plus(const Matrix& A) {
    Matrix S = A;
    for (int i = 0; i < S.rows; ++i) S(i, i) ^= 1;
    return S;
}

void expect(bool ok, const std::string& rel) {
    if (!ok) throw MathError("relation violation " + rel);
}

}  // namespace

int num_vertices(Side side) { return side == Side::G ? 3 : 1; }

int arrow_target(Side side, int arrow, int v) {
    if (side == Side::H) return 0;
    return mod3(arrow == 0 ? v + 1 : v - 1);
}

int next_vertex(Side side, int v, Letter l) {
    if (side == Side::H) return 0;
    // C direct: -1, D direct: +1, inverses the opposite.
    int step = (l.arrow == 0) ? -1 : 1;
    if (l.inverse) step = -step;
    return mod3(v + step);
}

std::string word_string(Side side, const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (const Letter& l : w) {
        s += arrow_name(side, l.arrow);
        if (l.inverse) s += "^-1";
    }
    return s;
}

void validate_string(Side, const Word& w) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j) check_pair(w[j], w[j + 1], "invalid string");
}

void validate_band(Side side, const Word& w, int v1) {
    int l = int(w.size());
    if (l == 0) throw MathError("invalid band: empty word");
    if (w[0].inverse) throw MathError("invalid band: first letter must be an arrow");
    for (int j = 0; j < l; ++j) check_pair(w[j], w[(j + 1) % l], "invalid band");
    std::vector<int> verts(l + 1);
    verts[0] = mod3(v1);
    for (int j = 0; j < l; ++j) verts[j + 1] = next_vertex(side, verts[j], w[j]);
    if (verts[l] != verts[0]) throw MathError("invalid band: walk does not close up");
    for (int d = 1; d < l; ++d) {
        if (l % d) continue;
        bool periodic = verts[d] == verts[0];
        for (int j = 0; periodic && j < l; ++j) periodic = w[j] == w[(j + d) % l];
        if (periodic) throw MathError("invalid band: word is a proper power");
    }
}

QRep string_module_matrices(Side side, const Word& w, int v1) {
    validate_string(side, w);
    int dim = int(w.size()) + 1;
    QRep q;
    q.side = side;
    q.vertex.resize(dim);
    q.C = Matrix(dim, dim);
    q.D = Matrix(dim, dim);
    q.vertex[0] = side == Side::G ? mod3(v1) : 0;
    for (int j = 0; j + 1 < dim; ++j) {
        const Letter& l = w[j];
        q.vertex[j + 1] = next_vertex(side, q.vertex[j], l);
        Matrix& M = l.arrow == 0 ? q.C : q.D;
        if (l.inverse)
            M(j + 1, j) = 1;
        else
            M(j, j + 1) = 1;
    }
    return q;
}

QRep band_module_matrices(const Field& F, Side side, const Word& w, int v1, int n, Elem mu) {
    validate_band(side, w, v1);
    if (n < 1) throw MathError("invalid band: n must be positive");
    if (mu == 0) throw MathError("invalid band: parameter must be nonzero");
    (void)F;
    int l = int(w.size()), dim = l * n;
    QRep q;
    q.side = side;
    q.vertex.resize(dim);
    q.C = Matrix(dim, dim);
    q.D = Matrix(dim, dim);
    int v = side == Side::G ? mod3(v1) : 0;
    for (int j = 0; j < l; ++j) {
        for (int k = 0; k < n; ++k) q.vertex[j * n + k] = v;
        v = next_vertex(side, v, w[j]);
    }
    for (int j = 0; j < l; ++j) {
        const Letter& lt = w[j];
        Matrix& M = lt.arrow == 0 ? q.C : q.D;
        int src = lt.inverse ? j : (j + 1) % l;
        int dst = lt.inverse ? (j + 1) % l : j;
        for (int k = 0; k < n; ++k) {
            if (j == 0) {
                M(dst * n + k, src * n + k) = mu;
                if (k + 1 < n) M(dst * n + k, src * n + k + 1) = 1;
            } else {
                M(dst * n + k, src * n + k) = 1;
            }
        }
    }
    return q;
}

void check_quiver_relations(const Field& F, const QRep& q) {
    int d = q.dim();
    expect(q.C.rows == d && q.C.cols == d && q.D.rows == d && q.D.cols == d, "shape");
    for (int arrow = 0; arrow < 2; ++arrow) {
        const Matrix& M = arrow == 0 ? q.C : q.D;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (M(r, c) && q.vertex[r] != arrow_target(q.side, arrow, q.vertex[c]))
                    expect(false, std::string(arrow_name(q.side, arrow)) + " respects vertices");
    }
    expect(mat::mul(F, q.C, q.C).is_zero(), q.side == Side::G ? "C^2 = 0" : "A^2 = 0");
    expect(mat::mul(F, q.D, q.D).is_zero(), q.side == Side::G ? "D^2 = 0" : "B^2 = 0");
    expect(mat::mul(F, q.C, q.D) == mat::mul(F, q.D, q.C), q.side == Side::G ? "CD = DC" : "AB = BA");
}

void validate_group_rep(const Field& F, const GroupRep& g) {
    int d = g.dim();
    Matrix I = Matrix::identity(d);
    expect(g.sigma.rows == d && g.sigma.cols == d && g.tau.rows == d && g.tau.cols == d, "shape");
    expect(mat::mul(F, g.sigma, g.sigma) == I, "sigma^2 = 1");
    expect(mat::mul(F, g.tau, g.tau) == I, "tau^2 = 1");
    expect(mat::mul(F, g.sigma, g.tau) == mat::mul(F, g.tau, g.sigma), "sigma tau = tau sigma");
    if (g.side == Side::H) return;
    expect(g.rho.rows == d && g.rho.cols == d, "shape");
    Matrix r2 = mat::mul(F, g.rho, g.rho);
    expect(mat::mul(F, r2, g.rho) == I, "rho^3 = 1");
    Matrix sr = mat::mul(F, g.sigma, g.rho);
    expect(mat::mul(F, mat::mul(F, sr, sr), sr) == I, "(sigma rho)^3 = 1");
    expect(mat::mul(F, g.rho, g.sigma) == mat::mul(F, g.tau, g.rho), "rho sigma rho^-1 = tau");
}

GroupRep kG_group_matrices(const Field& F, const QRep& q) {
    check_quiver_relations(F, q);
    GroupRep g;
    g.side = q.side;
    if (q.side == Side::H) {
        g.sigma = identity_plus(q.C);
        g.tau = identity_plus(q.D);
        validate_group_rep(F, g);
        return g;
    }
    int d = q.dim();
    Elem z = F.zeta(), z2 = F.zeta2();
    Matrix CD = mat::mul(F, q.C, q.D);
    Matrix A = mat::add(mat::add(mat::scale(F, q.C, z), mat::scale(F, q.D, z)), mat::scale(F, CD, z2));
    Matrix B = mat::add(mat::add(mat::scale(F, q.C, z2), q.D), mat::scale(F, CD, z2));
    g.sigma = identity_plus(A);
    g.tau = identity_plus(B);
    g.rho = Matrix(d, d);
    for (int i = 0; i < d; ++i) g.rho(i, i) = F.zeta_pow(q.vertex[i]);
    validate_group_rep(F, g);
    return g;
}

GroupRep h_rep_from_CD(const Field& F, const Matrix& C, const Matrix& D) {
    Elem z = F.zeta(), z2 = F.zeta2();
    Matrix CD = mat::mul(F, C, D);
    Matrix A = mat::add(mat::add(mat::scale(F, C, z), mat::scale(F, D, z)), mat::scale(F, CD, z2));
    Matrix B = mat::add(mat::add(mat::scale(F, C, z2), D), mat::scale(F, CD, z2));
    GroupRep g;
    g.side = Side::H;
    g.sigma = identity_plus(A);
    g.tau = identity_plus(B);
    validate_group_rep(F, g);
    return g;
}

QRep to_qrep(const Field& F, const GroupRep& g) {
    validate_group_rep(F, g);
    int d = g.dim();
    QRep q;
    q.side = g.side;
    Matrix A = identity_plus(g.sigma), B = identity_plus(g.tau);
    if (g.side == Side::H) {
        q.vertex.assign(d, 0);
        q.C = A;
        q.D = B;
        return q;
    }
    Matrix r2 = mat::mul(F, g.rho, g.rho);
    Matrix P(d, d);
    int col = 0;
    for (int v = 0; v < 3; ++v) {
        Matrix E = mat::add(mat::scale(F, g.rho, F.zeta_pow(-v)), mat::scale(F, r2, F.zeta_pow(-2 * v)));
        E = identity_plus(E);
        Matrix basis = mat::transpose(E);
        mat::rref(F, basis);
        for (int k = 0; k < basis.rows; ++k, ++col) {
            for (int i = 0; i < d; ++i) P(i, col) = basis(k, i);
            q.vertex.push_back(v);
        }
    }
    expect(col == d, "rho^3 = 1");
    Matrix Pi = mat::inverse(F, P);
    Matrix A2 = mat::mul(F, Pi, mat::mul(F, A, P));
    Matrix B2 = mat::mul(F, Pi, mat::mul(F, B, P));
    Matrix AB = mat::mul(F, A2, B2);
    Elem z = F.zeta(), z2 = F.zeta2();
    q.C = mat::add(mat::add(mat::scale(F, A2, z), mat::scale(F, B2, z2)), AB);
    q.D = mat::add(mat::add(A2, mat::scale(F, B2, z2)), mat::scale(F, AB, z));
    check_quiver_relations(F, q);
    return q;
}

GroupRep restrict_to_H(const GroupRep& g) {
    GroupRep h;
    h.side = Side::H;
    h.sigma = g.sigma;
    h.tau = g.tau;
    return h;
}

GroupRep induce_to_G(const Field& F, const GroupRep& h) {
    if (h.side != Side::H) throw MathError("induction expects a kH-module");
    int d = h.dim();
    Matrix st = mat::mul(F, h.sigma, h.tau);
    GroupRep g;
    g.side = Side::G;
    g.sigma = mat::block_diag({h.sigma, st, h.tau});
    g.tau = mat::block_diag({h.tau, h.sigma, st});
    g.rho = Matrix(3 * d, 3 * d);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < d; ++i) g.rho(((c + 1) % 3) * d + i, c * d + i) = 1;
    return g;
}

GroupRep direct_sum(const std::vector<GroupRep>& parts) {
    GroupRep g;
    if (parts.empty()) return g;
    g.side = parts[0].side;
    std::vector<Matrix> s, t, r;
    for (const auto& p : parts) {
        if (p.side != g.side) throw MathError("direct sum of modules over different groups");
        s.push_back(p.sigma);
        t.push_back(p.tau);
        r.push_back(p.rho);
    }
    g.sigma = mat::block_diag(s);
    g.tau = mat::block_diag(t);
    if (g.side == Side::G) g.rho = mat::block_diag(r);
    return g;
}

GroupRep conjugate(const Field& F, const GroupRep& g, const Matrix& P) {
    Matrix Pi = mat::inverse(F, P);
    auto conj = [&](const Matrix& M) { return mat::mul(F, Pi, mat::mul(F, M, P)); };
    GroupRep out;
    out.side = g.side;
    out.sigma = conj(g.sigma);
    out.tau = conj(g.tau);
    if (g.side == Side::G) out.rho = conj(g.rho);
    return out;
}

GroupRep twist_rep(const Field& F, const GroupRep& g) {
    GroupRep out = g;
    out.tau = mat::mul(F, g.sigma, g.tau);
    if (g.side == Side::G) out.rho = mat::mul(F, g.rho, g.rho);
    return out;
}

Letter pattern_letter(int pattern, int j) {
    bool even = j % 2 == 0;
    switch (pattern) {
        case 0: return even ? Letter{1, true} : Letter{0, false};
        case 1: return even ? Letter{0, false} : Letter{1, true};
        default: return even ? Letter{0, true} : Letter{1, false};
    }
}

Word pattern_word(int pattern, int length) {
    Word w;
    for (int j = 0; j < length; ++j) w.push_back(pattern_letter(pattern, j));
    return w;
}

Word band_word(Side side) {
    Word w;
    int reps = side == Side::G ? 3 : 1;
    for (int k = 0; k < reps; ++k) {
        w.push_back({1, false});
        w.push_back({0, true});
    }
    return w;
}

ZooWord zoo_word(const Label& l) {
    ZooWord z;
    bool G = l.side == Side::G;
    switch (l.kind) {
        case Label::Simple:
            z.pattern = 1;
            z.v1 = G ? l.i : 0;
            break;
        case Label::OddString:
            z.pattern = l.x == 1 ? 0 : 1;
            z.v1 = G ? mod3(l.x == 1 ? l.i + 1 : l.i) : 0;
            z.length = 2 * l.n;
            break;
        case Label::EvenString:
            if (G || l.param.inf || l.param.v == 0) {
                bool inf = l.param.inf;
                z.pattern = inf ? 0 : 2;
                z.v1 = G ? mod3(inf ? l.i + 1 : l.i + 2) : 0;
                z.length = 2 * l.n - 1;
            } else {
                z.band = true;
                z.n = l.n;
                z.param = l.param.v;
            }
            break;
        case Label::Band:
            z.band = true;
            z.n = l.n;
            z.param = l.param.v;
            break;
    }
    return z;
}

bool string_label(Side side, int pattern, int v1, int length, Label& out) {
    bool G = side == Side::G;
    int n = (length + 1) / 2;
    if (pattern == 0) {
        if (length == 0) return false;
        int i = v1 - 1;
        if (length % 2 == 0)
            out = G ? Label::g_odd(length / 2, 1, i) : Label::h_odd(length / 2, 1);
        else
            out = G ? Label::g_even(n, Proj::infinity(), i) : Label::h_even(n, Proj::infinity());
        return true;
    }
    if (pattern == 1) {
        if (length % 2) return false;
        if (length == 0)
            out = G ? Label::g_simple(v1) : Label::k();
        else
            out = G ? Label::g_odd(length / 2, 2, v1) : Label::h_odd(length / 2, 2);
        return true;
    }
    if (length % 2 == 0) return false;
    out = G ? Label::g_even(n, Proj::at(0), v1 - 2) : Label::h_even(n, Proj::at(0));
    return true;
}

QRep label_qrep(const Field& F, const Label& l) {
    ZooWord z = zoo_word(l);
    if (z.band) return band_module_matrices(F, l.side, band_word(l.side), 0, z.n, z.param);
    return string_module_matrices(l.side, pattern_word(z.pattern, z.length), z.v1);
}

GroupRep label_rep(const Field& F, const Label& l) { return kG_group_matrices(F, label_qrep(F, l)); }

GroupRep decomposition_rep(const Field& F, const Decomposition& d) {
    std::vector<GroupRep> parts;
    for (const auto& [l, m] : d.entries) {
        GroupRep r = label_rep(F, l);
        for (long k = 0; k < m; ++k) parts.push_back(r);
    }
    if (parts.empty()) {
        GroupRep g;
        g.side = d.side;
        return g;
    }
    return direct_sum(parts);
}

Decomposition induce_restrict_label(const Field& F, const Label& l, Direction dir) {
    Decomposition out;
    if (dir == Direction::Restrict) {
        if (l.side != Side::G) throw MathError("restriction expects a kG label");
        out.side = Side::H;
        switch (l.kind) {
            case Label::Simple: out.add(Label::k(), 1); break;
            case Label::OddString: out.add(Label::h_odd(l.n, l.x), 1); break;
            case Label::EvenString: out.add(Label::h_even(l.n, lambda_of_phi(F, l.param)), 1); break;
            case Label::Band: {
                auto roots = F.cube_roots(l.param.v);
                if (roots.empty())
                    throw MathError("band parameter " + l.param.str() + " has no cube root in the field");
                for (int e = 0; e < 3; ++e)
                    out.add(Label::h_even(l.n, lambda_of_phi(F, Proj::at(F.mul(roots[0], F.zeta_pow(e))))), 1);
                break;
            }
        }
        return out;
    }
    if (l.side != Side::H) throw MathError("induction expects a kH label");
    out.side = Side::G;
    switch (l.kind) {
        case Label::Simple:
            for (int i = 0; i < 3; ++i) out.add(Label::g_simple(i), 1);
            break;
        case Label::OddString:
            for (int i = 0; i < 3; ++i) out.add(Label::g_odd(l.n, l.x, i), 1);
            break;
        default: {
            Proj phi = phi_of_lambda(F, l.param);
            if (phi.inf || phi.v == 0) {
                for (int i = 0; i < 3; ++i) out.add(Label::g_even(l.n, phi, i), 1);
            } else {
                out.add(Label::g_band(l.n, F.pow(phi.v, 3)), 1);
            }
            break;
        }
    }
    return out;
}

}  // namespace a4diff
