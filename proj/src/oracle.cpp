#include "a4diff/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "a4diff/poly.hpp"

namespace a4diff {

namespace sub {

Matrix image(const Field& F, const Matrix& S, const Matrix& mapT) {
    Matrix R = mat::mul(F, S, mapT);
    mat::rref(F, R);
    return R;
}

Matrix pull(const Field& F, const Matrix& S, const Matrix& mapT, const Matrix& T) {
    int dv = mapT.cols, du = S.cols;
    Matrix W(T.rows + S.rows, dv + du);
    for (int i = 0; i < T.rows; ++i) std::copy(T.row(i), T.row(i) + dv, W.row(i));
    Matrix img = mat::mul(F, S, mapT);
    for (int i = 0; i < S.rows; ++i) {
        std::copy(img.row(i), img.row(i) + dv, W.row(T.rows + i));
        std::copy(S.row(i), S.row(i) + du, W.row(T.rows + i) + dv);
    }
    auto piv = mat::rref(F, W);
    int first = int(std::lower_bound(piv.begin(), piv.end(), dv) - piv.begin());
    return mat::block(W, first, dv, W.rows - first, du);
}

Matrix intersect(const Field& F, const Matrix& S, const Matrix& T) {
    return pull(F, S, Matrix::identity(S.cols), T);
}

}  // namespace sub

HomTarget::HomTarget(const Field& F, const QRep& q) : F_(&F), side_(q.side), dim_(q.dim()) {
    int nv = num_vertices(side_);
    idx_.resize(nv);
    for (int i = 0; i < dim_; ++i) idx_[q.vertex[i]].push_back(i);
    Matrix blocks[2][3];
    for (int a = 0; a < 2; ++a) {
        const Matrix& M = a == 0 ? q.C : q.D;
        for (int v = 0; v < nv; ++v) {
            int u = arrow_target(side_, a, v);
            Matrix B(vdim(u), vdim(v));
            for (int r = 0; r < B.rows; ++r)
                for (int c = 0; c < B.cols; ++c) B(r, c) = M(idx_[u][r], idx_[v][c]);
            blocks[a][v] = B;
            arrT_[a][v] = mat::transpose(B);
        }
    }
    for (int v = 0; v < nv; ++v)
        for (int mask = 0; mask < 4; ++mask) {
            Matrix stack(0, vdim(v));
            for (int a = 0; a < 2; ++a)
                if (!(mask >> a & 1)) stack = mat::vstack(stack, blocks[a][v]);
            Matrix K = mat::nullspace(F, stack);
            mat::rref(F, K);
            kill_[v][mask] = K;
        }
}

namespace {

Matrix aug(int p, const Matrix& X) {
    if (p == 0) return X;
    return mat::block_diag({Matrix::identity(p), X});
}

// Arrows leaving b_j that hit a neighbour: the previous letter if direct, the next if inverse.
int out_mask(const Letter* prev, const Letter* cur) {
    int mask = 0;
    if (prev && !prev->inverse) mask |= 1 << prev->arrow;
    if (cur && cur->inverse) mask |= 1 << cur->arrow;
    return mask;
}

// Possible values of the last basis vector image (S), plus the dimension K of the solutions
// vanishing there. With p > 0 the first p coordinates carry a passive copy of an earlier value.
struct State {
    Matrix S;
    long K = 0;
    int v = 0;
};

void step(const HomTarget& M, State& st, Letter l, int mask_next, int p) {
    const Field& F = M.field();
    int v2 = next_vertex(M.side(), st.v, l);
    Matrix killN = aug(p, M.kill(v2, mask_next));
    if (!l.inverse) {
        st.S = sub::pull(F, killN, aug(p, M.arrowT(l.arrow, v2)), st.S);
    } else {
        Matrix mapT = aug(p, M.arrowT(l.arrow, st.v));
        Matrix T = sub::pull(F, st.S, mapT, killN);
        Matrix img = sub::image(F, T, mapT);
        st.K += T.rows - img.rows;
        st.S = img;
    }
    st.v = v2;
}

long end_hom(const HomTarget& M, const State& st, Letter next) {
    if (!next.inverse) return st.K + st.S.rows;
    const Matrix& aT = M.arrowT(next.arrow, st.v);
    return st.K + sub::pull(M.field(), st.S, aT, Matrix(0, aT.cols)).rows;
}

}  // namespace

std::vector<long> prefix_homs(const HomTarget& M, int pattern, int v1, int maxlen) {
    std::vector<long> homs(maxlen + 1);
    State st;
    st.v = M.side() == Side::G ? ((v1 % 3) + 3) % 3 : 0;
    Letter first = pattern_letter(pattern, 0);
    st.S = M.kill(st.v, out_mask(nullptr, &first));
    homs[0] = end_hom(M, st, first);
    for (int j = 0; j < maxlen; ++j) {
        Letter l = pattern_letter(pattern, j), next = pattern_letter(pattern, j + 1);
        step(M, st, l, out_mask(&l, &next), 0);
        homs[j + 1] = end_hom(M, st, next);
    }
    return homs;
}

std::vector<long> band_homs(const HomTarget& M, const Word& w, int v1, Elem mu, int nmax) {
    const Field& F = M.field();
    validate_band(M.side(), w, v1);
    int l = int(w.size());
    std::vector<int> verts(l + 1);
    verts[0] = M.side() == Side::G ? ((v1 % 3) + 3) % 3 : 0;
    for (int j = 0; j < l; ++j) verts[j + 1] = next_vertex(M.side(), verts[j], w[j]);
    auto mask_at = [&](int j) { return out_mask(&w[(j - 1 + l) % l], &w[j % l]); };

    // Relation W between the images of b_1 and b_0 along the path b_1, ..., b_{l-1}, b_0.
    int p = M.vdim(verts[1]);
    const Matrix& K1 = M.kill(verts[1], mask_at(1));
    State st;
    st.v = verts[1];
    st.S = Matrix(K1.rows, 2 * p);
    for (int i = 0; i < K1.rows; ++i) {
        std::copy(K1.row(i), K1.row(i) + p, st.S.row(i));
        std::copy(K1.row(i), K1.row(i) + p, st.S.row(i) + p);
    }
    for (int j = 1; j < l; ++j) step(M, st, w[j], mask_at(j + 1), p);
    const Matrix& W = st.S;
    int d0 = M.vdim(verts[0]);
    Matrix X = mat::block(W, 0, 0, W.rows, p), Y = mat::block(W, 0, p, W.rows, d0);

    // First letter alpha b_{1,k} = mu b_{0,k} + b_{0,k-1}: coordinates c_k of W satisfy
    // c_k L = c_{k-1} Y with L = X alpha^T + mu Y.
    Matrix L = mat::add(mat::mul(F, X, M.arrowT(w[0].arrow, verts[1])), mat::scale(F, Y, mu));
    int wd = W.rows;
    Matrix full = Matrix::identity(wd);
    Matrix kerL = sub::pull(F, full, L, Matrix(0, d0));
    Matrix imL = sub::image(F, full, L);

    std::vector<long> homs(nmax + 1, 0);
    if (nmax < 1) return homs;
    Matrix P = kerL;
    long Kd = 0, total = kerL.rows;
    homs[1] = total + st.K;
    for (int k = 2; k <= nmax; ++k) {
        Matrix PQ = sub::pull(F, P, Y, imL);
        total = Kd + PQ.rows + kerL.rows;
        Matrix next = sub::pull(F, full, L, sub::image(F, PQ, Y));
        Kd = total - next.rows;
        homs[k] = total + k * st.K;
        if (next == P) {
            // Fixed point: from here on every step adds the same amount.
            for (int j = k + 1; j <= nmax; ++j) homs[j] = homs[j - 1] + (homs[k] - homs[k - 1]);
            break;
        }
        P = next;
    }
    return homs;
}

long hom_dim_label(const HomTarget& M, const Label& X) {
    if (X.side != M.side()) throw MathError("hom between modules over different groups");
    ZooWord z = zoo_word(X);
    if (z.band) return band_homs(M, band_word(X.side), 0, z.param, z.n)[z.n];
    return prefix_homs(M, z.pattern, z.v1, z.length)[z.length];
}

long hom_dim_qrep(const Field& F, const QRep& X, const QRep& Y) {
    if (X.side != Y.side) throw MathError("hom between modules over different groups");
    int dx = X.dim(), dy = Y.dim();
    std::vector<int> var(std::size_t(dy) * dx, -1);
    int nvar = 0;
    for (int r = 0; r < dy; ++r)
        for (int c = 0; c < dx; ++c)
            if (Y.vertex[r] == X.vertex[c]) var[r * dx + c] = nvar++;
    if (nvar == 0) return 0;
    // Y_a T = T X_a for both arrows.
    Matrix E(2 * dy * dx, nvar);
    int row = 0;
    for (int a = 0; a < 2; ++a) {
        const Matrix& YA = a == 0 ? Y.C : Y.D;
        const Matrix& XA = a == 0 ? X.C : X.D;
        for (int r = 0; r < dy; ++r)
            for (int c = 0; c < dx; ++c, ++row) {
                for (int k = 0; k < dy; ++k)
                    if (YA(r, k) && var[k * dx + c] >= 0) E(row, var[k * dx + c]) ^= YA(r, k);
                for (int k = 0; k < dx; ++k)
                    if (XA(k, c) && var[r * dx + k] >= 0) E(row, var[r * dx + k]) ^= XA(k, c);
            }
    }
    return nvar - mat::rank(F, E);
}

long hom_dim_group_naive(const Field& F, const GroupRep& X, const GroupRep& Y) {
    if (X.side != Y.side) throw MathError("hom between modules over different groups");
    int dx = X.dim(), dy = Y.dim();
    if (dx == 0 || dy == 0) return 0;
    std::vector<std::pair<const Matrix*, const Matrix*>> gens{{&X.sigma, &Y.sigma}, {&X.tau, &Y.tau}};
    if (X.side == Side::G) gens.push_back({&X.rho, &Y.rho});
    int nvar = dy * dx;
    Matrix E(int(gens.size()) * nvar, nvar);
    int row = 0;
    for (auto [gx, gy] : gens)
        for (int r = 0; r < dy; ++r)
            for (int c = 0; c < dx; ++c, ++row) {
                for (int k = 0; k < dy; ++k) E(row, k * dx + c) ^= (*gy)(r, k);
                for (int k = 0; k < dx; ++k) E(row, r * dx + k) ^= (*gx)(k, c);
            }
    return nvar - mat::rank(F, E);
}

long hom_dim(const Field& F, const GroupRep& X, const GroupRep& Y) {
    return hom_dim_qrep(F, to_qrep(F, X), to_qrep(F, Y));
}

std::vector<Elem> band_parameters(const Field& F, const QRep& q) {
    int d = q.dim();
    std::vector<Elem> out;
    if (d == 0) return out;
    // On G only the arrow leaving vertex 0 is scaled, so that a band B_{6n,mu} drops rank exactly
    // at t = mu (scaling every C arrow would give t^3 = mu, missing non-cubes).
    auto pencil = [&](Elem t) {
        Matrix P = q.D;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (q.C(r, c)) P(r, c) ^= (q.side == Side::H || q.vertex[c] == 0) ? F.mul(t, q.C(r, c)) : q.C(r, c);
        return P;
    };
    std::uint64_t nonzero = F.size() - 1;

    int r = 0;
    Elem t0 = 1;
    std::uint64_t samples = std::min<std::uint64_t>(nonzero, std::uint64_t(d) + 1);
    for (std::uint64_t t = 1; t <= samples; ++t) {
        int rk = mat::rank(F, pencil(Elem(t)));
        if (rk > r) {
            r = rk;
            t0 = Elem(t);
        }
    }
    if (r == 0) return out;

    std::vector<Elem> ts;
    if (nonzero <= std::uint64_t(2 * r + 2)) {
        for (std::uint64_t t = 1; t <= nonzero; ++t) ts.push_back(Elem(t));
    } else {
        // Determinant of a maximal nonsingular minor at t0, as a polynomial in t.
        Matrix M0 = pencil(t0), R0 = M0;
        auto cols = mat::rref(F, R0);
        Matrix sel(d, r);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < r; ++j) sel(i, j) = M0(i, cols[j]);
        Matrix selT = mat::transpose(sel);
        auto rows = mat::rref(F, selT);
        std::vector<Elem> xs, ys;
        for (int k = 0; k <= r; ++k) {
            Elem t = Elem(k);
            Matrix P = pencil(t), minor(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) minor(i, j) = P(rows[i], cols[j]);
            xs.push_back(t);
            ys.push_back(mat::det(F, minor));
        }
        Poly det = poly::interpolate(F, xs, ys);
        poly::trim(det);
        for (Elem t : poly::roots(F, det))
            if (t != 0) ts.push_back(t);
    }
    std::set<Elem> found;
    for (Elem t : ts)
        if (mat::rank(F, pencil(t)) < r) found.insert(t);
    return {found.begin(), found.end()};
}

namespace {

using Key = std::tuple<std::uint64_t, int, int, int, int, int, bool, Elem>;

// End dimensions depend only on the combinatorial shape (for bands: not on the parameter).
Key end_key(const Label& l, std::uint64_t modulus) {
    bool band = zoo_word(l).band;
    Proj p = band ? Proj::at(0) : l.param;
    return {modulus, int(l.side), int(l.kind), l.n, l.x, l.i, p.inf, p.v};
}

long end_dim(const Field& F, const Label& l) {
    static std::mutex mu;
    static std::map<Key, long> cache;
    Key key = end_key(l, F.modulus());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ZooWord z = zoo_word(l);
    long v = z.band ? hom_dim_label(HomTarget(F, label_qrep(F, l)), l)
                    : string_homs_into(l, z.pattern, z.v1, z.length)[z.length];
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = v;
    return v;
}

struct CandidateSet {
    std::vector<Label> labels;
    std::vector<ZooWord> words;
};

CandidateSet candidates(const Field& F, Side side, int N, const std::vector<Elem>& params) {
    CandidateSet cs;
    int nv = num_vertices(side);
    for (int p = 0; p < 3; ++p)
        for (int v = 0; v < nv; ++v)
            for (int len = 0; len < N; ++len) {
                Label l;
                if (!string_label(side, p, v, len, l)) continue;
                cs.labels.push_back(l);
                cs.words.push_back(zoo_word(l));
            }
    int blen = int(band_word(side).size());
    for (Elem mu : params)
        for (int n = 1; n * blen <= N; ++n) {
            Label l = side == Side::G ? Label::g_band(n, mu) : Label::h_even(n, Proj::at(mu));
            cs.labels.push_back(l);
            cs.words.push_back(zoo_word(l));
        }
    (void)F;
    return cs;
}

// dim Hom(candidate, M) for all candidates, grouped into one pass per pattern and band parameter.
std::vector<long> profile(const HomTarget& M, const CandidateSet& cs) {
    std::map<std::pair<int, int>, int> strings;
    std::map<Elem, int> bands;
    for (const ZooWord& z : cs.words) {
        if (z.band) {
            int& m = bands[z.param];
            m = std::max(m, z.n);
        } else {
            int& m = strings[{z.pattern, z.v1}];
            m = std::max(m, z.length);
        }
    }
    std::map<std::pair<int, int>, std::vector<long>> shom;
    std::map<Elem, std::vector<long>> bhom;
    for (auto [pv, len] : strings) shom[pv] = prefix_homs(M, pv.first, pv.second, len);
    Word bw = band_word(M.side());
    for (auto [mu, n] : bands) bhom[mu] = band_homs(M, bw, 0, mu, n);
    std::vector<long> out;
    for (const ZooWord& z : cs.words)
        out.push_back(z.band ? bhom[z.param][z.n] : shom[{z.pattern, z.v1}][z.length]);
    return out;
}

// Counting graph maps: dim Hom(M(C), M(D)) for strings C, D is the number of pairs (factor
// occurrence of E in C, substring occurrence of E or E^-1 in D). Strings here alternate both in
// arrow and in direction, so E is determined by its length, first letter and start vertex.
struct StringKeys {
    std::vector<long> count;  // [len][first letter][vertex]
    int maxlen = 0;
    long& at(int len, int key, int v) { return count[(std::size_t(len) * 4 + key) * 3 + v]; }
    long get(int len, int key, int v) const {
        return len > maxlen ? 0 : count[(std::size_t(len) * 4 + key) * 3 + v];
    }
};

int letter_key(const Letter& l) { return l.arrow * 2 + (l.inverse ? 1 : 0); }

StringKeys substring_keys(Side side, const Word& w, int v1) {
    StringKeys sk;
    int L = int(w.size());
    sk.maxlen = L;
    sk.count.assign(std::size_t(L + 1) * 12, 0);
    for (int pass = 0; pass < 2; ++pass) {
        Word u = w;
        int start = v1;
        if (pass == 1) {
            // The inverse walk.
            int v = v1;
            for (const Letter& l : w) v = next_vertex(side, v, l);
            start = v;
            u.clear();
            for (int j = L - 1; j >= 0; --j) u.push_back({w[j].arrow, !w[j].inverse});
        }
        std::vector<int> vert(L + 1);
        vert[0] = side == Side::G ? ((start % 3) + 3) % 3 : 0;
        for (int j = 0; j < L; ++j) vert[j + 1] = next_vertex(side, vert[j], u[j]);
        for (int s = 0; s <= L; ++s) {
            if (s > 0 && !u[s - 1].inverse) continue;
            for (int e = s; e <= L; ++e) {
                if (e < L && u[e].inverse) continue;
                if (pass == 1 && e == s) continue;  // trivial substrings counted once
                sk.at(e - s, e > s ? letter_key(u[s]) : 0, vert[s]) += 1;
            }
        }
    }
    return sk;
}

// Substring occurrences in the periodic band word (both readings) up to shift by the period,
// lengths up to maxlen.
StringKeys band_keys(Side side, const Word& w, int v1, int maxlen) {
    StringKeys sk;
    sk.maxlen = maxlen;
    sk.count.assign(std::size_t(maxlen + 1) * 12, 0);
    int l = int(w.size());
    for (int pass = 0; pass < 2; ++pass) {
        Word u = w;
        int start = v1;
        if (pass == 1) {
            u.clear();
            for (int j = l - 1; j >= 0; --j) u.push_back({w[j].arrow, !w[j].inverse});
        }
        std::vector<int> vert(l);
        vert[0] = side == Side::G ? ((start % 3) + 3) % 3 : 0;
        for (int j = 0; j + 1 < l; ++j) vert[j + 1] = next_vertex(side, vert[j], u[j]);
        if (pass == 1) std::reverse(vert.begin(), vert.end());
        for (int s = 0; s < l; ++s) {
            if (!u[(s - 1 + l) % l].inverse) continue;
            for (int len = 0; len <= maxlen; ++len) {
                if (u[(s + len) % l].inverse) continue;
                if (pass == 1 && len == 0) continue;
                int vs = pass == 0 ? vert[s] : vert[(s - 1 + l) % l];
                sk.at(len, len > 0 ? letter_key(u[s]) : 0, vs) += 1;
            }
        }
    }
    return sk;
}

// dim Hom(prefix of length L of the pattern at v1, M(target)) for L = 0..maxlen.
std::vector<long> string_homs(const StringKeys& target, Side side, int pattern, int v1, int maxlen) {
    std::vector<int> vert(maxlen + 1);
    vert[0] = side == Side::G ? ((v1 % 3) + 3) % 3 : 0;
    for (int j = 0; j < maxlen; ++j) vert[j + 1] = next_vertex(side, vert[j], pattern_letter(pattern, j));
    std::vector<long> homs(maxlen + 1);
    long closed = 0;  // intervals ending before L at an inverse letter
    for (int e = 0; e <= maxlen; ++e) {
        long S = 0;
        for (int s = 0; s <= e; ++s) {
            if (s > 0 && pattern_letter(pattern, s - 1).inverse) continue;
            S += target.get(e - s, e > s ? letter_key(pattern_letter(pattern, s)) : 0, vert[s]);
        }
        homs[e] = closed + S;
        if (pattern_letter(pattern, e).inverse) closed += S;
    }
    return homs;
}

// dim Hom(band_n, M(target)) = n * #(factor occurrences of E in the periodic band word, up to
// shift by the period, paired with substring occurrences of E in the target).
std::vector<long> band_homs_string(const StringKeys& target, Side side, const Word& w, int v1, int nmax) {
    int l = int(w.size());
    std::vector<int> vert(l);
    vert[0] = side == Side::G ? ((v1 % 3) + 3) % 3 : 0;
    for (int j = 0; j + 1 < l; ++j) vert[j + 1] = next_vertex(side, vert[j], w[j]);
    long count = 0;
    for (int s = 0; s < l; ++s) {
        if (w[(s - 1 + l) % l].inverse) continue;
        for (int len = 0; len <= target.maxlen; ++len) {
            if (!w[(s + len) % l].inverse) continue;
            count += target.get(len, len > 0 ? letter_key(w[s]) : 0, vert[s]);
        }
    }
    std::vector<long> homs(nmax + 1);
    for (int k = 0; k <= nmax; ++k) homs[k] = k * count;
    return homs;
}

}  // namespace

std::vector<long> string_homs_into_band(const Label& target, int pattern, int v1, int maxlen) {
    ZooWord z = zoo_word(target);
    if (!z.band) throw MathError("string_homs_into_band expects a band label");
    std::vector<long> h =
        string_homs(band_keys(target.side, band_word(target.side), 0, maxlen), target.side, pattern, v1, maxlen);
    for (long& x : h) x *= z.n;
    return h;
}

std::vector<long> band_homs_into(const Label& target, Side side, const Word& w, int v1, int nmax) {
    ZooWord z = zoo_word(target);
    if (z.band) throw MathError("band_homs_into expects a string label");
    return band_homs_string(substring_keys(target.side, pattern_word(z.pattern, z.length), z.v1), side, w, v1,
                            nmax);
}

std::vector<long> string_homs_into(const Label& target, int pattern, int v1, int maxlen) {
    ZooWord z = zoo_word(target);
    if (z.band) throw MathError("string_homs_into expects a string label");
    return string_homs(substring_keys(target.side, pattern_word(z.pattern, z.length), z.v1), target.side, pattern,
                       v1, maxlen);
}

namespace {

// Gram columns dim Hom(-, X) for zoo labels X, kept for the life of the process. String
// rows are stored per pattern up to a common length, band rows per parameter.
struct Column {
    int maxlen = -1;
    std::map<std::pair<int, int>, std::vector<long>> strings;
    std::map<Elem, std::vector<long>> bands;
};

std::vector<long> gram_column(const Field& F, const Label& X, const CandidateSet& cs) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, Label>, Column> cache;
    int need_len = 0;
    std::map<Elem, int> need_band;
    for (const ZooWord& z : cs.words) {
        if (z.band)
            need_band[z.param] = std::max(need_band[z.param], z.n);
        else
            need_len = std::max(need_len, z.length);
    }
    auto key = std::make_pair(F.modulus(), X);
    Column col;
    {
        std::lock_guard<std::mutex> lock(mu);
        col = cache[key];
    }
    std::unique_ptr<HomTarget> target;
    auto tgt = [&]() -> const HomTarget& {
        if (!target) target = std::make_unique<HomTarget>(F, label_qrep(F, X));
        return *target;
    };
    bool changed = false;
    if (col.maxlen < need_len) {
        int len = std::max(need_len, 2 * col.maxlen);
        int nv = num_vertices(X.side);
        col.strings.clear();
        ZooWord zx = zoo_word(X);
        StringKeys keys;
        if (!zx.band) keys = substring_keys(X.side, pattern_word(zx.pattern, zx.length), zx.v1);
        for (int p = 0; p < 3; ++p)
            for (int v = 0; v < nv; ++v)
                col.strings[{p, v}] = zx.band ? string_homs_into_band(X, p, v, len) : string_homs(keys, X.side, p, v, len);
        col.maxlen = len;
        changed = true;
    }
    Word bw = band_word(X.side);
    for (auto [mu_, n] : need_band) {
        auto it = col.bands.find(mu_);
        if (it != col.bands.end() && int(it->second.size()) > n) continue;
        col.bands[mu_] = zoo_word(X).band ? band_homs(tgt(), bw, 0, mu_, n) : band_homs_into(X, X.side, bw, 0, n);
        changed = true;
    }
    if (changed) {
        std::lock_guard<std::mutex> lock(mu);
        cache[key] = col;
    }
    std::vector<long> out;
    for (const ZooWord& z : cs.words)
        out.push_back(z.band ? col.bands[z.param][z.n] : col.strings[{z.pattern, z.v1}][z.length]);
    return out;
}

constexpr int kShortDim = 6;

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return std::uint64_t((unsigned __int128)a * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t to_mod(long v) { return v >= 0 ? std::uint64_t(v) % kPrime : kPrime - std::uint64_t(-v) % kPrime; }

// Solves gram * n = h modulo a large prime; returns 0 ok, 1 singular, 2 inconsistent.
int solve_mod(const std::vector<std::vector<long>>& gram, const std::vector<long>& h, std::vector<std::uint64_t>& x) {
    int rows = int(gram.size()), cols = rows ? int(gram[0].size()) : 0;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[i][j] = to_mod(gram[i][j]);
        a[i][cols] = to_mod(h[i]);
    }
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) return 1;
        std::swap(a[p], a[r]);
        std::uint64_t inv = powmod(a[r][c], kPrime - 2);
        for (auto& e : a[r]) e = mulmod(e, inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t f = a[i][c];
            for (int j = c; j <= cols; ++j) a[i][j] = (a[i][j] + kPrime - mulmod(f, a[r][j])) % kPrime;
        }
        piv.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (a[i][cols] != 0) return 2;
    x.assign(cols, 0);
    for (int i = 0; i < r; ++i) x[piv[i]] = a[i][cols];
    return 0;
}

}  // namespace

MultiplicitySolution decompose_rep(const Field& F, const GroupRep& M, const std::vector<Elem>& extra_params) {
    MultiplicitySolution sol;
    sol.decomposition.side = M.side;
    QRep q = to_qrep(F, M);
    int N = q.dim();
    if (N == 0) {
        sol.ok = true;
        return sol;
    }
    std::set<Elem> params;
    for (Elem e : band_parameters(F, q)) params.insert(e);
    for (Elem e : extra_params)
        if (e != 0) params.insert(e);
    if (M.side == Side::H) {
        params.insert(F.zeta());
        params.insert(F.zeta2());
    }
    CandidateSet cs = candidates(F, M.side, N, {params.begin(), params.end()});
    sol.candidates = cs.labels;

    HomTarget target(F, q);
    sol.hom_vector = profile(target, cs);
    // A summand X satisfies dim Hom(X, M) >= dim End(X) and dim Hom(Y, X) <= dim Hom(Y, M)
    // for every Y; the second test is applied with the short strings Y only.
    CandidateSet shorts;
    std::vector<long> short_h;
    for (int j = 0; j < int(cs.labels.size()); ++j)
        if (!cs.words[j].band && cs.labels[j].dim() <= kShortDim) {
            shorts.labels.push_back(cs.labels[j]);
            shorts.words.push_back(cs.words[j]);
            short_h.push_back(sol.hom_vector[j]);
        }
    for (int j = 0; j < int(cs.labels.size()); ++j) {
        if (sol.hom_vector[j] == 0 || sol.hom_vector[j] < end_dim(F, cs.labels[j])) continue;
        std::vector<long> sp;
        std::map<std::pair<int, int>, std::vector<long>> rows;
        for (const ZooWord& z : shorts.words) {
            auto& r = rows[{z.pattern, z.v1}];
            if (r.empty())
                r = cs.words[j].band ? string_homs_into_band(cs.labels[j], z.pattern, z.v1, kShortDim)
                                     : string_homs_into(cs.labels[j], z.pattern, z.v1, kShortDim);
            sp.push_back(r[z.length]);
        }
        bool fits = true;
        for (std::size_t k = 0; fits && k < sp.size(); ++k) fits = sp[k] <= short_h[k];
        if (fits) sol.unknowns.push_back(j);
    }

    int nu = int(sol.unknowns.size());
    sol.gram.assign(cs.labels.size(), std::vector<long>(nu, 0));
    for (int u = 0; u < nu; ++u) {
        const Label& X = cs.labels[sol.unknowns[u]];
        std::vector<long> col = gram_column(F, X, cs);
        for (int j = 0; j < int(col.size()); ++j) sol.gram[j][u] = col[j];
    }

    std::vector<std::uint64_t> x;
    int status = nu == 0 ? 2 : solve_mod(sol.gram, sol.hom_vector, x);
    if (status == 1) {
        sol.error = "ambiguous solution";
        return sol;
    }
    bool good = status == 0;
    if (good) {
        for (std::uint64_t v : x) {
            if (v > std::uint64_t(N)) good = false;
            sol.solution.push_back(good ? long(v) : -1);
        }
    }
    if (good) {
        long dim = 0;
        for (int u = 0; u < nu; ++u) dim += sol.solution[u] * cs.labels[sol.unknowns[u]].dim();
        good = dim == N;
        for (int j = 0; good && j < int(cs.labels.size()); ++j) {
            long s = 0;
            for (int u = 0; u < nu; ++u) s += sol.gram[j][u] * sol.solution[u];
            good = s == sol.hom_vector[j];
        }
    }
    if (!good) {
        sol.error = "no nonnegative integer solution";
        return sol;
    }
    for (int u = 0; u < nu; ++u) sol.decomposition.add(cs.labels[sol.unknowns[u]], sol.solution[u]);
    sol.ok = true;
    return sol;
}

}  // namespace a4diff
