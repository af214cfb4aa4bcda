#include "a4diff/repbuilder.hpp"

#include <climits>

namespace a4diff {

namespace {

// A radical-length-two kH-module on the basis of one branch point: families 1, 2, 3 in
// ascending index. A and B kill family 1, which contains the radical.
struct LocalModule {
    Matrix A, B;  // sigma - 1, tau - 1
    std::vector<int> socle, top;
    std::vector<int> socle_index;  // index i of f_{y,1,i} at each socle position
    std::vector<BasisLabel> labels;
};

std::string point_name(const RamData& data, const PointRef& ref) {
    if (ref.special) return point_at(data, ref).place.inf ? "inf" : "0";
    return "y" + std::to_string(ref.index + 1) + std::string(ref.point, '\'');
}

LocalModule local_module(const RamData& data, const PointRef& ref, int lo, int cap, std::vector<std::string>& notes) {
    const BranchPoint& bp = point_at(data, ref);
    MuNu mn = mu_nu(data, ref);
    int hi[4] = {0, std::min(cap, mn.mu3 + mn.nu + mn.k), std::min(cap, mn.mu1 + mn.nu + mn.k),
                 std::min(cap, mn.mu2 + mn.k)};
    int count[4] = {0, 0, 0, 0}, start[4] = {0, 0, 0, 0};
    LocalModule lm;
    std::string name = point_name(data, ref);
    for (int f = 1; f <= 3; ++f) {
        count[f] = std::max(0, hi[f] - lo + 1);
        start[f] = f == 1 ? 0 : start[f - 1] + count[f - 1];
        for (int i = lo; i <= hi[f]; ++i) lm.labels.push_back({ref, name, f, i});
    }
    int d = start[3] + count[3];
    auto pos = [&](int f, int i) { return start[f] + i - lo; };
    Matrix S(d, d), T(d, d);
    for (int i = lo; i <= hi[2]; ++i) T(pos(1, i), pos(2, i)) = 1;
    int tail = mn.mu1 + mn.k;  // family-3 rows above this index carry the theta sum
    for (int i = lo; i <= hi[3]; ++i) {
        S(pos(1, i), pos(3, i)) = 1;
        if (i <= tail) continue;
        int terms = i - tail;
        if (terms > int(bp.theta.size())) throw MathError("theta range exceeded");
        for (int t = 0; t < terms; ++t) {
            int j = i + mn.nu - t;
            if (j < lo || j > hi[1]) {
                if (bp.theta[t] != 0)
                    notes.push_back("f_{" + name + ",1," + std::to_string(j) + "} outside family 1; term dropped");
                continue;
            }
            T(pos(1, j), pos(3, i)) ^= bp.theta[t];
        }
    }
    switch (bp.min_index) {
        case 1:
            lm.A = T;
            lm.B = S;
            break;
        case 2:
            lm.A = mat::add(S, T);
            lm.B = T;
            break;
        default:
            lm.A = S;
            lm.B = T;
    }
    for (int i = lo; i <= hi[1]; ++i) {
        lm.socle.push_back(pos(1, i));
        lm.socle_index.push_back(i);
    }
    for (int p = start[2]; p < d; ++p) lm.top.push_back(p);
    return lm;
}

// Solves X Q = Y for Q, X of full column rank; false if inconsistent.
bool solve_right(const Field& F, const Matrix& X, const Matrix& Y, Matrix& Q) {
    int t = X.cols;
    Matrix W(X.rows, t + Y.cols);
    mat::set_block(W, 0, 0, X);
    mat::set_block(W, 0, t, Y);
    auto piv = mat::rref(F, W);
    if (int(piv.size()) != t) return false;
    for (int i = 0; i < t; ++i)
        if (piv[i] != i) return false;
    Q = mat::block(W, 0, t, t, Y.cols);
    return true;
}

// rho with the given action on the socle and zero top-to-socle part, so that
// rho A = B rho and rho B = (A + B) rho.
Matrix extend_rho(const Field& F, const LocalModule& lm, const Matrix& socle_rho) {
    int s = int(lm.socle.size()), t = int(lm.top.size());
    Matrix a(s, t), b(s, t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            a(i, j) = lm.A(lm.socle[i], lm.top[j]);
            b(i, j) = lm.B(lm.socle[i], lm.top[j]);
        }
    Matrix Q;
    if (!solve_right(F, mat::vstack(b, mat::add(a, b)),
                     mat::vstack(mat::mul(F, socle_rho, a), mat::mul(F, socle_rho, b)), Q))
        throw MathError("unsupported configuration: rho does not extend from the socle");
    int d = lm.A.rows;
    Matrix rho(d, d);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) rho(lm.socle[i], lm.socle[j]) = socle_rho(i, j);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) rho(lm.top[i], lm.top[j]) = Q(i, j);
    return rho;
}

GroupRep h_rep(const LocalModule& lm) {
    int d = lm.A.rows;
    GroupRep h;
    h.side = Side::H;
    h.sigma = mat::add(Matrix::identity(d), lm.A);
    h.tau = mat::add(Matrix::identity(d), lm.B);
    return h;
}

void fill_theta(const Field& F, const BranchPoint& bp, const MuNu& mn, BlockPlan& plan) {
    plan.n = mn.mu2 - mn.mu1;
    plan.delta = bp.delta;
    plan.lambda = bp.lambda;
    int n = plan.n;
    plan.theta = Matrix(n, n);
    if (bp.delta >= 1 && bp.delta < n)
        for (int r = 0; r < n; ++r)
            for (int c = r + bp.delta; c < n; ++c) {
                if (c - r >= int(bp.theta.size())) throw MathError("theta range exceeded");
                plan.theta(r, c) = bp.theta[c - r];
            }
    Matrix I1 = mat::add(Matrix::identity(n), plan.theta);
    if (bp.lambda == Proj::at(F.zeta())) {
        plan.theta1 = I1;
        plan.theta2 = plan.theta;
    } else if (bp.lambda == Proj::at(F.zeta2())) {
        plan.theta1 = plan.theta;
        plan.theta2 = I1;
    }
}

}  // namespace

GlobalRep build_global_rep(const RamData& data) {
    if (!data.field) throw MathError("unsupported configuration: missing field");
    const Field& F = *data.field;
    GlobalRep out;
    std::vector<GroupRep> parts;
    int offset = 0;
    auto add_block = [&](GroupRep g, BlockPlan plan, const std::vector<BasisLabel>& labels) {
        plan.offset = offset;
        plan.dim = g.dim();
        offset += g.dim();
        parts.push_back(std::move(g));
        out.block_plan.push_back(std::move(plan));
        out.labels.insert(out.labels.end(), labels.begin(), labels.end());
    };

    for (int s = 0; s < int(data.special.size()); ++s) {
        PointRef ref{true, s, 0};
        const BranchPoint& bp = point_at(data, ref);
        MuNu mn = mu_nu(data, ref);
        BlockPlan plan;
        plan.point = point_name(data, ref);
        plan.kind = "special";
        LocalModule lm = local_module(data, ref, mn.a + mn.b, INT_MAX, plan.notes);
        int ns = int(lm.socle.size());
        Matrix D(ns, ns);
        for (int i = 0; i < ns; ++i) D(i, i) = F.zeta_pow(1 - long(bp.epsilon) * lm.socle_index[i]);
        GroupRep g = h_rep(lm);
        g.side = Side::G;
        g.rho = extend_rho(F, lm, D);
        fill_theta(F, bp, mn, plan);
        add_block(std::move(g), std::move(plan), lm.labels);
    }

    for (int o = 0; o < int(data.orbits.size()); ++o) {
        PointRef ref{false, o, 0};
        const BranchPoint& bp = point_at(data, ref);
        MuNu mn = mu_nu(data, ref);
        BlockPlan plan;
        plan.point = point_name(data, ref);
        plan.kind = "orbit";
        LocalModule lm = local_module(data, ref, mn.a, INT_MAX, plan.notes);
        // rho maps block c to block c + 1, and rho^-1 U_y = U_{y'}.
        std::vector<BasisLabel> labels;
        const int point_of_block[3] = {0, 2, 1};
        for (int c = 0; c < 3; ++c)
            for (BasisLabel l : lm.labels) {
                l.ref.point = point_of_block[c];
                l.point = point_name(data, l.ref);
                labels.push_back(l);
            }
        fill_theta(F, bp, mn, plan);
        add_block(induce_to_G(F, h_rep(lm)), std::move(plan), labels);
    }

    if (data.r == 0 && !data.orbits.empty()) {
        BlockPlan plan;
        plan.point = "y1'+y1''";
        plan.kind = "dagger";
        LocalModule l1 = local_module(data, {false, 0, 1}, 1, 1, plan.notes);
        LocalModule l2 = local_module(data, {false, 0, 2}, 1, 1, plan.notes);
        LocalModule lm;
        int d1 = l1.A.rows;
        lm.A = mat::block_diag({l1.A, l2.A});
        lm.B = mat::block_diag({l1.B, l2.B});
        lm.socle = {l1.socle.at(0), d1 + l2.socle.at(0)};
        for (int p : l1.top) lm.top.push_back(p);
        for (int p : l2.top) lm.top.push_back(d1 + p);
        lm.labels = l1.labels;
        lm.labels.insert(lm.labels.end(), l2.labels.begin(), l2.labels.end());
        // rho f' = f' + zeta f'', rho f'' = zeta^2 f' on the socle.
        Matrix D(2, 2);
        D(0, 0) = 1;
        D(1, 0) = F.zeta();
        D(0, 1) = F.zeta2();
        GroupRep g = h_rep(lm);
        g.side = Side::G;
        g.rho = extend_rho(F, lm, D);
        add_block(std::move(g), std::move(plan), lm.labels);
    }

    out.rep = direct_sum(parts);
    out.rep.side = Side::G;
    if (offset != data.genus)
        throw MathError("unsupported configuration: basis has " + std::to_string(offset) + " elements, genus is " +
                        std::to_string(data.genus));
    if (data.inverted) out.rep = twist_rep(F, out.rep);
    validate_group_rep(F, out.rep);
    return out;
}

}  // namespace a4diff
