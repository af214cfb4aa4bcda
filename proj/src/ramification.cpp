#include "a4diff/ramification.hpp"

#include <algorithm>
#include <set>

namespace a4diff {

std::vector<const BranchPoint*> RamData::all_points() const {
    std::vector<const BranchPoint*> out;
    for (const auto& bp : special) out.push_back(&bp);
    for (const auto& o : orbits)
        for (const auto& bp : o.points) out.push_back(&bp);
    return out;
}

std::string klass_name(OrbitClass k) {
    switch (k) {
        case OrbitClass::Zeta: return "zeta";
        case OrbitClass::ZetaSq: return "zeta2";
        case OrbitClass::Generic: return "generic";
        case OrbitClass::Degenerate: return "degenerate";
    }
    return "?";
}

std::vector<Elem> theta_coefficients(const Field& F, const LaurentChunk& a, const LaurentChunk& b, int m,
                                     bool equal_orders) {
    int top = m / 4;
    auto coef = [](const LaurentChunk& c, int i) -> Elem { return i < int(c.coeffs.size()) ? c.coeffs[i] : 0; };
    if (int(a.coeffs.size()) < 2 * top + 1 || int(b.coeffs.size()) < 2 * top + 1)
        throw MathError("theta_coefficients: Laurent chunks too short");
    Elem a0 = coef(a, 0);
    if (a0 == 0) throw MathError("degenerate leading coefficient: alpha_{y,0} = 0");
    Elem a0i = F.inv(a0);
    std::vector<Elem> theta(top + 1, 0), sq(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        // beta_{2i} + sum_{i1 + i2 = i} alpha_{2 i1} theta_{i2}^2 = 0
        Elem acc = coef(b, 2 * i);
        for (int i1 = 1; i1 <= i; ++i1) acc ^= F.mul(coef(a, 2 * i1), sq[i - i1]);
        sq[i] = F.mul(acc, a0i);
        theta[i] = F.sqrt(sq[i]);
    }
    if (equal_orders && (theta[0] == 0 || theta[0] == 1))
        throw MathError("degenerate leading coefficient: theta_{y,0} must lie in k - {0, 1}");
    return theta;
}

void lambda_delta(const Field& F, BranchPoint& bp) {
    (void)F;
    if (bp.m == bp.M) {
        bp.lambda = Proj::at(bp.theta.at(0));
        bp.delta = 0;
        for (int i = 1; i <= bp.m / 4 && i < int(bp.theta.size()); ++i)
            if (bp.theta[i] != 0) {
                bp.delta = i;
                break;
            }
        return;
    }
    bp.delta = -1;
    switch (bp.min_index) {
        case 0: bp.lambda = Proj::infinity(); break;
        case 1: bp.lambda = Proj::at(0); break;
        case 2: bp.lambda = Proj::at(1); break;
        default: throw MathError("inconsistent invariants: m < M without a minimal p-value");
    }
}

void genus_and_differents(RamData& data) {
    long sum = 0;
    auto fill = [&](BranchPoint& bp) {
        bp.different = 3 * (bp.m + 1) + 2 * (bp.M - bp.m);
        bp.jump1 = bp.m;
        bp.jump2 = bp.M > bp.m ? bp.m + 2 * (bp.M - bp.m) : -1;
        sum += bp.different;
    };
    for (auto& bp : data.special) fill(bp);
    for (auto& o : data.orbits)
        for (auto& bp : o.points) fill(bp);
    if (sum % 2) throw MathError("negative genus: odd total different exponent");
    data.genus = -3 + sum / 2;
    if (data.genus < 0) throw MathError("negative genus: inconsistent ramification input");
}

namespace {

BranchPoint analyze_point(const Field& F, const std::array<RatFunc, 3>& fs, const Place& y, int epsilon) {
    BranchPoint bp;
    bp.place = y;
    bp.epsilon = epsilon;
    int p[3];
    for (int i = 0; i < 3; ++i) {
        int o = ord_at(F, fs[i], y);
        p[i] = o == ORD_INF ? 0 : -o;
        if (p[i] <= 0 || p[i] % 2 == 0)
            throw MathError("unsupported configuration: branch point " + y.key() +
                            " is not totally ramified (total ramification requires odd poles of alpha, "
                            "rho alpha and rho^2 alpha)");
    }
    bp.p_alpha = p[0];
    bp.p_rho_alpha = p[1];
    bp.p_rho2_alpha = p[2];
    bp.m = *std::min_element(p, p + 3);
    bp.M = *std::max_element(p, p + 3);
    int nmax = int(std::count(p, p + 3, bp.M));
    if (bp.m < bp.M) {
        if (nmax != 2) throw MathError("inconsistent invariants: maximal p-value not repeated");
        bp.min_index = int(std::min_element(p, p + 3) - p);
    }
    int ia = 0, ib = 1;
    if (bp.min_index == 1) {
        ia = 1;
        ib = 0;
    } else if (bp.min_index == 2) {
        ia = 2;
        ib = 1;
    }
    int count = 2 * (bp.m / 4) + 1;
    LaurentChunk ca = laurent_at(F, fs[ia], y, count);
    LaurentChunk cb = laurent_at(F, fs[ib], y, count);
    bp.theta = theta_coefficients(F, ca, cb, bp.m, bp.m == bp.M);
    lambda_delta(F, bp);
    if (epsilon != 0) {
        if (bp.m != bp.M) throw MathError("inconsistent invariants: m < M at a point of {0, inf}");
        if (bp.lambda != Proj::at(F.zeta_pow(long(epsilon) * bp.m)))
            throw MathError("inconsistent invariants: lambda_y differs from zeta^(epsilon p) at " + y.key());
    }
    return bp;
}

}  // namespace

RamData analyze_branch_data(const Field& F, const ASForm& form) {
    const RatFunc& alpha = form.alpha_reduced;
    if (!trace_K_over_J(F, alpha).is_zero())
        throw MathError("trace nonzero: analysis needs Tr_{K/J}(alpha) = 0");

    std::set<Elem> locus;
    bool has_inf = false;
    for (const auto& [pl, ord] : form.pole_table) {
        if (pl.inf) {
            has_inf = true;
            continue;
        }
        for (int i = 0; i < 3; ++i) locus.insert(F.mul(pl.c, F.zeta_pow(i)));
    }
    bool has_zero = locus.count(0) > 0;
    if (!has_inf && locus.empty())
        throw MathError("empty branch locus: the H-cover is unramified, but it must be ramified");

    if (has_zero && !has_inf) {
        RamData d = analyze_branch_data(F, symmetrize_h(F, rf::invert_var(F, alpha)));
        d.inverted = true;
        return d;
    }

    RamData data;
    data.field = &F;
    data.form = form;
    std::array<RatFunc, 3> fs{alpha, rho_pullback(F, alpha, 1), rho_pullback(F, alpha, 2)};
    if (has_inf) data.special.push_back(analyze_point(F, fs, Place::infinity(), -1));
    if (has_zero) data.special.push_back(analyze_point(F, fs, Place::finite(0), +1));
    data.r = int(data.special.size());

    std::set<Elem> reps;
    for (Elem c : locus) {
        if (c == 0) continue;
        reps.insert(std::min({c, F.mul(c, F.zeta()), F.mul(c, F.zeta2())}));
    }
    for (Elem psi : reps) {
        Orbit o;
        o.psi = psi;
        for (int i = 0; i < 3; ++i) o.points[i] = analyze_point(F, fs, Place::finite(F.mul(psi, F.zeta_pow(i))), 0);
        o.lambda = o.points[0].lambda;
        o.phi = phi_of_lambda(F, o.lambda);
        if (o.lambda == Proj::at(F.zeta()))
            o.klass = OrbitClass::Zeta;
        else if (o.lambda == Proj::at(F.zeta2()))
            o.klass = OrbitClass::ZetaSq;
        else if (o.lambda.inf || o.lambda.v == 0 || o.lambda.v == 1)
            o.klass = OrbitClass::Degenerate;
        else
            o.klass = OrbitClass::Generic;
        data.orbits.push_back(o);
    }
    std::stable_sort(data.orbits.begin(), data.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.klass != b.klass) return int(a.klass) < int(b.klass);
        return a.psi < b.psi;
    });
    genus_and_differents(data);
    return data;
}

}  // namespace a4diff
