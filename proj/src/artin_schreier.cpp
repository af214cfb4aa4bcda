#include "a4diff/artin_schreier.hpp"

namespace a4diff {

namespace {

// sum_j coef[j] * (s - c)^(-j), j >= 1
RatFunc principal_part(const Field& F, Elem c, const std::vector<Elem>& coef) {
    int e = int(coef.size()) - 1;
    while (e > 0 && coef[e] == 0) --e;
    if (e <= 0) return RatFunc();
    // numerator sum_j coef[j] (s - c)^(e - j)
    Poly lin{c, 1}, num;
    Poly powlin{1};
    for (int j = e; j >= 1; --j) {
        num = poly::add(num, poly::scale(F, powlin, coef[j]));
        powlin = poly::mul(F, powlin, lin);
    }
    return RatFunc(F, num, poly::pow(F, lin, unsigned(e)));
}

// Cancels even-order terms from the top down; coef[j] multiplies t^j for the local
// pole variable t. Returns the matching h coefficients.
std::vector<Elem> reduce_local(const Field& F, std::vector<Elem>& coef) {
    std::vector<Elem> h(coef.size(), 0);
    for (int j = int(coef.size()) - 1; j >= 1; --j) {
        if (j % 2 || coef[j] == 0) continue;
        Elem r = F.sqrt(coef[j]);
        coef[j] = 0;
        coef[j / 2] ^= r;
        h[j / 2] ^= r;
    }
    return h;
}

}  // namespace

ASForm as_reduce(const Field& F, const RatFunc& alpha) {
    ASForm out;
    out.alpha_input = alpha;
    auto poles = finite_poles(F, alpha);

    Poly q, r;
    poly::divmod(F, alpha.num(), alpha.den(), q, r);

    RatFunc reduced, h;
    for (auto [c, e] : poles) {
        LaurentChunk ch = laurent_at(F, alpha, Place::finite(c), e);
        std::vector<Elem> coef(e + 1, 0);
        for (int j = 1; j <= e; ++j) coef[j] = ch.coeffs[e - j];
        std::vector<Elem> hc = reduce_local(F, coef);
        reduced = rf::add(F, reduced, principal_part(F, c, coef));
        h = rf::add(F, h, principal_part(F, c, hc));
        int top = e;
        while (top > 0 && coef[top] == 0) --top;
        if (top > 0) out.pole_table[Place::finite(c)] = top;
    }

    std::vector<Elem> qc(q.begin(), q.end());
    if (qc.empty()) qc.push_back(0);
    std::vector<Elem> hq = reduce_local(F, qc);
    Elem c0 = qc[0];
    qc[0] = 0;
    if (c0) {
        Elem x;
        if (F.solve_as(c0, x))
            hq[0] ^= x;
        else
            out.dropped_constant = c0;
    }
    Poly qp(qc.begin(), qc.end()), hp(hq.begin(), hq.end());
    poly::trim(qp);
    poly::trim(hp);
    if (poly::deg(qp) > 0) out.pole_table[Place::infinity()] = poly::deg(qp);
    reduced = rf::add(F, reduced, RatFunc::from_poly(F, qp));
    h = rf::add(F, h, RatFunc::from_poly(F, hp));

    out.alpha_reduced = reduced;
    out.h = h;
    return out;
}

ASForm symmetrize_h(const Field& F, const RatFunc& alpha) {
    if (!trace_K_over_J(F, alpha).is_zero())
        throw MathError("trace nonzero: Tr_{K/J}(alpha) = alpha + rho(alpha) + rho^2(alpha) must vanish");
    // The reduction is additive and commutes with s -> zeta s, so h inherits trace zero.
    ASForm f = as_reduce(F, alpha);
    if (!trace_K_over_J(F, f.h).is_zero() || !trace_K_over_J(F, rf::sqr(F, f.h)).is_zero())
        throw MathError("internal: reducer h does not have trace zero");
    f.trace_zero_mode = true;
    return f;
}

bool is_as_trivial(const Field& F, const RatFunc& alpha) { return as_reduce(F, alpha).alpha_reduced.is_constant(); }

A4Report check_a4_conditions(const Field& F, const RatFunc& alpha) {
    A4Report rep;
    rep.trace_zero = trace_K_over_J(F, alpha).is_zero();
    RatFunc ra = rho_pullback(F, alpha, 1);
    rep.nontrivial_alpha = !is_as_trivial(F, alpha);
    rep.nontrivial_rho_alpha = !is_as_trivial(F, ra);
    rep.nontrivial_sum = !is_as_trivial(F, rf::add(F, alpha, ra));
    rep.verdict = rep.trace_zero && rep.nontrivial_alpha && rep.nontrivial_rho_alpha && rep.nontrivial_sum;
    return rep;
}

}  // namespace a4diff
