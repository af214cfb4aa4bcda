#include "a4diff/decomp.hpp"

namespace a4diff {

namespace {

int mod3(long v) { return int(((v % 3) + 3) % 3); }

// total = 3q + r; q everywhere, plus one at i = 1 - eps*off1 if r != 0 and at
// i = 1 - eps*off2 if r = 2.
void split3(int total, int eps, int off1, int off2, int out[3]) {
    if (total < 0) throw MathError("inconsistent invariants: negative multiplicity " + std::to_string(total));
    int q = total / 3, r = total % 3;
    for (int i = 0; i < 3; ++i) out[i] = q;
    if (r != 0) out[mod3(1 - long(eps) * off1)] += 1;
    if (r == 2) out[mod3(1 - long(eps) * off2)] += 1;
}

Proj star_of(const Field& F, const BranchPoint& bp) {
    if (bp.lambda == Proj::at(F.zeta())) return Proj::at(0);
    if (bp.lambda == Proj::at(F.zeta2())) return Proj::infinity();
    throw MathError("inconsistent invariants: lambda at a point of {0, inf} is not zeta or zeta^2");
}

}  // namespace

std::vector<PointRef> point_refs(const RamData& data) {
    std::vector<PointRef> out;
    for (int s = 0; s < int(data.special.size()); ++s) out.push_back({true, s, 0});
    for (int o = 0; o < int(data.orbits.size()); ++o)
        for (int p = 0; p < 3; ++p) out.push_back({false, o, p});
    return out;
}

const BranchPoint& point_at(const RamData& data, const PointRef& ref) {
    return ref.special ? data.special.at(ref.index) : data.orbits.at(ref.index).points.at(ref.point);
}

MuNu mu_nu(const RamData& data, const PointRef& ref) {
    const BranchPoint& bp = point_at(data, ref);
    MuNu mn;
    mn.mu1 = (bp.m + 3) / 4;
    mn.mu2 = (2 * bp.m + 3) / 4;
    mn.mu3 = (3 * bp.m + 3) / 4;
    mn.nu = (bp.M - bp.m) / 2;
    bool is_inf = ref.special && bp.place.inf;
    bool is_y1 = !ref.special && ref.index == 0 && ref.point == 0;
    mn.k = is_inf ? -2 : 0;
    if (data.r >= 1 && is_inf)
        mn.a = 0;
    else if (data.r == 0 && is_y1)
        mn.a = 2;
    else
        mn.a = 1;
    mn.b = (data.r == 0 && !is_y1) ? 1 : 0;
    return mn;
}

KHBlock kh_block(const BranchPoint& bp, const MuNu& mn) {
    KHBlock kb;
    int gap = mn.mu2 - mn.mu1;
    if (bp.delta == 0) {
        kb.l = 1;
        kb.a1 = gap;
        kb.a2 = 0;
        return kb;
    }
    int step = bp.delta >= 1 ? bp.delta : mn.nu;
    int t = bp.delta >= 1 ? gap : gap + mn.nu;
    if (step < 1 || t < 1)
        throw MathError("inconsistent invariants: no (l, a_1) with " + std::to_string(t) + " = (l - 1) * " +
                        std::to_string(step) + " + a_1");
    kb.l = 1 + (t - 1) / step;
    kb.a1 = t - (kb.l - 1) * step;
    kb.a2 = step - kb.a1;
    return kb;
}

SpecialSplit special_split(const RamData& data, int s) {
    PointRef ref{true, s, 0};
    const BranchPoint& bp = point_at(data, ref);
    MuNu mn = mu_nu(data, ref);
    KHBlock kb = kh_block(bp, mn);
    int eps = bp.epsilon;
    SpecialSplit sp;
    split3(mn.mu1 + mn.k - mn.a + 1, eps, mn.a, mn.a + 1, sp.b);
    split3(mn.mu3 - mn.mu2, eps, mn.mu2 + mn.k + 1, mn.mu2 + mn.k + 2, sp.c);
    split3(kb.a1, eps, mn.mu1 + mn.k + 1, mn.mu1 + mn.k + 2, sp.a1);
    split3(kb.a2, eps, mn.mu1 + mn.k + kb.a1 + 1, mn.mu1 + mn.k + kb.a1 + 2, sp.a2);
    return sp;
}

Decomposition kH_decomposition(const RamData& data) {
    const Field& F = *data.field;
    Decomposition d;
    d.side = Side::H;
    long b = -1, c = 0;
    for (const PointRef& ref : point_refs(data)) {
        const BranchPoint& bp = point_at(data, ref);
        MuNu mn = mu_nu(data, ref);
        KHBlock kb = kh_block(bp, mn);
        d.add(Label::h_even(kb.l, bp.lambda), kb.a1);
        d.add(Label::h_even(kb.l - 1, bp.lambda), kb.a2);
        b += mn.mu1;
        c += mn.mu3 - mn.mu2;
    }
    if (b < 0) throw MathError("inconsistent invariants: b = -1 + sum mu_1 is negative");
    d.add(Label::h_odd(1, 1), b);
    d.add(Label::k(), c);
    return data.inverted ? twist(F, d) : d;
}

Decomposition kG_decomposition(const RamData& data) {
    const Field& F = *data.field;
    Decomposition d;
    d.side = Side::G;
    long b[3] = {0, 0, 0}, c[3] = {0, 0, 0};

    for (int s = 0; s < int(data.special.size()); ++s) {
        const BranchPoint& bp = data.special[s];
        KHBlock kb = kh_block(bp, mu_nu(data, {true, s, 0}));
        SpecialSplit sp = special_split(data, s);
        Proj star = star_of(F, bp);
        for (int i = 0; i < 3; ++i) {
            d.add(Label::g_even(kb.l, star, i), sp.a1[i]);
            d.add(Label::g_even(kb.l - 1, star, i), sp.a2[i]);
            b[i] += sp.b[i];
            c[i] += sp.c[i];
        }
    }
    if (data.r == 0) b[0] -= 1;  // delta(r, i)

    for (int j = 0; j < int(data.orbits.size()); ++j) {
        const Orbit& o = data.orbits[j];
        MuNu mn = mu_nu(data, {false, j, 0});
        KHBlock kb = kh_block(o.points[0], mn);
        for (int i = 0; i < 3; ++i) {
            b[i] += mn.mu1;
            c[i] += mn.mu3 - mn.mu2;
        }
        switch (o.klass) {
            case OrbitClass::Zeta:
            case OrbitClass::ZetaSq: {
                Proj star = o.klass == OrbitClass::Zeta ? Proj::at(0) : Proj::infinity();
                for (int i = 0; i < 3; ++i) {
                    d.add(Label::g_even(kb.l, star, i), kb.a1);
                    d.add(Label::g_even(kb.l - 1, star, i), kb.a2);
                }
                break;
            }
            case OrbitClass::Generic: {
                Elem mu = F.pow(o.phi.v, 3);
                d.add(Label::g_band(kb.l, mu), kb.a1);
                d.add(Label::g_band(kb.l - 1, mu), kb.a2);
                break;
            }
            case OrbitClass::Degenerate:
                d.add(Label::g_band(kb.l, 1), kb.a1);
                d.add(Label::g_band(kb.l - 1, 1), kb.a2);
                break;
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (b[i] < 0 || c[i] < 0) throw MathError("inconsistent invariants: negative multiplicity of M_{3,1,i} or S_i");
        d.add(Label::g_odd(1, 1, i), b[i]);
        d.add(Label::g_simple(i), c[i]);
    }
    return data.inverted ? twist(F, d) : d;
}

Decomposition hkg_decomposition(const RamData& data) {
    const Field& F = *data.field;
    if (data.special.size() != 1 || !data.special[0].place.inf || !data.orbits.empty())
        throw MathError("not an HKG datum: the branch locus must be the single point inf");
    const BranchPoint& bp = data.special[0];
    MuNu mn = mu_nu(data, {true, 0, 0});
    KHBlock kb = kh_block(bp, mn);
    Proj star = star_of(F, bp);

    // Split total = 3q + r with the extra copies at i = c1 (r != 0) and c1 + 1 (r = 2).
    auto split = [](int total, int c1, long out[3]) {
        int q = total / 3, r = total % 3;
        for (int i = 0; i < 3; ++i) out[i] = q;
        if (r != 0) out[mod3(c1)] += 1;
        if (r == 2) out[mod3(c1 + 1)] += 1;
    };
    long b[3], c[3], a1[3], a2[3];
    split(mn.mu1 - 1, 1, b);
    split(mn.mu3 - mn.mu2, mn.mu2, c);
    split(kb.a1, mn.mu1, a1);
    split(kb.a2, mn.mu1 + kb.a1, a2);

    Decomposition d;
    d.side = Side::G;
    for (int i = 0; i < 3; ++i) {
        d.add(Label::g_even(kb.l, star, i), a1[i]);
        d.add(Label::g_even(kb.l - 1, star, i), a2[i]);
        d.add(Label::g_odd(1, 1, i), b[i]);
        d.add(Label::g_simple(i), c[i]);
    }
    return data.inverted ? twist(F, d) : d;
}

Decomposition restrict_decomposition(const Field& F, const Decomposition& d) {
    if (d.side != Side::G) throw MathError("restrict_decomposition expects a kG decomposition");
    Decomposition out;
    out.side = Side::H;
    for (const auto& [l, m] : d.entries) {
        switch (l.kind) {
            case Label::Simple: out.add(Label::k(), m); break;
            case Label::OddString: out.add(Label::h_odd(l.n, l.x), m); break;
            case Label::EvenString:
                out.add(Label::h_even(l.n, Proj::at(l.param.inf ? F.zeta2() : F.zeta())), m);
                break;
            case Label::Band: {
                auto roots = poly::roots(F, Poly{l.param.v, 0, 0, 1});
                if (roots.empty())
                    throw MathError("band parameter " + l.param.str() + " has no cube root in GF(2^" +
                                    std::to_string(F.m()) + ")");
                Elem phi = roots.front();
                for (int e = 0; e < 3; ++e)
                    out.add(Label::h_even(l.n, lambda_of_phi(F, Proj::at(F.mul(phi, F.zeta_pow(e))))), m);
                break;
            }
        }
    }
    return out;
}

std::vector<std::string> decomposition_notes(const RamData& data) {
    std::vector<std::string> notes;
    if (data.inverted) notes.push_back("analysed in t = 1/s; labels translated back by the rho -> rho^-1 twist");
    if (data.r == 0)
        notes.push_back("r = 0: b(y) = 1 for branch points other than y_1; the b_i use a(y) only");
    return notes;
}

}  // namespace a4diff
