// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "a4diff/cli.hpp"
#include "a4diff/oracle.hpp"
#include "a4diff/report.hpp"
#include "random_data.hpp"
#include "zoo_labels.hpp"

using namespace a4diff;

namespace {

const Field& F = Field::get(8);

// Collects the first few failures of a criterion.
struct Checker {
    long checks = 0, failures = 0;
    std::ostringstream detail;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ < 5) detail << "    " << what << "\n";
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        expect(got == want, os.str());
    }
};

RamData analyze(const RatFunc& a) { return analyze_branch_data(F, symmetrize_h(F, a)); }

int ceil_half(int v) { return (v + 1) / 2; }

const BranchPoint* point_at_place(const RamData& d, Place y, PointRef* ref) {
    for (int s = 0; s < int(d.special.size()); ++s)
        if (d.special[s].place == y) {
            *ref = {true, s, 0};
            return &d.special[s];
        }
    for (int o = 0; o < int(d.orbits.size()); ++o)
        for (int p = 0; p < 3; ++p)
            if (d.orbits[o].points[p].place == y) {
                *ref = {false, o, p};
                return &d.orbits[o].points[p];
            }
    return nullptr;
}

long mult(const Decomposition& d, const Label& l) {
    auto it = d.entries.find(l);
    return it == d.entries.end() ? 0 : it->second;
}

void example1(Checker& c) {
    for (int n = 1; n <= 3; ++n)
        for (int x = 1; x <= 2; ++x) {
            std::string tag = "n=" + std::to_string(n) + " x=" + std::to_string(x) + " ";
            int r = n % 3, h = ceil_half(r * x);
            RamData d = analyze(example_alpha(F, 1, n, x, 0));
            PointRef ref;
            const BranchPoint* inf = point_at_place(d, Place::infinity(), &ref);
            c.expect(inf && !d.inverted, tag + "branch point inf");
            if (!inf) continue;
            MuNu mn = mu_nu(d, ref);
            KHBlock kb = kh_block(*inf, mn);
            c.equal(inf->p_alpha, (32 * n - 2 * r + 20) * x - 3, tag + "p_inf");
            c.equal(inf->delta, 8 * x, tag + "delta");
            c.expect(inf->lambda == Proj::at(F.zeta_pow(x)), tag + "lambda = zeta^x");
            c.equal(kb.l, n + 1, tag + "l");
            c.equal(kb.a1, (5 - r) * x - 1 + h, tag + "a1");
            c.equal(kb.a2, (3 + r) * x + 1 - h, tag + "a2");
            c.equal(mn.mu1, (8 * n + 5) * x - h, tag + "mu1");
            c.equal(mn.mu2, (16 * n + 10 - r) * x - 1, tag + "mu2");
            c.equal(mn.mu3, (24 * n + 15 - r) * x - 1 - ceil_half(r * x + 1), tag + "mu3");
        }
}

void example2(Checker& c) {
    for (int n = 1; n <= 3; ++n) {
        std::string tag = "n=" + std::to_string(n) + " ";
        RamData d = analyze(example_alpha(F, 2, n, 1, 0));
        c.equal(mult(kG_decomposition(d), Label::g_band(n, 1)), 1, tag + "mult B_{6n,1}");
        PointRef ref;
        const BranchPoint* y = point_at_place(d, Place::finite(1), &ref);
        c.expect(y && !ref.special, tag + "orbit through 1");
        if (!y) continue;
        c.equal(y->m, 4 * n - 3, tag + "m");
        c.equal(y->M, 4 * n - 1, tag + "M");
        c.equal(y->delta, -1, tag + "delta");
    }
}

void example3(Checker& c) {
    std::mt19937 rng(2024);
    for (int n = 1; n <= 2; ++n)
        for (int t = 0; t < 3; ++t) {
            Elem psi;
            do psi = Elem(rng() % 256);
            while (psi == 0 || psi == 1 || psi == F.zeta() || psi == F.zeta2());
            std::string tag = "n=" + std::to_string(n) + " psi=" + std::to_string(psi) + " ";
            RamData d = analyze(example_alpha(F, 3, n, 1, psi));
            PointRef ref;
            const BranchPoint* y = point_at_place(d, Place::finite(psi), &ref);
            c.expect(y && !ref.special, tag + "orbit through psi");
            if (!y) continue;
            Elem lam = F.div(F.zeta() ^ F.mul(F.zeta2(), psi), 1 ^ psi);
            c.expect(y->lambda == Proj::at(lam), tag + "lambda_1");
            c.expect(phi_of_lambda(F, y->lambda) == Proj::at(psi), tag + "phi_1 = psi");
            c.equal(y->delta, 1, tag + "delta");
            c.equal(mult(kG_decomposition(d), Label::g_band(n, F.pow(psi, 3))), 1, tag + "mult B_{6n,psi^3}");
        }
}

std::vector<RamData> sample_data() {
    std::vector<RamData> out;
    std::mt19937 rng(4);
    int tried = 0;
    while (out.size() < 100) {
        auto d = testing::next_datum(F, rng, 1000, tried);
        if (!d) break;
        out.push_back(std::move(*d));
    }
    return out;
}

void genus_identity(Checker& c, const std::vector<RamData>& data) {
    c.equal(data.size(), std::size_t(100), "random data");
    for (const RamData& d : data) {
        long sum = 0;
        for (const BranchPoint* bp : d.all_points()) sum += 3 * (bp->m + 1) + 2 * (bp->M - bp->m);
        long genus = sum / 2 - 3;
        c.equal(d.genus, genus, "genus from the different");
        c.equal(kH_decomposition(d).total_dim(), genus, "dim kH");
        c.equal(kG_decomposition(d).total_dim(), genus, "dim kG");
    }
}

void restriction(Checker& c, const std::vector<RamData>& data) {
    c.equal(data.size(), std::size_t(100), "random data");
    for (const RamData& d : data) {
        Decomposition kH = kH_decomposition(d), r = restrict_decomposition(F, kG_decomposition(d));
        c.expect(r == kH, "Res kG = " + r.pretty(F) + " but kH = " + kH.pretty(F));
    }
}

void zoo_soundness(Checker& c) {
    // Res splits over the working field only when mu is a cube there.
    const std::vector<Elem> mus = {1, F.pow(2, 3), F.pow(77, 3), F.pow(F.zeta() ^ 5, 3)};
    for (const Label& l : testing::zoo_labels(Side::G, 30, mus)) {
        GroupRep g = label_rep(F, l);
        bool valid = true;
        try {
            validate_group_rep(F, g);
        } catch (const MathError&) {
            valid = false;
        }
        c.expect(valid && g.dim() == l.dim(), l.name() + " relations");
        MultiplicitySolution s = decompose_rep(F, restrict_to_H(g));
        c.expect(s.ok && s.decomposition == induce_restrict_label(F, l, Direction::Restrict), l.name() + " Res");
    }
    for (const Label& l : testing::zoo_labels(Side::H, 30, {1, F.zeta(), F.zeta2(), 2, 77})) {
        GroupRep g = label_rep(F, l);
        bool valid = true;
        try {
            validate_group_rep(F, g);
            validate_group_rep(F, induce_to_G(F, g));
        } catch (const MathError&) {
            valid = false;
        }
        c.expect(valid && g.dim() == l.dim(), l.name() + " relations");
    }
    // Frobenius reciprocity on all pairs of dimension <= 24 (band parameters from a fixed sample).
    auto hs = testing::zoo_labels(Side::H, 24, {1, F.zeta(), 2});
    auto gs = testing::zoo_labels(Side::G, 24, {1, F.pow(2, 3)});
    std::vector<GroupRep> hr, hi, gr, gres;
    for (const Label& l : hs) {
        hr.push_back(label_rep(F, l));
        hi.push_back(induce_to_G(F, hr.back()));
    }
    for (const Label& l : gs) {
        gr.push_back(label_rep(F, l));
        gres.push_back(restrict_to_H(gr.back()));
    }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j)
            c.expect(hom_dim(F, hi[i], gr[j]) == hom_dim(F, hr[i], gres[j]),
                     "Frobenius " + hs[i].name() + ", " + gs[j].name());
}

void round_trip(Checker& c) {
    std::mt19937 rng(7);
    std::vector<Elem> params = {1, F.zeta(), F.zeta2(), 3, 200};
    auto hs = testing::zoo_labels(Side::H, 24, params), gs = testing::zoo_labels(Side::G, 24, params);
    for (int t = 0; t < 200; ++t) {
        Side side = t % 2 ? Side::H : Side::G;
        const auto& labels = side == Side::H ? hs : gs;
        Decomposition d;
        d.side = side;
        int budget = 1 + int(rng() % 120);
        for (int guard = 0; guard < 40; ++guard) {
            const Label& l = labels[rng() % labels.size()];
            if (l.dim() > budget) continue;
            d.add(l, 1);
            budget -= l.dim();
        }
        // Hide the block structure behind a random change of basis.
        GroupRep g = decomposition_rep(F, d);
        Matrix P;
        do {
            P = Matrix(g.dim(), g.dim());
            for (auto& x : P.a) x = Elem(rng() % 256);
        } while (mat::rank(F, P) < g.dim());
        MultiplicitySolution s = decompose_rep(F, conjugate(F, g, P));
        bool zero_residual = s.ok && s.solution.size() == s.unknowns.size();
        for (std::size_t r = 0; zero_residual && r < s.gram.size(); ++r) {
            long acc = s.hom_vector[r];
            for (std::size_t u = 0; u < s.unknowns.size(); ++u) acc -= s.gram[r][u] * s.solution[u];
            zero_residual = acc == 0;
        }
        c.expect(zero_residual && s.decomposition == d, d.pretty(F) + " -> " + s.decomposition.pretty(F) + " " + s.error);
    }
}

void end_to_end(Checker& c) {
    std::vector<std::pair<std::string, RatFunc>> cases = {{"s^5", RatFunc::s_power(F, 5)},
                                                          {"example 1 (1, 1)", example_alpha(F, 1, 1, 1, 0)},
                                                          {"example 2 (1)", example_alpha(F, 2, 1, 1, 0)}};
    for (const auto& [name, alpha] : cases) {
        auto t0 = std::chrono::steady_clock::now();
        RamData d = analyze(alpha);
        GlobalRep g = build_global_rep(d);
        MultiplicitySolution s = decompose_rep(F, g.rep);
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s.ok && s.decomposition == kG_decomposition(d), name + ": decomposition differs");
        c.expect(sec < 10, name + ": " + std::to_string(sec) + " s");
    }
}

void mobius_dictionary(Checker& c) {
    std::mt19937 rng(9);
    std::vector<Proj> xs = {Proj::at(0), Proj::at(1), Proj::at(F.zeta()), Proj::at(F.zeta2()), Proj::infinity()};
    for (int t = 0; t < 100; ++t) xs.push_back(Proj::at(Elem(rng() % 256)));
    for (Proj x : xs) c.expect(lambda_of_phi(F, phi_of_lambda(F, x)) == x, "lambda(phi(" + x.str() + "))");
    const std::pair<Proj, Proj> fixed[4] = {{Proj::at(0), Proj::at(F.zeta())},
                                            {Proj::infinity(), Proj::at(F.zeta2())},
                                            {Proj::at(F.zeta2()), Proj::at(0)},
                                            {Proj::at(1), Proj::infinity()}};
    for (const auto& [phi, lam] : fixed) {
        c.expect(lambda_of_phi(F, phi) == lam, "lambda(" + phi.str() + ")");
        // The (C, D) module N_{2n,phi} read in (A, B) coordinates.
        for (int n = 1; n <= 2; ++n) {
            QRep q = label_qrep(F, Label::h_even(n, phi));
            MultiplicitySolution s = decompose_rep(F, h_rep_from_CD(F, q.C, q.D));
            Decomposition want;
            want.side = Side::H;
            want.add(Label::h_even(n, lam), 1);
            c.expect(s.ok && s.decomposition == want, "N_{2n," + phi.str() + "}^(C,D) = " + s.decomposition.pretty(F));
        }
    }
}

}  // namespace

int main() {
    std::vector<RamData> data;
    struct Criterion {
        std::string name;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"example 1 closed forms", example1},
        {"example 2 closed forms", example2},
        {"example 3 closed forms", example3},
        {"genus = dim kH = dim kG on 100 random data",
         [&](Checker& c) {
             data = sample_data();
             genus_identity(c, data);
         }},
        {"restriction of kG equals kH on 100 random data", [&](Checker& c) { restriction(c, data); }},
        {"zoo soundness and Frobenius reciprocity", zoo_soundness},
        {"oracle round trip on 200 random sums", round_trip},
        {"end-to-end module construction", end_to_end},
        {"Mobius dictionary", mobius_dictionary},
    };
    int failed = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool ok = c.failures == 0 && c.checks > 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << ++k << "] " << name << " (" << c.checks << " checks, "
                  << long(ms) << " ms)\n"
                  << c.detail.str();
    }
    return failed ? 1 : 0;
}
