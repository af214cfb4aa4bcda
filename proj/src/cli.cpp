#include "a4diff/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "a4diff/artin_schreier.hpp"
#include "a4diff/report.hpp"

namespace a4diff {

RatFunc example_alpha(const Field& F, int which, int n, int x, Elem psi) {
    if (n < 1) throw std::invalid_argument("--n must be positive");
    auto linear = [&](Elem c, int e) { return rf::pow(F, RatFunc::from_poly(F, Poly{c, 1}), e); };
    switch (which) {
        case 1: {
            if (x != 1 && x != 2) throw std::invalid_argument("--x must be 1 or 2");
            int r = example_r(n);
            RatFunc head = RatFunc::s_power(F, (32 * n - 2 * r + 4) * x - 3);
            return rf::mul(F, head, RatFunc::from_poly(F, poly::add(poly::monomial(1, 16 * x), Poly{1})));
        }
        case 2: {
            RatFunc num = rf::scale(F, RatFunc::s_power(F, 12 * n + 2), F.zeta());
            RatFunc den = rf::mul(F, rf::mul(F, linear(1, 4 * n - 1), linear(F.zeta(), 4 * n - 3)),
                                  linear(F.zeta2(), 4 * n - 1));
            return rf::div(F, num, den);
        }
        case 3: {
            if (psi == 0 || psi == 1 || psi == F.zeta() || psi == F.zeta2())
                throw MathError("psi must lie in k^x - {1, zeta, zeta^2}");
            Elem p3 = F.pow(psi, 3);
            RatFunc num = rf::mul(F, RatFunc::s_power(F, 12 * n + 2), RatFunc::from_poly(F, Poly{1, 0, 1}));
            num = rf::scale(F, num, F.pow(p3, 4 * n + 1));
            RatFunc den = rf::pow(F, RatFunc::from_poly(F, Poly{p3, 0, 0, 1}), 4 * n + 1);
            return rf::div(F, num, den);
        }
    }
    throw std::invalid_argument("--which must be 1, 2 or 3");
}

namespace {

constexpr int kExitUsage = 1, kExitMath = 2, kExitMismatch = 3;

struct Options {
    int m = 8;
    std::string modulus;
    int trunc = 8;
    bool json = false;
    bool verify = false;
    bool rep = false;
    bool timings = false;
    std::string alpha, batch, label;
    int which = 1, n = 1, x = 1;
    long long psi = -1, mu = -1;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const Field& field_of(int m, const std::string& modulus) {
    return Field::get(m, modulus.empty() ? 0 : parse_modulus(modulus));
}

json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

void check_conditions(const Field& F, const RatFunc& alpha) {
    A4Report r = check_a4_conditions(F, alpha);
    if (!r.trace_zero)
        throw MathError("trace nonzero: Tr_{K/J}(alpha) = alpha + rho(alpha) + rho^2(alpha) must vanish");
    if (!r.nontrivial_alpha) throw MathError("trivial datum: condition alpha != xi^2 - xi fails");
    if (!r.nontrivial_rho_alpha) throw MathError("trivial datum: condition rho(alpha) != xi^2 - xi fails");
    if (!r.nontrivial_sum) throw MathError("trivial datum: condition alpha + rho(alpha) != xi^2 - xi fails");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    std::string name;
    std::string expected, actual;
};

// Values stated for the worked examples, compared with the pipeline output.
std::vector<Check> example_checks(const Field& F, const Options& o, Elem psi, const RamData& data,
                                  const Decomposition& kG) {
    std::vector<Check> out;
    auto add = [&](const std::string& name, const std::string& e, const std::string& a) { out.push_back({name, e, a}); };
    auto str = [](long v) { return std::to_string(v); };
    int n = o.n, x = o.x;
    if (o.which == 1) {
        int r = example_r(n);
        int c1 = (r * x + 1) / 2, c2 = (r * x + 2) / 2;  // ceil(r x / 2), ceil((r x + 1) / 2)
        const BranchPoint* inf = nullptr;
        PointRef ref;
        for (int s = 0; s < int(data.special.size()); ++s)
            if (data.special[s].place.inf) {
                inf = &data.special[s];
                ref = {true, s, 0};
            }
        if (!inf || data.inverted) {
            add("branch point inf", "present", "absent");
            return out;
        }
        MuNu mn = mu_nu(data, ref);
        KHBlock kb = kh_block(*inf, mn);
        add("p_inf", str((32 * n - 2 * r + 20) * x - 3), str(inf->p_alpha));
        add("delta_inf", str(8 * x), str(inf->delta));
        add("lambda_inf", std::to_string(F.zeta_pow(x)), inf->lambda.str());
        add("l_inf", str(n + 1), str(kb.l));
        add("a_inf_1", str((5 - r) * x - 1 + c1), str(kb.a1));
        add("a_inf_2", str((3 + r) * x + 1 - c1), str(kb.a2));
        add("mu_inf_1", str((8 * n + 5) * x - c1), str(mn.mu1));
        add("mu_inf_2", str((16 * n + 10 - r) * x - 1), str(mn.mu2));
        add("mu_inf_3", str((24 * n + 15 - r) * x - 1 - c2), str(mn.mu3));
        return out;
    }
    if (data.orbits.size() != 1) {
        add("orbits", "1", str(long(data.orbits.size())));
        return out;
    }
    const Orbit& orb = data.orbits[0];
    long mult = 0;
    if (o.which == 2) {
        const BranchPoint& y = orb.points[0];
        add("m_y1", str(4 * n - 3), str(y.m));
        add("M_y1", str(4 * n - 1), str(y.M));
        add("delta_y1", "-1", str(y.delta));
        auto it = kG.entries.find(Label::g_band(n, 1));
        if (it != kG.entries.end()) mult = it->second;
        add("mult B[6n,1]", "1", str(mult));
        return out;
    }
    const BranchPoint* y = nullptr;
    for (const auto& bp : orb.points)
        if (!bp.place.inf && bp.place.c == psi) y = &bp;
    if (!y) {
        add("orbit contains psi", "yes", "no");
        return out;
    }
    Elem lam = F.div(F.zeta() ^ F.mul(F.zeta2(), psi), 1 ^ psi);
    add("lambda_1", std::to_string(lam), y->lambda.str());
    add("phi_1", std::to_string(psi), phi_of_lambda(F, y->lambda).str());
    add("delta_y1", "1", str(y->delta));
    auto it = kG.entries.find(Label::g_band(n, F.pow(psi, 3)));
    if (it != kG.entries.end()) mult = it->second;
    add("mult B[6n,psi^3]", "1", str(mult));
    return out;
}

struct JobResult {
    int code = 0;
    json report;
    std::string text;
};

std::string render_text(const Field& F, const json& rep, const RamData* data, const Decomposition* kH,
                        const Decomposition* kG) {
    std::ostringstream os;
    os << "field GF(2^" << F.m() << "), zeta = " << F.zeta() << "\n";
    if (rep.contains("alpha_text")) os << "alpha = " << rep["alpha_text"].get<std::string>() << "\n";
    if (data) {
        os << "genus " << data->genus << ", r = " << data->r << (data->inverted ? ", analysed in 1/s" : "") << "\n";
        auto point = [&](const std::string& name, const BranchPoint& bp) {
            os << "  " << name << ": p = (" << bp.p_alpha << ", " << bp.p_rho_alpha << ", " << bp.p_rho2_alpha
               << "), m = " << bp.m << ", M = " << bp.M << ", lambda = " << elem_pretty(F, bp.lambda)
               << ", delta = " << bp.delta << ", d = " << bp.different << "\n";
        };
        for (const auto& bp : data->special) point(bp.place.inf ? "inf" : "0", bp);
        for (std::size_t j = 0; j < data->orbits.size(); ++j) {
            const Orbit& o = data->orbits[j];
            os << "  orbit " << j + 1 << ": psi = " << o.psi << " (" << klass_name(o.klass)
               << "), phi = " << elem_pretty(F, o.phi) << "\n";
            for (int p = 0; p < 3; ++p) point("  y" + std::to_string(j + 1) + std::string(p, '\''), o.points[p]);
        }
    }
    if (kH) os << "kH: " << kH->pretty(F) << "\n";
    if (kG) os << "kG: " << kG->pretty(F) << "\n";
    if (rep.contains("hkg")) os << "HKG: " << rep["hkg_text"].get<std::string>() << "\n";
    if (rep.contains("notes"))
        for (const auto& n : rep["notes"]) os << "note: " << n.get<std::string>() << "\n";
    if (rep.contains("example_checks")) {
        for (const auto& c : rep["example_checks"])
            os << "check " << c["name"].get<std::string>() << ": expected " << c["expected"].get<std::string>()
               << ", got " << c["actual"].get<std::string>() << (c["ok"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    if (rep.contains("verification")) {
        const json& v = rep["verification"];
        if (v.is_string())
            os << "verification: " << v.get<std::string>() << "\n";
        else {
            os << "verification: " << v["status"].get<std::string>() << " (dim " << v["dim"].get<int>();
            if (rep.contains("timings_ms")) os << ", " << std::fixed << std::setprecision(1)
                                               << rep["timings_ms"]["verify"].get<double>() << " ms";
            os << ")\n";
            if (v.contains("error")) os << "  " << v["error"].get<std::string>() << "\n";
        }
    }
    return os.str();
}

JobResult run_alpha(const Field& F, const RatFunc& alpha, const Options& o, const std::string& command,
                    const json& example = nullptr, Elem psi = 0) {
    JobResult res;
    auto t0 = std::chrono::steady_clock::now();
    check_conditions(F, alpha);
    RamData data = analyze_branch_data(F, symmetrize_h(F, alpha));
    Decomposition kH = kH_decomposition(data), kG = kG_decomposition(data);
    double t_analyze = ms_since(t0);

    json& r = res.report;
    r["schema"] = 1;
    r["command"] = command;
    r["field"] = field_json(F);
    r["alpha"] = alpha_json(alpha);
    if (!example.is_null()) r["example"] = example;
    r["ram"] = ram_json(F, data, o.trunc);
    r["kH"] = decomposition_json(kH);
    r["kG"] = decomposition_json(kG);
    auto notes = decomposition_notes(data);
    if (!notes.empty()) r["notes"] = notes;
    if (command == "hkg") {
        Decomposition h = hkg_decomposition(data);
        r["hkg"] = decomposition_json(h);
        r["hkg_text"] = h.pretty(F);
    }
    if (command == "examples") {
        json checks = json::array();
        bool ok = true;
        for (const Check& c : example_checks(F, o, psi, data, kG)) {
            bool same = c.expected == c.actual;
            ok = ok && same;
            checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", same}});
        }
        r["example_checks"] = checks;
        if (!ok) res.code = kExitMismatch;
    }
    double t_verify = 0;
    if (o.verify) {
        auto t1 = std::chrono::steady_clock::now();
        Verification v = verify_datum(data);
        t_verify = ms_since(t1);
        r["verification"] = verification_json(v);
        if (!v.pass) res.code = kExitMismatch;
    } else {
        r["verification"] = "skipped";
    }
    if (o.rep) r["global_rep"] = global_rep_json(F, build_global_rep(data));

    json text_view = r;
    text_view["alpha_text"] = to_string(alpha);
    text_view["timings_ms"] = {{"analyze", t_analyze}, {"verify", t_verify}};
    if (o.timings) r["timings_ms"] = text_view["timings_ms"];
    r.erase("hkg_text");
    res.text = render_text(F, text_view, &data, &kH, &kG);
    return res;
}

JobResult run_batch(const Options& o) {
    json jobs = read_json_arg("@" + o.batch);
    if (!jobs.is_array()) throw UsageError("batch file must hold a JSON array");
    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k; (k = next++) < jobs.size();) {
            const json& job = jobs[k];
            JobResult& jr = results[k];
            try {
                bool wrapped = job.is_object() && job.contains("alpha");
                int m = wrapped && job.contains("m") ? job["m"].get<int>() : o.m;
                std::string mod = wrapped && job.contains("modulus") ? job["modulus"].dump() : o.modulus;
                const Field& F = field_of(m, mod);
                jr = run_alpha(F, alpha_from_json(F, wrapped ? job["alpha"] : job), o, "verify");
            } catch (const MathError& e) {
                jr.code = kExitMath;
                jr.report = {{"error", e.what()}};
                jr.text = std::string("error: ") + e.what() + "\n";
            } catch (const std::exception& e) {
                jr.code = kExitUsage;
                jr.report = {{"error", e.what()}};
                jr.text = std::string("error: ") + e.what() + "\n";
            }
        }
    };
    unsigned nthreads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), unsigned(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    JobResult out;
    out.report = {{"schema", 1}, {"command", "verify"}, {"jobs", json::array()}};
    for (std::size_t k = 0; k < results.size(); ++k) {
        results[k].report["exit"] = results[k].code;
        out.report["jobs"].push_back(results[k].report);
        out.text += "job " + std::to_string(k + 1) + ":\n" + results[k].text;
        out.code = std::max(out.code, results[k].code);
    }
    return out;
}

JobResult run_zoo(const Options& o) {
    const Field& F = field_of(o.m, o.modulus);
    Label l = parse_label(o.label);
    GroupRep g = label_rep(F, l);
    validate_group_rep(F, g);
    JobResult res;
    json& r = res.report;
    r["schema"] = 1;
    r["command"] = "zoo";
    r["field"] = field_json(F);
    r["label"] = label_json(l);
    r["sigma"] = matrix_json(g.sigma);
    r["tau"] = matrix_json(g.tau);
    if (g.side == Side::G) r["rho"] = matrix_json(g.rho);
    std::ostringstream os;
    os << l.pretty(F) << " (" << l.name() << "), dim " << l.dim() << "\n";
    auto show = [&](const char* name, const Matrix& M) {
        os << name << ":\n";
        for (int i = 0; i < M.rows; ++i) {
            os << " ";
            for (int j = 0; j < M.cols; ++j) os << " " << std::setw(3) << M(i, j);
            os << "\n";
        }
    };
    show("sigma", g.sigma);
    show("tau", g.tau);
    if (g.side == Side::G) show("rho", g.rho);
    res.text = os.str();
    return res;
}

JobResult run_example(Options o) {
    Elem psi = 0;
    const Field* F = &field_of(o.m, o.modulus);
    json ex = {{"which", o.which}, {"n", o.n}};
    if (o.which == 1) ex["x"] = o.x;
    if (o.which == 3) {
        if (o.psi >= 0) {
            if (std::uint64_t(o.psi) >= F->size()) throw UsageError("--psi is not an element of the field");
            psi = Elem(o.psi);
        } else {
            if (o.mu < 0) throw UsageError("example 3 needs --psi or --mu");
            // Smallest even m >= --m where mu has a cube root outside {1, zeta, zeta^2}.
            bool found = false;
            for (int m = o.m; m <= 20 && !found; m += 2) {
                const Field& G = m == o.m ? *F : Field::get(m);
                if (std::uint64_t(o.mu) >= G.size() || o.mu == 0 || o.mu == 1) continue;
                for (Elem c : G.cube_roots(Elem(o.mu)))
                    if (c != 1 && c != G.zeta() && c != G.zeta2()) {
                        F = &G;
                        psi = c;
                        found = true;
                        break;
                    }
            }
            if (!found) throw MathError("no psi with psi^3 = mu outside {1, zeta, zeta^2} in GF(2^m), m <= 20");
            ex["mu"] = o.mu;
        }
        ex["psi"] = psi;
        ex["m"] = F->m();
    }
    return run_alpha(*F, example_alpha(*F, o.which, o.n, o.x, psi), o, "examples", ex, psi);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Galois module structure of holomorphic differentials of alternating four covers in characteristic 2"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "extension degree of the field GF(2^m) (even)");
        sub->add_option("--modulus", o.modulus, "irreducible modulus: bit list [low..high], decimal or 0x mask");
        sub->add_flag("--json", o.json, "JSON report");
        sub->add_flag("--pretty", "human-readable report (default)");
        sub->add_flag("--timings", o.timings, "include timings in the JSON report");
    };
    auto alpha_opts = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "alpha as inline JSON or @file");
        sub->add_option("--trunc", o.trunc, "Laurent coefficients of alpha listed per branch point")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--rep", o.rep, "include the constructed sigma, tau, rho matrices");
    };
    CLI::App* analyze = app.add_subcommand("analyze", "ramification data and kH, kG decompositions");
    common(analyze);
    alpha_opts(analyze);
    analyze->add_flag("--verify", o.verify, "check the closed form against the constructed module");
    CLI::App* hkg = app.add_subcommand("hkg", "decomposition for an HKG cover (branch locus {inf})");
    common(hkg);
    alpha_opts(hkg);
    CLI::App* verify = app.add_subcommand("verify", "analyze and verify; fails on any mismatch");
    common(verify);
    alpha_opts(verify);
    verify->add_option("--batch", o.batch, "JSON array of jobs, run in parallel");
    CLI::App* zoo = app.add_subcommand("zoo", "matrices of an indecomposable module");
    common(zoo);
    zoo->add_option("--label", o.label, "label, e.g. N[2n=4,*=0,i=2] or B[6n=6,mu=1]")->required();
    CLI::App* examples = app.add_subcommand("examples", "the three worked example families");
    common(examples);
    examples->add_option("--which", o.which, "example 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    examples->add_option("--n", o.n, "family parameter n")->check(CLI::PositiveNumber);
    examples->add_option("--x", o.x, "example 1: x in {1, 2}")->check(CLI::Range(1, 2));
    examples->add_option("--psi", o.psi, "example 3: psi as a field element mask");
    examples->add_option("--mu", o.mu, "example 3: mu = psi^3; the field is enlarged until psi exists");
    examples->add_option("--trunc", o.trunc, "Laurent coefficients of alpha listed per branch point");
    examples->add_flag("--verify", o.verify, "check the closed form against the constructed module");
    examples->add_flag("--rep", o.rep, "include the constructed sigma, tau, rho matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        JobResult res;
        if (verify->parsed()) {
            o.verify = true;
            if (!o.batch.empty())
                res = run_batch(o);
            else {
                if (o.alpha.empty()) throw UsageError("verify needs --alpha or --batch");
                const Field& F = field_of(o.m, o.modulus);
                res = run_alpha(F, alpha_from_json(F, read_json_arg(o.alpha)), o, "verify");
            }
        } else if (analyze->parsed() || hkg->parsed()) {
            if (o.alpha.empty()) throw UsageError("--alpha is required");
            const Field& F = field_of(o.m, o.modulus);
            res = run_alpha(F, alpha_from_json(F, read_json_arg(o.alpha)), o, analyze->parsed() ? "analyze" : "hkg");
        } else if (zoo->parsed()) {
            res = run_zoo(o);
        } else {
            res = run_example(o);
        }
        if (o.json)
            out << res.report.dump(2) << "\n";
        else
            out << res.text;
        return res.code;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace a4diff
