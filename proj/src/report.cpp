#include "a4diff/report.hpp"

#include <regex>

namespace a4diff {

json field_json(const Field& F) {
    json bits = json::array();
    for (int k = 0; k <= F.m(); ++k) bits.push_back(int((F.modulus() >> k) & 1));
    return {{"m", F.m()}, {"modulus", bits}};
}

std::uint64_t parse_modulus(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '[') {
        json bits = json::parse(t);
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (bits[k].get<int>()) mask |= std::uint64_t(1) << k;
        return mask;
    }
    std::size_t used = 0;
    std::uint64_t mask = std::stoull(t, &used, 0);
    if (used != t.size()) throw std::invalid_argument("bad modulus: " + text);
    return mask;
}

namespace {

Poly poly_from_json(const Field& F, const json& j) {
    Poly p;
    for (const auto& c : j) {
        auto v = c.get<std::uint64_t>();
        if (v >= F.size()) throw MathError("coefficient " + std::to_string(v) + " is not an element of GF(2^" +
                                           std::to_string(F.m()) + ")");
        p.push_back(Elem(v));
    }
    return p;
}

json poly_json(const Poly& p) {
    json out = json::array();
    for (Elem c : p) out.push_back(c);
    return out;
}

json proj_json(const Proj& p) {
    if (p.inf) return "inf";
    return p.v;
}

}  // namespace

RatFunc alpha_from_json(const Field& F, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("alpha must be a JSON object");
    RatFunc out;
    if (j.contains("num")) {
        Poly den = j.contains("den") ? poly_from_json(F, j["den"]) : Poly{1};
        out = RatFunc(F, poly_from_json(F, j["num"]), den);
    }
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            int e = t.at(0).get<int>();
            auto c = t.at(1).get<std::uint64_t>();
            if (c >= F.size()) throw MathError("coefficient " + std::to_string(c) + " is not a field element");
            out = rf::add(F, out, rf::scale(F, RatFunc::s_power(F, e), Elem(c)));
        }
    if (!j.contains("num") && !j.contains("terms")) throw std::invalid_argument("alpha needs \"num\" or \"terms\"");
    return out;
}

json alpha_json(const RatFunc& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

json matrix_json(const Matrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < M.cols; ++j) r.push_back(M(i, j));
        rows.push_back(r);
    }
    return rows;
}

json label_json(const Label& l) {
    json params = json::object();
    params["side"] = l.side == Side::G ? "G" : "H";
    switch (l.kind) {
        case Label::Simple:
            if (l.side == Side::G) params["i"] = l.i;
            break;
        case Label::OddString:
            params["n"] = l.n;
            params["x"] = l.x;
            if (l.side == Side::G) params["i"] = l.i;
            break;
        case Label::EvenString:
            params["n"] = l.n;
            if (l.side == Side::G) {
                params["star"] = proj_json(l.param);
                params["i"] = l.i;
            } else {
                params["lambda"] = proj_json(l.param);
            }
            break;
        case Label::Band:
            params["n"] = l.n;
            params["mu"] = proj_json(l.param);
            break;
    }
    return {{"label", l.name()}, {"params", params}, {"dim", l.dim()}};
}

json decomposition_json(const Decomposition& d) {
    json out = json::array();
    for (const auto& [l, mult] : d.entries) {
        json e = label_json(l);
        e["mult"] = mult;
        out.push_back(e);
    }
    return out;
}

namespace {

json point_json(const Field& F, const RamData& data, const PointRef& ref, int trunc) {
    const BranchPoint& bp = point_at(data, ref);
    MuNu mn = mu_nu(data, ref);
    KHBlock kb = kh_block(bp, mn);
    json j;
    j["place"] = bp.place.key();
    j["p"] = {bp.p_alpha, bp.p_rho_alpha, bp.p_rho2_alpha};
    j["m"] = bp.m;
    j["M"] = bp.M;
    j["min_index"] = bp.min_index;
    j["lambda"] = proj_json(bp.lambda);
    j["delta"] = bp.delta;
    j["epsilon"] = bp.epsilon;
    j["theta"] = poly_json(bp.theta);
    j["different"] = bp.different;
    j["jumps"] = {bp.jump1, bp.jump2 < 0 ? json(nullptr) : json(bp.jump2)};
    j["mu"] = {mn.mu1, mn.mu2, mn.mu3};
    j["nu"] = mn.nu;
    j["a"] = mn.a;
    j["b"] = mn.b;
    j["k"] = mn.k;
    j["l"] = kb.l;
    j["a1"] = kb.a1;
    j["a2"] = kb.a2;
    if (trunc > 0) {
        LaurentChunk c = laurent_at(F, data.form.alpha_reduced, bp.place, trunc);
        j["laurent"] = {{"ord", c.ord}, {"coeffs", poly_json(c.coeffs)}};
    }
    return j;
}

}  // namespace

json ram_json(const Field& F, const RamData& data, int trunc) {
    json j;
    j["inverted"] = data.inverted;
    j["alpha_reduced"] = alpha_json(data.form.alpha_reduced);
    j["h"] = alpha_json(data.form.h);
    j["dropped_constant"] = data.form.dropped_constant;
    j["r"] = data.r;
    j["genus"] = data.genus;
    j["special"] = json::array();
    for (int s = 0; s < int(data.special.size()); ++s) j["special"].push_back(point_json(F, data, {true, s, 0}, trunc));
    j["orbits"] = json::array();
    for (int k = 0; k < int(data.orbits.size()); ++k) {
        const Orbit& o = data.orbits[k];
        json oj;
        oj["psi"] = o.psi;
        oj["klass"] = klass_name(o.klass);
        oj["lambda"] = proj_json(o.lambda);
        oj["phi"] = proj_json(o.phi);
        oj["points"] = json::array();
        for (int p = 0; p < 3; ++p) oj["points"].push_back(point_json(F, data, {false, k, p}, trunc));
        j["orbits"].push_back(oj);
    }
    return j;
}

json global_rep_json(const Field& F, const GlobalRep& g) {
    json j;
    j["dim"] = g.rep.dim();
    j["labels"] = json::array();
    for (const auto& l : g.labels) j["labels"].push_back({l.point, l.family, l.index});
    j["sigma"] = matrix_json(g.rep.sigma);
    j["tau"] = matrix_json(g.rep.tau);
    j["rho"] = matrix_json(g.rep.rho);
    j["block_plan"] = json::array();
    for (const auto& b : g.block_plan) {
        json bj = {{"point", b.point}, {"kind", b.kind}, {"offset", b.offset}, {"dim", b.dim}};
        if (b.kind != "dagger") {
            bj["n"] = b.n;
            bj["delta"] = b.delta;
            bj["lambda"] = proj_json(b.lambda);
            bj["theta"] = matrix_json(b.theta);
            if (b.theta1.rows) {
                bj["theta1"] = matrix_json(b.theta1);
                bj["theta2"] = matrix_json(b.theta2);
            }
        }
        if (!b.notes.empty()) bj["notes"] = b.notes;
        j["block_plan"].push_back(bj);
    }
    (void)F;
    return j;
}

Label parse_label(const std::string& text) {
    static const std::regex k_re(R"(k)"), s_re(R"(S\[i=([0-2])\])"),
        m_re(R"(M\[2n\+1=(\d+),x=([12])(?:,i=([0-2]))?\])"),
        n_re(R"(N\[2n=(\d+),(lambda|\*)=(inf|\d+)(?:,i=([0-2]))?\])"), b_re(R"(B\[6n=(\d+),mu=(\d+)\])");
    std::smatch m;
    auto num = [](const std::ssub_match& s) { return std::stoi(s.str()); };
    auto proj = [](const std::string& s) { return s == "inf" ? Proj::infinity() : Proj::at(Elem(std::stoul(s))); };
    if (std::regex_match(text, m, k_re)) return Label::k();
    if (std::regex_match(text, m, s_re)) return Label::g_simple(num(m[1]));
    if (std::regex_match(text, m, m_re)) {
        int d = num(m[1]);
        if (d < 3 || d % 2 == 0) throw std::invalid_argument("bad label: " + text);
        return m[3].matched ? Label::g_odd(d / 2, num(m[2]), num(m[3])) : Label::h_odd(d / 2, num(m[2]));
    }
    if (std::regex_match(text, m, n_re)) {
        int d = num(m[1]);
        if (d < 2 || d % 2) throw std::invalid_argument("bad label: " + text);
        bool g = m[2].str() == "*";
        if (g != m[4].matched) throw std::invalid_argument("bad label: " + text);
        Proj p = proj(m[3].str());
        if (g) {
            if (!(p.inf || p.v == 0)) throw std::invalid_argument("bad label: * must be 0 or inf in " + text);
            return Label::g_even(d / 2, p, num(m[4]));
        }
        return Label::h_even(d / 2, p);
    }
    if (std::regex_match(text, m, b_re)) {
        int d = num(m[1]);
        Elem mu = Elem(std::stoul(m[2].str()));
        if (d < 6 || d % 6 || mu == 0) throw std::invalid_argument("bad label: " + text);
        return Label::g_band(d / 6, mu);
    }
    throw std::invalid_argument("unknown label: " + text);
}

Verification verify_datum(const RamData& data) {
    Verification v;
    const Field& F = *data.field;
    v.expected_kG = kG_decomposition(data);
    v.expected_kH = kH_decomposition(data);
    GlobalRep g = build_global_rep(data);
    v.dim = g.rep.dim();
    v.solution = decompose_rep(F, g.rep);
    MultiplicitySolution h = decompose_rep(F, restrict_to_H(g.rep));
    v.found_kG = v.solution.decomposition;
    v.found_kH = h.decomposition;
    if (!v.solution.ok)
        v.error = "kG: " + v.solution.error;
    else if (!h.ok)
        v.error = "kH: " + h.error;
    else if (v.found_kG != v.expected_kG)
        v.error = "kG decomposition of the constructed module differs from the closed form";
    else if (v.found_kH != v.expected_kH)
        v.error = "kH decomposition of the restricted module differs from the closed form";
    v.pass = v.error.empty();
    return v;
}

json verification_json(const Verification& v) {
    json j;
    j["status"] = v.pass ? "PASS" : "FAIL";
    if (!v.error.empty()) j["error"] = v.error;
    j["dim"] = v.dim;
    j["kG_found"] = decomposition_json(v.found_kG);
    j["kH_found"] = decomposition_json(v.found_kH);
    const MultiplicitySolution& s = v.solution;
    json cands = json::array();
    for (const auto& l : s.candidates) cands.push_back(l.name());
    j["candidates"] = cands;
    j["unknowns"] = s.unknowns;
    j["hom_vector"] = s.hom_vector;
    j["gram"] = s.gram;
    j["solution"] = s.solution;
    if (s.solution.size() == s.unknowns.size() && !s.gram.empty()) {
        json res = json::array();
        for (std::size_t r = 0; r < s.gram.size(); ++r) {
            long acc = s.hom_vector[r];
            for (std::size_t u = 0; u < s.unknowns.size(); ++u) acc -= s.gram[r][u] * s.solution[u];
            res.push_back(acc);
        }
        j["residual"] = res;
    }
    return j;
}

}  // namespace a4diff
