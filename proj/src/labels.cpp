#include "a4diff/labels.hpp"

#include <tuple>

namespace a4diff {

namespace {

int mod3(long v) { return int(((v % 3) + 3) % 3); }

}  // namespace

Label Label::k() { return Label{Side::H, Simple, 0, 0, 0, {}}; }
Label Label::h_odd(int n, int x) { return Label{Side::H, OddString, n, x, 0, {}}; }
Label Label::h_even(int n, Proj lambda) { return Label{Side::H, EvenString, n, 0, 0, lambda}; }
Label Label::g_simple(int i) { return Label{Side::G, Simple, 0, 0, mod3(i), {}}; }
Label Label::g_odd(int n, int x, int i) { return Label{Side::G, OddString, n, x, mod3(i), {}}; }
Label Label::g_even(int n, Proj star, int i) { return Label{Side::G, EvenString, n, 0, mod3(i), star}; }
Label Label::g_band(int n, Elem mu) { return Label{Side::G, Band, n, 0, 0, Proj::at(mu)}; }

int Label::dim() const {
    switch (kind) {
        case Simple: return 1;
        case OddString: return 2 * n + 1;
        case EvenString: return 2 * n;
        case Band: return 6 * n;
    }
    return 0;
}

std::string Label::name() const {
    std::string p = param.str();
    if (side == Side::H) {
        switch (kind) {
            case Simple: return "k";
            case OddString: return "M[2n+1=" + std::to_string(2 * n + 1) + ",x=" + std::to_string(x) + "]";
            default: return "N[2n=" + std::to_string(2 * n) + ",lambda=" + p + "]";
        }
    }
    std::string si = ",i=" + std::to_string(i) + "]";
    switch (kind) {
        case Simple: return "S[i=" + std::to_string(i) + "]";
        case OddString: return "M[2n+1=" + std::to_string(2 * n + 1) + ",x=" + std::to_string(x) + si;
        case EvenString: return "N[2n=" + std::to_string(2 * n) + ",*=" + p + si;
        case Band: return "B[6n=" + std::to_string(6 * n) + ",mu=" + p + "]";
    }
    return "?";
}

std::string elem_pretty(const Field& F, Proj v) {
    if (v.inf) return "inf";
    if (v.v == 0) return "0";
    if (v.v == 1) return "1";
    if (v.v == F.zeta()) return "zeta";
    if (v.v == F.zeta2()) return "zeta^2";
    return std::to_string(v.v);
}

std::string Label::pretty(const Field& F) const {
    std::string p = elem_pretty(F, param);
    if (side == Side::H) {
        switch (kind) {
            case Simple: return "k";
            case OddString: return "M_{" + std::to_string(2 * n + 1) + "," + std::to_string(x) + "}";
            default: return "N_{" + std::to_string(2 * n) + "," + p + "}";
        }
    }
    switch (kind) {
        case Simple: return "S_" + std::to_string(i);
        case OddString:
            return "M_{" + std::to_string(2 * n + 1) + "," + std::to_string(x) + "," + std::to_string(i) + "}";
        case EvenString: return "N_{" + std::to_string(2 * n) + "," + p + "," + std::to_string(i) + "}";
        case Band: return "B_{" + std::to_string(6 * n) + "," + p + "}";
    }
    return "?";
}

bool Label::operator==(const Label& o) const {
    return side == o.side && kind == o.kind && n == o.n && x == o.x && i == o.i && param == o.param;
}

bool Label::operator<(const Label& o) const {
    auto key = [](const Label& l) { return std::make_tuple(int(l.side), int(l.kind), l.n, l.x, l.i); };
    if (key(*this) != key(o)) return key(*this) < key(o);
    return param < o.param;
}

void Decomposition::add(const Label& l, long mult) {
    if (mult == 0 || l.dim() == 0) return;
    long& m = entries[l];
    m += mult;
    if (m == 0) entries.erase(l);
}

long Decomposition::total_dim() const {
    long d = 0;
    for (const auto& [l, m] : entries) d += m * l.dim();
    return d;
}

std::string Decomposition::pretty(const Field& F) const {
    if (entries.empty()) return "0";
    std::string out;
    for (const auto& [l, m] : entries) {
        if (!out.empty()) out += " + ";
        out += l.pretty(F);
        if (m != 1) out += "^" + std::to_string(m);
    }
    return out;
}

Label twist_label(const Field& F, const Label& l) {
    Label t = l;
    if (l.side == Side::H) {
        if (l.kind == Label::EvenString && !l.param.inf) t.param = Proj::at(l.param.v ^ 1);
        return t;
    }
    switch (l.kind) {
        case Label::Simple: t.i = mod3(-l.i); break;
        case Label::OddString: t.i = l.x == 1 ? mod3(2 * l.n - 2 - l.i) : mod3(2 * l.n - l.i); break;
        case Label::EvenString:
            t.param = l.param.inf ? Proj::at(0) : Proj::infinity();
            t.i = mod3(-l.i);
            break;
        case Label::Band: t.param = Proj::at(F.inv(l.param.v)); break;
    }
    return t;
}

Decomposition twist(const Field& F, const Decomposition& d) {
    Decomposition out;
    out.side = d.side;
    for (const auto& [l, m] : d.entries) out.add(twist_label(F, l), m);
    return out;
}

}  // namespace a4diff
