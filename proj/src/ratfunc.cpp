#include "a4diff/ratfunc.hpp"

#include <sstream>

namespace a4diff {

std::string Place::key() const { return inf ? "inf" : std::to_string(c); }

RatFunc::RatFunc(const Field& F, Poly num, Poly den) {
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) throw MathError("rational function with zero denominator");
    if (num.empty()) {
        den_ = {1};
        return;
    }
    Poly g = poly::gcd(F, num, den);
    if (poly::deg(g) > 0) {
        Poly q, r;
        poly::divmod(F, num, g, q, r);
        num = q;
        poly::divmod(F, den, g, q, r);
        den = q;
    }
    Elem li = F.inv(den.back());
    num_ = poly::scale(F, num, li);
    den_ = poly::scale(F, den, li);
}

RatFunc RatFunc::s_power(const Field& F, int e) {
    if (e >= 0) return from_poly(F, poly::monomial(1, e));
    return RatFunc(F, Poly{1}, poly::monomial(1, -e));
}

namespace rf {

RatFunc add(const Field& F, const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den() == b.den()) return RatFunc(F, poly::add(a.num(), b.num()), a.den());
    Poly num = poly::add(poly::mul(F, a.num(), b.den()), poly::mul(F, b.num(), a.den()));
    return RatFunc(F, num, poly::mul(F, a.den(), b.den()));
}

RatFunc mul(const Field& F, const RatFunc& a, const RatFunc& b) {
    return RatFunc(F, poly::mul(F, a.num(), b.num()), poly::mul(F, a.den(), b.den()));
}

RatFunc div(const Field& F, const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw MathError("rational function division by zero");
    return RatFunc(F, poly::mul(F, a.num(), b.den()), poly::mul(F, a.den(), b.num()));
}

RatFunc scale(const Field& F, const RatFunc& a, Elem c) { return RatFunc(F, poly::scale(F, a.num(), c), a.den()); }

RatFunc sqr(const Field& F, const RatFunc& a) { return mul(F, a, a); }

RatFunc pow(const Field& F, const RatFunc& a, int e) {
    if (e < 0) return pow(F, div(F, RatFunc::constant(F, 1), a), -e);
    return RatFunc(F, poly::pow(F, a.num(), unsigned(e)), poly::pow(F, a.den(), unsigned(e)));
}

RatFunc invert_var(const Field& F, const RatFunc& f) {
    int n = std::max(poly::deg(f.num()), poly::deg(f.den()));
    return RatFunc(F, poly::reverse(f.num(), n), poly::reverse(f.den(), n));
}

Elem eval(const Field& F, const RatFunc& f, Elem x) {
    Elem d = poly::eval(F, f.den(), x);
    if (!d) throw MathError("evaluation at a pole");
    return F.div(poly::eval(F, f.num(), x), d);
}

}  // namespace rf

int ord_at(const Field& F, const RatFunc& f, const Place& y) {
    if (f.is_zero()) return ORD_INF;
    if (y.inf) return poly::deg(f.den()) - poly::deg(f.num());
    return poly::low_order(poly::taylor_shift(F, f.num(), y.c)) -
           poly::low_order(poly::taylor_shift(F, f.den(), y.c));
}

LaurentChunk laurent_at(const Field& F, const RatFunc& f, const Place& y, int count) {
    if (count < 1) throw MathError("laurent_at: count must be positive");
    LaurentChunk out;
    out.place = y;
    if (f.is_zero()) {
        out.coeffs.assign(count, 0);
        return out;
    }
    Poly N, D;
    int shift;
    if (y.inf) {
        // s = 1/pi: f = pi^(deg den - deg num) * rev(num) / rev(den)
        N = poly::reverse(f.num(), poly::deg(f.num()));
        D = poly::reverse(f.den(), poly::deg(f.den()));
        shift = poly::deg(f.den()) - poly::deg(f.num());
    } else {
        N = poly::taylor_shift(F, f.num(), y.c);
        D = poly::taylor_shift(F, f.den(), y.c);
        int vn = poly::low_order(N), vd = poly::low_order(D);
        N.erase(N.begin(), N.begin() + vn);
        D.erase(D.begin(), D.begin() + vd);
        shift = vn - vd;
    }
    out.ord = shift;
    out.coeffs = poly::series_div(F, N, D, count);
    return out;
}

RatFunc rho_pullback(const Field& F, const RatFunc& f, int power) {
    Elem z = F.zeta_pow(power);
    return RatFunc(F, poly::scale_var(F, f.num(), z), poly::scale_var(F, f.den(), z));
}

RatFunc trace_K_over_J(const Field& F, const RatFunc& f) {
    return rf::add(F, rf::add(F, f, rho_pullback(F, f, 1)), rho_pullback(F, f, 2));
}

std::vector<std::pair<Elem, int>> finite_poles(const Field& F, const RatFunc& f) {
    auto fac = poly::split(F, f.den());
    if (poly::deg(fac.unsplit) > 0) {
        std::ostringstream os;
        os << "pole not split over working field GF(2^" << F.m() << "): irreducible denominator factor [";
        for (std::size_t i = 0; i < fac.unsplit.size(); ++i) os << (i ? "," : "") << fac.unsplit[i];
        os << "] (enlarge m)";
        throw MathError(os.str());
    }
    return fac.roots;
}

namespace {
std::string poly_str(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = poly::deg(p); i >= 0; --i) {
        if (!p[i]) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = p[i] == 1;
        if (!unit || i == 0) os << p[i];
        if (i > 0) os << (unit ? "" : "*") << "s" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}
}  // namespace

std::string to_string(const RatFunc& f) {
    if (f.den() == Poly{1}) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ")/(" + poly_str(f.den()) + ")";
}

}  // namespace a4diff
