#include "dmcode/skew.hpp"

#include <stdexcept>

namespace dmcode {

namespace {

void require_same_tower(const SkewPoly& a, const SkewPoly& b, const char* op) {
    if (a.T != b.T)
        throw std::invalid_argument(std::string(op) + ": operands belong to different towers");
}

// Lift both operands to the join level; returns that level.
int align(SkewPoly& a, SkewPoly& b) {
    int j = a.T->join(a.level, b.level);
    a = lift(a, j);
    b = lift(b, j);
    return j;
}

} // namespace

SkewPoly::SkewPoly(const FieldTower* t, int lvl, std::vector<ExtField::Vec> coeffs)
    : T(t), level(lvl), c(std::move(coeffs)) {
    const ExtField& F = field();
    for (auto& v : c)
        if ((int)v.size() != F.degree()) throw std::invalid_argument("SkewPoly: coefficient size mismatch");
    normalize();
}

SkewPoly SkewPoly::one(const FieldTower* t, int lvl) {
    SkewPoly f(t, lvl);
    f.c.push_back(t->level(lvl).one());
    return f;
}

SkewPoly SkewPoly::tau(const FieldTower* t, int lvl, int exp) {
    if (exp < 0) throw std::invalid_argument("SkewPoly::tau: negative exponent");
    SkewPoly f(t, lvl);
    f.c.assign(exp + 1, t->level(lvl).zero());
    f.c[exp] = t->level(lvl).one();
    return f;
}

SkewPoly SkewPoly::constant(const FieldTower* t, const FFElem& a) {
    int lvl = t->level_of(a.F);
    SkewPoly f(t, lvl);
    if (!a.is_zero()) f.c.push_back(a.c);
    return f;
}

void SkewPoly::normalize() {
    const ExtField& F = field();
    while (!c.empty() && F.is_zero(c.back())) c.pop_back();
}

int SkewPoly::height() const {
    const ExtField& F = field();
    for (int i = 0; i < (int)c.size(); ++i)
        if (!F.is_zero(c[i])) return i;
    return -1;
}

FFElem SkewPoly::coeff(int i) const {
    const ExtField* F = &field();
    if (i < 0 || i >= (int)c.size()) return {F, F->zero()};
    return {F, c[i]};
}

FFElem SkewPoly::lead() const {
    const ExtField* F = &field();
    if (c.empty()) return {F, F->zero()};
    return {F, c.back()};
}

void SkewPoly::set_coeff(int i, const FFElem& a) {
    const ExtField& F = field();
    if (a.F != &F) throw std::invalid_argument("SkewPoly::set_coeff: coefficient field mismatch");
    if (i >= (int)c.size()) c.resize(i + 1, F.zero());
    c[i] = a.c;
    normalize();
}

bool SkewPoly::is_monic() const {
    return !c.empty() && c.back() == field().one();
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) throw std::domain_error("SkewPoly::monic: zero polynomial");
    if (is_monic()) return *this;
    return skew_smul(lead().inv(), *this);
}

std::string SkewPoly::show(const std::string& tau_sym, const std::string& gen_sym) const {
    if (is_zero()) return "0";
    const ExtField& F = field();
    std::string s;
    for (int i = deg(); i >= 0; --i) {
        if (F.is_zero(c[i])) continue;
        if (!s.empty()) s += " + ";
        bool is_one = c[i] == F.one();
        if (i == 0 || !is_one) {
            std::string cs = F.show(c[i], gen_sym);
            if (cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
            s += cs;
        }
        if (i > 0) {
            if (!is_one) s += "*";
            s += tau_sym;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

SkewPoly lift(const SkewPoly& f, int to_level) {
    if (f.level == to_level) return f;
    if (to_level % f.level != 0)
        throw std::invalid_argument("lift: target level is not a multiple of the coefficient level");
    SkewPoly g(f.T, to_level);
    g.c.reserve(f.c.size());
    for (auto& v : f.c)
        g.c.push_back(f.T->embed(FFElem{&f.field(), v}, to_level).c);
    return g;
}

SkewPoly operator+(const SkewPoly& a0, const SkewPoly& b0) {
    require_same_tower(a0, b0, "skew add");
    SkewPoly a = a0, b = b0;
    int j = align(a, b);
    const ExtField& F = a.field();
    SkewPoly r(a.T, j);
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = F.add(r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = F.add(r.c[i], b.c[i]);
    }
    r.normalize();
    return r;
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly SkewPoly::operator-() const {
    const ExtField& F = field();
    SkewPoly r = *this;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

bool operator==(const SkewPoly& a0, const SkewPoly& b0) {
    if (a0.T != b0.T) return false;
    SkewPoly a = a0, b = b0;
    align(a, b);
    return a.c == b.c;
}

SkewPoly skew_smul(const FFElem& s, const SkewPoly& f) {
    SkewPoly g = f;
    int slvl = f.T->level_of(s.F);
    int j = f.T->join(slvl, f.level);
    g = lift(g, j);
    FFElem sj = f.T->embed(s, j);
    const ExtField& F = g.field();
    for (auto& v : g.c) v = F.mul(sj.c, v);
    g.normalize();
    return g;
}

SkewPoly skew_mul(const SkewPoly& f0, const SkewPoly& g0) {
    require_same_tower(f0, g0, "skew_mul");
    SkewPoly f = f0, g = g0;
    int j = align(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.T, j);
    const ExtField& F = f.field();
    int df = f.deg(), dg = g.deg();
    SkewPoly r(f.T, j);
    r.c.assign(df + dg + 1, F.zero());
    // (a_i tau^i)(b_k tau^k) = a_i b_k^{q^i} tau^{i+k}
    std::vector<ExtField::Vec> gshift = g.c;        // coefficient-wise Frobenius, advanced per i
    for (int i = 0; i <= df; ++i) {
        if (i > 0)
            for (auto& v : gshift) v = F.frobenius(v, 1);
        if (F.is_zero(f.c[i])) continue;
        for (int k = 0; k <= dg; ++k) {
            if (F.is_zero(gshift[k])) continue;
            r.c[i + k] = F.add(r.c[i + k], F.mul(f.c[i], gshift[k]));
        }
    }
    r.normalize();
    return r;
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f0, const SkewPoly& P0) {
    require_same_tower(f0, P0, "right_divmod");
    if (P0.is_zero()) throw std::domain_error("right_divmod: division by zero");
    SkewPoly r = f0, P = P0;
    int j = align(r, P);
    const ExtField& F = r.field();
    int s = P.deg();
    SkewPoly g(r.T, j);
    if (r.deg() >= s) g.c.assign(r.deg() - s + 1, F.zero());
    while (r.deg() >= s) {
        int d = r.deg();
        // t tau^{d-s} * P has top term t * b^{q^{d-s}} tau^d
        ExtField::Vec t = F.mul(r.c[d], F.inv(F.frobenius(P.lead().c, d - s)));
        g.c[d - s] = F.add(g.c[d - s], t);
        for (int k = 0; k <= s; ++k) {
            if (F.is_zero(P.c[k])) continue;
            ExtField::Vec sub = F.mul(t, F.frobenius(P.c[k], d - s));
            r.c[d - s + k] = F.sub(r.c[d - s + k], sub);
        }
        r.normalize();
        if (r.deg() == d) throw std::logic_error("right_divmod: degree failed to drop");
    }
    g.normalize();
    return {g, r};
}

std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f0, const SkewPoly& P0) {
    require_same_tower(f0, P0, "left_divmod");
    if (P0.is_zero()) throw std::domain_error("left_divmod: division by zero");
    SkewPoly r = f0, P = P0;
    int j = align(r, P);
    const ExtField& F = r.field();
    int s = P.deg();
    SkewPoly g(r.T, j);
    if (r.deg() >= s) g.c.assign(r.deg() - s + 1, F.zero());
    while (r.deg() >= s) {
        int d = r.deg();
        // P * (t tau^{d-s}) has top term b * t^{q^s} tau^d
        ExtField::Vec t = F.frobenius(F.mul(F.inv(P.lead().c), r.c[d]), -s);
        g.c[d - s] = F.add(g.c[d - s], t);
        for (int k = 0; k <= s; ++k) {
            if (F.is_zero(P.c[k])) continue;
            ExtField::Vec sub = F.mul(P.c[k], F.frobenius(t, k));
            r.c[k + d - s] = F.sub(r.c[k + d - s], sub);
        }
        r.normalize();
        if (r.deg() == d) throw std::logic_error("left_divmod: degree failed to drop");
    }
    g.normalize();
    return {g, r};
}

SkewPoly right_mod(const SkewPoly& f, const SkewPoly& P) {
    return right_divmod(f, P).second;
}

SkewPoly right_gcd(const SkewPoly& f0, const SkewPoly& g0) {
    require_same_tower(f0, g0, "right_gcd");
    SkewPoly a = f0, b = g0;
    align(a, b);
    if (a.is_zero() && b.is_zero()) throw std::domain_error("right_gcd: both operands are zero");
    while (!b.is_zero()) {
        SkewPoly r = right_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FFElem evaluate(const SkewPoly& f, const FFElem& beta) {
    int blvl = f.T->level_of(beta.F);
    if (blvl % f.level != 0)
        throw std::invalid_argument("evaluate: argument level must contain the coefficient field");
    const ExtField& E = *beta.F;
    ExtField::Vec acc = E.zero();
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.field().is_zero(f.c[i])) continue;
        ExtField::Vec ci = f.T->embed(FFElem{&f.field(), f.c[i]}, blvl).c;
        acc = E.add(acc, E.mul(ci, E.frobenius(beta.c, i)));
    }
    return {beta.F, acc};
}

FFElem derivative(const SkewPoly& f) { return f.coeff(0); }

bool is_central(const SkewPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("is_central: n must be >= 1");
    const ExtField& F = f.field();
    for (int i = 0; i <= f.deg(); ++i) {
        if (F.is_zero(f.c[i])) continue;
        if (i % n != 0) return false;
        if (!F.in_base(f.c[i])) return false;
    }
    return true;
}

} // namespace dmcode
