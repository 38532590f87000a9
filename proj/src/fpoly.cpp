#include "dmcode/fpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dmcode/errors.hpp"

namespace dmcode {

namespace {

// Minimal unsigned bignum for CZ exponents (|E|-1)/2; little-endian limbs.
struct BigU {
    std::vector<uint64_t> w{0};

    static BigU from(uint64_t v) { return BigU{{v}}; }
    void mul_small(uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& x : w) {
            unsigned __int128 t = (unsigned __int128)x * m + carry;
            x = (uint64_t)t;
            carry = t >> 64;
        }
        if (carry) w.push_back((uint64_t)carry);
    }
    void sub1() {
        for (auto& x : w) {
            if (x--) break;        // no borrow once a limb was nonzero
        }
        while (w.size() > 1 && w.back() == 0) w.pop_back();
    }
    void div2() {
        uint64_t carry = 0;
        for (int i = (int)w.size() - 1; i >= 0; --i) {
            uint64_t nc = w[i] & 1;
            w[i] = (w[i] >> 1) | (carry << 63);
            carry = nc;
        }
        while (w.size() > 1 && w.back() == 0) w.pop_back();
    }
    int bits() const {
        int n = (int)w.size() - 1;
        uint64_t top = w[n];
        int b = 0;
        while (top) { ++b; top >>= 1; }
        return n * 64 + b;
    }
    bool bit(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
};

} // namespace

FPoly::FPoly(const ExtField* f, std::vector<ExtField::Vec> coeffs) : F(f), c(std::move(coeffs)) {
    for (auto& v : c)
        if ((int)v.size() != f->degree()) throw std::invalid_argument("FPoly: coefficient size mismatch");
    normalize();
}

FPoly FPoly::one(const ExtField* f) {
    FPoly p(f);
    p.c.push_back(f->one());
    return p;
}

FPoly FPoly::x(const ExtField* f) {
    FPoly p(f);
    p.c.push_back(f->zero());
    p.c.push_back(f->one());
    return p;
}

FPoly FPoly::constant(const FFElem& a) {
    FPoly p(a.F);
    if (!a.is_zero()) p.c.push_back(a.c);
    return p;
}

FPoly FPoly::from_base_ints(const ExtField* f, const std::vector<long>& coeffs) {
    FPoly p(f);
    for (long v : coeffs) p.c.push_back(f->from_base(f->base().from_int(v)));
    p.normalize();
    return p;
}

void FPoly::normalize() {
    while (!c.empty() && F->is_zero(c.back())) c.pop_back();
}

bool FPoly::is_monic() const {
    return !c.empty() && c.back() == F->one();
}

FFElem FPoly::coeff(int i) const {
    if (i < 0 || i >= (int)c.size()) return {F, F->zero()};
    return {F, c[i]};
}

FFElem FPoly::lead() const {
    if (c.empty()) return {F, F->zero()};
    return {F, c.back()};
}

void FPoly::set_coeff(int i, const FFElem& a) {
    if (a.F != F) throw std::invalid_argument("FPoly::set_coeff: field mismatch");
    if (i >= (int)c.size()) c.resize(i + 1, F->zero());
    c[i] = a.c;
    normalize();
}

FPoly FPoly::monic() const {
    if (is_zero()) throw std::domain_error("FPoly::monic: zero polynomial");
    if (is_monic()) return *this;
    FFElem li = lead().inv();
    FPoly r(F);
    r.c.reserve(c.size());
    for (auto& v : c) r.c.push_back(F->mul(li.c, v));
    return r;
}

FPoly FPoly::shifted(int k) const {
    if (is_zero()) return *this;
    FPoly r(F);
    r.c.assign(k, F->zero());
    r.c.insert(r.c.end(), c.begin(), c.end());
    return r;
}

FPoly FPoly::derivative() const {
    FPoly r(F);
    for (int i = 1; i < (int)c.size(); ++i) {
        ExtField::Vec v = F->zero();
        uint8_t s = F->base().from_int(i);
        v = F->scalar_mul(s, c[i]);
        r.c.push_back(v);
    }
    r.normalize();
    return r;
}

FFElem FPoly::eval(const FFElem& at) const {
    if (at.F != F) throw std::invalid_argument("FPoly::eval: field mismatch");
    FFElem acc{F, F->zero()};
    for (int i = (int)c.size() - 1; i >= 0; --i)
        acc = FFElem{F, F->add(F->mul(acc.c, at.c), c[i])};
    return acc;
}

FPoly FPoly::map_coeffs_frobenius(long i) const {
    FPoly r(F);
    r.c.reserve(c.size());
    for (auto& v : c) r.c.push_back(F->frobenius(v, i));
    r.normalize();
    return r;
}

FPoly operator+(const FPoly& a, const FPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("FPoly+: field mismatch");
    FPoly r(a.F);
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        ExtField::Vec v = i < a.c.size() ? a.c[i] : a.F->zero();
        if (i < b.c.size()) v = a.F->add(v, b.c[i]);
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

FPoly operator-(const FPoly& a, const FPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("FPoly-: field mismatch");
    FPoly r(a.F);
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        ExtField::Vec v = i < a.c.size() ? a.c[i] : a.F->zero();
        if (i < b.c.size()) v = a.F->sub(v, b.c[i]);
        r.c.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

FPoly FPoly::operator-() const {
    FPoly r(F);
    for (auto& v : c) r.c.push_back(F->neg(v));
    return r;
}

FPoly operator*(const FPoly& a, const FPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("FPoly*: field mismatch");
    if (a.is_zero() || b.is_zero()) return FPoly::zero(a.F);
    const ExtField& E = *a.F;
    FPoly r(a.F);
    r.c.assign(a.c.size() + b.c.size() - 1, E.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (E.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (E.is_zero(b.c[j])) continue;
            r.c[i + j] = E.add(r.c[i + j], E.mul(a.c[i], b.c[j]));
        }
    }
    r.normalize();
    return r;
}

FPoly operator*(const FFElem& s, const FPoly& a) {
    if (s.F != a.F) throw std::invalid_argument("FPoly scalar*: field mismatch");
    FPoly r(a.F);
    for (auto& v : a.c) r.c.push_back(a.F->mul(s.c, v));
    r.normalize();
    return r;
}

bool operator==(const FPoly& a, const FPoly& b) {
    return a.F == b.F && a.c == b.c;
}

std::string FPoly::show(const std::string& var, const std::string& csym) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (F->is_zero(c[i])) continue;
        if (!s.empty()) s += " + ";
        std::string cs = F->show(c[i], csym);
        bool unit = (cs == "1");
        if (i == 0) {
            s += cs;
        } else {
            if (!unit) s += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<FPoly, FPoly> fpoly_divmod(const FPoly& f, const FPoly& g) {
    if (f.F != g.F) throw std::invalid_argument("fpoly_divmod: field mismatch");
    if (g.is_zero()) throw std::domain_error("fpoly_divmod: division by zero polynomial");
    const ExtField& E = *f.F;
    int dg = g.degree();
    FPoly rem = f, quo(f.F);
    if (f.degree() >= dg) quo.c.assign(f.degree() - dg + 1, E.zero());
    ExtField::Vec li = E.inv(g.c.back());
    for (int i = rem.degree(); i >= dg; --i) {
        if ((int)rem.c.size() <= i || E.is_zero(rem.c[i])) continue;
        ExtField::Vec q = E.mul(rem.c[i], li);
        quo.c[i - dg] = q;
        for (int j = 0; j <= dg; ++j)
            rem.c[i - dg + j] = E.sub(rem.c[i - dg + j], E.mul(q, g.c[j]));
    }
    quo.normalize();
    rem.normalize();
    return {quo, rem};
}

FPoly fpoly_mod(const FPoly& f, const FPoly& g) { return fpoly_divmod(f, g).second; }

FPoly fpoly_div_exact(const FPoly& f, const FPoly& g) {
    auto [q, r] = fpoly_divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("fpoly_div_exact: division not exact");
    return q;
}

FPoly fpoly_gcd(FPoly a, FPoly b) {
    if (a.F != b.F) throw std::invalid_argument("fpoly_gcd: field mismatch");
    while (!b.is_zero()) {
        FPoly r = fpoly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FPoly fpoly_pow_mod(const FPoly& base, uint64_t e, const FPoly& mod) {
    FPoly acc = FPoly::one(base.F);
    FPoly b = fpoly_mod(base, mod);
    while (e) {
        if (e & 1) acc = fpoly_mod(acc * b, mod);
        b = fpoly_mod(b * b, mod);
        e >>= 1;
    }
    return acc;
}

namespace {

FPoly pow_mod_big(const FPoly& base, const BigU& e, const FPoly& mod) {
    FPoly acc = FPoly::one(base.F);
    FPoly b = fpoly_mod(base, mod);
    int nb = e.bits();
    for (int i = nb - 1; i >= 0; --i) {
        acc = fpoly_mod(acc * acc, mod);
        if (e.bit(i)) acc = fpoly_mod(acc * b, mod);
    }
    return acc;
}

} // namespace

FPoly fpoly_field_power_mod(const FPoly& base, int t, const FPoly& mod) {
    // x -> x^{|F|^t} = t*degree(F) applications of x -> x^q
    FPoly r = fpoly_mod(base, mod);
    int steps = t * base.F->degree();
    uint64_t q = (uint64_t)base.F->base().q();
    for (int i = 0; i < steps; ++i) r = fpoly_pow_mod(r, q, mod);
    return r;
}

bool fpoly_is_irreducible(const FPoly& f0) {
    int d = f0.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    FPoly f = f0.monic();
    const FPoly X = FPoly::x(f.F);
    FPoly Xt = X;
    for (int t = 1; t <= d; ++t) {
        Xt = fpoly_field_power_mod(Xt, 1, f);
        if (2 * t <= d) {
            FPoly g = fpoly_gcd(Xt - X, f);
            if (g.degree() > 0) return false;     // factor of degree dividing t
        }
    }
    return Xt == fpoly_mod(X, f);
}

namespace {

// Recursive equal-degree-ish splitting of a product of distinct linear factors.
void split_linear(const FPoly& g, std::vector<FFElem>& out, std::mt19937_64& rng) {
    const ExtField& E = *g.F;
    int d = g.degree();
    if (d <= 0) return;
    if (d == 1) {
        FPoly m = g.monic();
        out.push_back(FFElem{g.F, E.neg(m.c[0])});
        return;
    }
    const FPoly X = FPoly::x(g.F);
    for (int attempt = 0; attempt < 200; ++attempt) {
        ExtField::Vec dv(E.degree());
        for (auto& x : dv) x = (uint8_t)(rng() % E.base().q());
        FPoly h(g.F);
        if (E.base().p() == 2) {
            // trace splitting: T(delta*x) = sum (delta*x)^{2^i},  |E| = 2^K
            int K = E.degree() * E.base().m();
            FPoly y(g.F);
            y.c.assign(2, E.zero());
            y.c[1] = dv;
            y.normalize();
            if (y.is_zero()) continue;
            FPoly acc = fpoly_mod(y, g), cur = acc;
            for (int i = 1; i < K; ++i) {
                cur = fpoly_mod(cur * cur, g);
                acc = acc + cur;
            }
            h = acc;
        } else {
            // (x + delta)^{(|E|-1)/2} - 1
            BigU e = BigU::from(1);
            for (int i = 0; i < E.degree(); ++i) e.mul_small((uint64_t)E.base().q());
            e.sub1();
            e.div2();
            FPoly xd = X + FPoly::constant(FFElem{g.F, dv});
            h = pow_mod_big(xd, e, g) - FPoly::one(g.F);
        }
        FPoly g1 = fpoly_gcd(h, g);
        if (g1.degree() > 0 && g1.degree() < d) {
            split_linear(g1, out, rng);
            split_linear(fpoly_div_exact(g.monic(), g1), out, rng);
            return;
        }
    }
    throw std::runtime_error("fpoly_roots: splitting failed to converge");
}

} // namespace

std::vector<FFElem> fpoly_roots(const FPoly& f0, uint64_t seed) {
    if (f0.is_zero()) throw std::domain_error("fpoly_roots: zero polynomial");
    FPoly f = f0.monic();
    // squarefree part, then the product of linear factors
    FPoly fp = f.derivative();
    if (!fp.is_zero()) {
        FPoly g = fpoly_gcd(f, fp);
        if (g.degree() > 0) f = fpoly_div_exact(f, g);
    } else if (f.degree() > 0) {
        // f = h(x^p); every root has multiplicity; reduce via radical steps
        // (rare path: fall back to gcd with x^{|E|} - x below which is separable)
    }
    const FPoly X = FPoly::x(f.F);
    FPoly xq = fpoly_field_power_mod(X, 1, f);
    FPoly lin = fpoly_gcd(xq - X, f);
    std::vector<FFElem> out;
    std::mt19937_64 rng(seed ^ (uint64_t)f.degree());
    split_linear(lin, out, rng);
    std::sort(out.begin(), out.end(), [](const FFElem& a, const FFElem& b) {
        // index order, compared coordinate-wise so huge fields cannot overflow
        for (int i = (int)a.c.size() - 1; i >= 0; --i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    return out;
}

namespace {

FPoly poly_from_index(const ExtField* F, int degree, uint64_t idx) {
    // monic; coefficient i is the base-card digit i of idx (field element index)
    FPoly f(F);
    f.c.reserve(degree + 1);
    uint64_t card = F->card();
    for (int i = 0; i < degree; ++i) {
        f.c.push_back(F->from_index(idx % card));
        idx /= card;
    }
    f.c.push_back(F->one());
    return f;
}

// Candidate count for a lex scan; saturates instead of overflowing.
uint64_t scan_span(const ExtField* F, int degree, uint64_t cap) {
    double lg = (double)degree * F->degree() * std::log2((double)F->base().q());
    if (lg > 62) return cap;
    uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= F->card();
    return std::min(count, cap);
}

} // namespace

FPoly lex_first_irreducible(const ExtField* F, int degree, uint64_t offset) {
    if (degree < 1) throw std::invalid_argument("lex_first_irreducible: degree must be >= 1");
    // At large degrees only the low-index slice is scanned; the first
    // irreducible always sits far below the cap in practice.
    uint64_t span = scan_span(F, degree, (uint64_t)1 << 22);
    uint64_t start = offset % span;
    for (uint64_t k = 0; k < span; ++k) {
        FPoly f = poly_from_index(F, degree, (start + k) % span);
        if (fpoly_is_irreducible(f)) return f;
    }
    throw IrreducibleSearchExhausted("lex_first_irreducible: no candidate of degree " + std::to_string(degree));
}

FPoly random_irreducible(const ExtField* F, int degree, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200 * degree + 200; ++attempt) {
        FPoly f(F);
        f.c.reserve(degree + 1);
        for (int i = 0; i < degree; ++i) {
            ExtField::Vec v(F->degree());
            for (auto& x : v) x = (uint8_t)(rng() % F->base().q());
            f.c.push_back(std::move(v));
        }
        f.c.push_back(F->one());
        if (fpoly_is_irreducible(f)) return f;
    }
    throw IrreducibleSearchExhausted("random_irreducible: exhausted attempts at degree " + std::to_string(degree));
}

std::vector<FPoly> monic_irreducibles(const ExtField* F, int degree) {
    if (degree < 1) throw std::invalid_argument("monic_irreducibles: degree must be >= 1");
    double lg = (double)degree * F->degree() * std::log2((double)F->base().q());
    if (lg > 24) throw BudgetExceeded("monic_irreducibles: |F|^degree exceeds 2^24");
    uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= F->card();
    std::vector<FPoly> out;
    for (uint64_t idx = 0; idx < count; ++idx) {
        FPoly f = poly_from_index(F, degree, idx);
        if (fpoly_is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

FPoly min_poly_over_base(const FFElem& a, const ExtField* coeff_field) {
    const ExtField& E = *a.F;
    const Fq* Fb = E.base_ptr();
    if (coeff_field->base_ptr() != Fb)
        throw std::invalid_argument("min_poly_over_base: base field mismatch");
    RowReducer rr(Fb, E.degree());
    std::vector<ExtField::Vec> pows;
    ExtField::Vec cur = E.one();
    while (true) {
        if (!rr.add(cur)) {
            auto comb = rr.express(cur);
            // cur = a^t depends on lower powers: min poly = x^t - sum c_i x^i
            FPoly m(coeff_field);
            int t = (int)pows.size();
            m.c.assign(t + 1, coeff_field->zero());
            for (int i = 0; i < t; ++i)
                m.c[i] = coeff_field->from_base(Fb->neg((*comb)[i]));
            m.c[t] = coeff_field->one();
            m.normalize();
            return m;
        }
        pows.push_back(cur);
        cur = E.mul(cur, a.c);
    }
}

FMat fpoly_eval_fmat(const FPoly& f, const FMat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("fpoly_eval_fmat: matrix not square");
    if (f.F != M.F) throw std::invalid_argument("fpoly_eval_fmat: field mismatch");
    FMat acc(M.F, M.rows, M.rows);
    for (int i = f.degree(); i >= 0; --i) {
        acc = fmat_mul(acc, M);
        FFElem ci = f.coeff(i);
        for (int j = 0; j < M.rows; ++j) acc.at(j, j) = M.F->add(acc.at(j, j), ci.c);
    }
    return acc;
}

} // namespace dmcode
