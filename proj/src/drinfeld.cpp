#include "dmcode/drinfeld.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dmcode/errors.hpp"

namespace dmcode {

namespace {

std::vector<int> divisors_descending(int n) {
    std::vector<int> ds;
    for (int e = n; e >= 1; --e)
        if (n % e == 0) ds.push_back(e);
    return ds;
}

const ExtField* level1(const FieldTower* T) { return &T->level(1); }

// ---- polynomials in x with FPoly coefficients (shared by the char-poly and
// root-extraction code; the coefficient field is whatever the entries carry)

using BiPoly = std::vector<FPoly>;

void bp_trim(BiPoly& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

bool bp_eq(BiPoly a, BiPoly b) {
    bp_trim(a);
    bp_trim(b);
    return a == b;
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b, const ExtField* F) {
    if (a.empty() || b.empty()) return {};
    BiPoly r(a.size() + b.size() - 1, FPoly::zero(F));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    bp_trim(r);
    return r;
}

BiPoly bp_pow(const BiPoly& a, int e, const ExtField* F) {
    BiPoly r = {FPoly::one(F)};
    for (int i = 0; i < e; ++i) r = bp_mul(r, a, F);
    return r;
}

// p-th root of an A-coefficient: all exponents must be multiples of p and
// each scalar gets its Frobenius-inverse p-th root.
std::optional<FPoly> apoly_pth_root(const FPoly& f) {
    const ExtField* F = f.F;
    int p = F->base_ptr()->p();
    if (f.is_zero()) return FPoly::zero(F);
    FPoly r(F);
    for (int j = 0; j <= f.degree(); ++j) {
        uint8_t s = F->to_base(f.c[(size_t)j]);
        if (j % p != 0) {
            if (s != 0) return std::nullopt;
            continue;
        }
        if (s != 0) r.set_coeff(j / p, FFElem{F, F->from_base(F->base_ptr()->proot(s))});
    }
    return r;
}

std::optional<BiPoly> bp_pth_root(const BiPoly& B, const ExtField* F) {
    int p = F->base_ptr()->p();
    int D = (int)B.size() - 1;
    if (D < 0) return BiPoly{};
    if (D % p != 0) return std::nullopt;
    BiPoly h((size_t)(D / p) + 1, FPoly::zero(F));
    for (int i = 0; i <= D; ++i) {
        if (i % p != 0) {
            if (!B[(size_t)i].is_zero()) return std::nullopt;
            continue;
        }
        auto root = apoly_pth_root(B[(size_t)i]);
        if (!root) return std::nullopt;
        h[(size_t)(i / p)] = *root;
    }
    if (!bp_eq(bp_pow(h, p, F), B)) return std::nullopt;
    return h;
}

// e0-th root of a monic B for p not dividing e0, by coefficient matching
// from the leading term down: the x^{(e0-1)t + j} coefficient of h^{e0} is
// e0 h_j plus terms in already-determined higher coefficients.
std::optional<BiPoly> bp_unit_root(const BiPoly& B, int e0, const ExtField* F) {
    int D = (int)B.size() - 1;
    if (D < 0 || D % e0 != 0) return std::nullopt;
    if (!(B.back() == FPoly::one(F))) return std::nullopt;
    int t = D / e0;
    const Fq* fq = F->base_ptr();
    uint8_t e0s = fq->from_int(e0);
    if (e0s == 0) throw std::logic_error("bp_unit_root: e0 divisible by p");
    FFElem inv_e0{F, F->from_base(fq->inv(e0s))};

    BiPoly h((size_t)t + 1, FPoly::zero(F));
    h[(size_t)t] = FPoly::one(F);
    for (int j = t - 1; j >= 0; --j) {
        BiPoly cur = bp_pow(h, e0, F);
        int idx = (e0 - 1) * t + j;
        FPoly have = idx < (int)cur.size() ? cur[(size_t)idx] : FPoly::zero(F);
        FPoly want = idx < (int)B.size() ? B[(size_t)idx] : FPoly::zero(F);
        h[(size_t)j] = inv_e0 * (want - have);
    }
    if (!bp_eq(bp_pow(h, e0, F), B)) return std::nullopt;
    return h;
}

} // namespace

std::optional<std::vector<FPoly>> exact_eth_root(std::vector<FPoly> f, int e, const ExtField* F) {
    int p = F->base_ptr()->p();
    int e0 = e;
    while (e0 % p == 0) {
        auto r = bp_pth_root(f, F);
        if (!r) return std::nullopt;
        f = *r;
        e0 /= p;
    }
    if (e0 > 1) {
        auto r = bp_unit_root(f, e0, F);
        if (!r) return std::nullopt;
        f = *r;
    }
    return f;
}

// ---- module basics

DrinfeldModule::DrinfeldModule(const FieldTower* t, int n_, std::vector<ExtField::Vec> coeffs)
    : T(t), n(n_), g(std::move(coeffs)) {
    if (T == nullptr) throw std::invalid_argument("DrinfeldModule: null tower");
    if (n < 1 || !T->has_level(n))
        throw std::invalid_argument("DrinfeldModule: tower level " + std::to_string(n) + " not built");
    if (g.size() < 2) throw std::invalid_argument("DrinfeldModule: rank must be >= 1");
    const ExtField& E = T->level(n);
    for (const auto& v : g)
        if ((int)v.size() != E.degree())
            throw std::invalid_argument("DrinfeldModule: coefficient has wrong dimension");
    if (E.is_zero(g.back()))
        throw std::invalid_argument("DrinfeldModule: leading coefficient is zero");
}

DrinfeldModule::DrinfeldModule(const SkewPoly& f, int n_)
    : DrinfeldModule(f.T, n_, lift(f, n_).c) {}

FFElem DrinfeldModule::coeff(int i) const {
    const ExtField& E = field();
    if (i < 0 || i > rank()) return {&E, E.zero()};
    return {&E, g[(size_t)i]};
}

std::string DrinfeldModule::show() const {
    return "phi_T = " + phi_T().show();
}

SkewPoly phi_a(const DrinfeldModule& phi, const FPoly& a) {
    if (a.F != level1(phi.T))
        throw std::invalid_argument("phi_a: a must have level-1 coefficients");
    const ExtField& E = phi.field();
    SkewPoly pt = phi.phi_T();
    SkewPoly acc = SkewPoly::zero(phi.T, phi.n);
    for (int i = a.degree(); i >= 0; --i) {
        acc = skew_mul(acc, pt);
        uint8_t s = a.F->to_base(a.c[(size_t)i]);
        if (s != 0) acc = acc + SkewPoly::constant(phi.T, FFElem{&E, E.from_base(s)});
    }
    return acc;
}

FPoly a_characteristic(const DrinfeldModule& phi) {
    return min_poly_over_base(phi.coeff(0), level1(phi.T));
}

bool is_endomorphism(const DrinfeldModule& phi, const SkewPoly& u) {
    if (u.T != phi.T) throw std::invalid_argument("is_endomorphism: tower mismatch");
    if (phi.n % u.level != 0)
        throw std::invalid_argument("is_endomorphism: u lives above the module's field");
    SkewPoly pt = phi.phi_T();
    return skew_mul(u, pt) == skew_mul(pt, u);
}

// ---- motive

std::vector<FPoly> motive_coords(const DrinfeldModule& phi, const SkewPoly& m) {
    if (m.T != phi.T) throw std::invalid_argument("motive_coords: tower mismatch");
    if (phi.n % m.level != 0)
        throw std::invalid_argument("motive_coords: m lives above the module's field");
    const ExtField& E = phi.field();
    const int r = phi.rank();
    SkewPoly mm = lift(m, phi.n);

    std::vector<FPoly> W((size_t)std::max(r, mm.deg() + 1), FPoly::zero(&E));
    for (int i = 0; i <= mm.deg(); ++i)
        if (!E.is_zero(mm.c[(size_t)i]))
            W[(size_t)i] = FPoly::constant(FFElem{&E, mm.c[(size_t)i]});

    // tau^D = beta (T . tau^L) - sum_j beta g_j^{(q^L)} tau^{L+j}, L = D - r,
    // beta = (g_r^{q^L})^{-1}; k[T] coefficients ride along unchanged.
    for (int D = (int)W.size() - 1; D >= r; --D) {
        if (W[(size_t)D].is_zero()) continue;
        FPoly C = W[(size_t)D];
        W[(size_t)D] = FPoly::zero(&E);
        int L = D - r;
        ExtField::Vec beta = E.inv(E.frobenius(phi.g[(size_t)r], L));
        W[(size_t)L] = W[(size_t)L] + FFElem{&E, beta} * C.shifted(1);
        for (int j = 0; j < r; ++j) {
            if (E.is_zero(phi.g[(size_t)j])) continue;
            ExtField::Vec s = E.mul(beta, E.frobenius(phi.g[(size_t)j], L));
            W[(size_t)(L + j)] = W[(size_t)(L + j)] - FFElem{&E, s} * C;
        }
    }
    W.resize((size_t)r, FPoly::zero(&E));

    if (motive_expand(phi, W) != lift(m, phi.n))
        throw std::logic_error("motive_coords: re-expansion check failed");
    return W;
}

SkewPoly motive_expand(const DrinfeldModule& phi, const std::vector<FPoly>& coords) {
    const ExtField& E = phi.field();
    int maxdeg = -1;
    for (const auto& w : coords) maxdeg = std::max(maxdeg, w.degree());
    std::vector<SkewPoly> pows;
    pows.push_back(SkewPoly::one(phi.T, phi.n));
    for (int e = 1; e <= maxdeg; ++e) pows.push_back(skew_mul(pows.back(), phi.phi_T()));

    SkewPoly acc = SkewPoly::zero(phi.T, phi.n);
    for (size_t i = 0; i < coords.size(); ++i) {
        const FPoly& w = coords[i];
        for (int e = 0; e <= w.degree(); ++e) {
            if (E.is_zero(w.c[(size_t)e])) continue;
            SkewPoly term = skew_mul(SkewPoly::tau(phi.T, phi.n, (int)i), pows[(size_t)e]);
            acc = acc + skew_smul(FFElem{&E, w.c[(size_t)e]}, term);
        }
    }
    return acc;
}

std::vector<std::vector<FPoly>> motive_matrix(const DrinfeldModule& phi, const SkewPoly& u) {
    if (!is_endomorphism(phi, u))
        throw std::invalid_argument("motive_matrix: u is not an endomorphism");
    const int r = phi.rank();
    const ExtField& E = phi.field();
    std::vector<std::vector<FPoly>> M((size_t)r, std::vector<FPoly>((size_t)r, FPoly::zero(&E)));
    SkewPoly uu = lift(u, phi.n);
    for (int i = 0; i < r; ++i) {
        auto col = motive_coords(phi, skew_mul(SkewPoly::tau(phi.T, phi.n, i), uu));
        for (int j = 0; j < r; ++j) M[(size_t)j][(size_t)i] = col[(size_t)j];
    }
    return M;
}

std::vector<std::vector<FPoly>> s_phi_matrix(const DrinfeldModule& phi) {
    const int r = phi.rank();
    const ExtField& E = phi.field();
    std::vector<std::vector<FPoly>> S((size_t)r, std::vector<FPoly>((size_t)r, FPoly::zero(&E)));
    for (int j = 0; j + 1 < r; ++j) S[(size_t)(j + 1)][(size_t)j] = FPoly::one(&E);
    ExtField::Vec beta = E.inv(phi.g[(size_t)r]);
    // last column: coords of tau^r = beta(T - g_0) . 1 - sum_{j>=1} beta g_j . tau^j
    FPoly top(&E);
    top.set_coeff(1, FFElem{&E, beta});
    top.set_coeff(0, FFElem{&E, E.neg(E.mul(beta, phi.g[0]))});
    S[0][(size_t)(r - 1)] = top;
    for (int j = 1; j < r; ++j)
        S[(size_t)j][(size_t)(r - 1)] =
            FPoly::constant(FFElem{&E, E.neg(E.mul(beta, phi.g[(size_t)j]))});
    return S;
}

std::vector<std::vector<FPoly>> motive_matrix_by_recurrence(const DrinfeldModule& phi,
                                                            const SkewPoly& u) {
    const int r = phi.rank();
    const ExtField& E = phi.field();
    auto S = s_phi_matrix(phi);
    std::vector<FPoly> col = motive_coords(phi, u);
    std::vector<std::vector<FPoly>> M((size_t)r, std::vector<FPoly>((size_t)r, FPoly::zero(&E)));
    for (int j = 0; j < r; ++j) M[(size_t)j][0] = col[(size_t)j];
    for (int i = 1; i < r; ++i) {
        std::vector<FPoly> next((size_t)r, FPoly::zero(&E));
        for (int j = 0; j < r; ++j) {
            FPoly acc = FPoly::zero(&E);
            for (int k = 0; k < r; ++k)
                acc = acc + S[(size_t)j][(size_t)k] * col[(size_t)k].map_coeffs_frobenius(1);
            next[(size_t)j] = acc;
        }
        col = next;
        for (int j = 0; j < r; ++j) M[(size_t)j][(size_t)i] = col[(size_t)j];
    }
    return M;
}

// ---- characteristic polynomials

std::vector<FPoly> berkowitz_char_poly(const std::vector<std::vector<FPoly>>& M) {
    const int n = (int)M.size();
    if (n == 0) throw std::invalid_argument("berkowitz_char_poly: empty matrix");
    const ExtField* F = nullptr;
    for (const auto& row : M) {
        if ((int)row.size() != n) throw std::invalid_argument("berkowitz_char_poly: not square");
        for (const auto& e : row)
            if (e.F != nullptr) { F = e.F; break; }
    }
    if (F == nullptr) throw std::invalid_argument("berkowitz_char_poly: no coefficient field");

    // big-endian coefficient vector, p[0] the leading 1
    std::vector<FPoly> p = {FPoly::one(F), -M[0][0]};
    for (int m = 2; m <= n; ++m) {
        std::vector<FPoly> t((size_t)m + 1, FPoly::zero(F));
        t[0] = FPoly::one(F);
        t[1] = -M[(size_t)(m - 1)][(size_t)(m - 1)];
        std::vector<FPoly> w((size_t)(m - 1), FPoly::zero(F));
        for (int i = 0; i < m - 1; ++i) w[(size_t)i] = M[(size_t)i][(size_t)(m - 1)];
        for (int k = 2; k <= m; ++k) {
            FPoly dot = FPoly::zero(F);
            for (int i = 0; i < m - 1; ++i)
                dot = dot + M[(size_t)(m - 1)][(size_t)i] * w[(size_t)i];
            t[(size_t)k] = -dot;
            if (k < m) {
                std::vector<FPoly> nw((size_t)(m - 1), FPoly::zero(F));
                for (int i = 0; i < m - 1; ++i) {
                    FPoly acc = FPoly::zero(F);
                    for (int j = 0; j < m - 1; ++j)
                        acc = acc + M[(size_t)i][(size_t)j] * w[(size_t)j];
                    nw[(size_t)i] = acc;
                }
                w = nw;
            }
        }
        std::vector<FPoly> np((size_t)m + 1, FPoly::zero(F));
        for (int i = 0; i <= m; ++i) {
            int klo = std::max(0, i - (int)p.size() + 1);
            for (int k = klo; k <= std::min(i, m); ++k)
                np[(size_t)i] = np[(size_t)i] + t[(size_t)k] * p[(size_t)(i - k)];
        }
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

FPoly CharPoly::coeff(int i) const {
    if (i >= 0 && i < (int)c.size()) return c[(size_t)i];
    if (c.empty()) throw std::logic_error("CharPoly: uninitialized");
    return FPoly::zero(c[0].F);
}

FPoly CharPoly::reduce_mod(const FPoly& prime, const FieldTower& T) const {
    const ExtField& R = T.residue_field(prime);
    FFElem tbar{&R, R.gen()};
    FPoly out(&R);
    for (int i = 0; i < (int)c.size(); ++i) {
        const FPoly& ci = c[(size_t)i];
        FFElem acc{&R, R.zero()};
        for (int j = ci.degree(); j >= 0; --j) {
            acc = acc * tbar;
            uint8_t s = ci.F->to_base(ci.c[(size_t)j]);
            if (s != 0) acc = acc + FFElem{&R, R.from_base(s)};
        }
        out.set_coeff(i, acc);
    }
    out.normalize();
    return out;
}

std::string CharPoly::show(const std::string& xsym, const std::string& tsym) const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (c[(size_t)i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string coeffs = c[(size_t)i].show(tsym);
        bool needs_parens = coeffs.find(' ') != std::string::npos;
        if (i == 0) {
            s += coeffs;
        } else {
            std::string xs = i == 1 ? xsym : xsym + "^" + std::to_string(i);
            if (coeffs == "1")
                s += xs;
            else
                s += (needs_parens ? "(" + coeffs + ")" : coeffs) + xs;
        }
    }
    return s.empty() ? "0" : s;
}

CharPoly char_poly(const DrinfeldModule& phi, const SkewPoly& u) {
    auto U = motive_matrix(phi, u);
    auto p = berkowitz_char_poly(U);
    const ExtField* A1 = level1(phi.T);
    const ExtField& E = phi.field();
    CharPoly P;
    P.c.reserve(p.size());
    for (const auto& ci : p) {
        FPoly ai(A1);
        for (int j = 0; j <= ci.degree(); ++j) {
            const ExtField::Vec& v = ci.c[(size_t)j];
            if (!E.in_base(v))
                throw std::logic_error("char_poly: coefficient escaped A = F_q[T]");
            uint8_t s = E.to_base(v);
            if (s != 0) ai.set_coeff(j, FFElem{A1, A1->from_base(s)});
        }
        P.c.push_back(ai);
    }
    if (!(P.c.back() == FPoly::one(A1)))
        throw std::logic_error("char_poly: result is not monic");
    return P;
}

CharPoly frobenius_char_poly(const DrinfeldModule& phi) {
    CharPoly P = char_poly(phi, SkewPoly::tau(phi.T, phi.n, phi.n));
    FPoly qchar = a_characteristic(phi);
    if (phi.n % qchar.degree() != 0)
        throw std::logic_error("frobenius_char_poly: characteristic degree does not divide n");
    const ExtField* A1 = level1(phi.T);
    FPoly qpow = FPoly::one(A1);
    for (int i = 0; i < phi.n / qchar.degree(); ++i) qpow = qpow * qchar;
    FPoly c0 = P.constant_term();
    bool ok = !c0.is_zero() && c0.degree() == qpow.degree();
    if (ok) ok = (c0.lead() * qpow) == c0;
    if (!ok)
        throw std::logic_error("frobenius_char_poly: P(0) is not a unit multiple of the "
                               "characteristic power");
    return P;
}

std::pair<CharPoly, int> minimal_poly_pi(const DrinfeldModule& phi) {
    CharPoly P = frobenius_char_poly(phi);
    const ExtField* A1 = level1(phi.T);
    for (int e : divisors_descending(phi.rank())) {
        if (e == 1) break;
        auto h = exact_eth_root(P.c, e, A1);
        if (h) {
            CharPoly m;
            m.c = *h;
            return {m, m.degree()};
        }
    }
    return {P, P.degree()};
}

FPoly fmat_char_poly(const FMat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("fmat_char_poly: not square");
    std::vector<std::vector<FPoly>> B((size_t)M.rows,
                                      std::vector<FPoly>((size_t)M.cols, FPoly::zero(M.F)));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            B[(size_t)i][(size_t)j] = FPoly::constant(M.elem(i, j));
    auto p = berkowitz_char_poly(B);
    FPoly out(M.F);
    for (int i = 0; i < (int)p.size(); ++i) out.set_coeff(i, p[(size_t)i].coeff(0));
    out.normalize();
    return out;
}

// ---- torsion

FqMat torsion_kernel(const DrinfeldModule& phi, const FPoly& a, int level) {
    if (a.F != level1(phi.T))
        throw std::invalid_argument("torsion_kernel: a must be over level 1");
    if (a.is_zero()) throw std::invalid_argument("torsion_kernel: a = 0");
    if (level % phi.n != 0)
        throw std::invalid_argument("torsion_kernel: level must be a multiple of n");
    const ExtField& E = phi.T->splitting_level(phi.n, level / phi.n);
    const int N = E.degree();

    SkewPoly f = phi_a(phi, a);
    std::vector<ExtField::Vec> cs;
    for (int i = 0; i <= f.deg(); ++i)
        cs.push_back(phi.T->embed(FFElem{&phi.field(), f.c[(size_t)i]}, level).c);

    FqMat M(E.base_ptr(), N, N);
    for (int i = 0; i <= f.deg(); ++i) {
        if (E.is_zero(cs[(size_t)i])) continue;
        const FqMat& Fr = E.frob_matrix(i % N);
        for (int j = 0; j < N; ++j) {
            ExtField::Vec col(Fr.rows);
            for (int rr = 0; rr < N; ++rr) col[(size_t)rr] = Fr.at(rr, j);
            ExtField::Vec t = E.mul(cs[(size_t)i], col);
            for (int rr = 0; rr < N; ++rr)
                M.at(rr, j) = E.base_ptr()->add(M.at(rr, j), t[(size_t)rr]);
        }
    }
    return kernel_basis(M);
}

int torsion_kernel_dim(const DrinfeldModule& phi, const FPoly& a, int level) {
    return torsion_kernel(phi, a, level).rows;
}

TorsionSpace torsion_space(const DrinfeldModule& phi, const FPoly& prime) {
    const ExtField* A1 = level1(phi.T);
    if (prime.F != A1) throw std::invalid_argument("torsion_space: prime must be over level 1");
    if (!prime.is_monic() || !fpoly_is_irreducible(prime))
        throw std::invalid_argument("torsion_space: modulus is not a monic irreducible");
    if (prime == a_characteristic(phi))
        throw std::invalid_argument("torsion_space: prime equals the A-characteristic");

    const int r = phi.rank();
    const int d = prime.degree();
    const int target = r * d;
    const int e_cap = 16 * r * d;

    // candidate relative degrees: the order of the Frobenius on phi[p]
    // divides the order of x modulo (m_phi mod p), when the iteration finds it
    std::vector<int> candidates;
    {
        FPoly mbar = minimal_poly_pi(phi).first.reduce_mod(prime, *phi.T);
        if (mbar.constant_term().is_zero())
            throw std::logic_error("torsion_space: Frobenius not invertible mod p");
        const ExtField* R = mbar.F;
        FPoly cur = fpoly_mod(FPoly::x(R), mbar);
        int order = 0;
        for (int k = 1; k <= e_cap; ++k) {
            if (cur == FPoly::one(R)) { order = k; break; }
            cur = fpoly_mod(cur.shifted(1), mbar);
        }
        if (order > 0) {
            for (int e = 1; e <= order; ++e)
                if (order % e == 0) candidates.push_back(e);
        } else {
            for (int e = 1; e <= e_cap; ++e) candidates.push_back(e);
        }
    }

    TorsionSpace ts;
    ts.phi = phi;
    ts.prime = prime;
    ts.residue = &phi.T->residue_field(prime);

    FqMat ker;
    int N = 0;
    for (int e : candidates) {
        int cand = phi.n * e;
        FqMat k = torsion_kernel(phi, prime, cand);   // may throw SplittingLevelNotFound
        if (k.rows == target) {
            N = cand;
            ker = std::move(k);
            break;
        }
    }
    if (N == 0)
        throw SplittingLevelNotFound("torsion_space: no splitting level within 16 n r deg(p)");

    ts.level = N;
    ts.E = &phi.T->level(N);
    const ExtField& E = *ts.E;

    SkewPoly pt = phi.phi_T();
    RowReducer span(E.base_ptr(), N);
    for (int slot = 0; slot < r; ++slot) {
        int pick = -1;
        for (int i = 0; i < ker.rows; ++i) {
            ExtField::Vec v(ker.row(i), ker.row(i) + N);
            if (!span.contains(v)) { pick = i; break; }
        }
        if (pick < 0) throw std::logic_error("torsion_space: module structure collapsed");
        ExtField::Vec v(ker.row(pick), ker.row(pick) + N);
        ts.generators.push_back(v);
        for (int t = 0; t < d; ++t) {
            if (!span.add(v)) throw std::logic_error("torsion_space: dependent T-orbit");
            ts.fq_basis.push_back(v);
            if (t + 1 < d) v = evaluate(pt, FFElem{&E, v}).c;
        }
    }
    if (span.dim() != target) throw std::logic_error("torsion_space: basis incomplete");

    ts.coords = FqMat(E.base_ptr(), N, target);
    for (int j = 0; j < target; ++j)
        for (int i = 0; i < N; ++i) ts.coords.at(i, j) = ts.fq_basis[(size_t)j][(size_t)i];
    return ts;
}

FMat iota_p(const TorsionSpace& ts, const SkewPoly& u) {
    if (!is_endomorphism(ts.phi, u))
        throw std::invalid_argument("iota_p: u is not an endomorphism");
    const int r = ts.r(), d = ts.d();
    const ExtField& E = *ts.E;
    FMat M(ts.residue, r, r);
    for (int i = 0; i < r; ++i) {
        ExtField::Vec w = evaluate(u, FFElem{&E, ts.generators[(size_t)i]}).c;
        auto y = solve(ts.coords, w);
        if (!y) throw std::logic_error("iota_p: image left the torsion space");
        for (int j = 0; j < r; ++j) {
            ExtField::Vec cell((size_t)d, 0);
            for (int t = 0; t < d; ++t) cell[(size_t)t] = (*y)[(size_t)(j * d + t)];
            M.at(j, i) = cell;
        }
    }
    return M;
}

bool acts_invertibly(const DrinfeldModule& phi, const FPoly& prime, const SkewPoly& u,
                     InvertMode mode, const TorsionSpace* ts) {
    bool fast = false, slow = false;
    if (mode != InvertMode::Slow) {
        FPoly c0 = char_poly(phi, u).constant_term();
        fast = !fpoly_mod(c0, prime).is_zero();
        if (mode == InvertMode::Fast) return fast;
    }
    TorsionSpace local;
    if (ts == nullptr) {
        local = torsion_space(phi, prime);
        ts = &local;
    }
    slow = fmat_rank(iota_p(*ts, u)) == phi.rank();
    if (mode == InvertMode::Both && fast != slow)
        throw std::logic_error("acts_invertibly: fast and slow paths disagree");
    return slow;
}

} // namespace dmcode
