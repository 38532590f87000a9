#ifndef DMCODE_DRINFELD_HPP
#define DMCODE_DRINFELD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmcode/fpoly.hpp"
#include "dmcode/skew.hpp"

namespace dmcode {

// Drinfeld A-module of rank r over k = F_{q^n}, A = F_q[T], determined by
// phi_T = g_0 + g_1 tau + ... + g_r tau^r with g_r != 0.
struct DrinfeldModule {
    const FieldTower* T = nullptr;
    int n = 1;
    std::vector<ExtField::Vec> g;      // coefficients at level n, g.back() != 0

    DrinfeldModule() = default;
    DrinfeldModule(const FieldTower* t, int n_, std::vector<ExtField::Vec> coeffs);
    // Coefficients of f become phi_T; f's level must divide n.
    DrinfeldModule(const SkewPoly& f, int n_);

    int rank() const { return (int)g.size() - 1; }
    const ExtField& field() const { return T->level(n); }
    SkewPoly phi_T() const { return SkewPoly(T, n, g); }
    FFElem coeff(int i) const;

    std::string show() const;
};

// Image of a in A = F_q[T] under phi (a has level-1 coefficients).
SkewPoly phi_a(const DrinfeldModule& phi, const FPoly& a);

// Monic generator of ker(gamma: A -> k), gamma(T) = g_0; equals the minimal
// polynomial of g_0 over F_q, or T when g_0 = 0.
FPoly a_characteristic(const DrinfeldModule& phi);

// u commutes with phi_T (u's level must divide n).
bool is_endomorphism(const DrinfeldModule& phi, const SkewPoly& u);

// The motive of phi is R = k{tau} viewed as a k[T]-module: c in k acts by
// left multiplication, T by right multiplication by phi_T.  It is free with
// basis {1, tau, ..., tau^{r-1}}.  motive_coords rewrites m in that basis;
// coordinates are polynomials in T over k = level n.
std::vector<FPoly> motive_coords(const DrinfeldModule& phi, const SkewPoly& m);

// Inverse of motive_coords: sum_i coords[i](T) . tau^i expanded back into
// k{tau} (T^e . tau^i = tau^i phi_T^e).
SkewPoly motive_expand(const DrinfeldModule& phi, const std::vector<FPoly>& coords);

// Matrix of the right-multiplication action of u on the motive, in the basis
// {tau^i}: column i = motive_coords(tau^i u).  Requires u in End(phi).
std::vector<std::vector<FPoly>> motive_matrix(const DrinfeldModule& phi, const SkewPoly& u);

// Rewrite matrix S: coords(tau . m) = S . coords(m)^{(q)}, where ^{(q)} is
// the coefficient-wise Frobenius twist of the k[T] entries.  The motive
// matrix of tau^N is the twisted product S S^{(q)} ... S^{(q^{N-1})}.
std::vector<std::vector<FPoly>> s_phi_matrix(const DrinfeldModule& phi);
std::vector<std::vector<FPoly>> motive_matrix_by_recurrence(const DrinfeldModule& phi,
                                                            const SkewPoly& u);

// Monic polynomial in x with coefficients in A = F_q[T] (over the degree-1
// tower level), little-endian in x.
struct CharPoly {
    std::vector<FPoly> c;

    int degree() const { return (int)c.size() - 1; }
    FPoly coeff(int i) const;
    FPoly constant_term() const { return coeff(0); }
    bool operator==(const CharPoly& o) const { return c == o.c; }
    bool operator!=(const CharPoly& o) const { return !(*this == o); }

    // Coefficient-wise reduction mod a prime of A; result lives over the
    // tower's residue field A/(prime).
    FPoly reduce_mod(const FPoly& prime, const FieldTower& T) const;

    std::string show(const std::string& xsym = "x", const std::string& tsym = "T") const;
};

// Division-free characteristic polynomial det(x I - M) over any commutative
// coefficient ring presented as FPoly entries (k[T] matrices and, with
// degree-0 entries, matrices over a residue field).  Little-endian in x.
std::vector<FPoly> berkowitz_char_poly(const std::vector<std::vector<FPoly>>& M);

// Exact e-th root of a polynomial in x with FPoly coefficients over F, if one
// exists.  Characteristic parts are peeled with coefficient p-th roots, the
// rest is matched from the leading term down.
std::optional<std::vector<FPoly>> exact_eth_root(std::vector<FPoly> f, int e, const ExtField* F);

// Characteristic polynomial of u acting on the motive.  The k[T] computation
// must produce coefficients with entries in F_q; a violation throws.
CharPoly char_poly(const DrinfeldModule& phi, const SkewPoly& u);

// char_poly of the Frobenius pi = tau^n; checks P(0) = unit * q-char^{n/deg}
// against the A-characteristic.
CharPoly frobenius_char_poly(const DrinfeldModule& phi);

// Minimal polynomial m_phi of pi over F_q(T): P_phi = m_phi^{r/d} with
// d = deg_x m_phi.  Returns (m_phi, d), found as the exact e-th root of
// P_phi for the largest divisor e of r.
std::pair<CharPoly, int> minimal_poly_pi(const DrinfeldModule& phi);

// Characteristic polynomial of a square matrix over a residue field.
FPoly fmat_char_poly(const FMat& M);

// F_q-dimension of ker(phi_a) on the tower level `level` (a over level 1).
int torsion_kernel_dim(const DrinfeldModule& phi, const FPoly& a, int level);
// Rows = F_q-basis of that kernel, in level-`level` coordinates.
FqMat torsion_kernel(const DrinfeldModule& phi, const FPoly& a, int level);

// phi[p] for a prime p != A-characteristic: the full r*d-dimensional kernel
// of phi_p over the splitting level N (least multiple of n containing it),
// with an F_p = A/(p)-basis of r generators closed under the T-action.
struct TorsionSpace {
    DrinfeldModule phi;
    FPoly prime;                       // monic irreducible, level 1
    const ExtField* residue = nullptr; // A/(prime)
    int level = 0;                     // splitting level N, multiple of n
    const ExtField* E = nullptr;       // tower level N

    std::vector<ExtField::Vec> generators;  // r elements of E
    std::vector<ExtField::Vec> fq_basis;    // r*d elements: T^j . generators[i]
    FqMat coords;                           // N x (r*d), columns = fq_basis

    int r() const { return phi.rank(); }
    int d() const { return prime.degree(); }
};

TorsionSpace torsion_space(const DrinfeldModule& phi, const FPoly& prime);

// Matrix of u on phi[p] in the generator basis: an r x r matrix over A/(p).
// u must be an endomorphism (checked); its char poly equals the reduction of
// char_poly(phi, u) mod p.
FMat iota_p(const TorsionSpace& ts, const SkewPoly& u);

enum class InvertMode { Fast, Slow, Both };

// Whether u acts invertibly on phi[p].  Fast: p does not divide the constant
// term of char_poly(phi, u).  Slow: rank of iota_p(u) is r.  Both runs the
// two and insists they agree.  `ts` is reused for the slow path if given.
bool acts_invertibly(const DrinfeldModule& phi, const FPoly& prime, const SkewPoly& u,
                     InvertMode mode = InvertMode::Both, const TorsionSpace* ts = nullptr);

} // namespace dmcode

#endif
