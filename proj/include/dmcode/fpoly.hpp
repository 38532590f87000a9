#ifndef DMCODE_FPOLY_HPP
#define DMCODE_FPOLY_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dmcode/field.hpp"

namespace dmcode {

// Dense univariate polynomial over an ExtField, little-endian coefficients,
// always normalized (no trailing zero coefficients).  The zero polynomial has
// degree -1.  One type serves every coefficient field in the library:
// A = F_q[T] (over the degree-1 level), k[T] (over a tower level), and
// polynomials over residue fields A/p.
struct FPoly {
    const ExtField* F = nullptr;
    std::vector<ExtField::Vec> c;

    FPoly() = default;
    explicit FPoly(const ExtField* f) : F(f) {}
    FPoly(const ExtField* f, std::vector<ExtField::Vec> coeffs);

    static FPoly zero(const ExtField* f) { return FPoly(f); }
    static FPoly one(const ExtField* f);
    static FPoly x(const ExtField* f);
    static FPoly constant(const FFElem& a);
    // Coefficients given as base-field integers (for A = F_q[T] convenience).
    static FPoly from_base_ints(const ExtField* f, const std::vector<long>& coeffs);

    void normalize();
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const;
    FFElem coeff(int i) const;             // safe out-of-range access (zero)
    FFElem lead() const;
    FFElem constant_term() const { return coeff(0); }
    void set_coeff(int i, const FFElem& a);

    FPoly monic() const;
    FPoly shifted(int k) const;            // * x^k
    FPoly derivative() const;
    FFElem eval(const FFElem& at) const;
    FPoly map_coeffs_frobenius(long i) const;   // coefficient-wise x -> x^{q^i}

    friend FPoly operator+(const FPoly& a, const FPoly& b);
    friend FPoly operator-(const FPoly& a, const FPoly& b);
    friend FPoly operator*(const FPoly& a, const FPoly& b);
    FPoly operator-() const;
    friend FPoly operator*(const FFElem& s, const FPoly& a);
    friend bool operator==(const FPoly& a, const FPoly& b);
    friend bool operator!=(const FPoly& a, const FPoly& b) { return !(a == b); }

    std::string show(const std::string& var, const std::string& csym = "a") const;
};

// Quotient and remainder with deg(r) < deg(g); g must be nonzero.
std::pair<FPoly, FPoly> fpoly_divmod(const FPoly& f, const FPoly& g);
FPoly fpoly_mod(const FPoly& f, const FPoly& g);
FPoly fpoly_div_exact(const FPoly& f, const FPoly& g);   // throws if remainder nonzero
FPoly fpoly_gcd(FPoly a, FPoly b);                       // monic (or zero)
FPoly fpoly_pow_mod(const FPoly& base, uint64_t e, const FPoly& mod);
// base^{|F|^t} mod m, computed without forming |F|^t.
FPoly fpoly_field_power_mod(const FPoly& base, int t, const FPoly& mod);

bool fpoly_is_irreducible(const FPoly& f);

// All roots of f in its coefficient field (distinct; multiplicity ignored).
// Deterministic for a fixed seed.
std::vector<FFElem> fpoly_roots(const FPoly& f, uint64_t seed = 0x5eedULL);

// Lexicographically first monic irreducible of the given degree, scanning
// coefficient indices cyclically from `offset` (offset 0 = plain lex order).
FPoly lex_first_irreducible(const ExtField* F, int degree, uint64_t offset = 0);

// Seeded random search, for degrees where the lex scan is impractical.
FPoly random_irreducible(const ExtField* F, int degree, uint64_t seed);

// All monic irreducibles of degree d in ascending index order.  Guarded by
// the enumeration budget |F|^d <= 2^24.
std::vector<FPoly> monic_irreducibles(const ExtField* F, int degree);

// Minimal polynomial of `a` over the base field F_q (monic, in the ambient
// field's polynomial ring read over F_q coefficients).
FPoly min_poly_over_base(const FFElem& a, const ExtField* coeff_field);

// f(M) for a square matrix over f's coefficient field.
FMat fpoly_eval_fmat(const FPoly& f, const FMat& M);

} // namespace dmcode

#endif
