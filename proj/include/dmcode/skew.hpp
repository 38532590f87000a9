#ifndef DMCODE_SKEW_HPP
#define DMCODE_SKEW_HPP

#include <string>
#include <utility>
#include <vector>

#include "dmcode/tower.hpp"

namespace dmcode {

// Twisted polynomial in tau over a tower level k = F_{q^j}, commutation rule
// tau a = a^q tau.  Little-endian coefficients, no trailing zeros; the zero
// polynomial has deg -1 and height -1.
//
// Binary operations accept operands at different levels of the same tower and
// lift both to the lcm level first.
struct SkewPoly {
    const FieldTower* T = nullptr;
    int level = 1;
    std::vector<ExtField::Vec> c;

    SkewPoly() = default;
    SkewPoly(const FieldTower* t, int lvl) : T(t), level(lvl) {}
    SkewPoly(const FieldTower* t, int lvl, std::vector<ExtField::Vec> coeffs);

    static SkewPoly zero(const FieldTower* t, int lvl) { return SkewPoly(t, lvl); }
    static SkewPoly one(const FieldTower* t, int lvl);
    static SkewPoly tau(const FieldTower* t, int lvl, int exp = 1);
    static SkewPoly constant(const FieldTower* t, const FFElem& a);

    const ExtField& field() const { return T->level(level); }
    void normalize();
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    int height() const;                    // least index with nonzero coefficient
    FFElem coeff(int i) const;             // safe out-of-range access
    FFElem lead() const;
    void set_coeff(int i, const FFElem& a);
    bool is_monic() const;
    SkewPoly monic() const;                // left-multiply by lead^{-1}

    std::string show(const std::string& tau_sym = "τ", const std::string& gen_sym = "a") const;

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    SkewPoly operator-() const;
    friend bool operator==(const SkewPoly& a, const SkewPoly& b);
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }
};

// Coefficient embedding into a higher level; values are unchanged.
SkewPoly lift(const SkewPoly& f, int to_level);

// Product under tau a = a^q tau.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_smul(const FFElem& s, const SkewPoly& f);

// f = g*P + e with deg e < deg P (right division).
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& P);
// f = P*g + e with deg e < deg P (left division; uses inverse Frobenius).
std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f, const SkewPoly& P);
SkewPoly right_mod(const SkewPoly& f, const SkewPoly& P);

// Monic generator of the left ideal Rf + Rg.
SkewPoly right_gcd(const SkewPoly& f, const SkewPoly& g);

// f(beta) = sum a_i beta^{q^i}; beta's level must be a multiple of f's.
FFElem evaluate(const SkewPoly& f, const FFElem& beta);

// The constant coefficient a_0 (a ring homomorphism k{tau} -> k).
FFElem derivative(const SkewPoly& f);

// Membership in the center F_q[tau^n] of F_{q^n}{tau}.
bool is_central(const SkewPoly& f, int n);

} // namespace dmcode

#endif
