#ifndef DMCODE_CENTRAL_HPP
#define DMCODE_CENTRAL_HPP

#include <string>

#include "dmcode/fpoly.hpp"
#include "dmcode/skew.hpp"

namespace dmcode {

// Element of the center F_q[pi] of F_{q^n}{tau}, pi = tau^n.  The coefficient
// polynomial lives over the degree-1 tower level with the variable read as pi.
struct CentralPoly {
    FPoly c;

    int degree() const { return c.degree(); }
    bool is_zero() const { return c.is_zero(); }
    bool operator==(const CentralPoly& o) const { return c == o.c; }
    bool operator!=(const CentralPoly& o) const { return !(*this == o); }

    SkewPoly to_skew(const FieldTower* T, int n) const;
    std::string show() const { return c.show("pi"); }
};

// Minimal central left multiple of u != 0: the monic c in F_q[pi] of least
// degree with c(pi) in R u.  Nonzero constants give 1.
//
// mclm_linear reduces pi^i mod u and finds the first F_q-linear dependence.
// mclm_charpoly starts from the minimal polynomial of the Frobenius for the
// module psi_T = u reduced mod T, a central multiple of u, and returns its
// least-degree monic divisor verified by right division.  The two routes
// agree; verification keeps repeated factors honest (the mclm need not be
// squarefree, nor the quotient a perfect power).
CentralPoly mclm_linear(const SkewPoly& u, int n);
CentralPoly mclm_charpoly(const SkewPoly& u, int n);

// Degree of the minimal polynomial of the Frobenius over F_q(u) for the
// module psi_T = u; constants give 1.  When the motive route fails the
// mclm_linear degree is used instead and *used_fallback is set.
int d_u(const SkewPoly& u, int n, bool* used_fallback = nullptr);

} // namespace dmcode

#endif
