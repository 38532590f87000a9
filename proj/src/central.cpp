#include "dmcode/central.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmcode/drinfeld.hpp"
#include "dmcode/linalg.hpp"

namespace dmcode {

SkewPoly CentralPoly::to_skew(const FieldTower* T, int n) const {
    const ExtField& E = T->level(n);
    SkewPoly f(T, n);
    for (int i = 0; i <= c.degree(); ++i) {
        uint8_t s = c.F->to_base(c.c[(size_t)i]);
        if (s != 0) f.set_coeff(n * i, FFElem{&E, E.from_base(s)});
    }
    return f;
}

namespace {

SkewPoly lifted_nonzero(const SkewPoly& u, int n, const char* who) {
    if (u.is_zero()) throw std::invalid_argument(std::string(who) + ": u = 0");
    return lift(u, n);
}

} // namespace

CentralPoly mclm_linear(const SkewPoly& u, int n) {
    SkewPoly uu = lifted_nonzero(u, n, "mclm_linear");
    const ExtField* A1 = u.T->level_ptr(1);
    if (uu.deg() == 0) return {FPoly::one(A1)};

    const ExtField& E = u.T->level(n);
    const Fq& F = u.T->base();
    const int s = uu.deg();
    const int dim = s * E.degree();
    auto encode = [&](const SkewPoly& f) {
        std::vector<uint8_t> v((size_t)dim, 0);
        for (int i = 0; i <= f.deg(); ++i)
            for (int j = 0; j < E.degree(); ++j)
                v[(size_t)(i * E.degree() + j)] = f.c[(size_t)i][(size_t)j];
        return v;
    };

    RowReducer span(&F, dim);
    SkewPoly pi = SkewPoly::tau(u.T, n, n);
    SkewPoly cur = right_mod(SkewPoly::one(u.T, n), uu);
    const int bound = n * s;
    for (int i = 0; i <= bound; ++i) {
        auto v = encode(cur);
        if (span.contains(v)) {
            auto lam = span.express(v);
            if (!lam) throw std::logic_error("mclm_linear: span bookkeeping failed");
            FPoly cp(A1);
            cp.set_coeff(i, FFElem{A1, A1->one()});
            for (int j = 0; j < (int)lam->size(); ++j)
                if ((*lam)[(size_t)j] != 0)
                    cp.set_coeff(j, FFElem{A1, A1->from_base(F.neg((*lam)[(size_t)j]))});
            CentralPoly out{cp};
            if (!right_mod(out.to_skew(u.T, n), uu).is_zero())
                throw std::logic_error("mclm_linear: candidate fails right division");
            return out;
        }
        span.add(v);
        cur = right_mod(skew_mul(pi, cur), uu);
    }
    throw std::logic_error("mclm_linear: no dependence within the degree bound");
}

CentralPoly mclm_charpoly(const SkewPoly& u, int n) {
    SkewPoly uu = lifted_nonzero(u, n, "mclm_charpoly");
    const ExtField* A1 = u.T->level_ptr(1);
    if (uu.deg() == 0) return {FPoly::one(A1)};

    DrinfeldModule psi(uu, n);
    CharPoly m = minimal_poly_pi(psi).first;
    FPoly mbar(A1);
    for (int i = 0; i <= m.degree(); ++i) mbar.set_coeff(i, m.coeff(i).coeff(0));
    mbar.normalize();

    // mbar is a central multiple of u, so the mclm is among its monic divisors.
    // Degrees here are tiny (deg mbar <= deg_tau u), so factor by trial division.
    std::vector<std::pair<FPoly, int>> factors;
    FPoly rem = mbar;
    for (int k = 1; 2 * k <= rem.degree(); ++k) {
        uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= A1->card();
        for (uint64_t idx = 0; idx < count && 2 * k <= rem.degree(); ++idx) {
            FPoly g(A1);
            g.set_coeff(k, FFElem{A1, A1->one()});
            uint64_t t = idx;
            for (int i = 0; i < k; ++i) {
                g.set_coeff(i, FFElem{A1, A1->from_index(t % A1->card())});
                t /= A1->card();
            }
            int mult = 0;
            for (;;) {
                auto [q2, r2] = fpoly_divmod(rem, g);
                if (!r2.is_zero()) break;
                rem = q2;
                ++mult;
            }
            if (mult > 0) factors.emplace_back(g, mult);
        }
    }
    if (rem.degree() >= 1) factors.emplace_back(rem, 1);

    std::vector<FPoly> divisors = {FPoly::one(A1)};
    for (const auto& [f, e] : factors) {
        std::vector<FPoly> next;
        for (const FPoly& d : divisors) {
            FPoly cur = d;
            next.push_back(cur);
            for (int i = 1; i <= e; ++i) {
                cur = cur * f;
                next.push_back(cur);
            }
        }
        divisors = std::move(next);
    }
    std::stable_sort(divisors.begin(), divisors.end(),
                     [](const FPoly& x, const FPoly& y) { return x.degree() < y.degree(); });

    // the least-degree verified divisor is the mclm: every verified divisor is a
    // central multiple, and the mclm itself divides mbar
    for (const FPoly& v : divisors) {
        CentralPoly cand{v};
        if (right_mod(cand.to_skew(u.T, n), uu).is_zero()) return cand;
    }
    throw std::logic_error("mclm_charpoly: reduction of m_u is not a central multiple");
}

int d_u(const SkewPoly& u, int n, bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    SkewPoly uu = lifted_nonzero(u, n, "d_u");
    if (uu.deg() == 0) return 1;
    try {
        return minimal_poly_pi(DrinfeldModule(uu, n)).second;
    } catch (const std::exception&) {
        if (used_fallback) *used_fallback = true;
        return mclm_linear(u, n).degree();
    }
}

} // namespace dmcode
