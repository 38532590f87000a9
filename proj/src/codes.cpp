#include "dmcode/codes.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "dmcode/linalg.hpp"

namespace dmcode {

RankMetricCode::RankMetricCode(const ExtField* fp, int r_, std::vector<FMat> basis_)
    : Fp(fp), r(r_), basis(std::move(basis_)) {
    if (Fp == nullptr || r <= 0) throw std::invalid_argument("RankMetricCode: bad ambient");
    RowReducer span(Fp->base_ptr(), r * r * Fp->degree());
    for (const FMat& B : basis) {
        if (B.F != Fp || B.rows != r || B.cols != r)
            throw std::invalid_argument("RankMetricCode: basis matrix has wrong ambient");
        if (!span.add(code_encode(Fp, r, B)))
            throw std::invalid_argument("RankMetricCode: basis is F_q-linearly dependent");
    }
}

std::vector<uint8_t> code_encode(const ExtField* Fp, int r, const FMat& A) {
    const int d = Fp->degree();
    std::vector<uint8_t> v((size_t)r * r * d, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const ExtField::Vec& e = A.at(i, j);
            for (int t = 0; t < d; ++t) v[(size_t)((i * r + j) * d + t)] = e[(size_t)t];
        }
    return v;
}

FMat code_decode(const ExtField* Fp, int r, const std::vector<uint8_t>& v) {
    const int d = Fp->degree();
    if ((int)v.size() != r * r * d) throw std::invalid_argument("code_decode: length mismatch");
    FMat A(Fp, r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < d; ++t)
                A.at(i, j)[(size_t)t] = v[(size_t)((i * r + j) * d + t)];
    return A;
}

RankMetricCode code_from_message(const TorsionSpace& ts,
                                 const std::vector<SkewPoly>& message_basis,
                                 std::string family) {
    std::vector<FMat> mats;
    mats.reserve(message_basis.size());
    for (const SkewPoly& u : message_basis) mats.push_back(iota_p(ts, u));
    RankMetricCode C(ts.residue, ts.r(), std::move(mats));
    C.prov = CodeProvenance{ts.phi, ts.prime, message_basis, std::move(family)};
    return C;
}

int rank_distance(const FMat& X, const FMat& Y) {
    if (X.F != Y.F || X.rows != Y.rows || X.cols != Y.cols)
        throw std::invalid_argument("rank_distance: shape mismatch");
    return fmat_rank(fmat_sub(X, Y));
}

uint64_t enum_budget() {
    if (const char* s = std::getenv("DMCODE_ENUM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return (uint64_t)v;
    }
    return 1ull << 24;
}

namespace {

// q^e, saturating: anything above cap comes back as cap + 1.
uint64_t pow_capped(uint64_t q, int e, uint64_t cap) {
    uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

// Visits every nonzero F_q-combination of the basis exactly once, stepping a
// radix-q Gray counter so each visit changes the running matrix by one
// precomputed delta.  fn returning false aborts and makes the sweep false.
bool sweep_nonzero(const ExtField* Fp, int r, const std::vector<FMat>& basis,
                   const char* who, const std::function<bool(const FMat&)>& fn) {
    const int D = (int)basis.size();
    const uint64_t q = (uint64_t)Fp->base().q();
    const uint64_t budget = enum_budget();
    const uint64_t total = pow_capped(q, D, budget);
    if (total > budget)
        throw std::runtime_error(std::string(who) + ": enumeration budget exceeded: q^" +
                                 std::to_string(D) + " > " + std::to_string(budget));

    // delta[i][v] is the change when Gray digit i steps from v to v+1 mod q
    std::vector<std::vector<FMat>> delta((size_t)D);
    for (int i = 0; i < D; ++i) {
        delta[(size_t)i].reserve((size_t)q);
        for (uint64_t v = 0; v < q; ++v) {
            uint8_t step = Fp->base().sub((uint8_t)((v + 1) % q), (uint8_t)v);
            delta[(size_t)i].push_back(
                fmat_smul(FFElem{Fp, Fp->from_base(step)}, basis[(size_t)i]));
        }
    }

    std::vector<int> g((size_t)D, 0);
    FMat W(Fp, r, r);
    for (uint64_t step = 1; step < total; ++step) {
        uint64_t s = step;
        int t = 0;
        while (s % q == 0) {
            s /= q;
            ++t;
        }
        const FMat& dm = delta[(size_t)t][(size_t)g[(size_t)t]];
        for (size_t k = 0; k < W.a.size(); ++k) W.a[k] = Fp->add(W.a[k], dm.a[k]);
        g[(size_t)t] = (g[(size_t)t] + 1) % (int)q;
        if (!fn(W)) return false;
    }
    return true;
}

} // namespace

int min_distance(const RankMetricCode& C) {
    if (C.dim() < 1) throw std::invalid_argument("min_distance: empty code");
    int best = C.r + 1;
    sweep_nonzero(C.Fp, C.r, C.basis, "min_distance", [&](const FMat& W) {
        int rk = fmat_rank(W);
        if (rk < best) best = rk;
        return best > 1;
    });
    return best;
}

bool is_fp_linear(const RankMetricCode& C) {
    if (C.d() == 1) return true;
    RowReducer span(C.Fp->base_ptr(), C.r * C.r * C.d());
    for (const FMat& B : C.basis) span.add(code_encode(C.Fp, C.r, B));
    FFElem z{C.Fp, C.Fp->gen()};
    for (const FMat& B : C.basis)
        if (!span.contains(code_encode(C.Fp, C.r, fmat_smul(z, B)))) return false;
    return true;
}

bool is_mrd(const RankMetricCode& C) {
    const int dmin = min_distance(C);
    const int D = C.dim(), r = C.r, d = C.d();
    if (is_fp_linear(C)) return D == d * r * (r - dmin + 1);
    return D == r * d * (r * d - d * dmin + 1);
}

bool is_semifield_code(const RankMetricCode& C) {
    if (C.dim() != C.r * C.d()) return false;
    return sweep_nonzero(C.Fp, C.r, C.basis, "is_semifield_code",
                         [&](const FMat& W) { return fmat_rank(W) == C.r; });
}

namespace {

enum class System { Left, Right, Cent, Center };

std::vector<FMat> solve_nuclear(const RankMetricCode& C, System which) {
    const ExtField* Fp = C.Fp;
    const int r = C.r;
    const int m = r * r * Fp->degree();
    const Fq* F = Fp->base_ptr();
    const int nb = C.dim();

    RowReducer span(F, m);
    for (const FMat& B : C.basis) span.add(code_encode(Fp, r, B));

    const bool left = which == System::Left || which == System::Center;
    const bool cent = which == System::Cent || which == System::Center;
    const bool right = which == System::Right;
    const int block = (left ? m : 0) + (right ? m : 0) + (cent ? m : 0);

    FqMat A(F, nb * block, m);
    for (int k = 0; k < m; ++k) {
        std::vector<uint8_t> unit((size_t)m, 0);
        unit[(size_t)k] = 1;
        FMat Ek = code_decode(Fp, r, unit);
        for (int i = 0; i < nb; ++i) {
            int row = i * block;
            FMat EB = fmat_mul(Ek, C.basis[(size_t)i]);
            FMat BE = fmat_mul(C.basis[(size_t)i], Ek);
            if (left) {
                auto res = span.reduce(code_encode(Fp, r, EB));
                for (int c = 0; c < m; ++c) A.at(row + c, k) = res[(size_t)c];
                row += m;
            }
            if (right) {
                auto res = span.reduce(code_encode(Fp, r, BE));
                for (int c = 0; c < m; ++c) A.at(row + c, k) = res[(size_t)c];
                row += m;
            }
            if (cent) {
                auto res = code_encode(Fp, r, fmat_sub(EB, BE));
                for (int c = 0; c < m; ++c) A.at(row + c, k) = res[(size_t)c];
            }
        }
    }

    FqMat ker = kernel_basis(A);
    std::vector<FMat> out;
    out.reserve((size_t)ker.rows);
    for (int i = 0; i < ker.rows; ++i) {
        std::vector<uint8_t> x(ker.row(i), ker.row(i) + m);
        out.push_back(code_decode(Fp, r, x));
    }
    return out;
}

SubAlgebra verify_field(const RankMetricCode& C, std::vector<FMat> basis) {
    SubAlgebra S;
    S.basis = std::move(basis);
    const ExtField* Fp = C.Fp;
    const int r = C.r;
    const int m = r * r * Fp->degree();
    if (S.basis.empty()) {
        S.degenerate = true;
        S.note = "zero-dimensional";
        return S;
    }
    RowReducer span(Fp->base_ptr(), m);
    for (const FMat& f : S.basis) span.add(code_encode(Fp, r, f));
    if (!span.contains(code_encode(Fp, r, FMat::identity(Fp, r)))) {
        S.degenerate = true;
        S.note = "does not contain the identity";
        return S;
    }
    for (size_t i = 0; i < S.basis.size(); ++i)
        for (size_t j = i; j < S.basis.size(); ++j) {
            FMat P = fmat_mul(S.basis[i], S.basis[j]);
            if (P != fmat_mul(S.basis[j], S.basis[i])) {
                S.degenerate = true;
                S.note = "not commutative";
                return S;
            }
            if (!span.contains(code_encode(Fp, r, P))) {
                S.degenerate = true;
                S.note = "not multiplicatively closed";
                return S;
            }
        }
    const uint64_t budget = enum_budget();
    if (pow_capped((uint64_t)Fp->base().q(), S.dim(), budget) > budget) {
        S.degenerate = true;
        S.note = "invertibility sweep over budget";
        return S;
    }
    bool units = sweep_nonzero(Fp, r, S.basis, "nuclear field check",
                               [&](const FMat& W) { return fmat_rank(W) == r; });
    if (!units) {
        S.degenerate = true;
        S.note = "contains a singular nonzero element";
        return S;
    }
    S.is_field = true;
    return S;
}

} // namespace

SubAlgebra left_idealizer(const RankMetricCode& C) {
    return verify_field(C, solve_nuclear(C, System::Left));
}

SubAlgebra right_idealizer(const RankMetricCode& C) {
    return verify_field(C, solve_nuclear(C, System::Right));
}

SubAlgebra centralizer(const RankMetricCode& C) {
    return verify_field(C, solve_nuclear(C, System::Cent));
}

SubAlgebra center(const RankMetricCode& C) {
    return verify_field(C, solve_nuclear(C, System::Center));
}

std::string NuclearParams::show() const {
    return "(" + std::to_string(dim_code) + ", " + std::to_string(dim_left) + ", " +
           std::to_string(dim_right) + ", " + std::to_string(dim_cent) + ", " +
           std::to_string(dim_center) + ")";
}

NuclearParams nuclear_parameters(const RankMetricCode& C) {
    SubAlgebra il = left_idealizer(C);
    SubAlgebra ir = right_idealizer(C);
    SubAlgebra ce = centralizer(C);
    SubAlgebra z = center(C);

    NuclearParams P;
    P.dim_code = C.dim();
    P.dim_left = il.dim();
    P.dim_right = ir.dim();
    P.dim_cent = ce.dim();
    P.dim_center = z.dim();
    try {
        P.invariant = is_semifield_code(C);
    } catch (const std::runtime_error&) {
        P.invariant = false;
    }
    P.degenerate = il.degenerate || ir.degenerate || ce.degenerate || z.degenerate;
    if (P.invariant && !P.degenerate) {
        if (P.dim_center <= 0 || P.dim_left % P.dim_center != 0 ||
            P.dim_right % P.dim_center != 0 || P.dim_cent % P.dim_center != 0)
            throw std::logic_error(
                "nuclear_parameters: center dimension fails to divide the nuclei");
    }
    return P;
}

} // namespace dmcode
